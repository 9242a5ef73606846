//! Permutation groups and their 2-fusion systems at desk scale.
//!
//! [`PermGroup`] carries a deterministic stabilizer chain (fixed ascending
//! base) plus a full element list when the order is within the enumeration
//! cap; the two order computations check each other. Sylow 2-subgroups come
//! from normalizer climbing with a deterministic extension rule, certified by
//! the odd-index postcondition. [`FusionSystem`] computes hom sets two ways
//! (exhaustive conjugation, and the orbit of the inclusion graph under
//! generator conjugations), classifies subgroups by the literal definitions,
//! and carries local centralizer/normalizer subsystems with both the
//! categorical and the group-theoretic descriptions.

mod group;
mod io;
mod perm;
mod props;
mod system;

pub use group::{
    alternating6, dihedral8, l32, o2_of_set, sylow2_of_set, symmetric4, wreath_double, PermGroup,
    PermSet, StabChain, WreathDouble, MAX_ENUMERATION,
};
pub use io::{group_from_json, group_to_json, GroupFile};
pub use perm::Perm;
pub use props::{
    extension_axiom_sweep, fully_normalized_witness_sweep, local_identity_sweep,
    oracle_equivalence_sweep, saturation_witness_sweep, SweepOutcome,
};
pub use system::{ConjMap, FusionSystem, LocalSubsystemKind, SubgroupFlags, SubsystemView};


#[cfg(test)]
mod concurrency_tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn concurrent_hom_set_queries_agree() {
        let f = Arc::new(FusionSystem::of_group(symmetric4()).unwrap());
        let subs = f.all_sylow_subgroups().unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let f = Arc::clone(&f);
                let subs = subs.clone();
                std::thread::spawn(move || {
                    let mut sizes = Vec::new();
                    for p in &subs {
                        for q in &subs {
                            sizes.push(f.hom_sets(p, q).unwrap().len());
                        }
                    }
                    sizes
                })
            })
            .collect();
        let results: Vec<Vec<usize>> =
            handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
