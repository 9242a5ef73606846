//! Whole-system sweeps: each runs one invariant over every subgroup (or
//! subgroup pair) of the Sylow subgroup and reports the case count plus any
//! failures. These are the checks the verification harness aggregates.

use crate::Result;

use super::group::PermSet;
use super::system::{ConjMap, FusionSystem, LocalSubsystemKind};

#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

fn describe(p: &PermSet) -> String {
    format!("subgroup of order {}", p.order())
}

/// Every hom set computed by the transversal (orbit-of-graphs) route equals
/// the exhaustive-conjugation hom set, as sets of maps.
pub fn oracle_equivalence_sweep(f: &FusionSystem) -> Result<SweepOutcome> {
    let subs = f.all_sylow_subgroups()?;
    let mut out = SweepOutcome::default();
    for p in &subs {
        for q in &subs {
            let a = f.hom_sets(p, q)?;
            let b = f.hom_sets_transversal(p, q)?;
            out.case(a == b, || {
                format!("hom sets differ: {} -> {}", describe(p), describe(q))
            });
        }
    }
    Ok(out)
}

/// For every fully normalized subgroup, `N_S(P)` is a Sylow 2-subgroup of
/// `N_G(P)` (odd index).
pub fn saturation_witness_sweep(f: &FusionSystem) -> Result<SweepOutcome> {
    let subs = f.all_sylow_subgroups()?;
    let whole = f.group().as_set()?;
    let mut out = SweepOutcome::default();
    for p in &subs {
        if !f.classify_subgroup(p)?.fully_normalized {
            continue;
        }
        let ngp = whole.normalizer_of(p);
        let nsp = f.sylow().normalizer_of(p);
        out.case(
            nsp.is_2_group() && (ngp.order() / nsp.order()) % 2 == 1,
            || format!("{}: N_S(P) is not Sylow in N_G(P)", describe(p)),
        );
    }
    Ok(out)
}

/// Local-subsystem identities for group systems: on every subgroup pair of
/// the carrier, the definition-route hom set equals the hom set induced by
/// `C_G(P)` resp. `N_G(P)`.
pub fn local_identity_sweep(f: &FusionSystem) -> Result<SweepOutcome> {
    let subs = f.all_sylow_subgroups()?;
    let mut out = SweepOutcome::default();
    for p in &subs {
        for kind in [
            LocalSubsystemKind::Centralizer,
            LocalSubsystemKind::Normalizer,
        ] {
            let view = f.local_subsystem(p, kind)?;
            if !view.precondition_ok {
                continue;
            }
            let carrier_subs: Vec<&PermSet> = subs
                .iter()
                .filter(|h| h.is_subset_of(&view.carrier))
                .collect();
            for q in &carrier_subs {
                for r in &carrier_subs {
                    let by_def = view.definition_route_homset(f, q, r)?;
                    let by_group = view.group_route_homset(f, q, r)?;
                    out.case(by_def == by_group, || {
                        format!(
                            "{:?} subsystem at {} disagrees on {} -> {}",
                            kind,
                            describe(p),
                            describe(q),
                            describe(r)
                        )
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A fully-normalized representative map exists for every subgroup, with the
/// targeted variant for every fully normalized member of the class; the
/// returned target is re-checked.
pub fn fully_normalized_witness_sweep(f: &FusionSystem) -> Result<SweepOutcome> {
    let subs = f.all_sylow_subgroups()?;
    let mut out = SweepOutcome::default();
    for p in &subs {
        let (alpha, target) = f.fully_normalized_rep(p, None)?;
        let flags = f.classify_subgroup(&target)?;
        let image_in_s = alpha.domain().iter().all(|x| {
            alpha
                .apply(x)
                .map(|y| f.sylow().contains(y))
                .unwrap_or(false)
        });
        out.case(flags.fully_normalized && image_in_s, || {
            format!("{}: representative map broken", describe(p))
        });
        // the image of P under alpha is the target
        let image_of_p: Vec<_> = p
            .elements()
            .iter()
            .map(|x| alpha.apply(x).expect("P inside N_S(P)").clone())
            .collect();
        let image_of_p = PermSet::from_elements(image_of_p).expect("subgroup image");
        out.case(image_of_p == target, || {
            format!("{}: alpha does not carry P onto the target", describe(p))
        });
        for (q, _) in f.f_class(p)? {
            if !f.classify_subgroup(&q)?.fully_normalized {
                continue;
            }
            let (beta, t2) = f.fully_normalized_rep(p, Some(&q))?;
            let image_of_p: Vec<_> = p
                .elements()
                .iter()
                .map(|x| beta.apply(x).expect("P inside domain").clone())
                .collect();
            let image_of_p = PermSet::from_elements(image_of_p).expect("subgroup image");
            out.case(t2 == q && image_of_p == q, || {
                format!("{}: targeted representative map broken", describe(p))
            });
        }
    }
    Ok(out)
}

/// The extension axiom, one instance per isomorphism onto a fully
/// centralized subgroup: the map extends to its amalgamated normalizer.
pub fn extension_axiom_sweep(f: &FusionSystem) -> Result<SweepOutcome> {
    let subs = f.all_sylow_subgroups()?;
    let mut out = SweepOutcome::default();
    for p in &subs {
        if !f.classify_subgroup(p)?.fully_centralized {
            continue;
        }
        for (q, _) in f.f_class(p)? {
            for phi in f.hom_sets(&q, p)? {
                if phi.image_set() != *p {
                    continue;
                }
                // N_phi: elements s of N_S(Q) with phi^{-1} c_s phi in Aut_S(P)
                let nsq = f.sylow().normalizer_of(&q);
                let auts_s: Vec<ConjMap> = f
                    .sylow()
                    .normalizer_of(p)
                    .elements()
                    .iter()
                    .map(|t| ConjMap::from_conjugation(p, t))
                    .collect();
                let phi_inv_domain = p.clone();
                let n_phi_elems: Vec<_> = nsq
                    .elements()
                    .iter()
                    .filter(|s| {
                        // chi = phi^{-1} then c_s then phi, as a map on P
                        let chi = ConjMap::graph_of(&phi_inv_domain, |x| {
                            // x in P; pull back through phi, conjugate, push
                            let pre = phi.preimage(x).expect("phi is onto P");
                            phi.apply(&pre.conj(s)).cloned()
                        });
                        match chi {
                            Some(chi) => auts_s.contains(&chi),
                            None => false,
                        }
                    })
                    .cloned()
                    .collect();
                let n_phi = PermSet::closure(f.degree(), &n_phi_elems);
                let extended = f.hom_sets(&n_phi, f.sylow())?.iter().any(|ext| {
                    q.elements()
                        .iter()
                        .all(|x| ext.apply(x).cloned() == phi.apply(x).cloned())
                });
                out.case(extended, || {
                    format!("extension axiom fails into {}", describe(p))
                });
            }
        }
    }
    Ok(out)
}
