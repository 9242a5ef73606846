//! The fusion-system invariant suite over one supplied group: dual-route
//! hom-set equality, saturation witnesses, local-subsystem identities,
//! fully-normalized representatives, the extension axiom, generation,
//! center control, and the core subgroups.

use crate::fusion::{
    alternating6, dihedral8, extension_axiom_sweep, fully_normalized_witness_sweep,
    group_from_json, l32, local_identity_sweep, o2_of_set, oracle_equivalence_sweep,
    saturation_witness_sweep, symmetric4, FusionSystem, PermGroup,
};
use crate::Result;

use super::report::{CheckReport, ReportBuilder};

pub fn builtin_group(name: &str) -> Result<PermGroup> {
    match name.to_ascii_lowercase().as_str() {
        "s4" => Ok(symmetric4()),
        "d8" => Ok(dihedral8()),
        "a6" => Ok(alternating6()),
        "l32" | "l3(2)" => Ok(l32()),
        other => Err(crate::Error::Parse(format!(
            "unknown builtin group {other:?}; use a group file instead"
        ))),
    }
}

fn fusion_body(b: &mut ReportBuilder, group: PermGroup) -> Result<()> {
    b.detail("group_order", group.order() as u64);
    let f = FusionSystem::of_group(group)?;
    b.detail("sylow_order", f.sylow().order() as u64);
    b.detail("subgroup_count", f.all_sylow_subgroups()?.len() as u64);

    let oracle = oracle_equivalence_sweep(&f)?;
    b.detail("oracle_equivalence_cases", oracle.cases as u64);
    b.assert_true("oracle_equivalence", oracle.ok());

    let saturation = saturation_witness_sweep(&f)?;
    b.detail("saturation_witness_cases", saturation.cases as u64);
    b.assert_true("saturation_witnesses", saturation.ok());

    let local = local_identity_sweep(&f)?;
    b.detail("local_identity_cases", local.cases as u64);
    b.assert_true("local_subsystem_identities", local.ok());

    let reps = fully_normalized_witness_sweep(&f)?;
    b.detail("fully_normalized_witness_cases", reps.cases as u64);
    b.assert_true("fully_normalized_witnesses", reps.ok());

    let ext = extension_axiom_sweep(&f)?;
    b.detail("extension_axiom_cases", ext.cases as u64);
    b.assert_true("extension_axiom_witnesses", ext.ok());

    b.assert_true("generation_by_automizers", f.alperin_generation_check()?);

    // center control at every weakly closed subgroup
    let mut burnside_cases = 0u64;
    let mut burnside_ok = true;
    for w in f.all_sylow_subgroups()? {
        if f.classify_subgroup(&w)?.weakly_closed {
            burnside_cases += 1;
            burnside_ok &= f.burnside_control_check(&w)?;
        }
    }
    b.detail("center_control_cases", burnside_cases);
    b.assert_true("center_control_at_weakly_closed", burnside_ok);

    let (o2, z) = f.core_subgroups()?;
    b.detail("o2_of_fusion_system_order", o2.order() as u64);
    b.detail("center_of_fusion_system_order", z.order() as u64);
    b.detail("constrained", f.constrained_check()?);
    let o2_group = o2_of_set(&f.group().as_set()?);
    b.assert_true("group_core_inside_fusion_core", o2_group.is_subset_of(&o2));
    Ok(())
}

pub fn check_fusion_axioms(group: PermGroup) -> CheckReport {
    let mut b = ReportBuilder::new(&format!("check_fusion_axioms:{}", group.name()), None);
    match fusion_body(&mut b, group) {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}

pub fn check_fusion_axioms_from_file(path: &std::path::Path) -> CheckReport {
    let mut b = ReportBuilder::new(&format!("check_fusion_axioms:{}", path.display()), None);
    let run = (|| -> Result<PermGroup> {
        let text = std::fs::read_to_string(path)?;
        Ok(group_from_json(&text)?.group)
    })();
    match run {
        Ok(group) => match fusion_body(&mut b, group) {
            Ok(()) => b.finish(),
            Err(e) => b.finish_error(&e),
        },
        Err(e) => b.finish_error(&e),
    }
}

/// Corrupted variant: hom sets of `F_S(S4)` are compared against those of
/// the fusion system of the Sylow subgroup alone. `S4` fuses the involutions
/// of its normal four-group, `D8` does not, so the comparison must fail.
pub fn check_fusion_corrupted() -> CheckReport {
    let mut b = ReportBuilder::new("check_fusion_axioms#corrupted", None);
    let run = (|| -> Result<()> {
        let ambient = FusionSystem::of_group(symmetric4())?;
        let sylow_group = PermGroup::new(
            "S",
            ambient.group().degree(),
            ambient.sylow().generators().to_vec(),
        )?;
        let inner = FusionSystem::of_group(sylow_group)?;
        let mut cases = 0u64;
        let mut all_equal = true;
        for p in inner.all_sylow_subgroups()? {
            for q in inner.all_sylow_subgroups()? {
                cases += 1;
                all_equal &= ambient.hom_sets(&p, &q)? == inner.hom_sets(&p, &q)?;
            }
        }
        b.detail("compared_pairs", cases);
        b.assert_true("hom_sets_agree_across_ambient_groups", all_equal);
        Ok(())
    })();
    match run {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}
