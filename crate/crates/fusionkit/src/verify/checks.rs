//! The structure-lemma checks: module facts for the two automizer groups,
//! Sylow structure facts for the four builtin 2-groups, and the extension
//! conclusion scenarios.

use serde_json::json;

use crate::cohomology::{
    find_fpf_a5_subgroup, first_cohomology, higman_instance_check, lemma32_conclusion_check,
    split_hyperplane_scenario, ModuleAction,
};
use crate::modrep::{
    a7_in_gl42_cached, build_gl24_in_gl42, build_sl24_in_gl42, centralizer_in_gl, enumerate_group,
    gl42, is_irreducible, omega_scalar, orbits_on_vectors, MatGroupF2,
};
use crate::pcgroup::{
    builtin_sylow, characteristic_subgroup, max_elementary_abelians, thompson_subgroup, two_rank,
    CharacteristicKind, PcGroup, PcPresentation, Subgroup, SylowKind,
};
use crate::Result;

use super::report::{CheckReport, ReportBuilder};

/// The automizer identification consumed as input data (cited, not
/// recomputed from the sporadic groups themselves).
pub const AUTOMIZER_INPUT_DATA: &str =
    "input data (cited identification, not recomputed): Aut_K(F1) is A7 for K in {M23, McL, Ly} and GL2(4) for K = J3";

fn lemma31_body(b: &mut ReportBuilder, a7: &MatGroupF2, gl24: &MatGroupF2) -> Result<()> {
    let ambient = gl42();
    b.detail("gl42_order", ambient.order() as u64);
    b.assert_eq("a7_order", a7.order() as u64, 2520);
    b.assert_eq(
        "a7_index_in_gl42",
        (ambient.order() / a7.order().max(1)) as u64,
        8,
    );
    b.assert_eq("gl24_order", gl24.order() as u64, 180);

    let orbit_sizes = |g: &MatGroupF2| -> Vec<u64> {
        orbits_on_vectors(g)
            .iter()
            .map(|o| o.len() as u64)
            .collect()
    };
    b.assert_eq(
        "a7_orbits_on_nonzero_vectors",
        json!(orbit_sizes(a7)),
        json!([15]),
    );
    b.assert_eq(
        "gl24_orbits_on_nonzero_vectors",
        json!(orbit_sizes(gl24)),
        json!([15]),
    );
    b.assert_true("a7_irreducible", is_irreducible(a7));
    b.assert_true("gl24_irreducible", is_irreducible(gl24));

    let c_a7 = centralizer_in_gl(a7);
    b.assert_eq("a7_commutant_order", c_a7.order() as u64, 1);
    b.assert_true(
        "a7_commutant_inside",
        c_a7.elements().iter().all(|m| a7.contains(m)),
    );
    let c_gl24 = centralizer_in_gl(gl24);
    b.assert_eq("gl24_commutant_order", c_gl24.order() as u64, 3);
    b.assert_true(
        "gl24_commutant_inside",
        c_gl24.elements().iter().all(|m| gl24.contains(m)),
    );

    for (tag, g) in [("a7", a7), ("gl24", gl24)] {
        let h1 = first_cohomology(g, &ModuleAction::natural(g))?;
        b.assert_eq(&format!("{tag}_h0_dim"), h1.dim_h0 as u64, 0);
        b.assert_eq(&format!("{tag}_z1_dim"), h1.dim_z1 as u64, 4);
        b.assert_eq(&format!("{tag}_b1_dim"), h1.dim_b1 as u64, 4);
        b.assert_eq(&format!("{tag}_h1_dim"), h1.dim_h1() as u64, 0);
    }

    let sl24_in_gl24 = build_sl24_in_gl42();
    b.assert_true(
        "gl24_homocyclic_excluded",
        higman_instance_check(gl24, &sl24_in_gl24, 4)?,
    );
    // the designated A5 only exists in a genuine order-2520 subgroup
    match find_fpf_a5_subgroup(a7) {
        Ok(sl24_in_a7) => {
            b.detail("a7_designated_a5_order", sl24_in_a7.order() as u64);
            b.assert_true(
                "a7_homocyclic_excluded",
                higman_instance_check(a7, &sl24_in_a7, 4)?,
            );
        }
        Err(_) => b.assert_true("a7_homocyclic_excluded", false),
    }
    Ok(())
}

pub fn check_lemma31(seed: u64) -> CheckReport {
    let mut b = ReportBuilder::new("check_lemma31", Some(seed));
    b.detail("automizer_identification", AUTOMIZER_INPUT_DATA);
    let run = (|| -> Result<()> {
        let a7 = a7_in_gl42_cached(seed)?;
        let gl24 = build_gl24_in_gl42();
        lemma31_body(&mut b, &a7, &gl24)
    })();
    match run {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}

/// Corrupted variant: one generator of the order-2520 subgroup replaced by
/// the identity. Transitivity (and more) must fail.
pub fn check_lemma31_corrupted(seed: u64) -> CheckReport {
    let mut b = ReportBuilder::new("check_lemma31#corrupted", Some(seed));
    let run = (|| -> Result<()> {
        let a7 = a7_in_gl42_cached(seed)?;
        let crippled = enumerate_group("A7-corrupted", &a7.generators()[..1])?;
        let gl24 = build_gl24_in_gl42();
        lemma31_body(&mut b, &crippled, &gl24)
    })();
    match run {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}

fn named_subgroup(g: &PcGroup, names: &[&str]) -> Subgroup {
    let gens: Vec<_> = names
        .iter()
        .map(|n| g.generator_named(n).expect("builtin generator name"))
        .collect();
    Subgroup::closure(g, &gens)
}

fn lemma33_body(b: &mut ReportBuilder, g: &PcGroup, kind: SylowKind) {
    let expected_order = match kind {
        SylowKind::L34 => 64u64,
        SylowKind::L34F | SylowKind::L34U => 128,
        SylowKind::L34FU => 256,
    };
    b.assert_eq("group_order", g.order() as u64, expected_order);

    let t0 = named_subgroup(g, &["t1", "t2", "a1", "a2", "b1", "b2"]);
    // Z(T0), computed inside the base subgroup
    let z_t0: Vec<_> = t0
        .elements()
        .filter(|&z| t0.generators().all(|s| g.mul(z, s) == g.mul(s, z)))
        .collect();
    let z_t0 = Subgroup::closure(g, &z_t0);
    b.assert_true("z_t0_is_t1_t2", z_t0 == named_subgroup(g, &["t1", "t2"]));

    let z = characteristic_subgroup(g, CharacteristicKind::Center);
    match kind {
        SylowKind::L34 => {
            b.assert_true("center_is_t1_t2", z == named_subgroup(g, &["t1", "t2"]));
            b.assert_eq("center_order", z.order() as u64, 4);
        }
        _ => {
            b.assert_true("center_is_t1", z == named_subgroup(g, &["t1"]));
            b.assert_eq("center_order", z.order() as u64, 2);
        }
    }

    let f1 = named_subgroup(g, &["t1", "t2", "a1", "a2"]);
    let f2 = named_subgroup(g, &["t1", "t2", "b1", "b2"]);
    let found = max_elementary_abelians(g);
    b.assert_eq("max_elementary_abelian_count", found.len() as u64, 2);
    b.assert_eq(
        "max_elementary_abelian_order",
        found.first().map(|s| s.order() as u64).unwrap_or(0),
        16,
    );
    b.assert_true("class_is_f1_f2", found.contains(&f1) && found.contains(&f2));
    let j = thompson_subgroup(g);
    b.assert_true("thompson_subgroup_is_t0", j == t0);
    b.assert_eq("thompson_subgroup_order", j.order() as u64, 64);
    b.assert_eq("two_rank", two_rank(g) as u64, 4);
}

pub fn check_lemma33(kind: SylowKind) -> CheckReport {
    let mut b = ReportBuilder::new(&format!("check_lemma33:{}", kind.label()), None);
    b.detail(
        "presentation_source",
        "builtin relations for the Sylow 2-subgroups of L3(4)-extensions (input data)",
    );
    b.detail("automizer_identification", AUTOMIZER_INPUT_DATA);
    let g = builtin_sylow(kind);
    lemma33_body(&mut b, &g, kind);
    b.finish()
}

/// Corrupted variant: the relation `[b1, a2] = t2` is forgotten, which
/// creates a third maximal elementary abelian subgroup.
pub fn check_lemma33_corrupted() -> CheckReport {
    let mut b = ReportBuilder::new("check_lemma33#corrupted", None);
    let run = (|| -> Result<()> {
        let pres = PcPresentation::from_relations(
            &["t1", "t2", "a1", "a2", "b1", "b2"],
            &[],
            &[
                ("b1", "a1", "t1"),
                // [b1, a2] dropped
                ("b2", "a1", "t1*t2"),
                ("b2", "a2", "t1"),
            ],
        )?;
        let g = PcGroup::from_presentation(pres)?;
        lemma33_body(&mut b, &g, SylowKind::L34);
        Ok(())
    })();
    match run {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}

fn lemma32_scenario_body(b: &mut ReportBuilder, tag: &str, g_on_v: &MatGroupF2) -> Result<()> {
    let (h, x, f_basis, g_part) = split_hyperplane_scenario(g_on_v)?;
    b.detail(&format!("{tag}_extension_order"), h.order() as u64);
    let verdict = lemma32_conclusion_check(&h, x, &f_basis, &g_part)?;
    b.assert_true(
        &format!("{tag}_assumption_transitive"),
        verdict.assumption_transitive,
    );
    b.assert_true(
        &format!("{tag}_assumption_commutant"),
        verdict.assumption_commutant_inside,
    );
    b.assert_true(
        &format!("{tag}_assumption_h1_zero"),
        verdict.assumption_h1_zero,
    );
    b.assert_eq(&format!("{tag}_x_order"), verdict.x_order as u64, 512);
    b.assert_true(
        &format!("{tag}_xbar_elementary_abelian"),
        verdict.xbar_elementary_abelian,
    );
    b.assert_true(
        &format!("{tag}_commutator_bijective"),
        verdict.commutator_bijective,
    );
    b.assert_true(
        &format!("{tag}_commutator_equivariant"),
        verdict.commutator_equivariant,
    );
    b.assert_true(&format!("{tag}_complement_found"), verdict.complement_found);
    b.assert_eq(&format!("{tag}_y_order"), verdict.y_order as u64, 256);
    b.assert_true(
        &format!("{tag}_y_elementary_abelian"),
        verdict.y_elementary_abelian,
    );
    b.assert_true(
        &format!("{tag}_homocyclic_branch_absent"),
        !verdict.y_homocyclic_exponent4_omega1_v,
    );
    Ok(())
}

pub fn check_lemma32_scenarios(seed: u64) -> CheckReport {
    let mut b = ReportBuilder::new("check_lemma32_scenarios", Some(seed));
    let run = (|| -> Result<()> {
        let gl24 = build_gl24_in_gl42();
        lemma32_scenario_body(&mut b, "gl24", &gl24)?;
        b.assert_true(
            "gl24_higman_excludes_homocyclic",
            higman_instance_check(&gl24, &build_sl24_in_gl42(), 4)?,
        );
        let a7 = a7_in_gl42_cached(seed)?;
        lemma32_scenario_body(&mut b, "a7", &a7)?;
        let a5 = find_fpf_a5_subgroup(&a7)?;
        b.assert_true(
            "a7_higman_excludes_homocyclic",
            higman_instance_check(&a7, &a5, 4)?,
        );
        Ok(())
    })();
    match run {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}

/// Corrupted variant: the acting part is the order-3 scalar group, which is
/// not transitive on the nonzero vectors, so the assumption assertions fail.
pub fn check_lemma32_corrupted() -> CheckReport {
    let mut b = ReportBuilder::new("check_lemma32_scenarios#corrupted", None);
    let run = (|| -> Result<()> {
        let c3 = enumerate_group("C3-scalar", &[omega_scalar()])?;
        lemma32_scenario_body(&mut b, "c3", &c3)
    })();
    match run {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}
