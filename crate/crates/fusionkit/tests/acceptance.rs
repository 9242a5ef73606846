//! Acceptance suite: one test per criterion, each printing a pass line and
//! holding its runtime budget. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the per-criterion lines).

use std::time::{Duration, Instant};

use fusionkit::cohomology::{
    find_fpf_a5_subgroup, first_cohomology, higman_instance_check, lemma32_conclusion_check,
    split_hyperplane_scenario, ModuleAction,
};
use fusionkit::fusion::{
    alternating6, dihedral8, extension_axiom_sweep, fully_normalized_witness_sweep, l32,
    local_identity_sweep, oracle_equivalence_sweep, saturation_witness_sweep, symmetric4,
    FusionSystem,
};
use fusionkit::modrep::{
    a7_in_gl42_cached, build_gl24_in_gl42, build_sl24_in_gl42, centralizer_in_gl, gl42,
    orbits_on_vectors,
};
use fusionkit::pcgroup::{
    builtin_sylow, characteristic_subgroup, max_elementary_abelians, thompson_subgroup,
    CharacteristicKind, PcElem, PcGroup, Subgroup, SylowKind,
};
use fusionkit::verify::{self, CheckStatus};

fn named(g: &PcGroup, names: &[&str]) -> Subgroup {
    let gens: Vec<PcElem> = names
        .iter()
        .map(|n| g.generator_named(n).unwrap())
        .collect();
    Subgroup::closure(g, &gens)
}

fn budget(name: &str, limit: Duration, started: Instant) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= limit,
        "{name}: took {elapsed:?}, budget {limit:?}"
    );
}

#[test]
fn criterion_1_builtin_sylow_orders_and_centers() {
    let expectations = [
        (SylowKind::L34, 64usize),
        (SylowKind::L34F, 128),
        (SylowKind::L34U, 128),
        (SylowKind::L34FU, 256),
    ];
    for (kind, order) in expectations {
        let t = Instant::now();
        let g = builtin_sylow(kind);
        assert_eq!(g.order(), order, "{kind:?}");
        let z = characteristic_subgroup(&g, CharacteristicKind::Center);
        if kind == SylowKind::L34 {
            assert_eq!(z, named(&g, &["t1", "t2"]));
        } else {
            assert_eq!(z, named(&g, &["t1"]));
        }
        // Z(T0) inside every kind
        let t0 = named(&g, &["t1", "t2", "a1", "a2", "b1", "b2"]);
        let z_t0: Vec<PcElem> = t0
            .elements()
            .filter(|&x| t0.generators().all(|s| g.mul(x, s) == g.mul(s, x)))
            .collect();
        assert_eq!(Subgroup::closure(&g, &z_t0), named(&g, &["t1", "t2"]));
        budget(
            &format!("criterion 1 ({kind:?})"),
            Duration::from_secs(1),
            t,
        );
    }
    println!("PASS criterion 1: builtin Sylow orders 64/128/128/256 with the stated centers");
}

#[test]
fn criterion_2_maximal_elementary_abelians_and_thompson_subgroup() {
    let t = Instant::now();
    for kind in SylowKind::ALL {
        let g = builtin_sylow(kind);
        let f1 = named(&g, &["t1", "t2", "a1", "a2"]);
        let f2 = named(&g, &["t1", "t2", "b1", "b2"]);
        let found = max_elementary_abelians(&g);
        assert_eq!(found.len(), 2, "{kind:?}");
        assert!(found.contains(&f1), "{kind:?}");
        assert!(found.contains(&f2), "{kind:?}");
        assert_eq!(
            thompson_subgroup(&g),
            named(&g, &["t1", "t2", "a1", "a2", "b1", "b2"])
        );
    }
    budget("criterion 2", Duration::from_secs(5), t);
    println!("PASS criterion 2: A(T1) = {{F1, F2}} and J(T1) = T0 for every kind");
}

#[test]
fn criterion_3_module_facts_for_both_automizers() {
    let t = Instant::now();
    let a7 = a7_in_gl42_cached(0).unwrap();
    let gl24 = build_gl24_in_gl42();
    assert_eq!(orbits_on_vectors(&a7).len(), 1);
    assert_eq!(orbits_on_vectors(&a7)[0].len(), 15);
    assert_eq!(orbits_on_vectors(&gl24).len(), 1);
    assert_eq!(centralizer_in_gl(&a7).order(), 1);
    assert_eq!(centralizer_in_gl(&gl24).order(), 3);
    for g in [&a7, &gl24] {
        let h1 = first_cohomology(g, &ModuleAction::natural(g)).unwrap();
        assert_eq!(h1.dim_h0, 0);
        assert_eq!(h1.dim_b1, 4);
        assert_eq!(h1.dim_z1, 4);
        assert_eq!(h1.dim_h1(), 0);
    }
    assert_eq!(gl42().order() / a7.order(), 8);
    budget("criterion 3", Duration::from_secs(60), t);
    println!(
        "PASS criterion 3: transitivity, commutant orders 1 and 3, H1 = 0 (Z1 = B1 = 4), index 8"
    );
}

#[test]
fn criterion_4_homocyclic_exclusion_instances() {
    let t = Instant::now();
    let gl24 = build_gl24_in_gl42();
    assert!(higman_instance_check(&gl24, &build_sl24_in_gl42(), 4).unwrap());
    let a7 = a7_in_gl42_cached(0).unwrap();
    let a5 = find_fpf_a5_subgroup(&a7).unwrap();
    assert!(higman_instance_check(&a7, &a5, 4).unwrap());
    budget("criterion 4", Duration::from_secs(300), t);
    println!("PASS criterion 4: no mod-4 lift for either SL2(4) image (exponent-4 case excluded)");
}

#[test]
fn criterion_5_extension_conclusion_scenarios() {
    let t = Instant::now();
    for (name, g) in [
        ("gl24", build_gl24_in_gl42()),
        ("a7", a7_in_gl42_cached(0).unwrap()),
    ] {
        let (h, x, f_basis, g_part) = split_hyperplane_scenario(&g).unwrap();
        let verdict = lemma32_conclusion_check(&h, x, &f_basis, &g_part).unwrap();
        assert!(verdict.assumption_transitive, "{name}");
        assert!(verdict.assumption_commutant_inside, "{name}");
        assert!(verdict.assumption_h1_zero, "{name}");
        assert_eq!(verdict.x_order, 512, "{name}");
        assert!(verdict.xbar_elementary_abelian, "{name}");
        assert!(verdict.commutator_bijective, "{name}");
        assert!(verdict.commutator_equivariant, "{name}");
        assert!(verdict.complement_found, "{name}");
        assert_eq!(verdict.y_order, 256, "{name}");
        assert!(verdict.y_elementary_abelian, "{name}");
        assert!(!verdict.y_homocyclic_exponent4_omega1_v, "{name}");
    }
    budget("criterion 5", Duration::from_secs(300), t);
    println!(
        "PASS criterion 5: elementary abelian invariant complement of order 256 in both scenarios"
    );
}

#[test]
fn criterion_6_fusion_oracle_equivalence_and_local_identities() {
    let t = Instant::now();
    for group in [symmetric4(), dihedral8(), alternating6(), l32()] {
        let name = group.name().to_string();
        let f = FusionSystem::of_group(group).unwrap();
        let oracle = oracle_equivalence_sweep(&f).unwrap();
        assert!(oracle.ok(), "{name}: {:?}", oracle.failures);
        assert!(oracle.cases > 0);
        let local = local_identity_sweep(&f).unwrap();
        assert!(local.ok(), "{name}: {:?}", local.failures);
        let reps = fully_normalized_witness_sweep(&f).unwrap();
        assert!(reps.ok(), "{name}: {:?}", reps.failures);
        let saturation = saturation_witness_sweep(&f).unwrap();
        assert!(saturation.ok(), "{name}: {:?}", saturation.failures);
        let ext = extension_axiom_sweep(&f).unwrap();
        assert!(ext.ok(), "{name}: {:?}", ext.failures);
    }
    budget("criterion 6", Duration::from_secs(300), t);
    println!("PASS criterion 6: zero discrepancies across hom-set routes and local identities");
}

#[test]
fn criterion_7_wreath_model() {
    let t = Instant::now();
    for base in [verify::WreathBase::A6, verify::WreathBase::L32] {
        let report = verify::check_wreath_model(base);
        assert!(report.passed(), "{base:?}: {:?}", report.details);
        assert_eq!(report.details["rank_doubling"], serde_json::json!(true));
        assert_eq!(
            report.details["centralizer_equals_swap_times_diagonal"],
            serde_json::json!(true)
        );
    }
    budget("criterion 7", Duration::from_secs(300), t);
    println!("PASS criterion 7: swap centralizer splits as <x> x diag and the rank doubles");
}

#[test]
fn criterion_8_negative_controls_and_determinism() {
    let t = Instant::now();
    // every corrupted variant must fail (not pass)
    assert_eq!(verify::check_lemma31_corrupted(0).status, CheckStatus::Fail);
    assert_eq!(verify::check_lemma33_corrupted().status, CheckStatus::Fail);
    assert_eq!(verify::check_lemma32_corrupted().status, CheckStatus::Fail);
    assert_eq!(verify::check_wreath_corrupted().status, CheckStatus::Fail);
    assert_eq!(verify::check_fusion_corrupted().status, CheckStatus::Fail);

    // determinism: identical reports modulo timing for a fixed seed
    let strip = |reports: Vec<verify::CheckReport>| -> String {
        let stripped: Vec<_> = reports.iter().map(|r| r.without_timing()).collect();
        serde_json::to_string(&stripped).unwrap()
    };
    let first = strip(verify::run_all(0, None));
    let second = strip(verify::run_all(0, None));
    assert_eq!(first, second);
    budget("criterion 8", Duration::from_secs(300), t);
    println!("PASS criterion 8: all negative controls fail; same-seed reports are identical");
}
