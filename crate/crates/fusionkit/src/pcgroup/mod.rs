//! Finite 2-groups from power-commutator presentations, with exhaustive
//! structural invariants: centers, derived and Frattini subgroups, maximal
//! elementary abelians, Thompson subgroups, centralizers and normalizers,
//! involution fusion under automorphism sets, and isomorphism fingerprints
//! for groups of order at most 16.
//!
//! The builtin presentations are the Sylow 2-subgroups of `L3(4)` and of its
//! extensions by a field automorphism `f`, a graph-field automorphism `u`,
//! and both: the groups `T0`, `T0<f>`, `T0<u>`, `T0<f,u>` of orders 64, 128,
//! 128 and 256. `T0` is generated by involutions `t1, t2, a1, a2, b1, b2`
//! with `<t1, t2>` central and
//! `[a1,b1] = [a2,b2] = t1`, `[a2,b1] = t2`, `[a1,b2] = t1*t2`.

mod group;
mod presentation;
mod structure;

pub use group::{PcElem, PcGroup};
pub use presentation::{PcPresentation, Word, MAX_GENERATORS};
pub use structure::{
    characteristic_subgroup, index_two_subgroups, involution_classes_under, isomorphism_type_small,
    local_subgroup, map_from_generator_images, max_elementary_abelians, subgroup_isomorphism_type,
    thompson_subgroup, two_rank, CharacteristicKind, ElemMap, IsoTag, LocalKind, Subgroup,
};

use crate::Result;

/// The four builtin Sylow types.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SylowKind {
    /// Sylow 2-subgroup of `L3(4)`: the group `T0` of order 64.
    L34,
    /// `T0<f>`, order 128 (`f` a field automorphism; the `M23`/`McL` type).
    L34F,
    /// `T0<u>`, order 128 (`u` a graph-field automorphism; the `J3` type).
    L34U,
    /// `T0<f,u>`, order 256 (the `Ly` type).
    L34FU,
}

impl SylowKind {
    pub const ALL: [SylowKind; 4] = [
        SylowKind::L34,
        SylowKind::L34F,
        SylowKind::L34U,
        SylowKind::L34FU,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SylowKind::L34 => "L34",
            SylowKind::L34F => "L34_f",
            SylowKind::L34U => "L34_u",
            SylowKind::L34FU => "L34_fu",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "l34" => Ok(SylowKind::L34),
            "l34_f" | "l34f" | "f" => Ok(SylowKind::L34F),
            "l34_u" | "l34u" | "u" => Ok(SylowKind::L34U),
            "l34_fu" | "l34fu" | "fu" => Ok(SylowKind::L34FU),
            other => Err(crate::Error::Parse(format!("unknown Sylow kind {other:?}"))),
        }
    }
}

/// Instantiate a builtin Sylow presentation.
pub fn builtin_sylow(kind: SylowKind) -> PcGroup {
    let mut names = vec!["t1", "t2", "a1", "a2", "b1", "b2"];
    let mut comms: Vec<(&str, &str, &str)> = vec![
        ("b1", "a1", "t1"),
        ("b1", "a2", "t2"),
        ("b2", "a1", "t1*t2"),
        ("b2", "a2", "t1"),
    ];
    let with_f = matches!(kind, SylowKind::L34F | SylowKind::L34FU);
    let with_u = matches!(kind, SylowKind::L34U | SylowKind::L34FU);
    if with_f {
        names.push("f");
        comms.extend([
            ("f", "t2", "t1"),
            ("f", "a1", "a1*a2"),
            ("f", "a2", "a1*a2"),
            ("f", "b1", "b1*b2"),
            ("f", "b2", "b1*b2"),
        ]);
    }
    if with_u {
        names.push("u");
        comms.extend([
            ("u", "t2", "t1"),
            ("u", "a1", "b1*a1"),
            ("u", "a2", "b2*a2"),
            ("u", "b1", "a1*b1"),
            ("u", "b2", "a2*b2"),
        ]);
    }
    let pres = PcPresentation::from_relations(&names, &[], &comms)
        .expect("builtin presentation is well-ordered");
    PcGroup::from_presentation(pres).expect("builtin presentation is consistent")
}

/// Cyclic group of order 2 with the given generator name.
pub fn cyclic2(name: &str) -> Result<PcGroup> {
    PcGroup::from_presentation(PcPresentation::from_relations(&[name], &[], &[])?)
}

/// Cyclic group of order 4: `hi` squares to `lo`.
pub fn cyclic4(lo: &str, hi: &str) -> Result<PcGroup> {
    PcGroup::from_presentation(PcPresentation::from_relations(&[lo, hi], &[(hi, lo)], &[])?)
}

/// Elementary abelian group on the given generator names.
pub fn elementary_abelian(names: &[&str]) -> Result<PcGroup> {
    PcGroup::from_presentation(PcPresentation::from_relations(names, &[], &[])?)
}

/// Direct product via concatenated presentations with trivial
/// cross-commutators. Generator name collisions on the right factor gain `'`.
pub fn direct_product(g: &PcGroup, h: &PcGroup) -> Result<PcGroup> {
    PcGroup::from_presentation(g.presentation().direct_product(h.presentation())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use structure::{CharacteristicKind as CK, LocalKind};

    fn subgroup_named(g: &PcGroup, names: &[&str]) -> Subgroup {
        let gens: Vec<PcElem> = names
            .iter()
            .map(|n| g.generator_named(n).unwrap())
            .collect();
        Subgroup::closure(g, &gens)
    }

    #[test]
    fn builtin_orders_are_64_128_128_256() {
        assert_eq!(builtin_sylow(SylowKind::L34).order(), 64);
        assert_eq!(builtin_sylow(SylowKind::L34F).order(), 128);
        assert_eq!(builtin_sylow(SylowKind::L34U).order(), 128);
        assert_eq!(builtin_sylow(SylowKind::L34FU).order(), 256);
    }

    #[test]
    fn base_order_is_two_part_of_l34_order() {
        // |L3(4)| = 20160 and |Aut(L3(4))| = 241920; the builtin groups must
        // match their 2-parts.
        let two_part = |mut n: u64| {
            let mut p = 1;
            while n.is_multiple_of(2) {
                p *= 2;
                n /= 2;
            }
            p
        };
        assert_eq!(two_part(20160), 64);
        assert_eq!(two_part(241920), 256);
        assert_eq!(
            builtin_sylow(SylowKind::L34).order() as u64,
            two_part(20160)
        );
        assert_eq!(
            builtin_sylow(SylowKind::L34FU).order() as u64,
            two_part(241920)
        );
    }

    #[test]
    fn defining_relations_hold_verbatim() {
        for kind in SylowKind::ALL {
            let g = builtin_sylow(kind);
            let e = |name: &str| g.generator_named(name).unwrap();
            let c = |x: &str, y: &str| g.comm(e(x), e(y));
            let one = PcElem::IDENTITY;
            for name in ["t1", "t2", "a1", "a2", "b1", "b2"] {
                assert_eq!(g.square(e(name)), one, "{name}^2 in {kind:?}");
            }
            assert_eq!(c("a1", "a2"), one);
            assert_eq!(c("b1", "b2"), one);
            assert_eq!(c("a1", "b1"), e("t1"));
            assert_eq!(c("a2", "b2"), e("t1"));
            assert_eq!(c("a2", "b1"), e("t2"));
            assert_eq!(c("a1", "b2"), g.mul(e("t1"), e("t2")));
            if matches!(kind, SylowKind::L34F | SylowKind::L34FU) {
                assert_eq!(g.square(e("f")), one);
                assert_eq!(c("t2", "f"), e("t1"));
                let a1a2 = g.mul(e("a1"), e("a2"));
                let b1b2 = g.mul(e("b1"), e("b2"));
                assert_eq!(c("a1", "f"), a1a2);
                assert_eq!(c("a2", "f"), a1a2);
                assert_eq!(c("b1", "f"), b1b2);
                assert_eq!(c("b2", "f"), b1b2);
            }
            if matches!(kind, SylowKind::L34U | SylowKind::L34FU) {
                assert_eq!(g.square(e("u")), one);
                assert_eq!(c("t2", "u"), e("t1"));
                let a1b1 = g.mul(e("a1"), e("b1"));
                let a2b2 = g.mul(e("a2"), e("b2"));
                assert_eq!(c("a1", "u"), a1b1);
                assert_eq!(g.comm(e("u"), e("b1")), a1b1);
                assert_eq!(c("a2", "u"), a2b2);
                assert_eq!(g.comm(e("u"), e("b2")), a2b2);
            }
            if kind == SylowKind::L34FU {
                assert_eq!(c("f", "u"), one);
            }
        }
    }

    #[test]
    fn centers_match_the_structure_facts() {
        let t0 = builtin_sylow(SylowKind::L34);
        let z = characteristic_subgroup(&t0, CK::Center);
        assert_eq!(z, subgroup_named(&t0, &["t1", "t2"]));
        assert_eq!(z.order(), 4);
        for kind in [SylowKind::L34F, SylowKind::L34U, SylowKind::L34FU] {
            let t1 = builtin_sylow(kind);
            let z = characteristic_subgroup(&t1, CK::Center);
            assert_eq!(z, subgroup_named(&t1, &["t1"]), "{kind:?}");
            assert_eq!(z.order(), 2);
        }
    }

    #[test]
    fn maximal_elementary_abelians_are_f1_and_f2() {
        for kind in SylowKind::ALL {
            let g = builtin_sylow(kind);
            let f1 = subgroup_named(&g, &["t1", "t2", "a1", "a2"]);
            let f2 = subgroup_named(&g, &["t1", "t2", "b1", "b2"]);
            assert_eq!(f1.order(), 16);
            assert_eq!(f2.order(), 16);
            assert!(f1.is_elementary_abelian(&g));
            let found = max_elementary_abelians(&g);
            assert_eq!(found.len(), 2, "{kind:?}");
            assert!(found.contains(&f1) && found.contains(&f2), "{kind:?}");
            // J = <F1, F2> = T0, the subgroup generated by the first six
            // generators, and the 2-rank is 4.
            let j = thompson_subgroup(&g);
            let t0_in = subgroup_named(&g, &["t1", "t2", "a1", "a2", "b1", "b2"]);
            assert_eq!(j, t0_in);
            assert_eq!(j.order(), 64);
            assert_eq!(two_rank(&g), 4);
        }
    }

    #[test]
    fn thompson_subgroup_degenerate_cases() {
        let e8 = elementary_abelian(&["x", "y", "z"]).unwrap();
        assert_eq!(thompson_subgroup(&e8).order(), 8);
        // quaternion group: z central square, i^2 = j^2 = z, [j, i] = z
        let q8 = PcGroup::from_presentation(
            PcPresentation::from_relations(
                &["z", "i", "j"],
                &[("i", "z"), ("j", "z")],
                &[("j", "i", "z")],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(q8.order(), 8);
        let j = thompson_subgroup(&q8);
        assert_eq!(j, characteristic_subgroup(&q8, CK::Center));
        assert_eq!(j.order(), 2);
        assert_eq!(isomorphism_type_small(&q8).unwrap(), IsoTag::Quaternion);
    }

    #[test]
    fn agemo_of_elementary_abelian_is_trivial() {
        let e8 = elementary_abelian(&["x", "y", "z"]).unwrap();
        let a = characteristic_subgroup(&e8, CK::Agemo1);
        assert_eq!(a.order(), 1);
    }

    #[test]
    fn frattini_equals_intersection_of_maximal_subgroups() {
        for g in [
            builtin_sylow(SylowKind::L34),
            builtin_sylow(SylowKind::L34F),
            cyclic4("v", "w").unwrap(),
        ] {
            let phi = characteristic_subgroup(&g, CK::Frattini);
            let maximals = index_two_subgroups(&g);
            assert!(!maximals.is_empty());
            let mut inter: Vec<PcElem> = g.elements().collect();
            for m in &maximals {
                inter.retain(|&e| m.contains(e));
            }
            inter.sort_unstable();
            let inter = Subgroup::from_elements(&g, &inter).unwrap();
            assert_eq!(phi, inter);
            // for 2-groups the Frattini subgroup is derived * agemo1
            let derived = characteristic_subgroup(&g, CK::Derived);
            let agemo = characteristic_subgroup(&g, CK::Agemo1);
            assert!(derived.is_subset_of(&phi) && agemo.is_subset_of(&phi));
            let both: Vec<PcElem> = derived.elements().chain(agemo.elements()).collect();
            assert_eq!(Subgroup::closure(&g, &both), phi);
        }
    }

    #[test]
    fn direct_products_match_expected_invariants() {
        // C2 x T0<f>: order 256 and center <x, t1> of order 4
        let c2 = cyclic2("x").unwrap();
        let t1f = builtin_sylow(SylowKind::L34F);
        let g = direct_product(&c2, &t1f).unwrap();
        assert_eq!(g.order(), 256);
        let z = characteristic_subgroup(&g, CK::Center);
        assert_eq!(z.order(), 4);
        assert_eq!(z, subgroup_named(&g, &["x", "t1"]));
        // C2 x C2 is elementary abelian of order 4
        let v4 = direct_product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(Subgroup::whole(&v4).is_elementary_abelian(&v4));
        // C4 x T0: order 256. T0 is generated by involutions but has exponent
        // 4 ((a1*b1)^2 = t1), so agemo1 is <v> x <t1, t2> of order 8.
        let c4 = cyclic4("v", "w").unwrap();
        let t0 = builtin_sylow(SylowKind::L34);
        let a1b1 = t0.mul(
            t0.generator_named("a1").unwrap(),
            t0.generator_named("b1").unwrap(),
        );
        assert_eq!(t0.square(a1b1), t0.generator_named("t1").unwrap());
        let g = direct_product(&c4, &t0).unwrap();
        assert_eq!(g.order(), 256);
        let agemo = characteristic_subgroup(&g, CK::Agemo1);
        assert_eq!(agemo, subgroup_named(&g, &["v", "t1", "t2"]));
        assert_eq!(agemo.order(), 8);
    }

    #[test]
    fn rank_five_in_c2_times_extension() {
        for kind in [SylowKind::L34F, SylowKind::L34U, SylowKind::L34FU] {
            let g = direct_product(&cyclic2("x").unwrap(), &builtin_sylow(kind)).unwrap();
            assert_eq!(two_rank(&g), 5, "{kind:?}");
        }
    }

    #[test]
    fn centralizers_and_normalizers_by_exhaustion() {
        // C of T0 in T0<f> is Z(T0) = <t1, t2>: central elements of T0
        // centralize all of T0, and no element of the f-coset acts as an
        // inner automorphism of T0 (f moves t2, inner maps fix the center).
        let t1f = builtin_sylow(SylowKind::L34F);
        let t0 = subgroup_named(&t1f, &["t1", "t2", "a1", "a2", "b1", "b2"]);
        let c = local_subgroup(&t1f, &t0, LocalKind::Centralizer);
        assert_eq!(c, subgroup_named(&t1f, &["t1", "t2"]));
        assert_eq!(c.order(), 4);
        let n = local_subgroup(&t1f, &Subgroup::whole(&t1f), LocalKind::Normalizer);
        assert_eq!(n.order(), t1f.order());
        // the Q<t1> pattern: centralizer of the full T1 in <x> x T1
        let big = direct_product(&cyclic2("x").unwrap(), &t1f).unwrap();
        let t1_in = subgroup_named(&big, &["t1", "t2", "a1", "a2", "b1", "b2", "f"]);
        let ct1 = local_subgroup(&big, &t1_in, LocalKind::Centralizer);
        assert_eq!(ct1, subgroup_named(&big, &["x", "t1"]));
        assert_eq!(ct1.order(), 4);
        // <x> x T0: centralizer of T0 is <x> x <t1, t2> = <x> x Z(T0)
        let g = direct_product(&cyclic2("x").unwrap(), &builtin_sylow(SylowKind::L34)).unwrap();
        let t0_in = subgroup_named(&g, &["t1", "t2", "a1", "a2", "b1", "b2"]);
        let c = local_subgroup(&g, &t0_in, LocalKind::Centralizer);
        assert_eq!(c, subgroup_named(&g, &["x", "t1", "t2"]));
        assert_eq!(c.order(), 8);
    }

    #[test]
    fn omega1_of_center_is_central_and_contained() {
        for kind in SylowKind::ALL {
            let g = builtin_sylow(kind);
            let z = characteristic_subgroup(&g, CK::Center);
            let z_elems: Vec<PcElem> = z.elements().collect();
            let omega_z = Subgroup::closure(
                &g,
                &z_elems
                    .iter()
                    .copied()
                    .filter(|&e| g.square(e) == PcElem::IDENTITY)
                    .collect::<Vec<_>>(),
            );
            assert!(omega_z.is_subset_of(&z));
        }
    }

    #[test]
    fn inner_fusion_of_central_involutions_is_trivial() {
        // under inner automorphisms alone, the central involutions of T0 are
        // fixed: three singleton classes, and a1's class is a1<t1,t2>.
        let t0 = builtin_sylow(SylowKind::L34);
        let classes = involution_classes_under(&t0, &[]).unwrap();
        let e = |name: &str| t0.generator_named(name).unwrap();
        let singleton = |x: PcElem| classes.iter().any(|c| c.len() == 1 && c[0] == x);
        assert!(singleton(e("t1")));
        assert!(singleton(e("t2")));
        assert!(singleton(t0.mul(e("t1"), e("t2"))));
        let a1 = e("a1");
        let a1_class = classes.iter().find(|c| c.contains(&a1)).unwrap();
        assert_eq!(a1_class.len(), 4);
    }

    #[test]
    fn diagonal_torus_map_fuses_the_central_involutions() {
        // The order-3 symmetry of T0 induced by a diagonal torus element of
        // L3(4): a1 -> a2 -> a1*a2, b's fixed, t1 -> t2 -> t1*t2. Together
        // with inner maps it fuses all of <t1,t2>^#, the involution-fusion
        // pattern of the sporadic automizers.
        let t0 = builtin_sylow(SylowKind::L34);
        let e = |name: &str| t0.generator_named(name).unwrap();
        let images = vec![
            e("t2"),                  // t1
            t0.mul(e("t1"), e("t2")), // t2
            e("a2"),                  // a1
            t0.mul(e("a1"), e("a2")), // a2
            e("b1"),                  // b1
            e("b2"),                  // b2
        ];
        let map = map_from_generator_images(&t0, &images);
        let classes = involution_classes_under(&t0, &[map]).unwrap();
        let center_class = classes.iter().find(|c| c.contains(&e("t1"))).unwrap();
        assert_eq!(center_class.len(), 3);
        assert!(center_class.contains(&e("t2")));
        assert!(center_class.contains(&t0.mul(e("t1"), e("t2"))));
    }

    #[test]
    fn corrupted_map_is_rejected() {
        let t0 = builtin_sylow(SylowKind::L34);
        let mut map: ElemMap = (0..t0.order() as u16).collect();
        map.swap(1, 2); // transposing two elements is no homomorphism here
        assert!(matches!(
            involution_classes_under(&t0, &[map]),
            Err(crate::Error::NotAutomorphism(_))
        ));
        let too_short: ElemMap = vec![0; 3];
        assert!(matches!(
            involution_classes_under(&t0, &[too_short]),
            Err(crate::Error::NotAutomorphism(_))
        ));
    }

    #[test]
    fn small_isomorphism_tags() {
        let d16 = PcGroup::from_presentation(
            PcPresentation::from_relations(
                &["c1", "c2", "c3", "s"],
                &[("c2", "c1"), ("c3", "c2")],
                &[("s", "c3", "c2"), ("s", "c2", "c1")],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(d16.order(), 16);
        assert_eq!(isomorphism_type_small(&d16).unwrap(), IsoTag::Dihedral);

        let sd16 = PcGroup::from_presentation(
            PcPresentation::from_relations(
                &["c1", "c2", "c3", "s"],
                &[("c2", "c1"), ("c3", "c2")],
                &[("s", "c3", "c1*c2"), ("s", "c2", "c1")],
            )
            .unwrap(),
        )
        .unwrap();
        assert_eq!(isomorphism_type_small(&sd16).unwrap(), IsoTag::Semidihedral);

        let c4xc4 =
            direct_product(&cyclic4("v", "w").unwrap(), &cyclic4("p", "q").unwrap()).unwrap();
        assert_eq!(
            isomorphism_type_small(&c4xc4).unwrap(),
            IsoTag::Homocyclic { exponent: 4 }
        );

        let c4xc2 = direct_product(&cyclic4("v", "w").unwrap(), &cyclic2("x").unwrap()).unwrap();
        assert_eq!(isomorphism_type_small(&c4xc2).unwrap(), IsoTag::Other);

        assert_eq!(
            isomorphism_type_small(&cyclic4("v", "w").unwrap()).unwrap(),
            IsoTag::Cyclic
        );
        assert_eq!(
            isomorphism_type_small(&elementary_abelian(&["x", "y"]).unwrap()).unwrap(),
            IsoTag::ElementaryAbelian
        );
    }

    #[test]
    fn json_presentation_round_trip() {
        let g = PcGroup::from_json(
            r#"{"generators": ["t1", "t2", "a1", "a2", "b1", "b2"],
                "powers": {},
                "commutators": {
                    "[b1,a1]": "t1", "[b1,a2]": "t2",
                    "[b2,a1]": "t1*t2", "[b2,a2]": "t1"
                }}"#,
        )
        .unwrap();
        assert_eq!(g.order(), 64);
        let builtin = builtin_sylow(SylowKind::L34);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(g.mul(a, b), builtin.mul(a, b));
            }
        }
    }

    #[test]
    fn random_triples_associate_in_the_largest_builtin() {
        use rand::{Rng, SeedableRng};
        let g = builtin_sylow(SylowKind::L34FU);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        for _ in 0..10_000 {
            let a = PcElem(rng.gen_range(0..g.order()) as u16);
            let b = PcElem(rng.gen_range(0..g.order()) as u16);
            let c = PcElem(rng.gen_range(0..g.order()) as u16);
            assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        }
        for a in g.elements() {
            assert_eq!(g.mul(a, g.inv(a)), PcElem::IDENTITY);
        }
    }

    #[test]
    fn max_elementary_abelians_closed_under_verified_automorphisms() {
        let t0 = builtin_sylow(SylowKind::L34);
        let e = |name: &str| t0.generator_named(name).unwrap();
        let images = vec![
            e("t2"),
            t0.mul(e("t1"), e("t2")),
            e("a2"),
            t0.mul(e("a1"), e("a2")),
            e("b1"),
            e("b2"),
        ];
        let map = map_from_generator_images(&t0, &images);
        involution_classes_under(&t0, std::slice::from_ref(&map)).unwrap(); // verifies
        let as_sets = max_elementary_abelians(&t0);
        for sub in &as_sets {
            let image: Vec<PcElem> = sub.elements().map(|x| PcElem(map[x.0 as usize])).collect();
            let image = Subgroup::from_elements(&t0, &image).unwrap();
            assert!(as_sets.contains(&image));
        }
    }
}

#[cfg(test)]
mod centralizer_type_tests {
    
    use super::*;

    // Inside the largest builtin group, an involution outside the field-type
    // subgroup centralizes a semidihedral group of order 16 in it, and an
    // involution outside the graph-field-type subgroup centralizes a dihedral
    // group of order 16; both centralizers have center <t1>.
    #[test]
    fn outer_involution_centralizer_types() {
        let g = builtin_sylow(SylowKind::L34FU);
        let base = ["t1", "t2", "a1", "a2", "b1", "b2"];
        let cases = [("f", IsoTag::Semidihedral), ("u", IsoTag::Dihedral)];
        for (extra, expected) in cases {
            let inner = {
                let mut names = base.to_vec();
                names.push(extra);
                let gens: Vec<PcElem> = names
                    .iter()
                    .map(|n| g.generator_named(n).unwrap())
                    .collect();
                Subgroup::closure(&g, &gens)
            };
            assert_eq!(inner.order(), 128);
            let t1_elem = g.generator_named("t1").unwrap();
            let mut seen = Vec::new();
            let mut witness_found = false;
            for w in g.elements() {
                if !g.is_involution(w) || inner.contains(w) {
                    continue;
                }
                let fixed: Vec<PcElem> = inner.elements().filter(|&x| g.conj(x, w) == x).collect();
                let c = Subgroup::closure(&g, &fixed);
                if c.order() == 16 {
                    let tag = subgroup_isomorphism_type(&g, &c).unwrap();
                    let zc: Vec<PcElem> = c
                        .elements()
                        .filter(|&z| c.generators().all(|s| g.mul(z, s) == g.mul(s, z)))
                        .collect();
                    let zc = Subgroup::closure(&g, &zc);
                    if tag == expected && zc == Subgroup::closure(&g, &[t1_elem]) {
                        witness_found = true;
                    }
                    seen.push(tag);
                }
            }
            assert!(
                witness_found,
                "no outer involution with a {expected:?} fixed subgroup of order 16 \
                 and center <t1> in the {extra}-type subgroup; saw {seen:?}"
            );
        }
    }

    // The symmetric automorphism group of a rank-2 elementary abelian group
    // permutes the three involutions transitively.
    #[test]
    fn full_automorphism_set_of_the_four_group_fuses_everything() {
        let v4 = elementary_abelian(&["x", "y"]).unwrap();
        let x = v4.generator_named("x").unwrap();
        let y = v4.generator_named("y").unwrap();
        let xy = v4.mul(x, y);
        let maps: Vec<ElemMap> = [
            vec![y, x],  // swap
            vec![y, xy], // 3-cycle
        ]
        .iter()
        .map(|im| map_from_generator_images(&v4, im))
        .collect();
        let classes = involution_classes_under(&v4, &maps).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 3);
    }
}
