//! Property tests for the algebraic kernels: matrix algebra over F2,
//! permutation composition, presented-group laws, and format round trips.

use proptest::prelude::*;

use fusionkit::fusion::Perm;
use fusionkit::modrep::{group_from_text, group_to_text, MatF2};
use fusionkit::pcgroup::{builtin_sylow, PcElem, SylowKind};

fn arb_mat4() -> impl Strategy<Value = MatF2> {
    proptest::array::uniform4(0u8..16).prop_map(|rows| MatF2::from_rows(&rows))
}

fn arb_invertible4() -> impl Strategy<Value = MatF2> {
    arb_mat4().prop_filter("invertible", |m| m.is_invertible())
}

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        for i in (1..degree).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        Perm::from_images(images).expect("shuffle is a permutation")
    })
}

proptest! {
    #[test]
    fn matrix_product_is_associative(a in arb_mat4(), b in arb_mat4(), c in arb_mat4()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn matrix_application_respects_products(a in arb_mat4(), b in arb_mat4(), v in 0u8..16) {
        prop_assert_eq!(a.mul(&b).apply(v), b.apply(a.apply(v)));
    }

    #[test]
    fn inverse_of_product(a in arb_invertible4(), b in arb_invertible4()) {
        let ab_inv = a.mul(&b).inverse().unwrap();
        prop_assert_eq!(ab_inv, b.inverse().unwrap().mul(&a.inverse().unwrap()));
    }

    #[test]
    fn matrix_text_round_trip(mats in proptest::collection::vec(arb_mat4(), 0..6)) {
        let text = group_to_text(4, &mats);
        let (dim, back) = group_from_text(&text).unwrap();
        prop_assert_eq!(dim, 4);
        prop_assert_eq!(back, mats);
    }

    #[test]
    fn permutation_group_laws(a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(
            a.compose(&b).inverse(),
            b.inverse().compose(&a.inverse())
        );
    }

    #[test]
    fn presented_group_laws(x in 0u16..256, y in 0u16..256, z in 0u16..256) {
        // the largest builtin group exercises all eight generators
        let g = builtin_sylow(SylowKind::L34FU);
        let (a, b, c) = (PcElem(x), PcElem(y), PcElem(z));
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inv(a)), PcElem::IDENTITY);
        prop_assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
        // conjugation is an automorphism
        prop_assert_eq!(
            g.conj(g.mul(a, b), c),
            g.mul(g.conj(a, c), g.conj(b, c))
        );
    }
}
