//! The wreath-type double `(K x K)<x>` with the swap involution: its swap
//! centralizer splits as `<x> x diag(K)`, and the 2-core of the normalizer
//! of `E = <x>F` carries an elementary abelian subgroup of twice the rank of
//! `F`. Run over the two desk-scale base groups.
//!
//! ```bash
//! cargo run --release --example wreath_model
//! ```

use fusionkit::fusion::{alternating6, l32, o2_of_set, sylow2_of_set, wreath_double, PermSet};

fn main() {
    for base in [alternating6(), l32()] {
        let name = base.name().to_string();
        let w = wreath_double(&base).expect("degree stays small");
        let whole = w.group.as_set().expect("within the enumeration cap");
        println!("== ({name} x {name})<swap>, order {}", w.group.order());

        let c = whole.centralizer_of_element(&w.swap);
        let diag = PermSet::closure(w.group.degree(), &w.diagonal);
        let mut gens = w.diagonal.clone();
        gens.push(w.swap.clone());
        let expected = PermSet::closure(w.group.degree(), &gens);
        println!(
            "   C_G(swap): order {} = 2 * {}; equals <swap> x diag: {}",
            c.order(),
            diag.order(),
            c == expected
        );

        let seed = PermSet::closure(w.group.degree(), std::slice::from_ref(&w.swap));
        let s = sylow2_of_set(&whole, Some(&seed));
        let c_sx = s.centralizer_of_element(&w.swap);
        println!(
            "   Sylow order {}, m(S) = {}, m(C_S(swap)) = {}",
            s.order(),
            s.two_rank(),
            c_sx.two_rank()
        );

        let diag_sylow = sylow2_of_set(&diag, None);
        let f = diag_sylow
            .max_elementary_abelians()
            .into_iter()
            .next()
            .unwrap();
        let mut e_gens = f.generators().to_vec();
        e_gens.push(w.swap.clone());
        let e = PermSet::closure(w.group.degree(), &e_gens);
        let n = whole.normalizer_of(&e);
        let o2 = o2_of_set(&n);
        println!(
            "   F rank {} -> E = <swap>F rank {}; |N_G(E)| = {}, |O_2(N)| = {}, rank {} >= {}",
            f.two_rank(),
            e.two_rank(),
            n.order(),
            o2.order(),
            o2.two_rank(),
            2 * f.two_rank()
        );
    }
}
