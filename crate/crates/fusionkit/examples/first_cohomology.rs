//! First cohomology over F2 by spanning-tree propagation: the two
//! 4-dimensional modules have `H^1 = 0`, while the trivial C2-module has
//! `H^1` of dimension 1.
//!
//! ```bash
//! cargo run --example first_cohomology
//! ```

use fusionkit::cohomology::{first_cohomology, Cocycle1, ModuleAction};
use fusionkit::modrep::{a7_in_gl42_cached, build_gl24_in_gl42, enumerate_group, MatF2};

fn main() {
    let a7 = a7_in_gl42_cached(0).expect("search succeeds");
    let gl24 = build_gl24_in_gl42();
    for g in [&a7, &gl24] {
        let h1 = first_cohomology(g, &ModuleAction::natural(g)).expect("desk scale");
        println!(
            "{}: dim H^0 = {}, dim Z^1 = {}, dim B^1 = {}, dim H^1 = {}",
            g.name(),
            h1.dim_h0,
            h1.dim_z1,
            h1.dim_b1,
            h1.dim_h1()
        );
    }

    // C2 acting trivially on F2: Z^1 = Hom(C2, F2) is one-dimensional and
    // there are no coboundaries.
    let swap = MatF2::from_rows(&[0b10, 0b01]);
    let c2 = enumerate_group("C2", &[swap]).unwrap();
    let action = ModuleAction::trivial(&c2, 1);
    let h1 = first_cohomology(&c2, &action).unwrap();
    println!(
        "C2 on the trivial module: dim Z^1 = {}, dim B^1 = {}, dim H^1 = {}",
        h1.dim_z1,
        h1.dim_b1,
        h1.dim_h1()
    );

    // every member of the computed Z^1 basis satisfies the cocycle identity
    // on all |G|^2 pairs; coboundaries are cocycles
    let action = ModuleAction::natural(&gl24);
    let h1 = first_cohomology(&gl24, &action).unwrap();
    let all_valid = h1
        .z1_basis
        .iter()
        .all(|z| z.is_cocycle(&gl24, &action).unwrap());
    println!("GL2(4) Z^1 basis verified on all pairs: {all_valid}");
    let d = Cocycle1::coboundary(&gl24, &action, 0b1010).unwrap();
    println!(
        "a coboundary is a cocycle: {}",
        d.is_cocycle(&gl24, &action).unwrap()
    );
}
