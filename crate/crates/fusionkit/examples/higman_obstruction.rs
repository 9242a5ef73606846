//! The mod-4 lift obstruction: an exponent-4 homocyclic module structure on
//! `(Z/4)^4` under either `SL2(4)` image would amount to a family of mod-4
//! matrices lifting the mod-2 action and satisfying the (2,3,5) relations.
//! The affine obstruction system is inconsistent in both cases, so no such
//! structure exists — while a single order-3 action on `F2^2` lifts happily
//! (positive control for the solver).
//!
//! ```bash
//! cargo run --example higman_obstruction
//! ```

use fusionkit::cohomology::{find_fpf_a5_subgroup, higman_instance_check, no_mod4_lift};
use fusionkit::modrep::{a7_in_gl42_cached, build_gl24_in_gl42, build_sl24_in_gl42, MatF2};

fn main() {
    // positive control: the companion matrix of x^2 + x + 1 lifts to Z/4
    let t = MatF2::from_rows(&[0b10, 0b11]);
    let blocked = no_mod4_lift(&[t], &[vec![0, 0, 0]]).unwrap();
    println!("order-3 action on F2^2: lift blocked = {blocked} (a lift exists)");

    let gl24 = build_gl24_in_gl42();
    let sl24 = build_sl24_in_gl42();
    println!(
        "SL2(4) inside GL2(4) image: exponent-4 structure excluded = {}",
        higman_instance_check(&gl24, &sl24, 4).unwrap()
    );

    let a7 = a7_in_gl42_cached(0).unwrap();
    let a5 = find_fpf_a5_subgroup(&a7).unwrap();
    println!(
        "designated A5 inside the A7 image: order {}, exponent-4 structure excluded = {}",
        a5.order(),
        higman_instance_check(&a7, &a5, 4).unwrap()
    );

    // the exponent-2 case is vacuous: Y = V is forced
    println!(
        "exponent-2 case is vacuously excluded: {}",
        higman_instance_check(&gl24, &sl24, 2).unwrap()
    );
}
