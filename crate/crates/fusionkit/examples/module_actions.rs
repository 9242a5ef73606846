//! The two 4-dimensional module actions over F2: locate the `A7` subgroup of
//! `GL4(2)` and build the `GL2(4)` blowup, then print orbits, commutants,
//! irreducibility and fixed spaces.
//!
//! ```bash
//! cargo run --example module_actions
//! ```

use fusionkit::modrep::{
    build_gl24_in_gl42, centralizer_in_gl, find_a7_in_gl42, fixed_subspace, gl42, group_to_text,
    is_irreducible, orbits_on_vectors,
};

fn main() {
    let ambient = gl42();
    println!("|GL4(2)| = {}", ambient.order());

    let a7 = find_a7_in_gl42(0).expect("the search budget suffices");
    let gl24 = build_gl24_in_gl42();
    for g in [&a7, &gl24] {
        println!(
            "\n== {} (order {}, index {})",
            g.name(),
            g.order(),
            ambient.order() / g.order()
        );
        let orbit_sizes: Vec<usize> = orbits_on_vectors(g).iter().map(|o| o.len()).collect();
        println!("   orbits on the 15 nonzero vectors: {orbit_sizes:?}");
        println!("   irreducible: {}", is_irreducible(g));
        println!("   fixed vectors (with 0): {}", fixed_subspace(g).len());
        let c = centralizer_in_gl(g);
        println!(
            "   commutant in GL4(2): order {} (contained in the group: {})",
            c.order(),
            c.elements().iter().all(|m| g.contains(m))
        );
        // element-order statistics, a cheap isomorphism fingerprint
        let mut orders: Vec<usize> = g.elements().iter().map(|m| m.order()).collect();
        orders.sort_unstable();
        orders.dedup();
        println!("   element orders: {orders:?}");
    }

    println!("\ngenerators of the A7 image (hex-row format):");
    print!("{}", group_to_text(a7.dim(), a7.generators()));
}
