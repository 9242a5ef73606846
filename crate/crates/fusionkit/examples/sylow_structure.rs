//! Build the four builtin Sylow 2-groups and print their structural
//! invariants: centers, maximal elementary abelians, Thompson subgroups,
//! 2-ranks, and the fusion of central involutions under an order-3 symmetry.
//!
//! ```bash
//! cargo run --example sylow_structure
//! ```

use fusionkit::pcgroup::{
    builtin_sylow, characteristic_subgroup, involution_classes_under, map_from_generator_images,
    max_elementary_abelians, thompson_subgroup, two_rank, CharacteristicKind, SylowKind,
};

fn main() {
    for kind in SylowKind::ALL {
        let g = builtin_sylow(kind);
        println!("== {} (order {})", kind.label(), g.order());
        let z = characteristic_subgroup(&g, CharacteristicKind::Center);
        println!("   center          {}", z.format(&g));
        for (name, kind) in [
            ("derived", CharacteristicKind::Derived),
            ("Frattini", CharacteristicKind::Frattini),
            ("Omega_1", CharacteristicKind::Omega1),
            ("agemo_1", CharacteristicKind::Agemo1),
        ] {
            let h = characteristic_subgroup(&g, kind);
            println!("   {name:<15} order {}", h.order());
        }
        let maxes = max_elementary_abelians(&g);
        println!(
            "   A(G)            {} subgroups of order {}",
            maxes.len(),
            maxes[0].order()
        );
        for m in &maxes {
            println!("                   {}", m.format(&g));
        }
        let j = thompson_subgroup(&g);
        println!("   J(G)            {} (order {})", j.format(&g), j.order());
        println!("   2-rank          {}", two_rank(&g));
    }

    // The diagonal order-3 symmetry of T0 (a torus element of L3(4) acting on
    // its Sylow subgroup) fuses the three central involutions.
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
    let classes = involution_classes_under(&t0, &[map]).expect("verified automorphism");
    println!("\ninvolution classes of T0 under <inner, diagonal order-3 map>:");
    for class in classes {
        let members: Vec<String> = class.iter().map(|&x| t0.format_elem(x)).collect();
        println!("   {{{}}}", members.join(", "));
    }
}
