//! Extensions with elementary abelian kernel: the nonsplit C4, a split
//! semidirect product, complement search by cocycle-splitting linear algebra,
//! and the hyperplane-stabilizer scenario with its conclusion checker.
//!
//! ```bash
//! cargo run --example extension_complements
//! ```

use fusionkit::cohomology::{
    build_extension, complement_search, lemma32_conclusion_check, split_hyperplane_scenario,
    ExtElem, ExtensionSpec,
};
use fusionkit::modrep::{build_gl24_in_gl42, enumerate_group, MatF2};

fn main() {
    // the nonsplit extension of C2 by C2 is C4: no complement exists
    let c2 = enumerate_group("C2", &[MatF2::from_rows(&[0b10, 0b01])]).unwrap();
    let swap = c2.index_of(&MatF2::from_rows(&[0b10, 0b01])).unwrap() as u32;
    let c4 = build_extension(ExtensionSpec {
        name: "C4".into(),
        base_dim: 1,
        action_on_gens: vec![MatF2::identity(1); c2.generators().len()],
        quotient: c2,
        cocycle: vec![(swap, swap, 1)],
    })
    .unwrap();
    println!(
        "nonsplit C2-by-C2: order {}, generator order {}, complement: {:?}",
        c4.order(),
        c4.elem_order(ExtElem { quot: swap, vec: 0 }),
        complement_search(&c4).unwrap().map(|c| c.len())
    );

    // the split extension of F2^2 by GL2(2) is S4: the canonical complement
    let gl22 = enumerate_group(
        "GL2(2)",
        &[
            MatF2::from_rows(&[0b11, 0b10]),
            MatF2::from_rows(&[0b01, 0b11]),
        ],
    )
    .unwrap();
    let s4 = build_extension(ExtensionSpec {
        name: "S4".into(),
        base_dim: 2,
        action_on_gens: gl22.generators().to_vec(),
        quotient: gl22,
        cocycle: Vec::new(),
    })
    .unwrap();
    let comp = complement_search(&s4)
        .unwrap()
        .expect("split by construction");
    println!(
        "split F2^2-by-GL2(2): order {}, complement of order {}",
        s4.order(),
        comp.len()
    );

    // the hyperplane scenario over GL2(4): E = <x>F of order 32, U of order
    // 16, and the invariant complement Y of order 256 inside X
    let (h, x, f_basis, g_part) = split_hyperplane_scenario(&build_gl24_in_gl42()).unwrap();
    println!(
        "\nhyperplane scenario over GL2(4): extension order {}",
        h.order()
    );
    let verdict = lemma32_conclusion_check(&h, x, &f_basis, &g_part).unwrap();
    println!(
        "  assumptions: transitive {}",
        verdict.assumption_transitive
    );
    println!(
        "               commutant inside {}",
        verdict.assumption_commutant_inside
    );
    println!("               H^1 = 0 {}", verdict.assumption_h1_zero);
    println!("  |X| = {}", verdict.x_order);
    println!(
        "  X/V elementary abelian: {}",
        verdict.xbar_elementary_abelian
    );
    println!(
        "  [x,-] bijective: {}, equivariant: {}",
        verdict.commutator_bijective, verdict.commutator_equivariant
    );
    println!(
        "  invariant complement Y: found {}, order {}, elementary abelian {}",
        verdict.complement_found, verdict.y_order, verdict.y_elementary_abelian
    );
    println!(
        "  homocyclic branch (exponent 4 with Omega_1 = V): {}",
        verdict.y_homocyclic_exponent4_omega1_v
    );
}
