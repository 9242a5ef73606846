//! The fusion system of `S4` over its dihedral Sylow 2-subgroup: subgroup
//! classification, automizers, local subsystems, core subgroups, generation
//! and center control.
//!
//! ```bash
//! cargo run --example fusion_systems
//! ```

use fusionkit::fusion::{oracle_equivalence_sweep, symmetric4, FusionSystem, LocalSubsystemKind};

fn main() {
    let f = FusionSystem::of_group(symmetric4()).expect("S4 is desk scale");
    println!(
        "F_S(S4): |G| = {}, |S| = {}",
        f.group().order(),
        f.sylow().order()
    );

    let subs = f.all_sylow_subgroups().expect("lattice is small");
    println!("subgroups of S: {}", subs.len());
    for p in &subs {
        let flags = f.classify_subgroup(p).unwrap();
        let auts = f.aut(p).unwrap();
        println!(
            "  order {:>2}: |Aut_F| = {:>2}  fn={} fc={} centric={} radical={} wc={}",
            p.order(),
            auts.len(),
            flags.fully_normalized as u8,
            flags.fully_centralized as u8,
            flags.centric as u8,
            flags.radical as u8,
            flags.weakly_closed as u8,
        );
    }

    let (o2, z) = f.core_subgroups().unwrap();
    println!(
        "O_2(F) has order {}, Z(F) has order {}",
        o2.order(),
        z.order()
    );
    println!("constrained: {}", f.constrained_check().unwrap());
    println!(
        "generated by automizers of S and the centric-radical subgroups: {}",
        f.alperin_generation_check().unwrap()
    );
    println!(
        "center control at S: {}",
        f.burnside_control_check(&f.sylow().clone()).unwrap()
    );

    // the centralizer subsystem of the center of S lives on all of S
    let zs = f.sylow().center();
    let view = f
        .local_subsystem(&zs, LocalSubsystemKind::Centralizer)
        .unwrap();
    println!(
        "centralizer subsystem of Z(S): carrier order {}, saturation precondition {}",
        view.carrier.order(),
        view.precondition_ok
    );

    let oracle = oracle_equivalence_sweep(&f).unwrap();
    println!(
        "dual-route hom-set comparison: {} pairs, {} discrepancies",
        oracle.cases,
        oracle.failures.len()
    );
}
