//! Single-deletion CIS-robustness: elimination sequence, player split,
//! candidate partition and the structural conditions.

use hedonic_robust::deciders::{check_cis_conditions, decide_cis_robust_k1_detailed};
use hedonic_robust::instances::{fig2_left, fig2_right, make_path};
use hedonic_robust::Limits;

fn main() -> hedonic_robust::Result<()> {
    for (name, g) in [
        ("left", fig2_left()),
        ("right", fig2_right()),
        ("path6", make_path(6)),
    ] {
        let d = decide_cis_robust_k1_detailed(&g, &Limits::default())?;
        println!("{name}:");
        for p in &d.sequence.pairs {
            println!("  pair ({}, {}) by {:?}", p.leaf, p.partner, p.rule);
        }
        let split = &d.decomposition;
        println!(
            "  S={:?} B={:?} R={:?}",
            split.single_friend.keys().collect::<Vec<_>>(),
            split.branching,
            split.remainder
        );
        println!("  candidate {}", d.candidate);
        match &d.verdict.counterexample {
            None => println!("  robust"),
            Some(c) => println!("  not robust: delete {:?}, {}", c.deleted, c.violation),
        }
        let c = check_cis_conditions(&g)?;
        println!("  conditions {c:?}");
    }
    Ok(())
}
