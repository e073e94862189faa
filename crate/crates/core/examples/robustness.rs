//! Robustness against player deletion: counterexamples and margins.

use hedonic_robust::instances::{make_clique, make_cycle, make_star};
use hedonic_robust::{is_robust, robustness_margin, Concept, Partition};

fn main() -> hedonic_robust::Result<()> {
    let star = make_star(2);
    let grand = Partition::grand(3);
    let verdict = is_robust(&star, &grand, Concept::Cis, 1)?;
    if let Some(c) = &verdict.counterexample {
        println!(
            "star {grand}: deleting {:?} exposes {}",
            c.deleted, c.violation
        );
        assert!(c.is_valid_for(&star, &grand));
    }

    for (name, game) in [
        ("triangle", make_clique(3)),
        ("4-cycle", make_cycle(4)),
        ("5-cycle", make_cycle(5)),
    ] {
        let pi = Partition::grand(game.n());
        for concept in [Concept::Ir, Concept::Ns, Concept::Cis] {
            println!(
                "{name:<8} {concept:<3} margin {}",
                robustness_margin(&game, &pi, concept)?
            );
        }
    }
    Ok(())
}
