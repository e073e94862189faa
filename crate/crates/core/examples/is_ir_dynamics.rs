//! IS-deviation dynamics on a random symmetric game, with the potential
//! printed at every step.

use hedonic_robust::deciders::{construct_is_ir_robust, friendship_pairs};
use hedonic_robust::instances::{gen_random_additive, gen_random_friend_oriented};
use hedonic_robust::{is_robust, satisfies, Concept};

fn main() -> hedonic_robust::Result<()> {
    let g = gen_random_friend_oriented(12, 0.3, 42)?;
    let (pi, trace) = construct_is_ir_robust(&g)?;
    for s in &trace.steps {
        let to = s
            .target
            .as_ref()
            .map_or("alone".to_string(), |t| t.to_string());
        println!(
            "{} {} -> {to}: {} -> {}",
            s.player, s.origin, s.potential_before, s.potential_after
        );
    }
    println!("final {pi}, {} friendship pairs", friendship_pairs(&g, &pi));
    assert!(satisfies(&g, &pi, Concept::Is)?.is_none());
    assert!(is_robust(&g, &pi, Concept::Ir, 3)?.holds());

    let a = gen_random_additive(10, -4, 4, 7)?;
    let (pi, trace) = construct_is_ir_robust(&a)?;
    println!("additive: {pi} after {} steps", trace.steps.len());
    Ok(())
}
