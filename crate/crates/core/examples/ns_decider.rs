//! Deciding NS-robustness from the friendship graph alone, checked against
//! brute force.

use hedonic_robust::deciders::decide_ns_robust;
use hedonic_robust::instances::{gen_random_friend_oriented, make_cycle, make_star};
use hedonic_robust::oracle::oracle_find_robust;
use hedonic_robust::Concept;

fn main() -> hedonic_robust::Result<()> {
    for (name, g) in [("star", make_star(2)), ("cycle6", make_cycle(6))] {
        for k in 1..=2 {
            let d = decide_ns_robust(&g, k)?;
            println!(
                "{name} k={k}: {}",
                d.map_or("none".into(), |p| p.to_string())
            );
        }
    }

    let mut agree = 0;
    for seed in 0..40 {
        let g = gen_random_friend_oriented(7, 0.5, seed)?;
        let fast = decide_ns_robust(&g, 1)?.is_some();
        let slow = !oracle_find_robust(&g, Concept::Ns, 1, false)?.is_empty();
        assert_eq!(fast, slow, "seed {seed}");
        agree += 1;
    }
    println!("decider and oracle agree on {agree} random 7-player games");
    Ok(())
}
