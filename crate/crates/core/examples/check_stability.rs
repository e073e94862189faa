//! Checks every stability concept on each partition of the three-player star
//! and prints the first violation found.

use hedonic_robust::instances::make_star;
use hedonic_robust::oracle::enumerate_partitions;
use hedonic_robust::{satisfies, Concept};

fn main() -> hedonic_robust::Result<()> {
    let star = make_star(2);
    println!("friendships: {:?}", star.friendship_edges());
    for pi in enumerate_partitions(star.n())? {
        println!("{pi}");
        for concept in Concept::ALL {
            match satisfies(&star, &pi, concept)? {
                None => println!("  {concept:<3} holds"),
                Some(v) => println!("  {concept:<3} fails: {v}"),
            }
        }
    }
    Ok(())
}
