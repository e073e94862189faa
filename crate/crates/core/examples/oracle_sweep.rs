//! Counts robust partitions by brute force for every graph on four players.

use std::collections::BTreeMap;

use hedonic_robust::instances::example2;
use hedonic_robust::oracle::{
    enumerate_partitions, oracle_exists_is_and_ir_robust, oracle_find_robust,
};
use hedonic_robust::{Concept, Game};

fn main() -> hedonic_robust::Result<()> {
    let n = 4;
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut counts: BTreeMap<Concept, usize> = BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Game::friend_oriented(n, &edges)?;
        for c in Concept::ALL {
            if !oracle_find_robust(&g, c, 1, false)?.is_empty() {
                *counts.entry(c).or_default() += 1;
            }
        }
    }
    println!("{} partitions per game", enumerate_partitions(n)?.count());
    for (c, k) in counts {
        println!("{c:<3}: {k} of 64 graphs admit a 1-robust partition");
    }

    let ex = example2();
    println!(
        "directed example, IS and IR-robust: {:?}",
        oracle_exists_is_and_ir_robust(&ex, 1)?
    );
    Ok(())
}
