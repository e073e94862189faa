//! Brute-force ground truth: enumerate every set partition of a small game
//! and keep the ones satisfying a robustness property.

use crate::error::{Error, Result};
use crate::game::{Game, Partition, Player};
use crate::limits::Limits;
use crate::robustness::is_robust_with;
use crate::stability::{satisfies_with, Concept};

/// Iterates all set partitions of `0..n` as restricted-growth strings in
/// lexicographic order, starting with the grand coalition (all zeros).
#[derive(Debug, Clone)]
pub struct PartitionIterator {
    rgs: Vec<usize>,
    /// `prefix_max[i] = max(rgs[0..=i])`.
    prefix_max: Vec<usize>,
    done: bool,
}

impl PartitionIterator {
    pub fn new(n: usize) -> Self {
        PartitionIterator {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            done: n == 0,
        }
    }

    /// Current restricted-growth string.
    pub fn labels(&self) -> &[usize] {
        &self.rgs
    }

    fn current(&self) -> Partition {
        let blocks = self.prefix_max.last().map_or(0, |m| m + 1);
        let mut coalitions: Vec<Vec<Player>> = vec![Vec::new(); blocks];
        for (p, &label) in self.rgs.iter().enumerate() {
            coalitions[label].push(p);
        }
        Partition::new(coalitions).expect("restricted-growth labels form a partition")
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for PartitionIterator {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let p = self.current();
        self.advance();
        Some(p)
    }
}

pub fn enumerate_partitions(n: usize) -> Result<PartitionIterator> {
    enumerate_partitions_with(n, &Limits::default())
}

pub fn enumerate_partitions_with(n: usize, limits: &Limits) -> Result<PartitionIterator> {
    if n == 0 {
        return Err(Error::Precondition(
            "partition enumeration needs n >= 1".into(),
        ));
    }
    if n > limits.oracle_limit {
        return Err(Error::Capacity(format!(
            "enumerating partitions of {n} players exceeds the limit of {}",
            limits.oracle_limit
        )));
    }
    Ok(PartitionIterator::new(n))
}

/// All partitions (or the first one, unless `find_all`) accepted by `keep`,
/// in enumeration order.
pub fn oracle_search(
    game: &Game,
    find_all: bool,
    limits: &Limits,
    mut keep: impl FnMut(&Partition) -> Result<bool>,
) -> Result<Vec<Partition>> {
    let mut found = Vec::new();
    for p in enumerate_partitions_with(game.n(), limits)? {
        if keep(&p)? {
            found.push(p);
            if !find_all {
                break;
            }
        }
    }
    Ok(found)
}

pub fn oracle_find_robust(
    game: &Game,
    concept: Concept,
    k: usize,
    find_all: bool,
) -> Result<Vec<Partition>> {
    oracle_find_robust_with(game, concept, k, find_all, &Limits::default())
}

pub fn oracle_find_robust_with(
    game: &Game,
    concept: Concept,
    k: usize,
    find_all: bool,
    limits: &Limits,
) -> Result<Vec<Partition>> {
    oracle_search(game, find_all, limits, |p| {
        Ok(is_robust_with(game, p, concept, k, limits)?.holds())
    })
}

/// First partition that is individually stable and IR-robust for `k`.
pub fn oracle_exists_is_and_ir_robust(game: &Game, k: usize) -> Result<Option<Partition>> {
    oracle_exists_is_and_ir_robust_with(game, k, &Limits::default())
}

pub fn oracle_exists_is_and_ir_robust_with(
    game: &Game,
    k: usize,
    limits: &Limits,
) -> Result<Option<Partition>> {
    let found = oracle_search(game, false, limits, |p| {
        Ok(satisfies_with(game, p, Concept::Is, limits)?.is_none()
            && is_robust_with(game, p, Concept::Ir, k, limits)?.holds())
    })?;
    Ok(found.into_iter().next())
}
