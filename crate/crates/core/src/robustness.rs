//! Robustness of a partition under deletion of up to `k` players.
//!
//! A partition is robust for a concept when it satisfies the concept and,
//! for every deletion set of size `1..=k`, the surviving coalitions still
//! satisfy it in the induced subgame. Deletion sets are visited by size,
//! then lexicographically, so the reported counterexample is a smallest one.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::game::{Game, Partition, Player};
use crate::limits::Limits;
use crate::stability::{satisfies_with, Concept, Violation};

/// A deletion set and the violation it exposes. Players carry their
/// original indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub deleted: Vec<Player>,
    pub violation: Violation,
}

impl Counterexample {
    /// Replays the counterexample in the induced subgame.
    pub fn is_valid_for(&self, game: &Game, partition: &Partition) -> bool {
        let Ok(sub) = game.restrict(&self.deleted) else {
            return false;
        };
        let Ok(local) = sub.localize(&restrict_partition(partition, &self.deleted)) else {
            return false;
        };
        if self
            .violation
            .players()
            .iter()
            .any(|&p| sub.local_index(p).is_none())
        {
            return false;
        }
        let violation = self
            .violation
            .relabel(|p| sub.local_index(p).expect("checked above"));
        violation.is_valid_for(&sub.game, &local)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessVerdict {
    pub concept: Concept,
    pub k: usize,
    pub counterexample: Option<Counterexample>,
}

impl RobustnessVerdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// `π_{-S}`: every coalition minus the removed players, empty ones dropped.
pub fn restrict_partition(partition: &Partition, removed: &[Player]) -> Partition {
    let coalitions = partition
        .coalitions()
        .iter()
        .map(|c| {
            c.iter()
                .copied()
                .filter(|p| !removed.contains(p))
                .collect::<Vec<_>>()
        })
        .filter(|c| !c.is_empty())
        .collect();
    Partition::new(coalitions).expect("sub-coalitions of a partition stay disjoint")
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of deletion sets of size `0..=k` on `n` players, saturating.
pub fn deletion_set_count(n: usize, k: usize) -> u64 {
    (0..=k.min(n)).fold(0u64, |acc, s| acc.saturating_add(binomial(n, s)))
}

/// Checks `concept` on the subgame left after deleting `deleted`.
pub fn check_after_deletion(
    game: &Game,
    partition: &Partition,
    concept: Concept,
    deleted: &[Player],
    limits: &Limits,
) -> Result<Option<Counterexample>> {
    let sub = game.restrict(deleted)?;
    let local = sub.localize(&restrict_partition(partition, deleted))?;
    Ok(
        satisfies_with(&sub.game, &local, concept, limits)?.map(|v| Counterexample {
            deleted: deleted.to_vec(),
            violation: v.relabel(|l| sub.original[l]),
        }),
    )
}

/// Visits deletion sets of sizes `0..=max_size` in order until one fails.
fn first_failure(
    game: &Game,
    partition: &Partition,
    concept: Concept,
    max_size: usize,
    limits: &Limits,
) -> Result<Option<Counterexample>> {
    partition.check_covers(game.n())?;
    let n = game.n();
    let total = deletion_set_count(n, max_size);
    if total > limits.robustness_budget {
        return Err(Error::Capacity(format!(
            "{total} deletion sets exceed the budget of {}",
            limits.robustness_budget
        )));
    }
    for size in 0..=max_size.min(n) {
        for deleted in (0..n).combinations(size) {
            if let Some(c) = check_after_deletion(game, partition, concept, &deleted, limits)? {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

pub fn is_robust(
    game: &Game,
    partition: &Partition,
    concept: Concept,
    k: usize,
) -> Result<RobustnessVerdict> {
    is_robust_with(game, partition, concept, k, &Limits::default())
}

pub fn is_robust_with(
    game: &Game,
    partition: &Partition,
    concept: Concept,
    k: usize,
    limits: &Limits,
) -> Result<RobustnessVerdict> {
    if k == 0 {
        return Err(Error::Precondition("robustness needs k >= 1".into()));
    }
    if k > game.n() {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds the player count {}",
            game.n()
        )));
    }
    Ok(RobustnessVerdict {
        concept,
        k,
        counterexample: first_failure(game, partition, concept, k, limits)?,
    })
}

/// Largest `k` the partition is robust for; `0` when it satisfies the
/// concept but breaks after one deletion, `-1` when it fails outright.
pub fn robustness_margin(game: &Game, partition: &Partition, concept: Concept) -> Result<i64> {
    robustness_margin_with(game, partition, concept, &Limits::default())
}

pub fn robustness_margin_with(
    game: &Game,
    partition: &Partition,
    concept: Concept,
    limits: &Limits,
) -> Result<i64> {
    let n = game.n();
    Ok(match first_failure(game, partition, concept, n, limits)? {
        Some(c) => c.deleted.len() as i64 - 1,
        None => n as i64,
    })
}
