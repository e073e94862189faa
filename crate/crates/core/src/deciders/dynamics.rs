//! IS-deviation dynamics from the all-singleton partition.
//!
//! Members only ever accept newcomers they weigh non-negatively, so every
//! coalition along the run consists of mutually non-negative pairs; the
//! final partition is individually stable and stays individually rational
//! after any deletion. In a symmetric game each move raises the total
//! in-coalition weight by exactly the mover's utility gain.

use crate::error::{Error, Result};
use crate::game::{Coalition, Game, Partition, Player};
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynamicsStep {
    pub player: Player,
    pub origin: Coalition,
    /// `None` when the player leaves to stand alone.
    pub target: Option<Coalition>,
    pub potential_before: i64,
    pub potential_after: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DynamicsTrace {
    pub steps: Vec<DynamicsStep>,
}

/// Sum of `w(i, j)` over unordered pairs sharing a coalition.
pub fn potential(game: &Game, partition: &Partition) -> i64 {
    partition
        .coalitions()
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .map(|(a, &i)| c[a + 1..].iter().map(|&j| game.weight(i, j)).sum::<i64>())
                .sum::<i64>()
        })
        .sum()
}

/// Number of friendship-graph edges inside coalitions.
pub fn friendship_pairs(game: &Game, partition: &Partition) -> usize {
    partition
        .coalitions()
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .map(|(a, &i)| {
                    c[a + 1..]
                        .iter()
                        .filter(|&&j| game.is_mutual_friend(i, j))
                        .count()
                })
                .sum::<usize>()
        })
        .sum()
}

/// Best IS-deviation of `i`: highest utility, earliest coalition on ties,
/// standing alone only if strictly better than every coalition move.
fn best_is_move(game: &Game, partition: &Partition, i: Player) -> Option<Option<usize>> {
    let own = partition.index_of(i).expect("partition covers the game");
    let current = game.value_of(i, &partition.coalitions()[own]);
    let mut best: Option<(i64, Option<usize>)> = None;
    for (k, target) in partition.coalitions().iter().enumerate() {
        if k == own {
            continue;
        }
        let value = game.value_of(i, target);
        if value > current
            && target.iter().all(|&j| game.weight(j, i) >= 0)
            && best.is_none_or(|(b, _)| value > b)
        {
            best = Some((value, Some(k)));
        }
    }
    if current < 0 && best.is_none_or(|(b, _)| 0 > b) {
        best = Some((0, None));
    }
    best.map(|(_, target)| target)
}

pub fn construct_is_ir_robust(game: &Game) -> Result<(Partition, DynamicsTrace)> {
    construct_is_ir_robust_with(game, &Limits::default())
}

/// Runs IS-deviation dynamics, always moving the lowest-indexed player that
/// has a deviation. Fails on asymmetric games, and with
/// [`Error::StepBudget`] if `limits.dynamics_step_budget` moves are not
/// enough.
pub fn construct_is_ir_robust_with(
    game: &Game,
    limits: &Limits,
) -> Result<(Partition, DynamicsTrace)> {
    if !game.is_symmetric() {
        return Err(Error::Unsupported(
            "IS-deviation dynamics require a symmetric game".into(),
        ));
    }
    let mut partition = Partition::singletons(game.n());
    let mut trace = DynamicsTrace::default();
    let mut phi = potential(game, &partition);
    loop {
        let Some((player, target)) = game
            .players()
            .find_map(|i| best_is_move(game, &partition, i).map(|t| (i, t)))
        else {
            return Ok((partition, trace));
        };
        if trace.steps.len() as u64 >= limits.dynamics_step_budget {
            return Err(Error::StepBudget(limits.dynamics_step_budget));
        }
        let origin = partition.coalition_of(player).expect("covered").clone();
        let target_coalition = target.map(|k| partition.coalitions()[k].clone());
        partition = partition.moved(player, target);
        let after = potential(game, &partition);
        trace.steps.push(DynamicsStep {
            player,
            origin,
            target: target_coalition,
            potential_before: phi,
            potential_after: after,
        });
        phi = after;
    }
}
