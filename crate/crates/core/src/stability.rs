//! Checkers for individual rationality, Nash / individual / contractual
//! individual stability and core stability of a fixed partition.
//!
//! Every finder is deterministic: players are scanned in increasing index
//! order, target coalitions in partition order, and the move to the empty
//! coalition (standing alone) is tried last.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Coalition, Game, Partition, Player};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Concept {
    Ir,
    Ns,
    Is,
    Cis,
    Cr,
}

impl Concept {
    pub const ALL: [Concept; 5] = [
        Concept::Ir,
        Concept::Ns,
        Concept::Is,
        Concept::Cis,
        Concept::Cr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Concept::Ir => "ir",
            Concept::Ns => "ns",
            Concept::Is => "is",
            Concept::Cis => "cis",
            Concept::Cr => "cr",
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Concept {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ir" => Ok(Concept::Ir),
            "ns" => Ok(Concept::Ns),
            "is" => Ok(Concept::Is),
            "cis" => Ok(Concept::Cis),
            "cr" | "core" => Ok(Concept::Cr),
            other => Err(Error::Parse(format!("unknown concept {other:?}"))),
        }
    }
}

/// Which acceptance rules a single-player move must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeviationKind {
    /// Strict improvement only.
    Ns,
    /// Plus: every member of the target coalition accepts.
    Is,
    /// Plus: every member of the abandoned coalition accepts.
    Cis,
}

impl DeviationKind {
    pub fn concept(self) -> Concept {
        match self {
            DeviationKind::Ns => Concept::Ns,
            DeviationKind::Is => Concept::Is,
            DeviationKind::Cis => Concept::Cis,
        }
    }
}

/// A player moving out of `origin` into `target` (`None` = standing alone).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeviationWitness {
    pub player: Player,
    pub origin: Coalition,
    pub target: Option<Coalition>,
    pub kind: DeviationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockingWitness {
    pub coalition: Coalition,
}

/// Why a partition fails a stability concept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    /// The player strictly prefers being alone.
    NotIndividuallyRational {
        player: Player,
    },
    Deviation(DeviationWitness),
    Blocking(BlockingWitness),
}

impl Violation {
    pub fn player(&self) -> Option<Player> {
        match self {
            Violation::NotIndividuallyRational { player } => Some(*player),
            Violation::Deviation(d) => Some(d.player),
            Violation::Blocking(_) => None,
        }
    }

    /// Every player the witness mentions.
    pub fn players(&self) -> Vec<Player> {
        match self {
            Violation::NotIndividuallyRational { player } => vec![*player],
            Violation::Deviation(d) => {
                let mut all = vec![d.player];
                all.extend(d.origin.iter());
                all.extend(d.target.iter().flat_map(|t| t.iter()));
                all
            }
            Violation::Blocking(b) => b.coalition.to_vec(),
        }
    }

    /// Renames every player through `map` (used to lift subgame witnesses).
    pub fn relabel(&self, map: impl Fn(Player) -> Player) -> Violation {
        let coalition = |c: &Coalition| Coalition::new(c.iter().map(|&p| map(p)).collect());
        match self {
            Violation::NotIndividuallyRational { player } => Violation::NotIndividuallyRational {
                player: map(*player),
            },
            Violation::Deviation(d) => Violation::Deviation(DeviationWitness {
                player: map(d.player),
                origin: coalition(&d.origin),
                target: d.target.as_ref().map(coalition),
                kind: d.kind,
            }),
            Violation::Blocking(b) => Violation::Blocking(BlockingWitness {
                coalition: coalition(&b.coalition),
            }),
        }
    }

    /// Re-checks the witness against the definitions on `game` / `partition`.
    pub fn is_valid_for(&self, game: &Game, partition: &Partition) -> bool {
        match self {
            Violation::NotIndividuallyRational { player } => partition
                .coalition_of(*player)
                .is_some_and(|c| game.value_of(*player, c) < 0),
            Violation::Deviation(d) => {
                let Some(origin) = partition.coalition_of(d.player) else {
                    return false;
                };
                if origin != &d.origin {
                    return false;
                }
                let target: &[Player] = match &d.target {
                    Some(t) => {
                        let Some(k) = t.first().and_then(|&m| partition.index_of(m)) else {
                            return false;
                        };
                        if &partition.coalitions()[k] != t || t.contains(d.player) {
                            return false;
                        }
                        t
                    }
                    None => &[],
                };
                is_deviation(game, d.player, origin, target, d.kind)
            }
            Violation::Blocking(b) => {
                !b.coalition.is_empty()
                    && b.coalition.iter().all(|&i| {
                        partition.coalition_of(i).is_some_and(|own| {
                            game.value_of(i, &b.coalition) > game.value_of(i, own)
                        })
                    })
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotIndividuallyRational { player } => {
                write!(f, "player {player} prefers to be alone")
            }
            Violation::Deviation(d) => {
                let kind = d.kind.concept();
                match &d.target {
                    Some(t) => write!(
                        f,
                        "{kind}-deviation of {} from {} to {}",
                        d.player, d.origin, t
                    ),
                    None => write!(
                        f,
                        "{kind}-deviation of {} from {} to the empty set",
                        d.player, d.origin
                    ),
                }
            }
            Violation::Blocking(b) => write!(f, "coalition {} strongly blocks", b.coalition),
        }
    }
}

fn check_partition(game: &Game, partition: &Partition) -> Result<()> {
    partition.check_covers(game.n())
}

/// Whether moving `player` from `origin` into `target` is a deviation of `kind`.
/// `target` excludes the player; an empty slice stands for being alone.
fn is_deviation(
    game: &Game,
    player: Player,
    origin: &[Player],
    target: &[Player],
    kind: DeviationKind,
) -> bool {
    if game.value_of(player, target) <= game.value_of(player, origin) {
        return false;
    }
    if kind == DeviationKind::Ns {
        return true;
    }
    if target.iter().any(|&j| game.weight(j, player) < 0) {
        return false;
    }
    if kind == DeviationKind::Is {
        return true;
    }
    origin
        .iter()
        .all(|&j| j == player || game.weight(j, player) <= 0)
}

/// First player whose utility for their own coalition is negative.
pub fn individually_rational_violation(
    game: &Game,
    partition: &Partition,
) -> Result<Option<Player>> {
    check_partition(game, partition)?;
    Ok(game.players().find(|&i| {
        let own = partition
            .coalition_of(i)
            .expect("partition covers the game");
        game.value_of(i, own) < 0
    }))
}

pub fn is_individually_rational(game: &Game, partition: &Partition) -> Result<bool> {
    Ok(individually_rational_violation(game, partition)?.is_none())
}

pub fn find_deviation(
    game: &Game,
    partition: &Partition,
    kind: DeviationKind,
) -> Result<Option<DeviationWitness>> {
    check_partition(game, partition)?;
    for i in game.players() {
        let own_index = partition.index_of(i).expect("partition covers the game");
        let origin = &partition.coalitions()[own_index];
        for (k, target) in partition.coalitions().iter().enumerate() {
            if k != own_index && is_deviation(game, i, origin, target, kind) {
                return Ok(Some(DeviationWitness {
                    player: i,
                    origin: origin.clone(),
                    target: Some(target.clone()),
                    kind,
                }));
            }
        }
        if is_deviation(game, i, origin, &[], kind) {
            return Ok(Some(DeviationWitness {
                player: i,
                origin: origin.clone(),
                target: None,
                kind,
            }));
        }
    }
    Ok(None)
}

pub fn find_ns_deviation(game: &Game, partition: &Partition) -> Result<Option<DeviationWitness>> {
    find_deviation(game, partition, DeviationKind::Ns)
}

pub fn find_is_deviation(game: &Game, partition: &Partition) -> Result<Option<DeviationWitness>> {
    find_deviation(game, partition, DeviationKind::Is)
}

pub fn find_cis_deviation(game: &Game, partition: &Partition) -> Result<Option<DeviationWitness>> {
    find_deviation(game, partition, DeviationKind::Cis)
}

/// First strongly blocking coalition in size-then-lexicographic order.
///
/// With `size_cap == None` every subset is tried and a `None` answer means
/// the partition is core stable; that mode refuses games with more than
/// `limits.core_exhaustive_limit` players.
pub fn find_blocking_coalition(
    game: &Game,
    partition: &Partition,
    size_cap: Option<usize>,
    limits: &Limits,
) -> Result<Option<BlockingWitness>> {
    check_partition(game, partition)?;
    let n = game.n();
    if size_cap.is_none() && n > limits.core_exhaustive_limit {
        return Err(Error::Capacity(format!(
            "exhaustive core check on {n} players exceeds the limit of {}",
            limits.core_exhaustive_limit
        )));
    }
    let current: Vec<i64> = game
        .players()
        .map(|i| game.value_of(i, partition.coalition_of(i).expect("covered")))
        .collect();
    let max_size = size_cap.unwrap_or(n).min(n);
    for size in 1..=max_size {
        for subset in (0..n).combinations(size) {
            if subset
                .iter()
                .all(|&i| game.value_of(i, &subset) > current[i])
            {
                return Ok(Some(BlockingWitness {
                    coalition: Coalition::new(subset),
                }));
            }
        }
    }
    Ok(None)
}

/// Checks `concept` with default limits; `Ok(None)` means the partition satisfies it.
pub fn satisfies(
    game: &Game,
    partition: &Partition,
    concept: Concept,
) -> Result<Option<Violation>> {
    satisfies_with(game, partition, concept, &Limits::default())
}

pub fn satisfies_with(
    game: &Game,
    partition: &Partition,
    concept: Concept,
    limits: &Limits,
) -> Result<Option<Violation>> {
    Ok(match concept {
        Concept::Ir => individually_rational_violation(game, partition)?
            .map(|player| Violation::NotIndividuallyRational { player }),
        Concept::Ns => find_ns_deviation(game, partition)?.map(Violation::Deviation),
        Concept::Is => find_is_deviation(game, partition)?.map(Violation::Deviation),
        Concept::Cis => find_cis_deviation(game, partition)?.map(Violation::Deviation),
        Concept::Cr => find_blocking_coalition(game, partition, limits.core_size_cap, limits)?
            .map(Violation::Blocking),
    })
}
