//! CIS-robustness under deletion of a single player.
//!
//! The friendship graph is peeled by an outer elimination sequence: a pair
//! `(i, j)` is removed when `j` is the only remaining friend of `i` and
//! either `j` is a pseudo-center of what remains (E1) or `i` is a friend of
//! some player already removed (E2). Every CIS-robust partition must keep
//! these pairs together. The leftover players split into `S` (exactly one
//! friend outside the pairs), `B` (two or more friends among the rest) and
//! `R`, a candidate partition is assembled from that split, and the
//! candidate is verified by brute force over all single deletions.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::game::{Game, Partition, Player};
use crate::limits::Limits;
use crate::robustness::{is_robust_with, RobustnessVerdict};
use crate::stability::Concept;

use super::require_symmetric_friend_oriented;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EliminationRule {
    /// The partner is a pseudo-center of the remaining graph.
    E1,
    /// The leaf is a friend of a previously eliminated player.
    E2,
}

/// `partner` is the unique remaining friend of `leaf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EliminationPair {
    pub leaf: Player,
    pub partner: Player,
    pub rule: EliminationRule,
}

impl EliminationPair {
    /// The pair as an unordered `(min, max)` tuple.
    pub fn key(&self) -> (Player, Player) {
        (self.leaf.min(self.partner), self.leaf.max(self.partner))
    }

    pub fn contains(&self, p: Player) -> bool {
        self.leaf == p || self.partner == p
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EliminationSequence {
    pub pairs: Vec<EliminationPair>,
}

impl EliminationSequence {
    pub fn players(&self) -> BTreeSet<Player> {
        self.pairs
            .iter()
            .flat_map(|p| [p.leaf, p.partner])
            .collect()
    }

    pub fn pair_set(&self) -> BTreeSet<(Player, Player)> {
        self.pairs.iter().map(EliminationPair::key).collect()
    }
}

/// Split of the players into eliminated pairs `P`, single-friend players
/// `S` (with that friend), branching players `B` and the remainder `R`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub paired: BTreeSet<Player>,
    pub single_friend: BTreeMap<Player, Player>,
    pub branching: BTreeSet<Player>,
    pub remainder: BTreeSet<Player>,
}

/// Friendship graph with a set of removed vertices.
struct Peeling<'a> {
    adj: &'a [Vec<Player>],
    removed: Vec<bool>,
}

impl<'a> Peeling<'a> {
    fn new(adj: &'a [Vec<Player>]) -> Self {
        Peeling {
            adj,
            removed: vec![false; adj.len()],
        }
    }

    fn live_neighbours(&self, v: Player) -> impl Iterator<Item = Player> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .filter(move |&u| !self.removed[u])
    }

    fn degree(&self, v: Player) -> usize {
        self.live_neighbours(v).count()
    }

    fn is_pseudo_center(&self, j: Player) -> bool {
        self.live_neighbours(j)
            .filter(|&u| self.degree(u) > 1)
            .count()
            <= 1
    }

    /// The rule (E1 preferred) under which `(i, j)` may be eliminated next.
    fn rule_for(&self, i: Player) -> Option<EliminationPair> {
        if self.removed[i] {
            return None;
        }
        let mut live = self.live_neighbours(i);
        let j = live.next()?;
        if live.next().is_some() {
            return None;
        }
        let rule = if self.is_pseudo_center(j) {
            EliminationRule::E1
        } else if self.adj[i].iter().any(|&u| self.removed[u]) {
            EliminationRule::E2
        } else {
            return None;
        };
        Some(EliminationPair {
            leaf: i,
            partner: j,
            rule,
        })
    }

    fn candidates(&self) -> Vec<EliminationPair> {
        (0..self.adj.len())
            .filter_map(|i| self.rule_for(i))
            .collect()
    }

    fn remove(&mut self, pair: &EliminationPair) {
        self.removed[pair.leaf] = true;
        self.removed[pair.partner] = true;
    }

    fn restore(&mut self, pair: &EliminationPair) {
        self.removed[pair.leaf] = false;
        self.removed[pair.partner] = false;
    }
}

/// Whether `j` has at most one non-leaf neighbour in the friendship graph
/// induced by `within`.
pub fn is_pseudo_center(game: &Game, j: Player, within: &[Player]) -> Result<bool> {
    require_symmetric_friend_oriented(game, "pseudo-center test")?;
    if !within.contains(&j) {
        return Err(Error::Precondition(format!(
            "player {j} is not in the vertex set"
        )));
    }
    if let Some(&bad) = within.iter().find(|&&p| p >= game.n()) {
        return Err(Error::Precondition(format!("player {bad} out of range")));
    }
    let adj = game.adjacency();
    let mut peeling = Peeling::new(&adj);
    peeling.removed.iter_mut().for_each(|r| *r = true);
    for &p in within {
        peeling.removed[p] = false;
    }
    Ok(peeling.is_pseudo_center(j))
}

fn decompose_around(adj: &[Vec<Player>], paired: BTreeSet<Player>) -> Decomposition {
    let n = adj.len();
    let outside_p = |v: Player| {
        adj[v]
            .iter()
            .copied()
            .filter(|u| !paired.contains(u))
            .collect::<Vec<_>>()
    };
    let mut single_friend = BTreeMap::new();
    for v in (0..n).filter(|v| !paired.contains(v)) {
        if let [f] = outside_p(v)[..] {
            single_friend.insert(v, f);
        }
    }
    let rest = |v: &Player| !paired.contains(v) && !single_friend.contains_key(v);
    let branching: BTreeSet<Player> = (0..n)
        .filter(rest)
        .filter(|&v| adj[v].iter().filter(|u| rest(u)).count() >= 2)
        .collect();
    let remainder = (0..n)
        .filter(|v| rest(v) && !branching.contains(v))
        .collect();
    Decomposition {
        paired,
        single_friend,
        branching,
        remainder,
    }
}

/// Computes the `P/S/B/R` split for a given set of eliminated players.
pub fn decompose(game: &Game, paired: &BTreeSet<Player>) -> Result<Decomposition> {
    require_symmetric_friend_oriented(game, "decomposition")?;
    Ok(decompose_around(&game.adjacency(), paired.clone()))
}

/// Greedily extends an outer elimination sequence (smallest leaf first)
/// until no pair qualifies, then decomposes the players.
pub fn build_elimination_sequence(game: &Game) -> Result<(EliminationSequence, Decomposition)> {
    require_symmetric_friend_oriented(game, "elimination sequence")?;
    let adj = game.adjacency();
    let mut peeling = Peeling::new(&adj);
    let mut seq = EliminationSequence::default();
    while let Some(pair) = (0..game.n()).find_map(|i| peeling.rule_for(i)) {
        peeling.remove(&pair);
        seq.pairs.push(pair);
    }
    let decomposition = decompose_around(&adj, seq.players());
    Ok((seq, decomposition))
}

/// Everything the single-deletion CIS decider computed along the way.
#[derive(Debug, Clone)]
pub struct CisDecision {
    pub sequence: EliminationSequence,
    pub decomposition: Decomposition,
    /// Whether some eliminated player is a friend of every branching player.
    pub pairs_branching_with_single: bool,
    pub candidate: Partition,
    pub verdict: RobustnessVerdict,
}

impl CisDecision {
    pub fn partition(&self) -> Option<&Partition> {
        self.verdict.holds().then_some(&self.candidate)
    }
}

fn assemble_candidate(
    game: &Game,
    seq: &EliminationSequence,
    d: &Decomposition,
) -> (bool, Partition) {
    let mut coalitions: Vec<Vec<Player>> =
        seq.pairs.iter().map(|p| vec![p.leaf, p.partner]).collect();
    coalitions.extend(d.remainder.iter().map(|&r| vec![r]));
    let hub = d
        .paired
        .iter()
        .any(|&i| d.branching.iter().all(|&b| game.is_friend(i, b)));
    if hub {
        let mut used = BTreeSet::new();
        for &b in &d.branching {
            let s_friends: Vec<Player> = d
                .single_friend
                .iter()
                .filter(|&(_, &f)| f == b)
                .map(|(&s, _)| s)
                .collect();
            match s_friends[..] {
                [s] if used.insert(s) => coalitions.push(vec![b, s]),
                // no unique partner: left alone, verification rejects it
                _ => coalitions.push(vec![b]),
            }
        }
        coalitions.extend(
            d.single_friend
                .keys()
                .filter(|s| !used.contains(*s))
                .map(|&s| vec![s]),
        );
    } else {
        if !d.branching.is_empty() {
            coalitions.push(d.branching.iter().copied().collect());
        }
        coalitions.extend(d.single_friend.keys().map(|&s| vec![s]));
    }
    let partition =
        Partition::covering(game.n(), coalitions).expect("P, S, B and R split the players");
    (hub, partition)
}

pub fn decide_cis_robust_k1_detailed(game: &Game, limits: &Limits) -> Result<CisDecision> {
    let (sequence, decomposition) = build_elimination_sequence(game)?;
    let (hub, candidate) = assemble_candidate(game, &sequence, &decomposition);
    let verdict = if game.n() == 0 {
        RobustnessVerdict {
            concept: Concept::Cis,
            k: 1,
            counterexample: None,
        }
    } else {
        is_robust_with(game, &candidate, Concept::Cis, 1, limits)?
    };
    Ok(CisDecision {
        sequence,
        decomposition,
        pairs_branching_with_single: hub,
        candidate,
        verdict,
    })
}

/// A CIS-robust partition under deletion of one player, or `None` when the
/// game has none.
pub fn decide_cis_robust_k1(game: &Game) -> Result<Option<Partition>> {
    let d = decide_cis_robust_k1_detailed(game, &Limits::default())?;
    Ok(d.partition().cloned())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exploration {
    /// Every maximal elimination sequence was enumerated.
    Exhaustive,
    /// Only the canonical order plus random re-orderings were tried.
    Probed,
}

/// The four conditions characterizing games with a CIS-robust partition
/// for a single deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CisConditions {
    pub exploration: Exploration,
    /// Distinct pair sets reached by the explored maximal sequences.
    pub maximal_pair_sets: usize,
    /// (i) all maximal sequences eliminate the same pairs.
    pub pair_set_invariant: bool,
    /// (ii) no player of one pair is a friend of both players of another.
    pub no_pair_befriends_both: bool,
    /// (iii) no friendship between `P` and `R`.
    pub no_paired_remainder_friendship: bool,
    /// (iv) if some `P` player befriends all of `B`, each `B` player has
    /// exactly one friend in `S` and an enemy in every pair.
    pub branching_structure: bool,
}

impl CisConditions {
    pub fn all_hold(&self) -> bool {
        self.pair_set_invariant
            && self.no_pair_befriends_both
            && self.no_paired_remainder_friendship
            && self.branching_structure
    }
}

type PairSet = BTreeSet<(Player, Player)>;

fn explore_all(
    peeling: &mut Peeling<'_>,
    current: &mut PairSet,
    seen: &mut HashSet<PairSet>,
    out: &mut BTreeSet<PairSet>,
) {
    if !seen.insert(current.clone()) {
        return;
    }
    let candidates = peeling.candidates();
    if candidates.is_empty() {
        out.insert(current.clone());
        return;
    }
    for pair in candidates {
        peeling.remove(&pair);
        current.insert(pair.key());
        explore_all(peeling, current, seen, out);
        current.remove(&pair.key());
        peeling.restore(&pair);
    }
}

fn probe(adj: &[Vec<Player>], rng: &mut ChaCha8Rng) -> PairSet {
    let mut peeling = Peeling::new(adj);
    let mut pairs = PairSet::new();
    loop {
        let candidates = peeling.candidates();
        let Some(pair) = candidates.choose(rng) else {
            return pairs;
        };
        peeling.remove(pair);
        pairs.insert(pair.key());
    }
}

/// Pair sets of maximal elimination sequences: all of them when the game
/// has at most `limits.elimination_exhaustive_limit` players, otherwise the
/// canonical one plus seeded random re-orderings.
pub fn maximal_pair_sets(game: &Game, limits: &Limits) -> Result<(Exploration, BTreeSet<PairSet>)> {
    require_symmetric_friend_oriented(game, "elimination sequences")?;
    let adj = game.adjacency();
    let mut out = BTreeSet::new();
    if game.n() <= limits.elimination_exhaustive_limit {
        let mut peeling = Peeling::new(&adj);
        explore_all(
            &mut peeling,
            &mut PairSet::new(),
            &mut HashSet::new(),
            &mut out,
        );
        return Ok((Exploration::Exhaustive, out));
    }
    out.insert(build_elimination_sequence(game)?.0.pair_set());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..limits.elimination_probes {
        out.insert(probe(&adj, &mut rng));
    }
    Ok((Exploration::Probed, out))
}

pub fn check_cis_conditions(game: &Game) -> Result<CisConditions> {
    check_cis_conditions_with(game, &Limits::default())
}

pub fn check_cis_conditions_with(game: &Game, limits: &Limits) -> Result<CisConditions> {
    let (exploration, sets) = maximal_pair_sets(game, limits)?;
    // (ii) to (iv) are read off the canonical sequence; they only matter
    // when (i) holds, and then every sequence agrees with it
    let (seq, d) = build_elimination_sequence(game)?;
    let pairs = seq.pair_set();

    let no_pair_befriends_both = pairs.iter().all(|&(a, b)| {
        pairs
            .iter()
            .filter(|&&other| other != (a, b))
            .all(|&(u, v)| {
                [a, b]
                    .iter()
                    .all(|&i| !(game.is_friend(i, u) && game.is_friend(i, v)))
            })
    });
    let no_paired_remainder_friendship = d
        .paired
        .iter()
        .all(|&i| d.remainder.iter().all(|&j| !game.is_friend(i, j)));
    let hub = d
        .paired
        .iter()
        .any(|&i| d.branching.iter().all(|&b| game.is_friend(i, b)));
    let branching_structure = !hub
        || d.branching.iter().all(|&j| {
            let s_friends = d
                .single_friend
                .keys()
                .filter(|&&s| game.is_friend(j, s))
                .count();
            s_friends == 1
                && pairs
                    .iter()
                    .all(|&(u, v)| !game.is_friend(j, u) || !game.is_friend(j, v))
        });

    Ok(CisConditions {
        exploration,
        maximal_pair_sets: sets.len(),
        pair_set_invariant: sets.len() <= 1,
        no_pair_befriends_both,
        no_paired_remainder_friendship,
        branching_structure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Game {
        Game::friend_oriented(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn path4() -> Game {
        Game::friend_oriented(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    // i1 j1 i2 j2 i3 j3 s
    fn fig2_right() -> Game {
        Game::friend_oriented(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)]).unwrap()
    }

    #[test]
    fn pseudo_centers() {
        assert!(is_pseudo_center(&star(), 1, &[0, 1, 2]).unwrap());
        assert!(is_pseudo_center(&path4(), 1, &[0, 1, 2, 3]).unwrap());
        assert!(!is_pseudo_center(&fig2_right(), 3, &[2, 3, 4, 5, 6]).unwrap());
        assert!(is_pseudo_center(&star(), 1, &[0, 2]).is_err());
    }

    #[test]
    fn path_sequence() {
        let (seq, d) = build_elimination_sequence(&path4()).unwrap();
        let pairs: Vec<_> = seq.pairs.iter().map(|p| (p.key(), p.rule)).collect();
        assert_eq!(
            pairs,
            vec![((0, 1), EliminationRule::E1), ((2, 3), EliminationRule::E1)]
        );
        assert_eq!(d.paired.len(), 4);
        assert!(d.single_friend.is_empty() && d.branching.is_empty() && d.remainder.is_empty());
    }

    #[test]
    fn fig2_right_sequence() {
        let (seq, d) = build_elimination_sequence(&fig2_right()).unwrap();
        let pairs: Vec<_> = seq.pairs.iter().map(|p| (p.key(), p.rule)).collect();
        assert_eq!(
            pairs,
            vec![
                ((0, 1), EliminationRule::E1),
                ((2, 3), EliminationRule::E2),
                ((4, 5), EliminationRule::E1),
            ]
        );
        assert_eq!(d.remainder, BTreeSet::from([6]));
        assert!(d.single_friend.is_empty() && d.branching.is_empty());
    }

    #[test]
    fn edgeless_sequence() {
        let (seq, d) = build_elimination_sequence(&Game::friend_oriented(3, &[]).unwrap()).unwrap();
        assert!(seq.pairs.is_empty());
        assert_eq!(d.remainder, BTreeSet::from([0, 1, 2]));
    }

    #[test]
    fn decider_examples() {
        assert_eq!(decide_cis_robust_k1(&star()).unwrap(), None);
        assert_eq!(decide_cis_robust_k1(&fig2_right()).unwrap(), None);
        assert_eq!(
            decide_cis_robust_k1(&path4()).unwrap(),
            Some(Partition::new(vec![vec![0, 1], vec![2, 3]]).unwrap())
        );
    }

    #[test]
    fn conditions_examples() {
        // s can close either end of the last pair
        let c = check_cis_conditions(&fig2_right()).unwrap();
        assert!(!c.pair_set_invariant);
        assert_eq!(c.maximal_pair_sets, 2);
        assert!(!c.no_paired_remainder_friendship);
        assert!(!c.all_hold());

        let c = check_cis_conditions(&path4()).unwrap();
        assert!(c.all_hold(), "{c:?}");
        assert_eq!(c.exploration, Exploration::Exhaustive);

        let c = check_cis_conditions(&star()).unwrap();
        assert!(!c.pair_set_invariant);
        assert_eq!(c.maximal_pair_sets, 2);
        assert!(!c.no_paired_remainder_friendship);
    }

    #[test]
    fn probing_above_the_size_bound() {
        let limits = Limits {
            elimination_exhaustive_limit: 2,
            ..Limits::default()
        };
        let c = check_cis_conditions_with(&path4(), &limits).unwrap();
        assert_eq!(c.exploration, Exploration::Probed);
        assert!(c.all_hold());
    }
}
