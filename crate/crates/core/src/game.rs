//! Additively separable hedonic games with integer weights, plus the
//! coalition/partition types and friendship-graph primitives every other
//! module builds on.
//!
//! Players are `0..n`. A player's utility for a coalition is the sum of its
//! weights towards the other members, so comparing coalitions reduces to
//! comparing integers. A game is *friend-oriented* when every off-diagonal
//! weight is either the friend weight (the player count at construction) or
//! `-1`; a single friend then outweighs any number of enemies.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Player = usize;

const ABSENT: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Game {
    n: usize,
    /// Row-major `n * n`, `weights[i * n + j] = w(i, j)`.
    weights: Vec<i64>,
    friend_weight: i64,
}

impl Game {
    /// Builds a game from a dense row-major weight matrix. The diagonal must be zero.
    pub fn from_matrix(n: usize, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != n * n {
            return Err(Error::Structural(format!(
                "weight matrix has {} entries, expected {}",
                weights.len(),
                n * n
            )));
        }
        if let Some(i) = (0..n).find(|&i| weights[i * n + i] != 0) {
            return Err(Error::Structural(format!("w({i},{i}) must be 0")));
        }
        Ok(Game {
            n,
            weights,
            friend_weight: n as i64,
        })
    }

    /// Additive game from directed `(i, j, w)` entries; missing pairs weigh 0.
    /// With `symmetric`, each entry is mirrored.
    pub fn additive(n: usize, entries: &[(Player, Player, i64)], symmetric: bool) -> Result<Self> {
        let mut weights = vec![0; n * n];
        for &(i, j, w) in entries {
            check_pair(n, i, j)?;
            weights[i * n + j] = w;
            if symmetric {
                weights[j * n + i] = w;
            }
        }
        Game::from_matrix(n, weights)
    }

    /// Symmetric friend-oriented game: listed pairs are mutual friends, everyone else enemies.
    pub fn friend_oriented(n: usize, friendships: &[(Player, Player)]) -> Result<Self> {
        let mut arcs = Vec::with_capacity(friendships.len() * 2);
        for &(i, j) in friendships {
            arcs.push((i, j));
            arcs.push((j, i));
        }
        Game::friend_oriented_directed(n, &arcs)
    }

    /// Friend-oriented game where `(i, j)` means `i` regards `j` as a friend.
    pub fn friend_oriented_directed(n: usize, arcs: &[(Player, Player)]) -> Result<Self> {
        let friend = n as i64;
        let mut weights = vec![-1; n * n];
        for i in 0..n {
            weights[i * n + i] = 0;
        }
        for &(i, j) in arcs {
            check_pair(n, i, j)?;
            weights[i * n + j] = friend;
        }
        Game::from_matrix(n, weights)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn players(&self) -> std::ops::Range<Player> {
        0..self.n
    }

    #[inline]
    pub fn weight(&self, i: Player, j: Player) -> i64 {
        self.weights[i * self.n + j]
    }

    /// Weight used for friendship in friend-oriented games. Fixed at the
    /// original player count and carried unchanged into subgames.
    pub fn friend_weight(&self) -> i64 {
        self.friend_weight
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.weight(i, j) == self.weight(j, i)))
    }

    pub fn is_friend_oriented(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n)
                .filter(|&j| j != i)
                .all(|j| matches!(self.weight(i, j), w if w == self.friend_weight || w == -1))
        })
    }

    /// `j` is a friend of `i` when `w(i, j) > 0`.
    #[inline]
    pub fn is_friend(&self, i: Player, j: Player) -> bool {
        i != j && self.weight(i, j) > 0
    }

    /// Both players regard each other as friends (an edge of the friendship graph).
    #[inline]
    pub fn is_mutual_friend(&self, i: Player, j: Player) -> bool {
        self.is_friend(i, j) && self.is_friend(j, i)
    }

    /// Utility of `i` for coalition `coalition`, which must contain `i`.
    pub fn utility(&self, i: Player, coalition: &[Player]) -> Result<i64> {
        if i >= self.n || !coalition.contains(&i) {
            return Err(Error::Precondition(format!(
                "player {i} is not a member of coalition {coalition:?}"
            )));
        }
        Ok(self.value_of(i, coalition))
    }

    /// Sum of `w(i, j)` over `members`, without checking membership of `i`.
    #[inline]
    pub(crate) fn value_of(&self, i: Player, members: &[Player]) -> i64 {
        let row = &self.weights[i * self.n..(i + 1) * self.n];
        members.iter().map(|&j| row[j]).sum()
    }

    pub fn friends(&self, i: Player) -> Vec<Player> {
        (0..self.n).filter(|&j| self.is_friend(i, j)).collect()
    }

    /// Friendship-graph edges `(i, j)` with `i < j` between mutual friends.
    pub fn friendship_edges(&self) -> Vec<(Player, Player)> {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.is_mutual_friend(i, j) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Adjacency lists of the friendship graph.
    pub fn adjacency(&self) -> Vec<Vec<Player>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| self.is_mutual_friend(i, j))
                    .collect()
            })
            .collect()
    }

    fn require_symmetric(&self, what: &str) -> Result<()> {
        if self.is_symmetric() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{what} requires a symmetric game"
            )))
        }
    }

    pub fn is_clique(&self, set: &[Player]) -> Result<bool> {
        self.require_symmetric("clique test")?;
        check_players(self.n, set)?;
        Ok(set
            .iter()
            .enumerate()
            .all(|(a, &i)| set[a + 1..].iter().all(|&j| i == j || self.is_friend(i, j))))
    }

    /// Minimum over members of the number of friends inside `set`.
    pub fn min_degree(&self, set: &[Player]) -> Result<usize> {
        self.require_symmetric("minimum degree")?;
        check_players(self.n, set)?;
        set.iter()
            .map(|&i| set.iter().filter(|&&j| self.is_friend(i, j)).count())
            .min()
            .ok_or_else(|| Error::Precondition("minimum degree of an empty set".into()))
    }

    /// Connected components of the friendship graph, each sorted, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Player>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            let mut component = Vec::new();
            while let Some(v) = stack.pop() {
                component.push(v);
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Induced subgame on the players not in `removed`, keeping the original
    /// weights (and friend weight). Local player `l` of the result is
    /// original player `original[l]`.
    pub fn restrict(&self, removed: &[Player]) -> Result<Restriction> {
        check_players(self.n, removed)?;
        let mut gone = vec![false; self.n];
        for &r in removed {
            gone[r] = true;
        }
        let original: Vec<Player> = (0..self.n).filter(|&i| !gone[i]).collect();
        let m = original.len();
        let mut weights = Vec::with_capacity(m * m);
        for &i in &original {
            weights.extend(original.iter().map(|&j| self.weight(i, j)));
        }
        Ok(Restriction {
            game: Game {
                n: m,
                weights,
                friend_weight: self.friend_weight,
            },
            original,
        })
    }
}

fn check_pair(n: usize, i: Player, j: Player) -> Result<()> {
    if i >= n || j >= n {
        return Err(Error::Structural(format!(
            "pair ({i},{j}) out of range for {n} players"
        )));
    }
    if i == j {
        return Err(Error::Structural(format!("self pair ({i},{i})")));
    }
    Ok(())
}

fn check_players(n: usize, set: &[Player]) -> Result<()> {
    match set.iter().find(|&&i| i >= n) {
        Some(i) => Err(Error::Precondition(format!(
            "player {i} out of range for {n} players"
        ))),
        None => Ok(()),
    }
}

/// A subgame together with the map from its local indices to the parent's players.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub game: Game,
    pub original: Vec<Player>,
}

impl Restriction {
    pub fn local_index(&self, player: Player) -> Option<Player> {
        self.original.binary_search(&player).ok()
    }

    /// Relabels a partition of the remaining original players into local indices.
    pub fn localize(&self, partition: &Partition) -> Result<Partition> {
        let coalitions = partition
            .coalitions()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&p| {
                        self.local_index(p).ok_or_else(|| {
                            Error::Structural(format!("player {p} was removed from the game"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::covering(self.game.n, coalitions)
    }

    pub fn globalize(&self, local: &[Player]) -> Vec<Player> {
        local.iter().map(|&l| self.original[l]).collect()
    }
}

/// A non-empty set of players, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coalition(Vec<Player>);

impl Coalition {
    pub fn new(mut members: Vec<Player>) -> Self {
        members.sort_unstable();
        members.dedup();
        Coalition(members)
    }

    pub fn members(&self) -> &[Player] {
        &self.0
    }

    pub fn contains(&self, i: Player) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn smallest(&self) -> Option<Player> {
        self.0.first().copied()
    }

    pub fn into_vec(self) -> Vec<Player> {
        self.0
    }
}

impl std::ops::Deref for Coalition {
    type Target = [Player];
    fn deref(&self) -> &[Player] {
        &self.0
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Disjoint non-empty coalitions. Stored in canonical form: members sorted,
/// coalitions ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    coalitions: Vec<Coalition>,
    owner: Vec<usize>,
}

impl Partition {
    /// Builds a partition of the union of `coalitions`.
    pub fn new(coalitions: Vec<Vec<Player>>) -> Result<Self> {
        let mut cs = Vec::with_capacity(coalitions.len());
        for raw in coalitions {
            if raw.is_empty() {
                return Err(Error::Structural("empty coalition".into()));
            }
            let len = raw.len();
            let c = Coalition::new(raw);
            if c.len() != len {
                return Err(Error::Structural(format!(
                    "coalition {c} lists a player twice"
                )));
            }
            cs.push(c);
        }
        cs.sort_unstable_by_key(|c| c[0]);
        let max = cs.iter().filter_map(|c| c.last().copied()).max();
        let mut owner = vec![ABSENT; max.map_or(0, |m| m + 1)];
        for (k, c) in cs.iter().enumerate() {
            for &p in c.iter() {
                if owner[p] != ABSENT {
                    return Err(Error::Structural(format!(
                        "player {p} appears in two coalitions"
                    )));
                }
                owner[p] = k;
            }
        }
        Ok(Partition {
            coalitions: cs,
            owner,
        })
    }

    /// Builds a partition and checks that it covers exactly `0..n`.
    pub fn covering(n: usize, coalitions: Vec<Vec<Player>>) -> Result<Self> {
        let p = Partition::new(coalitions)?;
        p.check_covers(n)?;
        Ok(p)
    }

    pub fn check_covers(&self, n: usize) -> Result<()> {
        if self.owner.len() > n {
            return Err(Error::Structural(format!(
                "player {} out of range for {n} players",
                self.owner.len() - 1
            )));
        }
        if let Some(i) = (0..n).find(|&i| self.index_of(i).is_none()) {
            return Err(Error::Structural(format!("player {i} is not covered")));
        }
        Ok(())
    }

    pub fn singletons(n: usize) -> Self {
        Partition::new((0..n).map(|i| vec![i]).collect()).expect("singletons are disjoint")
    }

    pub fn grand(n: usize) -> Self {
        if n == 0 {
            return Partition::new(Vec::new()).expect("empty partition");
        }
        Partition::new(vec![(0..n).collect()]).expect("one coalition")
    }

    pub fn coalitions(&self) -> &[Coalition] {
        &self.coalitions
    }

    pub fn len(&self) -> usize {
        self.coalitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coalitions.is_empty()
    }

    pub fn index_of(&self, i: Player) -> Option<usize> {
        self.owner.get(i).copied().filter(|&k| k != ABSENT)
    }

    /// `π(i)`.
    pub fn coalition_of(&self, i: Player) -> Option<&Coalition> {
        self.index_of(i).map(|k| &self.coalitions[k])
    }

    pub fn players(&self) -> BTreeSet<Player> {
        self.coalitions
            .iter()
            .flat_map(|c| c.iter().copied())
            .collect()
    }

    pub fn to_vecs(&self) -> Vec<Vec<Player>> {
        self.coalitions.iter().map(|c| c.to_vec()).collect()
    }

    /// Moves `player` into coalition `target` (or alone when `None`), dropping
    /// a coalition that becomes empty.
    pub(crate) fn moved(&self, player: Player, target: Option<usize>) -> Partition {
        let mut cs: Vec<Vec<Player>> = Vec::with_capacity(self.len() + 1);
        for (k, c) in self.coalitions.iter().enumerate() {
            let mut members: Vec<Player> = c.iter().copied().filter(|&p| p != player).collect();
            if Some(k) == target {
                members.push(player);
            }
            if !members.is_empty() {
                cs.push(members);
            }
        }
        if target.is_none() {
            cs.push(vec![player]);
        }
        Partition::new(cs).expect("moving a player keeps coalitions disjoint")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, c) in self.coalitions.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}
