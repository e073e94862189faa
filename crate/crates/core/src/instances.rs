//! Game constructors: small graph families, the worked examples, seeded
//! random games and the Exact-3-Cover gadgets used for the hardness
//! reductions (CIS with two deletions, IS with one).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Game, Partition, Player};

/// Star with center `1` and players `0, 2, 3, ..` as leaves, so that
/// `make_star(2)` is the path `a - b - c`.
pub fn make_star(leaves: usize) -> Game {
    let n = leaves + 1;
    let edges: Vec<_> = (0..n).filter(|&v| v != 1).map(|v| (v, 1)).collect();
    if n == 1 {
        return Game::friend_oriented(1, &[]).expect("single player");
    }
    Game::friend_oriented(n, &edges).expect("valid star")
}

pub fn make_path(n: usize) -> Game {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Game::friend_oriented(n, &edges).expect("valid path")
}

/// Cycle on `n` players; degenerates to a path for `n < 3`.
pub fn make_cycle(n: usize) -> Game {
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Game::friend_oriented(n, &edges).expect("valid cycle")
}

pub fn make_clique(n: usize) -> Game {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Game::friend_oriented(n, &edges).expect("valid clique")
}

/// Three players, `b` friends with both `a` and `c`, who dislike each other.
pub fn fig1() -> Game {
    make_star(2)
}

/// Players `i1 j1 i2 j2 i3 j3 i4 j4` = `0..8`.
pub const FIG2_LEFT_EDGES: [(Player, Player); 8] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 7),
    (7, 6),
    (3, 6),
];

/// Players `i1 j1 i2 j2 i3 j3 s` = `0..7`.
pub const FIG2_RIGHT_EDGES: [(Player, Player); 7] =
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)];

/// A tail `i1 - j1 - i2 - j2` hanging off the 5-cycle `j2 i3 j3 j4 i4`;
/// its unique CIS-robust partition is the four elimination pairs.
pub fn fig2_left() -> Game {
    Game::friend_oriented(8, &FIG2_LEFT_EDGES).expect("valid graph")
}

/// Same tail, closed by the triangle-free cycle `j2 i3 j3 s`; no
/// CIS-robust partition exists.
pub fn fig2_right() -> Game {
    Game::friend_oriented(7, &FIG2_RIGHT_EDGES).expect("valid graph")
}

/// Four players `a b c d` = `0..4`: `a, b, c` like everyone, `d` likes
/// only `c`. Admits no individually stable, IR-robust partition.
pub fn example2() -> Game {
    Game::friend_oriented_directed(
        4,
        &[
            (0, 1),
            (1, 0),
            (0, 2),
            (2, 0),
            (1, 2),
            (2, 1),
            (2, 3),
            (3, 2),
            (0, 3),
            (1, 3),
        ],
    )
    .expect("valid game")
}

/// Symmetric friend-oriented game where each pair is a friendship
/// independently with probability `p`.
pub fn gen_random_friend_oriented(n: usize, p: f64, seed: u64) -> Result<Game> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Game::friend_oriented(n, &edges)
}

/// Symmetric additive game with weights drawn uniformly from `lo..=hi`.
pub fn gen_random_additive(n: usize, lo: i64, hi: i64, seed: u64) -> Result<Game> {
    if lo > hi {
        return Err(Error::Precondition(format!(
            "empty weight range {lo}..={hi}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            entries.push((i, j, rng.gen_range(lo..=hi)));
        }
    }
    Game::additive(n, &entries, true)
}

/// Exact-3-Cover instance over elements `0..element_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3cInstance {
    pub element_count: usize,
    pub sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(element_count: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if !element_count.is_multiple_of(3) {
            return Err(Error::Structural(format!(
                "element count {element_count} is not a multiple of 3"
            )));
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for mut s in sets {
            s.sort_unstable();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(Error::Structural(format!("set {s:?} repeats an element")));
            }
            if s[2] >= element_count {
                return Err(Error::Structural(format!(
                    "set {s:?} mentions a missing element"
                )));
            }
            normalized.push(s);
        }
        Ok(X3cInstance {
            element_count,
            sets: normalized,
        })
    }

    /// `r = 1` with the single set `{0, 1, 2}`.
    pub fn single_set() -> Self {
        X3cInstance::new(3, vec![[0, 1, 2]]).expect("valid instance")
    }

    /// Checks that the chosen sets are pairwise disjoint and cover everything.
    pub fn check_exact_cover(&self, cover: &[usize]) -> Result<()> {
        let mut hit = vec![false; self.element_count];
        for &s in cover {
            let set = self
                .sets
                .get(s)
                .ok_or_else(|| Error::Structural(format!("set index {s} out of range")))?;
            for &e in set {
                if std::mem::replace(&mut hit[e], true) {
                    return Err(Error::Structural(format!("element {e} covered twice")));
                }
            }
        }
        match hit.iter().position(|h| !h) {
            Some(e) => Err(Error::Structural(format!("element {e} is not covered"))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetVariant {
    /// CIS-robustness with two deletions.
    Cis,
    /// IS-robustness with one deletion.
    Is,
}

impl GadgetVariant {
    /// Deletion budget the reduction targets.
    pub fn k(self) -> usize {
        match self {
            GadgetVariant::Cis => 2,
            GadgetVariant::Is => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetLabel {
    Vertex(usize),
    Friend1(usize),
    Friend2(usize),
    Enemy(usize),
    DummyFriend(usize),
    DummyEnemy(usize),
    /// Clique member `slot` (1..=3) attached to `vertex` inside set `set`.
    SetMember {
        set: usize,
        vertex: usize,
        slot: u8,
    },
}

impl fmt::Display for GadgetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GadgetLabel::Vertex(v) => write!(f, "v{v}"),
            GadgetLabel::Friend1(v) => write!(f, "f1_v{v}"),
            GadgetLabel::Friend2(v) => write!(f, "f2_v{v}"),
            GadgetLabel::Enemy(v) => write!(f, "e_v{v}"),
            GadgetLabel::DummyFriend(v) => write!(f, "df_v{v}"),
            GadgetLabel::DummyEnemy(v) => write!(f, "de_v{v}"),
            GadgetLabel::SetMember { set, vertex, slot } => write!(f, "S{set}.{slot}_v{vertex}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GadgetGame {
    pub game: Game,
    pub labels: Vec<GadgetLabel>,
    pub variant: GadgetVariant,
    pub instance: X3cInstance,
}

impl GadgetGame {
    pub fn index_of(&self, label: GadgetLabel) -> Option<Player> {
        self.labels.iter().position(|&l| l == label)
    }

    fn at(&self, label: GadgetLabel) -> Player {
        self.index_of(label).expect("label exists in the gadget")
    }
}

fn build_gadget(x3c: &X3cInstance, variant: GadgetVariant) -> Result<GadgetGame> {
    let x3c = X3cInstance::new(x3c.element_count, x3c.sets.clone())?;
    let mut labels: Vec<GadgetLabel> = (0..x3c.element_count).map(GadgetLabel::Vertex).collect();
    for v in 0..x3c.element_count {
        labels.extend([
            GadgetLabel::Friend1(v),
            GadgetLabel::Friend2(v),
            GadgetLabel::Enemy(v),
        ]);
        if variant == GadgetVariant::Is {
            labels.extend([GadgetLabel::DummyFriend(v), GadgetLabel::DummyEnemy(v)]);
        }
    }
    for (s, set) in x3c.sets.iter().enumerate() {
        for &vertex in set {
            labels.extend((1..=3).map(|slot| GadgetLabel::SetMember {
                set: s,
                vertex,
                slot,
            }));
        }
    }
    let index = |l: GadgetLabel| labels.iter().position(|&x| x == l).expect("label");
    let mut edges = Vec::new();
    for v in 0..x3c.element_count {
        let (vp, f1, f2, e) = (
            index(GadgetLabel::Vertex(v)),
            index(GadgetLabel::Friend1(v)),
            index(GadgetLabel::Friend2(v)),
            index(GadgetLabel::Enemy(v)),
        );
        edges.extend([(vp, f1), (vp, f2), (f1, f2), (f1, e), (f2, e)]);
        if variant == GadgetVariant::Is {
            edges.push((f1, index(GadgetLabel::DummyFriend(v))));
            edges.push((e, index(GadgetLabel::DummyEnemy(v))));
        }
    }
    for (s, &[u, v, w]) in x3c.sets.iter().enumerate() {
        let m = |vertex, slot| {
            index(GadgetLabel::SetMember {
                set: s,
                vertex,
                slot,
            })
        };
        for x in [u, v, w] {
            let xp = index(GadgetLabel::Vertex(x));
            let (a, b, c) = (m(x, 1), m(x, 2), m(x, 3));
            edges.extend([(xp, a), (xp, b), (a, b), (a, c), (b, c)]);
        }
        edges.extend([(m(u, 3), m(v, 3)), (m(v, 3), m(w, 3)), (m(u, 3), m(w, 3))]);
        if variant == GadgetVariant::Cis {
            edges.extend([(m(u, 1), m(v, 1)), (m(u, 2), m(w, 2)), (m(w, 1), m(v, 2))]);
        }
    }
    let game = Game::friend_oriented(labels.len(), &edges)?;
    Ok(GadgetGame {
        game,
        labels,
        variant,
        instance: x3c,
    })
}

/// Reduction target for CIS-robustness with `k = 2`: vertex gadgets
/// `{v, f1, f2, e}` and set gadgets with three cross friendships.
pub fn gen_x3c_cis_gadget(x3c: &X3cInstance) -> Result<GadgetGame> {
    build_gadget(x3c, GadgetVariant::Cis)
}

/// Reduction target for IS-robustness with `k = 1`: vertex gadgets gain two
/// dummies, set gadgets drop the cross friendships.
pub fn gen_x3c_is_gadget(x3c: &X3cInstance) -> Result<GadgetGame> {
    build_gadget(x3c, GadgetVariant::Is)
}

/// The partition induced by an exact cover: `{v, S1_v, S2_v}` and
/// `{S3_u, S3_v, S3_w}` for cover sets, the nine members of every other
/// set together, `{f1_v, f2_v, e_v}` per vertex and singleton dummies.
pub fn cover_partition(gadget: &GadgetGame, cover: &[usize]) -> Result<Partition> {
    let x3c = &gadget.instance;
    x3c.check_exact_cover(cover)?;
    let mut coalitions = Vec::new();
    for (s, set) in x3c.sets.iter().enumerate() {
        let m = |vertex, slot| {
            gadget.at(GadgetLabel::SetMember {
                set: s,
                vertex,
                slot,
            })
        };
        if cover.contains(&s) {
            for &x in set {
                coalitions.push(vec![gadget.at(GadgetLabel::Vertex(x)), m(x, 1), m(x, 2)]);
            }
            coalitions.push(set.iter().map(|&x| m(x, 3)).collect());
        } else {
            coalitions.push(
                set.iter()
                    .flat_map(|&x| (1..=3).map(move |slot| (x, slot)))
                    .map(|(x, slot)| m(x, slot))
                    .collect(),
            );
        }
    }
    for v in 0..x3c.element_count {
        coalitions.push(vec![
            gadget.at(GadgetLabel::Friend1(v)),
            gadget.at(GadgetLabel::Friend2(v)),
            gadget.at(GadgetLabel::Enemy(v)),
        ]);
        if gadget.variant == GadgetVariant::Is {
            coalitions.push(vec![gadget.at(GadgetLabel::DummyFriend(v))]);
            coalitions.push(vec![gadget.at(GadgetLabel::DummyEnemy(v))]);
        }
    }
    Partition::covering(gadget.game.n(), coalitions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(
            make_star(2),
            Game::friend_oriented(3, &[(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(
            make_clique(3).friendship_edges(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert_eq!(
            make_path(4).friendship_edges(),
            vec![(0, 1), (1, 2), (2, 3)]
        );
        assert_eq!(make_cycle(4).friendship_edges().len(), 4);
        assert_eq!(make_star(1).n(), 2);
    }

    #[test]
    fn nonsymmetric_example() {
        let g = example2();
        assert!(!g.is_symmetric());
        assert!(g.is_friend_oriented());
        assert_eq!(g.friends(3), vec![2]);
        assert_eq!(g.friends(0), vec![1, 2, 3]);
    }

    #[test]
    fn random_games() {
        assert!(gen_random_friend_oriented(5, 0.0, 3)
            .unwrap()
            .friendship_edges()
            .is_empty());
        assert_eq!(
            gen_random_friend_oriented(5, 1.0, 3).unwrap(),
            make_clique(5)
        );
        assert_eq!(
            gen_random_friend_oriented(6, 0.5, 7).unwrap(),
            gen_random_friend_oriented(6, 0.5, 7).unwrap()
        );
        assert!(gen_random_friend_oriented(3, 1.5, 0).is_err());
    }

    #[test]
    fn x3c_validation() {
        assert!(X3cInstance::new(4, vec![[0, 1, 2]]).is_err());
        assert!(X3cInstance::new(3, vec![[0, 0, 2]]).is_err());
        assert!(X3cInstance::new(3, vec![[0, 1, 3]]).is_err());
        let x = X3cInstance::new(6, vec![[0, 1, 2], [3, 4, 5], [1, 2, 3]]).unwrap();
        assert!(x.check_exact_cover(&[0, 1]).is_ok());
        assert!(x.check_exact_cover(&[0, 2]).is_err());
        assert!(x.check_exact_cover(&[0]).is_err());
    }

    #[test]
    fn gadget_sizes_and_edges() {
        let x = X3cInstance::single_set();
        let cis = gen_x3c_cis_gadget(&x).unwrap();
        assert_eq!(cis.game.n(), 21);
        let e0 = cis.at(GadgetLabel::Enemy(0));
        let mut want = vec![
            cis.at(GadgetLabel::Friend1(0)),
            cis.at(GadgetLabel::Friend2(0)),
        ];
        want.sort();
        assert_eq!(cis.game.friends(e0), want);
        let m = |g: &GadgetGame, vertex, slot| {
            g.at(GadgetLabel::SetMember {
                set: 0,
                vertex,
                slot,
            })
        };
        let s3v = cis.game.friends(m(&cis, 1, 3));
        for other in [m(&cis, 1, 1), m(&cis, 1, 2), m(&cis, 0, 3), m(&cis, 2, 3)] {
            assert!(s3v.contains(&other));
        }
        assert!(cis.game.is_friend(m(&cis, 0, 1), m(&cis, 1, 1)));

        let is = gen_x3c_is_gadget(&x).unwrap();
        assert_eq!(is.game.n(), 27);
        assert_eq!(
            is.game.friends(is.at(GadgetLabel::DummyFriend(0))),
            vec![is.at(GadgetLabel::Friend1(0))]
        );
        assert!(!is.game.is_friend(m(&is, 0, 1), m(&is, 1, 1)));
    }

    #[test]
    fn cover_partition_shapes() {
        let x = X3cInstance::single_set();
        let cis = gen_x3c_cis_gadget(&x).unwrap();
        let p = cover_partition(&cis, &[0]).unwrap();
        assert_eq!(p.len(), 7);
        assert!(p.coalitions().iter().all(|c| c.len() == 3));
        assert!(cover_partition(&cis, &[]).is_err());
        let is = gen_x3c_is_gadget(&x).unwrap();
        assert_eq!(cover_partition(&is, &[0]).unwrap().len(), 13);
    }
}
