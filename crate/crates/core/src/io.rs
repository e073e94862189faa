//! JSON file formats for games, partitions and gadget labels.
//!
//! Games are stored in canonical form: keys sorted, pair lists sorted, the
//! unused list omitted. Saving a loaded game reproduces the file byte for
//! byte.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Game, Partition, Player};
use crate::instances::GadgetGame;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GameMode {
    #[serde(rename = "friend-oriented")]
    FriendOriented,
    #[serde(rename = "additive")]
    Additive,
}

/// On-disk game. In friend-oriented mode `friends` lists friendships
/// (unordered when symmetric, `i` likes `j` otherwise); in additive mode
/// `weights` lists directed `[i, j, w]` entries, mirrored when symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub friends: Vec<[Player; 2]>,
    pub mode: GameMode,
    pub n: usize,
    pub symmetric: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub weights: Vec<(Player, Player, i64)>,
}

impl GameFile {
    pub fn from_game(game: &Game) -> Self {
        let n = game.n();
        let symmetric = game.is_symmetric();
        let pairs = |i: Player| (0..n).filter(move |&j| j != i && (!symmetric || j > i));
        if game.is_friend_oriented() && game.friend_weight() == n as i64 {
            let friends = (0..n)
                .flat_map(|i| {
                    pairs(i)
                        .filter(move |&j| game.is_friend(i, j))
                        .map(move |j| [i, j])
                })
                .collect();
            GameFile {
                friends,
                mode: GameMode::FriendOriented,
                n,
                symmetric,
                weights: Vec::new(),
            }
        } else {
            let weights = (0..n)
                .flat_map(|i| pairs(i).map(move |j| (i, j, game.weight(i, j))))
                .filter(|&(_, _, w)| w != 0)
                .collect();
            GameFile {
                friends: Vec::new(),
                mode: GameMode::Additive,
                n,
                symmetric,
                weights,
            }
        }
    }

    pub fn to_game(&self) -> Result<Game> {
        let n = self.n;
        let mut seen = BTreeSet::new();
        let mut check = |i: Player, j: Player| -> Result<()> {
            if i >= n || j >= n {
                return Err(Error::Structural(format!(
                    "pair [{i},{j}] out of range for n = {n}"
                )));
            }
            if i == j {
                return Err(Error::Structural(format!("self pair [{i},{i}]")));
            }
            let key = if self.symmetric {
                (i.min(j), i.max(j))
            } else {
                (i, j)
            };
            if !seen.insert(key) {
                return Err(Error::Structural(format!(
                    "pair [{i},{j}] listed more than once"
                )));
            }
            Ok(())
        };
        match self.mode {
            GameMode::FriendOriented => {
                if !self.weights.is_empty() {
                    return Err(Error::Structural(
                        "friend-oriented games take `friends`, not `weights`".into(),
                    ));
                }
                for &[i, j] in &self.friends {
                    check(i, j)?;
                }
                let pairs: Vec<_> = self.friends.iter().map(|&[i, j]| (i, j)).collect();
                if self.symmetric {
                    Game::friend_oriented(n, &pairs)
                } else {
                    Game::friend_oriented_directed(n, &pairs)
                }
            }
            GameMode::Additive => {
                if !self.friends.is_empty() {
                    return Err(Error::Structural(
                        "additive games take `weights`, not `friends`".into(),
                    ));
                }
                for &(i, j, _) in &self.weights {
                    check(i, j)?;
                }
                Game::additive(n, &self.weights, self.symmetric)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionFile {
    pub coalitions: Vec<Vec<Player>>,
}

impl PartitionFile {
    pub fn from_partition(p: &Partition) -> Self {
        PartitionFile {
            coalitions: p.to_vecs(),
        }
    }

    pub fn to_partition(&self, n: usize) -> Result<Partition> {
        Partition::covering(n, self.coalitions.clone())
    }
}

/// Canonical pretty JSON with a trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn parse_game(text: &str) -> Result<Game> {
    serde_json::from_str::<GameFile>(text)?.to_game()
}

pub fn game_to_json(game: &Game) -> Result<String> {
    to_canonical_json(&GameFile::from_game(game))
}

pub fn load_game(path: &Path) -> Result<Game> {
    parse_game(&fs::read_to_string(path)?)
}

pub fn save_game(path: &Path, game: &Game) -> Result<()> {
    fs::write(path, game_to_json(game)?)?;
    Ok(())
}

pub fn parse_partition(text: &str, n: usize) -> Result<Partition> {
    serde_json::from_str::<PartitionFile>(text)?.to_partition(n)
}

pub fn load_partition(path: &Path, n: usize) -> Result<Partition> {
    parse_partition(&fs::read_to_string(path)?, n)
}

pub fn save_partition(path: &Path, partition: &Partition) -> Result<()> {
    fs::write(
        path,
        to_canonical_json(&PartitionFile::from_partition(partition))?,
    )?;
    Ok(())
}

/// Gadget label name to player index.
pub fn labels_map(gadget: &GadgetGame) -> BTreeMap<String, Player> {
    gadget
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.to_string(), i))
        .collect()
}

pub fn save_labels(path: &Path, gadget: &GadgetGame) -> Result<()> {
    fs::write(path, to_canonical_json(&labels_map(gadget))?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{example2, make_star};

    #[test]
    fn star_file_is_canonical() {
        let text = game_to_json(&make_star(2)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"friends": [[0, 1], [1, 2]], "mode": "friend-oriented", "n": 3, "symmetric": true})
        );
        assert_eq!(parse_game(&text).unwrap(), make_star(2));
    }

    #[test]
    fn directed_and_additive_round_trip() {
        let g = example2();
        assert_eq!(parse_game(&game_to_json(&g).unwrap()).unwrap(), g);
        let a = Game::additive(3, &[(0, 1, 4), (1, 0, -2), (2, 0, 7)], false).unwrap();
        assert_eq!(parse_game(&game_to_json(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn validation_errors() {
        let bad = [
            r#"{"mode":"friend-oriented","n":3,"symmetric":true,"friends":[[0,3]]}"#,
            r#"{"mode":"friend-oriented","n":3,"symmetric":true,"friends":[[1,1]]}"#,
            r#"{"mode":"friend-oriented","n":3,"symmetric":true,"friends":[[0,1],[1,0]]}"#,
            r#"{"mode":"additive","n":3,"symmetric":true,"weights":[[0,1,2],[1,0,3]]}"#,
            r#"{"mode":"additive","n":3,"symmetric":true,"friends":[[0,1]]}"#,
            r#"{"mode":"additive","n":3,"symmetric":true,"extra":1}"#,
            r#"{"mode":"weird","n":3,"symmetric":true}"#,
        ];
        for text in bad {
            assert!(parse_game(text).is_err(), "{text}");
        }
        // directed files may list both directions
        assert!(parse_game(
            r#"{"mode":"friend-oriented","n":2,"symmetric":false,"friends":[[0,1],[1,0]]}"#
        )
        .is_ok());
    }

    #[test]
    fn partition_files() {
        assert!(parse_partition(r#"{"coalitions":[[0,1],[1,2]]}"#, 3).is_err());
        let p = parse_partition(r#"{"coalitions":[[2],[1,0]]}"#, 3).unwrap();
        assert_eq!(p.to_vecs(), vec![vec![0, 1], vec![2]]);
    }
}
