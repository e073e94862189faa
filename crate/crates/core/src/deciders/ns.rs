use crate::error::{Error, Result};
use crate::game::{Game, Partition};

use super::require_symmetric_friend_oriented;

/// Returns the connected-component partition when every component of the
/// friendship graph is a clique or has minimum degree at least `k + 1`;
/// otherwise no NS-robust partition exists and the answer is `None`.
pub fn decide_ns_robust(game: &Game, k: usize) -> Result<Option<Partition>> {
    require_symmetric_friend_oriented(game, "NS-robustness decision")?;
    if k == 0 {
        return Err(Error::Precondition("robustness needs k >= 1".into()));
    }
    let adj = game.adjacency();
    let components = game.connected_components();
    let ok = components.iter().all(|component| {
        let size = component.len();
        let degrees = component.iter().map(|&v| adj[v].len());
        let min = degrees.clone().min().unwrap_or(0);
        let is_clique = degrees.clone().all(|d| d + 1 == size);
        is_clique || min > k
    });
    if !ok {
        return Ok(None);
    }
    Ok(Some(
        Partition::new(components).expect("components are disjoint"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_has_no_ns_robust_partition() {
        let star = Game::friend_oriented(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(decide_ns_robust(&star, 1).unwrap(), None);
    }

    #[test]
    fn cliques_always_qualify() {
        let tri = Game::friend_oriented(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        for k in [1, 2, 5] {
            assert_eq!(
                decide_ns_robust(&tri, k).unwrap(),
                Some(Partition::grand(3))
            );
        }
    }

    #[test]
    fn four_cycle_depends_on_k() {
        let c4 = Game::friend_oriented(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(decide_ns_robust(&c4, 1).unwrap(), Some(Partition::grand(4)));
        assert_eq!(decide_ns_robust(&c4, 2).unwrap(), None);
    }

    #[test]
    fn rejects_unsupported_games() {
        let directed = Game::friend_oriented_directed(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            decide_ns_robust(&directed, 1),
            Err(Error::Unsupported(_))
        ));
        let additive = Game::additive(2, &[(0, 1, 5)], true).unwrap();
        assert!(matches!(
            decide_ns_robust(&additive, 1),
            Err(Error::Unsupported(_))
        ));
    }
}
