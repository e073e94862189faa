use proptest::prelude::*;

use hedonic_robust::deciders::{
    construct_is_ir_robust, decide_cis_robust_k1, decide_ns_robust, potential,
};
use hedonic_robust::io::{game_to_json, parse_game};
use hedonic_robust::oracle::oracle_find_robust;
use hedonic_robust::robustness::{restrict_partition, robustness_margin};
use hedonic_robust::{is_robust, satisfies, Concept, Game, Partition};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn friend_game(max_n: usize) -> impl Strategy<Value = Game> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), pairs(n).len()).prop_map(move |mask| {
            let edges: Vec<_> = pairs(n)
                .into_iter()
                .zip(mask)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Game::friend_oriented(n, &edges).unwrap()
        })
    })
}

fn additive_game(max_n: usize, symmetric: bool) -> impl Strategy<Value = Game> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-3i64..=3, n * n).prop_map(move |w| {
            let mut m = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        m[i * n + j] = if symmetric {
                            w[i.min(j) * n + i.max(j)]
                        } else {
                            w[i * n + j]
                        };
                    }
                }
            }
            Game::from_matrix(n, m).unwrap()
        })
    })
}

fn with_partition(game: impl Strategy<Value = Game>) -> impl Strategy<Value = (Game, Partition)> {
    game.prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(0..n, n))
    })
    .prop_map(|(g, labels)| {
        let mut blocks = vec![Vec::new(); g.n()];
        for (p, l) in labels.into_iter().enumerate() {
            blocks[l].push(p);
        }
        let p = Partition::new(blocks.into_iter().filter(|b| !b.is_empty()).collect()).unwrap();
        (g, p)
    })
}

fn u(g: &Game, i: usize, members: &[usize]) -> i64 {
    members
        .iter()
        .filter(|&&j| j != i)
        .map(|&j| g.weight(i, j))
        .sum()
}

/// Brute force over every player and destination, straight from weights.
fn has_deviation(g: &Game, p: &Partition, concept: Concept) -> bool {
    let cs = p.to_vecs();
    (0..g.n()).any(|i| {
        let own = cs.iter().position(|c| c.contains(&i)).unwrap();
        let now = u(g, i, &cs[own]);
        let leave_ok =
            concept != Concept::Cis || cs[own].iter().all(|&j| j == i || g.weight(j, i) <= 0);
        let alone = now < 0 && leave_ok;
        let join = cs.iter().enumerate().any(|(t, c)| {
            t != own
                && c.iter().map(|&j| g.weight(i, j)).sum::<i64>() > now
                && (concept == Concept::Ns || c.iter().all(|&j| g.weight(j, i) >= 0))
                && leave_ok
        });
        alone || join
    })
}

fn has_blocking(g: &Game, p: &Partition) -> bool {
    let n = g.n();
    let cs = p.to_vecs();
    let now: Vec<i64> = (0..n)
        .map(|i| u(g, i, cs.iter().find(|c| c.contains(&i)).unwrap()))
        .collect();
    (1u32..1 << n).any(|mask| {
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        s.iter().all(|&i| u(g, i, &s) > now[i])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn friend_oriented_utility_counts((g, p) in with_partition(friend_game(8))) {
        let n = g.n() as i64;
        for c in p.coalitions() {
            for &i in c.iter() {
                let friends = c.iter().filter(|&&j| g.is_friend(i, j)).count() as i64;
                let enemies = c.len() as i64 - 1 - friends;
                prop_assert_eq!(g.utility(i, c).unwrap(), n * friends - enemies);
            }
        }
    }

    #[test]
    fn checkers_match_brute_force((g, p) in with_partition(additive_game(6, false))) {
        for c in [Concept::Ns, Concept::Is, Concept::Cis] {
            prop_assert_eq!(satisfies(&g, &p, c).unwrap().is_some(), has_deviation(&g, &p, c), "{:?}", c);
        }
        prop_assert_eq!(satisfies(&g, &p, Concept::Cr).unwrap().is_some(), has_blocking(&g, &p));
        let ir = (0..g.n()).all(|i| u(&g, i, p.coalition_of(i).unwrap()) >= 0);
        prop_assert_eq!(satisfies(&g, &p, Concept::Ir).unwrap().is_none(), ir);
    }

    #[test]
    fn witnesses_replay((g, p) in with_partition(additive_game(6, false))) {
        for c in Concept::ALL {
            if let Some(v) = satisfies(&g, &p, c).unwrap() {
                prop_assert!(v.is_valid_for(&g, &p), "{} {}", c, v);
            }
        }
    }

    #[test]
    fn implications_in_friend_oriented_games((g, p) in with_partition(friend_game(7))) {
        let ok = |c| satisfies(&g, &p, c).unwrap().is_none();
        prop_assert!(!ok(Concept::Ns) || ok(Concept::Is));
        prop_assert!(!ok(Concept::Is) || ok(Concept::Cis));
        prop_assert!(!ok(Concept::Cr) || ok(Concept::Is));
        prop_assert!(!ok(Concept::Cis) || ok(Concept::Ir));
    }

    #[test]
    fn robustness_is_monotone_and_replayable((g, p) in with_partition(additive_game(6, true))) {
        let n = g.n();
        for c in Concept::ALL {
            let mut prev = true;
            for k in 1..=n {
                let v = is_robust(&g, &p, c, k).unwrap();
                prop_assert!(prev || !v.holds(), "{} robust at {} but not below", c, k);
                if let Some(ce) = &v.counterexample {
                    prop_assert!(ce.deleted.len() <= k);
                    prop_assert!(ce.is_valid_for(&g, &p));
                }
                prev = v.holds();
            }
            let m = robustness_margin(&g, &p, c).unwrap();
            prop_assert!(m >= -1 && m <= n as i64);
            if m >= 1 {
                prop_assert!(is_robust(&g, &p, c, m as usize).unwrap().holds());
            }
            if m >= 0 && (m as usize) < n {
                prop_assert!(!is_robust(&g, &p, c, m as usize + 1).unwrap().holds());
            }
        }
    }

    #[test]
    fn restrictions_compose(
        (g, p) in with_partition(additive_game(7, false)),
        first in prop::collection::vec(any::<bool>(), 7),
        second in prop::collection::vec(any::<bool>(), 7),
    ) {
        let n = g.n();
        let a: Vec<usize> = (0..n).filter(|&i| first[i]).collect();
        let b: Vec<usize> = (0..n).filter(|&i| second[i] && !first[i]).collect();
        let once = g.restrict(&a).unwrap();
        let b_local: Vec<usize> = b.iter().map(|&x| once.local_index(x).unwrap()).collect();
        let twice = once.game.restrict(&b_local).unwrap();
        let mut both = a.clone();
        both.extend(&b);
        let direct = g.restrict(&both).unwrap();
        prop_assert_eq!(&twice.game, &direct.game);
        prop_assert_eq!(once.globalize(&twice.original), direct.original.clone());

        let local = direct.localize(&restrict_partition(&p, &both)).unwrap();
        prop_assert_eq!(local.players().len(), direct.game.n());
    }

    #[test]
    fn components_partition_the_players(g in friend_game(10)) {
        let comps = g.connected_components();
        let p = Partition::covering(g.n(), comps.clone()).unwrap();
        prop_assert_eq!(p.len(), comps.len());
        for (i, j) in g.friendship_edges() {
            prop_assert_eq!(p.index_of(i), p.index_of(j));
        }
    }

    #[test]
    fn partitions_are_canonical((_g, p) in with_partition(friend_game(8)), seed in any::<u64>()) {
        let mut blocks = p.to_vecs();
        for (k, b) in blocks.iter_mut().enumerate() {
            b.reverse();
            let len = b.len();
            b.rotate_left((seed as usize + k) % len);
        }
        let len = blocks.len();
        blocks.rotate_left(seed as usize % len);
        prop_assert_eq!(Partition::new(blocks).unwrap(), p);
    }

    #[test]
    fn game_files_round_trip(g in prop_oneof![additive_game(6, false), additive_game(6, true), friend_game(6)]) {
        let text = game_to_json(&g).unwrap();
        let back = parse_game(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(game_to_json(&back).unwrap(), text);
    }

    #[test]
    fn dynamics_reach_is_and_ir_robust(g in prop_oneof![additive_game(8, true), friend_game(10)]) {
        let (p, trace) = construct_is_ir_robust(&g).unwrap();
        prop_assert!(satisfies(&g, &p, Concept::Is).unwrap().is_none());
        for k in 1..=g.n().min(3) {
            prop_assert!(is_robust(&g, &p, Concept::Ir, k).unwrap().holds());
        }
        for s in &trace.steps {
            prop_assert!(s.potential_after > s.potential_before);
        }
        prop_assert_eq!(trace.steps.last().map_or(0, |s| s.potential_after), potential(&g, &p));
    }

    #[test]
    fn ns_decider_output_is_robust(g in friend_game(10), k in 1usize..=3) {
        if let Some(p) = decide_ns_robust(&g, k).unwrap() {
            prop_assert!(is_robust(&g, &p, Concept::Ns, k.min(g.n())).unwrap().holds());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn deciders_match_oracle_on_larger_graphs(g in friend_game(7)) {
        let cis = decide_cis_robust_k1(&g).unwrap();
        prop_assert_eq!(cis.is_some(), !oracle_find_robust(&g, Concept::Cis, 1, false).unwrap().is_empty());
        let ns = decide_ns_robust(&g, 1).unwrap();
        prop_assert_eq!(ns.is_some(), !oracle_find_robust(&g, Concept::Ns, 1, false).unwrap().is_empty());
    }
}
