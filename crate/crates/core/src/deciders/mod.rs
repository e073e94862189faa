//! Constructive deciders for symmetric friend-oriented games: NS-robustness
//! for any `k`, CIS-robustness for a single deletion, and the IS-deviation
//! dynamics that build an individually stable, IR-robust partition.

mod cis;
mod dynamics;
mod ns;

pub use cis::{
    build_elimination_sequence, check_cis_conditions, check_cis_conditions_with,
    decide_cis_robust_k1, decide_cis_robust_k1_detailed, decompose, is_pseudo_center,
    maximal_pair_sets, CisConditions, CisDecision, Decomposition, EliminationPair, EliminationRule,
    EliminationSequence, Exploration,
};
pub use dynamics::{
    construct_is_ir_robust, construct_is_ir_robust_with, friendship_pairs, potential, DynamicsStep,
    DynamicsTrace,
};
pub use ns::decide_ns_robust;

use crate::error::{Error, Result};
use crate::game::Game;

pub(crate) fn require_symmetric_friend_oriented(game: &Game, what: &str) -> Result<()> {
    if !game.is_symmetric() {
        return Err(Error::Unsupported(format!(
            "{what} requires a symmetric game"
        )));
    }
    if !game.is_friend_oriented() {
        return Err(Error::Unsupported(format!(
            "{what} requires a friend-oriented game"
        )));
    }
    Ok(())
}
