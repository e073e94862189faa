//! Robust stability in friend-oriented and additively separable hedonic
//! games.
//!
//! A partition is *k-robust* for a stability concept when it keeps that
//! property after any `k` or fewer players are deleted from the game. The
//! crate provides the stability checks, the exhaustive robustness checker,
//! polynomial deciders for the tractable cases, a brute-force oracle for
//! small games and generators for the standard instances.
//!
//! ```
//! use hedonic_robust::{instances::make_star, is_robust, Concept, Partition};
//!
//! let star = make_star(2);
//! let pi = Partition::new(vec![vec![0, 1], vec![2]]).unwrap();
//! let verdict = is_robust(&star, &pi, Concept::Ns, 1).unwrap();
//! assert!(!verdict.holds());
//! ```

pub mod cli;
pub mod deciders;
pub mod error;
pub mod game;
pub mod instances;
pub mod io;
pub mod limits;
pub mod oracle;
pub mod robustness;
pub mod stability;

pub use error::{Error, Result};
pub use game::{Coalition, Game, Partition, Player, Restriction};
pub use limits::Limits;
pub use robustness::{
    is_robust, is_robust_with, robustness_margin, Counterexample, RobustnessVerdict,
};
pub use stability::{satisfies, satisfies_with, Concept, DeviationKind, Violation};
