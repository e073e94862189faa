/// Budgets for the exhaustive searches. All of them are configuration so
/// sweeps can trade coverage against running time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest blocking coalition considered by the core check; `None` means
    /// all sizes, which makes the check exact.
    pub core_size_cap: Option<usize>,
    /// Player count above which an uncapped core check refuses to run.
    pub core_exhaustive_limit: usize,
    /// Maximum number of deletion sets a robustness check may visit.
    pub robustness_budget: u64,
    /// Largest player count the partition oracle enumerates.
    pub oracle_limit: usize,
    /// Step cap for deviation dynamics on general (non friend-oriented) games.
    pub dynamics_step_budget: u64,
    /// Largest player count for which every maximal elimination sequence is
    /// explored when checking the CIS characterization.
    pub elimination_exhaustive_limit: usize,
    /// Random re-orderings tried above `elimination_exhaustive_limit`.
    pub elimination_probes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            core_size_cap: None,
            core_exhaustive_limit: 20,
            robustness_budget: 10_000_000,
            oracle_limit: 12,
            dynamics_step_budget: 1_000_000,
            elimination_exhaustive_limit: 12,
            elimination_probes: 64,
        }
    }
}
