//! Search budgets, overridable through `MONOCHROME_NODE_BUDGET`.

pub const NODE_BUDGET_ENV: &str = "MONOCHROME_NODE_BUDGET";
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

fn from_env() -> Option<u64> {
    std::env::var(NODE_BUDGET_ENV).ok()?.trim().parse().ok()
}

/// Node budget for the exhaustive stable-set searches.
#[must_use]
pub fn node_budget() -> u64 {
    from_env().unwrap_or(DEFAULT_NODE_BUDGET)
}

/// Step budget for the heuristic solver.
#[must_use]
pub fn step_budget() -> u64 {
    from_env().unwrap_or(DEFAULT_STEP_BUDGET)
}
