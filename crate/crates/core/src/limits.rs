/// Resource caps for the exhaustive parts of the toolkit. Exceeding a cap is
/// always reported as an error; no search is silently truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Committees scored by one enumeration-based winner determination.
    pub committee_cap: u128,
    /// Candidate scripts the brute-force oracle may enumerate.
    pub search_cap: u128,
    /// Vote subsets the O*(2^n) solvers may enumerate.
    pub subset_cap: u128,
    /// Search nodes one integer-feasibility run may explore.
    pub ip_node_cap: u64,
    /// Variables in one integer program.
    pub ip_variable_cap: usize,
    /// Subsets tried by the source-problem brute-force searches.
    pub source_cap: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            committee_cap: 10_000_000,
            search_cap: 10_000_000,
            subset_cap: 10_000_000,
            ip_node_cap: 50_000_000,
            ip_variable_cap: 100_000,
            source_cap: 100_000_000,
        }
    }
}
