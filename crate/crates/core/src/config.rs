/// Caps, budgets and the seed shared by every computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest group order that may be enumerated element by element.
    pub group_cap: u128,
    /// Largest `|Ω|^(m-1)` scanned by an exact regular-orbit count.
    pub iteration_cap: u128,
    /// Number of verified candidates a search may try.
    pub search_budget: u64,
    /// Seed for the randomized stages of every search.
    pub seed: u64,
}

pub const DEFAULT_GROUP_CAP: u128 = 1_000_000;
pub const DEFAULT_ITERATION_CAP: u128 = 100_000_000;
pub const DEFAULT_SEARCH_BUDGET: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 0x5eed_0517;

impl Default for Config {
    fn default() -> Self {
        Config {
            group_cap: DEFAULT_GROUP_CAP,
            iteration_cap: DEFAULT_ITERATION_CAP,
            search_budget: DEFAULT_SEARCH_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}
