/// Resource limits shared by the enumeration-heavy operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Cap on states visited or enumerated.
    pub states: u64,
    /// Cap on search depth, in braid generators.
    pub depth: usize,
    /// Number of random samples drawn when an exhaustive check is over budget.
    pub samples: usize,
    /// Seed for every random choice.
    pub seed: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { states: 100_000_000, depth: 8, samples: 2000, seed: 0 }
    }
}
