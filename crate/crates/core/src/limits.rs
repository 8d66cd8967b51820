/// Size caps for the operations that materialize exponential objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex set that may be enumerated or built.
    pub vertex_cap: u64,
    /// Largest graph the pairwise edge scan accepts.
    pub brute_edge_cap: u64,
    /// Largest graph the direction-set subcube scan accepts.
    pub subcube_cap: u64,
    /// Largest subcube dimension the scan accepts.
    pub subcube_dim_cap: usize,
    /// Largest graph the all-triples median check accepts.
    pub median_cap: u64,
    /// Largest Fibonacci cube dimension.
    pub fibonacci_dim_cap: usize,
    /// Largest truncation order (per variable) of a series expansion.
    pub series_order_cap: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        vertex_cap: 1_000_000,
        brute_edge_cap: 2_000,
        subcube_cap: 5_000,
        subcube_dim_cap: 6,
        median_cap: 300,
        fibonacci_dim_cap: 24,
        series_order_cap: 4_096,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
