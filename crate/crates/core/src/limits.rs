/// Resource bounds for operations whose cost can explode.
///
/// Polynomial degrees grow like `(deg f)^k` under σ-powers, and the finite
/// field searches are exhaustive, so both are capped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest polynomial degree any operation may produce.
    pub max_degree: u64,
    /// Largest prime for which exhaustive searches over F_p are run.
    pub max_search: u64,
    /// Largest basis the growth experiment may hold.
    pub max_basis: u64,
}

impl Limits {
    pub const DEFAULT_DEGREE: u64 = 1_000_000;
    pub const DEFAULT_SEARCH: u64 = 10_000;
    pub const DEFAULT_BASIS: u64 = 200_000;

    /// One bound applied to both degree and search caps.
    pub fn uniform(bound: u64) -> Self {
        Limits {
            max_degree: bound,
            max_search: bound,
            ..Limits::default()
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: Self::DEFAULT_DEGREE,
            max_search: Self::DEFAULT_SEARCH,
            max_basis: Self::DEFAULT_BASIS,
        }
    }
}
