//! Size limits for the exhaustive procedures.

/// Environment variable that raises (or lowers) the order caps.
pub const MAX_ORDER_ENV: &str = "POSEMI_MAX_ORDER";

/// Carrier-size limits for everything that is exponential in the carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest order accepted by the semigroup enumerators.
    pub semigroup_order: usize,
    /// Largest order accepted by the lattice / le-semigroup enumerators.
    pub lattice_order: usize,
    /// Largest carrier that `canonicalize` will permute (n! relabelings).
    pub canonical_order: usize,
    /// Largest carrier for which subsets are enumerated (2^n per family).
    pub subset_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            semigroup_order: 5,
            lattice_order: 5,
            canonical_order: 6,
            subset_order: 12,
        }
    }
}

impl Caps {
    /// Defaults, with the order caps replaced by `POSEMI_MAX_ORDER` when it
    /// is set to a positive integer.
    pub fn from_env() -> Self {
        let caps = Caps::default();
        match std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            Some(max) if max > 0 => caps.with_max_order(max),
            _ => caps,
        }
    }

    /// Sets the enumeration caps to `max` and widens the canonicalization
    /// cap so that enumerated structures can still be deduplicated.
    pub fn with_max_order(self, max: usize) -> Self {
        Caps {
            semigroup_order: max,
            lattice_order: max,
            canonical_order: self.canonical_order.max(max),
            subset_order: self.subset_order,
        }
    }
}
