//! Finite ordered semigroups, poe-semigroups and le-semigroups.
//!
//! * [`algebra`]: down-closure `(A]`, set products, left/right/quasi/bi-ideals,
//!   generated ideals with brute-force oracles, intra-regularity, and the
//!   set-level conditions `X ∩ M ∩ Y ⊆ (YMX]`.
//! * [`le`]: the element-level counterparts (ideal elements, `r(a)`, `l(a)`,
//!   `q(a)`, `a ≤ ea²e`, `x∧m∧y ≤ ymx`).
//! * [`enumerate`]: exhaustive generation of small structures with
//!   isomorphism deduplication and sharding.
//! * [`harness`]: the JSON structure format and verification campaigns.

pub mod algebra;
pub mod caps;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod le;
pub mod report;

pub use caps::Caps;
pub use error::{Error, Result};
