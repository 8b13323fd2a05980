//! Finite ordered semigroups and their set-level ideal theory.

mod ideals;
mod structure;
mod subset;
mod theorem;

pub use ideals::{
    classify_subset, closed_product, condition_holds, downward_closure, gen_ideal, ideals,
    intra_regular_witness, is_intra_regular, least_ideal_oracle, set_product, ConditionWitness,
    IdealFlags, IdealKind, MiddleKind, Outcome,
};
pub(crate) use structure::compatibility_violations;
pub use structure::{is_compatible, CayleyTable, Order, OrderedSemigroup, Violation};
pub(crate) use subset::full_mask;
pub use subset::{Elements, Subset, MAX_CARRIER};
pub use theorem::verify_theorem1;
