//! Element-level theory on poe- and le-semigroups.

mod elements;
mod structure;
mod theorem;

pub use elements::{
    element_class, element_condition_holds, gen_element, is_intra_regular_poe, le_condition_holds,
    least_element_oracle, ElementFlags, ElementKind, ElementWitness,
};
pub use structure::{LeSemigroup, LeViolation, PoeOps, PoeSemigroup};
pub use theorem::{check_remark, verify_remark, verify_theorem2};
