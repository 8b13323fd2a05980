//! Small named structures used throughout the tests and examples.
//!
//! Element `a` is index 1 and the top `e` (where present) is index 2.

use crate::algebra::{CayleyTable, Order, OrderedSemigroup};
use crate::le::LeSemigroup;

/// `{0, a}` with every product `0` and `0 < a`.
pub fn n2() -> OrderedSemigroup {
    OrderedSemigroup::new(CayleyTable::from_fn(2, |_, _| 0).unwrap(), Order::chain(2)).unwrap()
}

/// Left-zero band on `{0, 1}` (`xy = x`), discrete order.
pub fn s2l() -> OrderedSemigroup {
    OrderedSemigroup::with_discrete_order(CayleyTable::from_fn(2, |x, _| x).unwrap())
}

/// Right-zero band on `{0, 1}` (`xy = y`), discrete order.
pub fn s2r() -> OrderedSemigroup {
    OrderedSemigroup::with_discrete_order(CayleyTable::from_fn(2, |_, y| y).unwrap())
}

/// Chain `0 < a < e` with `xy = x∧y`.
pub fn l3meet() -> LeSemigroup {
    LeSemigroup::from_lattice(
        CayleyTable::from_fn(3, |x, y| x.min(y)).unwrap(),
        &Order::chain(3),
    )
    .unwrap()
}

/// Chain `0 < a < e` with every product `0`.
pub fn l3null() -> LeSemigroup {
    LeSemigroup::from_lattice(CayleyTable::from_fn(3, |_, _| 0).unwrap(), &Order::chain(3)).unwrap()
}
