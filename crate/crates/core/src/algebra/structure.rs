//! Multiplication tables, partial orders, and ordered semigroups.

use std::fmt;

use super::subset::{Subset, MAX_CARRIER};
use crate::error::{Error, Result};

fn check_carrier(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Shape(
            "the carrier must have at least one element".into(),
        ));
    }
    if n > MAX_CARRIER {
        return Err(Error::CapExceeded {
            what: "carrier",
            size: n,
            cap: MAX_CARRIER,
        });
    }
    Ok(())
}

/// An n×n table of a binary operation on `0..n`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CayleyTable {
    n: usize,
    cells: Vec<usize>,
}

impl CayleyTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        check_carrier(n)?;
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "table row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        CayleyTable::from_cells(n, cells)
    }

    pub fn from_cells(n: usize, cells: Vec<usize>) -> Result<Self> {
        check_carrier(n)?;
        if cells.len() != n * n {
            return Err(Error::Shape(format!(
                "table has {} cells, expected {}",
                cells.len(),
                n * n
            )));
        }
        if let Some((k, &v)) = cells.iter().enumerate().find(|(_, &v)| v >= n) {
            return Err(Error::Shape(format!(
                "table[{}][{}] = {v} is not an element of a {n}-element carrier",
                k / n,
                k % n
            )));
        }
        Ok(CayleyTable { n, cells })
    }

    /// The operation `x·y = f(x, y)`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let cells = (0..n * n).map(|k| f(k / n, k % n)).collect();
        CayleyTable::from_cells(n, cells)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// First triple `(a, b, c)` in lexicographic order with `(ab)c ≠ a(bc)`.
    pub fn first_non_associative(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                let ab = self.get(a, b);
                for c in 0..n {
                    if self.get(ab, c) != self.get(a, self.get(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.first_non_associative().is_none()
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> CayleyTable {
        let n = self.n;
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = perm[self.get(a, b)];
            }
        }
        CayleyTable { n, cells }
    }
}

/// A binary relation on `0..n`, stored as one down-set mask per element:
/// bit `i` of `down[j]` is set iff `i ≤ j`.
///
/// Nothing about the relation is assumed; [`Order::violations`] checks the
/// partial-order axioms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Order {
    n: usize,
    down: Vec<u64>,
}

impl Order {
    /// Equality only.
    pub fn discrete(n: usize) -> Order {
        Order {
            n,
            down: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    /// A chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Order {
        Order {
            n,
            down: (0..n).map(|i| super::subset::full_mask(i + 1)).collect(),
        }
    }

    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Order> {
        check_carrier(n)?;
        let down = (0..n)
            .map(|j| (0..n).filter(|&i| leq(i, j)).fold(0u64, |m, i| m | 1 << i))
            .collect();
        Ok(Order { n, down })
    }

    pub fn from_matrix(rows: &[Vec<bool>]) -> Result<Order> {
        let n = rows.len();
        check_carrier(n)?;
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Shape(format!(
                "order row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        Order::from_fn(n, |i, j| rows[i][j])
    }

    /// Reflexive-transitive closure of the given `i ≤ j` pairs.
    pub fn closure_of_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Order> {
        check_carrier(n)?;
        let mut down: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    size: n,
                });
            }
            down[j] |= 1 << i;
        }
        // Warshall on down-set masks.
        for k in 0..n {
            for j in 0..n {
                if down[j] >> k & 1 == 1 {
                    down[j] |= down[k];
                }
            }
        }
        Ok(Order { n, down })
    }

    pub(crate) fn from_down_masks(n: usize, down: Vec<u64>) -> Order {
        debug_assert_eq!(down.len(), n);
        Order { n, down }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b] >> a & 1 == 1
    }

    /// `{t | t ≤ a}`.
    #[inline]
    pub fn down_set(&self, a: usize) -> Subset {
        Subset::from_bits(self.n, self.down[a])
    }

    /// `{t | a ≤ t}`.
    pub fn up_set(&self, a: usize) -> Subset {
        Subset::from_indices(self.n, (0..self.n).filter(|&t| self.leq(a, t)))
    }

    pub fn down_masks(&self) -> &[u64] {
        &self.down
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.leq(i, j)).collect())
            .collect()
    }

    /// Pairs `(i, j)` with `i ≤ j` and `i ≠ j`, in lexicographic order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.down.iter().enumerate().all(|(i, &d)| d == 1 << i)
    }

    pub fn violations(&self) -> Vec<Violation> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            if !self.leq(a, a) {
                out.push(Violation::NotReflexive { a });
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.leq(a, b) && self.leq(b, a) {
                    out.push(Violation::NotAntisymmetric { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.leq(b, c) && !self.leq(a, c) {
                        out.push(Violation::NotTransitive { a, b, c });
                    }
                }
            }
        }
        out
    }

    pub fn is_partial_order(&self) -> bool {
        self.violations().is_empty()
    }

    /// Greatest element, if one exists.
    pub fn top(&self) -> Option<usize> {
        let full = super::subset::full_mask(self.n);
        (0..self.n).find(|&t| self.down[t] == full)
    }

    /// Least element, if one exists.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.n).find(|&b| (0..self.n).all(|t| self.leq(b, t)))
    }

    /// Greatest lower bound of a nonempty set, if it exists.
    pub fn glb(&self, set: Subset) -> Option<usize> {
        debug_assert!(!set.is_empty());
        let lower = set
            .iter()
            .fold(super::subset::full_mask(self.n), |m, x| m & self.down[x]);
        Subset::from_bits(self.n, lower)
            .iter()
            .find(|&g| lower & !self.down[g] == 0)
    }

    /// Least upper bound of a nonempty set, if it exists.
    pub fn lub(&self, set: Subset) -> Option<usize> {
        debug_assert!(!set.is_empty());
        let upper: Vec<usize> = (0..self.n)
            .filter(|&u| set.iter().all(|x| self.leq(x, u)))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&g| upper.iter().all(|&u| self.leq(g, u)))
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Order {
        let mut down = vec![0u64; self.n];
        for j in 0..self.n {
            for i in Subset::from_bits(self.n, self.down[j]) {
                down[perm[j]] |= 1 << perm[i];
            }
        }
        Order { n: self.n, down }
    }
}

/// A failed axiom, with the elements that witness the failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    NotReflexive {
        a: usize,
    },
    NotAntisymmetric {
        a: usize,
        b: usize,
    },
    NotTransitive {
        a: usize,
        b: usize,
        c: usize,
    },
    /// `a ≤ b` but `c·a ≰ c·b`.
    LeftIncompatible {
        a: usize,
        b: usize,
        c: usize,
    },
    /// `a ≤ b` but `a·c ≰ b·c`.
    RightIncompatible {
        a: usize,
        b: usize,
        c: usize,
    },
    /// `t` is declared greatest but `a ≰ t`.
    NotGreatest {
        top: usize,
        a: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotAssociative { a, b, c } => {
                write!(
                    f,
                    "associativity fails at ({a}, {b}, {c}): ({a}·{b})·{c} ≠ {a}·({b}·{c})"
                )
            }
            Violation::NotReflexive { a } => write!(f, "reflexivity fails at {a}: {a} ≰ {a}"),
            Violation::NotAntisymmetric { a, b } => {
                write!(
                    f,
                    "antisymmetry fails at ({a}, {b}): {a} ≤ {b} and {b} ≤ {a}"
                )
            }
            Violation::NotTransitive { a, b, c } => {
                write!(
                    f,
                    "transitivity fails at ({a}, {b}, {c}): {a} ≤ {b} ≤ {c} but {a} ≰ {c}"
                )
            }
            Violation::LeftIncompatible { a, b, c } => {
                write!(
                    f,
                    "left compatibility fails at ({a}, {b}, {c}): {a} ≤ {b} but {c}·{a} ≰ {c}·{b}"
                )
            }
            Violation::RightIncompatible { a, b, c } => {
                write!(
                    f,
                    "right compatibility fails at ({a}, {b}, {c}): {a} ≤ {b} but {a}·{c} ≰ {b}·{c}"
                )
            }
            Violation::NotGreatest { top, a } => {
                write!(f, "greatest element fails at ({top}, {a}): {a} ≰ {top}")
            }
        }
    }
}

/// Compatibility violations of `order` with `table`, both sides.
pub(crate) fn compatibility_violations(table: &CayleyTable, order: &Order) -> Vec<Violation> {
    let n = table.size();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a == b || !order.leq(a, b) {
                continue;
            }
            for c in 0..n {
                if !order.leq(table.get(c, a), table.get(c, b)) {
                    out.push(Violation::LeftIncompatible { a, b, c });
                }
                if !order.leq(table.get(a, c), table.get(b, c)) {
                    out.push(Violation::RightIncompatible { a, b, c });
                }
            }
        }
    }
    out
}

/// Whether `order` is compatible with `table` on both sides.
pub fn is_compatible(table: &CayleyTable, order: &Order) -> bool {
    let n = table.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            a == b
                || !order.leq(a, b)
                || (0..n).all(|c| {
                    order.leq(table.get(c, a), table.get(c, b))
                        && order.leq(table.get(a, c), table.get(b, c))
                })
        })
    })
}

/// A finite semigroup with a partial order compatible with multiplication.
///
/// Construction only checks shapes. Call [`OrderedSemigroup::validate`] (or
/// use [`OrderedSemigroup::try_new`]) before relying on the axioms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderedSemigroup {
    table: CayleyTable,
    order: Order,
}

impl OrderedSemigroup {
    pub fn new(table: CayleyTable, order: Order) -> Result<Self> {
        if table.size() != order.size() {
            return Err(Error::Shape(format!(
                "table is {0}×{0} but the order is on {1} elements",
                table.size(),
                order.size()
            )));
        }
        Ok(OrderedSemigroup { table, order })
    }

    /// Like [`new`](Self::new), and additionally rejects structures that
    /// violate any axiom.
    pub fn try_new(table: CayleyTable, order: Order) -> Result<Self> {
        let s = OrderedSemigroup::new(table, order)?;
        let violations = s.validate();
        if violations.is_empty() {
            Ok(s)
        } else {
            Err(Error::Invalid(
                violations.iter().map(ToString::to_string).collect(),
            ))
        }
    }

    pub fn from_rows(table: &[Vec<usize>], leq: &[Vec<bool>]) -> Result<Self> {
        OrderedSemigroup::new(CayleyTable::from_rows(table)?, Order::from_matrix(leq)?)
    }

    pub fn with_discrete_order(table: CayleyTable) -> Self {
        let order = Order::discrete(table.size());
        OrderedSemigroup { table, order }
    }

    /// The one-element semigroup.
    pub fn trivial() -> Self {
        OrderedSemigroup::with_discrete_order(CayleyTable {
            n: 1,
            cells: vec![0],
        })
    }

    /// Every violated axiom: associativity, the partial-order laws, and
    /// two-sided compatibility.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if let Some((a, b, c)) = self.table.first_non_associative() {
            out.push(Violation::NotAssociative { a, b, c });
        }
        let order_violations = self.order.violations();
        let order_ok = order_violations.is_empty();
        out.extend(order_violations);
        if order_ok {
            out.extend(compatibility_violations(&self.table, &self.order));
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.table.size()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    /// The whole carrier `S`.
    pub fn carrier(&self) -> Subset {
        Subset::full(self.size())
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.size())
    }

    pub fn singleton(&self, a: usize) -> Subset {
        Subset::singleton(self.size(), a)
    }

    pub fn into_parts(self) -> (CayleyTable, Order) {
        (self.table, self.order)
    }
}
