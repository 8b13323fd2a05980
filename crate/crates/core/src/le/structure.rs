//! poe-semigroups (ordered semigroups with a greatest element) and
//! le-semigroups (poe-semigroups that are lattices, with multiplication
//! distributing over join).

use std::fmt;

use crate::algebra::{
    compatibility_violations, CayleyTable, Order, OrderedSemigroup, Subset, Violation,
};
use crate::error::{Error, Result};

/// The operations element-level definitions need: multiplication, the
/// order, the greatest element `e`, and greatest lower bounds where they
/// exist.
pub trait PoeOps {
    fn size(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn leq(&self, a: usize, b: usize) -> bool;
    fn top(&self) -> usize;
    /// Greatest lower bound of a nonempty set, if it exists.
    fn glb(&self, set: Subset) -> Option<usize>;

    fn meet_pair(&self, a: usize, b: usize) -> Option<usize> {
        self.glb(Subset::from_indices(self.size(), [a, b]))
    }
}

/// An ordered semigroup with a greatest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoeSemigroup {
    base: OrderedSemigroup,
    top: usize,
}

impl PoeSemigroup {
    pub fn new(base: OrderedSemigroup, top: usize) -> Result<Self> {
        if top >= base.size() {
            return Err(Error::IndexOutOfRange {
                index: top,
                size: base.size(),
            });
        }
        Ok(PoeSemigroup { base, top })
    }

    /// Uses the greatest element of the order, if there is one.
    pub fn from_ordered(base: OrderedSemigroup) -> Option<Self> {
        let top = base.order().top()?;
        Some(PoeSemigroup { base, top })
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.base.validate();
        for a in 0..self.base.size() {
            if !self.base.leq(a, self.top) {
                out.push(Violation::NotGreatest { top: self.top, a });
            }
        }
        out
    }

    pub fn base(&self) -> &OrderedSemigroup {
        &self.base
    }

    pub fn into_base(self) -> OrderedSemigroup {
        self.base
    }
}

impl PoeOps for PoeSemigroup {
    fn size(&self) -> usize {
        self.base.size()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.base.mul(a, b)
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.base.leq(a, b)
    }

    fn top(&self) -> usize {
        self.top
    }

    fn glb(&self, set: Subset) -> Option<usize> {
        self.base.order().glb(set)
    }
}

/// A failed le-semigroup axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeViolation {
    /// A lattice law fails for the given elements.
    Lattice {
        law: &'static str,
        elements: Vec<usize>,
    },
    TopNotGreatest {
        top: usize,
        a: usize,
    },
    /// `a(b∨c) ≠ ab∨ac`.
    LeftDistributivity {
        a: usize,
        b: usize,
        c: usize,
    },
    /// `(a∨b)c ≠ ac∨bc`.
    RightDistributivity {
        a: usize,
        b: usize,
        c: usize,
    },
    Semigroup(Violation),
}

impl fmt::Display for LeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeViolation::Lattice { law, elements } => {
                write!(f, "lattice law `{law}` fails at {elements:?}")
            }
            LeViolation::TopNotGreatest { top, a } => {
                write!(f, "top {top} is not greatest: {a} ∨ {top} ≠ {top}")
            }
            LeViolation::LeftDistributivity { a, b, c } => {
                write!(
                    f,
                    "left distributivity fails at ({a}, {b}, {c}): {a}({b}∨{c}) ≠ {a}{b}∨{a}{c}"
                )
            }
            LeViolation::RightDistributivity { a, b, c } => {
                write!(
                    f,
                    "right distributivity fails at ({a}, {b}, {c}): ({a}∨{b}){c} ≠ {a}{c}∨{b}{c}"
                )
            }
            LeViolation::Semigroup(v) => v.fmt(f),
        }
    }
}

/// A finite lattice-ordered semigroup with greatest element `top`.
///
/// The order is never supplied directly; it is induced from the join table
/// (`a ≤ b ⇔ a∨b = b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeSemigroup {
    table: CayleyTable,
    join: CayleyTable,
    meet: CayleyTable,
    top: usize,
    order: Order,
}

impl LeSemigroup {
    /// Checks shapes only; see [`validate`](Self::validate).
    pub fn new(
        table: CayleyTable,
        join: CayleyTable,
        meet: CayleyTable,
        top: usize,
    ) -> Result<Self> {
        let n = table.size();
        if join.size() != n || meet.size() != n {
            return Err(Error::Shape(format!(
                "multiplication is {n}×{n} but join is {0}×{0} and meet is {1}×{1}",
                join.size(),
                meet.size()
            )));
        }
        if top >= n {
            return Err(Error::IndexOutOfRange {
                index: top,
                size: n,
            });
        }
        let order = Order::from_fn(n, |a, b| join.get(a, b) == b)?;
        Ok(LeSemigroup {
            table,
            join,
            meet,
            top,
            order,
        })
    }

    /// Builds join, meet and top from a lattice order.
    pub fn from_lattice(table: CayleyTable, order: &Order) -> Result<Self> {
        let n = table.size();
        if order.size() != n {
            return Err(Error::Shape(format!(
                "table is {n}×{n} but the order is on {} elements",
                order.size()
            )));
        }
        let not_lattice = || Error::Shape("the order is not a lattice".into());
        let mut join = Vec::with_capacity(n * n);
        let mut meet = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let pair = Subset::from_indices(n, [a, b]);
                join.push(order.lub(pair).ok_or_else(not_lattice)?);
                meet.push(order.glb(pair).ok_or_else(not_lattice)?);
            }
        }
        let top = order.top().ok_or_else(not_lattice)?;
        LeSemigroup::new(
            table,
            CayleyTable::from_cells(n, join)?,
            CayleyTable::from_cells(n, meet)?,
            top,
        )
    }

    /// The one-element le-semigroup.
    pub fn trivial() -> Self {
        let t = CayleyTable::from_fn(1, |_, _| 0).expect("one-element table");
        LeSemigroup::new(t.clone(), t.clone(), t, 0).expect("one-element le-semigroup")
    }

    pub fn validate(&self) -> Vec<LeViolation> {
        let n = self.size();
        let mut out = Vec::new();
        let lattice = |out: &mut Vec<LeViolation>, law, elements: &[usize]| {
            out.push(LeViolation::Lattice {
                law,
                elements: elements.to_vec(),
            })
        };
        let (j, m) = (&self.join, &self.meet);
        for a in 0..n {
            if j.get(a, a) != a {
                lattice(&mut out, "a∨a = a", &[a]);
            }
            if m.get(a, a) != a {
                lattice(&mut out, "a∧a = a", &[a]);
            }
            for b in 0..n {
                if j.get(a, b) != j.get(b, a) {
                    lattice(&mut out, "a∨b = b∨a", &[a, b]);
                }
                if m.get(a, b) != m.get(b, a) {
                    lattice(&mut out, "a∧b = b∧a", &[a, b]);
                }
                if j.get(a, m.get(a, b)) != a {
                    lattice(&mut out, "a∨(a∧b) = a", &[a, b]);
                }
                if m.get(a, j.get(a, b)) != a {
                    lattice(&mut out, "a∧(a∨b) = a", &[a, b]);
                }
                for c in 0..n {
                    if j.get(j.get(a, b), c) != j.get(a, j.get(b, c)) {
                        lattice(&mut out, "(a∨b)∨c = a∨(b∨c)", &[a, b, c]);
                    }
                    if m.get(m.get(a, b), c) != m.get(a, m.get(b, c)) {
                        lattice(&mut out, "(a∧b)∧c = a∧(b∧c)", &[a, b, c]);
                    }
                }
            }
        }
        let lattice_ok = out.is_empty();
        for a in 0..n {
            if j.get(a, self.top) != self.top {
                out.push(LeViolation::TopNotGreatest { top: self.top, a });
            }
        }
        if let Some((a, b, c)) = self.table.first_non_associative() {
            out.push(LeViolation::Semigroup(Violation::NotAssociative {
                a,
                b,
                c,
            }));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let t = &self.table;
                    if t.get(a, j.get(b, c)) != j.get(t.get(a, b), t.get(a, c)) {
                        out.push(LeViolation::LeftDistributivity { a, b, c });
                    }
                    if t.get(j.get(a, b), c) != j.get(t.get(a, c), t.get(b, c)) {
                        out.push(LeViolation::RightDistributivity { a, b, c });
                    }
                }
            }
        }
        if lattice_ok {
            out.extend(
                compatibility_violations(&self.table, &self.order)
                    .into_iter()
                    .map(LeViolation::Semigroup),
            );
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn join_table(&self) -> &CayleyTable {
        &self.join
    }

    pub fn meet_table(&self) -> &CayleyTable {
        &self.meet
    }

    /// The order induced by the join table.
    pub fn order(&self) -> &Order {
        &self.order
    }

    /// Forgets the lattice operations, keeping order and top.
    pub fn to_poe(&self) -> PoeSemigroup {
        let base = OrderedSemigroup::new(self.table.clone(), self.order.clone())
            .expect("table and order have the same size");
        PoeSemigroup {
            base,
            top: self.top,
        }
    }

    pub fn to_ordered(&self) -> OrderedSemigroup {
        self.to_poe().into_base()
    }
}

impl PoeOps for LeSemigroup {
    fn size(&self) -> usize {
        self.table.size()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.join.get(a, b) == b
    }

    fn top(&self) -> usize {
        self.top
    }

    fn glb(&self, set: Subset) -> Option<usize> {
        set.iter().reduce(|acc, x| self.meet.get(acc, x))
    }

    fn meet_pair(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.meet.get(a, b))
    }
}
