//! Backtracking over multiplication-table cells with incremental pruning.
//!
//! Cells are filled in row-major order with values tried in ascending order,
//! so complete tables are produced in lexicographic order. After each
//! assignment only the constraints that mention the new cell are checked;
//! every other constraint was already checked when its last cell was set.

use std::ops::ControlFlow;

use crate::algebra::CayleyTable;

const UNSET: usize = usize::MAX;

/// Number of top-level branches used for sharding, and the branch of a
/// complete or partial table whose first `prefix_len` cells are set.
pub(crate) fn prefix_len(n: usize) -> usize {
    (n * n).min(2)
}

pub(crate) fn branch_count(n: usize) -> usize {
    n.pow(prefix_len(n) as u32)
}

fn branch_of(cells: &[usize], n: usize) -> usize {
    cells[..prefix_len(n)].iter().fold(0, |acc, &c| acc * n + c)
}

pub(crate) struct TableSearch<'a> {
    n: usize,
    cells: Vec<usize>,
    /// Join table for distributivity, if required.
    join: Option<&'a CayleyTable>,
}

impl<'a> TableSearch<'a> {
    pub(crate) fn semigroups(n: usize) -> Self {
        TableSearch {
            n,
            cells: vec![UNSET; n * n],
            join: None,
        }
    }

    /// Associative multiplications distributing over `join` on both sides.
    pub(crate) fn distributive_over(join: &'a CayleyTable) -> Self {
        let n = join.size();
        TableSearch {
            n,
            cells: vec![UNSET; n * n],
            join: Some(join),
        }
    }

    #[inline]
    fn get(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    /// `(ab)c = a(bc)`, or undetermined.
    #[inline]
    fn assoc_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let ab = self.get(a, b);
        let bc = self.get(b, c);
        if ab == UNSET || bc == UNSET {
            return true;
        }
        let l = self.get(ab, c);
        let r = self.get(a, bc);
        l == UNSET || r == UNSET || l == r
    }

    fn associative_at(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        for x in 0..n {
            if !self.assoc_ok(i, j, x) || !self.assoc_ok(x, i, j) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                // (ab)c with ab = i, c = j; and a(bc) with a = i, bc = j.
                if self.get(a, b) == i && !self.assoc_ok(a, b, j) {
                    return false;
                }
                if self.get(a, b) == j && !self.assoc_ok(i, a, b) {
                    return false;
                }
            }
        }
        true
    }

    fn distributive_at(&self, join: &CayleyTable, i: usize, j: usize) -> bool {
        let n = self.n;
        let joined = |x: usize, y: usize| {
            if x == UNSET || y == UNSET {
                UNSET
            } else {
                join.get(x, y)
            }
        };
        for b in 0..n {
            for c in 0..n {
                // i(b∨c) = ib ∨ ic
                let l = self.get(i, join.get(b, c));
                let r = joined(self.get(i, b), self.get(i, c));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
                // (b∨c)j = bj ∨ cj
                let l = self.get(join.get(b, c), j);
                let r = joined(self.get(b, j), self.get(c, j));
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
        true
    }

    /// Visits every complete table in lexicographic order, skipping
    /// top-level branches rejected by `owns`.
    pub(crate) fn run(
        &mut self,
        owns: &dyn Fn(usize) -> bool,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        self.step(0, owns, visit)
    }

    fn step(
        &mut self,
        k: usize,
        owns: &dyn Fn(usize) -> bool,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let n = self.n;
        if k == prefix_len(n) && !owns(branch_of(&self.cells, n)) {
            return ControlFlow::Continue(());
        }
        if k == n * n {
            return visit(&self.cells);
        }
        let (i, j) = (k / n, k % n);
        for v in 0..n {
            self.cells[k] = v;
            let ok = self.associative_at(i, j)
                && self
                    .join
                    .is_none_or(|join| self.distributive_at(join, i, j));
            if ok {
                self.step(k + 1, owns, visit)?;
            }
        }
        self.cells[k] = UNSET;
        ControlFlow::Continue(())
    }
}
