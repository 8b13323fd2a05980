//! Canonical forms under relabeling of the carrier.
//!
//! The encoding of a structure is its multiplication table (row-major)
//! followed by its order matrix (row-major, one byte per entry). The
//! canonical form is the relabeling with the lexicographically least
//! encoding. Only isomorphisms are considered: a table and its transpose
//! generally have different canonical forms.

use std::cmp::Ordering;

use itertools::Itertools;
use sha2::{Digest, Sha256};

use crate::algebra::{CayleyTable, Order};
use crate::caps::Caps;
use crate::error::{Error, Result};

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Compares `table` relabeled by `perm` against `table`, cell by cell.
fn cmp_permuted_table(table: &CayleyTable, perm: &[usize], inv: &[usize]) -> Ordering {
    let n = table.size();
    for i in 0..n {
        for j in 0..n {
            let permuted = perm[table.get(inv[i], inv[j])];
            match permuted.cmp(&table.get(i, j)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    Ordering::Equal
}

fn cmp_permuted_order(order: &Order, inv: &[usize]) -> Ordering {
    let n = order.size();
    for i in 0..n {
        for j in 0..n {
            let permuted = order.leq(inv[i], inv[j]);
            match permuted.cmp(&order.leq(i, j)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
    }
    Ordering::Equal
}

/// Whether no relabeling of `table` is lexicographically smaller.
pub fn is_canonical_table(table: &CayleyTable, perms: &[Vec<usize>]) -> bool {
    perms
        .iter()
        .all(|p| cmp_permuted_table(table, p, &inverse(p)) != Ordering::Less)
}

/// Whether no relabeling of `order` has a smaller matrix.
pub fn is_canonical_order(order: &Order, perms: &[Vec<usize>]) -> bool {
    perms
        .iter()
        .all(|p| cmp_permuted_order(order, &inverse(p)) != Ordering::Less)
}

/// Permutations fixing `table`.
pub fn table_automorphisms(table: &CayleyTable, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .filter(|p| cmp_permuted_table(table, p, &inverse(p)) == Ordering::Equal)
        .cloned()
        .collect()
}

/// Permutations fixing `order`.
pub fn order_automorphisms(order: &Order, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .filter(|p| cmp_permuted_order(order, &inverse(p)) == Ordering::Equal)
        .cloned()
        .collect()
}

/// Whether `table` is least in its orbit under `group` (which must fix the
/// order it is paired with).
pub(crate) fn table_minimal_under(table: &CayleyTable, group: &[Vec<usize>]) -> bool {
    group
        .iter()
        .all(|p| cmp_permuted_table(table, p, &inverse(p)) != Ordering::Less)
}

/// Whether `order` is least in its orbit under `group` (which must fix the
/// table it is paired with).
pub(crate) fn order_minimal_under(order: &Order, group: &[Vec<usize>]) -> bool {
    group
        .iter()
        .all(|p| cmp_permuted_order(order, &inverse(p)) != Ordering::Less)
}

/// Byte encoding: order `n`, then the table cells, then the order matrix.
pub fn encode(table: &CayleyTable, order: &Order) -> Vec<u8> {
    let n = table.size();
    let mut out = Vec::with_capacity(1 + 2 * n * n);
    out.push(n as u8);
    out.extend(table.cells().iter().map(|&c| c as u8));
    for i in 0..n {
        for j in 0..n {
            out.push(order.leq(i, j) as u8);
        }
    }
    out
}

fn check_cap(n: usize, caps: &Caps) -> Result<()> {
    if n > caps.canonical_order {
        return Err(Error::CapExceeded {
            what: "canonicalization",
            size: n,
            cap: caps.canonical_order,
        });
    }
    Ok(())
}

/// The lexicographically least relabeling of `(table, order)`.
pub fn canonicalize(
    table: &CayleyTable,
    order: &Order,
    caps: &Caps,
) -> Result<(CayleyTable, Order)> {
    let n = table.size();
    check_cap(n, caps)?;
    if order.size() != n {
        return Err(Error::Shape("table and order sizes differ".into()));
    }
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    for perm in (0..n).permutations(n) {
        let enc = encode(&table.permuted(&perm), &order.permuted(&perm));
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            best = Some((enc, perm));
        }
    }
    let (_, perm) = best.expect("at least the identity permutation");
    Ok((table.permuted(&perm), order.permuted(&perm)))
}

/// Hex SHA-256 of the canonical encoding.
pub fn structure_id(table: &CayleyTable, order: &Order, caps: &Caps) -> Result<String> {
    let (t, o) = canonicalize(table, order, caps)?;
    Ok(hex::encode(Sha256::digest(encode(&t, &o))))
}
