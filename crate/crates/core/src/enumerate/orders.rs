//! Labeled partial orders, lattices, and orders compatible with a table.

use crate::algebra::{full_mask, is_compatible, CayleyTable, Order, Subset};

/// Every partial order on `0..n`, sorted by order matrix (so the discrete
/// order comes first).
///
/// Built by adding one element at a time: a poset on `0..k` extends to
/// `0..=k` by choosing a down-set `D` (elements below `k`) and an up-set `U`
/// (elements above `k`) with `D ∩ U = ∅` and `d ≤ u` for all `d ∈ D, u ∈ U`.
/// Each labeled poset arises exactly once.
pub fn partial_orders(n: usize) -> Vec<Order> {
    // down[j] masks over 0..k
    let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for down in &layer {
            let up_of = |i: usize| -> u64 {
                (0..k)
                    .filter(|&j| down[j] >> i & 1 == 1)
                    .fold(0, |m, j| m | 1 << j)
            };
            let ups: Vec<u64> = (0..k).map(up_of).collect();
            let is_down_set = |d: u64| Subset::from_bits(k, d).iter().all(|x| down[x] & !d == 0);
            let is_up_set = |u: u64| Subset::from_bits(k, u).iter().all(|x| ups[x] & !u == 0);
            let downs: Vec<u64> = (0..=full_mask(k)).filter(|&d| is_down_set(d)).collect();
            let up_sets: Vec<u64> = (0..=full_mask(k)).filter(|&u| is_up_set(u)).collect();
            for &d in &downs {
                for &u in &up_sets {
                    if d & u != 0 {
                        continue;
                    }
                    // every d below every u
                    if !Subset::from_bits(k, u).iter().all(|x| d & !down[x] == 0) {
                        continue;
                    }
                    let mut grown: Vec<u64> = down.clone();
                    for x in Subset::from_bits(k, u) {
                        grown[x] |= 1 << k;
                    }
                    grown.push(d | 1 << k);
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    let mut orders: Vec<Order> = layer
        .into_iter()
        .map(|down| Order::from_down_masks(n, down))
        .collect();
    orders.sort_by_cached_key(Order::matrix);
    orders
}

/// Whether every pair has a meet and a join.
pub fn is_lattice(order: &Order) -> bool {
    let n = order.size();
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            let pair = Subset::from_indices(n, [a, b]);
            order.glb(pair).is_some() && order.lub(pair).is_some()
        })
    })
}

/// Every lattice order on `0..n`, sorted by order matrix.
pub fn lattices(n: usize) -> Vec<Order> {
    partial_orders(n).into_iter().filter(is_lattice).collect()
}

/// Every partial order compatible with `table` on both sides, sorted by
/// order matrix. The discrete order is always first.
pub fn enumerate_compatible_orders(table: &CayleyTable) -> Vec<Order> {
    compatible_among(table, &partial_orders(table.size()))
}

pub(crate) fn compatible_among(table: &CayleyTable, orders: &[Order]) -> Vec<Order> {
    orders
        .iter()
        .filter(|o| is_compatible(table, o))
        .cloned()
        .collect()
}
