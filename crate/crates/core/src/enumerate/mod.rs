//! Exhaustive generation of small semigroups, ordered semigroups and
//! le-semigroups.
//!
//! Output order is deterministic and does not depend on sharding: a sharded
//! run yields a subsequence of the unsharded stream, and the shards
//! partition it.

pub mod canon;
mod config;
mod orders;
mod search;

use std::ops::ControlFlow;

use crate::algebra::{CayleyTable, Order, OrderedSemigroup};
use crate::caps::Caps;
use crate::error::Result;
use crate::le::{LeSemigroup, PoeSemigroup};

pub use config::{Dedup, EnumerationConfig, Shard};
pub use orders::{enumerate_compatible_orders, is_lattice, lattices, partial_orders};
use search::{branch_count, TableSearch};

/// Visits every associative table of the configured order, in lexicographic
/// order. With [`Dedup::UpToIso`] only tables that are their own canonical
/// form are visited.
pub fn for_each_semigroup(
    cfg: &EnumerationConfig,
    caps: &Caps,
    mut visit: impl FnMut(CayleyTable) -> ControlFlow<()>,
) -> Result<()> {
    cfg.check_order(caps.semigroup_order)?;
    let n = cfg.order;
    let perms = match cfg.dedup {
        Dedup::None => Vec::new(),
        Dedup::UpToIso => {
            if n > caps.canonical_order {
                return Err(crate::error::Error::CapExceeded {
                    what: "canonicalization",
                    size: n,
                    cap: caps.canonical_order,
                });
            }
            canon::permutations(n)
        }
    };
    let mut remaining = cfg.limit.unwrap_or(usize::MAX);
    if remaining == 0 {
        return Ok(());
    }
    let owns = |branch| cfg.owns(branch);
    let mut on_table = |cells: &[usize]| {
        let table = CayleyTable::from_cells(n, cells.to_vec()).expect("search yields valid cells");
        if cfg.dedup == Dedup::UpToIso && !canon::is_canonical_table(&table, &perms) {
            return ControlFlow::Continue(());
        }
        visit(table)?;
        remaining -= 1;
        if remaining == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };
    let _ = TableSearch::semigroups(n).run(&owns, &mut on_table);
    Ok(())
}

/// All associative tables of the configured order; see [`for_each_semigroup`].
pub fn enumerate_semigroups(cfg: &EnumerationConfig, caps: &Caps) -> Result<Vec<CayleyTable>> {
    let mut out = Vec::new();
    for_each_semigroup(cfg, caps, |t| {
        out.push(t);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Every (associative table, compatible partial order) pair.
///
/// Pairs are grouped by table (lexicographic) and then by order matrix. With
/// [`Dedup::UpToIso`], each pair is the canonical form of its class: its
/// table is a canonical table, and its order is least among the images under
/// that table's automorphisms.
pub fn enumerate_ordered_semigroups(
    cfg: &EnumerationConfig,
    caps: &Caps,
) -> Result<Vec<OrderedSemigroup>> {
    let table_cfg = EnumerationConfig {
        limit: None,
        ..*cfg
    };
    let posets = partial_orders(cfg.order);
    let perms = canon::permutations(cfg.order);
    let limit = cfg.limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for_each_semigroup(&table_cfg, caps, |table| {
        let automorphisms = match cfg.dedup {
            Dedup::None => Vec::new(),
            Dedup::UpToIso => canon::table_automorphisms(&table, &perms),
        };
        for order in orders::compatible_among(&table, &posets) {
            if cfg.dedup == Dedup::UpToIso && !canon::order_minimal_under(&order, &automorphisms) {
                continue;
            }
            if out.len() == limit {
                return ControlFlow::Break(());
            }
            out.push(OrderedSemigroup::new(table.clone(), order).expect("sizes agree"));
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Ordered semigroups whose order has a greatest element.
pub fn enumerate_poe_semigroups(cfg: &EnumerationConfig, caps: &Caps) -> Result<Vec<PoeSemigroup>> {
    let unlimited = EnumerationConfig {
        limit: None,
        ..*cfg
    };
    let mut out: Vec<PoeSemigroup> = enumerate_ordered_semigroups(&unlimited, caps)?
        .into_iter()
        .filter_map(PoeSemigroup::from_ordered)
        .collect();
    if let Some(limit) = cfg.limit {
        out.truncate(limit);
    }
    Ok(out)
}

/// Every le-semigroup of the configured order.
///
/// With [`Dedup::None`]: every labeled lattice (sorted by order matrix) and,
/// for each, every associative multiplication distributing over join on both
/// sides, in lexicographic order.
///
/// With [`Dedup::UpToIso`]: the canonical form of each isomorphism class,
/// sorted by canonical encoding. Classes are found once each by fixing one
/// lattice per lattice isomorphism type and keeping only the multiplication
/// tables that are least under that lattice's automorphisms.
pub fn enumerate_le_semigroups(cfg: &EnumerationConfig, caps: &Caps) -> Result<Vec<LeSemigroup>> {
    cfg.check_order(caps.lattice_order)?;
    let n = cfg.order;
    let all_lattices = lattices(n);
    let perms = match cfg.dedup {
        Dedup::None => Vec::new(),
        Dedup::UpToIso => canon::permutations(n),
    };
    let lattice_list: Vec<Order> = match cfg.dedup {
        Dedup::None => all_lattices,
        Dedup::UpToIso => all_lattices
            .into_iter()
            .filter(|o| canon::is_canonical_order(o, &perms))
            .collect(),
    };

    let branches = branch_count(n);
    let mut found: Vec<(CayleyTable, Order)> = Vec::new();
    for (li, order) in lattice_list.iter().enumerate() {
        let probe = LeSemigroup::from_lattice(CayleyTable::from_fn(n, |_, _| 0)?, order)?;
        let join = probe.join_table().clone();
        let automorphisms = match cfg.dedup {
            Dedup::None => Vec::new(),
            Dedup::UpToIso => canon::order_automorphisms(order, &perms),
        };
        let owns = |branch: usize| cfg.owns(li * branches + branch);
        let mut on_table = |cells: &[usize]| {
            let table =
                CayleyTable::from_cells(n, cells.to_vec()).expect("search yields valid cells");
            if cfg.dedup == Dedup::UpToIso && !canon::table_minimal_under(&table, &automorphisms) {
                return ControlFlow::Continue(());
            }
            found.push((table, order.clone()));
            if cfg.dedup == Dedup::None && cfg.limit == Some(found.len()) {
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        };
        if TableSearch::distributive_over(&join)
            .run(&owns, &mut on_table)
            .is_break()
        {
            break;
        }
    }

    if cfg.dedup == Dedup::UpToIso {
        let mut canonical = found
            .into_iter()
            .map(|(t, o)| canon::canonicalize(&t, &o, caps))
            .collect::<Result<Vec<_>>>()?;
        canonical.sort_by_cached_key(|(t, o)| canon::encode(t, o));
        if let Some(limit) = cfg.limit {
            canonical.truncate(limit);
        }
        found = canonical;
    }
    found
        .into_iter()
        .map(|(t, o)| LeSemigroup::from_lattice(t, &o))
        .collect()
}
