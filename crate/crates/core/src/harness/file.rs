//! The JSON structure file.
//!
//! ```json
//! {
//!   "kind": "ordered_semigroup",
//!   "order": 2,
//!   "table": [
//!     [0, 0],
//!     [0, 0]
//!   ],
//!   "leq": [[0, 1]],
//!   "names": ["0", "a"]
//! }
//! ```
//!
//! `leq` lists `i ≤ j` pairs; reflexive pairs may be omitted and the
//! reflexive-transitive closure is taken on load. `poe_semigroup` files add
//! an optional `top`. `le_semigroup` files carry `join`, `meet` and `top`
//! instead of `leq`.

use std::fmt::Write as _;
use std::path::Path;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::{CayleyTable, Order, OrderedSemigroup, Subset};
use crate::error::{Error, Result};
use crate::le::{LeSemigroup, PoeOps, PoeSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    OrderedSemigroup,
    PoeSemigroup,
    LeSemigroup,
}

/// The on-disk record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: StructureKind,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Ordered(OrderedSemigroup),
    Poe(PoeSemigroup),
    Le(LeSemigroup),
}

impl Structure {
    pub fn size(&self) -> usize {
        match self {
            Structure::Ordered(s) => s.size(),
            Structure::Poe(p) => p.base().size(),
            Structure::Le(l) => l.table().size(),
        }
    }

    pub fn kind(&self) -> StructureKind {
        match self {
            Structure::Ordered(_) => StructureKind::OrderedSemigroup,
            Structure::Poe(_) => StructureKind::PoeSemigroup,
            Structure::Le(_) => StructureKind::LeSemigroup,
        }
    }

    /// The underlying ordered semigroup (the induced order for le-semigroups).
    pub fn to_ordered(&self) -> OrderedSemigroup {
        match self {
            Structure::Ordered(s) => s.clone(),
            Structure::Poe(p) => p.base().clone(),
            Structure::Le(l) => l.to_ordered(),
        }
    }

    /// The structure as a poe-semigroup, if its order has a greatest element.
    pub fn to_poe(&self) -> Option<PoeSemigroup> {
        match self {
            Structure::Ordered(s) => PoeSemigroup::from_ordered(s.clone()),
            Structure::Poe(p) => Some(p.clone()),
            Structure::Le(l) => Some(l.to_poe()),
        }
    }

    /// Axiom violations, rendered.
    pub fn violations(&self) -> Vec<String> {
        match self {
            Structure::Ordered(s) => s.validate().iter().map(ToString::to_string).collect(),
            Structure::Poe(p) => p.validate().iter().map(ToString::to_string).collect(),
            Structure::Le(l) => l.validate().iter().map(ToString::to_string).collect(),
        }
    }
}

/// A structure together with optional element labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedStructure {
    pub structure: Structure,
    pub names: Option<Vec<String>>,
}

impl NamedStructure {
    pub fn new(structure: Structure) -> Self {
        NamedStructure {
            structure,
            names: None,
        }
    }

    pub fn with_names(structure: Structure, names: Vec<String>) -> Self {
        NamedStructure {
            structure,
            names: Some(names),
        }
    }

    pub fn label(&self, element: usize) -> String {
        match &self.names {
            Some(names) => names[element].clone(),
            None => element.to_string(),
        }
    }

    /// `{l0, l1, …}` with element labels.
    pub fn format_subset(&self, set: Subset) -> String {
        let mut out = String::from("{");
        for (k, e) in set.iter().enumerate() {
            if k > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}", self.label(e));
        }
        out.push('}');
        out
    }

    /// An element given by label, falling back to its index.
    pub fn parse_element(&self, text: &str) -> Result<usize> {
        let text = text.trim();
        if let Some(i) = self
            .names
            .as_ref()
            .and_then(|names| names.iter().position(|n| n == text))
        {
            return Ok(i);
        }
        let index: usize = text
            .parse()
            .map_err(|_| Error::UnknownElement(text.to_owned()))?;
        let size = self.structure.size();
        if index >= size {
            return Err(Error::IndexOutOfRange { index, size });
        }
        Ok(index)
    }

    /// A comma-separated list of elements.
    pub fn parse_subset(&self, text: &str) -> Result<Subset> {
        let mut set = Subset::empty(self.structure.size());
        for part in text.split(',').filter(|p| !p.trim().is_empty()) {
            set.insert(self.parse_element(part)?);
        }
        Ok(set)
    }

    pub fn to_file(&self) -> StructureFile {
        let pairs = |order: &Order| -> Vec<[usize; 2]> {
            order
                .strict_pairs()
                .into_iter()
                .map(|(i, j)| [i, j])
                .collect()
        };
        let (table, leq, join, meet, top) = match &self.structure {
            Structure::Ordered(s) => (s.table().rows(), Some(pairs(s.order())), None, None, None),
            Structure::Poe(p) => {
                let s = p.base();
                (
                    s.table().rows(),
                    Some(pairs(s.order())),
                    None,
                    None,
                    Some(p.top()),
                )
            }
            Structure::Le(l) => (
                l.table().rows(),
                None,
                Some(l.join_table().rows()),
                Some(l.meet_table().rows()),
                Some(l.top()),
            ),
        };
        StructureFile {
            kind: self.structure.kind(),
            order: self.structure.size(),
            table,
            leq,
            join,
            meet,
            top,
            names: self.names.clone(),
        }
    }
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

fn schema(path: &Path, field: &'static str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_owned(),
        field,
        message: message.into(),
    }
}

fn matrix(path: &Path, field: &'static str, rows: &[Vec<usize>], n: usize) -> Result<CayleyTable> {
    if rows.len() != n {
        return Err(schema(
            path,
            field,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    CayleyTable::from_rows(rows).map_err(|e| schema(path, field, e.to_string()))
}

impl StructureFile {
    /// Rebuilds and validates the structure. `path` is used in messages.
    pub fn into_structure(self, path: &Path) -> Result<NamedStructure> {
        let n = self.order;
        if n == 0 {
            return Err(schema(path, "order", "must be at least 1"));
        }
        let table = matrix(path, "table", &self.table, n)?;
        if let Some(names) = &self.names {
            if names.len() != n {
                return Err(schema(
                    path,
                    "names",
                    format!("expected {n} labels, found {}", names.len()),
                ));
            }
        }
        let order_from_pairs = |pairs: &Option<Vec<[usize; 2]>>| -> Result<Order> {
            let pairs: Vec<(usize, usize)> = pairs
                .as_deref()
                .unwrap_or_default()
                .iter()
                .map(|&[i, j]| (i, j))
                .collect();
            Order::closure_of_pairs(n, &pairs).map_err(|e| schema(path, "leq", e.to_string()))
        };
        let structure = match self.kind {
            StructureKind::OrderedSemigroup => {
                if self.join.is_some() || self.meet.is_some() {
                    return Err(schema(path, "join", "only allowed for le_semigroup"));
                }
                Structure::Ordered(OrderedSemigroup::new(table, order_from_pairs(&self.leq)?)?)
            }
            StructureKind::PoeSemigroup => {
                let base = OrderedSemigroup::new(table, order_from_pairs(&self.leq)?)?;
                let top = match self.top {
                    Some(top) => top,
                    None => base
                        .order()
                        .top()
                        .ok_or_else(|| schema(path, "top", "the order has no greatest element"))?,
                };
                Structure::Poe(
                    PoeSemigroup::new(base, top).map_err(|e| schema(path, "top", e.to_string()))?,
                )
            }
            StructureKind::LeSemigroup => {
                if self.leq.is_some() {
                    return Err(schema(
                        path,
                        "leq",
                        "le_semigroup files carry join and meet instead",
                    ));
                }
                let join = self.join.ok_or_else(|| schema(path, "join", "missing"))?;
                let meet = self.meet.ok_or_else(|| schema(path, "meet", "missing"))?;
                let top = self.top.ok_or_else(|| schema(path, "top", "missing"))?;
                let join = matrix(path, "join", &join, n)?;
                let meet = matrix(path, "meet", &meet, n)?;
                Structure::Le(
                    LeSemigroup::new(table, join, meet, top)
                        .map_err(|e| schema(path, "top", e.to_string()))?,
                )
            }
        };
        let violations = structure.violations();
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }
        Ok(NamedStructure {
            structure,
            names: self.names,
        })
    }

    /// Pretty JSON with one matrix row per line.
    pub fn to_pretty_json(&self) -> String {
        let row = |r: &[usize]| format!("[{}]", r.iter().join(", "));
        let rows = |m: &[Vec<usize>]| -> String {
            let body: Vec<String> = m.iter().map(|r| format!("    {}", row(r))).collect();
            format!("[\n{}\n  ]", body.join(",\n"))
        };
        let mut fields = vec![
            format!("  \"kind\": {}", to_json(&self.kind)),
            format!("  \"order\": {}", self.order),
            format!("  \"table\": {}", rows(&self.table)),
        ];
        if let Some(leq) = &self.leq {
            let pairs = leq.iter().map(|p| row(p)).join(", ");
            fields.push(format!("  \"leq\": [{pairs}]"));
        }
        if let Some(join) = &self.join {
            fields.push(format!("  \"join\": {}", rows(join)));
        }
        if let Some(meet) = &self.meet {
            fields.push(format!("  \"meet\": {}", rows(meet)));
        }
        if let Some(top) = self.top {
            fields.push(format!("  \"top\": {top}"));
        }
        if let Some(names) = &self.names {
            let names = names.iter().map(to_json).join(", ");
            fields.push(format!("  \"names\": [{names}]"));
        }
        format!("{{\n{}\n}}\n", fields.join(",\n"))
    }
}

/// Parses and validates a structure from JSON text.
pub fn parse(text: &str, path: &Path) -> Result<NamedStructure> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        path: path.to_owned(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_structure(path)
}

pub fn load(path: impl AsRef<Path>) -> Result<NamedStructure> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse(&text, path)
}

pub fn save(structure: &NamedStructure, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, structure.to_file().to_pretty_json()).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}
