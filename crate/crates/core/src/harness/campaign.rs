//! Verification campaigns over enumerated universes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::file::Structure;
use crate::algebra::verify_theorem1;
use crate::caps::Caps;
use crate::enumerate::{
    enumerate_le_semigroups, enumerate_ordered_semigroups, enumerate_poe_semigroups, Dedup,
    EnumerationConfig, Shard,
};
use crate::error::{Error, Result};
use crate::le::{verify_remark, verify_theorem2};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Ordered semigroups, set-level conditions.
    Theorem1,
    /// le-semigroups, element-level conditions.
    Theorem2,
    /// poe-semigroups, element-level implication where meets exist.
    Remark,
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theorem1" => Ok(Scope::Theorem1),
            "theorem2" => Ok(Scope::Theorem2),
            "remark" => Ok(Scope::Remark),
            other => Err(Error::Unsupported(format!("unknown scope `{other}`"))),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Theorem1 => "theorem1",
            Scope::Theorem2 => "theorem2",
            Scope::Remark => "remark",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub scope: Scope,
    pub max_order: usize,
    pub dedup: Dedup,
    pub shard: Option<Shard>,
}

#[derive(Clone, Debug)]
pub struct Campaign {
    /// In enumeration order: by carrier size, then by stream position.
    pub reports: Vec<VerificationReport>,
    pub failures: usize,
}

impl Campaign {
    pub fn summary(&self) -> String {
        format!(
            "checked {} structures, {} failures",
            self.reports.len(),
            self.failures
        )
    }
}

/// Verifies one structure against the scope, converting it where possible
/// (an le-semigroup is also a poe-semigroup and an ordered semigroup).
pub fn verify_structure(
    scope: Scope,
    structure: &Structure,
    caps: &Caps,
) -> Result<VerificationReport> {
    match scope {
        Scope::Theorem1 => verify_theorem1(&structure.to_ordered(), caps),
        Scope::Theorem2 => match structure {
            Structure::Le(l) => verify_theorem2(l, caps),
            _ => Err(Error::Unsupported("theorem2 needs an le_semigroup".into())),
        },
        Scope::Remark => {
            let poe = structure
                .to_poe()
                .ok_or_else(|| Error::Unsupported("remark needs a greatest element".into()))?;
            verify_remark(&poe, caps)
        }
    }
}

/// Enumerates every structure of order `1..=max_order` in the scope's
/// universe and verifies each one on the rayon pool. Reports come back in
/// enumeration order regardless of scheduling.
pub fn run_campaign(cfg: &CampaignConfig, caps: &Caps) -> Result<Campaign> {
    let max = match cfg.scope {
        Scope::Theorem2 => caps.lattice_order,
        Scope::Theorem1 | Scope::Remark => caps.semigroup_order,
    };
    // Refuse up front rather than after enumerating the smaller orders.
    if cfg.max_order == 0 || cfg.max_order > max {
        return Err(Error::OrderOutOfRange {
            order: cfg.max_order,
            max,
        });
    }
    let mut reports = Vec::new();
    for order in 1..=cfg.max_order {
        let ecfg = EnumerationConfig::new(order)
            .with_dedup(cfg.dedup)
            .with_shard(cfg.shard);
        let batch: Vec<VerificationReport> = match cfg.scope {
            Scope::Theorem1 => enumerate_ordered_semigroups(&ecfg, caps)?
                .par_iter()
                .map(|s| verify_theorem1(s, caps))
                .collect::<Result<_>>()?,
            Scope::Theorem2 => enumerate_le_semigroups(&ecfg, caps)?
                .par_iter()
                .map(|l| verify_theorem2(l, caps))
                .collect::<Result<_>>()?,
            Scope::Remark => enumerate_poe_semigroups(&ecfg, caps)?
                .par_iter()
                .map(|p| verify_remark(p, caps))
                .collect::<Result<_>>()?,
        };
        reports.extend(batch);
    }
    let failures = reports.iter().filter(|r| !r.equivalence_ok).count();
    Ok(Campaign { reports, failures })
}
