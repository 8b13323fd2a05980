use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Dedup {
    /// Every labeled structure.
    #[default]
    None,
    /// One canonical representative per isomorphism class.
    UpToIso,
}

/// A slice `index` of `total` of a partitioned search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub total: usize,
}

impl Shard {
    pub fn new(index: usize, total: usize) -> Result<Self> {
        if total == 0 || index >= total {
            return Err(Error::InvalidShard(format!("{index}/{total}")));
        }
        Ok(Shard { index, total })
    }

    /// Whether search branch number `branch` belongs to this shard.
    #[inline]
    pub fn owns(&self, branch: usize) -> bool {
        branch % self.total == self.index
    }
}

impl FromStr for Shard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidShard(s.to_owned());
        let (i, t) = s.split_once('/').ok_or_else(bad)?;
        let index = i.trim().parse().map_err(|_| bad())?;
        let total = t.trim().parse().map_err(|_| bad())?;
        Shard::new(index, total).map_err(|_| bad())
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.total)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub order: usize,
    pub dedup: Dedup,
    pub limit: Option<usize>,
    pub shard: Option<Shard>,
}

impl EnumerationConfig {
    pub fn new(order: usize) -> Self {
        EnumerationConfig {
            order,
            dedup: Dedup::None,
            limit: None,
            shard: None,
        }
    }

    pub fn up_to_iso(mut self) -> Self {
        self.dedup = Dedup::UpToIso;
        self
    }

    pub fn with_dedup(mut self, dedup: Dedup) -> Self {
        self.dedup = dedup;
        self
    }

    pub fn with_shard(mut self, shard: Option<Shard>) -> Self {
        self.shard = shard;
        self
    }

    pub fn with_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    pub(crate) fn check_order(&self, max: usize) -> Result<()> {
        if self.order == 0 || self.order > max {
            return Err(Error::OrderOutOfRange {
                order: self.order,
                max,
            });
        }
        Ok(())
    }

    pub(crate) fn owns(&self, branch: usize) -> bool {
        self.shard.is_none_or(|s| s.owns(branch))
    }
}
