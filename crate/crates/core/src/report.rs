//! Verification reports and their line format.

use std::fmt;
use std::time::Instant;

use crate::algebra::ConditionWitness;
use crate::le::ElementWitness;

/// What the `ok` column of a report asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `c1 = c2 = c3`.
    Equivalence,
    /// `c1 ⇒ c2` and `c1 ⇒ c3`.
    Implication,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// An element with no intra-regularity witness.
    NotIntraRegular {
        element: usize,
    },
    Set(ConditionWitness),
    Element(ElementWitness),
}

/// Outcome of checking the three conditions on one structure.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    /// Hex SHA-256 of the canonical form; equal for isomorphic structures.
    pub structure_id: String,
    pub order: usize,
    pub claim: Claim,
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    /// Whether the claim holds on this structure. For [`Claim::Equivalence`]
    /// this is `c1 == c2 && c2 == c3`.
    pub equivalence_ok: bool,
    pub witnesses: Vec<Witness>,
    /// Milliseconds spent on c1, c2, c3.
    pub timing_ms: [f64; 3],
}

impl VerificationReport {
    pub fn equivalence(
        structure_id: String,
        order: usize,
        [c1, c2, c3]: [bool; 3],
        witnesses: Vec<Witness>,
        timing_ms: [f64; 3],
    ) -> Self {
        VerificationReport {
            structure_id,
            order,
            claim: Claim::Equivalence,
            c1,
            c2,
            c3,
            equivalence_ok: c1 == c2 && c2 == c3,
            witnesses,
            timing_ms,
        }
    }

    pub fn implication(
        structure_id: String,
        order: usize,
        [c1, c2, c3]: [bool; 3],
        witnesses: Vec<Witness>,
        timing_ms: [f64; 3],
    ) -> Self {
        VerificationReport {
            structure_id,
            order,
            claim: Claim::Implication,
            c1,
            c2,
            c3,
            equivalence_ok: !c1 || (c2 && c3),
            witnesses,
            timing_ms,
        }
    }

    /// `id \t c1 \t c2 \t c3 \t ok`.
    pub fn line(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}",
            self.structure_id, self.c1, self.c2, self.c3, self.equivalence_ok
        )
    }
}

pub(crate) fn elapsed_ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}
