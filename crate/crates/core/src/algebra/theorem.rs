use std::time::Instant;

use super::ideals::{
    condition_holds, intra_regular_witness, is_intra_regular, MiddleKind, Outcome,
};
use super::structure::OrderedSemigroup;
use crate::caps::Caps;
use crate::enumerate::canon::structure_id;
use crate::error::Result;
use crate::report::{elapsed_ms, VerificationReport, Witness};

/// Evaluates the three conditions of the set-level equivalence on `S`:
/// intra-regularity, the bi-ideal condition, and the quasi-ideal condition.
pub fn verify_theorem1(s: &OrderedSemigroup, caps: &Caps) -> Result<VerificationReport> {
    let id = structure_id(s.table(), s.order(), caps)?;
    let mut witnesses = Vec::new();

    let t = Instant::now();
    let c1 = is_intra_regular(s);
    if !c1 {
        if let Some(a) = (0..s.size()).find(|&a| matches!(intra_regular_witness(s, a), Ok(None))) {
            witnesses.push(Witness::NotIntraRegular { element: a });
        }
    }
    let t1 = elapsed_ms(t);

    let mut condition = |kind| -> Result<(bool, f64)> {
        let t = Instant::now();
        let outcome = condition_holds(s, kind, caps)?;
        if let Outcome::Fails(w) = outcome {
            witnesses.push(Witness::Set(w));
        }
        Ok((outcome.holds(), elapsed_ms(t)))
    };
    let (c2, t2) = condition(MiddleKind::Bi)?;
    let (c3, t3) = condition(MiddleKind::Quasi)?;

    Ok(VerificationReport::equivalence(
        id,
        s.size(),
        [c1, c2, c3],
        witnesses,
        [t1, t2, t3],
    ))
}
