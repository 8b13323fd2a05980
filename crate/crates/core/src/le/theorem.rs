use std::time::Instant;

use super::elements::{
    element_condition_holds, is_intra_regular_poe, le_condition_holds, ElementWitness,
};
use super::structure::{LeSemigroup, PoeOps, PoeSemigroup};
use crate::algebra::{MiddleKind, Outcome};
use crate::caps::Caps;
use crate::enumerate::canon::structure_id;
use crate::error::Result;
use crate::report::{elapsed_ms, VerificationReport, Witness};

fn not_intra_regular<P: PoeOps>(p: &P) -> Option<Witness> {
    let e = p.top();
    (0..p.size())
        .find(|&a| !p.leq(a, p.mul(p.mul(e, p.mul(a, a)), e)))
        .map(|element| Witness::NotIntraRegular { element })
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let out = f();
    (out, elapsed_ms(t))
}

/// Evaluates the three element-level conditions on an le-semigroup:
/// `a ≤ ea²e`, the bi-ideal element condition, and the quasi-ideal element
/// condition.
pub fn verify_theorem2(l: &LeSemigroup, caps: &Caps) -> Result<VerificationReport> {
    let id = structure_id(l.table(), l.order(), caps)?;
    let (c1, t1) = timed(|| is_intra_regular_poe(l));
    let (bi, t2) = timed(|| le_condition_holds(l, MiddleKind::Bi));
    let (quasi, t3) = timed(|| le_condition_holds(l, MiddleKind::Quasi));

    let witnesses = [not_intra_regular(l)]
        .into_iter()
        .flatten()
        .chain(
            [bi, quasi]
                .iter()
                .filter_map(|o| o.witness().copied().map(Witness::Element)),
        )
        .collect();
    Ok(VerificationReport::equivalence(
        id,
        l.size(),
        [c1, bi.holds(), quasi.holds()],
        witnesses,
        [t1, t2, t3],
    ))
}

/// If `P` is intra-regular, checks `x∧b∧y ≤ ybx` for every right ideal
/// element `x`, bi-ideal element `b` and left ideal element `y` whose
/// greatest lower bound exists. Holds vacuously otherwise.
pub fn check_remark(p: &PoeSemigroup) -> Outcome<ElementWitness> {
    if !is_intra_regular_poe(p) {
        return Outcome::Holds;
    }
    element_condition_holds(p, MiddleKind::Bi)
}

/// Report for the poe-level implication: c1 is intra-regularity, c2 and c3
/// are the bi- and quasi-element conditions restricted to triples whose
/// greatest lower bound exists. The claim checked is `c1 ⇒ c2 ∧ c3`.
pub fn verify_remark(p: &PoeSemigroup, caps: &Caps) -> Result<VerificationReport> {
    let base = p.base();
    let id = structure_id(base.table(), base.order(), caps)?;
    let (c1, t1) = timed(|| is_intra_regular_poe(p));
    let (bi, t2) = timed(|| element_condition_holds(p, MiddleKind::Bi));
    let (quasi, t3) = timed(|| element_condition_holds(p, MiddleKind::Quasi));
    let witnesses = [not_intra_regular(p)]
        .into_iter()
        .flatten()
        .chain(
            [bi, quasi]
                .iter()
                .filter_map(|o| o.witness().copied().map(Witness::Element)),
        )
        .collect();
    Ok(VerificationReport::implication(
        id,
        p.size(),
        [c1, bi.holds(), quasi.holds()],
        witnesses,
        [t1, t2, t3],
    ))
}
