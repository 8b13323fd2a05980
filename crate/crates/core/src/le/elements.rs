//! Element-level ideal notions in poe- and le-semigroups.

use std::fmt;

use super::structure::{LeSemigroup, PoeOps};
use crate::algebra::{MiddleKind, Outcome, Subset};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Right,
    Left,
    Quasi,
    Bi,
}

impl ElementKind {
    pub const ALL: [ElementKind; 4] = [
        ElementKind::Right,
        ElementKind::Left,
        ElementKind::Quasi,
        ElementKind::Bi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ElementKind::Right => "right",
            ElementKind::Left => "left",
            ElementKind::Quasi => "quasi",
            ElementKind::Bi => "bi",
        }
    }
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<MiddleKind> for ElementKind {
    fn from(kind: MiddleKind) -> Self {
        match kind {
            MiddleKind::Bi => ElementKind::Bi,
            MiddleKind::Quasi => ElementKind::Quasi,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ElementFlags {
    pub right: bool,
    pub left: bool,
    pub bi: bool,
    pub quasi: bool,
    /// Whether `ae∧ea` exists. Always true in an le-semigroup.
    pub quasi_defined: bool,
}

impl ElementFlags {
    pub fn has(&self, kind: ElementKind) -> bool {
        match kind {
            ElementKind::Right => self.right,
            ElementKind::Left => self.left,
            ElementKind::Quasi => self.quasi,
            ElementKind::Bi => self.bi,
        }
    }
}

/// Classifies `a`:
///
/// * right ideal element: `ae ≤ a`; left: `ea ≤ a`
/// * bi-ideal element: `aea ≤ a`
/// * quasi-ideal element: `ae∧ea` exists and `ae∧ea ≤ a`
pub fn element_class<P: PoeOps + ?Sized>(p: &P, a: usize) -> ElementFlags {
    let e = p.top();
    let ae = p.mul(a, e);
    let ea = p.mul(e, a);
    let glb = p.meet_pair(ae, ea);
    ElementFlags {
        right: p.leq(ae, a),
        left: p.leq(ea, a),
        bi: p.leq(p.mul(ae, a), a),
        quasi: glb.is_some_and(|g| p.leq(g, a)),
        quasi_defined: glb.is_some(),
    }
}

/// The `kind`-element generated by `a`: `r(a) = a∨ae`, `l(a) = a∨ea`,
/// `q(a) = a∨(ae∧ea)`.
pub fn gen_element(l: &LeSemigroup, a: usize, kind: ElementKind) -> Result<usize> {
    check_index(l, a)?;
    let e = l.top();
    let ae = l.mul(a, e);
    let ea = l.mul(e, a);
    match kind {
        ElementKind::Right => Ok(l.join(a, ae)),
        ElementKind::Left => Ok(l.join(a, ea)),
        ElementKind::Quasi => Ok(l.join(a, l.meet(ae, ea))),
        ElementKind::Bi => Err(Error::Unsupported(
            "bi-ideal element generation has no closed form; use least_element_oracle".into(),
        )),
    }
}

/// Meet of every `kind`-element above `a`. `e` is always such an element.
pub fn least_element_oracle(l: &LeSemigroup, a: usize, kind: ElementKind) -> Result<usize> {
    check_index(l, a)?;
    Ok((0..l.size())
        .filter(|&t| l.leq(a, t) && element_class(l, t).has(kind))
        .fold(l.top(), |acc, t| l.meet(acc, t)))
}

fn check_index<P: PoeOps + ?Sized>(p: &P, a: usize) -> Result<()> {
    if a >= p.size() {
        return Err(Error::IndexOutOfRange {
            index: a,
            size: p.size(),
        });
    }
    Ok(())
}

/// Whether `a ≤ e·a²·e` for every `a`.
pub fn is_intra_regular_poe<P: PoeOps + ?Sized>(p: &P) -> bool {
    let e = p.top();
    (0..p.size()).all(|a| p.leq(a, p.mul(p.mul(e, p.mul(a, a)), e)))
}

/// A right ideal element `x`, left ideal element `y` and middle element `m`
/// with `x∧m∧y ≰ y·m·x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementWitness {
    pub kind: MiddleKind,
    pub x: usize,
    pub m: usize,
    pub y: usize,
}

/// Checks `x∧m∧y ≤ y·m·x` over all right ideal elements `x`, `kind`-elements
/// `m` and left ideal elements `y` for which `x∧m∧y` exists.
///
/// Triples are scanned in decreasing index order (`x`, then `m`, then `y`).
pub fn element_condition_holds<P: PoeOps + ?Sized>(
    p: &P,
    kind: MiddleKind,
) -> Outcome<ElementWitness> {
    let n = p.size();
    let flags: Vec<ElementFlags> = (0..n).map(|a| element_class(p, a)).collect();
    let middle = ElementKind::from(kind);
    for x in (0..n).rev().filter(|&x| flags[x].right) {
        for m in (0..n).rev().filter(|&m| flags[m].has(middle)) {
            for y in (0..n).rev().filter(|&y| flags[y].left) {
                let Some(glb) = p.glb(Subset::from_indices(n, [x, m, y])) else {
                    continue;
                };
                if !p.leq(glb, p.mul(p.mul(y, m), x)) {
                    return Outcome::Fails(ElementWitness { kind, x, m, y });
                }
            }
        }
    }
    Outcome::Holds
}

/// The element-level conditions of the equivalence on an le-semigroup.
pub fn le_condition_holds(l: &LeSemigroup, kind: MiddleKind) -> Outcome<ElementWitness> {
    element_condition_holds(l, kind)
}
