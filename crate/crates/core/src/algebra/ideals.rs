//! Set-level operations on a finite ordered semigroup `S`: the down-closure
//! `(A]`, set products, ideal classification, generated ideals, and
//! intra-regularity.

use std::fmt;

use super::structure::OrderedSemigroup;
use super::subset::Subset;
use crate::caps::Caps;
use crate::error::{Error, Result};

/// `(A] = {t ∈ S | t ≤ h for some h ∈ A}`.
pub fn downward_closure(s: &OrderedSemigroup, a: Subset) -> Subset {
    let masks = s.order().down_masks();
    let bits = a.iter().fold(0u64, |m, h| m | masks[h]);
    Subset::from_bits(s.size(), bits)
}

/// `AB = {a·b | a ∈ A, b ∈ B}`.
pub fn set_product(s: &OrderedSemigroup, a: Subset, b: Subset) -> Subset {
    let mut bits = 0u64;
    for x in a {
        for y in b {
            bits |= 1 << s.mul(x, y);
        }
    }
    Subset::from_bits(s.size(), bits)
}

/// `(AB]`.
pub fn closed_product(s: &OrderedSemigroup, a: Subset, b: Subset) -> Subset {
    downward_closure(s, set_product(s, a, b))
}

/// Which ideal notions a subset satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IdealFlags {
    pub left: bool,
    pub right: bool,
    pub quasi: bool,
    pub bi: bool,
    pub downward_closed: bool,
    pub nonempty: bool,
}

impl IdealFlags {
    pub fn has(&self, kind: IdealKind) -> bool {
        match kind {
            IdealKind::Left => self.left,
            IdealKind::Right => self.right,
            IdealKind::Quasi => self.quasi,
            IdealKind::Bi => self.bi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealKind {
    Left,
    Right,
    Quasi,
    Bi,
}

impl IdealKind {
    pub const ALL: [IdealKind; 4] = [
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::Quasi,
        IdealKind::Bi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::Quasi => "quasi",
            IdealKind::Bi => "bi",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classifies `A` against the definitions. Every ideal notion requires `A`
/// to be nonempty and downward closed in addition to its multiplicative
/// condition:
///
/// * left: `SA ⊆ A`; right: `AS ⊆ A`
/// * quasi: `(AS] ∩ (SA] ⊆ A`
/// * bi: `ASA ⊆ A`
pub fn classify_subset(s: &OrderedSemigroup, a: Subset) -> IdealFlags {
    let nonempty = !a.is_empty();
    let downward_closed = downward_closure(s, a) == a;
    let base = nonempty && downward_closed;
    let whole = s.carrier();
    let sa = set_product(s, whole, a);
    let as_ = set_product(s, a, whole);
    let quasi_part = downward_closure(s, as_).intersection(downward_closure(s, sa));
    let asa = set_product(s, as_, a);
    IdealFlags {
        left: base && sa.is_subset(a),
        right: base && as_.is_subset(a),
        quasi: base && quasi_part.is_subset(a),
        bi: base && asa.is_subset(a),
        downward_closed,
        nonempty,
    }
}

fn check_subset_cap(s: &OrderedSemigroup, caps: &Caps) -> Result<()> {
    if s.size() > caps.subset_order {
        return Err(Error::CapExceeded {
            what: "exhaustive-subset",
            size: s.size(),
            cap: caps.subset_order,
        });
    }
    Ok(())
}

/// All subsets of `S` that are `kind`-ideals, in increasing bit-mask order.
pub fn ideals(s: &OrderedSemigroup, kind: IdealKind, caps: &Caps) -> Result<Vec<Subset>> {
    check_subset_cap(s, caps)?;
    Ok(Subset::nonempty(s.size())
        .filter(|&a| classify_subset(s, a).has(kind))
        .collect())
}

/// The `kind`-ideal generated by `X`:
///
/// * right: `(X ∪ XS]`
/// * left: `(X ∪ SX]`
/// * quasi: `(X ∪ ((XS] ∩ (SX]))]`
///
/// There is no closed form for bi-ideals here; use [`least_ideal_oracle`].
pub fn gen_ideal(s: &OrderedSemigroup, x: Subset, kind: IdealKind) -> Result<Subset> {
    if x.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    let whole = s.carrier();
    let generated = match kind {
        IdealKind::Right => x.union(set_product(s, x, whole)),
        IdealKind::Left => x.union(set_product(s, whole, x)),
        IdealKind::Quasi => {
            let xs = closed_product(s, x, whole);
            let sx = closed_product(s, whole, x);
            x.union(xs.intersection(sx))
        }
        IdealKind::Bi => {
            return Err(Error::Unsupported(
                "bi-ideal generation has no closed form; use least_ideal_oracle".into(),
            ))
        }
    };
    Ok(downward_closure(s, generated))
}

/// The least `kind`-ideal containing `X`, found by intersecting every
/// `kind`-ideal that contains `X`. Exponential in `|S|`.
pub fn least_ideal_oracle(
    s: &OrderedSemigroup,
    x: Subset,
    kind: IdealKind,
    caps: &Caps,
) -> Result<Subset> {
    if x.is_empty() {
        return Err(Error::EmptyGenerator);
    }
    check_subset_cap(s, caps)?;
    // S itself is an ideal of every kind, so the family is never empty.
    Ok(Subset::nonempty(s.size())
        .filter(|&t| x.is_subset(t) && classify_subset(s, t).has(kind))
        .fold(s.carrier(), Subset::intersection))
}

/// `(S a² S]`.
fn two_sided_square_closure(s: &OrderedSemigroup, a: usize) -> Subset {
    let whole = s.carrier();
    let square = s.singleton(s.mul(a, a));
    downward_closure(s, set_product(s, set_product(s, whole, square), whole))
}

/// Whether every `a ∈ S` lies in `(S a² S]`.
pub fn is_intra_regular(s: &OrderedSemigroup) -> bool {
    (0..s.size()).all(|a| two_sided_square_closure(s, a).contains(a))
}

/// The first pair `(x, y)` in lexicographic order with `a ≤ x·a²·y`.
pub fn intra_regular_witness(s: &OrderedSemigroup, a: usize) -> Result<Option<(usize, usize)>> {
    let n = s.size();
    if a >= n {
        return Err(Error::IndexOutOfRange { index: a, size: n });
    }
    let square = s.mul(a, a);
    for x in 0..n {
        let left = s.mul(x, square);
        for y in 0..n {
            if s.leq(a, s.mul(left, y)) {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// The middle ideal family in the set-level conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MiddleKind {
    Bi,
    Quasi,
}

impl MiddleKind {
    pub fn ideal_kind(self) -> IdealKind {
        match self {
            MiddleKind::Bi => IdealKind::Bi,
            MiddleKind::Quasi => IdealKind::Quasi,
        }
    }
}

impl fmt::Display for MiddleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ideal_kind().name())
    }
}

/// A right ideal `x`, left ideal `y` and middle ideal `m` with an element of
/// `x ∩ m ∩ y` outside `(y·m·x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionWitness {
    pub kind: MiddleKind,
    pub x: Subset,
    pub m: Subset,
    pub y: Subset,
    pub violating_element: usize,
}

/// Result of checking a universally quantified condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome<W> {
    Holds,
    Fails(W),
}

impl<W> Outcome<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Outcome::Holds => None,
            Outcome::Fails(w) => Some(w),
        }
    }
}

/// Checks `X ∩ M ∩ Y ⊆ (YMX]` for every right ideal `X`, left ideal `Y` and
/// `kind`-ideal `M`.
///
/// Triples are scanned from the largest subsets down (decreasing bit-mask
/// order of `X`, then `M`, then `Y`), and the witness names the least
/// violating element, so the reported counterexample is reproducible.
pub fn condition_holds(
    s: &OrderedSemigroup,
    kind: MiddleKind,
    caps: &Caps,
) -> Result<Outcome<ConditionWitness>> {
    let rights = ideals(s, IdealKind::Right, caps)?;
    let lefts = ideals(s, IdealKind::Left, caps)?;
    let middles = ideals(s, kind.ideal_kind(), caps)?;
    for &x in rights.iter().rev() {
        for &m in middles.iter().rev() {
            let xm = x.intersection(m);
            for &y in lefts.iter().rev() {
                let meet = xm.intersection(y);
                if meet.is_empty() {
                    continue;
                }
                let ymx = downward_closure(s, set_product(s, set_product(s, y, m), x));
                if let Some(e) = meet.difference(ymx).first() {
                    return Ok(Outcome::Fails(ConditionWitness {
                        kind,
                        x,
                        m,
                        y,
                        violating_element: e,
                    }));
                }
            }
        }
    }
    Ok(Outcome::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::structure::{CayleyTable, Order};
    use crate::fixtures;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn closure_examples() {
        let n2 = fixtures::n2();
        assert_eq!(downward_closure(&n2, set(2, &[1])), set(2, &[0, 1]));
        assert_eq!(downward_closure(&n2, n2.carrier()), n2.carrier());
        let s2l = fixtures::s2l();
        for a in Subset::all(2) {
            assert_eq!(downward_closure(&s2l, a), a);
        }
    }

    #[test]
    fn product_examples() {
        let s2l = fixtures::s2l();
        assert_eq!(set_product(&s2l, set(2, &[0]), set(2, &[1])), set(2, &[0]));
        let n2 = fixtures::n2();
        assert_eq!(set_product(&n2, set(2, &[1]), set(2, &[1])), set(2, &[0]));
        assert!(set_product(&n2, set(2, &[1]), Subset::empty(2)).is_empty());
        assert!(set_product(&n2, Subset::empty(2), n2.carrier()).is_empty());
    }

    #[test]
    fn classify_examples() {
        let n2 = fixtures::n2();
        let f = classify_subset(&n2, set(2, &[0]));
        assert!(f.left && f.right && f.quasi && f.bi && f.downward_closed && f.nonempty);

        let s2l = fixtures::s2l();
        let f = classify_subset(&s2l, set(2, &[0]));
        assert!(f.right && !f.left && f.quasi && f.bi);

        let f = classify_subset(&n2, set(2, &[1]));
        assert!(!f.left && !f.right && !f.quasi && !f.bi);
        assert!(!f.downward_closed);

        let f = classify_subset(&n2, Subset::empty(2));
        assert_eq!(
            f,
            IdealFlags {
                downward_closed: true,
                ..IdealFlags::default()
            }
        );
    }

    #[test]
    fn generator_examples() {
        let n2 = fixtures::n2();
        let caps = Caps::default();
        assert_eq!(
            gen_ideal(&n2, set(2, &[1]), IdealKind::Quasi).unwrap(),
            set(2, &[0, 1])
        );
        let s2l = fixtures::s2l();
        assert_eq!(
            gen_ideal(&s2l, set(2, &[0]), IdealKind::Right).unwrap(),
            set(2, &[0])
        );
        assert_eq!(
            gen_ideal(&s2l, set(2, &[0]), IdealKind::Left).unwrap(),
            set(2, &[0, 1])
        );

        assert_eq!(
            least_ideal_oracle(&n2, set(2, &[1]), IdealKind::Quasi, &caps).unwrap(),
            set(2, &[0, 1])
        );
        assert_eq!(
            least_ideal_oracle(&s2l, set(2, &[0]), IdealKind::Right, &caps).unwrap(),
            set(2, &[0])
        );
        let one = OrderedSemigroup::trivial();
        for kind in IdealKind::ALL {
            assert_eq!(
                least_ideal_oracle(&one, set(1, &[0]), kind, &caps).unwrap(),
                set(1, &[0])
            );
        }
    }

    #[test]
    fn empty_generator_is_an_error() {
        let n2 = fixtures::n2();
        assert!(matches!(
            gen_ideal(&n2, Subset::empty(2), IdealKind::Left),
            Err(Error::EmptyGenerator)
        ));
        assert!(matches!(
            least_ideal_oracle(&n2, Subset::empty(2), IdealKind::Quasi, &Caps::default()),
            Err(Error::EmptyGenerator)
        ));
    }

    #[test]
    fn oracle_respects_cap() {
        let s = OrderedSemigroup::with_discrete_order(CayleyTable::from_fn(13, |a, _| a).unwrap());
        let err = least_ideal_oracle(
            &s,
            Subset::singleton(13, 0),
            IdealKind::Left,
            &Caps::default(),
        );
        assert!(matches!(
            err,
            Err(Error::CapExceeded {
                size: 13,
                cap: 12,
                ..
            })
        ));
        let err = condition_holds(&s, MiddleKind::Quasi, &Caps::default());
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn intra_regularity_examples() {
        assert!(is_intra_regular(&fixtures::s2l()));
        assert!(!is_intra_regular(&fixtures::n2()));
        let z2 =
            OrderedSemigroup::with_discrete_order(CayleyTable::from_fn(2, |a, b| a ^ b).unwrap());
        assert!(is_intra_regular(&z2));
        assert!(intra_regular_witness(&z2, 1).unwrap().is_some());

        assert_eq!(
            intra_regular_witness(&fixtures::s2l(), 0).unwrap(),
            Some((0, 0))
        );
        assert_eq!(intra_regular_witness(&fixtures::n2(), 1).unwrap(), None);
        assert_eq!(
            intra_regular_witness(&OrderedSemigroup::trivial(), 0).unwrap(),
            Some((0, 0))
        );
        assert!(intra_regular_witness(&fixtures::n2(), 2).is_err());
    }

    #[test]
    fn condition_examples() {
        let caps = Caps::default();
        let n2 = fixtures::n2();
        match condition_holds(&n2, MiddleKind::Quasi, &caps).unwrap() {
            Outcome::Fails(w) => {
                assert_eq!((w.x, w.m, w.y), (n2.carrier(), n2.carrier(), n2.carrier()));
                assert_eq!(w.violating_element, 1);
            }
            Outcome::Holds => panic!("N2 must fail condition (3)"),
        }
        assert!(condition_holds(&fixtures::s2l(), MiddleKind::Quasi, &caps)
            .unwrap()
            .holds());
        assert!(
            condition_holds(&OrderedSemigroup::trivial(), MiddleKind::Bi, &caps)
                .unwrap()
                .holds()
        );
    }

    #[test]
    fn discrete_order_closure_is_identity() {
        let s = OrderedSemigroup::new(
            CayleyTable::from_fn(3, |_, b| b).unwrap(),
            Order::discrete(3),
        )
        .unwrap();
        for a in Subset::all(3) {
            assert_eq!(downward_closure(&s, a), a);
        }
    }
}
