//! Generated left, right and quasi-ideals, checked against the intersection
//! of all ideals of that kind containing the generators.
//!
//!     cargo run --example generated_ideals

use posemi::algebra::{
    gen_ideal, least_ideal_oracle, CayleyTable, IdealKind, Order, OrderedSemigroup, Subset,
};
use posemi::Caps;

fn main() -> posemi::Result<()> {
    // Left-zero band on {0, 1} with a zero 2 adjoined below both.
    let table = CayleyTable::from_rows(&[vec![0, 0, 2], vec![1, 1, 2], vec![2, 2, 2]])?;
    let order = Order::closure_of_pairs(3, &[(2, 0), (2, 1)])?;
    let s = OrderedSemigroup::try_new(table, order)?;
    let caps = Caps::default();

    for x in Subset::nonempty(s.size()) {
        let mut row = vec![x.to_string()];
        for kind in [IdealKind::Left, IdealKind::Right, IdealKind::Quasi] {
            let g = gen_ideal(&s, x, kind)?;
            assert_eq!(g, least_ideal_oracle(&s, x, kind, &caps)?);
            row.push(format!("{kind}={g}"));
        }
        println!("{}", row.join("\t"));
    }
    Ok(())
}
