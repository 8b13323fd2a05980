//! In a poe-semigroup the meet ae ∧ ea need not exist. Such an element is
//! not a quasi-ideal element, and the implication is only tested on triples
//! whose meet exists.
//!
//!     cargo run --example poe_partial_meets

use posemi::algebra::{CayleyTable, Order, OrderedSemigroup};
use posemi::le::{check_remark, element_class, verify_remark, PoeOps, PoeSemigroup};
use posemi::Caps;

fn main() -> posemi::Result<()> {
    // 0 and 1 below both 2 and 3, which are below the top 4.
    let leq = Order::closure_of_pairs(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])?;
    let table = CayleyTable::from_rows(&[
        vec![0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 0],
        vec![0, 0, 0, 0, 2],
        vec![0, 0, 0, 0, 2],
        vec![0, 0, 2, 3, 4],
    ])?;
    let p = PoeSemigroup::new(OrderedSemigroup::try_new(table, leq)?, 4)?;
    let e = p.top();

    for a in 0..p.size() {
        let (ae, ea) = (p.mul(a, e), p.mul(e, a));
        let f = element_class(&p, a);
        let meet = p
            .meet_pair(ae, ea)
            .map_or("none".to_owned(), |m| m.to_string());
        println!(
            "{a}: ae={ae} ea={ea} meet={meet} quasi={} bi={}",
            f.quasi, f.bi
        );
    }
    println!("implication holds: {}", check_remark(&p).holds());
    println!("{}", verify_remark(&p, &Caps::default())?);
    Ok(())
}
