//! Intra-regularity: a <= x a a y for some x, y.
//!
//!     cargo run --example intra_regular

use posemi::algebra::{intra_regular_witness, is_intra_regular, OrderedSemigroup};
use posemi::fixtures;

fn show(name: &str, s: &OrderedSemigroup) -> posemi::Result<()> {
    println!("{name}: intra-regular = {}", is_intra_regular(s));
    for a in 0..s.size() {
        match intra_regular_witness(s, a)? {
            Some((x, y)) => println!(
                "  {a} <= {x}·{a}·{a}·{y} = {}",
                s.mul(s.mul(x, s.mul(a, a)), y)
            ),
            None => println!("  {a}: no witness"),
        }
    }
    Ok(())
}

fn main() -> posemi::Result<()> {
    show("left-zero band", &fixtures::s2l())?;
    show("null semigroup, 0 < a", &fixtures::n2())?;
    show("meet on a 3-chain", &fixtures::l3meet().to_ordered())?;
    Ok(())
}
