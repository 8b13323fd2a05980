//! Element-level ideal theory on le-semigroups: element kinds, generated
//! elements and the intra-regularity equivalence.
//!
//!     cargo run --example le_elements

use posemi::algebra::MiddleKind;
use posemi::le::{
    element_class, gen_element, le_condition_holds, verify_theorem2, ElementKind, LeSemigroup,
    PoeOps,
};
use posemi::{fixtures, Caps};

fn show(name: &str, l: &LeSemigroup) -> posemi::Result<()> {
    println!("{name} (top {})", l.top());
    for a in 0..l.size() {
        let f = element_class(l, a);
        println!(
            "  {a}: right={} left={} bi={} quasi={}  r={} l={} q={}",
            f.right,
            f.left,
            f.bi,
            f.quasi,
            gen_element(l, a, ElementKind::Right)?,
            gen_element(l, a, ElementKind::Left)?,
            gen_element(l, a, ElementKind::Quasi)?,
        );
    }
    match le_condition_holds(l, MiddleKind::Quasi).witness() {
        Some(w) => println!(
            "  x ∧ m ∧ y <= y·m·x fails at x={} m={} y={}",
            w.x, w.m, w.y
        ),
        None => println!("  x ∧ m ∧ y <= y·m·x for all quasi-ideal elements"),
    }
    println!("  {}", verify_theorem2(l, &Caps::default())?);
    Ok(())
}

fn main() -> posemi::Result<()> {
    show("meet on 0 < a < e", &fixtures::l3meet())?;
    show("zero product on 0 < a < e", &fixtures::l3null())?;
    Ok(())
}
