//! Relabeling a structure does not change its canonical form or id.
//!
//!     cargo run --example canonical_forms

use posemi::enumerate::canon;
use posemi::{fixtures, Caps};

fn main() -> posemi::Result<()> {
    let caps = Caps::default();
    let s = fixtures::l3null().to_ordered();
    for p in canon::permutations(s.size()) {
        let (t, o) = (s.table().permuted(&p), s.order().permuted(&p));
        println!(
            "{p:?}\ttable {:?}\tid {}",
            t.rows(),
            &canon::structure_id(&t, &o, &caps)?[..16]
        );
    }
    let (t, o) = canon::canonicalize(s.table(), s.order(), &caps)?;
    println!(
        "canonical table {:?}, order {:?}",
        t.rows(),
        o.strict_pairs()
    );

    let left = fixtures::s2l();
    let right = fixtures::s2r();
    println!(
        "left-zero and right-zero bands share an id: {}",
        canon::structure_id(left.table(), left.order(), &caps)?
            == canon::structure_id(right.table(), right.order(), &caps)?
    );
    Ok(())
}
