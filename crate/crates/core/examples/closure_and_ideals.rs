//! Down-closures, set products and the ideal kinds of every subset of a
//! small ordered semigroup.
//!
//!     cargo run --example closure_and_ideals

use posemi::algebra::{
    classify_subset, closed_product, downward_closure, ideals, IdealKind, Subset,
};
use posemi::{fixtures, Caps};

fn main() -> posemi::Result<()> {
    // 0 < a < e, multiplication is the meet.
    let s = fixtures::l3meet().to_ordered();
    let all = s.carrier();

    println!("subset\t(A]\t(AS]\t(SA]\tleft\tright\tquasi\tbi");
    for a in Subset::all(s.size()) {
        let f = classify_subset(&s, a);
        println!(
            "{a}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            downward_closure(&s, a),
            closed_product(&s, a, all),
            closed_product(&s, all, a),
            f.left,
            f.right,
            f.quasi,
            f.bi
        );
    }

    let caps = Caps::default();
    for kind in IdealKind::ALL {
        let list: Vec<String> = ideals(&s, kind, &caps)?
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("{kind} ideals: {}", list.join(" "));
    }
    Ok(())
}
