//! Counts of small structures, labeled and up to isomorphism.
//!
//!     cargo run --release --example enumeration_counts -- 4

use std::time::Instant;

use posemi::enumerate::{
    enumerate_le_semigroups, enumerate_ordered_semigroups, enumerate_poe_semigroups,
    enumerate_semigroups, EnumerationConfig,
};
use posemi::Caps;

fn main() -> posemi::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let caps = Caps::from_env();

    println!("order\tsemigroups\tsemigroups/iso\tordered/iso\tpoe/iso\tle\tle/iso\tseconds");
    for n in 1..=max {
        let t = Instant::now();
        let cfg = EnumerationConfig::new(n);
        let iso = cfg.up_to_iso();
        println!(
            "{n}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.2}",
            enumerate_semigroups(&cfg, &caps)?.len(),
            enumerate_semigroups(&iso, &caps)?.len(),
            enumerate_ordered_semigroups(&iso, &caps)?.len(),
            enumerate_poe_semigroups(&iso, &caps)?.len(),
            enumerate_le_semigroups(&cfg, &caps)?.len(),
            enumerate_le_semigroups(&iso, &caps)?.len(),
            t.elapsed().as_secs_f64(),
        );
    }
    Ok(())
}
