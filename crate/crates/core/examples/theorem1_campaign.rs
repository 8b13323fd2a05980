//! Checks on every ordered semigroup up to the given order that
//! intra-regularity, the bi-ideal condition and the quasi-ideal condition
//! agree, and prints the structures where all three fail.
//!
//!     cargo run --release --example theorem1_campaign -- 4

use std::time::Instant;

use posemi::enumerate::Dedup;
use posemi::harness::{run_campaign, CampaignConfig, Scope};
use posemi::report::Witness;
use posemi::Caps;

fn main() -> posemi::Result<()> {
    let max_order = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let cfg = CampaignConfig {
        scope: Scope::Theorem1,
        max_order,
        dedup: Dedup::UpToIso,
        shard: None,
    };
    let t = Instant::now();
    let campaign = run_campaign(&cfg, &Caps::from_env())?;
    let negative = campaign.reports.iter().filter(|r| !r.c1).count();
    println!("{} ({:.2}s)", campaign.summary(), t.elapsed().as_secs_f64());
    println!("{negative} structures are not intra-regular; the first few:");
    for r in campaign.reports.iter().filter(|r| !r.c1).take(5) {
        println!("{r}");
        for w in &r.witnesses {
            if let Witness::Set(w) = w {
                println!(
                    "  {}: X={} M={} Y={} element {}",
                    w.kind, w.x, w.m, w.y, w.violating_element
                );
            }
        }
    }
    Ok(())
}
