//! Splits the search for semigroups of one order into shards, runs them on
//! separate threads and checks that together they give the full list.
//!
//!     cargo run --release --example sharded_search -- 4 8

use std::thread;

use posemi::enumerate::{enumerate_semigroups, EnumerationConfig, Shard};
use posemi::Caps;

fn main() -> posemi::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let order = args.next().flatten().unwrap_or(4);
    let total = args.next().flatten().unwrap_or(4);
    let caps = Caps::from_env();

    let pieces = thread::scope(|scope| {
        let handles: Vec<_> = (0..total)
            .map(|index| {
                let caps = &caps;
                scope.spawn(move || {
                    let shard = Shard::new(index, total)?;
                    let cfg = EnumerationConfig::new(order).with_shard(Some(shard));
                    enumerate_semigroups(&cfg, caps)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard thread"))
            .collect::<posemi::Result<Vec<_>>>()
    })?;

    for (index, piece) in pieces.iter().enumerate() {
        println!("shard {index}/{total}: {} tables", piece.len());
    }
    let mut merged: Vec<_> = pieces.into_iter().flatten().collect();
    merged.sort();
    let full = enumerate_semigroups(&EnumerationConfig::new(order), &caps)?;
    println!(
        "merged {} tables, unsharded {}, equal: {}",
        merged.len(),
        full.len(),
        merged == full
    );
    Ok(())
}
