//! Writing structures to JSON files and reading them back.
//!
//!     cargo run --example structure_files

use posemi::harness::{load, save, NamedStructure, Structure};
use posemi::{fixtures, Error};

fn main() -> posemi::Result<()> {
    let dir = std::env::temp_dir().join("posemi-structure-files");
    std::fs::create_dir_all(&dir).map_err(|source| Error::Io {
        path: dir.clone(),
        source,
    })?;

    let named = NamedStructure::with_names(
        Structure::Le(fixtures::l3meet()),
        vec!["0".into(), "a".into(), "e".into()],
    );
    let path = dir.join("l3meet.json");
    save(&named, &path)?;
    print!("{}", named.to_file().to_pretty_json());

    let back = load(&path)?;
    assert_eq!(back, named);
    let x = back.parse_subset("a, e")?;
    println!("parsed {{a, e}} as {x}, shown as {}", back.format_subset(x));

    // Invalid files are refused with the failing axiom.
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"kind": "ordered_semigroup", "order": 2, "table": [[1, 1], [0, 0]], "leq": []}"#,
    )
    .map_err(|source| Error::Io {
        path: bad.clone(),
        source,
    })?;
    match load(&bad) {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!("the table is not associative"),
    }
    Ok(())
}
