//! Helpers shared by the integration tests: fixture paths, golden files and
//! brute-force oracles that work on plain vectors, independent of the
//! library's search and canonicalization code.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{name}.json"))
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares `actual` with a committed golden file. A missing file, or
/// `POSEMI_BLESS=1`, writes it instead.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    let bless = std::env::var("POSEMI_BLESS").is_ok_and(|v| v == "1");
    if bless || !path.exists() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).unwrap();
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{} differs\n--- expected\n{expected}--- actual\n{actual}",
            path.display()
        ))
    }
}

/// Row-major `n × n` multiplication table.
pub type Table = Vec<usize>;
/// Row-major `n × n` relation, `r[i * n + j]` meaning `i ≤ j`.
pub type Rel = Vec<bool>;

pub fn all_tables(n: usize) -> impl Iterator<Item = Table> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0; cells];
        for c in t.iter_mut().rev() {
            *c = code % n;
            code /= n;
        }
        t
    })
}

pub fn is_associative(n: usize, t: &[usize]) -> bool {
    let m = |a: usize, b: usize| t[a * n + b];
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
}

/// Every relation containing the diagonal, filtered by the axioms.
pub fn all_partial_orders(n: usize) -> Vec<Rel> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << off.len() {
        let mut r = vec![false; n * n];
        for i in 0..n {
            r[i * n + i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            if mask >> k & 1 == 1 {
                r[i * n + j] = true;
            }
        }
        let antisymmetric = off.iter().all(|&(i, j)| !(r[i * n + j] && r[j * n + i]));
        let transitive = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| !(r[i * n + j] && r[j * n + k]) || r[i * n + k]))
        });
        if antisymmetric && transitive {
            out.push(r);
        }
    }
    out
}

pub fn is_compatible(n: usize, t: &[usize], r: &[bool]) -> bool {
    (0..n).all(|a| {
        (0..n).all(|b| {
            !r[a * n + b]
                || (0..n).all(|c| {
                    r[t[c * n + a] * n + t[c * n + b]] && r[t[a * n + c] * n + t[b * n + c]]
                })
        })
    })
}

/// Least upper bound of `a` and `b`, by scanning all upper bounds.
pub fn lub(n: usize, r: &[bool], a: usize, b: usize) -> Option<usize> {
    let uppers: Vec<usize> = (0..n).filter(|&u| r[a * n + u] && r[b * n + u]).collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&v| r[u * n + v]))
}

pub fn glb(n: usize, r: &[bool], a: usize, b: usize) -> Option<usize> {
    let lowers: Vec<usize> = (0..n).filter(|&l| r[l * n + a] && r[l * n + b]).collect();
    lowers
        .iter()
        .copied()
        .find(|&l| lowers.iter().all(|&v| r[v * n + l]))
}

pub fn is_lattice(n: usize, r: &[bool]) -> bool {
    (0..n).all(|a| (0..n).all(|b| lub(n, r, a, b).is_some() && glb(n, r, a, b).is_some()))
}

pub fn has_top(n: usize, r: &[bool]) -> bool {
    (0..n).any(|t| (0..n).all(|a| r[a * n + t]))
}

/// Both-sided distributivity of `t` over the join of the lattice `r`.
pub fn distributes(n: usize, t: &[usize], r: &[bool]) -> bool {
    let join = |a, b| lub(n, r, a, b).expect("lattice");
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                let bc = join(b, c);
                t[a * n + bc] == join(t[a * n + b], t[a * n + c])
                    && t[bc * n + a] == join(t[b * n + a], t[c * n + a])
            })
        })
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// The structure transported along `p`: `p(a)·p(b) = p(a·b)` and
/// `p(a) ≤ p(b)` iff `a ≤ b`.
pub fn relabel(n: usize, t: &[usize], r: &[bool], p: &[usize]) -> (Table, Rel) {
    let mut t2 = vec![0; n * n];
    let mut r2 = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            t2[p[a] * n + p[b]] = p[t[a * n + b]];
            r2[p[a] * n + p[b]] = r[a * n + b];
        }
    }
    (t2, r2)
}

/// Least `(table, relation)` among all relabelings, comparing the table
/// first and then the relation with `true > false`.
pub fn canonical(n: usize, t: &[usize], r: &[bool]) -> (Table, Rel) {
    permutations(n)
        .iter()
        .map(|p| relabel(n, t, r, p))
        .min()
        .unwrap()
}

pub fn discrete(n: usize) -> Rel {
    (0..n * n).map(|k| k / n == k % n).collect()
}

pub fn semigroups(n: usize) -> Vec<Table> {
    all_tables(n).filter(|t| is_associative(n, t)).collect()
}

pub fn ordered_semigroups(n: usize) -> Vec<(Table, Rel)> {
    let orders = all_partial_orders(n);
    let mut out = Vec::new();
    for t in semigroups(n) {
        for r in &orders {
            if is_compatible(n, &t, r) {
                out.push((t.clone(), r.clone()));
            }
        }
    }
    out
}

pub fn le_semigroups(n: usize) -> Vec<(Table, Rel)> {
    let lattices: Vec<Rel> = all_partial_orders(n)
        .into_iter()
        .filter(|r| is_lattice(n, r))
        .collect();
    let mut out = Vec::new();
    for r in &lattices {
        for t in all_tables(n) {
            if is_associative(n, &t) && distributes(n, &t, r) {
                out.push((t, r.clone()));
            }
        }
    }
    out
}

pub fn iso_classes(n: usize, items: &[(Table, Rel)]) -> BTreeSet<(Table, Rel)> {
    items.iter().map(|(t, r)| canonical(n, t, r)).collect()
}

/// Runs the binary from the `tests` directory, so fixture paths can be
/// written as `fixtures/n2.json`.
pub fn posemi(args: &[&str]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_posemi"))
        .args(args)
        .current_dir(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests"))
        .output()
        .expect("binary runs")
}

/// Command line, stdout and exit code in one string, for golden files.
pub fn transcript(args: &[&str]) -> String {
    let out = posemi(args);
    format!(
        "$ posemi {}\n{}exit: {}\n",
        args.join(" "),
        String::from_utf8_lossy(&out.stdout),
        out.status.code().unwrap_or(-1)
    )
}

/// The CLI cases pinned in `tests/golden/cli/`.
pub const CLI_CASES: &[(&str, &[&str])] = &[
    (
        "verify_n2",
        &[
            "verify",
            "theorem1",
            "--file",
            "fixtures/n2.json",
            "--witnesses",
        ],
    ),
    (
        "verify_s2l",
        &[
            "verify",
            "theorem1",
            "--file",
            "fixtures/s2l.json",
            "--witnesses",
        ],
    ),
    (
        "verify_l3null",
        &[
            "verify",
            "theorem2",
            "--file",
            "fixtures/l3null.json",
            "--witnesses",
        ],
    ),
    (
        "verify_l3meet",
        &[
            "verify",
            "theorem2",
            "--file",
            "fixtures/l3meet.json",
            "--witnesses",
        ],
    ),
    (
        "remark_l3null",
        &[
            "verify",
            "remark",
            "--file",
            "fixtures/l3null.json",
            "--witnesses",
        ],
    ),
    (
        "classify_n2_0",
        &["classify", "--file", "fixtures/n2.json", "--subset", "0"],
    ),
    (
        "classify_n2_a",
        &["classify", "--file", "fixtures/n2.json", "--subset", "a"],
    ),
    (
        "classify_s2l_0",
        &["classify", "--file", "fixtures/s2l.json", "--subset", "0"],
    ),
    (
        "classify_l3null_a",
        &[
            "classify",
            "--file",
            "fixtures/l3null.json",
            "--element",
            "a",
        ],
    ),
    (
        "classify_l3meet_e",
        &[
            "classify",
            "--file",
            "fixtures/l3meet.json",
            "--element",
            "e",
        ],
    ),
    (
        "generate_n2_quasi",
        &[
            "generate",
            "--file",
            "fixtures/n2.json",
            "--subset",
            "a",
            "--kind",
            "quasi",
        ],
    ),
    (
        "generate_s2l_left",
        &[
            "generate",
            "--file",
            "fixtures/s2l.json",
            "--subset",
            "0",
            "--kind",
            "left",
        ],
    ),
    (
        "generate_s2l_right",
        &[
            "generate",
            "--file",
            "fixtures/s2l.json",
            "--subset",
            "0",
            "--kind",
            "right",
        ],
    ),
    (
        "generate_l3null_quasi",
        &[
            "generate",
            "--file",
            "fixtures/l3null.json",
            "--element",
            "a",
            "--kind",
            "quasi",
        ],
    ),
    (
        "generate_l3meet_left",
        &[
            "generate",
            "--file",
            "fixtures/l3meet.json",
            "--element",
            "0",
            "--kind",
            "left",
        ],
    ),
    (
        "witness_s2l_0",
        &["witness", "--file", "fixtures/s2l.json", "--element", "0"],
    ),
    (
        "witness_n2_a",
        &["witness", "--file", "fixtures/n2.json", "--element", "a"],
    ),
    (
        "witness_l3meet_a",
        &[
            "witness",
            "--file",
            "fixtures/l3meet.json",
            "--element",
            "a",
        ],
    ),
    (
        "verify_theorem1_iso_2",
        &["verify", "theorem1", "--max-order", "2", "--dedup", "iso"],
    ),
    (
        "enumerate_semigroup_2",
        &["enumerate", "--kind", "semigroup", "--order", "2"],
    ),
    (
        "enumerate_le_iso_2",
        &[
            "enumerate",
            "--kind",
            "le",
            "--order",
            "2",
            "--dedup",
            "iso",
        ],
    ),
];
