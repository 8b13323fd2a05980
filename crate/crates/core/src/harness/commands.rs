//! Command implementations behind the `posemi` binary. Each writes its
//! output to the given sink and returns the process exit code.

use std::io::Write;
use std::path::{Path, PathBuf};

use super::campaign::{run_campaign, verify_structure, CampaignConfig};
use super::file::{load, save, NamedStructure, Structure};
use crate::algebra::{
    classify_subset, gen_ideal, intra_regular_witness, least_ideal_oracle, IdealKind,
    OrderedSemigroup,
};
use crate::caps::Caps;
use crate::enumerate::{
    enumerate_le_semigroups, enumerate_ordered_semigroups, enumerate_semigroups, Dedup,
    EnumerationConfig, Shard,
};
use crate::error::{Error, Result};
use crate::le::{element_class, gen_element, least_element_oracle, ElementKind, PoeOps};
use crate::report::{VerificationReport, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerateKind {
    /// Semigroups, written with the discrete order.
    Semigroup,
    Ordered,
    Le,
}

/// What a `classify` / `generate` command acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Subset(String),
    Element(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerateKind {
    Left,
    Right,
    Quasi,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_owned(),
        source,
    }
}

fn stdout_path() -> PathBuf {
    PathBuf::from("<output>")
}

pub fn enumerate(
    kind: EnumerateKind,
    order: usize,
    dedup: Dedup,
    shard: Option<Shard>,
    out_dir: Option<&Path>,
    out: &mut dyn Write,
    caps: &Caps,
) -> Result<i32> {
    let cfg = EnumerationConfig::new(order)
        .with_dedup(dedup)
        .with_shard(shard);
    let structures: Vec<Structure> = match kind {
        EnumerateKind::Semigroup => enumerate_semigroups(&cfg, caps)?
            .into_iter()
            .map(|t| Structure::Ordered(OrderedSemigroup::with_discrete_order(t)))
            .collect(),
        EnumerateKind::Ordered => enumerate_ordered_semigroups(&cfg, caps)?
            .into_iter()
            .map(Structure::Ordered)
            .collect(),
        EnumerateKind::Le => enumerate_le_semigroups(&cfg, caps)?
            .into_iter()
            .map(Structure::Le)
            .collect(),
    };
    let tag = match kind {
        EnumerateKind::Semigroup => "semigroup",
        EnumerateKind::Ordered => "ordered",
        EnumerateKind::Le => "le",
    };
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(io_err(dir))?;
            for (k, s) in structures.iter().enumerate() {
                let path = dir.join(format!("{tag}-n{order}-{k:06}.json"));
                save(&NamedStructure::new(s.clone()), &path)?;
            }
            writeln!(
                out,
                "wrote {} structures to {}",
                structures.len(),
                dir.display()
            )
            .map_err(io_err(&stdout_path()))?;
        }
        None => {
            for s in &structures {
                let record = NamedStructure::new(s.clone()).to_file();
                let line = serde_json::to_string(&record).expect("plain data serializes");
                writeln!(out, "{line}").map_err(io_err(&stdout_path()))?;
            }
        }
    }
    Ok(0)
}

fn witness_line(w: &Witness, named: &NamedStructure) -> String {
    match w {
        Witness::NotIntraRegular { element } => {
            format!("witness\tintra-regular\telement={}", named.label(*element))
        }
        Witness::Set(w) => format!(
            "witness\t{}\tX={}\tM={}\tY={}\telement={}",
            w.kind,
            named.format_subset(w.x),
            named.format_subset(w.m),
            named.format_subset(w.y),
            named.label(w.violating_element)
        ),
        Witness::Element(w) => format!(
            "witness\t{}\tx={}\tm={}\ty={}",
            w.kind,
            named.label(w.x),
            named.label(w.m),
            named.label(w.y)
        ),
    }
}

fn emit_report(
    out: &mut dyn Write,
    report: &VerificationReport,
    named: Option<&NamedStructure>,
    witnesses: bool,
) -> Result<()> {
    let w = |e| io_err(&stdout_path())(e);
    writeln!(out, "{report}").map_err(w)?;
    if witnesses {
        let fallback;
        let named = match named {
            Some(n) => n,
            None => {
                fallback = NamedStructure::new(Structure::Ordered(OrderedSemigroup::trivial()));
                &fallback
            }
        };
        for wit in &report.witnesses {
            writeln!(out, "{}", witness_line(wit, named)).map_err(w)?;
        }
    }
    Ok(())
}

/// `verify SCOPE`: over the enumerated universe, or over one file.
pub fn verify(
    cfg: &CampaignConfig,
    file: Option<&Path>,
    witnesses: bool,
    out: &mut dyn Write,
    caps: &Caps,
) -> Result<i32> {
    let w = |e| io_err(&stdout_path())(e);
    let (reports, failures) = match file {
        Some(path) => {
            let named = load(path)?;
            let report = verify_structure(cfg.scope, &named.structure, caps)?;
            emit_report(out, &report, Some(&named), witnesses)?;
            let failures = usize::from(!report.equivalence_ok);
            (1, failures)
        }
        None => {
            let campaign = run_campaign(cfg, caps)?;
            for report in &campaign.reports {
                // Campaign witnesses are printed with index labels.
                emit_report(out, report, None, witnesses)?;
            }
            (campaign.reports.len(), campaign.failures)
        }
    };
    writeln!(out, "checked {reports} structures, {failures} failures").map_err(w)?;
    Ok(if failures == 0 { 0 } else { 1 })
}

fn flag_lines(out: &mut dyn Write, flags: &[(&str, bool)]) -> Result<()> {
    for (name, value) in flags {
        writeln!(out, "{name}\t{value}").map_err(io_err(&stdout_path()))?;
    }
    Ok(())
}

fn require_poe(named: &NamedStructure) -> Result<Box<dyn PoeOps>> {
    match &named.structure {
        Structure::Le(l) => Ok(Box::new(l.clone())),
        other => other
            .to_poe()
            .map(|p| Box::new(p) as Box<dyn PoeOps>)
            .ok_or_else(|| Error::Unsupported("element flags need a greatest element".into())),
    }
}

pub fn classify(file: &Path, target: &Target, out: &mut dyn Write) -> Result<i32> {
    let named = load(file)?;
    match target {
        Target::Subset(list) => {
            let set = named.parse_subset(list)?;
            let f = classify_subset(&named.structure.to_ordered(), set);
            flag_lines(
                out,
                &[
                    ("left", f.left),
                    ("right", f.right),
                    ("quasi", f.quasi),
                    ("bi", f.bi),
                    ("downward_closed", f.downward_closed),
                    ("nonempty", f.nonempty),
                ],
            )?;
        }
        Target::Element(label) => {
            let a = named.parse_element(label)?;
            let poe = require_poe(&named)?;
            let f = element_class(poe.as_ref(), a);
            flag_lines(
                out,
                &[
                    ("right", f.right),
                    ("left", f.left),
                    ("bi", f.bi),
                    ("quasi", f.quasi),
                    ("quasi_defined", f.quasi_defined),
                ],
            )?;
        }
    }
    Ok(0)
}

pub fn generate(
    file: &Path,
    target: &Target,
    kind: GenerateKind,
    out: &mut dyn Write,
    caps: &Caps,
) -> Result<i32> {
    let named = load(file)?;
    let w = |e| io_err(&stdout_path())(e);
    let (shown, oracle_shown, matches) = match target {
        Target::Subset(list) => {
            let s = named.structure.to_ordered();
            let x = named.parse_subset(list)?;
            let kind = match kind {
                GenerateKind::Left => IdealKind::Left,
                GenerateKind::Right => IdealKind::Right,
                GenerateKind::Quasi => IdealKind::Quasi,
            };
            let generated = gen_ideal(&s, x, kind)?;
            let oracle = least_ideal_oracle(&s, x, kind, caps)?;
            (
                named.format_subset(generated),
                named.format_subset(oracle),
                generated == oracle,
            )
        }
        Target::Element(label) => {
            let Structure::Le(l) = &named.structure else {
                return Err(Error::Unsupported(
                    "element generators need an le_semigroup".into(),
                ));
            };
            let a = named.parse_element(label)?;
            let kind = match kind {
                GenerateKind::Left => ElementKind::Left,
                GenerateKind::Right => ElementKind::Right,
                GenerateKind::Quasi => ElementKind::Quasi,
            };
            let generated = gen_element(l, a, kind)?;
            let oracle = least_element_oracle(l, a, kind)?;
            (
                named.label(generated),
                named.label(oracle),
                generated == oracle,
            )
        }
    };
    writeln!(out, "{shown}").map_err(w)?;
    if matches {
        writeln!(out, "oracle: match").map_err(w)?;
        Ok(0)
    } else {
        writeln!(
            out,
            "oracle: mismatch (least by enumeration: {oracle_shown})"
        )
        .map_err(w)?;
        Ok(1)
    }
}

pub fn witness(file: &Path, element: &str, out: &mut dyn Write) -> Result<i32> {
    let named = load(file)?;
    let a = named.parse_element(element)?;
    let line = match intra_regular_witness(&named.structure.to_ordered(), a)? {
        Some((x, y)) => format!("({}, {})", named.label(x), named.label(y)),
        None => "none".to_owned(),
    };
    writeln!(out, "{line}").map_err(io_err(&stdout_path()))?;
    Ok(0)
}
