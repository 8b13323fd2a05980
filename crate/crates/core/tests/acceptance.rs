//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use posemi::algebra::{
    classify_subset, closed_product, condition_holds, downward_closure, gen_ideal,
    least_ideal_oracle, set_product, IdealKind, MiddleKind, OrderedSemigroup, Subset,
};
use posemi::enumerate::{
    enumerate_le_semigroups, enumerate_ordered_semigroups, enumerate_semigroups, Dedup,
    EnumerationConfig, Shard,
};
use posemi::harness::{run_campaign, CampaignConfig, Scope};
use posemi::le::{gen_element, least_element_oracle, ElementKind, LeSemigroup, PoeOps};
use posemi::Caps;

const THEOREM1_MAX_ORDER: usize = 4;
const THEOREM1_BUDGET: Duration = Duration::from_secs(600);
const THEOREM1_SMALL_ORDER: usize = 3;
const THEOREM1_SMALL_BUDGET: Duration = Duration::from_secs(10);
const THEOREM2_MAX_ORDER: usize = 4;
const THEOREM2_BUDGET: Duration = Duration::from_secs(300);
const PROOF_STEPS_MAX_ORDER: usize = 3;
const PROOF_STEPS_BUDGET: Duration = Duration::from_secs(60);
const CLOSURE_MAX_ORDER: usize = 3;
const BRUTE_FORCE_MAX_ORDER: usize = 3;
const SHARD_ORDER: usize = 4;
const SHARD_TOTALS: &[usize] = &[2, 3, 7];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(elapsed: Duration, budget: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= budget, || {
        format!(
            "{what} took {:.1}s, budget {}s",
            elapsed.as_secs_f64(),
            budget.as_secs()
        )
    })
}

fn campaign(scope: Scope, max_order: usize) -> Result<(usize, usize, Duration), String> {
    let t = Instant::now();
    let cfg = CampaignConfig {
        scope,
        max_order,
        dedup: Dedup::UpToIso,
        shard: None,
    };
    let c = run_campaign(&cfg, &Caps::default()).map_err(|e| e.to_string())?;
    Ok((c.reports.len(), c.failures, t.elapsed()))
}

fn criterion_theorem1() -> Outcome {
    let (small, small_failures, small_time) = campaign(Scope::Theorem1, THEOREM1_SMALL_ORDER)?;
    let (checked, failures, time) = campaign(Scope::Theorem1, THEOREM1_MAX_ORDER)?;
    ensure(small_failures == 0 && failures == 0, || {
        format!("{failures} of {checked} ordered semigroups fail")
    })?;
    within(small_time, THEOREM1_SMALL_BUDGET, "order <= 3")?;
    within(time, THEOREM1_BUDGET, "order <= 4")?;
    Ok(format!(
        "{checked} ordered semigroups up to iso, 0 failures, {:.2}s (order <= 3: {small} in {:.2}s)",
        time.as_secs_f64(),
        small_time.as_secs_f64()
    ))
}

fn criterion_theorem2() -> Outcome {
    let (checked, failures, time) = campaign(Scope::Theorem2, THEOREM2_MAX_ORDER)?;
    ensure(failures == 0, || {
        format!("{failures} of {checked} le-semigroups fail")
    })?;
    within(time, THEOREM2_BUDGET, "order <= 4")?;
    Ok(format!(
        "{checked} le-semigroups up to iso, 0 failures, {:.2}s",
        time.as_secs_f64()
    ))
}

fn ordered_universe(max_order: usize, dedup: Dedup) -> Vec<OrderedSemigroup> {
    let caps = Caps::default();
    (1..=max_order)
        .flat_map(|n| {
            enumerate_ordered_semigroups(&EnumerationConfig::new(n).with_dedup(dedup), &caps)
                .unwrap()
        })
        .collect()
}

fn le_universe(max_order: usize) -> Vec<LeSemigroup> {
    let caps = Caps::default();
    (1..=max_order)
        .flat_map(|n| {
            enumerate_le_semigroups(&EnumerationConfig::new(n).up_to_iso(), &caps).unwrap()
        })
        .collect()
}

fn criterion_generators() -> Outcome {
    let caps = Caps::default();
    let kinds = [IdealKind::Left, IdealKind::Right, IdealKind::Quasi];
    let mut comparisons = 0usize;
    for s in ordered_universe(THEOREM1_MAX_ORDER, Dedup::UpToIso) {
        for x in Subset::nonempty(s.size()) {
            for kind in kinds {
                let g = gen_ideal(&s, x, kind).map_err(|e| e.to_string())?;
                let o = least_ideal_oracle(&s, x, kind, &caps).map_err(|e| e.to_string())?;
                ensure(g == o, || {
                    format!(
                        "{kind} ideal generated by {x} is {g}, least is {o}, in {:?}",
                        s.table().rows()
                    )
                })?;
                comparisons += 1;
            }
        }
    }
    let element_kinds = [ElementKind::Left, ElementKind::Right, ElementKind::Quasi];
    let mut element_comparisons = 0usize;
    for l in le_universe(THEOREM2_MAX_ORDER) {
        for a in 0..l.size() {
            for kind in element_kinds {
                let g = gen_element(&l, a, kind).map_err(|e| e.to_string())?;
                let o = least_element_oracle(&l, a, kind).map_err(|e| e.to_string())?;
                ensure(g == o, || {
                    format!(
                        "{} element generated by {a} is {g}, least is {o}",
                        kind.name()
                    )
                })?;
                element_comparisons += 1;
            }
        }
    }
    Ok(format!(
        "{comparisons} subset and {element_comparisons} element comparisons, 0 discrepancies"
    ))
}

fn criterion_proof_steps() -> Outcome {
    let t = Instant::now();
    let caps = Caps::default();
    let mut checks = 0usize;
    let mut conditional = 0usize;
    for s in ordered_universe(PROOF_STEPS_MAX_ORDER, Dedup::None) {
        let all = s.carrier();
        let quasi_condition = condition_holds(&s, MiddleKind::Quasi, &caps)
            .map_err(|e| e.to_string())?
            .holds();
        for x in Subset::nonempty(s.size()) {
            let fail = |step: &str| {
                format!(
                    "{step} fails for X = {x} in {:?} / {:?}",
                    s.table().rows(),
                    s.order().strict_pairs()
                )
            };
            let q = gen_ideal(&s, x, IdealKind::Quasi).map_err(|e| e.to_string())?;
            let qs = closed_product(&s, q, all);
            let sq = closed_product(&s, all, q);
            ensure(qs.is_subset(closed_product(&s, x, all)), || {
                fail("(QS] <= (XS]")
            })?;
            ensure(sq.is_subset(closed_product(&s, all, x)), || {
                fail("(SQ] <= (SX]")
            })?;
            ensure(qs.intersection(sq).is_subset(q), || {
                fail("(QS] & (SQ] <= Q")
            })?;
            ensure(downward_closure(&s, q) == q, || fail("Q downward closed"))?;
            checks += 1;
            if quasi_condition {
                let x2 = set_product(&s, x, x);
                let target = downward_closure(&s, set_product(&s, set_product(&s, all, x2), all));
                let wide = downward_closure(&s, target.union(closed_product(&s, x2, all)));
                ensure(x.is_subset(wide), || fail("X <= ((SX^2S] u (X^2S]]"))?;
                ensure(set_product(&s, x2, x).is_subset(wide), || {
                    fail("X^3 <= ((SX^2S] u (X^2S]]")
                })?;
                ensure(x2.is_subset(target), || fail("X^2 <= (SX^2S]"))?;
                ensure(set_product(&s, x2, all).is_subset(target), || {
                    fail("X^2 S <= (SX^2S]")
                })?;
                ensure(x.is_subset(target), || fail("X <= (SX^2S]"))?;
                conditional += 1;
            }
        }
    }
    let time = t.elapsed();
    within(time, PROOF_STEPS_BUDGET, "proof steps")?;
    Ok(format!(
        "{checks} generator checks, {conditional} conditional chains, 0 failures, {:.2}s",
        time.as_secs_f64()
    ))
}

fn criterion_closure_algebra() -> Outcome {
    let mut pairs = 0usize;
    for s in ordered_universe(CLOSURE_MAX_ORDER, Dedup::None) {
        let n = s.size();
        for a in Subset::all(n) {
            let da = downward_closure(&s, a);
            let fail = |law: &str| format!("{law} fails for A = {a} in {:?}", s.table().rows());
            ensure(a.is_subset(da), || fail("A <= (A]"))?;
            ensure(downward_closure(&s, da) == da, || fail("((A]] = (A]"))?;
            let f = classify_subset(&s, a);
            ensure(!f.quasi || f.bi, || fail("quasi => bi"))?;
            for b in Subset::all(n) {
                let db = downward_closure(&s, b);
                let ab = closed_product(&s, a, b);
                let prod = set_product(&s, da, db);
                ensure(prod.is_subset(ab), || fail("(A](B] <= (AB]"))?;
                ensure(downward_closure(&s, prod) == ab, || fail("((A](B]] = (AB]"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} subset pairs, 0 failures"))
}

fn criterion_enumeration() -> Outcome {
    let caps = Caps::default();
    for n in 1..=BRUTE_FORCE_MAX_ORDER {
        let ours: Vec<Vec<usize>> = enumerate_semigroups(&EnumerationConfig::new(n), &caps)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|t| t.cells().to_vec())
            .collect();
        let brute = common::semigroups(n);
        ensure(ours == brute, || {
            format!(
                "order {n}: {} tables, brute force finds {}",
                ours.len(),
                brute.len()
            )
        })?;
    }
    let two = common::semigroups(2).len();
    ensure(two == 8, || {
        format!("order 2 has {two} associative tables, expected 8")
    })?;

    let order = SHARD_ORDER.to_string();
    let stdout = |extra: &[&str]| -> Result<Vec<u8>, String> {
        let mut args = vec!["enumerate", "--kind", "semigroup", "--order", &order];
        args.extend_from_slice(extra);
        let out = common::posemi(&args);
        ensure(out.status.success(), || {
            format!("posemi {} failed", args.join(" "))
        })?;
        Ok(out.stdout)
    };
    let sorted_lines = |bytes: &[u8]| -> Vec<u8> {
        let mut lines: Vec<&[u8]> = bytes.split_inclusive(|&b| b == b'\n').collect();
        lines.sort();
        lines.concat()
    };
    let full = stdout(&[])?;
    for &total in SHARD_TOTALS {
        let mut merged = Vec::new();
        for index in 0..total {
            let shard = Shard::new(index, total)
                .map_err(|e| e.to_string())?
                .to_string();
            merged.extend(stdout(&["--shard", &shard])?);
        }
        ensure(sorted_lines(&merged) == sorted_lines(&full), || {
            format!("{total} shards do not reproduce the unsharded output")
        })?;
    }
    Ok(format!(
        "orders 1..={BRUTE_FORCE_MAX_ORDER} match brute force, order 2 has 8 tables, \
         shards {SHARD_TOTALS:?} reproduce order {SHARD_ORDER} ({} bytes)",
        full.len()
    ))
}

fn criterion_fixtures() -> Outcome {
    let cases = [
        (
            "verify_n2",
            "false\tfalse\tfalse\ttrue",
            "witness\tquasi\tX={0, a}\tM={0, a}\tY={0, a}",
        ),
        ("verify_s2l", "true\ttrue\ttrue\ttrue", ""),
        (
            "verify_l3null",
            "false\tfalse\tfalse\ttrue",
            "witness\tquasi\tx=e\tm=e\ty=e",
        ),
        ("verify_l3meet", "true\ttrue\ttrue\ttrue", ""),
    ];
    for (name, flags, witness) in cases {
        let (_, args) = common::CLI_CASES
            .iter()
            .find(|(case, _)| *case == name)
            .ok_or_else(|| format!("no CLI case {name}"))?;
        let text = common::transcript(args);
        let report = text.lines().nth(1).unwrap_or_default();
        ensure(report.ends_with(flags), || {
            format!("{name}: report line `{report}`")
        })?;
        ensure(
            witness.is_empty() || text.lines().any(|l| l.starts_with(witness)),
            || format!("{name}: no `{witness}` line"),
        )?;
        common::check_golden(&format!("cli/{name}.txt"), &text)?;
    }
    Ok("N2, S2L, L3null and L3meet match their golden CLI output".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (
            "theorem 1 over ordered semigroups of order <= 4",
            criterion_theorem1,
        ),
        (
            "theorem 2 over le-semigroups of order <= 4",
            criterion_theorem2,
        ),
        (
            "generators equal brute-force least ideals and elements",
            criterion_generators,
        ),
        (
            "generator and intra-regularity proof steps, order <= 3",
            criterion_proof_steps,
        ),
        (
            "closure algebra over all subsets, order <= 3",
            criterion_closure_algebra,
        ),
        (
            "enumeration cross-check and sharding",
            criterion_enumeration,
        ),
        ("fixture regressions", criterion_fixtures),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{secs:.2}s]", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} [{secs:.2}s]", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
