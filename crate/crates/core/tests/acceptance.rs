//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line, followed by the
//! offending cases.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use hilb_core::equations::{gen_border_scheme, gen_minimal, Label};
use hilb_core::exp;
use hilb_core::exponent::Exponent;
use hilb_core::order::TermOrder;
use hilb_core::staircase::{enumerate_standard_sets, is_standard_set, StandardSet};
use hilb_core::verify::{
    catalog, deform_case, fewer_case, gluing_case, golden_cases, grid_case, standard_orders, strata_case, CaseResult,
    VerifyConfig,
};

const SEED: u64 = 0;

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn from_cases(cases: &[CaseResult]) -> Self {
        let failures: Vec<String> = cases
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.case, c.detail))
            .collect();
        let summary = format!("{}/{} cases", cases.len() - failures.len(), cases.len());
        Outcome { failures, summary }
    }
}

fn golden() -> Outcome {
    Outcome::from_cases(&golden_cases())
}

fn fewer() -> Outcome {
    let budget = VerifyConfig::default().budget;
    let sets: Vec<StandardSet> = catalog(2..=2, 6).into_iter().chain(catalog(3..=3, 5)).collect();
    let cases: Vec<CaseResult> = sets.par_iter().map(|d| fewer_case(d, budget)).collect();
    Outcome::from_cases(&cases)
}

fn axis() -> Outcome {
    let mut cases = Vec::new();
    for n in 1..=3usize {
        for r in 1..=4u32 {
            let d = StandardSet::axis(n, 0, r).unwrap();
            let m = gen_minimal(&d, &TermOrder::lex_reversed(n)).unwrap();
            let mut rows: Vec<Exponent> = (1..n).map(|i| Exponent::unit(n, i)).collect();
            let mut re1 = vec![0; n];
            re1[0] = r;
            rows.push(Exponent::new(re1));
            let want: BTreeSet<(Exponent, Exponent)> = rows
                .iter()
                .flat_map(|a| d.elements().iter().map(move |b| (a.clone(), b.clone())))
                .collect();
            let got: BTreeSet<(Exponent, Exponent)> =
                m.ambient.iter().map(|v| (v.row.clone(), v.col.clone())).collect();
            cases.push(CaseResult {
                case: format!("n={n} r={r}"),
                passed: m.ambient.len() == r as usize * n && got == want && m.is_empty(),
                detail: format!("{} variables, {} relations", m.ambient.len(), m.len()),
            });
        }
    }
    Outcome::from_cases(&cases)
}

fn class_count(d: &StandardSet, label: Label) -> usize {
    gen_border_scheme(d, d, true, true).unwrap().classes(label).len()
}

fn class_counts() -> Outcome {
    let two = StandardSet::down_closure(2, &[exp![4, 1], exp![1, 4]]).unwrap();
    let three = StandardSet::down_closure(3, &[exp![1, 1, 0], exp![1, 0, 4], exp![0, 4, 1], exp![0, 0, 7]]).unwrap();
    let check = |name: &str, d: &StandardSet, i2: usize, i3e: usize| {
        let (g2, g3) = (class_count(d, Label::I2), class_count(d, Label::I3e));
        CaseResult {
            case: name.to_string(),
            passed: g2 == i2 && g3 == i3e,
            detail: format!("I2 classes {g2} (want {i2}), I3e classes {g3} (want {i3e})"),
        }
    };
    Outcome::from_cases(&[
        check("planar cross", &two, 6, 2),
        check("three-corner set", &three, 30, 3),
    ])
}

fn gluing() -> Outcome {
    let cases: Vec<CaseResult> = (0..20).into_par_iter().map(|i| gluing_case(SEED, i)).collect();
    Outcome::from_cases(&cases)
}

fn deform() -> Outcome {
    let sets = catalog(2..=2, 5);
    let cases: Vec<CaseResult> = sets
        .par_iter()
        .flat_map(|d| standard_orders().into_par_iter().map(move |o| deform_case(d, &o)))
        .collect();
    Outcome::from_cases(&cases)
}

fn strata() -> Outcome {
    let cases: Vec<CaseResult> = (0..100)
        .into_par_iter()
        .map(|i| strata_case(SEED, i, 5))
        .chain(catalog(2..=2, 5).into_par_iter().map(|e| grid_case(&e, SEED)))
        .collect();
    Outcome::from_cases(&cases)
}

/// Partitions of `r` by the standard recurrence on the largest part.
fn partitions(r: usize) -> usize {
    let mut p = vec![0usize; r + 1];
    p[0] = 1;
    for part in 1..=r {
        for k in part..=r {
            p[k] += p[k - part];
        }
    }
    p[r]
}

/// Downward-closed subsets of size `r` of the box `[0, r)^n`, by brute force.
fn brute_force_count(n: usize, r: usize) -> usize {
    let cube: Vec<Exponent> = (0..r.pow(n as u32))
        .map(|mut k| {
            Exponent::new(
                (0..n)
                    .map(|_| {
                        let c = (k % r) as u32;
                        k /= r;
                        c
                    })
                    .collect(),
            )
        })
        .collect();
    let mut count = 0;
    let mut chosen = Vec::new();
    fn walk(cube: &[Exponent], start: usize, r: usize, n: usize, chosen: &mut Vec<Exponent>, count: &mut usize) {
        if chosen.len() == r {
            if is_standard_set(chosen, n).unwrap() {
                *count += 1;
            }
            return;
        }
        for k in start..cube.len() {
            chosen.push(cube[k].clone());
            walk(cube, k + 1, r, n, chosen, count);
            chosen.pop();
        }
    }
    walk(&cube, 0, r, n, &mut chosen, &mut count);
    count
}

fn counts() -> Outcome {
    let printed = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    let mut cases: Vec<CaseResult> = (1..=10)
        .map(|r| {
            let got = enumerate_standard_sets(2, r, 1_000_000).unwrap().len();
            CaseResult {
                case: format!("n=2 r={r}"),
                passed: got == partitions(r) && got == printed[r - 1],
                detail: format!("{got} sets, p(r) = {}", partitions(r)),
            }
        })
        .collect();
    let got = enumerate_standard_sets(3, 3, 1_000_000).unwrap().len();
    let brute = brute_force_count(3, 3);
    cases.push(CaseResult {
        case: "n=3 r=3".into(),
        passed: got == 6 && brute == 6,
        detail: format!("{got} sets, brute force {brute}"),
    });
    Outcome::from_cases(&cases)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 8] = [
        (
            "golden reproduction of the square example",
            golden,
            Duration::from_secs(1),
        ),
        (
            "reduced commutation relations, n=2 r<=6 and n=3 r<=5",
            fewer,
            Duration::from_secs(600),
        ),
        (
            "axis segment is an affine space of dimension rn",
            axis,
            Duration::from_secs(60),
        ),
        ("I2 and I3e class counts", class_counts, Duration::from_secs(60)),
        ("chart gluing round trip, 20 samples", gluing, Duration::from_secs(60)),
        (
            "deformation homogeneity on the n=2 r<=5 catalog",
            deform,
            Duration::from_secs(600),
        ),
        ("stratification of points and grids", strata, Duration::from_secs(600)),
        ("standard set counts", counts, Duration::from_secs(60)),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let ok = outcome.failures.is_empty() && elapsed <= limit;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {}: {} {name} ({}, {:.1}s of {}s)",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            outcome.summary,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
        for f in &outcome.failures {
            println!("    {f}");
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
