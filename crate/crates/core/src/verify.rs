//! Verification suites shared by the command line and the test harness.
//!
//! Every suite returns one [`CaseResult`] per catalog entry or sample, in a
//! deterministic order, so reports are byte-identical across runs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::charts::{gluing_map, intersection_det, joint_rows, ChartBlocks};
use crate::deform::{apply_deformation, at_time, build_deformation, deformed_family};
use crate::equations::{gen_border_scheme, gen_i2, gen_i3, gen_stratum, gen_universal, StratumOptions, UniversalMode};
use crate::linalg::{identity, mat_mul, Matrix};
use crate::oracle::groebner::ideal_contains_params_until;
use crate::oracle::points::{
    chart_coefficients, classify_stratum, point_ideal, random_configuration, random_grid, satisfies_stratum, valuation,
    PointConfiguration,
};
use crate::order::TermOrder;
use crate::poly::text::parse_tpoly;
use crate::poly::{extend_family, q, qf, MarkedFamily, ParamPolynomial, TPoly, TVar, Var, Q};
use crate::staircase::{enumerate_standard_sets, StandardSet, DEFAULT_ENUMERATION_CAP};

const REFERENCE: &str = include_str!("../data/square_reference.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Golden,
    Fewer,
    Gluing,
    Deform,
    Strata,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Golden, Suite::Fewer, Suite::Gluing, Suite::Deform, Suite::Strata];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Golden => "golden",
            Suite::Fewer => "fewer",
            Suite::Gluing => "gluing",
            Suite::Deform => "deform",
            Suite::Strata => "strata",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

impl CaseResult {
    fn new(case: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CaseResult {
            case: case.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    fn new(suite: Suite, seed: u64, cases: Vec<CaseResult>) -> Self {
        let passed = cases.iter().filter(|c| c.passed).count();
        SuiteReport {
            suite,
            seed,
            passed,
            failed: cases.len() - passed,
            cases,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_r: usize,
    pub seed: u64,
    /// Random configurations for the gluing and strata suites.
    pub samples: usize,
    /// Time allowed per ideal comparison in the `fewer` suite; a comparison
    /// that does not finish counts as a failure.
    pub budget: Option<Duration>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 2,
            max_r: 5,
            seed: 0,
            samples: 20,
            budget: Some(Duration::from_secs(30)),
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let cases = match suite {
        Suite::Golden => golden_cases(),
        Suite::Fewer => catalog(2..=cfg.max_n.max(2), cfg.max_r)
            .par_iter()
            .map(|d| fewer_case(d, cfg.budget))
            .collect(),
        Suite::Gluing => (0..cfg.samples)
            .into_par_iter()
            .map(|i| gluing_case(cfg.seed, i))
            .chain(
                catalog(2..=2, cfg.max_r.min(3))
                    .into_par_iter()
                    .filter(|d| d.len() >= 2)
                    .map(|d| round_trip_case(&d, cfg.seed)),
            )
            .collect(),
        Suite::Deform => catalog(1..=cfg.max_n, cfg.max_r)
            .par_iter()
            .flat_map(|d| standard_orders().into_par_iter().map(move |o| deform_case(d, &o)))
            .collect(),
        Suite::Strata => (0..cfg.samples)
            .into_par_iter()
            .map(|i| strata_case(cfg.seed, i, cfg.max_r))
            .chain(
                catalog(2..=cfg.max_n.max(2), cfg.max_r)
                    .into_par_iter()
                    .map(|e| grid_case(&e, cfg.seed)),
            )
            .collect(),
    };
    SuiteReport::new(suite, cfg.seed, cases)
}

/// Every standard set with `n` in the range and `1 ≤ r ≤ max_r`.
pub fn catalog(ns: impl IntoIterator<Item = usize>, max_r: usize) -> Vec<StandardSet> {
    ns.into_iter()
        .flat_map(|n| (1..=max_r).map(move |r| (n, r)))
        .flat_map(|(n, r)| enumerate_standard_sets(n, r, DEFAULT_ENUMERATION_CAP).expect("catalog bounds"))
        .collect()
}

pub fn standard_orders() -> Vec<TermOrder> {
    vec![TermOrder::lex(), TermOrder::grlex(), TermOrder::grevlex()]
}

fn set_name(d: &StandardSet) -> String {
    let e: Vec<String> = d.elements().iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", e.join(","))
}

fn rng(seed: u64, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(i as u64))
}

/// The reference polynomials of the square `{0, x, y, xy}`, by label.
pub fn reference_polynomials() -> BTreeMap<String, Vec<TPoly>> {
    let mut out: BTreeMap<String, Vec<TPoly>> = BTreeMap::new();
    let mut label = String::new();
    for line in REFERENCE.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(l) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            label = l.to_string();
            continue;
        }
        out.entry(label.clone())
            .or_default()
            .push(parse_tpoly(line).expect("reference data parses"));
    }
    out
}

fn normalized(polys: impl IntoIterator<Item = TPoly>) -> BTreeSet<String> {
    polys.into_iter().map(|p| p.normalize_sign().to_string()).collect()
}

pub fn golden_cases() -> Vec<CaseResult> {
    let d = StandardSet::new(
        2,
        [
            crate::exp![0, 0],
            crate::exp![1, 0],
            crate::exp![0, 1],
            crate::exp![1, 1],
        ],
    )
    .expect("square");
    let reference = reference_polynomials();
    let generated = [
        ("I2", gen_i2(&d, &d, true).expect("valid").tpolys()),
        ("I3", gen_i3(&d, &d, true).expect("valid").tpolys()),
    ];
    generated
        .into_iter()
        .map(|(label, polys)| {
            let want = normalized(reference[label].iter().cloned());
            let got = normalized(polys.iter().cloned());
            let missing: Vec<&String> = want.difference(&got).collect();
            let extra: Vec<&String> = got.difference(&want).collect();
            let ok = missing.is_empty() && extra.is_empty() && polys.len() == want.len();
            CaseResult::new(
                format!("square {label}"),
                ok,
                format!(
                    "{} generated, {} expected, missing {:?}, unexpected {:?}",
                    polys.len(),
                    want.len(),
                    missing,
                    extra
                ),
            )
        })
        .collect()
}

/// `I1+I2+I3 = I1+I2+I3e` in the parameter ring, both containments. A
/// containment that runs out of time is reported as undecided.
pub fn fewer_case(d: &StandardSet, budget: Option<Duration>) -> CaseResult {
    let full = gen_border_scheme(d, d, true, false).expect("valid").tpolys();
    let fewer = gen_border_scheme(d, d, true, true).expect("valid").tpolys();
    let decide = |gens: &[TPoly], targets: &[TPoly]| {
        ideal_contains_params_until(gens, targets, budget.map(|b| Instant::now() + b))
    };
    let full_in_fewer = decide(&fewer, &full);
    let fewer_in_full = decide(&full, &fewer);
    let show = |x: Option<bool>| x.map_or("undecided".to_string(), |b| b.to_string());
    CaseResult::new(
        set_name(d),
        full_in_fewer == Some(true) && fewer_in_full == Some(true),
        format!(
            "full in fewer: {}, fewer in full: {}",
            show(full_in_fewer),
            show(fewer_in_full)
        ),
    )
}

fn catalog_of_size(n: usize, r: usize) -> Vec<StandardSet> {
    enumerate_standard_sets(n, r, DEFAULT_ENUMERATION_CAP).expect("catalog bounds")
}

fn specialize_matrix(m: &[Vec<TPoly>], value: &dyn Fn(&Var) -> Option<Q>) -> Option<Matrix> {
    m.iter()
        .map(|row| row.iter().map(|p| p.eval(value).ok()).collect())
        .collect()
}

/// Pushes chart coordinates of a random point set through every transition
/// between charts that contain it and compares with the direct computation.
pub fn gluing_case(seed: u64, i: usize) -> CaseResult {
    let r = 2 + i % 3;
    let mut rng = rng(seed, i);
    // Redraw until at least two charts contain the points.
    let (points, charts) = loop {
        let points = random_configuration(&mut rng, 2, r, 3);
        let charts: Vec<StandardSet> = catalog_of_size(2, r)
            .into_iter()
            .filter(|d| chart_coefficients(&points, d, d.border()).is_some())
            .collect();
        if charts.len() >= 2 {
            break (points, charts);
        }
    };
    let name = format!("sample {i} r={r} {}", points.to_json());
    let mut pairs = 0;
    for d in &charts {
        for e in catalog_of_size(2, r) {
            let rows = joint_rows(d, &e);
            let row_list: Vec<_> = rows.elements().iter().chain(rows.border()).cloned().collect();
            let t = chart_coefficients(&points, d, &row_list).expect("chart contains the points");
            let val = valuation(&t);
            let det = intersection_det(d, &e).expect("same size").eval(&val).expect("bound");
            let direct = chart_coefficients(&points, &e, &row_list);
            if det.is_zero() != direct.is_none() {
                return CaseResult::new(
                    name,
                    false,
                    format!(
                        "{} -> {}: determinant {det} disagrees with chart membership",
                        set_name(d),
                        set_name(&e)
                    ),
                );
            }
            let Some(direct) = direct else { continue };
            let pushed = gluing_map(d, &e)
                .expect("same size")
                .apply(&val)
                .expect("nonzero determinant");
            let u_direct: BTreeMap<TVar, Q> = direct.into_iter().collect();
            if pushed != u_direct {
                return CaseResult::new(
                    name,
                    false,
                    format!(
                        "{} -> {}: transition disagrees with direct coordinates",
                        set_name(d),
                        set_name(&e)
                    ),
                );
            }
            let blocks = ChartBlocks::new(d, &e).expect("same size");
            let u_val = |v: &Var| match v {
                Var::U(tv) => pushed.get(tv).cloned(),
                _ => None,
            };
            let tb = specialize_matrix(&blocks.t_box(), &val).expect("bound");
            let ub = specialize_matrix(&blocks.u_box(), &u_val).expect("bound");
            if mat_mul(&tb, &ub) != identity(r) {
                return CaseResult::new(name, false, format!("{} -> {}: T□·U□ ≠ E", set_name(d), set_name(&e)));
            }
            if d != &e {
                pairs += 1;
            }
        }
    }
    CaseResult::new(
        name,
        pairs > 0,
        format!("{} charts, {pairs} transitions checked", charts.len()),
    )
}

/// `ψ_{ε,δ} ∘ ψ_{δ,ε}` is the identity at random coordinates.
pub fn round_trip_case(d: &StandardSet, seed: u64) -> CaseResult {
    let mut rng = rng(seed, 30_000 + d.len());
    let mut checked = 0;
    for e in catalog_of_size(d.dim(), d.len()) {
        if &e == d {
            continue;
        }
        let forward = gluing_map(d, &e).expect("same size");
        let back = gluing_map(&e, d).expect("same size");
        for _ in 0..20 {
            let rows = joint_rows(d, &e);
            let t: BTreeMap<TVar, Q> = rows
                .elements()
                .iter()
                .chain(rows.border())
                .filter(|a| !d.contains(a))
                .flat_map(|a| d.elements().iter().map(move |b| TVar::new(a.clone(), b.clone())))
                .map(|v| (v, qf(rng.gen_range(-4..=4), rng.gen_range(1..=3))))
                .collect();
            let Some(u) = forward.apply(&valuation(&t)) else {
                continue;
            };
            let Some(t2) = back.apply(&valuation(&u)) else { continue };
            if t2 != t {
                return CaseResult::new(
                    format!("round trip {}", set_name(d)),
                    false,
                    format!("via {} the coordinates change", set_name(&e)),
                );
            }
            checked += 1;
        }
    }
    CaseResult::new(
        format!("round trip {}", set_name(d)),
        true,
        format!("{checked} specializations"),
    )
}

/// Weighted homogeneity of the stratum and the two ends of the degeneration.
pub fn deform_case(d: &StandardSet, order: &TermOrder) -> CaseResult {
    let name = format!("{} {order}", set_name(d));
    let fail = |msg: String| CaseResult::new(name.clone(), false, msg);
    let data = match build_deformation(d, order) {
        Ok(x) => x,
        Err(e) => return fail(e.to_string()),
    };
    let stratum = gen_stratum(d, d, order, StratumOptions::default())
        .expect("valid")
        .eliminate_vanishing();
    let deformed = match apply_deformation(&stratum, &data) {
        Ok(x) => x,
        Err(e) => return fail(e.to_string()),
    };
    let one: HashMap<Var, TPoly> = [(Var::Time, TPoly::one())].into();
    let zero: HashMap<Var, TPoly> = [(Var::Time, TPoly::zero())].into();
    for g in &deformed {
        let p = g.generator.tpoly();
        if p.constant_value().is_some() {
            continue;
        }
        if g.weight == 0 {
            return fail(format!("weight 0 for {p}"));
        }
        if g.deformed.substitute(&one) != p {
            return fail(format!("t = 1 changes {p}"));
        }
        if !g.deformed.substitute(&zero).is_zero() {
            return fail(format!("t = 0 does not kill {p}"));
        }
    }
    // The monomial point (all coordinates 0) lies on the stratum.
    let origin = |_: &Var| Some(Q::zero());
    if let Some(g) = stratum
        .generators
        .iter()
        .find(|g| !g.tpoly().eval(&origin).is_ok_and(|x| x.is_zero()))
    {
        return fail(format!("monomial point violates {}", g.poly));
    }
    let family = deformed_family(&data);
    for (alpha, f) in &family {
        if at_time(f, &Q::zero()) != ParamPolynomial::x_pow(alpha.clone()) {
            return fail(format!("t = 0 member at {alpha} is not x^{alpha}"));
        }
    }
    let corners: BTreeMap<_, _> = d.corners().iter().map(|a| (a.clone(), family[a].clone())).collect();
    for t in [q(0), q(1), qf(1, 2)] {
        let at: BTreeMap<_, _> = corners.iter().map(|(a, f)| (a.clone(), at_time(f, &t))).collect();
        let mut fam = match MarkedFamily::new(d.clone(), at.clone()) {
            Ok(x) => x,
            Err(e) => return fail(format!("t = {t}: {e}")),
        };
        for (a, f) in &at {
            match fam.reduce(f) {
                Ok(r) if r.is_zero() => {}
                _ => return fail(format!("t = {t}: member {a} does not reduce to 0")),
            }
        }
        for a in d.border() {
            if let Err(e) = fam.get(a) {
                return fail(format!("t = {t}: {e}"));
            }
        }
    }
    // Coefficient law on the first border: b_{α,β} = t^{ℓ(α)−ℓ(β)} a_{α,β}.
    let original: BTreeMap<_, _> = gen_universal(d, d, UniversalMode::Groebner, Some(order))
        .expect("valid")
        .generators
        .into_iter()
        .map(|g| {
            let crate::equations::Provenance::Row { alpha } = g.provenance else {
                unreachable!("universal generators are rows")
            };
            (alpha, g.poly)
        })
        .collect();
    for alpha in d.border() {
        let (Ok(a), Ok(b)) = (extend_family(&original, alpha, d), extend_family(&corners, alpha, d)) else {
            return fail(format!("cannot extend the family to {alpha}"));
        };
        for beta in d.elements() {
            let ca = a.coefficient(beta);
            let cb = b.coefficient(beta);
            let k = alpha.weight(&data.weights) - beta.weight(&data.weights);
            let expected = if ca.is_zero() {
                TPoly::zero()
            } else if k < 0 {
                return fail(format!("nonzero coefficient at {alpha}, {beta} with negative weight"));
            } else {
                &TPoly::time_pow(k as u32) * &ca
            };
            if cb != expected {
                return fail(format!("coefficient law fails at {alpha}, {beta}"));
            }
        }
    }
    CaseResult::new(
        name,
        true,
        format!("weights {:?}, {} generators", data.weights, deformed.len()),
    )
}

/// A random point set lies in exactly one stratum, and classification
/// certifies it.
pub fn strata_case(seed: u64, i: usize, max_r: usize) -> CaseResult {
    let orders = standard_orders();
    let order = &orders[i % orders.len()];
    let r = 1 + i % max_r.max(1);
    let points = random_configuration(&mut rng(seed, 10_000 + i), 2, r, 2);
    strata_check(&points, order, &format!("sample {i} {order}"))
}

pub fn strata_check(points: &PointConfiguration, order: &TermOrder, label: &str) -> CaseResult {
    let name = format!("{label} {}", points.to_json());
    let delta = match classify_stratum(points, order) {
        Ok(d) => d,
        Err(e) => return CaseResult::new(name, false, e.to_string()),
    };
    let hits: Vec<StandardSet> = catalog_of_size(points.dim(), points.len())
        .into_iter()
        .filter(|e| satisfies_stratum(points, e, order))
        .collect();
    let ok = hits.len() == 1 && hits[0] == delta;
    CaseResult::new(
        name,
        ok,
        format!(
            "classified {}, strata containing the points: {:?}",
            set_name(&delta),
            hits.iter().map(set_name).collect::<Vec<_>>()
        ),
    )
}

/// Grid configurations of `ε` have standard set `ε` under every order.
pub fn grid_case(e: &StandardSet, seed: u64) -> CaseResult {
    let mut rng = rng(seed, 20_000 + e.len());
    let points = random_grid(e, &mut rng);
    for order in standard_orders() {
        let got = point_ideal(&points, &order).delta;
        if &got != e {
            return CaseResult::new(
                format!("grid {}", set_name(e)),
                false,
                format!("{order}: standard set {}", set_name(&got)),
            );
        }
    }
    CaseResult::new(format!("grid {}", set_name(e)), true, "all orders")
}
