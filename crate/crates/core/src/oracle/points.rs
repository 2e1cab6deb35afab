//! Vanishing ideals of finite point sets and stratum classification.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equations::{gen_i2, gen_i3, gen_i3e, EquationError};
use crate::exponent::Exponent;
use crate::linalg::{solve_many, Matrix};
use crate::order::TermOrder;
use crate::poly::{rational_marked, QPoly, TVar, Var, Q};
use crate::staircase::StandardSet;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("a point configuration needs at least one point")]
    Empty,
    #[error("point {index} has {got} coordinates, expected {expected}")]
    Dimension { index: usize, got: usize, expected: usize },
    #[error("points {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("cannot read coordinate {0:?}")]
    Coordinate(String),
    #[error("invalid point configuration: {0}")]
    Json(#[from] serde_json::Error),
    #[error("standard set {delta:?}: border coefficients violate {generator}")]
    Certification { delta: Vec<Exponent>, generator: String },
    #[error(transparent)]
    Equations(#[from] EquationError),
}

/// Pairwise distinct rational points in affine n-space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<RawCoord>>", into = "Vec<Vec<RawCoord>>")]
pub struct PointConfiguration {
    n: usize,
    points: Vec<Vec<Q>>,
}

impl PointConfiguration {
    pub fn new(points: Vec<Vec<Q>>) -> Result<Self, OracleError> {
        let n = points.first().ok_or(OracleError::Empty)?.len();
        for (index, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(OracleError::Dimension {
                    index,
                    got: p.len(),
                    expected: n,
                });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(OracleError::Duplicate(i, j));
                }
            }
        }
        Ok(PointConfiguration { n, points })
    }

    pub fn from_json(s: &str) -> Result<Self, OracleError> {
        let raw: Vec<Vec<RawCoord>> = serde_json::from_str(s)?;
        PointConfiguration::try_from(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("points serialize")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Q>] {
        &self.points
    }

    /// The evaluation matrix: one row per point, one column per exponent.
    pub fn evaluation(&self, exps: &[Exponent]) -> Matrix {
        self.points
            .iter()
            .map(|p| exps.iter().map(|e| monomial_value(p, e)).collect())
            .collect()
    }
}

fn monomial_value(point: &[Q], e: &Exponent) -> Q {
    let mut v = Q::one();
    for (x, &k) in point.iter().zip(e.coords()) {
        if k > 0 {
            v *= Pow::pow(x, k);
        }
    }
    v
}

/// A coordinate on the wire: `[num, den]`, an integer, or a string such as
/// `"3/2"` or `"-0.125"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RawCoord {
    Pair(i64, i64),
    Int(i64),
    Text(String),
}

impl TryFrom<Vec<Vec<RawCoord>>> for PointConfiguration {
    type Error = OracleError;

    fn try_from(raw: Vec<Vec<RawCoord>>) -> Result<Self, OracleError> {
        let points = raw
            .into_iter()
            .map(|p| p.into_iter().map(RawCoord::value).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        PointConfiguration::new(points)
    }
}

impl From<PointConfiguration> for Vec<Vec<RawCoord>> {
    fn from(p: PointConfiguration) -> Self {
        p.points
            .iter()
            .map(|pt| {
                pt.iter()
                    .map(|c| match (c.numer().to_i64(), c.denom().to_i64()) {
                        (Some(a), Some(b)) => RawCoord::Pair(a, b),
                        _ => RawCoord::Text(c.to_string()),
                    })
                    .collect()
            })
            .collect()
    }
}

impl RawCoord {
    fn value(self) -> Result<Q, OracleError> {
        match self {
            RawCoord::Pair(_, 0) => Err(OracleError::Coordinate("zero denominator".into())),
            RawCoord::Pair(a, b) => Ok(Q::new(a.into(), b.into())),
            RawCoord::Int(a) => Ok(Q::from_integer(a.into())),
            RawCoord::Text(s) => parse_rational(&s),
        }
    }
}

/// Parses `"a"`, `"a/b"` or a decimal `"-1.25"` exactly.
pub fn parse_rational(s: &str) -> Result<Q, OracleError> {
    let bad = || OracleError::Coordinate(s.to_string());
    let t = s.trim();
    if let Some((a, b)) = t.split_once('/') {
        let a = BigInt::from_str(a.trim()).map_err(|_| bad())?;
        let b = BigInt::from_str(b.trim()).map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(a, b));
    }
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())) {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num = BigInt::from_str(&digits).map_err(|_| bad())?;
    let den = Pow::pow(BigInt::from(10), frac.len());
    let v = Q::new(num, den);
    Ok(if negative { -v } else { v })
}

/// The vanishing ideal of a point set in border form.
#[derive(Clone, Debug)]
pub struct PointIdeal {
    pub delta: StandardSet,
    /// `d_{α,β}` with `x^α + Σ_β d_{α,β} x^β` vanishing on the points, for
    /// every `α ∈ ℬ(δ)`.
    pub border: BTreeMap<Exponent, BTreeMap<Exponent, Q>>,
}

impl PointIdeal {
    /// The border polynomials `f_α`.
    pub fn polynomials(&self) -> Vec<QPoly> {
        self.border
            .iter()
            .map(|(alpha, tail)| {
                rational_marked(alpha, tail.iter().map(|(b, d)| (b.clone(), d.clone())))
                    .to_qpoly()
                    .expect("rational coefficients")
            })
            .collect()
    }

    /// The corner members, i.e. the reduced Gröbner basis when the tails
    /// lie below their leading terms.
    pub fn corner_polynomials(&self) -> Vec<QPoly> {
        self.delta
            .corners()
            .iter()
            .map(|alpha| {
                let tail = &self.border[alpha];
                rational_marked(alpha, tail.iter().map(|(b, d)| (b.clone(), d.clone())))
                    .to_qpoly()
                    .expect("rational coefficients")
            })
            .collect()
    }
}

/// Computes the standard set of the vanishing ideal by testing monomials in
/// increasing order for linear independence of their evaluation vectors,
/// then solves for the border coefficients.
pub fn point_ideal(points: &PointConfiguration, order: &TermOrder) -> PointIdeal {
    let n = points.dim();
    let r = points.len();
    let mut delta: Vec<Exponent> = Vec::new();
    let mut echelon: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut candidates = vec![Exponent::zero(n)];
    while !candidates.is_empty() {
        let k = (0..candidates.len())
            .min_by(|&a, &b| order.compare(&candidates[a], &candidates[b]))
            .expect("nonempty");
        let alpha = candidates.swap_remove(k);
        candidates.retain(|c| c != &alpha);
        if (0..n).any(|i| alpha.minus_unit(i).is_some_and(|b| !delta.contains(&b))) {
            continue;
        }
        let mut v: Vec<Q> = points.points().iter().map(|p| monomial_value(p, &alpha)).collect();
        for (pivot, row) in &echelon {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        echelon.push((pivot, v));
        for i in 0..n {
            candidates.push(alpha.plus_unit(i));
        }
        delta.push(alpha);
        if delta.len() == r {
            break;
        }
    }
    let delta = StandardSet::new(n, delta).expect("independent monomials form a standard set");
    let tails = chart_solve(points, &delta, delta.border()).expect("x^δ is a basis on the points");
    let border = tails
        .into_iter()
        .map(|(alpha, c)| (alpha, c.into_iter().map(|(b, v)| (b, -v)).collect()))
        .collect();
    PointIdeal { delta, border }
}

/// `x^α ≡ Σ_β c_β x^β` on the points, for each requested row; `None` when
/// `x^δ` is not a basis of the functions on the points.
fn chart_solve<'a>(
    points: &PointConfiguration,
    delta: &StandardSet,
    rows: impl IntoIterator<Item = &'a Exponent>,
) -> Option<BTreeMap<Exponent, BTreeMap<Exponent, Q>>> {
    if delta.len() != points.len() || delta.dim() != points.dim() {
        return None;
    }
    let rows: Vec<Exponent> = rows.into_iter().cloned().collect();
    let v = points.evaluation(delta.elements());
    let rhs = points.evaluation(&rows);
    let sol = solve_many(&v, &rhs)?;
    Some(
        rows.into_iter()
            .enumerate()
            .map(|(j, alpha)| {
                let coeffs = delta
                    .elements()
                    .iter()
                    .enumerate()
                    .map(|(i, b)| (b.clone(), sol[i][j].clone()))
                    .collect();
                (alpha, coeffs)
            })
            .collect(),
    )
}

/// The coordinates of the point set in the `δ`-chart: `T_{α,β}` for every
/// row `α` of `rows` outside δ. `None` if the points are not in the chart.
pub fn chart_coefficients<'a>(
    points: &PointConfiguration,
    delta: &StandardSet,
    rows: impl IntoIterator<Item = &'a Exponent>,
) -> Option<BTreeMap<TVar, Q>> {
    let rows: Vec<&Exponent> = rows.into_iter().filter(|a| !delta.contains(a)).collect();
    let solved = chart_solve(points, delta, rows)?;
    Some(
        solved
            .into_iter()
            .flat_map(|(alpha, coeffs)| {
                coeffs
                    .into_iter()
                    .map(move |(beta, c)| (TVar::new(alpha.clone(), beta), c))
            })
            .collect(),
    )
}

/// A valuation for `eval`/`specialize` backed by a coordinate table.
pub fn valuation(values: &BTreeMap<TVar, Q>) -> impl Fn(&Var) -> Option<Q> + '_ {
    move |v| match v {
        Var::T(tv) => values.get(tv).cloned(),
        _ => None,
    }
}

/// Whether the point set lies in the Gröbner stratum of `δ`: it lies in the
/// `δ`-chart and `T_{α,β} = 0` whenever `α ≺ β`.
pub fn satisfies_stratum(points: &PointConfiguration, delta: &StandardSet, order: &TermOrder) -> bool {
    match chart_coefficients(points, delta, delta.border()) {
        Some(t) => t.iter().all(|(v, c)| c.is_zero() || order.gt(&v.row, &v.col)),
        None => false,
    }
}

/// The stratum containing the point set, certified against the structural
/// and triangularity equations of that stratum.
pub fn classify_stratum(points: &PointConfiguration, order: &TermOrder) -> Result<StandardSet, OracleError> {
    let ideal = point_ideal(points, order);
    let delta = ideal.delta;
    let values = chart_coefficients(points, &delta, delta.border()).expect("point ideal chart");
    let fail = |generator: String| OracleError::Certification {
        delta: delta.elements().to_vec(),
        generator,
    };
    for (alpha, tail) in &ideal.border {
        for (beta, d) in tail {
            if values[&TVar::new(alpha.clone(), beta.clone())] != -d {
                return Err(fail(format!("sign convention at {alpha}, {beta}")));
            }
            if order.lt(alpha, beta) && !d.is_zero() {
                return Err(fail(format!("T[{alpha}|{beta}] = 0")));
            }
        }
    }
    let val = valuation(&values);
    for set in [
        gen_i2(&delta, &delta, true)?,
        gen_i3(&delta, &delta, true)?,
        gen_i3e(&delta, true)?,
    ] {
        for g in &set.generators {
            let p = g.tpoly();
            if !p.eval(&val).map_err(|v| fail(format!("unbound {v}")))?.is_zero() {
                return Err(fail(p.to_string()));
            }
        }
    }
    Ok(delta)
}

/// `r` distinct points with coordinates `a/b`, `|a| ≤ spread`, `1 ≤ b ≤ 2`.
/// A small spread produces coincident coordinates and hence special strata.
pub fn random_configuration(rng: &mut impl Rng, n: usize, r: usize, spread: i64) -> PointConfiguration {
    assert!(
        (2 * spread + 1).pow(n as u32) as usize >= r,
        "not enough distinct points in the sampling box"
    );
    let mut points: Vec<Vec<Q>> = Vec::with_capacity(r);
    while points.len() < r {
        let p: Vec<Q> = (0..n)
            .map(|_| Q::new(rng.gen_range(-spread..=spread).into(), rng.gen_range(1..=2i64).into()))
            .collect();
        if !points.contains(&p) {
            points.push(p);
        }
    }
    PointConfiguration::new(points).expect("distinct by construction")
}

/// The grid configuration of a standard set: each exponent `α ∈ ε` becomes
/// the point `(c_1(α_1), …, c_n(α_n))` for injective coordinate maps `c_i`.
pub fn grid_configuration(eps: &StandardSet, coord: impl Fn(usize, u32) -> Q) -> PointConfiguration {
    let points = eps
        .elements()
        .iter()
        .map(|a| a.coords().iter().enumerate().map(|(i, &k)| coord(i, k)).collect())
        .collect();
    PointConfiguration::new(points).expect("injective coordinates give distinct points")
}

/// Random injective coordinate maps for [`grid_configuration`].
pub fn random_grid(eps: &StandardSet, rng: &mut impl Rng) -> PointConfiguration {
    let bounds = eps.bounding_box();
    let maps: Vec<Vec<Q>> = bounds
        .iter()
        .map(|&b| {
            let mut vals: Vec<Q> = Vec::new();
            while vals.len() <= b as usize {
                let v = Q::new(rng.gen_range(-20..=20i64).into(), rng.gen_range(1..=3i64).into());
                if !vals.contains(&v) {
                    vals.push(v);
                }
            }
            vals
        })
        .collect();
    grid_configuration(eps, |i, k| maps[i][k as usize].clone())
}

/// Whether every polynomial vanishes at every point.
pub fn vanishes_on(polys: &[QPoly], points: &PointConfiguration) -> bool {
    polys
        .iter()
        .all(|f| points.points().iter().all(|p| f.eval(p).is_zero()))
}
