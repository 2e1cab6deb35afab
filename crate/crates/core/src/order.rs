//! Term orders on exponents and integer weight vectors realizing finite
//! sets of order constraints.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::Exponent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("exponents of dimension {0} and {1} cannot be compared")]
    DimensionMismatch(usize, usize),
    #[error("order has {expected} variables but was used in dimension {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("weight entries must be non-negative, got {0:?}")]
    NegativeWeight(Vec<i64>),
    #[error("variable priority {0:?} is not a permutation of 1..={1}")]
    BadPriority(Vec<usize>, usize),
    #[error("cannot parse term order {0:?}")]
    Parse(String),
    #[error("no integer weight separates the {0} given pairs")]
    Infeasible(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
    Weighted {
        weights: Vec<i64>,
        tiebreak: Box<TermOrder>,
    },
}

/// A monomial order. `priority` lists zero-based variable indices from most
/// to least significant; `None` means `x1 ≻ x2 ≻ … ≻ xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub priority: Option<Vec<usize>>,
}

impl TermOrder {
    pub fn lex() -> Self {
        Self::from_kind(OrderKind::Lex)
    }

    pub fn grlex() -> Self {
        Self::from_kind(OrderKind::GrLex)
    }

    pub fn grevlex() -> Self {
        Self::from_kind(OrderKind::GrevLex)
    }

    /// Weight order refined by `tiebreak`. Weights must be non-negative so
    /// that the composite is a monomial order.
    pub fn weighted(weights: Vec<i64>, tiebreak: TermOrder) -> Result<Self, OrderError> {
        if weights.iter().any(|&w| w < 0) {
            return Err(OrderError::NegativeWeight(weights));
        }
        Ok(Self::from_kind(OrderKind::Weighted {
            weights,
            tiebreak: Box::new(tiebreak),
        }))
    }

    fn from_kind(kind: OrderKind) -> Self {
        TermOrder { kind, priority: None }
    }

    /// Reorders variable significance. `priority[0]` is the largest variable.
    pub fn with_priority(mut self, priority: Vec<usize>) -> Result<Self, OrderError> {
        let n = priority.len();
        let mut seen = vec![false; n];
        for &p in &priority {
            if p >= n || seen[p] {
                return Err(OrderError::BadPriority(priority.clone(), n));
            }
            seen[p] = true;
        }
        self.priority = Some(priority);
        Ok(self)
    }

    /// Applies a variable priority to the base order, descending through
    /// weight orders into their tiebreak.
    pub fn with_vars(self, priority: Vec<usize>) -> Result<Self, OrderError> {
        match self.kind {
            OrderKind::Weighted { weights, tiebreak } => Ok(TermOrder {
                kind: OrderKind::Weighted {
                    weights,
                    tiebreak: Box::new(tiebreak.with_vars(priority)?),
                },
                priority: None,
            }),
            _ => self.with_priority(priority),
        }
    }

    /// Lex with `x_n ≻ … ≻ x_1`.
    pub fn lex_reversed(n: usize) -> Self {
        TermOrder::lex()
            .with_priority((0..n).rev().collect())
            .expect("reversal is a permutation")
    }

    /// Checks that the order can compare exponents of dimension `n`.
    pub fn validate(&self, n: usize) -> Result<(), OrderError> {
        if let Some(p) = &self.priority {
            if p.len() != n {
                return Err(OrderError::ArityMismatch {
                    expected: p.len(),
                    found: n,
                });
            }
        }
        if let OrderKind::Weighted { weights, tiebreak } = &self.kind {
            if weights.len() != n {
                return Err(OrderError::ArityMismatch {
                    expected: weights.len(),
                    found: n,
                });
            }
            tiebreak.validate(n)?;
        }
        Ok(())
    }

    pub fn try_compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering, OrderError> {
        if a.dim() != b.dim() {
            return Err(OrderError::DimensionMismatch(a.dim(), b.dim()));
        }
        self.validate(a.dim())?;
        Ok(self.cmp_coords(a.coords(), b.coords()))
    }

    /// Compares two exponents. Panics on dimension mismatch; use
    /// [`Self::try_compare`] for untrusted input.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Ordering {
        self.try_compare(a, b).expect("incomparable exponents")
    }

    pub fn cmp_coords(&self, a: &[u32], b: &[u32]) -> Ordering {
        let var = |k: usize| match &self.priority {
            Some(p) => p[k],
            None => k,
        };
        let n = a.len();
        let lex = || {
            for k in 0..n {
                let i = var(k);
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        };
        let deg = |v: &[u32]| v.iter().map(|&c| c as u64).sum::<u64>();
        match &self.kind {
            OrderKind::Lex => lex(),
            OrderKind::GrLex => deg(a).cmp(&deg(b)).then_with(lex),
            OrderKind::GrevLex => deg(a).cmp(&deg(b)).then_with(|| {
                for k in (0..n).rev() {
                    let i = var(k);
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }),
            OrderKind::Weighted { weights, tiebreak } => {
                let w = |v: &[u32]| -> i64 { v.iter().zip(weights).map(|(&c, &x)| c as i64 * x).sum() };
                w(a).cmp(&w(b)).then_with(|| tiebreak.cmp_coords(a, b))
            }
        }
    }

    pub fn lt(&self, a: &Exponent, b: &Exponent) -> bool {
        self.compare(a, b) == Ordering::Less
    }

    pub fn gt(&self, a: &Exponent, b: &Exponent) -> bool {
        self.compare(a, b) == Ordering::Greater
    }

    /// The ≺-largest exponent of a nonempty slice.
    pub fn max<'a>(&self, items: impl IntoIterator<Item = &'a Exponent>) -> Option<&'a Exponent> {
        items.into_iter().max_by(|a, b| self.compare(a, b))
    }

    /// Sorts ascending under this order.
    pub fn sort(&self, items: &mut [Exponent]) {
        items.sort_by(|a, b| self.compare(a, b));
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrderKind::Lex => write!(f, "lex")?,
            OrderKind::GrLex => write!(f, "grlex")?,
            OrderKind::GrevLex => write!(f, "grevlex")?,
            OrderKind::Weighted { weights, tiebreak } => {
                let ws: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "w:{}:{}", ws.join(","), tiebreak)?;
            }
        }
        if let Some(p) = &self.priority {
            let ps: Vec<String> = p.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "[{}]", ps.join(","))?;
        }
        Ok(())
    }
}

/// Parses `lex | grlex | grevlex | w:<c1,..,cn>:<tiebreak>`. The base orders
/// may carry a one-based variable priority suffix such as `lex[2,1]`; a
/// weighted order takes its priority from its tiebreak.
impl FromStr for TermOrder {
    type Err = OrderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OrderError::Parse(s.to_string());
        let s = s.trim();
        let (body, priority) = match s.strip_suffix(']') {
            Some(rest) if !rest.starts_with("w:") => {
                let open = rest.rfind('[').ok_or_else(bad)?;
                (&rest[..open], Some(parse_vars(&rest[open + 1..])?))
            }
            _ => (s, None),
        };
        let order = match body {
            "lex" => TermOrder::lex(),
            "grlex" => TermOrder::grlex(),
            "grevlex" => TermOrder::grevlex(),
            _ => {
                let rest = body.strip_prefix("w:").ok_or_else(bad)?;
                let (ws, tie) = rest.split_once(':').ok_or_else(bad)?;
                let weights = ws
                    .split(',')
                    .map(|w| w.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                TermOrder::weighted(weights, tie.parse()?)?
            }
        };
        match priority {
            Some(p) => order.with_priority(p),
            None => Ok(order),
        }
    }
}

/// Parses a one-based, comma-separated variable priority (`"3,1,2"`), largest
/// variable first. `x` prefixes are accepted (`"x3,x1,x2"`).
pub fn parse_vars(s: &str) -> Result<Vec<usize>, OrderError> {
    let bad = || OrderError::Parse(s.to_string());
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let t = t.strip_prefix('x').unwrap_or(t);
            match t.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k - 1),
                _ => Err(bad()),
            }
        })
        .collect()
}

fn satisfied(l: &[i64], pairs: &[(Exponent, Exponent)]) -> bool {
    pairs.iter().all(|(a, b)| a.weight(l) > b.weight(l))
}

const PERCEPTRON_ROUNDS: usize = 100_000;
const BOX_RADIUS: i64 = 4;

/// Finds an integer `ℓ` with `ℓ(α) > ℓ(β)` for every pair `(α, β)`.
///
/// Tries the all-ones vector, then perceptron updates (which terminate
/// whenever the system is feasible), then an exhaustive scan of a small box.
/// The result is re-validated before it is returned.
pub fn find_separating_weight(n: usize, pairs: &[(Exponent, Exponent)]) -> Result<Vec<i64>, OrderError> {
    for (a, b) in pairs {
        if a.dim() != n || b.dim() != n {
            return Err(OrderError::DimensionMismatch(a.dim().max(b.dim()), n));
        }
    }
    let ones = vec![1i64; n];
    if satisfied(&ones, pairs) {
        return Ok(ones);
    }
    let diffs: Vec<Vec<i64>> = pairs
        .iter()
        .map(|(a, b)| {
            a.coords()
                .iter()
                .zip(b.coords())
                .map(|(&x, &y)| x as i64 - y as i64)
                .collect()
        })
        .collect();
    if diffs.iter().any(|d| d.iter().all(|&x| x == 0)) {
        return Err(OrderError::Infeasible(pairs.len()));
    }
    let mut l = ones;
    for _ in 0..PERCEPTRON_ROUNDS {
        let mut changed = false;
        for d in &diffs {
            let dot: i64 = d.iter().zip(&l).map(|(x, y)| x * y).sum();
            if dot <= 0 {
                for (li, di) in l.iter_mut().zip(d) {
                    *li += di;
                }
                changed = true;
            }
        }
        if !changed {
            debug_assert!(satisfied(&l, pairs));
            return Ok(l);
        }
    }
    box_search(n, pairs).ok_or(OrderError::Infeasible(pairs.len()))
}

fn box_search(n: usize, pairs: &[(Exponent, Exponent)]) -> Option<Vec<i64>> {
    let side = (2 * BOX_RADIUS + 1) as u64;
    let total = side.checked_pow(n as u32)?;
    (0..total).find_map(|mut code| {
        let l: Vec<i64> = (0..n)
            .map(|_| {
                let c = (code % side) as i64 - BOX_RADIUS;
                code /= side;
                c
            })
            .collect();
        satisfied(&l, pairs).then_some(l)
    })
}
