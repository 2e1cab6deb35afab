//! The parameter ring ℚ[T, U, t]: sparse polynomials in the coefficient
//! variables `T[(α)|(β)]`, their chart counterparts `U[(α)|(β)]`, and the
//! deformation parameter `t`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exponent::Exponent;

pub type Q = BigRational;

/// Integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `n/d` as a reduced rational. Panics on `d = 0`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// The coefficient variable indexed by a row `α` and a column `β`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct TVar {
    pub row: Exponent,
    pub col: Exponent,
}

impl TVar {
    pub fn new(row: Exponent, col: Exponent) -> Self {
        TVar { row, col }
    }
}

impl fmt::Display for TVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.row, self.col)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Var {
    T(TVar),
    U(TVar),
    Time,
}

impl Var {
    pub fn t(row: Exponent, col: Exponent) -> Self {
        Var::T(TVar::new(row, col))
    }

    pub fn u(row: Exponent, col: Exponent) -> Self {
        Var::U(TVar::new(row, col))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::T(v) => write!(f, "T{v}"),
            Var::U(v) => write!(f, "U{v}"),
            Var::Time => write!(f, "t"),
        }
    }
}

/// A monomial in the parameter variables: sorted `(variable, exponent)`
/// pairs with positive exponents. Ordered by total degree, then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TMono(Vec<(Var, u32)>);

impl TMono {
    pub fn one() -> Self {
        TMono(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        TMono(vec![(v, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in factors {
            *m.entry(v).or_default() += e;
        }
        TMono(m.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of `v` in this monomial.
    pub fn exponent_of(&self, v: &Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &TMono) -> TMono {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        TMono(out)
    }
}

impl Ord for TMono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TMono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in ℚ[T, U, t]. Terms are kept in canonical order with no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TPoly {
    terms: BTreeMap<TMono, Q>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn one() -> Self {
        TPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        TPoly::monomial(TMono::one(), c)
    }

    pub fn int(n: i64) -> Self {
        TPoly::constant(q(n))
    }

    pub fn var(v: Var) -> Self {
        TPoly::monomial(TMono::var(v), Q::one())
    }

    /// `T[(row)|(col)]`.
    pub fn t(row: Exponent, col: Exponent) -> Self {
        TPoly::var(Var::t(row, col))
    }

    /// `U[(row)|(col)]`.
    pub fn u(row: Exponent, col: Exponent) -> Self {
        TPoly::var(Var::u(row, col))
    }

    /// `t^k`.
    pub fn time_pow(k: u32) -> Self {
        TPoly::monomial(TMono::from_factors([(Var::Time, k)]), Q::one())
    }

    pub fn monomial(m: TMono, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TMono, Q)>) -> Self {
        let mut p = TPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value if this polynomial is a constant (zero included).
    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&TMono::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&TMono, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &TMono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(TMono::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: TMono, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &TPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &TPoly, factor: &TPoly) {
        for (m1, c1) in &other.terms {
            for (m2, c2) in &factor.terms {
                self.add_term(m1.mul(m2), c1 * c2);
            }
        }
    }

    pub fn scale(&self, c: &Q) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> TPoly {
        let mut acc = TPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// Replaces variables by polynomials; variables without an entry stay.
    pub fn substitute(&self, map: &HashMap<Var, TPoly>) -> TPoly {
        let mut powers: HashMap<(Var, u32), TPoly> = HashMap::new();
        let mut out = TPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut prod = TPoly::constant(c.clone());
            for (v, e) in &m.0 {
                match map.get(v) {
                    Some(p) => {
                        let pw = powers.entry((v.clone(), *e)).or_insert_with(|| p.pow(*e)).clone();
                        prod = &prod * &pw;
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            if prod.is_zero() {
                continue;
            }
            let rest = TMono(kept);
            for (m2, c2) in prod.terms {
                out.add_term(m2.mul(&rest), c2);
            }
        }
        out
    }

    /// Evaluates every variable through `value`; `None` from `value` is an
    /// error reported as the offending variable.
    pub fn eval(&self, value: &dyn Fn(&Var) -> Option<Q>) -> Result<Q, Var> {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.0 {
                let x = value(v).ok_or_else(|| v.clone())?;
                for _ in 0..*e {
                    term *= &x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Divides by the monomial `t^k`, if every term is divisible by it.
    pub fn divide_time(&self, k: u32) -> Option<TPoly> {
        let mut out = TPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent_of(&Var::Time);
            if e < k {
                return None;
            }
            let factors = m.0.iter().map(|(v, x)| {
                if *v == Var::Time {
                    (v.clone(), x - k)
                } else {
                    (v.clone(), *x)
                }
            });
            out.add_term(TMono::from_factors(factors), c.clone());
        }
        Some(out)
    }

    /// Leading coefficient sign normalization: multiply so that the largest
    /// term has a positive coefficient.
    pub fn normalize_sign(&self) -> TPoly {
        match self.terms.iter().next_back() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        let mut out = TPoly::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

impl Neg for TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        -&self
    }
}

impl AddAssign for TPoly {
    fn add_assign(&mut self, rhs: TPoly) {
        self.add_assign_ref(&rhs);
    }
}

impl SubAssign for TPoly {
    fn sub_assign(&mut self, rhs: TPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_tpoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exp;

    fn a() -> TPoly {
        TPoly::t(exp![2, 0], exp![0, 0])
    }

    fn b() -> TPoly {
        TPoly::t(exp![0, 2], exp![1, 0])
    }

    #[test]
    fn arithmetic_cancels() {
        let p = &(&a() + &b()) * &(&a() - &b());
        let expect = &(&a() * &a()) - &(&b() * &b());
        assert_eq!(p, expect);
        assert!((&p - &expect).is_zero());
    }

    #[test]
    fn substitute_and_eval() {
        let p = &(&a() * &b()) + &TPoly::int(3);
        let mut map = HashMap::new();
        map.insert(Var::t(exp![2, 0], exp![0, 0]), TPoly::int(2));
        let s = p.substitute(&map);
        assert_eq!(s, &b().scale(&q(2)) + &TPoly::int(3));
        let v = s.eval(&|_| Some(qf(1, 2))).unwrap();
        assert_eq!(v, q(4));
    }

    #[test]
    fn time_division() {
        let p = &TPoly::time_pow(3) * &a();
        assert_eq!(p.divide_time(3), Some(a()));
        assert_eq!(p.divide_time(4), None);
    }
}
