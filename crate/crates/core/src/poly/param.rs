//! Polynomials in x₁..xₙ with coefficients in the parameter ring, marked
//! families, normal forms and the extension of corner-indexed families.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::qpoly::QPoly;
use super::tpoly::{TPoly, Var, Q};
use super::PolyError;
use crate::exponent::Exponent;
use crate::order::TermOrder;
use crate::staircase::StandardSet;

/// An element of ℚ[T, U, t][x₁..xₙ].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamPolynomial {
    n: usize,
    terms: BTreeMap<Exponent, TPoly>,
}

/// Leading exponent and coefficient of a nonzero polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeadingData {
    pub exponent: Exponent,
    pub coefficient: TPoly,
}

impl LeadingData {
    /// `LM = x^LE` as a polynomial.
    pub fn monomial(&self) -> ParamPolynomial {
        ParamPolynomial::x_pow(self.exponent.clone())
    }

    /// `LT = LC·LM`.
    pub fn term(&self) -> ParamPolynomial {
        ParamPolynomial::monomial(self.exponent.clone(), self.coefficient.clone())
    }
}

impl ParamPolynomial {
    pub fn zero(n: usize) -> Self {
        ParamPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// A polynomial with no x-dependence.
    pub fn constant(n: usize, c: TPoly) -> Self {
        Self::monomial(Exponent::zero(n), c)
    }

    pub fn monomial(e: Exponent, c: TPoly) -> Self {
        let mut p = Self::zero(e.dim());
        p.add_term(e, c);
        p
    }

    pub fn x_pow(e: Exponent) -> Self {
        Self::monomial(e, TPoly::one())
    }

    pub fn from_qpoly(p: &QPoly) -> Self {
        let mut out = Self::zero(p.dim());
        for (e, c) in p.terms() {
            out.add_term(e.clone(), TPoly::constant(c.clone()));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending degree-lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &TPoly)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &Exponent) -> TPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exponent, c: TPoly) {
        debug_assert_eq!(e.dim(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += factor · other`.
    pub fn add_scaled(&mut self, other: &ParamPolynomial, factor: &TPoly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * factor);
        }
    }

    pub fn scale(&self, c: &TPoly) -> ParamPolynomial {
        let mut out = Self::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Multiplication by `x^by`.
    pub fn shift(&self, by: &Exponent) -> ParamPolynomial {
        ParamPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.add(by), c.clone())).collect(),
        }
    }

    pub fn leading_data(&self, order: &TermOrder) -> Result<LeadingData, PolyError> {
        let (e, c) = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp_coords(a.0.coords(), b.0.coords()))
            .ok_or(PolyError::ZeroPolynomial)?;
        Ok(LeadingData {
            exponent: e.clone(),
            coefficient: c.clone(),
        })
    }

    /// Applies a map to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&TPoly) -> TPoly) -> ParamPolynomial {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn substitute(&self, map: &HashMap<Var, TPoly>) -> ParamPolynomial {
        self.map_coefficients(|c| c.substitute(map))
    }

    /// Specializes every parameter to a rational.
    pub fn specialize(&self, value: &dyn Fn(&Var) -> Option<Q>) -> Result<QPoly, Var> {
        let mut out = QPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.eval(value)?);
        }
        Ok(out)
    }

    /// Converts a polynomial whose coefficients are all constants.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let mut out = QPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.constant_value()?);
        }
        Some(out)
    }
}

impl Add for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn add(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &TPoly::one());
        out
    }
}

impl Sub for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn sub(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &TPoly::int(-1));
        out
    }
}

impl Neg for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn neg(self) -> ParamPolynomial {
        self.scale(&TPoly::int(-1))
    }
}

impl Mul for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn mul(self, rhs: &ParamPolynomial) -> ParamPolynomial {
        let mut out = ParamPolynomial::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_param(self))
    }
}

/// A family `{f_α}` of polynomials marked on `x^α` with tails in δ. Members
/// beyond the given ones are derived on demand and memoized.
#[derive(Clone, Debug)]
pub struct MarkedFamily {
    delta: StandardSet,
    members: BTreeMap<Exponent, ParamPolynomial>,
    in_progress: HashSet<Exponent>,
}

impl MarkedFamily {
    pub fn new(
        delta: StandardSet,
        members: impl IntoIterator<Item = (Exponent, ParamPolynomial)>,
    ) -> Result<Self, PolyError> {
        let mut map = BTreeMap::new();
        for (alpha, f) in members {
            check_marked(&delta, &alpha, &f)?;
            map.insert(alpha, f);
        }
        Ok(MarkedFamily {
            delta,
            members: map,
            in_progress: HashSet::new(),
        })
    }

    pub fn delta(&self) -> &StandardSet {
        &self.delta
    }

    /// Members computed so far, including the given ones.
    pub fn members(&self) -> &BTreeMap<Exponent, ParamPolynomial> {
        &self.members
    }

    /// `f_α`, deriving it if necessary.
    pub fn get(&mut self, alpha: &Exponent) -> Result<&ParamPolynomial, PolyError> {
        if !self.members.contains_key(alpha) {
            let f = self.derive(alpha)?;
            self.members.insert(alpha.clone(), f);
        }
        Ok(&self.members[alpha])
    }

    fn derive(&mut self, alpha: &Exponent) -> Result<ParamPolynomial, PolyError> {
        if self.delta.contains(alpha) {
            return Err(PolyError::InStandardSet(alpha.clone()));
        }
        let n = self.delta.dim();
        let nu = (0..n)
            .find(|&i| alpha.minus_unit(i).is_some_and(|b| !self.delta.contains(&b)))
            .ok_or_else(|| PolyError::MissingCorner(alpha.clone()))?;
        if !self.in_progress.insert(alpha.clone()) {
            return Err(PolyError::Cyclic(alpha.clone()));
        }
        let below = alpha.minus_unit(nu).expect("chosen coordinate is positive");
        let result = self.get(&below).cloned().and_then(|f_below| {
            let mut tail = f_below.shift(&Exponent::unit(n, nu));
            tail.terms.remove(alpha);
            let reduced = self.reduce(&tail)?;
            let mut f = ParamPolynomial::x_pow(alpha.clone());
            f.add_scaled(&reduced, &TPoly::one());
            Ok(f)
        });
        self.in_progress.remove(alpha);
        result
    }

    /// The normal form of `f`: the unique `r` with support in δ and `f − r`
    /// in the ideal of the family.
    pub fn reduce(&mut self, f: &ParamPolynomial) -> Result<ParamPolynomial, PolyError> {
        let mut g = f.clone();
        loop {
            let outside = g
                .terms
                .iter()
                .rev()
                .find(|(e, _)| !self.delta.contains(e))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((alpha, c)) = outside else {
                return Ok(g);
            };
            let f_alpha = self.get(&alpha)?.clone();
            g.add_scaled(&f_alpha, &-&c);
        }
    }
}

fn check_marked(delta: &StandardSet, alpha: &Exponent, f: &ParamPolynomial) -> Result<(), PolyError> {
    if delta.contains(alpha) {
        return Err(PolyError::InStandardSet(alpha.clone()));
    }
    if !f.coefficient(alpha).is_one() {
        return Err(PolyError::NotMarked(alpha.clone()));
    }
    if let Some(e) = f.support().find(|e| *e != alpha && !delta.contains(e)) {
        return Err(PolyError::TailOutsideDelta(alpha.clone(), e.clone()));
    }
    Ok(())
}

/// `f_α` for the family generated by corner-indexed members.
pub fn extend_family(
    corner_family: &BTreeMap<Exponent, ParamPolynomial>,
    alpha: &Exponent,
    delta: &StandardSet,
) -> Result<ParamPolynomial, PolyError> {
    let mut fam = MarkedFamily::new(delta.clone(), corner_family.clone())?;
    fam.get(alpha).cloned()
}

/// Normal form of `f` with respect to a marked family.
pub fn reduce(
    f: &ParamPolynomial,
    family: &BTreeMap<Exponent, ParamPolynomial>,
    delta: &StandardSet,
) -> Result<ParamPolynomial, PolyError> {
    MarkedFamily::new(delta.clone(), family.clone())?.reduce(f)
}

/// `x^α − Σ_β T_{α,β} x^β`: the marked polynomial with symbolic tail.
pub fn symbolic_marked(alpha: &Exponent, tail: impl IntoIterator<Item = Exponent>) -> ParamPolynomial {
    let mut f = ParamPolynomial::x_pow(alpha.clone());
    for beta in tail {
        f.add_term(beta.clone(), -TPoly::t(alpha.clone(), beta));
    }
    f
}

/// A marked polynomial `x^α + Σ d_β x^β` with rational tail.
pub fn rational_marked(alpha: &Exponent, tail: impl IntoIterator<Item = (Exponent, Q)>) -> ParamPolynomial {
    let mut f = ParamPolynomial::x_pow(alpha.clone());
    for (beta, d) in tail {
        f.add_term(beta, TPoly::constant(d));
    }
    debug_assert!(f.coefficient(alpha).constant_value() == Some(Q::one()));
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exp;
    use crate::poly::tpoly::q;

    fn golden() -> (StandardSet, BTreeMap<Exponent, ParamPolynomial>) {
        let delta = StandardSet::axis(1, 0, 2).unwrap();
        let f2 = rational_marked(&exp![2], [(exp![1], q(-1)), (exp![0], q(-1))]);
        (delta, BTreeMap::from([(exp![2], f2)]))
    }

    #[test]
    fn reduce_cubic() {
        let (delta, fam) = golden();
        let r = reduce(&ParamPolynomial::x_pow(exp![3]), &fam, &delta).unwrap();
        let expect = QPoly::from_terms(1, [(exp![1], q(2)), (exp![0], q(1))]);
        assert_eq!(r, ParamPolynomial::from_qpoly(&expect));
    }

    #[test]
    fn extend_cubic() {
        let (delta, fam) = golden();
        let f3 = extend_family(&fam, &exp![3], &delta).unwrap();
        assert_eq!(f3, rational_marked(&exp![3], [(exp![1], q(-2)), (exp![0], q(-1))]));
        assert_eq!(extend_family(&fam, &exp![2], &delta).unwrap(), fam[&exp![2]]);
        assert!(matches!(
            extend_family(&fam, &exp![1], &delta),
            Err(PolyError::InStandardSet(_))
        ));
    }

    #[test]
    fn marking_is_checked() {
        let (delta, _) = golden();
        let bad = rational_marked(&exp![2], [(exp![3], q(1))]);
        assert!(MarkedFamily::new(delta, [(exp![2], bad)]).is_err());
    }

    #[test]
    fn leading_data_examples() {
        let f = &(&ParamPolynomial::x_pow(exp![2, 0]) + &ParamPolynomial::x_pow(exp![1, 1]))
            + &ParamPolynomial::x_pow(exp![0, 2]);
        let lex = TermOrder::lex();
        let ld = f.leading_data(&lex).unwrap();
        assert_eq!(ld.exponent, exp![2, 0]);
        assert!(ld.coefficient.is_one());
        let w = TermOrder::weighted(vec![1, 2], TermOrder::lex()).unwrap();
        assert_eq!(f.leading_data(&w).unwrap().exponent, exp![0, 2]);
        assert_eq!(
            ParamPolynomial::zero(2).leading_data(&lex),
            Err(PolyError::ZeroPolynomial)
        );
    }
}
