//! Sparse polynomials over ℚ with dense exponent vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::tpoly::Q;
use crate::exponent::Exponent;
use crate::order::TermOrder;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QPoly {
    n: usize,
    terms: BTreeMap<Exponent, Q>,
}

impl QPoly {
    pub fn zero(n: usize) -> Self {
        QPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Q) -> Self {
        QPoly::monomial(Exponent::zero(n), c)
    }

    pub fn monomial(e: Exponent, c: Q) -> Self {
        let mut p = QPoly::zero(e.dim());
        p.add_term(e, c);
        p
    }

    /// The variable `x_i` (zero-based).
    pub fn var(n: usize, i: usize) -> Self {
        QPoly::monomial(Exponent::unit(n, i), Q::one())
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, Q)>) -> Self {
        let mut p = QPoly::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, Q)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: Q) {
        debug_assert_eq!(e.dim(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> QPoly {
        if c.is_zero() {
            return QPoly::zero(self.n);
        }
        QPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, d)| (e.clone(), d * c)).collect(),
        }
    }

    pub fn shift(&self, by: &Exponent) -> QPoly {
        QPoly {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.add(by), c.clone())).collect(),
        }
    }

    /// `(LE, LC)` under `order`.
    pub fn leading(&self, order: &TermOrder) -> Option<(&Exponent, &Q)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_coords(a.0.coords(), b.0.coords()))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &TermOrder) -> QPoly {
        match self.leading(order) {
            Some((_, c)) => self.scale(&(Q::one() / c)),
            None => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.coords()) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(&-Q::one())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_qpoly(self))
    }
}
