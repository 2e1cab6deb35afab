//! Exponent vectors in ℕⁿ.
//!
//! Exponents index monomials `x^α`, rows and columns of coefficient
//! matrices, and the parameter variables `T[(α)|(β)]`. Their `Ord` is the
//! administrative degree-lexicographic order used for every canonical
//! listing in this crate; user term orders live in [`crate::order`].

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest ambient dimension accepted by [`crate::staircase::StandardSet`].
pub const MAX_DIM: usize = 16;

/// A point of ℕⁿ.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(coords: Vec<u32>) -> Self {
        Exponent(coords)
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// The unit vector `e_i` (zero-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Exponent(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Number of nonzero coordinates.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.dim(), other.dim());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` if a coordinate would become negative.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn plus_unit(&self, i: usize) -> Exponent {
        let mut v = self.0.clone();
        v[i] += 1;
        Exponent(v)
    }

    pub fn minus_unit(&self, i: usize) -> Option<Exponent> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(Exponent(v))
    }

    /// Coordinatewise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Dot product with an integer weight vector.
    pub fn weight(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&a, &w)| a as i64 * w).sum()
    }

    /// Whether all coordinates outside `{i, j}` vanish.
    pub fn in_plane(&self, i: usize, j: usize) -> bool {
        self.0.iter().enumerate().all(|(k, &c)| c == 0 || k == i || k == j)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand used throughout the tests: `exp![2, 0]`.
#[macro_export]
macro_rules! exp {
    ($($c:expr),* $(,)?) => {
        $crate::exponent::Exponent::new(vec![$($c as u32),*])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_is_degree_first() {
        assert!(exp![0, 2] > exp![1, 0]);
        assert!(exp![2, 0] > exp![1, 1]);
        assert!(exp![1, 1] > exp![0, 2]);
    }

    #[test]
    fn subtraction_and_units() {
        assert_eq!(exp![2, 1].checked_sub(&exp![1, 1]), Some(exp![1, 0]));
        assert_eq!(exp![0, 1].checked_sub(&exp![1, 0]), None);
        assert_eq!(exp![0, 1].minus_unit(0), None);
        assert_eq!(Exponent::unit(3, 1), exp![0, 1, 0]);
        assert!(exp![1, 0, 4].in_plane(0, 2));
        assert!(!exp![1, 1, 4].in_plane(0, 2));
        assert!(exp![0, 4, 0].in_plane(0, 1));
        assert!(!exp![0, 0, 4].in_plane(0, 1));
    }

    #[test]
    fn display() {
        assert_eq!(exp![1, 0, 4].to_string(), "(1,0,4)");
    }
}
