//! Standard sets (staircases) and their combinatorics.
//!
//! A standard set δ ⊂ ℕⁿ is a finite downward-closed set of exponents. Its
//! complement is the exponent set of a monomial ideal, generated by the
//! corners 𝒞(δ). The border ℬ(δ) collects everything one unit step outside
//! δ, and the iterated borders δ⁽ⁱ⁾ stack that construction.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::{Exponent, MAX_DIM};

/// Default cap on the number of sets produced by [`enumerate_standard_sets`].
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StaircaseError {
    #[error("exponent {0} has dimension {1}, expected {2}")]
    DimensionMismatch(Exponent, usize, usize),
    #[error("dimension {0} outside the supported range 1..={MAX_DIM}")]
    BadDimension(usize),
    #[error("a standard set must be nonempty")]
    Empty,
    #[error("{missing} is missing below {element}: not downward closed")]
    NotDownwardClosed { element: Exponent, missing: Exponent },
    #[error("enumeration of standard sets of size {r} in dimension {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, r: usize, cap: usize },
}

/// A plane `ℕe_i ⊕ ℕe_j` (with `i < j`) in which `point` is an edge point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgePlane {
    pub point: Exponent,
    pub i: usize,
    pub j: usize,
}

/// A finite standard set together with its derived corner, border and edge
/// data. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardSet {
    n: usize,
    elements: Vec<Exponent>,
    corners: Vec<Exponent>,
    border: Vec<Exponent>,
    edges: Vec<EdgePlane>,
}

/// Wire format: `{"n": 2, "elements": [[0,0],[1,0]]}`.
#[derive(Serialize, Deserialize)]
struct StandardSetJson {
    n: usize,
    elements: Vec<Exponent>,
}

impl Serialize for StandardSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        StandardSetJson {
            n: self.n,
            elements: self.elements.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = StandardSetJson::deserialize(d)?;
        StandardSet::new(raw.n, raw.elements).map_err(serde::de::Error::custom)
    }
}

fn check_dims(n: usize, elements: &[Exponent]) -> Result<(), StaircaseError> {
    if n == 0 || n > MAX_DIM {
        return Err(StaircaseError::BadDimension(n));
    }
    for e in elements {
        if e.dim() != n {
            return Err(StaircaseError::DimensionMismatch(e.clone(), e.dim(), n));
        }
    }
    Ok(())
}

fn first_gap(elements: &BTreeSet<Exponent>) -> Option<(Exponent, Exponent)> {
    for e in elements {
        for i in 0..e.dim() {
            if let Some(below) = e.minus_unit(i) {
                if !elements.contains(&below) {
                    return Some((e.clone(), below));
                }
            }
        }
    }
    None
}

/// Whether `elements` is downward closed in ℕⁿ.
pub fn is_standard_set(elements: &[Exponent], n: usize) -> Result<bool, StaircaseError> {
    check_dims(n, elements)?;
    let set: BTreeSet<Exponent> = elements.iter().cloned().collect();
    Ok(first_gap(&set).is_none())
}

impl StandardSet {
    pub fn new(n: usize, elements: impl IntoIterator<Item = Exponent>) -> Result<Self, StaircaseError> {
        let set: BTreeSet<Exponent> = elements.into_iter().collect();
        let elements: Vec<Exponent> = set.iter().cloned().collect();
        check_dims(n, &elements)?;
        if elements.is_empty() {
            return Err(StaircaseError::Empty);
        }
        if let Some((element, missing)) = first_gap(&set) {
            return Err(StaircaseError::NotDownwardClosed { element, missing });
        }
        Ok(Self::from_sorted_unchecked(n, elements))
    }

    fn from_sorted_unchecked(n: usize, elements: Vec<Exponent>) -> Self {
        let mut s = StandardSet {
            n,
            elements,
            corners: Vec::new(),
            border: Vec::new(),
            edges: Vec::new(),
        };
        s.border = border_of(n, &s.elements, |e| s.contains(e));
        s.corners = s
            .border
            .iter()
            .filter(|a| (0..n).all(|i| a.minus_unit(i).map_or(true, |b| s.contains(&b))))
            .cloned()
            .collect();
        let mut edges = Vec::new();
        for a in &s.elements {
            for i in 0..n {
                for j in i + 1..n {
                    if a.in_plane(i, j) && !s.contains(&a.plus_unit(i)) && !s.contains(&a.plus_unit(j)) {
                        edges.push(EdgePlane { point: a.clone(), i, j });
                    }
                }
            }
        }
        edges.sort();
        s.edges = edges;
        s
    }

    /// `{0, e_1, …, (r-1)e_axis}`.
    pub fn axis(n: usize, axis: usize, r: u32) -> Result<Self, StaircaseError> {
        Self::new(
            n,
            (0..r).map(|k| {
                let mut v = vec![0; n];
                v[axis] = k;
                Exponent::new(v)
            }),
        )
    }

    /// The smallest standard set containing `maxima`: every exponent dividing
    /// one of them.
    pub fn down_closure(n: usize, maxima: &[Exponent]) -> Result<Self, StaircaseError> {
        check_dims(n, maxima)?;
        let mut set = BTreeSet::new();
        for m in maxima {
            let mut stack = vec![m.clone()];
            while let Some(e) = stack.pop() {
                if set.insert(e.clone()) {
                    stack.extend((0..n).filter_map(|i| e.minus_unit(i)));
                }
            }
        }
        Self::new(n, set)
    }

    /// The one-point standard set `{0}`.
    pub fn origin(n: usize) -> Result<Self, StaircaseError> {
        Self::new(n, [Exponent::zero(n)])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical (degree-lexicographic) order.
    pub fn elements(&self) -> &[Exponent] {
        &self.elements
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    /// Position of `e` in [`Self::elements`].
    pub fn index_of(&self, e: &Exponent) -> Option<usize> {
        self.elements.binary_search(e).ok()
    }

    /// Whether `e` lies in the complement, decided by corner domination.
    pub fn in_complement(&self, e: &Exponent) -> bool {
        self.corners.iter().any(|c| c.divides(e))
    }

    pub fn corners(&self) -> &[Exponent] {
        &self.corners
    }

    pub fn border(&self) -> &[Exponent] {
        &self.border
    }

    /// Edge points together with the planes in which they qualify.
    pub fn edge_planes(&self) -> &[EdgePlane] {
        &self.edges
    }

    /// Distinct edge points.
    pub fn edge_points(&self) -> Vec<Exponent> {
        let set: BTreeSet<Exponent> = self.edges.iter().map(|e| e.point.clone()).collect();
        set.into_iter().collect()
    }

    pub fn is_subset_of(&self, other: &StandardSet) -> bool {
        self.n == other.n && self.elements.iter().all(|e| other.contains(e))
    }

    pub fn union(&self, other: &StandardSet) -> StandardSet {
        let set: BTreeSet<Exponent> = self.elements.iter().chain(other.elements.iter()).cloned().collect();
        Self::from_sorted_unchecked(self.n, set.into_iter().collect())
    }

    /// `self ∪ self⁽¹⁾`, again a standard set.
    pub fn with_border(&self) -> StandardSet {
        let set: BTreeSet<Exponent> = self.elements.iter().chain(self.border.iter()).cloned().collect();
        Self::from_sorted_unchecked(self.n, set.into_iter().collect())
    }

    /// `N⁽ⁱ⁾` for `i ≥ 1`: `N⁽¹⁾ = ℬ(N)` and `N⁽ⁱ⁺¹⁾ = ℬ(N ∪ N⁽¹⁾ ∪ … ∪ N⁽ⁱ⁾)`.
    pub fn iterated_border(&self, i: usize) -> Vec<Exponent> {
        assert!(i >= 1, "iterated borders are indexed from 1");
        let mut acc = self.clone();
        for _ in 1..i {
            acc = acc.with_border();
        }
        acc.border.clone()
    }

    /// Componentwise maximum plus two; every corner, border and edge
    /// phenomenon of the set lives inside `[0, bound]ⁿ`.
    pub fn bounding_box(&self) -> Vec<u32> {
        let mut bound = vec![0u32; self.n];
        for e in &self.elements {
            for (b, &c) in bound.iter_mut().zip(e.coords()) {
                *b = (*b).max(c);
            }
        }
        bound.iter().map(|b| b + 2).collect()
    }
}

fn border_of(n: usize, elements: &[Exponent], contains: impl Fn(&Exponent) -> bool) -> Vec<Exponent> {
    let mut out = BTreeSet::new();
    for e in elements {
        for i in 0..n {
            let up = e.plus_unit(i);
            if !contains(&up) {
                out.insert(up);
            }
        }
    }
    out.into_iter().collect()
}

/// Every standard set of size `r` in ℕⁿ, each exactly once.
///
/// A standard set listed in degree-lexicographic order has every prefix
/// downward closed, so each set is built along exactly one path that appends
/// corners larger than the current maximum.
pub fn enumerate_standard_sets(n: usize, r: usize, cap: usize) -> Result<Vec<StandardSet>, StaircaseError> {
    if n == 0 || n > MAX_DIM {
        return Err(StaircaseError::BadDimension(n));
    }
    if r == 0 {
        return Err(StaircaseError::Empty);
    }
    let mut out = Vec::new();
    let mut current = vec![Exponent::zero(n)];
    extend_sets(n, r, cap, &mut current, &mut out)?;
    Ok(out)
}

fn extend_sets(
    n: usize,
    r: usize,
    cap: usize,
    current: &mut Vec<Exponent>,
    out: &mut Vec<StandardSet>,
) -> Result<(), StaircaseError> {
    if current.len() == r {
        if out.len() >= cap {
            return Err(StaircaseError::CapExceeded { n, r, cap });
        }
        out.push(StandardSet::from_sorted_unchecked(n, current.clone()));
        return Ok(());
    }
    let max = current.last().cloned().expect("nonempty");
    let contains = |e: &Exponent| current.binary_search(e).is_ok();
    let candidates: Vec<Exponent> = border_of(n, current, contains)
        .into_iter()
        .filter(|c| *c > max)
        .filter(|c| (0..n).all(|i| c.minus_unit(i).map_or(true, |b| contains(&b))))
        .collect();
    for c in candidates {
        current.push(c);
        extend_sets(n, r, cap, current, out)?;
        current.pop();
    }
    Ok(())
}
