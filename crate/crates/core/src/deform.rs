//! One-parameter degeneration of a Gröbner stratum to its monomial point.
//!
//! With a weight `ℓ` separating every variable pair (`ℓ(α) > ℓ(β)`), the
//! substitution `T_{α,β} ↦ t^{ℓ(α)−ℓ(β)} T_{α,β}` maps each stratum
//! generator `g` to `t^w · g`. At `t = 1` nothing changes; at `t = 0` every
//! coordinate vanishes and the family becomes `(x^α; α ∉ δ)`.

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::equations::{EquationSet, Generator};
use crate::exponent::Exponent;
use crate::order::{find_separating_weight, OrderError, TermOrder};
use crate::poly::{ParamPolynomial, PolyError, TPoly, TVar, Var, Q};
use crate::staircase::StandardSet;

#[derive(Debug, Error)]
pub enum DeformError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("variable {0} has no positive weight difference")]
    Uncovered(TVar),
    #[error("generator {0} is not weighted-homogeneous")]
    Inhomogeneous(String),
    #[error("equation set is for a different standard set")]
    WrongSet,
}

#[derive(Clone, Debug)]
pub struct DeformationData {
    pub delta: StandardSet,
    pub weights: Vec<i64>,
    /// `T_{α,β} ↦ t^{ℓ(α)−ℓ(β)} T_{α,β}`.
    pub substitution: BTreeMap<TVar, TPoly>,
}

impl DeformationData {
    pub fn exponent(&self, v: &TVar) -> Option<u32> {
        let d = v.row.weight(&self.weights) - v.col.weight(&self.weights);
        (d > 0).then_some(d as u32)
    }

    fn map(&self) -> HashMap<Var, TPoly> {
        self.substitution
            .iter()
            .map(|(v, p)| (Var::T(v.clone()), p.clone()))
            .collect()
    }
}

/// Chooses `ℓ` separating `{(α, β) : α ∈ ℬ(δ), β ∈ δ, α ≻ β}`.
pub fn build_deformation(delta: &StandardSet, order: &TermOrder) -> Result<DeformationData, DeformError> {
    order.validate(delta.dim())?;
    let pairs: Vec<(Exponent, Exponent)> = delta
        .border()
        .iter()
        .flat_map(|a| {
            delta
                .elements()
                .iter()
                .filter(|b| order.gt(a, b))
                .map(move |b| (a.clone(), b.clone()))
        })
        .collect();
    let weights = find_separating_weight(delta.dim(), &pairs)?;
    let substitution = pairs
        .into_iter()
        .map(|(a, b)| {
            let k = (a.weight(&weights) - b.weight(&weights)) as u32;
            let p = &TPoly::time_pow(k) * &TPoly::t(a.clone(), b.clone());
            (TVar::new(a, b), p)
        })
        .collect();
    Ok(DeformationData {
        delta: delta.clone(),
        weights,
        substitution,
    })
}

/// A deformed generator and its weight `w` with `substitute(g) = t^w · g`.
#[derive(Clone, Debug)]
pub struct Deformed {
    pub generator: Generator,
    pub weight: u32,
    pub deformed: TPoly,
}

/// Applies the substitution to every generator of a stratum presentation
/// in which the vanishing variables have already been eliminated.
pub fn apply_deformation(set: &EquationSet, data: &DeformationData) -> Result<Vec<Deformed>, DeformError> {
    if set.delta != data.delta {
        return Err(DeformError::WrongSet);
    }
    for v in set.variables() {
        if !data.substitution.contains_key(&v) {
            return Err(DeformError::Uncovered(v));
        }
    }
    let map = data.map();
    set.generators
        .iter()
        .map(|g| {
            let p = g.tpoly();
            let deformed = p.substitute(&map);
            let weight = homogeneity_weight(&p, &deformed).ok_or_else(|| DeformError::Inhomogeneous(p.to_string()))?;
            Ok(Deformed {
                generator: g.clone(),
                weight,
                deformed,
            })
        })
        .collect()
}

/// The `w` with `deformed = t^w · original`, if there is one.
fn homogeneity_weight(original: &TPoly, deformed: &TPoly) -> Option<u32> {
    let (mono, _) = deformed.terms().next()?;
    let w = mono.exponent_of(&Var::Time);
    (deformed.divide_time(w).as_ref() == Some(original)).then_some(w)
}

/// `g̃_α = x^α − Σ_{β≺α} t^{ℓ(α)−ℓ(β)} T_{α,β} x^β` for each `α ∈ ℬ(δ)`.
pub fn deformed_family(data: &DeformationData) -> BTreeMap<Exponent, ParamPolynomial> {
    let mut out: BTreeMap<Exponent, ParamPolynomial> = data
        .delta
        .border()
        .iter()
        .map(|a| (a.clone(), ParamPolynomial::x_pow(a.clone())))
        .collect();
    for (v, p) in &data.substitution {
        out.get_mut(&v.row).expect("border row").add_term(v.col.clone(), -p);
    }
    out
}

/// Specializes `t` in every coefficient.
pub fn at_time(f: &ParamPolynomial, t: &Q) -> ParamPolynomial {
    let value = t.clone();
    let map: HashMap<Var, TPoly> = [(Var::Time, TPoly::constant(value))].into();
    f.substitute(&map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::{gen_stratum, StratumOptions};
    use crate::exp;

    fn ex71() -> StandardSet {
        StandardSet::new(2, [exp![0, 0], exp![1, 0], exp![0, 1], exp![1, 1]]).unwrap()
    }

    #[test]
    fn line_weights() {
        let d = StandardSet::axis(1, 0, 4).unwrap();
        let data = build_deformation(&d, &TermOrder::lex()).unwrap();
        for (v, p) in &data.substitution {
            let k = 4 - v.col.coords()[0];
            assert_eq!(data.exponent(v), Some(k));
            assert_eq!(p.variables().len(), 2);
        }
    }

    #[test]
    fn stratum_weights_positive() {
        let d = ex71();
        let lex = TermOrder::lex();
        let data = build_deformation(&d, &lex).unwrap();
        let s = gen_stratum(&d, &d, &lex, StratumOptions::default())
            .unwrap()
            .eliminate_vanishing();
        let out = apply_deformation(&s, &data).unwrap();
        assert!(!out.is_empty());
        for g in &out {
            assert!(g.weight > 0, "{}", g.generator.poly);
        }
    }

    #[test]
    fn rejects_unknown_variables() {
        let d = ex71();
        let lex = TermOrder::lex();
        let data = build_deformation(&d, &lex).unwrap();
        let s = gen_stratum(&d, &d, &lex, StratumOptions::default()).unwrap();
        assert!(matches!(apply_deformation(&s, &data), Err(DeformError::Uncovered(_))));
    }
}
