//! Chart intersections and transition maps between border-basis charts.
//!
//! Both charts are presented on the common row set `R = S ∪ S⁽¹⁾` with
//! `S = δ ∪ ε`. In the `δ`-chart, `x^α ≡ Σ_{β∈δ} T_{α,β} x^β`; in the
//! `ε`-chart, `x^α ≡ Σ_{ξ∈ε} U_{α,ξ} x^ξ`. A point of the `δ`-chart lies in
//! the `ε`-chart iff `T^□ = (T_{α,β})_{α∈ε, β∈δ}` is invertible, and then
//! `U = T · (T^□)⁻¹`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::exponent::Exponent;
use crate::linalg::{adjugate_symbolic, det_symbolic};
use crate::order::TermOrder;
use crate::poly::{TPoly, TVar, Var, Q};
use crate::staircase::StandardSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartError {
    #[error("standard sets of different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("standard sets of different dimensions ({0} and {1})")]
    DimensionMismatch(usize, usize),
}

fn check(delta: &StandardSet, eps: &StandardSet) -> Result<(), ChartError> {
    if delta.dim() != eps.dim() {
        return Err(ChartError::DimensionMismatch(delta.dim(), eps.dim()));
    }
    if delta.len() != eps.len() {
        return Err(ChartError::SizeMismatch(delta.len(), eps.len()));
    }
    Ok(())
}

fn minus(a: &StandardSet, b: &StandardSet) -> Vec<Exponent> {
    a.elements().iter().filter(|e| !b.contains(e)).cloned().collect()
}

fn meet(a: &StandardSet, b: &StandardSet) -> Vec<Exponent> {
    a.elements().iter().filter(|e| b.contains(e)).cloned().collect()
}

/// The joint row set `δ ∪ ε ∪ (δ ∪ ε)⁽¹⁾`.
pub fn joint_rows(delta: &StandardSet, eps: &StandardSet) -> StandardSet {
    delta.union(eps).with_border()
}

/// `T_{α,β}` of the `δ`-chart, with `α ∈ δ` read as the Kronecker delta.
fn t_entry(delta: &StandardSet, alpha: &Exponent, beta: &Exponent) -> TPoly {
    if delta.contains(alpha) {
        if alpha == beta {
            TPoly::one()
        } else {
            TPoly::zero()
        }
    } else {
        TPoly::t(alpha.clone(), beta.clone())
    }
}

fn u_entry(eps: &StandardSet, alpha: &Exponent, xi: &Exponent) -> TPoly {
    if eps.contains(alpha) {
        if alpha == xi {
            TPoly::one()
        } else {
            TPoly::zero()
        }
    } else {
        TPoly::u(alpha.clone(), xi.clone())
    }
}

/// The block decomposition of both coefficient matrices.
///
/// Rows come in the order `δ∩ε, δ−ε, ε−δ, ρ`; `T` has columns `δ∩ε, δ−ε`
/// and `U` has columns `δ∩ε, ε−δ`.
#[derive(Clone, Debug)]
pub struct ChartBlocks {
    pub delta: StandardSet,
    pub epsilon: StandardSet,
    pub common: Vec<Exponent>,
    pub delta_only: Vec<Exponent>,
    pub eps_only: Vec<Exponent>,
    pub rho: Vec<Exponent>,
    pub t: Vec<Vec<TPoly>>,
    pub u: Vec<Vec<TPoly>>,
}

impl ChartBlocks {
    pub fn new(delta: &StandardSet, eps: &StandardSet) -> Result<Self, ChartError> {
        check(delta, eps)?;
        let rows = joint_rows(delta, eps);
        let common = meet(delta, eps);
        let delta_only = minus(delta, eps);
        let eps_only = minus(eps, delta);
        let rho: Vec<Exponent> = rows
            .elements()
            .iter()
            .chain(rows.border())
            .filter(|a| !delta.contains(a) && !eps.contains(a))
            .cloned()
            .collect();
        let mut blocks = ChartBlocks {
            delta: delta.clone(),
            epsilon: eps.clone(),
            common,
            delta_only,
            eps_only,
            rho,
            t: Vec::new(),
            u: Vec::new(),
        };
        let rows = blocks.rows();
        let t_cols = blocks.t_cols();
        let u_cols = blocks.u_cols();
        blocks.t = rows
            .iter()
            .map(|a| t_cols.iter().map(|b| t_entry(delta, a, b)).collect())
            .collect();
        blocks.u = rows
            .iter()
            .map(|a| u_cols.iter().map(|x| u_entry(eps, a, x)).collect())
            .collect();
        Ok(blocks)
    }

    pub fn rows(&self) -> Vec<Exponent> {
        [&self.common, &self.delta_only, &self.eps_only, &self.rho]
            .into_iter()
            .flatten()
            .cloned()
            .collect()
    }

    pub fn t_cols(&self) -> Vec<Exponent> {
        self.common.iter().chain(&self.delta_only).cloned().collect()
    }

    pub fn u_cols(&self) -> Vec<Exponent> {
        self.common.iter().chain(&self.eps_only).cloned().collect()
    }

    /// `T^□`: rows `ε` (as `δ∩ε, ε−δ`), columns `δ`.
    pub fn t_box(&self) -> Vec<Vec<TPoly>> {
        let k = self.common.len();
        let d = self.delta_only.len();
        let rows = (0..k).chain(k + d..k + d + self.eps_only.len());
        rows.map(|i| self.t[i].clone()).collect()
    }

    /// `U^□`: rows `δ` (as `δ∩ε, δ−ε`), columns `ε`.
    pub fn u_box(&self) -> Vec<Vec<TPoly>> {
        let k = self.common.len() + self.delta_only.len();
        self.u[..k].to_vec()
    }

    /// The block `T₃₂ = (T_{α,β})_{α∈ε−δ, β∈δ−ε}`.
    pub fn t32(&self) -> Vec<Vec<TPoly>> {
        self.eps_only
            .iter()
            .map(|a| self.delta_only.iter().map(|b| t_entry(&self.delta, a, b)).collect())
            .collect()
    }
}

/// The generator `det(T_{α,β})_{α∈ε−δ, β∈δ−ε}` of the intersection locus.
pub fn intersection_det(delta: &StandardSet, eps: &StandardSet) -> Result<TPoly, ChartError> {
    Ok(det_symbolic(&ChartBlocks::new(delta, eps)?.t32()))
}

/// The transition from the `δ`-chart to the `ε`-chart: every `U_{α,ξ}` as a
/// polynomial in the `T`-variables divided by `det(T₃₂)`.
#[derive(Clone, Debug)]
pub struct Gluing {
    pub delta: StandardSet,
    pub epsilon: StandardSet,
    pub denominator: TPoly,
    pub numerators: BTreeMap<TVar, TPoly>,
}

#[derive(Serialize)]
pub struct GluingEntry {
    pub u_var: [Exponent; 2],
    pub expression: String,
    pub numerator: String,
    pub denominator: String,
}

impl Gluing {
    /// Evaluates the `U`-coordinates at a `T`-valuation; `None` off the
    /// intersection.
    pub fn apply(&self, t: &dyn Fn(&Var) -> Option<Q>) -> Option<BTreeMap<TVar, Q>> {
        let den = self.denominator.eval(t).ok()?;
        if den.is_zero() {
            return None;
        }
        self.numerators
            .iter()
            .map(|(u, num)| Some((u.clone(), num.eval(t).ok()? / &den)))
            .collect()
    }

    pub fn entries(&self) -> Vec<GluingEntry> {
        let den = self.denominator.to_string();
        self.numerators
            .iter()
            .map(|(u, num)| {
                let num = num.to_string();
                GluingEntry {
                    u_var: [u.row.clone(), u.col.clone()],
                    expression: if self.denominator.is_one() {
                        num.clone()
                    } else {
                        format!("({num})/({den})")
                    },
                    numerator: num,
                    denominator: den.clone(),
                }
            })
            .collect()
    }
}

/// `U = T · adj(T^□) / det(T₃₂)`, using the block form
/// `adj(T^□) = (det·E, 0; −adj(T₃₂)·T₃₁, adj(T₃₂))`.
pub fn gluing_map(delta: &StandardSet, eps: &StandardSet) -> Result<Gluing, ChartError> {
    let b = ChartBlocks::new(delta, eps)?;
    let k = b.common.len();
    let m = b.eps_only.len();
    let t32 = b.t32();
    let det = det_symbolic(&t32);
    let adj32 = if m == 0 { Vec::new() } else { adjugate_symbolic(&t32) };
    let t31: Vec<Vec<TPoly>> = b
        .eps_only
        .iter()
        .map(|a| b.common.iter().map(|c| t_entry(delta, a, c)).collect())
        .collect();
    // adj(T^□): rows δ (common, delta_only), columns ε (common, eps_only).
    let mut adj = vec![vec![TPoly::zero(); k + m]; k + m];
    for i in 0..k {
        adj[i][i] = det.clone();
    }
    for i in 0..m {
        for j in 0..k {
            let mut s = TPoly::zero();
            for l in 0..m {
                s += &adj32[i][l] * &t31[l][j];
            }
            adj[k + i][j] = -s;
        }
        for j in 0..m {
            adj[k + i][k + j] = adj32[i][j].clone();
        }
    }
    let t_cols = b.t_cols();
    let u_cols = b.u_cols();
    let mut numerators = BTreeMap::new();
    for (row, alpha) in b.rows().iter().enumerate() {
        if eps.contains(alpha) {
            continue;
        }
        for (j, xi) in u_cols.iter().enumerate() {
            let mut s = TPoly::zero();
            for l in 0..t_cols.len() {
                if !b.t[row][l].is_zero() {
                    s += &b.t[row][l] * &adj[l][j];
                }
            }
            numerators.insert(TVar::new(alpha.clone(), xi.clone()), s);
        }
    }
    Ok(Gluing {
        delta: delta.clone(),
        epsilon: eps.clone(),
        denominator: det,
        numerators,
    })
}

/// The Gröbner stratum of `δ` inside the `δ`-chart, together with the
/// intersection with the `ε`-chart and the same conditions rewritten in
/// `ε`-chart coordinates.
#[derive(Clone, Debug)]
pub struct StratumInChart {
    /// `T_{α,β}` for `α ∈ ℬ(δ)`, `β ∈ δ`, `α ≺ β`.
    pub triangular: Vec<TPoly>,
    /// `det(T₃₂)`, nonzero exactly on the intersection.
    pub det: TPoly,
    /// Numerators of the triangular conditions in `ε`-chart variables
    /// (written as `T`), valid where `eps_det` is nonzero.
    pub in_epsilon: Vec<TPoly>,
    pub eps_det: TPoly,
}

pub fn stratum_in_chart(
    delta: &StandardSet,
    eps: &StandardSet,
    order: &TermOrder,
) -> Result<StratumInChart, ChartError> {
    check(delta, eps)?;
    let killed: Vec<TVar> = delta
        .border()
        .iter()
        .flat_map(|a| {
            delta
                .elements()
                .iter()
                .filter(|b| order.lt(a, b))
                .map(move |b| TVar::new(a.clone(), b.clone()))
        })
        .collect();
    let back = gluing_map(eps, delta)?;
    let in_epsilon = killed
        .iter()
        .map(|v| {
            let u = TVar::new(v.row.clone(), v.col.clone());
            back.numerators[&u].clone()
        })
        .collect();
    Ok(StratumInChart {
        triangular: killed.into_iter().map(|v| TPoly::t(v.row, v.col)).collect(),
        det: intersection_det(delta, eps)?,
        in_epsilon,
        eps_det: back.denominator,
    })
}
