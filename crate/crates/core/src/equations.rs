//! Defining equations of the border-basis scheme, its Gröbner stratum, the
//! minimal embedding of the stratum, the universal families and the
//! homogeneous restriction.
//!
//! Coordinates are `T[(α)|(β)]` with `α` a row in `N ∪ N⁽¹⁾` and `β ∈ δ`;
//! the matrix `T` is that of multiplication, `x^α ≡ Σ_β T_{α,β} x^β`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::Exponent;
use crate::order::TermOrder;
use crate::poly::{ParamPolynomial, TPoly, TVar, Var};
use crate::staircase::StandardSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquationError {
    #[error("the standard set is not contained in the row set")]
    NotSubset,
    #[error("row set has dimension {0}, standard set has dimension {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} generation needs a term order")]
    OrderRequired(&'static str),
    #[error("weight vector has length {0}, expected {1}")]
    WeightLength(usize, usize),
    #[error("term order: {0}")]
    Order(#[from] crate::order::OrderError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    I1,
    I2,
    I3,
    I3e,
    #[serde(rename = "STRATUM")]
    Stratum,
    #[serde(rename = "MINIMAL")]
    Minimal,
    #[serde(rename = "UNIVERSAL")]
    Universal,
    #[serde(rename = "HOMOG")]
    Homog,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::I1 => "I1",
            Label::I2 => "I2",
            Label::I3 => "I3",
            Label::I3e => "I3e",
            Label::Stratum => "STRATUM",
            Label::Minimal => "MINIMAL",
            Label::Universal => "UNIVERSAL",
            Label::Homog => "HOMOG",
        };
        f.write_str(s)
    }
}

/// The indices a generator was built from. Unit vectors `λ` are stored as
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Entry {
        alpha: Exponent,
        beta: Exponent,
    },
    Shift {
        alpha: Exponent,
        lambda: Exponent,
        beta: Exponent,
    },
    Collision {
        alpha: Exponent,
        lambda: Exponent,
        alpha2: Exponent,
        lambda2: Exponent,
        beta: Exponent,
    },
    Edge {
        point: Exponent,
        lambda: Exponent,
        lambda2: Exponent,
        beta: Exponent,
    },
    Row {
        alpha: Exponent,
    },
}

impl Provenance {
    /// The provenance with `β` dropped: one class per `(α, λ)`, collision
    /// or edge plane.
    pub fn class(&self) -> Provenance {
        let z = |e: &Exponent| Exponent::zero(e.dim());
        match self {
            Provenance::Entry { alpha, beta } => Provenance::Entry {
                alpha: alpha.clone(),
                beta: z(beta),
            },
            Provenance::Shift { alpha, lambda, beta } => Provenance::Shift {
                alpha: alpha.clone(),
                lambda: lambda.clone(),
                beta: z(beta),
            },
            Provenance::Collision {
                alpha,
                lambda,
                alpha2,
                lambda2,
                beta,
            } => Provenance::Collision {
                alpha: alpha.clone(),
                lambda: lambda.clone(),
                alpha2: alpha2.clone(),
                lambda2: lambda2.clone(),
                beta: z(beta),
            },
            Provenance::Edge {
                point,
                lambda,
                lambda2,
                beta,
            } => Provenance::Edge {
                point: point.clone(),
                lambda: lambda.clone(),
                lambda2: lambda2.clone(),
                beta: z(beta),
            },
            Provenance::Row { alpha } => Provenance::Row { alpha: alpha.clone() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: Label,
    pub provenance: Provenance,
    pub poly: ParamPolynomial,
}

impl Generator {
    fn new(label: Label, provenance: Provenance, n: usize, poly: TPoly) -> Self {
        Generator {
            label,
            provenance,
            poly: ParamPolynomial::constant(n, poly),
        }
    }

    /// The generator as an element of the parameter ring. Panics for
    /// universal-family members, which depend on x.
    pub fn tpoly(&self) -> TPoly {
        let n = self.poly.dim();
        assert!(self.poly.support().all(|e| e.is_zero()), "generator depends on x");
        self.poly.coefficient(&Exponent::zero(n))
    }
}

/// A labeled, canonically ordered list of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSet {
    pub delta: StandardSet,
    pub row_set: StandardSet,
    pub order: Option<TermOrder>,
    /// Whether `T_{α,β}` with `α ∈ δ` were replaced by Kronecker deltas.
    pub substitution: bool,
    /// Coordinates of the ambient affine space.
    pub ambient: Vec<TVar>,
    /// Variables eliminated by rewriting, with their values.
    pub rewrites: BTreeMap<TVar, TPoly>,
    pub generators: Vec<Generator>,
}

impl EquationSet {
    fn new(delta: &StandardSet, row_set: &StandardSet, substitution: bool) -> Self {
        EquationSet {
            delta: delta.clone(),
            row_set: row_set.clone(),
            order: None,
            substitution,
            ambient: Vec::new(),
            rewrites: BTreeMap::new(),
            generators: Vec::new(),
        }
    }

    /// Sorts by label and provenance and drops zero and duplicate generators.
    fn canonicalize(&mut self) {
        self.generators.retain(|g| !g.poly.is_zero());
        self.generators
            .sort_by(|a, b| (a.label, &a.provenance).cmp(&(b.label, &b.provenance)));
        self.generators
            .dedup_by(|a, b| a.label == b.label && a.provenance == b.provenance);
    }

    fn extend(&mut self, other: EquationSet) {
        self.generators.extend(other.generators);
        self.rewrites.extend(other.rewrites);
        self.canonicalize();
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn with_label(&self, label: Label) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(move |g| g.label == label)
    }

    /// Distinct provenance classes (β dropped) for `label`.
    pub fn classes(&self, label: Label) -> BTreeSet<Provenance> {
        self.with_label(label).map(|g| g.provenance.class()).collect()
    }

    pub fn tpolys(&self) -> Vec<TPoly> {
        self.generators.iter().map(Generator::tpoly).collect()
    }

    /// T-variables occurring in the generators.
    pub fn variables(&self) -> BTreeSet<TVar> {
        let mut out = BTreeSet::new();
        for g in &self.generators {
            for (_, c) in g.poly.terms() {
                for v in c.variables() {
                    if let Var::T(tv) = v {
                        out.insert(tv);
                    }
                }
            }
        }
        out
    }

    /// Substitutes zero for every variable that is itself a generator
    /// (vanishing conditions) and drops those generators.
    pub fn eliminate_vanishing(&self) -> EquationSet {
        let killed: HashMap<Var, TPoly> = self
            .generators
            .iter()
            .filter_map(|g| {
                let p = g.tpoly();
                let (m, c) = p.terms().next()?;
                (p.len() == 1 && m.degree() == 1 && m.factors()[0].1 == 1 && *c == crate::poly::q(1))
                    .then(|| (m.factors()[0].0.clone(), TPoly::zero()))
            })
            .collect();
        let mut out = self.clone();
        out.generators = self
            .generators
            .iter()
            .filter_map(|g| {
                let p = g.poly.substitute(&killed);
                (!p.is_zero()).then(|| Generator { poly: p, ..g.clone() })
            })
            .collect();
        for v in killed.keys() {
            if let Var::T(tv) = v {
                out.rewrites.insert(tv.clone(), TPoly::zero());
            }
        }
        out.ambient.retain(|tv| !killed.contains_key(&Var::T(tv.clone())));
        out.canonicalize();
        out
    }
}

/// Shared machinery: row sets and the matrix entries with the Kronecker
/// convention applied.
struct Ctx<'a> {
    delta: &'a StandardSet,
    rows: HashSet<Exponent>,
    substitution: bool,
}

impl<'a> Ctx<'a> {
    fn new(delta: &'a StandardSet, row_set: &StandardSet, substitution: bool) -> Result<Self, EquationError> {
        check_rows(delta, row_set)?;
        let rows = row_set.elements().iter().chain(row_set.border()).cloned().collect();
        Ok(Ctx {
            delta,
            rows,
            substitution,
        })
    }

    fn n(&self) -> usize {
        self.delta.dim()
    }

    fn entry(&self, alpha: &Exponent, beta: &Exponent) -> TPoly {
        if self.substitution && self.delta.contains(alpha) {
            if alpha == beta {
                TPoly::one()
            } else {
                TPoly::zero()
            }
        } else {
            TPoly::t(alpha.clone(), beta.clone())
        }
    }

    /// `Σ_γ T_{α,γ} T_{γ+λ,β}`: the β-coefficient of `x^λ · x^α`.
    fn shifted(&self, alpha: &Exponent, lambda: usize, beta: &Exponent) -> TPoly {
        let mut acc = TPoly::zero();
        for gamma in self.delta.elements() {
            let a = self.entry(alpha, gamma);
            if a.is_zero() {
                continue;
            }
            let b = self.entry(&gamma.plus_unit(lambda), beta);
            acc.add_scaled(&a, &b);
        }
        acc
    }
}

fn check_rows(delta: &StandardSet, row_set: &StandardSet) -> Result<(), EquationError> {
    if delta.dim() != row_set.dim() {
        return Err(EquationError::DimensionMismatch(row_set.dim(), delta.dim()));
    }
    if !delta.is_subset_of(row_set) {
        return Err(EquationError::NotSubset);
    }
    Ok(())
}

fn unit(n: usize, i: usize) -> Exponent {
    Exponent::unit(n, i)
}

fn ambient_vars(delta: &StandardSet, row_set: &StandardSet, substitution: bool) -> Vec<TVar> {
    let rows: BTreeSet<Exponent> = row_set
        .elements()
        .iter()
        .chain(row_set.border())
        .filter(|a| !(substitution && delta.contains(a)))
        .cloned()
        .collect();
    rows.iter()
        .flat_map(|a| delta.elements().iter().map(|b| TVar::new(a.clone(), b.clone())))
        .collect()
}

/// `T_{α,β} − δ_{α,β}` for `α ∈ δ`, `β ∈ δ`. With substitution on, nothing is
/// emitted and the Kronecker values are returned as rewrites.
pub fn gen_i1(delta: &StandardSet, row_set: &StandardSet, substitution: bool) -> Result<EquationSet, EquationError> {
    check_rows(delta, row_set)?;
    let n = delta.dim();
    let mut out = EquationSet::new(delta, row_set, substitution);
    out.ambient = ambient_vars(delta, row_set, substitution);
    for a in delta.elements() {
        for b in delta.elements() {
            let kron = if a == b { TPoly::one() } else { TPoly::zero() };
            if substitution {
                out.rewrites.insert(TVar::new(a.clone(), b.clone()), kron);
            } else {
                let p = &TPoly::t(a.clone(), b.clone()) - &kron;
                out.generators.push(Generator::new(
                    Label::I1,
                    Provenance::Entry {
                        alpha: a.clone(),
                        beta: b.clone(),
                    },
                    n,
                    p,
                ));
            }
        }
    }
    out.canonicalize();
    Ok(out)
}

/// `T_{α+λ,β} − Σ_γ T_{α,γ} T_{γ+λ,β}` for `α, α+λ ∈ N ∪ N⁽¹⁾`.
pub fn gen_i2(delta: &StandardSet, row_set: &StandardSet, substitution: bool) -> Result<EquationSet, EquationError> {
    let ctx = Ctx::new(delta, row_set, substitution)?;
    let n = ctx.n();
    let mut out = EquationSet::new(delta, row_set, substitution);
    out.ambient = ambient_vars(delta, row_set, substitution);
    let mut rows: Vec<&Exponent> = ctx.rows.iter().collect();
    rows.sort();
    for alpha in rows {
        if substitution && delta.contains(alpha) {
            continue;
        }
        for l in 0..n {
            let target = alpha.plus_unit(l);
            if !ctx.rows.contains(&target) {
                continue;
            }
            for beta in delta.elements() {
                let p = &ctx.entry(&target, beta) - &ctx.shifted(alpha, l, beta);
                out.generators.push(Generator::new(
                    Label::I2,
                    Provenance::Shift {
                        alpha: alpha.clone(),
                        lambda: unit(n, l),
                        beta: beta.clone(),
                    },
                    n,
                    p,
                ));
            }
        }
    }
    out.canonicalize();
    Ok(out)
}

/// `Σ_γ T_{α,γ} T_{γ+λ,β} − Σ_γ T_{α′,γ} T_{γ+λ′,β}` for `α, α′ ∈ N⁽¹⁾` with
/// `α+λ = α′+λ′ ∈ N⁽²⁾`; the pair with the smaller `α` comes first.
pub fn gen_i3(delta: &StandardSet, row_set: &StandardSet, substitution: bool) -> Result<EquationSet, EquationError> {
    let ctx = Ctx::new(delta, row_set, substitution)?;
    let n = ctx.n();
    let mut out = EquationSet::new(delta, row_set, substitution);
    out.ambient = ambient_vars(delta, row_set, substitution);
    let first: HashSet<Exponent> = row_set.border().iter().cloned().collect();
    for point in row_set.iterated_border(2) {
        let mut arrivals: Vec<(Exponent, usize)> = (0..n)
            .filter_map(|l| point.minus_unit(l).filter(|a| first.contains(a)).map(|a| (a, l)))
            .collect();
        arrivals.sort();
        for (k, (a, l)) in arrivals.iter().enumerate() {
            for (a2, l2) in &arrivals[k + 1..] {
                for beta in delta.elements() {
                    let p = &ctx.shifted(a, *l, beta) - &ctx.shifted(a2, *l2, beta);
                    out.generators.push(Generator::new(
                        Label::I3,
                        Provenance::Collision {
                            alpha: a.clone(),
                            lambda: unit(n, *l),
                            alpha2: a2.clone(),
                            lambda2: unit(n, *l2),
                            beta: beta.clone(),
                        },
                        n,
                        p,
                    ));
                }
            }
        }
    }
    out.canonicalize();
    Ok(out)
}

/// `Σ_γ T_{ε+λ′,γ} T_{γ+λ,β} − Σ_γ T_{ε+λ,γ} T_{γ+λ′,β}` for every edge point
/// `ε` in the plane of `λ = e_i`, `λ′ = e_j` (`i < j`). Row set is δ.
pub fn gen_i3e(delta: &StandardSet, substitution: bool) -> Result<EquationSet, EquationError> {
    let ctx = Ctx::new(delta, delta, substitution)?;
    let n = ctx.n();
    let mut out = EquationSet::new(delta, delta, substitution);
    out.ambient = ambient_vars(delta, delta, substitution);
    for plane in delta.edge_planes() {
        let (i, j) = (plane.i, plane.j);
        let via_j = plane.point.plus_unit(j);
        let via_i = plane.point.plus_unit(i);
        for beta in delta.elements() {
            let p = &ctx.shifted(&via_j, i, beta) - &ctx.shifted(&via_i, j, beta);
            out.generators.push(Generator::new(
                Label::I3e,
                Provenance::Edge {
                    point: plane.point.clone(),
                    lambda: unit(n, i),
                    lambda2: unit(n, j),
                    beta: beta.clone(),
                },
                n,
                p,
            ));
        }
    }
    out.canonicalize();
    Ok(out)
}

/// `I1 + I2 + I3` (or `I3e` in place of `I3` when `fewer`, which forces the
/// row set to δ).
pub fn gen_border_scheme(
    delta: &StandardSet,
    row_set: &StandardSet,
    substitution: bool,
    fewer: bool,
) -> Result<EquationSet, EquationError> {
    let row_set = if fewer { delta } else { row_set };
    let mut out = gen_i1(delta, row_set, substitution)?;
    out.extend(gen_i2(delta, row_set, substitution)?);
    if fewer {
        out.extend(gen_i3e(delta, substitution)?);
    } else {
        out.extend(gen_i3(delta, row_set, substitution)?);
    }
    Ok(out)
}

/// Options for [`gen_stratum`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StratumOptions {
    /// Vanishing conditions only for corner rows.
    pub corners_only: bool,
    /// Use `I3e` in place of `I3`.
    pub fewer: bool,
}

/// The Gröbner stratum: the border-scheme ideal plus `T_{α,β}` for `α ≺ β`.
/// Substitution mode is always on.
pub fn gen_stratum(
    delta: &StandardSet,
    row_set: &StandardSet,
    order: &TermOrder,
    opts: StratumOptions,
) -> Result<EquationSet, EquationError> {
    order.validate(delta.dim())?;
    let mut out = gen_border_scheme(delta, row_set, true, opts.fewer)?;
    let n = delta.dim();
    let rows: BTreeSet<Exponent> = if opts.corners_only {
        delta.corners().iter().cloned().collect()
    } else {
        out.row_set
            .elements()
            .iter()
            .chain(out.row_set.border())
            .filter(|a| !delta.contains(a))
            .cloned()
            .collect()
    };
    for alpha in &rows {
        for beta in delta.elements() {
            if order.lt(alpha, beta) {
                out.generators.push(Generator::new(
                    Label::Stratum,
                    Provenance::Entry {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    },
                    n,
                    TPoly::t(alpha.clone(), beta.clone()),
                ));
            }
        }
    }
    out.order = Some(order.clone());
    out.canonicalize();
    Ok(out)
}

/// Which coordinate a derived row is split along in the minimal recursion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NuChoice {
    /// Smallest `i` with `α − e_i` outside δ.
    #[default]
    Smallest,
    /// Largest such `i`.
    Largest,
}

/// Values of `T_{α,β}` for every border row `α` on the stratum, in terms of
/// the corner coordinates with `α ≻ β`: corner entries with `α ≺ β` vanish,
/// non-corner rows follow the recursion
/// `T_{α,β} = Σ_{γ ∈ δ, α ≻ γ+ν ⪰ β} T_{α−ν,γ} T_{γ+ν,β}`.
pub fn minimal_rewrites(delta: &StandardSet, order: &TermOrder, nu: NuChoice) -> BTreeMap<TVar, TPoly> {
    let mut rows: Vec<Exponent> = delta.border().to_vec();
    order.sort(&mut rows);
    let mut table: BTreeMap<TVar, TPoly> = BTreeMap::new();
    let lookup = |table: &BTreeMap<TVar, TPoly>, a: &Exponent, b: &Exponent| -> TPoly {
        if delta.contains(a) {
            if a == b {
                TPoly::one()
            } else {
                TPoly::zero()
            }
        } else {
            table[&TVar::new(a.clone(), b.clone())].clone()
        }
    };
    let corners: HashSet<&Exponent> = delta.corners().iter().collect();
    for alpha in &rows {
        if corners.contains(alpha) {
            for beta in delta.elements() {
                let v = if order.gt(alpha, beta) {
                    TPoly::t(alpha.clone(), beta.clone())
                } else {
                    TPoly::zero()
                };
                table.insert(TVar::new(alpha.clone(), beta.clone()), v);
            }
            continue;
        }
        let candidates = (0..delta.dim()).filter(|&i| alpha.minus_unit(i).is_some_and(|b| !delta.contains(&b)));
        let nu_i = match nu {
            NuChoice::Smallest => candidates.min(),
            NuChoice::Largest => candidates.max(),
        }
        .expect("non-corner border element has a border predecessor");
        let below = alpha.minus_unit(nu_i).expect("positive coordinate");
        for beta in delta.elements() {
            let mut acc = TPoly::zero();
            for gamma in delta.elements() {
                let up = gamma.plus_unit(nu_i);
                if !order.gt(alpha, &up) || order.lt(&up, beta) {
                    continue;
                }
                let a = lookup(&table, &below, gamma);
                if a.is_zero() {
                    continue;
                }
                acc.add_scaled(&a, &lookup(&table, &up, beta));
            }
            table.insert(TVar::new(alpha.clone(), beta.clone()), acc);
        }
    }
    table
}

/// The minimal embedding of the stratum: coordinates `T_{α,β}` with
/// `α ∈ 𝒞(δ)`, `α ≻ β`; relations are the `I2` and `I3e` generators after
/// rewriting all other entries.
pub fn gen_minimal(delta: &StandardSet, order: &TermOrder) -> Result<EquationSet, EquationError> {
    gen_minimal_with(delta, order, NuChoice::Smallest)
}

pub fn gen_minimal_with(delta: &StandardSet, order: &TermOrder, nu: NuChoice) -> Result<EquationSet, EquationError> {
    order.validate(delta.dim())?;
    let n = delta.dim();
    let table = minimal_rewrites(delta, order, nu);
    let subst: HashMap<Var, TPoly> = table.iter().map(|(k, v)| (Var::T(k.clone()), v.clone())).collect();
    let mut base = gen_i2(delta, delta, true)?;
    base.extend(gen_i3e(delta, true)?);
    let mut out = EquationSet::new(delta, delta, true);
    out.order = Some(order.clone());
    for g in base.generators {
        let p = g.tpoly().substitute(&subst);
        out.generators
            .push(Generator::new(Label::Minimal, g.provenance.clone(), n, p));
    }
    out.ambient = delta
        .corners()
        .iter()
        .flat_map(|a| {
            delta
                .elements()
                .iter()
                .filter(move |b| order.gt(a, b))
                .map(move |b| TVar::new(a.clone(), b.clone()))
        })
        .collect();
    out.ambient.sort();
    let ambient: HashSet<&TVar> = out.ambient.iter().collect();
    out.rewrites = table
        .iter()
        .filter(|(k, _)| !ambient.contains(k))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    out.canonicalize();
    Ok(out)
}

/// Shape of the universal family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UniversalMode {
    /// `x^α − Σ_{β∈δ} T_{α,β} x^β` for `α ∈ (N ∪ N⁽¹⁾) − δ`.
    Border,
    /// `x^α − Σ_{β∈δ, β≺α} T_{α,β} x^β` for `α ∈ 𝒞(δ)`.
    Groebner,
}

pub fn gen_universal(
    delta: &StandardSet,
    row_set: &StandardSet,
    mode: UniversalMode,
    order: Option<&TermOrder>,
) -> Result<EquationSet, EquationError> {
    check_rows(delta, row_set)?;
    let mut out = EquationSet::new(delta, row_set, true);
    let rows: Vec<Exponent> = match mode {
        UniversalMode::Border => row_set
            .elements()
            .iter()
            .chain(row_set.border())
            .filter(|a| !delta.contains(a))
            .cloned()
            .collect(),
        UniversalMode::Groebner => delta.corners().to_vec(),
    };
    let order = match (mode, order) {
        (UniversalMode::Groebner, None) => return Err(EquationError::OrderRequired("groebner-mode universal family")),
        (_, o) => o,
    };
    if let Some(o) = order {
        o.validate(delta.dim())?;
    }
    for alpha in rows {
        let tail: Vec<Exponent> = delta
            .elements()
            .iter()
            .filter(|b| mode == UniversalMode::Border || order.is_some_and(|o| o.lt(b, &alpha)))
            .cloned()
            .collect();
        for b in &tail {
            out.ambient.push(TVar::new(alpha.clone(), b.clone()));
        }
        out.generators.push(Generator {
            label: Label::Universal,
            provenance: Provenance::Row { alpha: alpha.clone() },
            poly: crate::poly::symbolic_marked(&alpha, tail),
        });
    }
    out.ambient.sort();
    out.order = order.cloned();
    out.canonicalize();
    Ok(out)
}

/// `T_{α,β}` for `α ∈ δ⁽¹⁾`, `β ∈ δ` with `ℓ(α) ≠ ℓ(β)`.
pub fn gen_homogeneous_restriction(delta: &StandardSet, weights: &[i64]) -> Result<EquationSet, EquationError> {
    let n = delta.dim();
    if weights.len() != n {
        return Err(EquationError::WeightLength(weights.len(), n));
    }
    let mut out = EquationSet::new(delta, delta, true);
    out.ambient = ambient_vars(delta, delta, true);
    for alpha in delta.border() {
        for beta in delta.elements() {
            if alpha.weight(weights) != beta.weight(weights) {
                out.generators.push(Generator::new(
                    Label::Homog,
                    Provenance::Entry {
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    },
                    n,
                    TPoly::t(alpha.clone(), beta.clone()),
                ));
            }
        }
    }
    out.canonicalize();
    Ok(out)
}
