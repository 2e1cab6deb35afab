//! Buchberger's algorithm over ℚ.
//!
//! Polynomials are held as term vectors sorted descending under the chosen
//! order. Pair selection is the normal strategy (smallest lcm first); pairs
//! are pruned with the coprime-leading-monomial criterion and the
//! Gebauer–Möller chain criterion.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use crate::exponent::Exponent;
use crate::order::TermOrder;
use crate::poly::{QPoly, TPoly, Var, Q};

type Mono = Vec<u32>;

#[derive(Clone, Debug)]
struct Poly {
    terms: Vec<(Mono, Q)>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn quotient(a: &[u32], b: &[u32]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

struct Engine<'a> {
    order: &'a TermOrder,
    deadline: Option<Instant>,
    expired: Cell<bool>,
}

impl<'a> Engine<'a> {
    fn new(order: &'a TermOrder, deadline: Option<Instant>) -> Self {
        Engine {
            order,
            deadline,
            expired: Cell::new(false),
        }
    }

    /// Latches once the deadline has passed; results computed afterwards
    /// are partial and must be discarded.
    fn expired(&self) -> bool {
        if !self.expired.get() && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.expired.set(true);
        }
        self.expired.get()
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.order.cmp_coords(a, b)
    }

    fn from_qpoly(&self, p: &QPoly) -> Poly {
        let mut terms: Vec<(Mono, Q)> = p.terms().map(|(e, c)| (e.coords().to_vec(), c.clone())).collect();
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        Poly { terms }
    }

    fn to_qpoly(&self, n: usize, p: &Poly) -> QPoly {
        QPoly::from_terms(n, p.terms.iter().map(|(m, c)| (Exponent::new(m.clone()), c.clone())))
    }

    fn make_monic(&self, p: &mut Poly) {
        if let Some((_, lc)) = p.terms.first() {
            if !lc.is_one() {
                let inv = Q::one() / lc;
                for (_, c) in &mut p.terms {
                    *c *= &inv;
                }
            }
        }
    }

    /// `a − c·x^shift·b`, both sorted descending.
    fn sub_mul(&self, a: &[(Mono, Q)], c: &Q, shift: &[u32], b: &[(Mono, Q)]) -> Vec<(Mono, Q)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut i = 0;
        let mut bi = b.iter().map(|(m, d)| {
            let m: Mono = m.iter().zip(shift).map(|(x, y)| x + y).collect();
            (m, d * c)
        });
        let mut next_b = bi.next();
        while i < a.len() || next_b.is_some() {
            match (a.get(i), &next_b) {
                (Some(ta), Some(tb)) => match self.cmp(&ta.0, &tb.0) {
                    Ordering::Greater => {
                        out.push(ta.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        let (m, d) = next_b.take().expect("present");
                        out.push((m, -d));
                        next_b = bi.next();
                    }
                    Ordering::Equal => {
                        let (m, d) = next_b.take().expect("present");
                        let v = &ta.1 - d;
                        if !v.is_zero() {
                            out.push((m, v));
                        }
                        i += 1;
                        next_b = bi.next();
                    }
                },
                (Some(ta), None) => {
                    out.push(ta.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    let (m, d) = next_b.take().expect("present");
                    out.push((m, -d));
                    next_b = bi.next();
                }
                (None, None) => break,
            }
        }
        out
    }

    /// Full normal form of `f` modulo monic `basis`.
    fn normal_form(&self, f: &Poly, basis: &[Poly]) -> Poly {
        let mut rest = f.terms.clone();
        let mut done: Vec<(Mono, Q)> = Vec::new();
        let mut pos = 0;
        let mut steps = 0u32;
        while pos < rest.len() {
            steps += 1;
            if steps % 64 == 0 && self.expired() {
                break;
            }
            let m = &rest[pos].0;
            match basis.iter().find(|g| divides(&g.terms[0].0, m)) {
                Some(g) => {
                    let shift = quotient(m, &g.terms[0].0);
                    let c = rest[pos].1.clone();
                    rest = self.sub_mul(&rest[pos..], &c, &shift, &g.terms);
                    pos = 0;
                }
                None => {
                    done.push(rest[pos].clone());
                    pos += 1;
                }
            }
        }
        Poly { terms: done }
    }

    fn spoly(&self, f: &Poly, g: &Poly) -> Poly {
        let l = lcm(&f.terms[0].0, &g.terms[0].0);
        let sf = quotient(&l, &f.terms[0].0);
        let sg = quotient(&l, &g.terms[0].0);
        let lf: Vec<(Mono, Q)> = f.terms[1..]
            .iter()
            .map(|(m, c)| (m.iter().zip(&sf).map(|(x, y)| x + y).collect(), c.clone()))
            .collect();
        Poly {
            terms: self.sub_mul(&lf, &Q::one(), &sg, &g.terms[1..]),
        }
    }
}

/// Pair bookkeeping for the Gebauer–Möller update.
struct Pairs {
    /// (lcm, i, j) with i < j.
    pending: Vec<(Mono, usize, usize)>,
}

fn update(basis: &[Poly], alive: &[bool], pairs: &mut Pairs, new: usize) {
    let h = &basis[new].terms[0].0;
    // Old pairs (i, j) are redundant when LM(h) divides their lcm strictly
    // through both new lcms.
    pairs.pending.retain(|(l, i, j)| {
        if !divides(h, l) {
            return true;
        }
        let li = lcm(&basis[*i].terms[0].0, h);
        let lj = lcm(&basis[*j].terms[0].0, h);
        li == *l || lj == *l
    });
    let cand: Vec<(Mono, usize, bool)> = (0..new)
        .filter(|&i| alive[i])
        .map(|i| {
            let g = &basis[i].terms[0].0;
            (lcm(g, h), i, coprime(g, h))
        })
        .collect();
    // Drop new pairs whose lcm is a proper multiple of another new lcm.
    let minimal: Vec<&(Mono, usize, bool)> = cand
        .iter()
        .filter(|c| !cand.iter().any(|d| d.0 != c.0 && divides(&d.0, &c.0)))
        .collect();
    // One pair per lcm class; a class containing a coprime pair is dropped.
    let mut classes: Vec<(Mono, usize, bool)> = Vec::new();
    for c in minimal {
        match classes.iter_mut().find(|k| k.0 == c.0) {
            Some(k) => k.2 |= c.2,
            None => classes.push(c.clone()),
        }
    }
    for (l, i, is_coprime) in classes {
        if !is_coprime {
            pairs.pending.push((l, i, new));
        }
    }
}

/// Outcome of a possibly early-stopped computation.
struct Run {
    basis: Vec<Poly>,
    alive: Vec<bool>,
}

fn buchberger(engine: &Engine, gens: Vec<Poly>, mut stop: impl FnMut(&[Poly], &[bool]) -> bool) -> (Run, bool) {
    let mut basis: Vec<Poly> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut pairs = Pairs { pending: Vec::new() };
    let mut queue: Vec<Poly> = gens;
    // Smallest leading monomial first keeps the initial basis small.
    queue.sort_by(|a, b| engine.cmp(&a.terms[0].0, &b.terms[0].0));
    let insert = |p: Poly, basis: &mut Vec<Poly>, alive: &mut Vec<bool>, pairs: &mut Pairs| {
        let h = p.terms[0].0.clone();
        basis.push(p);
        alive.push(true);
        let new = basis.len() - 1;
        update(basis, alive, pairs, new);
        for k in 0..new {
            if alive[k] && divides(&h, &basis[k].terms[0].0) {
                alive[k] = false;
            }
        }
    };
    for g in queue {
        let active: Vec<Poly> = basis
            .iter()
            .zip(&alive)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p.clone())
            .collect();
        let mut r = engine.normal_form(&g, &active);
        if r.terms.is_empty() {
            continue;
        }
        engine.make_monic(&mut r);
        insert(r, &mut basis, &mut alive, &mut pairs);
    }
    loop {
        if engine.expired() || stop(&basis, &alive) {
            return (Run { basis, alive }, true);
        }
        if pairs.pending.is_empty() {
            break;
        }
        // Normal strategy: smallest lcm.
        let k = (0..pairs.pending.len())
            .min_by(|&a, &b| engine.cmp(&pairs.pending[a].0, &pairs.pending[b].0))
            .expect("nonempty");
        let (_, i, j) = pairs.pending.swap_remove(k);
        let s = engine.spoly(&basis[i], &basis[j]);
        let active: Vec<Poly> = basis
            .iter()
            .zip(&alive)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p.clone())
            .collect();
        let mut r = engine.normal_form(&s, &active);
        if r.terms.is_empty() {
            continue;
        }
        engine.make_monic(&mut r);
        insert(r, &mut basis, &mut alive, &mut pairs);
    }
    (Run { basis, alive }, false)
}

fn interreduce(engine: &Engine, run: Run) -> Vec<Poly> {
    let mut lead: Vec<Poly> = run
        .basis
        .into_iter()
        .zip(run.alive)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    lead.sort_by(|a, b| engine.cmp(&a.terms[0].0, &b.terms[0].0));
    let mut out: Vec<Poly> = Vec::new();
    for k in 0..lead.len() {
        let others: Vec<Poly> = lead
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let head = Poly {
            terms: vec![lead[k].terms[0].clone()],
        };
        let tail = Poly {
            terms: lead[k].terms[1..].to_vec(),
        };
        let mut r = engine.normal_form(&tail, &others);
        r.terms.insert(0, head.terms[0].clone());
        out.push(r);
    }
    out
}

fn prepare(engine: &Engine, gens: &[QPoly]) -> Vec<Poly> {
    gens.iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut p = engine.from_qpoly(g);
            engine.make_monic(&mut p);
            p
        })
        .collect()
}

/// The reduced Gröbner basis of the ideal generated by `gens`, sorted by
/// ascending leading monomial. Every element is monic.
pub fn groebner_basis(gens: &[QPoly], order: &TermOrder) -> Vec<QPoly> {
    let Some(n) = gens.first().map(QPoly::dim) else {
        return Vec::new();
    };
    let engine = Engine::new(order, None);
    let (run, _) = buchberger(&engine, prepare(&engine, gens), |_, _| false);
    interreduce(&engine, run)
        .iter()
        .map(|p| engine.to_qpoly(n, p))
        .collect()
}

/// Normal form of `f` modulo a Gröbner basis.
pub fn normal_form(f: &QPoly, basis: &[QPoly], order: &TermOrder) -> QPoly {
    let engine = Engine::new(order, None);
    let b = prepare(&engine, basis);
    let r = engine.normal_form(&engine.from_qpoly(f), &b);
    engine.to_qpoly(f.dim(), &r)
}

/// Whether every target lies in the ideal of `gens`. Returns as soon as all
/// targets reduce to zero modulo the partial basis (reduction to zero modulo
/// any subset of the ideal certifies membership); otherwise completes the
/// basis and decides exactly.
pub fn ideal_contains(gens: &[QPoly], targets: &[QPoly], order: &TermOrder) -> bool {
    ideal_contains_until(gens, targets, order, None).expect("no deadline")
}

/// As [`ideal_contains`], giving up with `None` once `deadline` has passed.
pub fn ideal_contains_until(
    gens: &[QPoly],
    targets: &[QPoly],
    order: &TermOrder,
    deadline: Option<Instant>,
) -> Option<bool> {
    let targets: Vec<&QPoly> = targets.iter().filter(|t| !t.is_zero()).collect();
    if targets.is_empty() {
        return Some(true);
    }
    if gens.iter().all(QPoly::is_zero) {
        return Some(false);
    }
    let engine = Engine::new(order, deadline);
    let mut pending: Vec<Poly> = targets.iter().map(|t| engine.from_qpoly(t)).collect();
    let mut checked_size = usize::MAX;
    let (run, early) = buchberger(&engine, prepare(&engine, gens), |basis, alive| {
        if basis.len() == checked_size {
            return false;
        }
        checked_size = basis.len();
        let active: Vec<Poly> = basis
            .iter()
            .zip(alive)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p.clone())
            .collect();
        pending = pending
            .iter()
            .map(|t| engine.normal_form(t, &active))
            .filter(|r| !r.terms.is_empty())
            .collect();
        pending.is_empty()
    });
    if engine.expired() {
        return None;
    }
    if early {
        return Some(true);
    }
    let active: Vec<Poly> = run
        .basis
        .iter()
        .zip(&run.alive)
        .filter(|(_, a)| **a)
        .map(|(p, _)| p.clone())
        .collect();
    let contained = pending.iter().all(|t| engine.normal_form(t, &active).terms.is_empty());
    (!engine.expired()).then_some(contained)
}

/// Equality of the ideals generated by `a` and `b`.
pub fn ideal_equal(a: &[QPoly], b: &[QPoly], order: &TermOrder) -> bool {
    ideal_contains(b, a, order) && ideal_contains(a, b, order)
}

/// Interning of parameter-ring variables as polynomial-ring coordinates.
#[derive(Clone, Debug, Default)]
pub struct VarIndex {
    vars: Vec<Var>,
    index: HashMap<Var, usize>,
}

impl VarIndex {
    /// Indexes every variable of `polys` in ascending canonical order, so the
    /// largest variable gets the largest index.
    pub fn of(polys: &[&TPoly]) -> Self {
        let all: BTreeSet<Var> = polys.iter().flat_map(|p| p.variables()).collect();
        let vars: Vec<Var> = all.into_iter().collect();
        let index = vars.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        VarIndex { vars, index }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    /// Converts; panics on a variable that was not indexed.
    pub fn to_qpoly(&self, p: &TPoly) -> QPoly {
        let m = self.vars.len().max(1);
        QPoly::from_terms(
            m,
            p.terms().map(|(mono, c)| {
                let mut e = vec![0u32; m];
                for (v, k) in mono.factors() {
                    e[self.index[v]] += k;
                }
                (Exponent::new(e), c.clone())
            }),
        )
    }

    pub fn to_tpoly(&self, p: &QPoly) -> TPoly {
        TPoly::from_terms(p.terms().map(|(e, c)| {
            let factors = e
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(i, k)| (self.vars[i].clone(), *k));
            (crate::poly::TMono::from_factors(factors), c.clone())
        }))
    }
}

/// A variable `v` such that `g = c·v + h` with `v` absent from `h`.
fn solvable_variable(g: &TPoly) -> Option<(Var, Q)> {
    let candidates = g.terms().filter_map(|(m, c)| match m.factors() {
        [(v, 1)] => Some((v.clone(), c.clone())),
        _ => None,
    });
    let mut best: Option<(Var, Q)> = None;
    for (v, c) in candidates {
        let occurrences = g.terms().filter(|(m, _)| m.exponent_of(&v) > 0).count();
        // Prefer the largest such variable for reproducibility.
        if occurrences == 1 && best.as_ref().map_or(true, |(b, _)| v > *b) {
            best = Some((v, c));
        }
    }
    best
}

/// Eliminates variables through generators linear in them. Because
/// `ℚ[V]/(v − h) ≅ ℚ[V ∖ v]` whenever `v` does not occur in `h`, membership
/// of the substituted targets in the substituted ideal is equivalent to the
/// original question.
pub fn eliminate_linear(gens: Vec<TPoly>, targets: Vec<TPoly>) -> (Vec<TPoly>, Vec<TPoly>) {
    eliminate_linear_capped(gens, targets, u32::MAX)
}

/// [`eliminate_linear`], skipping any substitution that would push a
/// generator or target above total degree `cap`. Substituting long chains
/// of nonlinear values can blow a quadratic system up into one of degree
/// twenty, which is far harder for Buchberger than the original.
pub fn eliminate_linear_capped(gens: Vec<TPoly>, targets: Vec<TPoly>, cap: u32) -> (Vec<TPoly>, Vec<TPoly>) {
    eliminate_until(gens, targets, cap, None).expect("no deadline")
}

fn eliminate_until(
    mut gens: Vec<TPoly>,
    mut targets: Vec<TPoly>,
    cap: u32,
    deadline: Option<Instant>,
) -> Option<(Vec<TPoly>, Vec<TPoly>)> {
    let mut rejected: BTreeSet<Var> = BTreeSet::new();
    loop {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return None;
        }
        gens.retain(|g| !g.is_zero());
        let mut picks: Vec<(usize, usize, Var, Q)> = gens
            .iter()
            .enumerate()
            .filter_map(|(k, g)| solvable_variable(g).map(|(v, c)| (g.len(), k, v, c)))
            .filter(|(_, _, v, _)| !rejected.contains(v))
            .collect();
        picks.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.2.cmp(&a.2)));
        let mut applied = false;
        for (_, k, v, c) in picks {
            let value = &TPoly::var(v.clone()) - &gens[k].scale(&(Q::one() / &c));
            let map = HashMap::from([(v.clone(), value)]);
            let subst = |s: &[TPoly], skip: Option<usize>| -> Option<Vec<TPoly>> {
                let mut out = Vec::with_capacity(s.len());
                for (j, h) in s.iter().enumerate() {
                    if Some(j) == skip {
                        continue;
                    }
                    if deadline.is_some_and(|d| Instant::now() > d) {
                        return None;
                    }
                    let h = h.substitute(&map);
                    if h.total_degree() > cap {
                        return None;
                    }
                    out.push(h);
                }
                Some(out)
            };
            let substituted = (subst(&gens, Some(k)), subst(&targets, None));
            if deadline.is_some_and(|d| Instant::now() > d) {
                return None;
            }
            match substituted {
                (Some(g), Some(t)) => {
                    gens = g;
                    targets = t;
                    applied = true;
                    break;
                }
                _ => {
                    rejected.insert(v);
                }
            }
        }
        if !applied {
            return Some((gens, targets));
        }
    }
}

fn to_ring(gens: Vec<TPoly>, targets: Vec<TPoly>) -> (Vec<QPoly>, Vec<QPoly>) {
    let all: Vec<&TPoly> = gens.iter().chain(&targets).collect();
    let idx = VarIndex::of(&all);
    let conv = |s: &[TPoly]| s.iter().map(|p| idx.to_qpoly(p)).collect::<Vec<_>>();
    (conv(&gens), conv(&targets))
}

/// A rational point where every generator vanishes but some target does not,
/// among points with at most two nonzero coordinates taken from a small set
/// of values. Such a point proves non-membership.
pub fn sparse_witness(gens: &[TPoly], targets: &[TPoly]) -> Option<HashMap<Var, Q>> {
    let vars: Vec<Var> = gens
        .iter()
        .chain(targets)
        .flat_map(TPoly::variables)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let values: Vec<Q> = [1, -1, 2].into_iter().map(crate::poly::q).collect();
    let check = |point: &HashMap<Var, Q>| {
        let value = |v: &Var| Some(point.get(v).cloned().unwrap_or_else(Q::zero));
        let on_variety = gens.iter().all(|g| g.eval(&value).is_ok_and(|x| x.is_zero()));
        on_variety && targets.iter().any(|t| t.eval(&value).is_ok_and(|x| !x.is_zero()))
    };
    for i in 0..vars.len() {
        for a in &values {
            let point = HashMap::from([(vars[i].clone(), a.clone())]);
            if check(&point) {
                return Some(point);
            }
            for j in i + 1..vars.len() {
                for b in &values {
                    let point = HashMap::from([(vars[i].clone(), a.clone()), (vars[j].clone(), b.clone())]);
                    if check(&point) {
                        return Some(point);
                    }
                }
            }
        }
    }
    None
}

/// Whether every target lies in the ideal generated by `gens` in the
/// parameter ring. A sparse rational witness settles "no" cheaply;
/// otherwise variables solvable from a generator are eliminated and the
/// remaining question is decided by a Gröbner basis under grevlex.
///
/// Full elimination is tried first. When it leaves a system of high degree
/// that Buchberger cannot finish within a third of the time available (ten
/// seconds without a deadline), the question is retried with substitutions
/// capped at degree three.
pub fn ideal_contains_params(gens: &[TPoly], targets: &[TPoly]) -> bool {
    ideal_contains_params_until(gens, targets, None).expect("no deadline")
}

/// As [`ideal_contains_params`], giving up with `None` once `deadline` has
/// passed.
pub fn ideal_contains_params_until(gens: &[TPoly], targets: &[TPoly], deadline: Option<Instant>) -> Option<bool> {
    if sparse_witness(gens, targets).is_some() {
        return Some(false);
    }
    let now = Instant::now();
    let first = match deadline {
        Some(d) => now + d.saturating_duration_since(now) / 3,
        None => now + Duration::from_secs(10),
    };
    contains_after_elimination(gens, targets, u32::MAX, Some(first))
        .or_else(|| contains_after_elimination(gens, targets, 3, deadline))
}

fn contains_after_elimination(gens: &[TPoly], targets: &[TPoly], cap: u32, deadline: Option<Instant>) -> Option<bool> {
    let (g, t) = eliminate_until(gens.to_vec(), targets.to_vec(), cap, deadline)?;
    if t.iter().all(TPoly::is_zero) {
        return Some(true);
    }
    if g.is_empty() {
        return Some(false);
    }
    let (g, t) = to_ring(g, t);
    ideal_contains_until(&g, &t, &TermOrder::grevlex(), deadline)
}

/// Ideal equality in the parameter ring.
pub fn ideal_equal_params(a: &[TPoly], b: &[TPoly]) -> bool {
    ideal_contains_params(b, a) && ideal_contains_params(a, b)
}
