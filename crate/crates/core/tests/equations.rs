use std::collections::BTreeSet;

use hilb_core::equations::{
    gen_border_scheme, gen_homogeneous_restriction, gen_i1, gen_i2, gen_i3, gen_i3e, gen_minimal, gen_stratum,
    gen_universal, Label, Provenance, StratumOptions, UniversalMode,
};
use hilb_core::exp;
use hilb_core::exponent::Exponent;
use hilb_core::order::TermOrder;
use hilb_core::staircase::StandardSet;

fn square() -> StandardSet {
    StandardSet::new(2, [exp![0, 0], exp![1, 0], exp![0, 1], exp![1, 1]]).unwrap()
}

fn cross() -> StandardSet {
    StandardSet::down_closure(2, &[exp![4, 1], exp![1, 4]]).unwrap()
}

fn three_corner() -> StandardSet {
    StandardSet::down_closure(3, &[exp![1, 1, 0], exp![1, 0, 4], exp![0, 4, 1], exp![0, 0, 7]]).unwrap()
}

fn polys(s: &hilb_core::equations::EquationSet) -> BTreeSet<String> {
    s.tpolys().iter().map(|p| p.normalize_sign().to_string()).collect()
}

#[test]
fn square_counts() {
    let d = square();
    assert_eq!(gen_i1(&d, &d, false).unwrap().len(), 16);
    assert_eq!(gen_i2(&d, &d, true).unwrap().len(), 8);
    assert_eq!(gen_i3(&d, &d, true).unwrap().len(), 4);
    let fewer = gen_border_scheme(&d, &d, true, true).unwrap();
    assert_eq!(fewer.with_label(Label::I2).count(), 8);
    assert_eq!(fewer.with_label(Label::I3e).count(), 4);
    // The only edge point reproduces the only collision.
    assert_eq!(
        polys(&gen_i3e(&d, true).unwrap()),
        polys(&gen_i3(&d, &d, true).unwrap())
    );
}

#[test]
fn single_point_scheme() {
    let o = StandardSet::origin(1).unwrap();
    let i1 = gen_i1(&o, &o, false).unwrap();
    assert_eq!(i1.len(), 1);
    assert_eq!(i1.generators[0].poly.to_string(), "T[(0)|(0)] - 1");
    for r in 1..5 {
        let line = StandardSet::axis(1, 0, r).unwrap();
        assert!(gen_i3(&line, &line, true).unwrap().is_empty());
        assert!(gen_stratum(&line, &line, &TermOrder::lex(), StratumOptions::default())
            .unwrap()
            .with_label(Label::Stratum)
            .next()
            .is_none());
    }
}

#[test]
fn cross_classes() {
    let d = cross();
    let fewer = gen_border_scheme(&d, &d, true, true).unwrap();
    let shifts: BTreeSet<(Exponent, Exponent)> = fewer
        .classes(Label::I2)
        .into_iter()
        .map(|p| match p {
            Provenance::Shift { alpha, lambda, .. } => (alpha, lambda),
            other => panic!("unexpected {other:?}"),
        })
        .collect();
    assert_eq!(shifts.len(), 6);
    assert!(shifts.contains(&(exp![0, 5], exp![1, 0])));
    assert!(shifts.contains(&(exp![5, 0], exp![0, 1])));
    assert_eq!(fewer.classes(Label::I3e).len(), 2);
    // The full collision list also meets at (3,3).
    assert_eq!(gen_i3(&d, &d, true).unwrap().classes(Label::I3).len(), 3);
}

#[test]
fn three_corner_classes() {
    let d = three_corner();
    let fewer = gen_border_scheme(&d, &d, true, true).unwrap();
    assert_eq!(fewer.classes(Label::I2).len(), 30);
    // One class per edge point and plane under the inclusive reading.
    assert_eq!(fewer.classes(Label::I3e).len(), 6);
}

#[test]
fn stratum_and_minimal() {
    let d = square();
    let lex = TermOrder::lex();
    let s = gen_stratum(&d, &d, &lex, StratumOptions::default()).unwrap();
    let killed: Vec<String> = s.with_label(Label::Stratum).map(|g| g.poly.to_string()).collect();
    assert_eq!(killed, ["T[(0,2)|(1,0)]", "T[(0,2)|(1,1)]"]);
    assert_eq!(gen_minimal(&d, &lex).unwrap().ambient.len(), 6);
    for n in 1..=3 {
        for r in 1..=4 {
            let axis = StandardSet::axis(n, 0, r).unwrap();
            let order = TermOrder::lex_reversed(n);
            let m = gen_minimal(&axis, &order).unwrap();
            assert_eq!(m.ambient.len(), r as usize * n);
            assert!(m.is_empty());
            let s = gen_stratum(&axis, &axis, &order, StratumOptions::default()).unwrap();
            assert_eq!(s.with_label(Label::Stratum).count(), 0);
        }
    }
}

#[test]
fn universal_families() {
    let d = square();
    let border = gen_universal(&d, &d, UniversalMode::Border, None).unwrap();
    let rows: BTreeSet<Exponent> = border
        .generators
        .iter()
        .map(|g| match &g.provenance {
            Provenance::Row { alpha } => alpha.clone(),
            other => panic!("unexpected {other:?}"),
        })
        .collect();
    assert_eq!(rows, d.border().iter().cloned().collect());
    let g = gen_universal(&d, &d, UniversalMode::Groebner, Some(&TermOrder::lex())).unwrap();
    assert_eq!(g.len(), 2);
    let o = StandardSet::origin(1).unwrap();
    let u = gen_universal(&o, &o, UniversalMode::Border, None).unwrap();
    assert_eq!(u.generators[0].poly.to_string(), "x1 - T[(1)|(0)]");
}

#[test]
fn homogeneous_restriction() {
    let d = square();
    let h = gen_homogeneous_restriction(&d, &[1, 1]).unwrap();
    let killed: BTreeSet<String> = h.generators.iter().map(|g| g.poly.to_string()).collect();
    assert!(killed.contains("T[(2,0)|(0,0)]"));
    assert!(!killed.contains("T[(2,0)|(1,1)]"));
    assert!(gen_homogeneous_restriction(&d, &[0, 0]).unwrap().is_empty());
    // Weights separating ℬ(δ) from δ kill every variable.
    assert_eq!(gen_homogeneous_restriction(&d, &[1, 10]).unwrap().len(), 16);
    assert!(gen_homogeneous_restriction(&d, &[1]).is_err());
}

#[test]
fn generators_use_chart_variables() {
    let d = cross();
    let full = gen_border_scheme(&d, &d, true, false).unwrap();
    for v in full.variables() {
        assert!(d.border().contains(&v.row), "{v}");
        assert!(d.contains(&v.col), "{v}");
    }
    let again = gen_border_scheme(&d, &d, true, false).unwrap();
    assert_eq!(full.tpolys(), again.tpolys());
}
