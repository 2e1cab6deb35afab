use hilb_core::equations::gen_border_scheme;
use hilb_core::exp;
use hilb_core::exponent::Exponent;
use hilb_core::oracle::groebner::{eliminate_linear, eliminate_linear_capped, sparse_witness};
use hilb_core::oracle::{
    classify_stratum, groebner_basis, ideal_contains, ideal_contains_params, ideal_contains_until, ideal_equal,
    ideal_equal_params, normal_form, point_ideal, satisfies_stratum, PointConfiguration,
};
use hilb_core::order::TermOrder;
use hilb_core::poly::text::parse_param;
use hilb_core::poly::{q, QPoly, TPoly, Var};
use hilb_core::staircase::{enumerate_standard_sets, StandardSet};

fn p(s: &str, n: usize) -> QPoly {
    parse_param(s, n).unwrap().to_qpoly().unwrap()
}

fn points(json: &str) -> PointConfiguration {
    PointConfiguration::from_json(json).unwrap()
}

#[test]
fn small_bases() {
    let lex = TermOrder::lex();
    assert_eq!(
        groebner_basis(&[p("x1^2 - 1", 1), p("x1^3 - x1", 1)], &lex),
        [p("x1^2 - 1", 1)]
    );
    let linear = [p("x2 - 3", 2), p("x1 - 2", 2)];
    for o in [TermOrder::lex(), TermOrder::grlex(), TermOrder::grevlex()] {
        assert_eq!(groebner_basis(&linear, &o), linear);
    }
    assert!(ideal_equal(&[p("x1^2 - 1", 1)], &[p("x1^2 - 1", 1)], &lex));
    assert!(!ideal_equal(&[p("x1^2 - 1", 1)], &[p("x1 - 1", 1)], &lex));
    assert_eq!(
        normal_form(&p("x1^3", 1), &[p("x1^2 - x1 - 1", 1)], &lex),
        p("2*x1 + 1", 1)
    );
}

#[test]
fn deadline_gives_up() {
    let gens = [p("x1^2 - x2", 2), p("x2^2 - x1", 2)];
    let target = [p("x1^4 - x1", 2)];
    let order = TermOrder::grevlex();
    assert!(ideal_contains(&gens, &target, &order));
    let past = std::time::Instant::now() - std::time::Duration::from_secs(1);
    // A deadline only interrupts the completion loop; trivially decided
    // questions still return.
    let answer = ideal_contains_until(&gens, &target, &order, Some(past));
    assert!(answer.is_none() || answer == Some(true));
}

#[test]
fn universal_family_at_a_stratum_point() {
    // Four points in general position in the plane; the corner members of
    // the vanishing ideal form its reduced Gröbner basis.
    let pts = points("[[0,0],[1,2],[3,1],[2,5]]");
    for o in [TermOrder::lex(), TermOrder::grlex(), TermOrder::grevlex()] {
        let ideal = point_ideal(&pts, &o);
        let mut corners = ideal.corner_polynomials();
        let mut gb = groebner_basis(&ideal.polynomials(), &o);
        corners.sort_by(|a, b| a.to_string().cmp(&b.to_string()));
        gb.sort_by(|a, b| a.to_string().cmp(&b.to_string()));
        assert_eq!(corners, gb, "{o}");
    }
}

#[test]
fn point_ideals() {
    let single = point_ideal(&points("[[3,\"1/2\"]]"), &TermOrder::lex());
    assert_eq!(single.delta, StandardSet::origin(2).unwrap());
    let mut f: Vec<String> = single.polynomials().iter().map(|f| f.to_string()).collect();
    f.sort();
    assert_eq!(f, ["x1 - 3", "x2 - 1/2"]);
    let line = point_ideal(&points("[[0],[1]]"), &TermOrder::lex());
    assert_eq!(line.delta, StandardSet::axis(1, 0, 2).unwrap());
    assert_eq!(line.polynomials(), [p("x1^2 - x1", 1)]);
}

#[test]
fn classification() {
    let collinear = points("[[0,0],[1,0],[2,0],[5,0]]");
    let lex = TermOrder::lex();
    assert_eq!(
        classify_stratum(&collinear, &lex).unwrap(),
        StandardSet::axis(2, 0, 4).unwrap()
    );
    // Four generic points under grevlex: 1, y, x and then y², the smallest
    // monomial of degree two.
    let generic = points("[[0,0],[1,2],[3,1],[2,5]]");
    let g = classify_stratum(&generic, &TermOrder::grevlex()).unwrap();
    assert_eq!(
        g,
        StandardSet::new(2, [exp![0, 0], exp![1, 0], exp![0, 1], exp![0, 2]]).unwrap()
    );
    let hits: Vec<StandardSet> = enumerate_standard_sets(2, 4, 100)
        .unwrap()
        .into_iter()
        .filter(|d| satisfies_stratum(&generic, d, &TermOrder::grevlex()))
        .collect();
    assert_eq!(hits, [g]);
}

#[test]
fn configuration_parsing() {
    let c = points(r#"[[[1,2],"0.25"],["-3/4",7]]"#);
    assert_eq!(c.len(), 2);
    assert_eq!(c.points()[0], [hilb_core::poly::qf(1, 2), hilb_core::poly::qf(1, 4)]);
    assert!(PointConfiguration::from_json("[[1,2],[1,2]]").is_err());
    assert!(PointConfiguration::from_json("[[1,2],[1]]").is_err());
    assert!(PointConfiguration::from_json("[]").is_err());
    let back = PointConfiguration::from_json(&c.to_json()).unwrap();
    assert_eq!(back.points(), c.points());
}

#[test]
fn reduced_relations_in_the_plane() {
    let d = StandardSet::new(2, [exp![0, 0], exp![1, 0], exp![0, 1], exp![1, 1]]).unwrap();
    let full = gen_border_scheme(&d, &d, true, false).unwrap().tpolys();
    let fewer = gen_border_scheme(&d, &d, true, true).unwrap().tpolys();
    assert!(ideal_equal_params(&full, &fewer));
    for r in 1..=4 {
        for d in enumerate_standard_sets(2, r, 100).unwrap() {
            let full = gen_border_scheme(&d, &d, true, false).unwrap().tpolys();
            let fewer = gen_border_scheme(&d, &d, true, true).unwrap().tpolys();
            assert!(ideal_equal_params(&full, &fewer), "{:?}", d.elements());
        }
    }
}

#[test]
fn reduced_relations_fail_in_space() {
    let d = StandardSet::new(3, [exp![0, 0, 0], exp![1, 0, 0], exp![0, 1, 0], exp![0, 0, 1]]).unwrap();
    let full = gen_border_scheme(&d, &d, true, false).unwrap().tpolys();
    let fewer = gen_border_scheme(&d, &d, true, true).unwrap().tpolys();
    assert!(ideal_contains_params(&full, &fewer));
    assert!(!ideal_contains_params(&fewer, &full));
    let witness = sparse_witness(&fewer, &full).unwrap();
    let value = |v: &Var| Some(witness.get(v).cloned().unwrap_or_else(|| q(0)));
    assert!(fewer.iter().all(|g| g.eval(&value).unwrap() == q(0)));
    assert!(full.iter().any(|g| g.eval(&value).unwrap() != q(0)));
}

#[test]
fn parameter_membership() {
    let a = TPoly::t(Exponent::new(vec![1]), Exponent::new(vec![0]));
    let b = TPoly::t(Exponent::new(vec![2]), Exponent::new(vec![0]));
    let gens = [&a * &a - b.clone()];
    assert!(ideal_contains_params(&gens, &[&(&a * &a) * &a - &a * &b]));
    assert!(!ideal_contains_params(&gens, &[a.clone()]));
    assert!(sparse_witness(&gens, &[a.clone()]).is_some());
    assert!(sparse_witness(&gens, &[&(&a * &a) * &a - &a * &b]).is_none());
}

#[test]
fn capped_elimination_keeps_degrees_low() {
    let d = StandardSet::down_closure(2, &[exp![2, 0], exp![0, 3]]).unwrap();
    let full = gen_border_scheme(&d, &d, true, false).unwrap().tpolys();
    let fewer = gen_border_scheme(&d, &d, true, true).unwrap().tpolys();
    let max_degree = |s: &[TPoly]| s.iter().map(TPoly::total_degree).max().unwrap_or(0);
    let (g, t) = eliminate_linear_capped(fewer.clone(), full.clone(), 3);
    assert!(max_degree(&g) <= 3 && max_degree(&t) <= 3);
    let (g, _) = eliminate_linear(fewer.clone(), full.clone());
    assert!(max_degree(&g) > 3);
    // Full elimination stalls here; the capped retry decides it.
    assert!(ideal_contains_params(&fewer, &full));
    assert!(ideal_contains_params(&full, &fewer));
}
