use hilb_core::equations::{gen_border_scheme, gen_minimal, gen_stratum, StratumOptions};
use hilb_core::exp;
use hilb_core::export::{cas_name, to_cas, to_json};
use hilb_core::order::TermOrder;
use hilb_core::poly::TVar;
use hilb_core::staircase::StandardSet;

fn square() -> StandardSet {
    StandardSet::new(2, [exp![0, 0], exp![1, 0], exp![0, 1], exp![1, 1]]).unwrap()
}

#[test]
fn json_shape() {
    let d = square();
    let s = gen_border_scheme(&d, &d, true, true).unwrap();
    let j = to_json(&s, "fewer");
    assert_eq!(j["mode"], "fewer");
    assert_eq!(j["delta"], serde_json::json!([[0, 0], [0, 1], [1, 0], [1, 1]]));
    let gens = j["generators"].as_array().unwrap();
    assert_eq!(gens.iter().filter(|g| g["label"] == "I2").count(), 8);
    assert_eq!(gens.iter().filter(|g| g["label"] == "I3e").count(), 4);
    assert_eq!(j["variables"].as_array().unwrap().len(), 16);
    assert!(j["order"].is_null());
}

#[test]
fn deterministic() {
    let d = StandardSet::down_closure(2, &[exp![2, 1], exp![0, 3]]).unwrap();
    let lex = TermOrder::lex();
    let a = gen_stratum(&d, &d, &lex, StratumOptions::default()).unwrap();
    let b = gen_stratum(&d, &d, &lex, StratumOptions::default()).unwrap();
    assert_eq!(to_json(&a, "stratum").to_string(), to_json(&b, "stratum").to_string());
    assert_eq!(to_cas(&a, "stratum"), to_cas(&b, "stratum"));
}

#[test]
fn singular_script() {
    let d = square();
    let s = gen_border_scheme(&d, &d, true, true).unwrap();
    let cas = to_cas(&s, "fewer");
    assert!(cas.starts_with("// standard set: "));
    assert!(cas.contains("ring R = 0, (T_0_2__0_0,"));
    assert!(cas.trim_end().ends_with(';'));
    assert!(!cas.contains('['));
    assert_eq!(cas_name("U", &TVar::new(exp![1, 2], exp![0, 1])), "U_1_2__0_1");
    let axis = StandardSet::axis(2, 0, 3).unwrap();
    let m = gen_minimal(&axis, &TermOrder::lex_reversed(2)).unwrap();
    assert!(to_cas(&m, "minimal").contains("ideal I = 0;"));
}
