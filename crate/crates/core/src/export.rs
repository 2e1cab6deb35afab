//! Serialization of equation sets: JSON and a Singular script.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::{json, Value};

use crate::equations::EquationSet;
use crate::poly::{TVar, Var};

fn var_list(set: &EquationSet) -> Vec<TVar> {
    if set.ambient.is_empty() {
        set.variables().into_iter().collect()
    } else {
        set.ambient.clone()
    }
}

/// `{"delta", "order", "mode", "variables", "rewrites", "generators"}`.
pub fn to_json(set: &EquationSet, mode: &str) -> Value {
    let generators: Vec<Value> = set
        .generators
        .iter()
        .map(|g| {
            json!({
                "label": g.label,
                "provenance": g.provenance,
                "poly": g.poly.to_string(),
            })
        })
        .collect();
    let rewrites: serde_json::Map<String, Value> = set
        .rewrites
        .iter()
        .filter(|(v, _)| !set.delta.contains(&v.row))
        .map(|(v, p)| (format!("T[{}|{}]", v.row, v.col), Value::String(p.to_string())))
        .collect();
    json!({
        "delta": set.delta.elements(),
        "order": set.order.as_ref().map(|o| o.to_string()),
        "mode": mode,
        "variables": var_list(set).iter().map(|v| format!("T[{}|{}]", v.row, v.col)).collect::<Vec<_>>(),
        "rewrites": rewrites,
        "generators": generators,
    })
}

/// `T[(1,0)|(0,0)]` becomes `T_1_0__0_0`.
pub fn cas_name(prefix: &str, v: &TVar) -> String {
    let join = |e: &crate::exponent::Exponent| e.coords().iter().map(u32::to_string).collect::<Vec<_>>().join("_");
    format!("{prefix}_{}__{}", join(&v.row), join(&v.col))
}

/// Rewrites the bracketed variable names of the text grammar.
fn cas_poly(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(pos) = rest.find(['T', 'U']) {
        let (head, tail) = rest.split_at(pos);
        out.push_str(head);
        if !tail[1..].starts_with('[') {
            out.push_str(&tail[..1]);
            rest = &tail[1..];
            continue;
        }
        let end = tail.find(']').expect("closed bracket");
        let inner = &tail[2..end];
        let renamed: String = inner
            .chars()
            .filter_map(|c| match c {
                '(' | ')' => None,
                ',' => Some('_'),
                '|' => Some('#'),
                c => Some(c),
            })
            .collect();
        out.push_str(&tail[..1]);
        out.push('_');
        out.push_str(&renamed.replace('#', "__"));
        rest = &tail[end + 1..];
    }
    out.push_str(rest);
    out
}

/// A Singular script declaring the coordinate ring and the ideal `I`.
pub fn to_cas(set: &EquationSet, mode: &str) -> String {
    let mut names: Vec<String> = var_list(set).iter().map(|v| cas_name("T", v)).collect();
    let mut extra = BTreeSet::new();
    for g in &set.generators {
        for (e, c) in g.poly.terms() {
            for (i, &k) in e.coords().iter().enumerate() {
                if k > 0 {
                    extra.insert(format!("x{}", i + 1));
                }
            }
            for v in c.variables() {
                match v {
                    Var::T(tv) => extra.insert(cas_name("T", &tv)),
                    Var::U(tv) => extra.insert(cas_name("U", &tv)),
                    Var::Time => extra.insert("t".to_string()),
                };
            }
        }
    }
    for x in extra {
        if !names.contains(&x) {
            names.push(x);
        }
    }
    if names.is_empty() {
        names.push("z".to_string());
    }
    let mut s = String::new();
    let delta: Vec<String> = set.delta.elements().iter().map(|e| e.to_string()).collect();
    writeln!(s, "// standard set: {}", delta.join(" ")).unwrap();
    writeln!(s, "// mode: {mode}").unwrap();
    if let Some(o) = &set.order {
        writeln!(s, "// term order: {o}").unwrap();
    }
    writeln!(s, "ring R = 0, ({}), dp;", names.join(", ")).unwrap();
    if set.generators.is_empty() {
        writeln!(s, "ideal I = 0;").unwrap();
    } else {
        let polys: Vec<String> = set.generators.iter().map(|g| cas_poly(&g.poly.to_string())).collect();
        writeln!(s, "ideal I =\n  {};", polys.join(",\n  ")).unwrap();
    }
    s
}
