use std::collections::BTreeSet;

use hilb_core::exp;
use hilb_core::exponent::Exponent;
use hilb_core::staircase::{enumerate_standard_sets, is_standard_set, StaircaseError, StandardSet};

fn set(items: impl IntoIterator<Item = Exponent>) -> BTreeSet<Exponent> {
    items.into_iter().collect()
}

fn square() -> StandardSet {
    StandardSet::new(2, [exp![0, 0], exp![1, 0], exp![0, 1], exp![1, 1]]).unwrap()
}

/// Corners by scanning the box one step beyond the set.
fn corners_by_scan(d: &StandardSet) -> Vec<Exponent> {
    let bound: Vec<u32> = (0..d.dim())
        .map(|i| d.elements().iter().map(|e| e.coords()[i]).max().unwrap() + 2)
        .collect();
    let mut out = Vec::new();
    let total: u32 = bound.iter().product();
    for mut k in 0..total {
        let coords: Vec<u32> = bound
            .iter()
            .map(|b| {
                let c = k % b;
                k /= b;
                c
            })
            .collect();
        let e = Exponent::new(coords);
        let outside = !d.contains(&e);
        let minimal = (0..d.dim()).all(|i| e.minus_unit(i).map_or(true, |b| d.contains(&b)));
        if outside && minimal {
            out.push(e);
        }
    }
    out.sort();
    out
}

#[test]
fn membership() {
    assert!(is_standard_set(&[exp![0, 0]], 2).unwrap());
    assert!(!is_standard_set(&[exp![1, 0]], 2).unwrap());
    assert!(is_standard_set(square().elements(), 2).unwrap());
    assert!(is_standard_set(&[exp![0, 0]], 3).is_err());
    assert!(matches!(
        StandardSet::new(2, [exp![1, 0]]),
        Err(StaircaseError::NotDownwardClosed { .. })
    ));
}

#[test]
fn corners_match_scan() {
    let origin = StandardSet::origin(2).unwrap();
    assert_eq!(origin.corners(), [exp![0, 1], exp![1, 0]]);
    assert_eq!(square().corners(), [exp![0, 2], exp![2, 0]]);
    let axis = StandardSet::axis(2, 0, 3).unwrap();
    assert_eq!(axis.corners(), [exp![0, 1], exp![3, 0]]);
    for n in 1..=3 {
        for r in 1..=5 {
            for d in enumerate_standard_sets(n, r, 10_000).unwrap() {
                let mut got = d.corners().to_vec();
                got.sort();
                assert_eq!(got, corners_by_scan(&d), "{:?}", d.elements());
                assert!(got.iter().all(|c| d.border().contains(c)));
            }
        }
    }
}

#[test]
fn iterated_borders() {
    let d = square();
    assert_eq!(
        set(d.iterated_border(1)),
        set([exp![0, 2], exp![1, 2], exp![2, 0], exp![2, 1]])
    );
    // The second border contains (0,3); (0,4) is two steps away from δ ∪ δ⁽¹⁾.
    assert_eq!(
        set(d.iterated_border(2)),
        set([exp![0, 3], exp![1, 3], exp![2, 2], exp![3, 0], exp![3, 1]])
    );
    assert_eq!(StandardSet::origin(1).unwrap().iterated_border(1), [exp![1]]);
    assert_eq!(d.with_border().len(), 8);
}

#[test]
fn edge_points() {
    assert_eq!(square().edge_points(), [exp![1, 1]]);
    for r in 1..=5 {
        assert_eq!(StandardSet::axis(2, 0, r).unwrap().edge_points(), [exp![r - 1, 0]]);
    }
    // Axis in ℕ³: the tip in the planes through e1, and the origin in the
    // plane (e2, e3), where both unit steps leave δ too.
    let axis = StandardSet::axis(3, 0, 3).unwrap();
    let planes: BTreeSet<(Exponent, usize, usize)> =
        axis.edge_planes().iter().map(|p| (p.point.clone(), p.i, p.j)).collect();
    let want = [(exp![2, 0, 0], 0, 1), (exp![2, 0, 0], 0, 2), (exp![0, 0, 0], 1, 2)];
    assert_eq!(planes, want.into_iter().collect());
}

#[test]
fn three_corner_set_edges() {
    let d = StandardSet::down_closure(3, &[exp![1, 1, 0], exp![1, 0, 4], exp![0, 4, 1], exp![0, 0, 7]]).unwrap();
    assert_eq!(d.len(), 22);
    let strict: Vec<Exponent> = d.edge_points().into_iter().filter(|e| e.support_size() == 2).collect();
    assert_eq!(set(strict), set([exp![0, 4, 1], exp![1, 0, 4], exp![1, 1, 0]]));
    assert_eq!(d.edge_planes().len(), 6);
}

#[test]
fn enumeration() {
    assert_eq!(
        enumerate_standard_sets(1, 5, 10).unwrap(),
        [StandardSet::axis(1, 0, 5).unwrap()]
    );
    assert_eq!(enumerate_standard_sets(2, 4, 100).unwrap().len(), 5);
    assert_eq!(enumerate_standard_sets(3, 3, 100).unwrap().len(), 6);
    assert_eq!(enumerate_standard_sets(3, 4, 100).unwrap().len(), 13);
    let sets = enumerate_standard_sets(2, 7, 100).unwrap();
    let mut unique = sets.clone();
    unique.dedup();
    assert_eq!(unique.len(), sets.len());
    assert!(enumerate_standard_sets(0, 3, 10).is_err());
}

#[test]
fn down_closure() {
    let cross = StandardSet::down_closure(2, &[exp![4, 1], exp![1, 4]]).unwrap();
    assert_eq!(cross.len(), 16);
    assert_eq!(set(cross.edge_points()), set([exp![1, 4], exp![4, 1]]));
    assert_eq!(StandardSet::down_closure(2, &[exp![1, 1]]).unwrap(), square());
}

#[test]
fn json() {
    let d = square();
    let s = serde_json::to_string(&d).unwrap();
    assert_eq!(s, r#"{"n":2,"elements":[[0,0],[0,1],[1,0],[1,1]]}"#);
    assert_eq!(serde_json::from_str::<StandardSet>(&s).unwrap(), d);
    assert!(serde_json::from_str::<StandardSet>(r#"{"n":2,"elements":[[0,1]]}"#).is_err());
}
