use std::sync::Arc;

use algvor::exactmath::{parse_polynomial, MonomialOrder, PolyRing, Polynomial, Rationals};
use algvor::sdp::{certified_supremum, level1_membership, leveld_membership, SdpStatus, DEFAULT_TOL};

fn polys(vars: &[&str], srcs: &[&str]) -> Vec<Polynomial<Rationals>> {
    let ring: Arc<PolyRing<Rationals>> = PolyRing::new(Rationals, vars, MonomialOrder::GrevLex).unwrap();
    srcs.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect()
}

fn twisted_cubic() -> Vec<Polynomial<Rationals>> {
    polys(&["x1", "x2", "x3"], &["x2 - x1^2", "x3 - x1*x2"])
}

fn cardioid() -> Vec<Polynomial<Rationals>> {
    polys(&["x1", "x2"], &["(x1^2 + x2^2 + x1)^2 - x1^2 - x2^2"])
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum()
}

/// Smallest squared distance from `u` to a dense sample of a parametrized curve.
fn sampled_distance(u: &[f64], curve: impl Fn(f64) -> Vec<f64>, lo: f64, hi: f64) -> f64 {
    let steps = 200_000;
    (0..=steps).map(|i| dist2(&curve(lo + (hi - lo) * i as f64 / steps as f64), u)).fold(f64::INFINITY, f64::min)
}

fn cubic_point(t: f64) -> Vec<f64> {
    vec![t, t * t, t * t * t]
}

fn cardioid_point(theta: f64) -> Vec<f64> {
    let r = 1.0 - theta.cos();
    vec![r * theta.cos(), r * theta.sin()]
}

#[test]
fn twisted_cubic_levels_are_nested_and_sound() {
    let f = twisted_cubic();
    let y = [0.0; 3];
    let mut members = 0;
    for i in 0..6 {
        for j in 0..6 {
            let u = [0.0, -2.0 + 0.5 * f64::from(i), -1.5 + 0.6 * f64::from(j)];
            let l1 = level1_membership(&f, &y, &u, DEFAULT_TOL).unwrap().status;
            let l2 = leveld_membership(&f, &y, &u, 2, DEFAULT_TOL).unwrap().status;
            assert!(!(l1 == SdpStatus::Member && l2 == SdpStatus::NonMember), "u = {u:?}");
            if l1 == SdpStatus::Member || l2 == SdpStatus::Member {
                members += 1;
                let d = sampled_distance(&u, cubic_point, -4.0, 4.0);
                assert!(d >= dist2(&u, &y) - 1e-6, "u = {u:?} certified but a closer point exists");
            }
        }
    }
    assert!((6..36).contains(&members), "{members} members");
}

#[test]
fn cardioid_levels_are_nested_and_sound() {
    let f = cardioid();
    let y = [0.0, 1.0];
    let mut members = 0;
    for k in 0..12 {
        let t = -0.6 + 0.25 * f64::from(k);
        let u = [t, 1.0 + t];
        let l2 = leveld_membership(&f, &y, &u, 2, DEFAULT_TOL).unwrap().status;
        let l3 = leveld_membership(&f, &y, &u, 3, DEFAULT_TOL).unwrap().status;
        assert!(!(l2 == SdpStatus::Member && l3 == SdpStatus::NonMember), "t = {t}");
        if l2 == SdpStatus::Member || l3 == SdpStatus::Member {
            members += 1;
            let d = sampled_distance(&u, cardioid_point, -std::f64::consts::PI, std::f64::consts::PI);
            assert!(d >= dist2(&u, &y) - 1e-6, "t = {t} certified but a closer point exists");
        }
    }
    assert!((4..12).contains(&members), "{members} members");
}

#[test]
fn level_one_on_the_parabola_direction() {
    // along u2 the cell of the twisted cubic at the origin ends at 1/2
    let f = twisted_cubic();
    let sup = certified_supremum(0.0, 2.0, 1e-6, |t| {
        Ok(level1_membership(&f, &[0.0; 3], &[0.0, t, 0.0], DEFAULT_TOL)?.status == SdpStatus::Member)
    })
    .unwrap()
    .unwrap();
    assert!((sup - 0.5).abs() < 1e-3, "supremum {sup}");
    // the true cell boundary: beyond 1/2 the curve comes closer
    let d = sampled_distance(&[0.0, 0.55, 0.0], cubic_point, -2.0, 2.0);
    assert!(d < 0.55 * 0.55);
}
