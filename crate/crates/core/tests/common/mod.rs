//! Brute-force oracles shared by the integration tests. Nothing here reuses
//! the library's windowing arguments: sets are materialized on generously
//! widened boxes and the axioms are checked pair by pair.
#![allow(dead_code)]

use std::collections::HashSet;

use good_semigroups::generator::{random_good, GenConfig};
use good_semigroups::{GoodSemigroup, Point, TruncatedSet, Window};

pub fn p<const N: usize>(c: [i64; N]) -> Point {
    Point::from(c)
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

pub fn boxed(lo: &Point, hi: &Point) -> Vec<Point> {
    Window::new(lo.clone(), hi.clone())
        .unwrap()
        .points()
        .collect()
}

pub fn add(a: &Point, b: &Point) -> Point {
    Point::new(a.coords().iter().zip(b.coords()).map(|(x, y)| x + y))
}

pub fn sub(a: &Point, b: &Point) -> Point {
    Point::new(a.coords().iter().zip(b.coords()).map(|(x, y)| x - y))
}

pub fn shift(a: &Point, k: i64) -> Point {
    Point::new(a.coords().iter().map(|x| x + k))
}

pub fn meet(a: &Point, b: &Point) -> Point {
    Point::new(a.coords().iter().zip(b.coords()).map(|(x, y)| *x.min(y)))
}

/// Members of `t` in `[L, C + widen]`.
pub fn members(t: &TruncatedSet, widen: i64) -> Vec<Point> {
    boxed(t.lower(), &shift(t.conductor(), widen))
        .into_iter()
        .filter(|q| t.contains(q))
        .collect()
}

/// `(G1)` and `(G2)` checked on all member pairs of `[L, C + 2]`, with the
/// lifting element searched in `[L, C + 3]`.
pub fn brute_good(t: &TruncatedSet) -> bool {
    let ms = members(t, 2);
    let big: HashSet<Point> = members(t, 3).into_iter().collect();
    let h = t.dim();
    for (k, a) in ms.iter().enumerate() {
        for b in &ms[k + 1..] {
            let m = meet(a, b);
            if !t.contains(&m) {
                return false;
            }
            for i in 0..h {
                if a.coords()[i] != b.coords()[i] || a == b {
                    continue;
                }
                let ok = big.iter().any(|d| {
                    (0..h).all(|j| {
                        let (dj, mj) = (d.coords()[j], m.coords()[j]);
                        if j == i {
                            dj > a.coords()[i]
                        } else if a.coords()[j] != b.coords()[j] {
                            dj == mj
                        } else {
                            dj >= mj
                        }
                    })
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Closure under addition on `[0, C + 2]`, with `0` a member.
pub fn brute_monoid(t: &TruncatedSet) -> bool {
    if !t.contains(&Point::zero(t.dim())) || t.lower() != &Point::zero(t.dim()) {
        return false;
    }
    let ms = members(t, 2);
    ms.iter().all(|a| ms.iter().all(|b| t.contains(&add(a, b))))
}

/// `E + F` on `window`, by listing every decomposition `e + f`.
pub fn naive_sum_contains(e: &TruncatedSet, f: &TruncatedSet, q: &Point) -> bool {
    let top = sub(q, f.lower());
    if !e.lower().le(&top) {
        return false;
    }
    boxed(e.lower(), &top)
        .into_iter()
        .any(|a| e.contains(&a) && f.contains(&sub(q, &a)))
}

/// `a ∈ E - F`, testing every member of `F` in a box well past both
/// conductors.
pub fn naive_difference_contains(e: &TruncatedSet, f: &TruncatedSet, a: &Point) -> bool {
    let reach = Point::new(
        f.conductor()
            .coords()
            .iter()
            .zip(e.conductor().coords())
            .zip(a.coords())
            .map(|((cf, ce), x)| (*cf).max(ce - x) + 4),
    );
    let lo = f.lower();
    let hi = Point::new(
        lo.coords()
            .iter()
            .zip(reach.coords())
            .map(|(l, r)| (*l).max(*r)),
    );
    boxed(lo, &hi)
        .into_iter()
        .filter(|x| f.contains(x))
        .all(|x| e.contains(&add(a, &x)))
}

/// `K(S)` straight from the definition, scanning members of `S` in a wide
/// box for each candidate.
pub fn naive_canonical_contains(s: &GoodSemigroup, a: &Point) -> bool {
    let gamma = shift(s.conductor(), -1);
    let b = sub(&gamma, a);
    let hi = Point::new(
        b.coords()
            .iter()
            .zip(s.conductor().coords())
            .map(|(x, c)| (*x).max(*c) + 2),
    );
    let h = s.dim();
    !boxed(&Point::zero(h), &hi).into_iter().any(|q| {
        s.contains(&q)
            && (0..h).any(|i| {
                q.coords()[i] == b.coords()[i]
                    && (0..h).all(|j| j == i || q.coords()[j] > b.coords()[j])
            })
    })
}

/// All subsets of the box `[0, cap]` containing `0` and `cap`, closed under
/// capped sums and good by [`brute_good`], as sorted member lists.
pub fn power_set_enumeration(cap: &Point) -> Vec<Vec<Point>> {
    let pts = boxed(&Point::zero(cap.dim()), cap);
    let n = pts.len();
    assert!(n <= 20, "power set too large");
    let mut out = Vec::new();
    for bits in 0u32..(1 << n) {
        if bits & 1 == 0 || bits & (1 << (n - 1)) == 0 {
            continue;
        }
        let small: Vec<Point> = (0..n)
            .filter(|k| bits & (1 << k) != 0)
            .map(|k| pts[k].clone())
            .collect();
        let t = TruncatedSet::new(Point::zero(cap.dim()), cap.clone(), small.clone()).unwrap();
        if brute_monoid(&t) && brute_good(&t) {
            out.push(small);
        }
    }
    out.sort();
    out
}

/// A local random good semigroup, searching seeds from `seed` on.
pub fn local_semigroup(cap: &Point, seed: u64) -> GoodSemigroup {
    (seed..seed + 1000)
        .map(|s| random_good(&GenConfig::new(cap.clone(), s)).unwrap())
        .find(GoodSemigroup::is_local)
        .expect("some seed gives a local semigroup")
}
