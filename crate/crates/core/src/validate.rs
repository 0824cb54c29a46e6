//! Checking the good-semigroup axioms on a truncated representation.
//!
//! `(G1)` is decided on the small elements alone, because truncation commutes
//! with meets. `(G2)` is decided on the members of `[L, C + pad]`: any pair of
//! members sharing a coordinate can be moved into that window without changing
//! which coordinates agree or the value of their meet below the conductor, and
//! the `δ` it requires can be moved back. The default pad of one is exact; a
//! larger pad only repeats work and is offered for cross-checks.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::lattice::{Point, Window};
use crate::set::TruncatedSet;

/// Default widening of the `(G2)` window beyond the conductor.
pub const DEFAULT_WINDOW_PAD: i64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    G1,
    G2,
    G3,
    /// Closure under addition (semigroups only).
    Closure,
    Representation,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::G1 => "G1",
            Axiom::G2 => "G2",
            Axiom::G3 => "G3",
            Axiom::Closure => "closure",
            Axiom::Representation => "representation",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationFinding {
    pub axiom: Axiom,
    pub witness: Vec<Point>,
    pub message: String,
}

impl fmt::Display for ValidationFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.axiom, self.message)
    }
}

/// Checks `(G1)` and `(G2)`; with `as_semigroup` also that the set is a
/// submonoid of `N^h`. Returns one finding per violated axiom.
pub fn validate(t: &TruncatedSet, as_semigroup: bool) -> Vec<ValidationFinding> {
    validate_with_pad(t, as_semigroup, DEFAULT_WINDOW_PAD)
}

pub fn validate_with_pad(t: &TruncatedSet, as_semigroup: bool, pad: i64) -> Vec<ValidationFinding> {
    let mut findings = Vec::new();
    if as_semigroup {
        findings.extend(check_monoid(t));
    }
    findings.extend(check_meet_closed(t));
    findings.extend(check_exchange(t, pad.max(1)));
    findings
}

/// True iff `(G1)` and `(G2)` hold.
pub fn is_good(t: &TruncatedSet) -> bool {
    check_meet_closed(t).is_none() && check_exchange(t, DEFAULT_WINDOW_PAD).is_none()
}

fn check_monoid(t: &TruncatedSet) -> Option<ValidationFinding> {
    let zero = Point::zero(t.dim());
    if t.lower() != &zero {
        let message = if t.lower().ge(&zero) {
            "0 is not a member".to_string()
        } else {
            format!("members outside N^h: lower bound {}", t.lower())
        };
        return Some(ValidationFinding {
            axiom: Axiom::Representation,
            witness: vec![t.lower().clone()],
            message,
        });
    }
    if !t.contains(&zero) {
        return Some(ValidationFinding {
            axiom: Axiom::Representation,
            witness: vec![zero],
            message: "0 is not a member".into(),
        });
    }
    // Truncation at C commutes with addition of points of N^h, so closure of
    // the small elements is closure of the whole set.
    let small = t.small();
    for (k, a) in small.iter().enumerate() {
        for b in &small[k..] {
            let sum = match a.checked_add(b) {
                Ok(s) => s,
                Err(_) => {
                    return Some(ValidationFinding {
                        axiom: Axiom::Closure,
                        witness: vec![a.clone(), b.clone()],
                        message: format!("overflow adding {a} and {b}"),
                    })
                }
            };
            if !t.contains(&sum) {
                return Some(ValidationFinding {
                    axiom: Axiom::Closure,
                    witness: vec![a.clone(), b.clone()],
                    message: format!("{a} + {b} = {sum} is not a member"),
                });
            }
        }
    }
    None
}

fn check_meet_closed(t: &TruncatedSet) -> Option<ValidationFinding> {
    let small = t.small();
    for (k, a) in small.iter().enumerate() {
        for b in &small[k + 1..] {
            let m = a.meet_unchecked(b);
            if !t.contains(&m) {
                return Some(ValidationFinding {
                    axiom: Axiom::G1,
                    witness: vec![a.clone(), b.clone()],
                    message: format!("meet {m} of {a} and {b} is not a member"),
                });
            }
        }
    }
    None
}

fn check_exchange(t: &TruncatedSet, pad: i64) -> Option<ValidationFinding> {
    let failure = exchange_failure(t, pad)?;
    let (a, b) = (&failure.pair[0], &failure.pair[1]);
    Some(ValidationFinding {
        axiom: Axiom::G2,
        witness: failure.pair.to_vec(),
        message: format!(
            "no member δ with δ_{} > {} lifting {a} and {b}",
            failure.axis + 1,
            a.coords()[failure.axis]
        ),
    })
}

/// A pair of members sharing coordinate `axis` with no lifting `δ`.
pub(crate) struct ExchangeFailure {
    pub axis: usize,
    pub pair: [Point; 2],
    pub meet: Point,
}

pub(crate) fn exchange_failure(t: &TruncatedSet, pad: i64) -> Option<ExchangeFailure> {
    let h = t.dim();
    if h < 2 {
        return None;
    }
    let top = t.conductor().offset(pad).ok()?;
    let window = Window::new(t.lower().clone(), top).ok()?;
    let members = t.materialize(&window);
    let mut settled: HashSet<(usize, Point, u64)> = HashSet::new();
    for axis in 0..h {
        let mut groups: BTreeMap<i64, Vec<&Point>> = BTreeMap::new();
        for m in &members {
            groups.entry(m.coords()[axis]).or_default().push(m);
        }
        for group in groups.values() {
            for (k, a) in group.iter().enumerate() {
                for b in &group[k + 1..] {
                    let meet = a.meet_unchecked(b);
                    let differ = differing_mask(a, b);
                    let key = (axis, meet, differ);
                    if settled.contains(&key) {
                        continue;
                    }
                    if exchange_witness(t, &key.1, differ, axis).is_some() {
                        settled.insert(key);
                    } else {
                        return Some(ExchangeFailure {
                            axis,
                            pair: [(*a).clone(), (*b).clone()],
                            meet: key.1,
                        });
                    }
                }
            }
        }
    }
    None
}

fn differing_mask(a: &Point, b: &Point) -> u64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .fold(0u64, |m, (j, _)| m | (1 << j))
}

/// A member `δ` with `δ_axis > meet_axis`, `δ_j = meet_j` on the differing
/// coordinates and `δ_j >= meet_j` elsewhere.
///
/// Free coordinates above the conductor can be lowered back to it without
/// leaving the set, so the search box stays finite.
pub(crate) fn exchange_witness(
    t: &TruncatedSet,
    meet: &Point,
    differ: u64,
    axis: usize,
) -> Option<Point> {
    let c = t.conductor().coords();
    let m = meet.coords();
    let mut lo = Vec::with_capacity(m.len());
    let mut hi = Vec::with_capacity(m.len());
    for j in 0..m.len() {
        if j == axis {
            lo.push(m[j] + 1);
            hi.push((m[j] + 1).max(c[j]));
        } else if differ & (1 << j) != 0 {
            lo.push(m[j]);
            hi.push(m[j]);
        } else {
            lo.push(m[j]);
            hi.push(m[j].max(c[j]));
        }
    }
    first_in_box(&lo, &hi, |q| t.contains_coords(q)).map(Point::from)
}

/// Lexicographically first point of the box `[lo, hi]` accepted by `pred`.
pub(crate) fn first_in_box(
    lo: &[i64],
    hi: &[i64],
    mut pred: impl FnMut(&[i64]) -> bool,
) -> Option<Vec<i64>> {
    let mut cur = lo.to_vec();
    loop {
        if pred(&cur) {
            return Some(cur);
        }
        let mut k = cur.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = lo[k];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn p<const N: usize>(c: [i64; N]) -> Point {
        Point::from(c)
    }

    #[test]
    fn fixtures_are_good() {
        assert!(validate(fixtures::non_med_semigroup().set(), true).is_empty());
        assert!(validate(fixtures::med_semigroup().set(), true).is_empty());
    }

    #[test]
    fn meet_violation_has_witness_pair() {
        let t = TruncatedSet::new(
            p([0, 0]),
            p([4, 4]),
            [p([0, 0]), p([2, 3]), p([3, 2]), p([4, 4])],
        )
        .unwrap();
        let f = validate(&t, false);
        let g1 = f.iter().find(|x| x.axiom == Axiom::G1).expect("G1 finding");
        assert_eq!(g1.witness, vec![p([2, 3]), p([3, 2])]);
    }

    #[test]
    fn exchange_violation_detected() {
        let mut small = vec![p([0, 0]), p([1, 1]), p([4, 4])];
        for y in 2..=4 {
            small.push(p([1, y]));
            small.push(p([y, 1]));
        }
        small.retain(|q| q != &p([1, 4]));
        let broken = TruncatedSet::new(p([0, 0]), p([4, 4]), small).unwrap();
        let f = validate(&broken, false);
        assert!(f.iter().any(|x| x.axiom == Axiom::G2), "{f:?}");
    }

    #[test]
    fn monoid_checks() {
        let not_closed = TruncatedSet::new(p([0]), p([5]), [p([0]), p([2]), p([5])]).unwrap();
        let f = validate(&not_closed, true);
        assert_eq!(f[0].axiom, Axiom::Closure);
        let shifted = TruncatedSet::orthant(p([1, 1]));
        assert_eq!(validate(&shifted, true)[0].axiom, Axiom::Representation);
        assert!(validate(&shifted, false).is_empty());
    }

    #[test]
    fn box_search_is_lexicographic() {
        let hit = first_in_box(&[0, 0], &[2, 2], |q| q[0] + q[1] == 2);
        assert_eq!(hit, Some(vec![0, 2]));
        assert_eq!(first_in_box(&[0], &[3], |_| false), None);
    }
}
