//! Arithmetic of relative ideals: translates, sums `E + F` and differences
//! `E - F = { a : a + F ⊆ E }`.

use crate::error::{Error, Result};
use crate::lattice::{Point, Window};
use crate::semigroup::GoodSemigroup;
use crate::set::TruncatedSet;
use crate::validate::{validate, ValidationFinding};

pub fn translate(e: &TruncatedSet, x: &Point) -> Result<TruncatedSet> {
    e.translate(x)
}

/// `E + F`.
///
/// The sum is truncation-stable at `C_E + C_F`: a coordinate of `a + b` at or
/// above that bound has `a_j >= C_E,j` or `b_j >= C_F,j` and can be moved
/// through that summand. Every member below the bound is a sum of members in
/// `[L_E, C - L_F]` and `[L_F, C - L_E]`.
pub fn sum(e: &TruncatedSet, f: &TruncatedSet) -> Result<TruncatedSet> {
    e.check_dim(f.dim())?;
    let top = e.conductor().checked_add(f.conductor())?;
    let lower = e.lower().checked_add(f.lower())?;
    let we = Window::new(e.lower().clone(), top.checked_sub(f.lower())?)?;
    let wf = Window::new(f.lower().clone(), top.checked_sub(e.lower())?)?;
    let target = Window::new(lower.clone(), top.clone())?;
    let ae = e.materialize(&we);
    let bf = f.materialize(&wf);

    let mut hit = vec![false; target.volume()];
    let mut buf = vec![0i64; e.dim()];
    let t = top.coords();
    for a in &ae {
        for b in &bf {
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = (a.coords()[k] + b.coords()[k]).min(t[k]);
            }
            hit[target.index_of(&buf)] = true;
        }
    }
    TruncatedSet::from_predicate(lower, top, |p| hit[target.index_of(p.coords())])
        .map(|s| s.normalize())
}

/// `E - F`.
///
/// Candidates range over `[L_E - m, C_E - m]` with `m` the least element of
/// `F`: everything above is a member, nothing below is. For a candidate `a`,
/// any `f ∈ F` may be replaced by `f ∧ (C_F ∨ (C_E - a))`, which stays in `F`
/// and leaves `a + f ∈ E` unchanged, so only members of `F` up to
/// `C_F ∨ (C_E - L_E + m)` need checking.
pub fn difference(e: &TruncatedSet, f: &TruncatedSet) -> Result<TruncatedSet> {
    e.check_dim(f.dim())?;
    let m = f.min_element();
    let lower = e.lower().checked_sub(&m)?;
    let top = e.conductor().checked_sub(&m)?;
    let reach = e.conductor().checked_sub(e.lower())?.checked_add(&m)?;
    let wf = Window::new(m.clone(), f.conductor().join(&reach))?;
    let fs: Vec<Point> = f.materialize(&wf);
    if fs.is_empty() {
        return Err(Error::EmptySet);
    }
    // overflow check once for the extreme sum
    top.checked_add(wf.hi())?;

    let mut buf = vec![0i64; e.dim()];
    TruncatedSet::from_predicate(lower, top, |a| {
        fs.iter().all(|x| {
            for (k, slot) in buf.iter_mut().enumerate() {
                *slot = a.coords()[k] + x.coords()[k];
            }
            e.contains_coords(&buf)
        })
    })
    .map(|s| s.normalize())
}

/// `M - e`, the maximal ideal translated by minus the multiplicity vector.
pub fn m_minus_e(s: &GoodSemigroup) -> Result<TruncatedSet> {
    let m = s.maximal_ideal()?;
    let e = s.multiplicity()?;
    m.translate(&e.checked_neg()?)
}

/// `M - M`.
pub fn m_minus_m(s: &GoodSemigroup) -> Result<TruncatedSet> {
    let m = s.maximal_ideal()?;
    difference(&m, &m)
}

/// `S - (S - E)`; always contains `E`.
pub fn bidual(s: &GoodSemigroup, e: &TruncatedSet) -> Result<TruncatedSet> {
    let dual = difference(s.set(), e)?;
    difference(s.set(), &dual)
}

/// A pair `(a, s)` with `a ∈ E`, `s ∈ S` and `a + s ∉ E`, if any.
///
/// `a` can be capped at `C_E`, and `s` at `C_S ∨ (C_E - L_E)` without changing
/// whether `a + s` lands in `E`.
pub fn relative_ideal_violation(
    s: &GoodSemigroup,
    e: &TruncatedSet,
) -> Result<Option<(Point, Point)>> {
    e.check_dim(s.dim())?;
    let reach = e.conductor().checked_sub(e.lower())?;
    let ws = Window::new(Point::zero(s.dim()), s.conductor().join(&reach))?;
    let ss = s.set().materialize(&ws);
    for a in e.small() {
        for x in &ss {
            if !e.contains(&a.checked_add(x)?) {
                return Ok(Some((a.clone(), x.clone())));
            }
        }
    }
    Ok(None)
}

pub fn is_relative_ideal(s: &GoodSemigroup, e: &TruncatedSet) -> Result<bool> {
    Ok(relative_ideal_violation(s, e)?.is_none())
}

/// Findings preventing `e` from being a good relative ideal of `s`.
pub fn good_ideal_findings(s: &GoodSemigroup, e: &TruncatedSet) -> Result<Vec<ValidationFinding>> {
    let mut findings = validate(e, false);
    if let Some((a, x)) = relative_ideal_violation(s, e)? {
        findings.push(ValidationFinding {
            axiom: crate::validate::Axiom::Closure,
            witness: vec![a.clone(), x.clone()],
            message: format!("{a} + {x} leaves the ideal"),
        });
    }
    Ok(findings)
}

pub fn is_good_ideal(s: &GoodSemigroup, e: &TruncatedSet) -> Result<bool> {
    Ok(good_ideal_findings(s, e)?.is_empty())
}

/// A relative ideal together with the semigroup acting on it.
#[derive(Clone, Debug)]
pub struct IdealPair {
    ambient: GoodSemigroup,
    ideal: TruncatedSet,
}

impl IdealPair {
    pub fn new(ambient: GoodSemigroup, ideal: TruncatedSet) -> Result<Self> {
        if let Some((a, x)) = relative_ideal_violation(&ambient, &ideal)? {
            return Err(Error::NotGood(format!(
                "not a relative ideal: {a} + {x} leaves the set"
            )));
        }
        Ok(IdealPair { ambient, ideal })
    }

    pub fn ambient(&self) -> &GoodSemigroup {
        &self.ambient
    }

    pub fn ideal(&self) -> &TruncatedSet {
        &self.ideal
    }
}
