//! The standard canonical ideal and the symmetry classification.

use serde::Serialize;

use crate::algebra::{difference, m_minus_e, m_minus_m, sum};
use crate::error::{Error, Result};
use crate::lattice::{in_delta, Point, Window};
use crate::report::{Check, Report};
use crate::semigroup::GoodSemigroup;
use crate::set::TruncatedSet;
use crate::structure::decompose;
use crate::validate::validate;

/// A member of `Δ^S(b)`, if any.
pub fn delta_witness(s: &GoodSemigroup, b: &Point) -> Result<Option<Point>> {
    s.set().delta_witness(b)
}

/// True iff `Δ^S(b)` is empty.
pub fn delta_empty(s: &GoodSemigroup, b: &Point) -> Result<bool> {
    Ok(delta_witness(s, b)?.is_none())
}

/// `K(S) = { α : Δ^S(γ - α) = ∅ }`.
///
/// `K(S)` lies in `N^h` and contains `c + N^h`, and the Δ-test is stable when
/// coordinates of `α` at or above `c` grow, so the window `[0, c]` is exact.
pub fn std_canonical(s: &GoodSemigroup) -> Result<TruncatedSet> {
    let c = s.conductor().clone();
    let gamma = s.frobenius()?;
    let zero = Point::zero(s.dim());
    let mut b = gamma.clone();
    TruncatedSet::from_predicate(zero, c, |a| {
        for (k, slot) in b.coords_mut().iter_mut().enumerate() {
            *slot = gamma.coords()[k] - a.coords()[k];
        }
        s.set()
            .delta_witness(&b)
            .expect("dimensions agree")
            .is_none()
    })
    .map(|k| k.normalize())
}

/// `S = K(S)`. For non-local `S` the verdict is cross-checked against its
/// components.
pub fn is_symmetric(s: &GoodSemigroup) -> Result<bool> {
    let k = std_canonical(s)?;
    let verdict = s.set().equals(&k)?;
    if !s.is_local() {
        let d = decompose(s)?;
        let mut parts = true;
        for c in &d.components {
            parts &= c.set().equals(&std_canonical(c)?)?;
        }
        if parts != verdict {
            return Err(Error::InternalDefect(format!(
                "symmetry of S ({verdict}) disagrees with its components ({parts})"
            )));
        }
    }
    Ok(verdict)
}

/// `K ∪ Δ(γ)` for a local semigroup other than `N`.
pub fn canonical_union_delta(s: &GoodSemigroup) -> Result<TruncatedSet> {
    let k = std_canonical(s)?;
    let gamma = s.frobenius()?;
    let zero = Point::zero(s.dim());
    // members of Δ(γ) have every coordinate but one at least c
    let w = Window::new(zero.meet_unchecked(&gamma), s.conductor().clone())?;
    TruncatedSet::from_predicate(w.lo().clone(), w.hi().clone(), |p| {
        k.contains(p) || in_delta(p, &gamma).expect("dimensions agree")
    })
    .map(|u| u.normalize())
}

/// Both almost-symmetry criteria of a local semigroup: `K + M = M`, and
/// `K ∪ Δ(γ) = M - M`.
///
/// The second characterization fails for `S = N`, so that case is refused.
pub fn almost_symmetry_criteria(s: &GoodSemigroup) -> Result<(bool, bool)> {
    if !s.is_local() {
        return Err(Error::NotLocal);
    }
    if s.is_full() {
        return Err(Error::NotGood("S equals ambient N^h".into()));
    }
    let k = std_canonical(s)?;
    let m = s.maximal_ideal()?;
    let by_definition = sum(&k, &m)?.equals(&m)?;
    let by_union = canonical_union_delta(s)?.equals(&difference(&m, &m)?)?;
    Ok((by_definition, by_union))
}

/// `K + M = M` for local `S`; every component almost symmetric otherwise.
///
/// In the local case both characterizations are computed and must agree.
pub fn is_almost_symmetric(s: &GoodSemigroup) -> Result<bool> {
    if !s.is_local() {
        let d = decompose(s)?;
        for c in &d.components {
            if !is_almost_symmetric(c)? {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    if s.is_full() {
        let m = s.maximal_ideal()?;
        return sum(&std_canonical(s)?, &m)?.equals(&m);
    }
    let (a, b) = almost_symmetry_criteria(s)?;
    if a != b {
        return Err(Error::InternalDefect(format!(
            "K + M = M is {a} but K ∪ Δ(γ) = M - M is {b} for {s}"
        )));
    }
    Ok(a)
}

/// `M - M = M - e`.
pub fn is_med(s: &GoodSemigroup) -> Result<bool> {
    m_minus_m(s)?.equals(&m_minus_e(s)?)
}

/// If `kp` is a translate `K(S) + x`, returns `x`.
///
/// `K(S)` has least element `0`, so the only candidate is the least element
/// of `kp`.
pub fn is_canonical_ideal(s: &GoodSemigroup, kp: &TruncatedSet) -> Result<Option<Point>> {
    let findings = crate::algebra::good_ideal_findings(s, kp)?;
    if let Some(f) = findings.first() {
        return Err(Error::NotGood(f.to_string()));
    }
    let x = kp.min_element();
    let k = std_canonical(s)?.translate(&x)?;
    Ok(if k.equals(kp)? { Some(x) } else { None })
}

/// Duality checks for a canonical ideal `k` of `s` and a good ideal `i`:
/// `K - (K - I) = I`, `K - I` good, `K - K = S`, and
/// `E ⊆ F ⇔ K - F ⊆ K - E` on `pair` (default `(I, K)`).
pub fn check_duality(
    s: &GoodSemigroup,
    k: &TruncatedSet,
    i: &TruncatedSet,
    pair: Option<(&TruncatedSet, &TruncatedSet)>,
) -> Result<Report> {
    let mut r = Report::new("DUALITY");
    let k_minus_i = difference(k, i)?;
    let bidual = difference(k, &k_minus_i)?;
    r.push(Check::set_equal("K-(K-I) = I", &bidual, i)?);

    let findings = validate(&k_minus_i, false);
    r.push(match findings.first() {
        None => Check::pass("K-I good", "no findings"),
        Some(f) => Check::fail("K-I good", f.witness.first().cloned(), f.to_string()),
    });

    let k_minus_k = difference(k, k)?;
    r.push(Check::set_equal("K-K = S", &k_minus_k, s.set())?);

    let (e, f) = pair.unwrap_or((i, k));
    let inclusion = e.is_subset(f)?;
    let dual_inclusion = difference(k, f)?.is_subset(&difference(k, e)?)?;
    r.push(Check::agree(
        "E ⊆ F iff K-F ⊆ K-E",
        inclusion,
        dual_inclusion,
    ));

    r.object("S", s.set());
    r.object("K", k);
    r.object("I", i);
    r.object("K-I", &k_minus_i);
    r.object("K-(K-I)", &bidual);
    Ok(r)
}

/// Invariants reported by `analyze`.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub local: bool,
    pub symmetric: bool,
    pub almost_symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub med: Option<bool>,
    pub conductor: Point,
    pub frobenius: Point,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Point>,
    /// One entry per local factor when `S` is not local.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Classification>,
}

pub fn classify(s: &GoodSemigroup) -> Result<Classification> {
    let local = s.is_local();
    let components = if local {
        Vec::new()
    } else {
        decompose(s)?
            .components
            .iter()
            .map(classify)
            .collect::<Result<Vec<_>>>()?
    };
    let symmetric = is_symmetric(s)?;
    let almost_symmetric = is_almost_symmetric(s)?;
    if symmetric && !almost_symmetric {
        return Err(Error::InternalDefect(
            "symmetric but not almost symmetric".into(),
        ));
    }
    Ok(Classification {
        local,
        symmetric,
        almost_symmetric,
        med: if local { Some(is_med(s)?) } else { None },
        conductor: s.conductor().clone(),
        frobenius: s.frobenius()?,
        multiplicity: if local { Some(s.multiplicity()?) } else { None },
        components,
    })
}
