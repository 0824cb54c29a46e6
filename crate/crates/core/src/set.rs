//! Finite representation of infinite subsets of `Z^h`.
//!
//! A [`TruncatedSet`] is given by a lower bound `L`, a conductor bound `C` and
//! the finite set of its members inside the window `[L, C]`. A point `a` is a
//! member iff `a >= L` and `cap(a, C)` is one of the stored small elements.
//! Every set handled by this crate (good semigroups, relative ideals, their
//! sums, differences and canonical ideals) is stable under this truncation.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{in_delta_axis, Point, Window};

#[derive(Clone)]
pub struct TruncatedSet {
    window: Window,
    small: Vec<Point>,
    mask: Vec<bool>,
}

impl TruncatedSet {
    /// Builds a set from its small elements.
    ///
    /// The elements may come in any order; duplicates are merged. Every
    /// element must lie in `[lower, conductor]` and `conductor` itself must be
    /// present.
    pub fn new(
        lower: Point,
        conductor: Point,
        small: impl IntoIterator<Item = Point>,
    ) -> Result<Self> {
        let window = Window::new(lower, conductor)?;
        let mut mask = vec![false; window.volume()];
        let mut elems: Vec<Point> = Vec::new();
        for p in small {
            if p.dim() != window.dim() {
                return Err(Error::DimensionMismatch {
                    expected: window.dim(),
                    found: p.dim(),
                });
            }
            if !window.contains(&p) {
                return Err(Error::InvalidRepresentation(format!(
                    "element {p} outside window [{}, {}]",
                    window.lo(),
                    window.hi()
                )));
            }
            let idx = window.index_of(p.coords());
            if !mask[idx] {
                mask[idx] = true;
                elems.push(p);
            }
        }
        if !mask[window.volume() - 1] {
            return Err(Error::InvalidRepresentation(
                "conductor element absent".into(),
            ));
        }
        elems.sort();
        Ok(TruncatedSet {
            window,
            small: elems,
            mask,
        })
    }

    /// Builds the set whose members in `[lower, conductor]` are the points
    /// accepted by `member`.
    ///
    /// The caller guarantees that the described set is truncation-stable at
    /// `conductor` and has no members outside `lower + N^h`.
    pub fn from_predicate(
        lower: Point,
        conductor: Point,
        mut member: impl FnMut(&Point) -> bool,
    ) -> Result<Self> {
        let window = Window::new(lower, conductor)?;
        let mut mask = Vec::with_capacity(window.volume());
        let mut small = Vec::new();
        for p in window.points() {
            let m = member(&p);
            mask.push(m);
            if m {
                small.push(p);
            }
        }
        if !mask.last().copied().unwrap_or(false) {
            return Err(Error::InvalidRepresentation(
                "conductor element absent".into(),
            ));
        }
        Ok(TruncatedSet {
            window,
            small,
            mask,
        })
    }

    /// `base + N^h`.
    pub fn orthant(base: Point) -> Self {
        TruncatedSet::new(base.clone(), base.clone(), [base]).expect("single-point window is valid")
    }

    pub fn dim(&self) -> usize {
        self.window.dim()
    }

    pub fn lower(&self) -> &Point {
        self.window.lo()
    }

    pub fn conductor(&self) -> &Point {
        self.window.hi()
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// The members inside `[lower, conductor]`, sorted lexicographically.
    pub fn small(&self) -> &[Point] {
        &self.small
    }

    /// Membership test. Panics on a dimension mismatch; see [`Self::try_contains`].
    pub fn contains(&self, a: &Point) -> bool {
        assert_eq!(a.dim(), self.dim(), "dimension mismatch in membership test");
        self.contains_coords(a.coords())
    }

    pub fn try_contains(&self, a: &Point) -> Result<bool> {
        self.check_dim(a.dim())?;
        Ok(self.contains_coords(a.coords()))
    }

    pub(crate) fn contains_coords(&self, a: &[i64]) -> bool {
        let lo = self.window.lo().coords();
        let hi = self.window.hi().coords();
        let mut idx = 0usize;
        for k in 0..a.len() {
            let c = a[k];
            if c < lo[k] {
                return false;
            }
            let c = c.min(hi[k]);
            idx = idx * ((hi[k] - lo[k] + 1) as usize) + (c - lo[k]) as usize;
        }
        self.mask[idx]
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if dim != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: dim,
            });
        }
        Ok(())
    }

    /// Members inside an arbitrary window, in lexicographic order.
    pub fn materialize(&self, window: &Window) -> Vec<Point> {
        window.points().filter(|p| self.contains(p)).collect()
    }

    /// Componentwise minimum of all members.
    pub fn min_element(&self) -> Point {
        let mut it = self.small.iter();
        let first = it
            .next()
            .expect("a truncated set always holds its conductor")
            .clone();
        it.fold(first, |acc, p| acc.meet_unchecked(p))
    }

    /// An equivalent representation with the smallest possible window: the
    /// lower bound becomes the componentwise minimum of the members and the
    /// conductor the least bound at which the set is truncation-stable.
    pub fn normalize(&self) -> TruncatedSet {
        let lower = self.min_element();
        let mut conductor = self.conductor().clone();
        for axis in 0..self.dim() {
            while conductor.coords()[axis] > lower.coords()[axis]
                && self.stable_below(&conductor, axis)
            {
                conductor.coords_mut()[axis] -= 1;
            }
        }
        if &lower == self.lower() && &conductor == self.conductor() {
            return self.clone();
        }
        TruncatedSet::from_predicate(lower, conductor, |p| self.contains(p))
            .expect("normalization preserves the conductor element")
    }

    /// Whether lowering coordinate `axis` of `conductor` by one keeps
    /// membership determined by truncation.
    fn stable_below(&self, conductor: &Point, axis: usize) -> bool {
        let top = conductor.coords()[axis];
        let mut face_hi = conductor.clone();
        let mut face_lo = self.lower().clone();
        face_lo.coords_mut()[axis] = top;
        face_hi.coords_mut()[axis] = top;
        let face = Window::new(face_lo, face_hi).expect("face of a valid window");
        face.points().all(|mut p| {
            let here = self.contains(&p);
            p.coords_mut()[axis] = top - 1;
            here == self.contains(&p)
        })
    }

    pub fn is_normalized(&self) -> bool {
        let n = self.normalize();
        n.lower() == self.lower() && n.conductor() == self.conductor()
    }

    /// The smallest window containing the significant parts of both sets.
    pub fn common_window(&self, other: &TruncatedSet) -> Result<Window> {
        self.check_dim(other.dim())?;
        Window::new(
            self.lower().meet_unchecked(other.lower()),
            self.conductor().join(other.conductor()),
        )
    }

    /// The lexicographically first point of `self` not in `other`.
    pub fn first_not_in(&self, other: &TruncatedSet) -> Result<Option<Point>> {
        let w = self.common_window(other)?;
        Ok(w.points().find(|p| self.contains(p) && !other.contains(p)))
    }

    /// The lexicographically first point in exactly one of the two sets.
    pub fn first_difference(&self, other: &TruncatedSet) -> Result<Option<Point>> {
        let w = self.common_window(other)?;
        Ok(w.points().find(|p| self.contains(p) != other.contains(p)))
    }

    pub fn is_subset(&self, other: &TruncatedSet) -> Result<bool> {
        Ok(self.first_not_in(other)?.is_none())
    }

    pub fn equals(&self, other: &TruncatedSet) -> Result<bool> {
        Ok(self.first_difference(other)?.is_none())
    }

    pub fn union(&self, other: &TruncatedSet) -> Result<TruncatedSet> {
        let w = self.common_window(other)?;
        TruncatedSet::from_predicate(w.lo().clone(), w.hi().clone(), |p| {
            self.contains(p) || other.contains(p)
        })
        .map(|s| s.normalize())
    }

    pub fn intersection(&self, other: &TruncatedSet) -> Result<TruncatedSet> {
        let w = self.common_window(other)?;
        TruncatedSet::from_predicate(w.lo().clone(), w.hi().clone(), |p| {
            self.contains(p) && other.contains(p)
        })
        .map(|s| s.normalize())
    }

    /// A member of `Δ(b) ∩ self`, if one exists.
    ///
    /// Coordinates at or above the conductor can be moved freely without
    /// changing membership, so the search reduces to the small elements.
    pub fn delta_witness(&self, b: &Point) -> Result<Option<Point>> {
        self.check_dim(b.dim())?;
        let lo = self.lower().coords();
        let hi = self.conductor().coords();
        let bc = b.coords();
        for axis in 0..self.dim() {
            if bc[axis] < lo[axis] {
                continue;
            }
            let target = bc[axis].min(hi[axis]);
            let found = self.small.iter().find(|t| {
                let t = t.coords();
                (0..t.len()).all(|j| {
                    if j == axis {
                        t[j] == target
                    } else {
                        t[j] >= bc[j].saturating_add(1).min(hi[j])
                    }
                })
            });
            if let Some(t) = found {
                let coords = t.coords().iter().enumerate().map(|(j, &tj)| {
                    if j == axis {
                        bc[j]
                    } else {
                        tj.max(bc[j] + 1)
                    }
                });
                let w = Point::new(coords);
                debug_assert!(self.contains(&w) && in_delta_axis(w.coords(), bc, axis));
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// The set `x + self`.
    pub fn translate(&self, x: &Point) -> Result<TruncatedSet> {
        self.check_dim(x.dim())?;
        let lower = self.lower().checked_add(x)?;
        let conductor = self.conductor().checked_add(x)?;
        let small = self
            .small
            .iter()
            .map(|p| p.checked_add(x))
            .collect::<Result<Vec<_>>>()?;
        TruncatedSet::new(lower, conductor, small)
    }

    /// Projection of the member set onto `axes`, in the given order.
    pub fn project(&self, axes: &[usize]) -> TruncatedSet {
        let small = self.small.iter().map(|p| p.project(axes));
        TruncatedSet::new(
            self.lower().project(axes),
            self.conductor().project(axes),
            small,
        )
        .expect("projection of a valid representation")
    }
}

impl PartialEq for TruncatedSet {
    /// Set equality (never a comparison of representations).
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl fmt::Debug for TruncatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSet")
            .field("lower", self.lower())
            .field("conductor", self.conductor())
            .field("small", &self.small)
            .finish()
    }
}

impl fmt::Display for TruncatedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.small.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}} ∪ ({} + N^{})", self.conductor(), self.dim())
    }
}

impl Serialize for TruncatedSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TruncatedSet", 4)?;
        s.serialize_field("dim", &self.dim())?;
        s.serialize_field("lower", self.lower())?;
        s.serialize_field("conductor", self.conductor())?;
        s.serialize_field("small", &self.small)?;
        s.end()
    }
}
