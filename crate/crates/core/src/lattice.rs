//! Integer lattice primitives: points of `Z^h`, rectangular windows, the
//! componentwise order and the `Δ`-set predicates.

use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A point of the integer lattice `Z^h`.
///
/// `Ord` is lexicographic. It is only used for canonical ordering of point
/// lists; the mathematical order is the componentwise one, see [`compare`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point(SmallVec<[i64; 4]>);

impl Point {
    pub fn new(coords: impl IntoIterator<Item = i64>) -> Self {
        Point(coords.into_iter().collect())
    }

    pub fn zero(dim: usize) -> Self {
        Point(SmallVec::from_elem(0, dim))
    }

    /// The point with every coordinate equal to `value`.
    pub fn splat(dim: usize, value: i64) -> Self {
        Point(SmallVec::from_elem(value, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Point) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Componentwise `self >= other`.
    pub fn ge(&self, other: &Point) -> bool {
        other.le(self)
    }

    pub fn checked_add(&self, other: &Point) -> Result<Point> {
        check_dims(self, other)?;
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Point)
    }

    pub fn checked_sub(&self, other: &Point) -> Result<Point> {
        check_dims(self, other)?;
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Point)
    }

    pub fn checked_neg(&self) -> Result<Point> {
        self.0
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Point)
    }

    /// Adds `delta` to every coordinate.
    pub fn offset(&self, delta: i64) -> Result<Point> {
        self.0
            .iter()
            .map(|a| a.checked_add(delta).ok_or(Error::Overflow))
            .collect::<Result<SmallVec<_>>>()
            .map(Point)
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise minimum, without the dimension check of [`meet`].
    pub fn meet_unchecked(&self, other: &Point) -> Point {
        Point(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Restriction to the given axes, in the given order.
    pub fn project(&self, axes: &[usize]) -> Point {
        Point(axes.iter().map(|&a| self.0[a]).collect())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(serializer)
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point(SmallVec::from_vec(v))
    }
}

impl<const N: usize> From<[i64; N]> for Point {
    fn from(v: [i64; N]) -> Self {
        Point::new(v)
    }
}

fn check_dims(a: &Point, b: &Point) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

/// Outcome of comparing two points in the componentwise partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    LessEqual,
    GreaterEqual,
    Incomparable,
}

/// `a ∧ b`, the componentwise minimum.
pub fn meet(a: &Point, b: &Point) -> Result<Point> {
    check_dims(a, b)?;
    Ok(a.meet_unchecked(b))
}

pub fn compare(a: &Point, b: &Point) -> Result<Comparison> {
    check_dims(a, b)?;
    Ok(match (a.le(b), b.le(a)) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::LessEqual,
        (false, true) => Comparison::GreaterEqual,
        (false, false) => Comparison::Incomparable,
    })
}

/// Truncation of `a` to the window below `bound`.
pub fn cap(a: &Point, bound: &Point) -> Result<Point> {
    meet(a, bound)
}

/// Whether `b ∈ Δ_i(a)`: `b_i = a_i` and `b_j > a_j` for every `j != i`.
///
/// `axis` is zero-based.
pub fn in_delta_i(b: &Point, a: &Point, axis: usize) -> Result<bool> {
    check_dims(a, b)?;
    if axis >= a.dim() {
        return Err(Error::AxisOutOfRange { axis, dim: a.dim() });
    }
    Ok(in_delta_axis(b.coords(), a.coords(), axis))
}

/// Whether `b ∈ Δ(a)`, the union of the `Δ_i(a)`.
pub fn in_delta(b: &Point, a: &Point) -> Result<bool> {
    check_dims(a, b)?;
    Ok((0..a.dim()).any(|i| in_delta_axis(b.coords(), a.coords(), i)))
}

pub(crate) fn in_delta_axis(b: &[i64], a: &[i64], axis: usize) -> bool {
    b.iter()
        .zip(a)
        .enumerate()
        .all(|(j, (bj, aj))| if j == axis { bj == aj } else { bj > aj })
}

/// A closed rectangular window `[lo, hi]` of `Z^h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    lo: Point,
    hi: Point,
}

impl Window {
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        check_dims(&lo, &hi)?;
        if !lo.le(&hi) {
            return Err(Error::InvalidRepresentation(format!(
                "window lower corner {lo} is not below upper corner {hi}"
            )));
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> &Point {
        &self.lo
    }

    pub fn hi(&self) -> &Point {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.ge(&self.lo) && p.le(&self.hi)
    }

    pub fn extents(&self) -> impl Iterator<Item = usize> + '_ {
        self.lo
            .coords()
            .iter()
            .zip(self.hi.coords())
            .map(|(l, h)| (h - l + 1) as usize)
    }

    pub fn volume(&self) -> usize {
        self.extents().product()
    }

    /// Row-major (lexicographic) index of a point inside the window.
    pub fn index_of(&self, p: &[i64]) -> usize {
        let mut idx = 0usize;
        for ((c, l), h) in p.iter().zip(self.lo.coords()).zip(self.hi.coords()) {
            idx = idx * ((h - l + 1) as usize) + (c - l) as usize;
        }
        idx
    }

    /// All points of the window in lexicographic order.
    pub fn points(&self) -> WindowPoints<'_> {
        WindowPoints {
            window: self,
            next: Some(self.lo.clone()),
        }
    }
}

pub struct WindowPoints<'a> {
    window: &'a Window,
    next: Option<Point>,
}

impl Iterator for WindowPoints<'_> {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let lo = self.window.lo.coords();
        let hi = self.window.hi.coords();
        let mut k = succ.dim();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            let c = &mut succ.coords_mut()[k];
            if *c < hi[k] {
                *c += 1;
                self.next = Some(succ);
                break;
            }
            *c = lo[k];
        }
        Some(current)
    }
}
