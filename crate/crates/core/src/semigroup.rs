//! Good semigroups: validated, normalized truncated sets containing `0`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Point, Window};
use crate::set::TruncatedSet;
use crate::validate::{validate, ValidationFinding};

#[derive(Clone, PartialEq)]
pub struct GoodSemigroup {
    set: TruncatedSet,
}

impl GoodSemigroup {
    /// Normalizes and validates `t` as a good semigroup.
    pub fn new(t: TruncatedSet) -> Result<Self> {
        let set = t.normalize();
        let findings = validate(&set, true);
        if let Some(f) = findings.first() {
            return Err(Error::NotGood(f.to_string()));
        }
        Ok(GoodSemigroup { set })
    }

    /// Like [`Self::new`] but hands back every finding on failure.
    pub fn try_new(t: TruncatedSet) -> std::result::Result<Self, Vec<ValidationFinding>> {
        let set = t.normalize();
        let findings = validate(&set, true);
        if findings.is_empty() {
            Ok(GoodSemigroup { set })
        } else {
            Err(findings)
        }
    }

    /// Builds a semigroup from its members in `[0, conductor]`.
    pub fn from_small(conductor: Point, small: impl IntoIterator<Item = Point>) -> Result<Self> {
        let zero = Point::zero(conductor.dim());
        GoodSemigroup::new(TruncatedSet::new(zero, conductor, small)?)
    }

    /// The numerical semigroup generated by `generators` (h = 1).
    pub fn numerical(generators: &[i64]) -> Result<Self> {
        let gens: Vec<i64> = generators.iter().copied().filter(|&g| g > 0).collect();
        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::NotGood(format!(
                "generators {generators:?} have gcd {g}, no conductor exists"
            )));
        }
        let smallest = *gens.iter().min().expect("gcd 1 implies a generator");
        let largest = *gens.iter().max().expect("gcd 1 implies a generator");
        let bound = (smallest * largest + largest) as usize;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for n in 1..=bound {
            member[n] = gens
                .iter()
                .any(|&g| n as i64 >= g && member[n - g as usize]);
        }
        let conductor = (0..=bound).rev().find(|&n| !member[n]).map_or(0, |n| n + 1);
        let small = (0..=conductor)
            .filter(|&n| member[n])
            .map(|n| Point::from([n as i64]));
        GoodSemigroup::from_small(Point::from([conductor as i64]), small)
    }

    /// `N^h` itself.
    pub fn full(dim: usize) -> Self {
        GoodSemigroup {
            set: TruncatedSet::orthant(Point::zero(dim)),
        }
    }

    /// `{0} ∪ (c + N^h)`.
    pub fn ordinary(conductor: Point) -> Result<Self> {
        let zero = Point::zero(conductor.dim());
        GoodSemigroup::from_small(conductor.clone(), [zero, conductor])
    }

    pub fn set(&self) -> &TruncatedSet {
        &self.set
    }

    pub fn into_set(self) -> TruncatedSet {
        self.set
    }

    pub fn dim(&self) -> usize {
        self.set.dim()
    }

    pub fn conductor(&self) -> &Point {
        self.set.conductor()
    }

    pub fn contains(&self, a: &Point) -> bool {
        self.set.contains(a)
    }

    /// Whether this is all of `N^h`, which most statements exclude.
    pub fn is_full(&self) -> bool {
        self.conductor().is_zero()
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.is_full() {
            w.push("S equals ambient N^h".to_string());
        }
        w
    }

    /// `γ = c - 1`. Fails if `Δ^S(γ)` is not empty, which can only happen for
    /// a corrupted representation.
    pub fn frobenius(&self) -> Result<Point> {
        let gamma = self.conductor().offset(-1)?;
        if let Some(w) = self.set.delta_witness(&gamma)? {
            return Err(Error::InternalDefect(format!(
                "Δ^S(γ) contains {w} for γ = {gamma}"
            )));
        }
        Ok(gamma)
    }

    /// True iff `0` is the only member with a zero coordinate.
    pub fn is_local(&self) -> bool {
        // capping at c + 1 keeps zero and nonzero coordinates apart
        let top = self
            .conductor()
            .offset(1)
            .expect("conductor is far from overflow");
        let window = Window::new(Point::zero(self.dim()), top).expect("valid window");
        window
            .points()
            .filter(|p| !p.is_zero() && p.coords().contains(&0))
            .all(|p| !self.set.contains(&p))
    }

    /// The least nonzero member `e`.
    pub fn multiplicity(&self) -> Result<Point> {
        if !self.is_local() {
            return Err(Error::NotLocal);
        }
        let mut nonzero = self.set.small().iter().filter(|p| !p.is_zero());
        match nonzero.next() {
            Some(first) => Ok(nonzero.fold(first.clone(), |acc, p| acc.meet_unchecked(p))),
            // N: the only small element is 0 and every n >= 0 is a member
            None => Ok(Point::splat(self.dim(), 1)),
        }
    }

    /// `M = S \ {0}`.
    pub fn maximal_ideal(&self) -> Result<TruncatedSet> {
        let e = self.multiplicity()?;
        let conductor = self.conductor().join(&e);
        TruncatedSet::from_predicate(e, conductor, |p| !p.is_zero() && self.set.contains(p))
            .map(|m| m.normalize())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Debug for GoodSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoodSemigroup{:?}", self.set)
    }
}

impl fmt::Display for GoodSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.set, f)
    }
}

impl Serialize for GoodSemigroup {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.set.serialize(serializer)
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
    fn numerical_semigroups() {
        let t = GoodSemigroup::numerical(&[3, 4, 5]).unwrap();
        assert_eq!(t.conductor(), &p([3]));
        assert_eq!(t.frobenius().unwrap(), p([2]));
        let two_three = GoodSemigroup::numerical(&[2, 3]).unwrap();
        assert_eq!(two_three.conductor(), &p([2]));
        assert!(GoodSemigroup::numerical(&[2, 4]).is_err());
        assert!(GoodSemigroup::numerical(&[1]).unwrap().is_full());
    }

    #[test]
    fn locality() {
        assert!(fixtures::med_semigroup().is_local());
        assert!(fixtures::non_med_semigroup().is_local());
        assert!(!GoodSemigroup::full(2).is_local());
        let t = GoodSemigroup::numerical(&[3, 4, 5]).unwrap();
        let prod = crate::structure::product(&[t.clone(), t], &[vec![0], vec![1]]).unwrap();
        assert!(!prod.is_local());
        assert!(prod.contains(&p([3, 0])));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(fixtures::med_semigroup().multiplicity().unwrap(), p([2, 2]));
        assert_eq!(
            fixtures::non_med_semigroup().multiplicity().unwrap(),
            p([3, 3])
        );
        let ord = GoodSemigroup::ordinary(p([2, 5])).unwrap();
        assert_eq!(ord.multiplicity().unwrap(), p([2, 5]));
        assert_eq!(GoodSemigroup::full(2).multiplicity(), Err(Error::NotLocal));
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(fixtures::med_semigroup().frobenius().unwrap(), p([3, 3]));
        assert_eq!(
            fixtures::non_med_semigroup().frobenius().unwrap(),
            p([5, 5])
        );
    }

    #[test]
    fn maximal_ideal_examples() {
        let s = fixtures::med_semigroup();
        let m = s.maximal_ideal().unwrap();
        let expected =
            TruncatedSet::new(p([2, 2]), p([4, 4]), [p([2, 2]), p([3, 3]), p([4, 4])]).unwrap();
        assert!(m.equals(&expected).unwrap());
        let ord = GoodSemigroup::ordinary(p([2, 3])).unwrap();
        assert!(ord
            .maximal_ideal()
            .unwrap()
            .equals(&TruncatedSet::orthant(p([2, 3])))
            .unwrap());
        assert_eq!(
            fixtures::non_med_semigroup()
                .maximal_ideal()
                .unwrap()
                .lower(),
            &p([3, 3])
        );
    }

    #[test]
    fn ambient_is_flagged() {
        assert_eq!(
            GoodSemigroup::full(2).warnings(),
            vec!["S equals ambient N^h".to_string()]
        );
        assert!(fixtures::med_semigroup().warnings().is_empty());
    }

    #[test]
    fn rejects_non_semigroups() {
        let bad = TruncatedSet::new(
            p([0, 0]),
            p([4, 4]),
            [p([0, 0]), p([2, 3]), p([3, 2]), p([4, 4])],
        )
        .unwrap();
        assert!(matches!(GoodSemigroup::new(bad), Err(Error::NotGood(_))));
    }
}
