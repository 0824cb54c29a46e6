//! Test instances: exhaustive enumeration of small good semigroups and seeded
//! random semigroups and ideals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::good_ideal_findings;
use crate::canonical::std_canonical;
use crate::error::{Error, Result};
use crate::lattice::{Point, Window};
use crate::semigroup::GoodSemigroup;
use crate::set::TruncatedSet;
use crate::validate::exchange_failure;

/// Largest enumeration cap per coordinate for `h = 2`.
pub const MAX_ENUM_CAP_2D: i64 = 5;
/// Largest enumeration cap for `h = 1`.
pub const MAX_ENUM_CAP_1D: i64 = 24;

const MAX_ATTEMPTS: u32 = 64;

#[derive(Clone, Debug, Serialize)]
pub struct GenConfig {
    pub dim: usize,
    pub cap: Point,
    pub seed: u64,
    pub max_repair_rounds: u32,
}

impl GenConfig {
    pub fn new(cap: Point, seed: u64) -> Self {
        GenConfig {
            dim: cap.dim(),
            cap,
            seed,
            max_repair_rounds: 256,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GenConfig {
            seed,
            ..self.clone()
        }
    }

    fn check(&self) -> Result<()> {
        if self.cap.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: self.cap.dim(),
            });
        }
        if self.cap.coords().iter().any(|&c| c < 1) || self.max_repair_rounds < 1 {
            return Err(Error::InvalidRepresentation(format!(
                "generator needs cap >= 1 and at least one repair round, got cap {} and {} rounds",
                self.cap, self.max_repair_rounds
            )));
        }
        Ok(())
    }
}

/// A box of candidate points with a membership mask.
struct Grid {
    window: Window,
    points: Vec<Point>,
    mask: Vec<bool>,
}

impl Grid {
    fn new(lo: Point, hi: Point) -> Result<Self> {
        let window = Window::new(lo, hi)?;
        let points: Vec<Point> = window.points().collect();
        let mask = vec![false; points.len()];
        Ok(Grid {
            window,
            points,
            mask,
        })
    }

    fn index(&self, p: &[i64]) -> usize {
        self.window.index_of(p)
    }

    fn capped_index(&self, p: impl Iterator<Item = i64>) -> usize {
        let hi = self.window.hi().coords();
        let v: Vec<i64> = p.zip(hi).map(|(x, &c)| x.min(c)).collect();
        self.index(&v)
    }

    fn to_set(&self) -> Result<TruncatedSet> {
        TruncatedSet::from_predicate(self.window.lo().clone(), self.window.hi().clone(), |p| {
            self.mask[self.window.index_of(p.coords())]
        })
    }

    /// Closes the marked points under meets and under adding the points of
    /// `addends` (capped at the top of the box). `None` means the marked
    /// points themselves.
    fn close(&mut self, addends: Option<&[Point]>) {
        let mut members: Vec<usize> = (0..self.points.len()).filter(|&i| self.mask[i]).collect();
        let mut queue = members.clone();
        while let Some(i) = queue.pop() {
            let p = self.points[i].clone();
            let mut fresh = Vec::new();
            for &j in &members {
                let q = &self.points[j];
                fresh.push(self.index(p.meet_unchecked(q).coords()));
                if addends.is_none() {
                    fresh.push(
                        self.capped_index(p.coords().iter().zip(q.coords()).map(|(a, b)| a + b)),
                    );
                }
            }
            if let Some(adds) = addends {
                for s in adds {
                    fresh.push(
                        self.capped_index(p.coords().iter().zip(s.coords()).map(|(a, b)| a + b)),
                    );
                }
            }
            for k in fresh {
                if !self.mask[k] {
                    self.mask[k] = true;
                    members.push(k);
                    queue.push(k);
                }
            }
        }
    }

    /// Alternates closure with inserting the least lifting `δ` for one
    /// failing exchange pair, until no pair fails.
    fn repair(&mut self, addends: Option<&[Point]>, rounds: u32) -> Result<Option<TruncatedSet>> {
        for _ in 0..rounds {
            self.close(addends);
            let t = self.to_set()?;
            let Some(fail) = exchange_failure(&t, 1) else {
                return Ok(Some(t));
            };
            let mut delta = fail.meet;
            delta.coords_mut()[fail.axis] += 1;
            let k = self.capped_index(delta.coords().iter().copied());
            if self.mask[k] {
                return Err(Error::InternalDefect(format!(
                    "lifting point {delta} already present for failing pair {} {}",
                    fail.pair[0], fail.pair[1]
                )));
            }
            self.mask[k] = true;
        }
        Ok(None)
    }
}

fn random_point(rng: &mut ChaCha8Rng, lo: &[i64], hi: &[i64]) -> Point {
    Point::new(lo.iter().zip(hi).map(|(&a, &b)| rng.gen_range(a..=b)))
}

/// A seeded random good semigroup with conductor at most `cfg.cap`, never
/// `N^h`.
///
/// Half the attempts draw their seed points off the coordinate hyperplanes,
/// which keeps the result local; the rest may produce products.
pub fn random_good(cfg: &GenConfig) -> Result<GoodSemigroup> {
    cfg.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let zero = Point::zero(cfg.dim);
    let cap = cfg.cap.coords();
    let mut reason = String::from("no attempt made");
    for _ in 0..MAX_ATTEMPTS {
        let local = rng.gen_bool(0.5);
        let floor = vec![i64::from(local); cfg.dim];
        let mut grid = Grid::new(zero.clone(), cfg.cap.clone())?;
        let first = grid.index(zero.coords());
        let last = grid.points.len() - 1;
        grid.mask[first] = true;
        grid.mask[last] = true;
        for _ in 0..rng.gen_range(1..=3) {
            let p = random_point(&mut rng, &floor, cap);
            let k = grid.index(p.coords());
            grid.mask[k] = true;
        }
        let Some(t) = grid.repair(None, cfg.max_repair_rounds)? else {
            reason = "repair rounds exhausted".into();
            continue;
        };
        let t = t.normalize();
        if t.conductor().is_zero() {
            reason = "closure reached N^h".into();
            continue;
        }
        return GoodSemigroup::new(t)
            .map_err(|e| Error::InternalDefect(format!("generated set invalid: {e}")));
    }
    Err(Error::GenerationFailed {
        attempts: MAX_ATTEMPTS,
        reason,
    })
}

/// A seeded random good relative ideal of `s`.
///
/// With probability 1/5 a translate of `K(S)`; otherwise the repaired closure
/// of one to three translates `x + S` with `x ∈ [-2, 3]^h`.
pub fn random_good_ideal(s: &GoodSemigroup, cfg: &GenConfig) -> Result<TruncatedSet> {
    s.set().check_dim(cfg.dim)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let lo = vec![-2; cfg.dim];
    let hi = vec![3; cfg.dim];
    if rng.gen_bool(0.2) {
        let x = random_point(&mut rng, &lo, &hi);
        return std_canonical(s)?.translate(&x);
    }
    let mut reason = String::from("no attempt made");
    for _ in 0..MAX_ATTEMPTS {
        let xs: Vec<Point> = (0..rng.gen_range(1..=3))
            .map(|_| random_point(&mut rng, &lo, &hi))
            .collect();
        let lower = xs
            .iter()
            .skip(1)
            .fold(xs[0].clone(), |a, x| a.meet_unchecked(x));
        let top = xs
            .iter()
            .skip(1)
            .fold(xs[0].clone(), |a, x| a.join(x))
            .checked_add(s.conductor())?;
        let mut grid = Grid::new(lower.clone(), top.clone())?;
        for k in 0..grid.points.len() {
            let p = &grid.points[k];
            grid.mask[k] = xs
                .iter()
                .any(|x| s.contains(&p.checked_sub(x).expect("small coordinates")));
        }
        let reach = top.checked_sub(&lower)?;
        let sw = Window::new(Point::zero(cfg.dim), s.conductor().join(&reach))?;
        let addends = s.set().materialize(&sw);
        let Some(t) = grid.repair(Some(&addends), cfg.max_repair_rounds)? else {
            reason = "repair rounds exhausted".into();
            continue;
        };
        let t = t.normalize();
        match good_ideal_findings(s, &t)?.first() {
            None => return Ok(t),
            Some(f) => reason = f.to_string(),
        }
    }
    Err(Error::GenerationFailed {
        attempts: MAX_ATTEMPTS,
        reason,
    })
}

/// Every good semigroup of `N^h` with conductor at most `cap`, each once, in
/// a fixed order (`h` is 1 or 2).
pub fn enumerate_good(h: usize, cap: &Point) -> Result<Vec<GoodSemigroup>> {
    let mut out = Vec::new();
    for_each_good(h, cap, |s| out.push(s))?;
    Ok(out)
}

/// Streaming form of [`enumerate_good`]; returns the number of semigroups.
///
/// A semigroup with conductor at most `cap` is determined by its members in
/// the box `[0, cap]`. The search decides the box points in lexicographic
/// order. Taking a point in requires its meets with earlier members to be in
/// (they precede it) and forces in its capped sums with them (they follow
/// it). The exchange axiom is checked on complete candidates.
pub fn for_each_good(h: usize, cap: &Point, mut emit: impl FnMut(GoodSemigroup)) -> Result<usize> {
    if cap.dim() != h {
        return Err(Error::DimensionMismatch {
            expected: h,
            found: cap.dim(),
        });
    }
    let limit = match h {
        1 => MAX_ENUM_CAP_1D,
        2 => MAX_ENUM_CAP_2D,
        _ => {
            return Err(Error::CapTooLarge(format!(
                "enumeration supports h = 1 or 2, not {h}"
            )))
        }
    };
    if cap.coords().iter().any(|&c| c < 0 || c > limit) {
        return Err(Error::CapTooLarge(format!(
            "cap {cap} outside exhaustive range: each coordinate must be in 0..={limit} for h = {h}"
        )));
    }
    let mut search = Search {
        grid: Grid::new(Point::zero(h), cap.clone())?,
        decided: 0,
        forced: Vec::new(),
        members: Vec::new(),
        count: 0,
    };
    search.forced = vec![0; search.grid.points.len()];
    search.run(&mut emit)?;
    Ok(search.count)
}

struct Search {
    grid: Grid,
    decided: usize,
    forced: Vec<u32>,
    members: Vec<usize>,
    count: usize,
}

impl Search {
    fn run(&mut self, emit: &mut dyn FnMut(GoodSemigroup)) -> Result<()> {
        let n = self.grid.points.len();
        let k = self.decided;
        if k == n {
            return self.leaf(emit);
        }
        let must = k == 0 || k == n - 1 || self.forced[k] > 0;
        if !must {
            self.decided += 1;
            self.run(emit)?;
            self.decided -= 1;
        }
        if let Some(pushed) = self.include(k) {
            self.decided += 1;
            self.run(emit)?;
            self.decided -= 1;
            for j in pushed {
                self.forced[j] -= 1;
            }
            self.members.pop();
            self.grid.mask[k] = false;
        }
        Ok(())
    }

    /// Marks point `k` as a member if its meets allow it; returns the points
    /// whose force counters were raised.
    fn include(&mut self, k: usize) -> Option<Vec<usize>> {
        let p = self.grid.points[k].clone();
        for &j in &self.members {
            let m = self
                .grid
                .index(p.meet_unchecked(&self.grid.points[j]).coords());
            if !self.grid.mask[m] {
                return None;
            }
        }
        self.grid.mask[k] = true;
        self.members.push(k);
        let mut pushed = Vec::new();
        for &j in &self.members {
            let q = &self.grid.points[j];
            let s = self
                .grid
                .capped_index(p.coords().iter().zip(q.coords()).map(|(a, b)| a + b));
            if s != k {
                self.forced[s] += 1;
                pushed.push(s);
            }
        }
        Some(pushed)
    }

    fn leaf(&mut self, emit: &mut dyn FnMut(GoodSemigroup)) -> Result<()> {
        let t = self.grid.to_set()?;
        if exchange_failure(&t, 1).is_some() {
            return Ok(());
        }
        let s = GoodSemigroup::new(t)
            .map_err(|e| Error::InternalDefect(format!("enumerated set invalid: {e}")))?;
        self.count += 1;
        emit(s);
        Ok(())
    }
}
