//! Products of good semigroups and the decomposition into local factors.
//!
//! Axes are zero-based here. A factor's coordinates occupy its support axes
//! in increasing order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Point, Window};
use crate::semigroup::GoodSemigroup;
use crate::set::TruncatedSet;

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    /// Blocks of axes, each sorted, ordered by least axis.
    pub supports: Vec<Vec<usize>>,
    pub components: Vec<GoodSemigroup>,
}

impl Decomposition {
    pub fn is_local(&self) -> bool {
        self.supports.len() == 1
    }
}

fn check_supports(dims: &[usize], supports: &[Vec<usize>]) -> Result<usize> {
    if dims.len() != supports.len() {
        return Err(Error::InvalidRepresentation(format!(
            "{} factors but {} support blocks",
            dims.len(),
            supports.len()
        )));
    }
    let h: usize = dims.iter().sum();
    let mut seen = vec![false; h];
    for (block, &d) in supports.iter().zip(dims) {
        if block.len() != d {
            return Err(Error::InvalidRepresentation(format!(
                "support {block:?} does not match factor dimension {d}"
            )));
        }
        if block.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRepresentation(format!(
                "support {block:?} is not strictly increasing"
            )));
        }
        for &a in block {
            if a >= h || seen[a] {
                return Err(Error::InvalidRepresentation(format!(
                    "supports do not partition the {h} axes"
                )));
            }
            seen[a] = true;
        }
    }
    Ok(h)
}

/// Places the coordinates of `parts[k]` on the axes `supports[k]`.
pub fn interleave(parts: &[Point], supports: &[Vec<usize>]) -> Result<Point> {
    let dims: Vec<usize> = parts.iter().map(Point::dim).collect();
    let h = check_supports(&dims, supports)?;
    let mut out = Point::zero(h);
    for (p, block) in parts.iter().zip(supports) {
        for (k, &axis) in block.iter().enumerate() {
            out.coords_mut()[axis] = p.coords()[k];
        }
    }
    Ok(out)
}

/// The interleaved cartesian product of arbitrary truncated sets.
pub fn product_sets(parts: &[TruncatedSet], supports: &[Vec<usize>]) -> Result<TruncatedSet> {
    if parts.is_empty() {
        return Err(Error::EmptySet);
    }
    let lowers: Vec<Point> = parts.iter().map(|t| t.lower().clone()).collect();
    let tops: Vec<Point> = parts.iter().map(|t| t.conductor().clone()).collect();
    let lower = interleave(&lowers, supports)?;
    let top = interleave(&tops, supports)?;
    let mut bufs: Vec<Vec<i64>> = parts.iter().map(|t| vec![0; t.dim()]).collect();
    TruncatedSet::from_predicate(lower, top, |q| {
        parts
            .iter()
            .zip(supports)
            .zip(bufs.iter_mut())
            .all(|((t, block), buf)| {
                for (k, &axis) in block.iter().enumerate() {
                    buf[k] = q.coords()[axis];
                }
                t.contains_coords(buf)
            })
    })
}

/// `S_1 × ⋯ × S_r`, validated.
pub fn product(parts: &[GoodSemigroup], supports: &[Vec<usize>]) -> Result<GoodSemigroup> {
    let sets: Vec<TruncatedSet> = parts.iter().map(|s| s.set().clone()).collect();
    GoodSemigroup::new(product_sets(&sets, supports)?)
}

/// The unique finest factorization of `s` into local good semigroups.
///
/// Axes `i` and `j` start in the same block when every member vanishes on
/// both or on neither. A factorization is accepted only after the product of
/// the projections reproduces `s`; otherwise blocks are merged and the test
/// repeated, ending at the single block at worst.
pub fn decompose(s: &GoodSemigroup) -> Result<Decomposition> {
    let h = s.dim();
    let window = Window::new(Point::zero(h), s.conductor().offset(1)?)?;
    let mut parent: Vec<usize> = (0..h).collect();
    fn root(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    let members = s.set().materialize(&window);
    for i in 0..h {
        for j in i + 1..h {
            let tied = members
                .iter()
                .all(|m| (m.coords()[i] == 0) == (m.coords()[j] == 0));
            if tied {
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..h).map(|a| root(&mut parent, a)).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for axis in 0..h {
        match blocks.iter_mut().find(|b| roots[b[0]] == roots[axis]) {
            Some(b) => b.push(axis),
            None => blocks.push(vec![axis]),
        }
    }

    loop {
        if reconstructs(s, &blocks)? {
            break;
        }
        let mut merged = None;
        'search: for a in 0..blocks.len() {
            for b in a + 1..blocks.len() {
                let candidate = merge(&blocks, a, b);
                if reconstructs(s, &candidate)? {
                    merged = Some(candidate);
                    break 'search;
                }
            }
        }
        blocks = match merged {
            Some(m) => m,
            None => merge(&blocks, 0, 1),
        };
    }

    let components = blocks
        .iter()
        .map(|b| GoodSemigroup::new(s.set().project(b)))
        .collect::<Result<Vec<_>>>()?;
    if let Some(c) = components.iter().find(|c| !c.is_local() && c.dim() > 1) {
        return Err(Error::InternalDefect(format!(
            "non-local factor {c} in decomposition"
        )));
    }
    Ok(Decomposition {
        supports: blocks,
        components,
    })
}

fn merge(blocks: &[Vec<usize>], a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (k, block) in blocks.iter().enumerate() {
        if k == b {
            continue;
        }
        let mut block = block.clone();
        if k == a {
            block.extend(&blocks[b]);
            block.sort_unstable();
        }
        out.push(block);
    }
    out.sort_by_key(|b| b[0]);
    out
}

fn reconstructs(s: &GoodSemigroup, blocks: &[Vec<usize>]) -> Result<bool> {
    if blocks.len() == 1 {
        return Ok(true);
    }
    let parts: Vec<TruncatedSet> = blocks.iter().map(|b| s.set().project(b)).collect();
    product_sets(&parts, blocks)?.equals(s.set())
}

/// The maximal ideal of a local factor; `N` counts as local with ideal `1 + N`.
pub fn factor_maximal_ideal(c: &GoodSemigroup) -> Result<TruncatedSet> {
    if c.is_full() {
        return Ok(TruncatedSet::orthant(Point::splat(c.dim(), 1)));
    }
    c.maximal_ideal()
}

/// `J = M_1 × ⋯ × M_r`.
pub fn jacobson(s: &GoodSemigroup) -> Result<TruncatedSet> {
    let d = decompose(s)?;
    jacobson_of(&d)
}

pub fn jacobson_of(d: &Decomposition) -> Result<TruncatedSet> {
    let ms = d
        .components
        .iter()
        .map(factor_maximal_ideal)
        .collect::<Result<Vec<_>>>()?;
    product_sets(&ms, &d.supports)
}

/// The multiplicity vectors of the local factors, interleaved.
pub fn multiplicity_vector(s: &GoodSemigroup) -> Result<Point> {
    let d = decompose(s)?;
    multiplicity_vector_of(&d)
}

pub fn multiplicity_vector_of(d: &Decomposition) -> Result<Point> {
    let es = d
        .components
        .iter()
        .map(|c| {
            if c.is_full() {
                Ok(Point::splat(c.dim(), 1))
            } else {
                c.multiplicity()
            }
        })
        .collect::<Result<Vec<_>>>()?;
    interleave(&es, &d.supports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::m_minus_m;
    use crate::fixtures;

    fn p<const N: usize>(c: [i64; N]) -> Point {
        Point::from(c)
    }

    fn t345() -> GoodSemigroup {
        GoodSemigroup::numerical(&[3, 4, 5]).unwrap()
    }

    #[test]
    fn product_of_numerical_is_non_med_m_minus_m() {
        let prod = product(&[t345(), t345()], &[vec![0], vec![1]]).unwrap();
        let mm = m_minus_m(&fixtures::non_med_semigroup()).unwrap();
        assert!(prod.set().equals(&mm).unwrap());
        assert_eq!(prod.conductor(), &p([3, 3]));
    }

    #[test]
    fn product_single_block_is_identity() {
        let s = fixtures::med_semigroup();
        let prod = product(std::slice::from_ref(&s), &[vec![0, 1]]).unwrap();
        assert!(prod.set().equals(s.set()).unwrap());
    }

    #[test]
    fn inconsistent_supports_rejected() {
        let s = fixtures::med_semigroup();
        let t = GoodSemigroup::numerical(&[2, 3]).unwrap();
        assert!(product(&[s.clone(), t.clone()], &[vec![0, 1], vec![1]]).is_err());
        assert!(product(&[s.clone(), t.clone()], &[vec![0], vec![1, 2]]).is_err());
        assert!(product(&[s, t], &[vec![2, 0], vec![1]]).is_err());
    }

    #[test]
    fn decompose_examples() {
        let mm = GoodSemigroup::new(m_minus_m(&fixtures::non_med_semigroup()).unwrap()).unwrap();
        let d = decompose(&mm).unwrap();
        assert_eq!(d.supports, vec![vec![0], vec![1]]);
        for c in &d.components {
            assert!(c.set().equals(t345().set()).unwrap());
        }
        let d = decompose(&fixtures::med_semigroup()).unwrap();
        assert_eq!(d.supports, vec![vec![0, 1]]);

        let h3 = product(
            &[
                fixtures::med_semigroup(),
                GoodSemigroup::numerical(&[2, 3]).unwrap(),
            ],
            &[vec![0, 1], vec![2]],
        )
        .unwrap();
        let d = decompose(&h3).unwrap();
        assert_eq!(d.supports, vec![vec![0, 1], vec![2]]);
        assert!(d.components[0]
            .set()
            .equals(fixtures::med_semigroup().set())
            .unwrap());
    }

    #[test]
    fn decompose_interleaved_supports() {
        let h3 = product(
            &[
                fixtures::med_semigroup(),
                GoodSemigroup::numerical(&[2, 3]).unwrap(),
            ],
            &[vec![0, 2], vec![1]],
        )
        .unwrap();
        assert_eq!(decompose(&h3).unwrap().supports, vec![vec![0, 2], vec![1]]);
        let full = decompose(&GoodSemigroup::full(3)).unwrap();
        assert_eq!(full.supports, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn jacobson_ideals() {
        let s = fixtures::med_semigroup();
        assert!(jacobson(&s)
            .unwrap()
            .equals(&s.maximal_ideal().unwrap())
            .unwrap());
        let prod = product(&[t345(), t345()], &[vec![0], vec![1]]).unwrap();
        let j = jacobson(&prod).unwrap();
        let expected = TruncatedSet::from_predicate(p([3, 3]), p([3, 3]), |_| true).unwrap();
        assert!(j.equals(&expected).unwrap());
        assert_eq!(multiplicity_vector(&prod).unwrap(), p([3, 3]));

        let h3 = product(
            &[
                fixtures::med_semigroup(),
                GoodSemigroup::numerical(&[2, 3]).unwrap(),
            ],
            &[vec![0, 1], vec![2]],
        )
        .unwrap();
        let j = jacobson(&h3).unwrap();
        assert!(j.contains(&p([2, 2, 2])));
        assert!(j.contains(&p([3, 3, 7])));
        assert!(!j.contains(&p([2, 3, 2])));
        assert!(!j.contains(&p([2, 2, 0])));
        assert_eq!(multiplicity_vector(&h3).unwrap(), p([2, 2, 2]));
    }
}
