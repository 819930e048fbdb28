//! The general linear group GL(d, 2) acting on connection sets, for d <= 5.
//!
//! Sets are handled as membership masks: bit `v` is set when vector `v`
//! belongs to the set. For two sets of equal size, the lexicographically
//! smaller sorted element list is the one holding the least element of the
//! symmetric difference, so lexicographic minimum corresponds to the largest
//! bit-reversed mask.

use rayon::prelude::*;

use crate::census::MAX_CENSUS_DIM;
use crate::error::{Error, Result};
use crate::gf2::ConnectionSet;

/// `|GL(d, 2)| = prod_{i < d} (2^d - 2^i)`.
pub fn group_order(dim: usize) -> u64 {
    (0..dim).map(|i| (1u64 << dim) - (1u64 << i)).product()
}

/// An invertible linear map, stored as the images of the basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearMap {
    dim: usize,
    columns: [u32; MAX_CENSUS_DIM],
}

impl LinearMap {
    pub fn identity(dim: usize) -> Self {
        let mut columns = [0u32; MAX_CENSUS_DIM];
        for (i, c) in columns.iter_mut().enumerate().take(dim) {
            *c = 1 << i;
        }
        Self { dim, columns }
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns[..self.dim]
    }

    pub fn apply(&self, v: u32) -> u32 {
        let mut out = 0;
        let mut x = v;
        while x != 0 {
            out ^= self.columns[x.trailing_zeros() as usize];
            x &= x - 1;
        }
        out
    }

    /// Image of every vector, indexed by the vector.
    pub fn table(&self) -> [u32; 1 << MAX_CENSUS_DIM] {
        let mut img = [0u32; 1 << MAX_CENSUS_DIM];
        for v in 1..1usize << self.dim {
            img[v] = img[v & (v - 1)] ^ self.columns[v.trailing_zeros() as usize];
        }
        img
    }

    /// Image of a membership mask.
    pub fn apply_mask(&self, members: u32) -> u32 {
        map_mask(&self.table(), members)
    }
}

#[inline]
pub(crate) fn map_mask(table: &[u32; 1 << MAX_CENSUS_DIM], members: u32) -> u32 {
    let mut out = 0u32;
    let mut x = members;
    while x != 0 {
        out |= 1 << table[x.trailing_zeros() as usize];
        x &= x - 1;
    }
    out
}

/// Ordering key: larger key means lexicographically smaller sorted list.
#[inline]
pub fn lex_key(members: u32) -> u32 {
    members.reverse_bits()
}

pub fn mask_of(c: &ConnectionSet) -> u32 {
    c.elements().iter().fold(0u32, |m, &e| m | (1 << e))
}

pub fn set_of_mask(dim: usize, members: u32) -> Result<ConnectionSet> {
    ConnectionSet::new(dim, (1..1u32 << dim).filter(|v| members >> v & 1 == 1))
}

fn check_census_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_CENSUS_DIM {
        return Err(Error::DimensionOutOfRange {
            dim,
            max: MAX_CENSUS_DIM,
        });
    }
    Ok(())
}

fn extend_span(span: u64, v: u32) -> u64 {
    let mut out = span;
    let mut x = span;
    while x != 0 {
        let s = x.trailing_zeros();
        out |= 1u64 << (s ^ v);
        x &= x - 1;
    }
    out
}

fn visit_bases<F: FnMut(&LinearMap)>(map: &mut LinearMap, depth: usize, span: u64, f: &mut F) {
    if depth == map.dim {
        f(map);
        return;
    }
    for v in 1..1u32 << map.dim {
        if span >> v & 1 == 0 {
            map.columns[depth] = v;
            visit_bases(map, depth + 1, extend_span(span, v), f);
        }
    }
}

/// Visits every element of GL(dim, 2) once, sequentially.
pub fn for_each_element<F: FnMut(&LinearMap)>(dim: usize, mut f: F) -> Result<()> {
    check_census_dim(dim)?;
    let mut map = LinearMap::identity(dim);
    visit_bases(&mut map, 0, 1, &mut f);
    Ok(())
}

/// Parallel fold over GL(dim, 2), split by the image of the first basis vector.
pub fn fold_elements<A, Id, Fo, Re>(dim: usize, identity: Id, fold: Fo, reduce: Re) -> Result<A>
where
    A: Send,
    Id: Fn() -> A + Sync + Send,
    Fo: Fn(A, &LinearMap) -> A + Sync + Send,
    Re: Fn(A, A) -> A + Sync + Send,
{
    check_census_dim(dim)?;
    Ok((1..1u32 << dim)
        .into_par_iter()
        .map(|first| {
            let mut map = LinearMap::identity(dim);
            map.columns[0] = first;
            let mut acc = Some(identity());
            visit_bases(&mut map, 1, extend_span(1, first), &mut |g| {
                acc = Some(fold(acc.take().expect("accumulator"), g));
            });
            acc.expect("accumulator")
        })
        .reduce(&identity, &reduce))
}

/// Lexicographically least sorted element list over the orbit of `C`.
pub fn canonical_form(c: &ConnectionSet) -> Result<ConnectionSet> {
    let dim = c.dim();
    check_census_dim(dim)?;
    let members = mask_of(c);
    let best = fold_elements(
        dim,
        || members,
        |best, g| {
            let img = g.apply_mask(members);
            if lex_key(img) > lex_key(best) {
                img
            } else {
                best
            }
        },
        |a, b| if lex_key(a) >= lex_key(b) { a } else { b },
    )?;
    set_of_mask(dim, best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::hypercube;
    use std::collections::HashSet;

    #[test]
    fn enumerates_each_element_once() {
        for dim in 1..=4 {
            let mut seen = HashSet::new();
            for_each_element(dim, |g| {
                let cols: Vec<u32> = g.columns().to_vec();
                // invertible: images of all vectors distinct
                let images: HashSet<u32> = (0..1u32 << dim).map(|v| g.apply(v)).collect();
                assert_eq!(images.len(), 1 << dim);
                assert!(seen.insert(cols));
            })
            .unwrap();
            assert_eq!(seen.len() as u64, group_order(dim));
        }
        assert_eq!(group_order(5), 9_999_360);
        let count = fold_elements(5, || 0u64, |n, _| n + 1, |a, b| a + b).unwrap();
        assert_eq!(count, 9_999_360);
    }

    #[test]
    fn lex_key_orders_sorted_lists() {
        let sets: Vec<Vec<u32>> = vec![vec![1, 2, 4], vec![1, 2, 7], vec![1, 3, 4], vec![2, 3, 4]];
        let keys: Vec<u32> = sets
            .iter()
            .map(|s| lex_key(s.iter().fold(0, |m, &e| m | (1 << e))))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn canonical_form_of_basis_changes() {
        for dim in 1..=4 {
            let cube = hypercube(dim).unwrap();
            let canon = canonical_form(&cube).unwrap();
            assert_eq!(canonical_form(&canon).unwrap(), canon);
            for_each_element(dim, |g| {
                let moved = set_of_mask(dim, g.apply_mask(mask_of(&cube))).unwrap();
                assert_eq!(canonical_form(&moved).unwrap(), canon);
            })
            .unwrap();
        }
    }

    #[test]
    fn canonical_form_is_orbit_minimum() {
        let c = ConnectionSet::new(3, [3, 5, 6, 7]).unwrap();
        let mut best: Option<Vec<u32>> = None;
        for_each_element(3, |g| {
            let mut img: Vec<u32> = c.elements().iter().map(|&e| g.apply(e)).collect();
            img.sort_unstable();
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img);
            }
        })
        .unwrap();
        assert_eq!(canonical_form(&c).unwrap().elements(), best.unwrap().as_slice());
    }

    #[test]
    fn rejects_large_dimension() {
        assert!(canonical_form(&hypercube(6).unwrap()).is_err());
    }
}
