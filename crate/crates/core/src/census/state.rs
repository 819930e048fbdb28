//! Incrementally maintained counters for the census predicate.
//!
//! Pair counts `n_ij` and codeword weights `w_a` are kept as byte lanes of a
//! few `u64` words, so toggling an element is a handful of word additions.
//! Counts never exceed `2^(dim-1) <= 16`, so lanes never carry.

use num_integer::Integer;

use crate::census::MAX_CENSUS_DIM;

const LOW_BITS: u64 = 0x0101_0101_0101_0101;

pub(crate) type PairLanes = [u64; 2];
pub(crate) type WeightLanes = [u64; 4];

#[inline]
fn lane(words: &[u64], k: usize) -> u32 {
    ((words[k / 8] >> (8 * (k % 8))) & 0xff) as u32
}

#[inline]
fn set_lane(words: &mut [u64], k: usize) {
    words[k / 8] |= 1 << (8 * (k % 8));
}

#[inline]
fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * dim - i * i.saturating_sub(1) / 2 + (j - i)
}

/// Per-element increments and the counters of the full set `Z_2^d \ {0}`.
#[derive(Debug, Clone)]
pub struct PredicateTables {
    dim: usize,
    pair_inc: Vec<PairLanes>,
    weight_inc: Vec<WeightLanes>,
    full_pairs: PairLanes,
    full_weights: WeightLanes,
    full_members: u32,
}

impl PredicateTables {
    pub fn new(dim: usize) -> Self {
        assert!((1..=MAX_CENSUS_DIM).contains(&dim), "census dimension out of range");
        let n = 1usize << dim;
        let mut pair_inc = vec![[0u64; 2]; n];
        let mut weight_inc = vec![[0u64; 4]; n];
        for c in 1..n {
            for i in 0..dim {
                for j in i..dim {
                    if (c >> i) & 1 == 1 && (c >> j) & 1 == 1 {
                        set_lane(&mut pair_inc[c], pair_index(dim, i, j));
                    }
                }
            }
            for a in 0..n {
                if (a & c).count_ones() % 2 == 1 {
                    set_lane(&mut weight_inc[c], a);
                }
            }
        }
        let mut full_pairs = [0u64; 2];
        let mut full_weights = [0u64; 4];
        for c in 1..n {
            add(&mut full_pairs, &pair_inc[c]);
            add(&mut full_weights, &weight_inc[c]);
        }
        let full_members = ((1u64 << n) - 2) as u32;
        Self {
            dim,
            pair_inc,
            weight_inc,
            full_pairs,
            full_weights,
            full_members,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Membership mask of `Z_2^d \ {0}` (bit `v` for vector `v`).
    pub fn full_members(&self) -> u32 {
        self.full_members
    }
}

#[inline]
fn add<const N: usize>(a: &mut [u64; N], b: &[u64; N]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.wrapping_add(*y);
    }
}

#[inline]
fn sub<const N: usize>(a: &mut [u64; N], b: &[u64; N]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.wrapping_sub(*y);
    }
}

/// Outcome of the census predicate on one connection set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredicateVerdict {
    pub spanning: bool,
    pub divisor: u32,
}

/// Counters `n_ij` and `w_a` for the current subset, plus its membership mask.
#[derive(Debug, Clone)]
pub struct SurvivorPredicateState<'t> {
    tables: &'t PredicateTables,
    members: u32,
    pairs: PairLanes,
    weights: WeightLanes,
}

impl<'t> SurvivorPredicateState<'t> {
    pub fn empty(tables: &'t PredicateTables) -> Self {
        Self {
            tables,
            members: 0,
            pairs: [0; 2],
            weights: [0; 4],
        }
    }

    /// Builds the state of the set with membership mask `members` from scratch.
    pub fn from_members(tables: &'t PredicateTables, members: u32) -> Self {
        let mut s = Self::empty(tables);
        let mut x = members;
        while x != 0 {
            s.toggle(x.trailing_zeros());
            x &= x - 1;
        }
        s
    }

    /// Adds vector `v` if absent, removes it otherwise.
    #[inline]
    pub fn toggle(&mut self, v: u32) {
        let bit = 1u32 << v;
        let (p, w) = (&self.tables.pair_inc[v as usize], &self.tables.weight_inc[v as usize]);
        if self.members & bit == 0 {
            add(&mut self.pairs, p);
            add(&mut self.weights, w);
        } else {
            sub(&mut self.pairs, p);
            sub(&mut self.weights, w);
        }
        self.members ^= bit;
    }

    pub fn members(&self) -> u32 {
        self.members
    }

    pub fn len(&self) -> u32 {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    /// `n_ij`, 0-based coordinates; `n_ii` is the weight of row `i`.
    pub fn pair_count(&self, i: usize, j: usize) -> u32 {
        lane(&self.pairs, pair_index(self.tables.dim, i, j))
    }

    /// `w_a = wt(a^T M)`.
    pub fn weight(&self, a: u32) -> u32 {
        lane(&self.weights, a as usize)
    }

    /// All `n_ij` even.
    #[inline]
    pub fn is_self_orthogonal(&self) -> bool {
        (self.pairs[0] | self.pairs[1]) & LOW_BITS == 0
    }

    /// Same test for the complement `Z_2^d \ {0} \ C` without building it.
    #[inline]
    pub fn complement_is_self_orthogonal(&self) -> bool {
        let f = &self.tables.full_pairs;
        ((self.pairs[0] ^ f[0]) | (self.pairs[1] ^ f[1])) & LOW_BITS == 0
    }

    pub fn complement(&self) -> Self {
        let mut pairs = self.tables.full_pairs;
        let mut weights = self.tables.full_weights;
        sub(&mut pairs, &self.pairs);
        sub(&mut weights, &self.weights);
        Self {
            tables: self.tables,
            members: self.tables.full_members ^ self.members,
            pairs,
            weights,
        }
    }

    /// Spanning flag and divisor from the `w_a` counters.
    pub fn verdict(&self) -> PredicateVerdict {
        let n = 1u32 << self.tables.dim;
        let mut spanning = true;
        let mut divisor = 0u32;
        for a in 1..n {
            let w = self.weight(a);
            if w == 0 {
                spanning = false;
            } else {
                divisor = divisor.gcd(&w);
            }
        }
        PredicateVerdict { spanning, divisor }
    }
}
