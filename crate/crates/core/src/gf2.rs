//! Bit-packed arithmetic over Z_2^d.
//!
//! Coordinate `i` (0-based) of a vector is bit `i` of its integer encoding,
//! so row 1 of the generator matrix `M` is the least significant bit and the
//! encoding doubles as the vertex index of the Cayley graph. Bit strings are
//! written with coordinate 1 leftmost: `e5` in dimension 5 is `00001` and has
//! encoding 16.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, BitXor};
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest dimension for code-only operations.
pub const MAX_DIM: usize = 32;
/// Largest dimension for anything that materializes 2^d values.
pub const MAX_DENSE_DIM: usize = 24;

pub(crate) fn check_dim(dim: usize, max: usize) -> Result<()> {
    if dim == 0 || dim > max {
        return Err(Error::DimensionOutOfRange { dim, max });
    }
    Ok(())
}

#[inline]
pub(crate) fn dim_mask(dim: usize) -> u64 {
    if dim >= 64 {
        u64::MAX
    } else {
        (1u64 << dim) - 1
    }
}

#[inline]
pub(crate) fn parity(x: u32) -> bool {
    x.count_ones() & 1 == 1
}

/// Element of Z_2^d.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    dim: u8,
    bits: u32,
}

impl BitVec {
    pub fn new(dim: usize, bits: u32) -> Result<Self> {
        check_dim(dim, MAX_DIM)?;
        if u64::from(bits) > dim_mask(dim) {
            return Err(Error::ValueOutOfRange {
                value: bits.into(),
                dim,
            });
        }
        Ok(Self {
            dim: dim as u8,
            bits,
        })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, 0)
    }

    /// Standard basis vector with a one in 0-based coordinate `index`.
    pub fn unit(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::ValueOutOfRange {
                value: 1u64 << index.min(63),
                dim,
            });
        }
        Self::new(dim, 1 << index)
    }

    pub fn all_ones(dim: usize) -> Result<Self> {
        check_dim(dim, MAX_DIM)?;
        Self::new(dim, dim_mask(dim) as u32)
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// Integer encoding, which is also the vertex index.
    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Coordinate `index` (0-based).
    #[inline]
    pub fn coord(self, index: usize) -> bool {
        (self.bits >> index) & 1 == 1
    }

    /// Dot product over Z_2.
    pub fn dot(self, other: BitVec) -> Result<bool> {
        self.same_dim(other)?;
        Ok(parity(self.bits & other.bits))
    }

    pub fn checked_add(self, other: BitVec) -> Result<BitVec> {
        self.same_dim(other)?;
        Ok(BitVec {
            dim: self.dim,
            bits: self.bits ^ other.bits,
        })
    }

    pub(crate) fn same_dim(self, other: BitVec) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// Parses a bit string, leftmost character = coordinate 1.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let dim = s.chars().count();
        check_dim(dim, MAX_DIM).map_err(|_| Error::InvalidBitString(s.to_string()))?;
        let mut bits = 0u32;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(Error::InvalidBitString(s.to_string())),
            }
        }
        Self::new(dim, bits)
    }
}

impl Add for BitVec {
    type Output = BitVec;

    /// Panics on a dimension mismatch; use [`BitVec::checked_add`] otherwise.
    fn add(self, rhs: BitVec) -> BitVec {
        self.checked_add(rhs).expect("BitVec dimensions differ")
    }
}

impl BitXor for BitVec {
    type Output = BitVec;

    fn bitxor(self, rhs: BitVec) -> BitVec {
        self.checked_add(rhs).expect("BitVec dimensions differ")
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            f.write_str(if self.coord(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_bit_str(s)
    }
}

/// How a [`ConnectionSet`] orders its columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColumnOrder {
    /// Ascending by integer encoding.
    #[default]
    Sorted,
    /// As supplied.
    AsGiven,
}

/// Connection set of a cubelike graph; its elements are the columns of `M`.
#[derive(Clone)]
pub struct ConnectionSet {
    dim: u8,
    order: ColumnOrder,
    elements: Vec<u32>,
}

impl ConnectionSet {
    /// Builds a connection set with columns sorted ascending.
    pub fn new(dim: usize, elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        Self::with_order(dim, elements, ColumnOrder::Sorted)
    }

    pub fn with_order(
        dim: usize,
        elements: impl IntoIterator<Item = u32>,
        order: ColumnOrder,
    ) -> Result<Self> {
        check_dim(dim, MAX_DIM)?;
        let mut elements: Vec<u32> = elements.into_iter().collect();
        if elements.is_empty() {
            return Err(Error::EmptyConnectionSet);
        }
        let mask = dim_mask(dim);
        for &e in &elements {
            if e == 0 {
                return Err(Error::ZeroElement);
            }
            if u64::from(e) > mask {
                return Err(Error::ValueOutOfRange {
                    value: e.into(),
                    dim,
                });
            }
        }
        let mut sorted = elements.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            let dup = BitVec::new(dim, w[0])?;
            return Err(Error::DuplicateElement(dup.to_string()));
        }
        if order == ColumnOrder::Sorted {
            elements = sorted;
        }
        Ok(Self {
            dim: dim as u8,
            order,
            elements,
        })
    }

    pub fn from_bitvecs(vectors: &[BitVec], order: ColumnOrder) -> Result<Self> {
        let dim = vectors.first().ok_or(Error::EmptyConnectionSet)?.dim();
        for v in vectors {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.dim(),
                });
            }
        }
        Self::with_order(dim, vectors.iter().map(|v| v.bits()), order)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Number of elements `m`, the valency of the graph.
    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> ColumnOrder {
        self.order
    }

    /// Integer encodings of the columns, in column order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = BitVec> + '_ {
        let dim = self.dim;
        self.elements.iter().map(move |&bits| BitVec { dim, bits })
    }

    pub fn contains(&self, v: BitVec) -> bool {
        v.dim() == self.dim() && self.elements.contains(&v.bits())
    }

    /// Same elements, ignoring column order.
    pub fn same_set(&self, other: &ConnectionSet) -> bool {
        if self.dim != other.dim || self.len() != other.len() {
            return false;
        }
        let mut a = self.elements.clone();
        let mut b = other.elements.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Adds `v` if absent, removes it if present. Fails if the result would be
    /// empty or `v` is zero.
    pub fn toggled(&self, v: BitVec) -> Result<ConnectionSet> {
        if v.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            });
        }
        if v.is_zero() {
            return Err(Error::Degenerate("cannot toggle the zero vector".into()));
        }
        let mut elements = self.elements.clone();
        if let Some(pos) = elements.iter().position(|&e| e == v.bits()) {
            elements.remove(pos);
            if elements.is_empty() {
                return Err(Error::Degenerate(
                    "toggling would leave an empty connection set".into(),
                ));
            }
        } else {
            elements.push(v.bits());
        }
        Self::with_order(self.dim(), elements, self.order)
    }

    /// Entry `(row, col)` of `M`, both 0-based.
    pub fn entry(&self, row: usize, col: usize) -> bool {
        (self.elements[col] >> row) & 1 == 1
    }

    /// Row weights of `M`: `|{c in C : c_i = 1}|` for each coordinate `i`.
    pub fn row_weights(&self) -> Vec<u32> {
        let mut w = vec![0u32; self.dim()];
        for &e in &self.elements {
            let mut x = e;
            while x != 0 {
                w[x.trailing_zeros() as usize] += 1;
                x &= x - 1;
            }
        }
        w
    }

    /// Rows of `M` packed into 64-bit blocks, column `j` at bit `j % 64` of block `j / 64`.
    pub fn packed_rows(&self) -> Vec<Codeword> {
        (0..self.dim())
            .map(|i| {
                let mut word = Codeword::zero(self.len());
                for (j, &e) in self.elements.iter().enumerate() {
                    if (e >> i) & 1 == 1 {
                        word.set(j);
                    }
                }
                word
            })
            .collect()
    }

    fn check_vec(&self, a: BitVec) -> Result<()> {
        if a.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: a.dim(),
            });
        }
        Ok(())
    }

    /// The word `a^T M`: position `j` is `a . c_j`.
    pub fn codeword(&self, a: BitVec) -> Result<Codeword> {
        self.check_vec(a)?;
        let mut word = Codeword::zero(self.len());
        for (j, &c) in self.elements.iter().enumerate() {
            if parity(a.bits() & c) {
                word.set(j);
            }
        }
        Ok(word)
    }

    /// `wt(a^T M)`, counted without materializing the word.
    pub fn codeword_weight(&self, a: BitVec) -> Result<u32> {
        self.check_vec(a)?;
        Ok(self.weight_of(a.bits()))
    }

    #[inline]
    pub(crate) fn weight_of(&self, a: u32) -> u32 {
        self.elements.iter().filter(|&&c| parity(a & c)).count() as u32
    }

    /// `wt(a^T M)` for every `a`, indexed by the encoding of `a`.
    ///
    /// Uses the integer Walsh-Hadamard transform of the indicator of `C`:
    /// `sum_c (-1)^{a.c} = m - 2 wt(a^T M)`.
    pub fn codeword_weights(&self) -> Result<Vec<u32>> {
        check_dim(self.dim(), MAX_DENSE_DIM)?;
        let n = 1usize << self.dim();
        let mut f = vec![0i32; n];
        for &c in &self.elements {
            f[c as usize] = 1;
        }
        crate::walk::wht::wht_i32(&mut f);
        let m = self.len() as i64;
        Ok(f.into_iter().map(|s| ((m - i64::from(s)) / 2) as u32).collect())
    }

    /// Exact weight distribution over all 2^dim vectors `a`.
    pub fn weight_distribution(&self) -> WeightDistribution {
        let mut counts = BTreeMap::new();
        if self.dim() <= MAX_DENSE_DIM {
            for w in self.codeword_weights().expect("dimension checked") {
                *counts.entry(w).or_insert(0u64) += 1;
            }
        } else {
            for w in GrayWeights::new(self) {
                *counts.entry(w).or_insert(0u64) += 1;
            }
        }
        WeightDistribution {
            m: self.len(),
            counts,
        }
    }

    /// gcd of the nonzero codeword weights.
    pub fn divisor(&self) -> u32 {
        let d = self
            .weight_distribution()
            .nonzero_weights()
            .fold(0u32, |g, w| g.gcd(&w));
        assert!(d > 0, "a connection set with a nonzero column has a nonzero codeword");
        d
    }

    /// Sum (XOR) of all elements.
    pub fn sigma(&self) -> BitVec {
        BitVec {
            dim: self.dim,
            bits: self.elements.iter().fold(0, |acc, &e| acc ^ e),
        }
    }

    /// GF(2) rank of `M`.
    pub fn rank(&self) -> usize {
        let mut basis = [0u32; MAX_DIM];
        let mut rank = 0;
        for &e in &self.elements {
            let mut x = e;
            while x != 0 {
                let top = 31 - x.leading_zeros() as usize;
                if basis[top] == 0 {
                    basis[top] = x;
                    rank += 1;
                    break;
                }
                x ^= basis[top];
            }
        }
        rank
    }

    /// Whether `C` spans Z_2^dim, i.e. the Cayley graph is connected.
    pub fn spans(&self) -> bool {
        self.rank() == self.dim()
    }

    /// The `d x m` generator matrix as 0/1 rows.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        (0..self.dim())
            .map(|i| (0..self.len()).map(|j| self.entry(i, j) as u8).collect())
            .collect()
    }
}

impl PartialEq for ConnectionSet {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.elements == other.elements
    }
}

impl Eq for ConnectionSet {}

impl fmt::Debug for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

/// Iterates `wt(a^T M)` over all `a` in Gray-code order using packed rows.
struct GrayWeights {
    rows: Vec<Codeword>,
    word: Codeword,
    step: u64,
    total: u64,
}

impl GrayWeights {
    fn new(c: &ConnectionSet) -> Self {
        Self {
            rows: c.packed_rows(),
            word: Codeword::zero(c.len()),
            step: 0,
            total: 1u64 << c.dim(),
        }
    }
}

impl Iterator for GrayWeights {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.step == self.total {
            return None;
        }
        if self.step > 0 {
            let row = self.step.trailing_zeros() as usize;
            self.word.xor_assign(&self.rows[row]);
        }
        self.step += 1;
        Some(self.word.weight())
    }
}

/// Binary word of fixed length, packed in 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    len: usize,
    blocks: Vec<u64>,
}

impl Codeword {
    pub fn zero(len: usize) -> Self {
        Self {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut w = Self::zero(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            if b {
                w.set(j);
            }
        }
        w
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, j: usize) -> bool {
        (self.blocks[j / 64] >> (j % 64)) & 1 == 1
    }

    fn set(&mut self, j: usize) {
        self.blocks[j / 64] |= 1 << (j % 64);
    }

    pub fn weight(&self) -> u32 {
        self.blocks.iter().map(|b| b.count_ones()).sum()
    }

    /// `|supp(self) & supp(other)|`.
    pub fn intersection(&self, other: &Codeword) -> u32 {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    pub fn xor_assign(&mut self, other: &Codeword) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|j| self.get(j)).collect()
    }
}

impl BitXor for &Codeword {
    type Output = Codeword;

    fn bitxor(self, rhs: &Codeword) -> Codeword {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.get(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Number of vectors `a` with `wt(a^T M) = k`, for each weight `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    m: usize,
    counts: BTreeMap<u32, u64>,
}

impl WeightDistribution {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn count(&self, weight: u32) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// `(weight, count)` pairs with nonzero count, ascending by weight.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    pub fn as_map(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn nonzero_weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.keys().copied().filter(|&k| k > 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}
