//! Spectra and transition amplitudes `H(t) = exp(iAt)` of cubelike graphs.
//!
//! The eigenvalue of the character `x -> (-1)^{a.x}` is `m - 2 wt(a^T M)`, so
//! the first row of `H(t)` is the normalized Walsh-Hadamard transform of
//! `a -> exp(i t (m - 2 wt(a^T M)))`. The projectors onto the character
//! spaces are never built.

mod dense;
mod rational;
pub mod wht;

use num_complex::Complex;

pub use dense::{dense_oracle, DenseMatrix};
pub use rational::RationalPi;

use crate::error::{Error, Result};
use crate::gf2::{check_dim, parity, BitVec, ConnectionSet, MAX_DENSE_DIM};
use crate::scalar::Real;

/// Eigenvalues of `X(C)` with multiplicities, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    m: usize,
    entries: Vec<(i64, u64)>,
}

impl Spectrum {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[(i64, u64)] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|&(_, k)| k).sum()
    }

    pub fn multiplicity(&self, eigenvalue: i64) -> u64 {
        self.entries
            .iter()
            .find(|&&(e, _)| e == eigenvalue)
            .map_or(0, |&(_, k)| k)
    }
}

pub fn spectrum(c: &ConnectionSet) -> Spectrum {
    let m = c.len();
    let mut entries: Vec<(i64, u64)> = c
        .weight_distribution()
        .iter()
        .map(|(k, count)| (m as i64 - 2 * i64::from(k), count))
        .collect();
    entries.sort_by_key(|e| std::cmp::Reverse(e.0));
    Spectrum { m, entries }
}

#[inline]
fn cis<T: Real>(angle: T) -> Complex<T> {
    Complex::new(angle.cos(), angle.sin())
}

/// Row 0 of `H(t)`: `values[u] = H(t)_{0,u}`.
#[derive(Debug, Clone)]
pub struct AmplitudeVector<T> {
    dim: usize,
    t: RationalPi,
    values: Vec<Complex<T>>,
}

impl<T: Real> AmplitudeVector<T> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn time(&self) -> RationalPi {
        self.t
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn at(&self, u: BitVec) -> Complex<T> {
        self.values[u.bits() as usize]
    }

    /// `sum_u |H(t)_{0,u}|^2`, which is 1 for a unitary `H(t)`.
    pub fn norm_sqr(&self) -> T {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Largest `|values[u]|` over `u != 0`, with its index.
    pub fn max_off_diagonal(&self) -> (u32, T) {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(u, z)| (u as u32, z.norm()))
            .fold((0, T::zero()), |best, cur| if cur.1 > best.1 { cur } else { best })
    }

    /// Largest `|values[u] - scale * [u == target]|`.
    pub fn deviation_from_indicator(&self, target: u32, scale: Complex<T>) -> T {
        self.values
            .iter()
            .enumerate()
            .map(|(u, &z)| {
                if u as u32 == target {
                    (z - scale).norm()
                } else {
                    z.norm()
                }
            })
            .fold(T::zero(), T::max)
    }
}

/// `exp(i t lambda_a)` for every `a`.
fn eigen_phases<T: Real>(c: &ConnectionSet, t: RationalPi) -> Result<Vec<Complex<T>>> {
    let m = c.len() as i64;
    Ok(c.codeword_weights()?
        .into_iter()
        .map(|w| cis(t.phase_angle::<T>(m - 2 * i64::from(w))))
        .collect())
}

/// Row 0 of `H(t)` via the fast Walsh-Hadamard transform, `O(d 2^d)`.
pub fn amplitude_row<T: Real>(c: &ConnectionSet, t: RationalPi) -> Result<AmplitudeVector<T>> {
    check_dim(c.dim(), MAX_DENSE_DIM)?;
    let mut values = eigen_phases::<T>(c, t)?;
    wht::wht(&mut values);
    let scale = T::one() / T::from_int(values.len() as i64);
    for v in &mut values {
        *v = *v * scale;
    }
    Ok(AmplitudeVector {
        dim: c.dim(),
        t,
        values,
    })
}

/// `H(t)_{u,v}` by direct summation over the characters.
pub fn amplitude_entry<T: Real>(
    c: &ConnectionSet,
    t: RationalPi,
    u: BitVec,
    v: BitVec,
) -> Result<Complex<T>> {
    for w in [u, v] {
        if w.dim() != c.dim() {
            return Err(Error::DimensionMismatch {
                expected: c.dim(),
                found: w.dim(),
            });
        }
    }
    check_dim(c.dim(), MAX_DENSE_DIM)?;
    let diff = (u + v).bits();
    let phases = eigen_phases::<T>(c, t)?;
    let sum = phases
        .iter()
        .enumerate()
        .fold(Complex::new(T::zero(), T::zero()), |acc, (a, &z)| {
            if parity(a as u32 & diff) {
                acc - z
            } else {
                acc + z
            }
        });
    Ok(sum / T::from_int(phases.len() as i64))
}

/// `tr H(t) = sum_a exp(i t lambda_a)`, from the spectrum.
pub fn trace<T: Real>(c: &ConnectionSet, t: RationalPi) -> Complex<T> {
    trace_of_spectrum(&spectrum(c), t)
}

pub fn trace_of_spectrum<T: Real>(s: &Spectrum, t: RationalPi) -> Complex<T> {
    s.entries()
        .iter()
        .fold(Complex::new(T::zero(), T::zero()), |acc, &(lambda, mult)| {
            acc + cis(t.phase_angle::<T>(lambda)) * T::from_int(mult as i64)
        })
}
