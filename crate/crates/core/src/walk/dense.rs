//! Dense reference evaluation of `H(t)` as a product of `cos(t) I + i sin(t) P_c`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gf2::ConnectionSet;
use crate::scalar::Real;

use super::RationalPi;

/// Largest dimension accepted by [`dense_oracle`].
pub const MAX_ORACLE_DIM: usize = 6;

/// Square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![Complex::new(T::zero(), T::zero()); n * n];
        for i in 0..n {
            data[i * n + i] = Complex::new(T::one(), T::zero());
        }
        Self { n, data }
    }

    /// Permutation matrix of the translation `x -> x + c`.
    pub fn translation(dim: usize, c: u32) -> Self {
        let n = 1usize << dim;
        let mut data = vec![Complex::new(T::zero(), T::zero()); n * n];
        for x in 0..n {
            data[x * n + (x ^ c as usize)] = Complex::new(T::one(), T::zero());
        }
        Self { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[Complex<T>] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    fn scale_add(&self, a: Complex<T>, other: &Self, b: Complex<T>) -> Self {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&x, &y)| x * a + y * b)
            .collect();
        Self { n: self.n, data }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut data = vec![Complex::new(T::zero(), T::zero()); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = data[i * n + j] + a * other.data[k * n + j];
                }
            }
        }
        Self { n, data }
    }
}

/// Full `H(t)` from the product formula over the elements of `C`.
pub fn dense_oracle<T: Real>(c: &ConnectionSet, t: RationalPi) -> Result<DenseMatrix<T>> {
    if c.dim() > MAX_ORACLE_DIM {
        return Err(Error::DimensionOutOfRange {
            dim: c.dim(),
            max: MAX_ORACLE_DIM,
        });
    }
    let n = 1usize << c.dim();
    let angle = t.to_radians::<T>();
    let cos = Complex::new(angle.cos(), T::zero());
    let isin = Complex::new(T::zero(), angle.sin());
    let identity = DenseMatrix::<T>::identity(n);
    let mut h = identity.clone();
    for &e in c.elements() {
        let factor = identity.scale_add(cos, &DenseMatrix::translation(c.dim(), e), isin);
        h = h.matmul(&factor);
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::hypercube;
    use num_complex::Complex64;

    #[test]
    fn k2_half_pi() {
        let h = dense_oracle::<f64>(&hypercube(1).unwrap(), RationalPi::new(1, 2).unwrap())
            .unwrap();
        let i = Complex64::new(0.0, 1.0);
        assert!(h.get(0, 0).norm() < 1e-15);
        assert!((h.get(0, 1) - i).norm() < 1e-15);
        assert!((h.get(1, 0) - i).norm() < 1e-15);
        assert!(h.get(1, 1).norm() < 1e-15);
    }

    #[test]
    fn time_zero_identity() {
        let c = ConnectionSet::new(3, [1, 6, 7]).unwrap();
        let h = dense_oracle::<f64>(&c, RationalPi::ZERO).unwrap();
        assert_eq!(h, DenseMatrix::identity(8));
    }

    #[test]
    fn cap() {
        let c = hypercube(7).unwrap();
        assert!(dense_oracle::<f64>(&c, RationalPi::ZERO).is_err());
    }
}
