//! Perfect state transfer on cubelike graphs, decided through the binary
//! code of the graph.
//!
//! A cubelike graph `X(C)` has vertex set `Z_2^d` with `u ~ v` when
//! `u + v` lies in the connection set `C`. Writing the elements of `C` as the
//! columns of a `d x m` matrix `M`, the eigenvalues of `X(C)` are
//! `m - 2 wt(a^T M)`, the minimum period is `pi/D` where `D` is the gcd of
//! the code's nonzero weights, and transfer from `0` can only happen at time
//! `pi/(2D)`, to the center of the code.
//!
//! ```
//! use cubepst::{construct, pst};
//!
//! let x = construct::example_graph();
//! let verdict = pst::detect_pst(&x).unwrap();
//! assert!(verdict.occurs);
//! assert_eq!(verdict.target.unwrap().to_string(), "00001");
//! assert_eq!(verdict.time.pi_label(), "1/4·π");
//! ```
//!
//! Amplitudes are generic over the [`Real`] scalar (`f32` or `f64`); the
//! aliases below fix double precision.

pub mod census;
pub mod construct;
pub mod error;
pub mod gf2;
pub mod profile;
pub mod pst;
mod scalar;
pub mod walk;

pub use error::{Error, Result};
pub use gf2::{BitVec, Codeword, ColumnOrder, ConnectionSet, WeightDistribution};
pub use profile::CodeProfile;
pub use pst::{Certification, PeriodInfo, PstVerdict};
pub use scalar::Real;
pub use walk::{RationalPi, Spectrum};

/// Double-precision complex amplitude.
pub type Amplitude = num_complex::Complex<f64>;
/// Row 0 of `H(t)` in double precision.
pub type AmplitudeRow = walk::AmplitudeVector<f64>;
/// Dense `H(t)` in double precision.
pub type DenseH = walk::DenseMatrix<f64>;
