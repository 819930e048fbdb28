//! Deciding perfect state transfer and periodicity from the code, with
//! numeric certification by the walk engine.
//!
//! For a cubelike graph with divisor `D` (gcd of the nonzero codeword
//! weights) transfer out of vertex 0 can only happen at time `pi/(2D)` and
//! only to the center of the code. It happens exactly when `D` divides
//! `|supp(x) & supp(y)|` for every pair of codewords `x`, `y`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf2::{parity, BitVec, Codeword, ConnectionSet, MAX_DENSE_DIM};
use crate::profile::{center, row_gcd, self_orthogonal};
use crate::walk::{amplitude_entry, amplitude_row, trace, RationalPi};

/// Largest dimension for the all-pairs route of [`condition_c`].
pub const MAX_ALL_PAIRS_DIM: usize = 13;
/// Largest dimension at which verdicts are checked numerically.
pub const MAX_CERTIFY_DIM: usize = 20;

/// Default modulus tolerance for a given dimension.
pub fn default_tolerance(dim: usize) -> f64 {
    if dim <= 12 {
        1e-9
    } else {
        1e-8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    Theorem,
    Numeric,
    Both,
}

impl Certification {
    pub fn as_str(self) -> &'static str {
        match self {
            Certification::Theorem => "theorem",
            Certification::Numeric => "numeric",
            Certification::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PstVerdict {
    pub occurs: bool,
    /// Transfer partner of vertex 0 when `occurs`.
    pub target: Option<BitVec>,
    /// The only candidate time, `pi/(2D)`.
    pub time: RationalPi,
    pub divisor: u32,
    /// gcd of the row weights; equals `divisor` whenever transfer occurs.
    pub row_gcd: u32,
    /// `H(time)_{0,target}` when numerically evaluated.
    pub phase: Option<Complex64>,
    /// Largest `|H(time)_{0,u}|` over `u != 0` when numerically evaluated.
    pub max_off_diagonal: Option<f64>,
    pub certified_by: Certification,
}

impl PstVerdict {
    /// Whether the row gcd matches the divisor as it must under transfer.
    pub fn corollary_holds(&self) -> bool {
        !self.occurs || self.row_gcd == self.divisor
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeriodInfo {
    pub period: RationalPi,
    pub alpha: Complex64,
    /// Largest deviation of `H(period)` row 0 from `alpha * e_0`, when checked.
    pub deviation: Option<f64>,
}

/// Every pair of codewords meets in a multiple of `delta` positions,
/// checked over all pairs of the `2^dim` words.
pub fn condition_c_all_pairs(c: &ConnectionSet, delta: u32) -> Result<bool> {
    if delta == 0 {
        return Err(Error::ZeroDelta);
    }
    if c.dim() > MAX_ALL_PAIRS_DIM {
        return Err(Error::DimensionOutOfRange {
            dim: c.dim(),
            max: MAX_ALL_PAIRS_DIM,
        });
    }
    let words: Vec<Codeword> = (0..1u32 << c.dim())
        .map(|a| c.codeword(BitVec::new(c.dim(), a).expect("in range")).expect("same dim"))
        .collect();
    for (i, x) in words.iter().enumerate() {
        for y in &words[i..] {
            if x.intersection(y) % delta != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Support-intersection condition at `delta`, using the shortcuts for
/// `delta = 1`, odd `delta` (divides every weight) and `delta = 2`
/// (self-orthogonality) before falling back to all pairs.
pub fn condition_c(c: &ConnectionSet, delta: u32) -> Result<bool> {
    match delta {
        0 => Err(Error::ZeroDelta),
        1 => Ok(true),
        2 => Ok(self_orthogonal(c)),
        d if d % 2 == 1 => Ok(c.weight_distribution().nonzero_weights().all(|w| w % d == 0)),
        d => condition_c_all_pairs(c, d),
    }
}

/// For every `a`: `delta | wt(a^T M)` and `wt(a^T M)/delta = a.u (mod 2)`.
pub fn condition_b(c: &ConnectionSet, delta: u32, u: BitVec) -> Result<bool> {
    if delta == 0 {
        return Err(Error::ZeroDelta);
    }
    if u.dim() != c.dim() {
        return Err(Error::DimensionMismatch {
            expected: c.dim(),
            found: u.dim(),
        });
    }
    let check = |a: u32, w: u32| w.is_multiple_of(delta) && ((w / delta) % 2 == 1) == parity(a & u.bits());
    if c.dim() <= MAX_DENSE_DIM {
        let weights = c.codeword_weights()?;
        Ok(weights.iter().enumerate().all(|(a, &w)| check(a as u32, w)))
    } else {
        let n = 1u64 << c.dim();
        Ok((0..n).all(|a| check(a as u32, c.weight_of(a as u32))))
    }
}

pub fn verify_pst_numeric(c: &ConnectionSet, t: RationalPi, u: BitVec, tol: f64) -> Result<bool> {
    if u.is_zero() {
        return Err(Error::ZeroTarget);
    }
    let zero = BitVec::zero(c.dim())?;
    let h: Complex64 = amplitude_entry(c, t, zero, u)?;
    Ok(h.norm() >= 1.0 - tol)
}

/// `|tr H(t)| <= tol * 2^dim`; necessary for transfer at time `t`.
pub fn trace_necessary_check(c: &ConnectionSet, t: RationalPi, tol: f64) -> bool {
    let tr: Complex64 = trace(c, t);
    tr.norm() <= tol * (1u64 << c.dim()) as f64
}

pub fn detect_pst(c: &ConnectionSet) -> Result<PstVerdict> {
    detect_pst_with_tolerance(c, default_tolerance(c.dim()))
}

pub fn detect_pst_with_tolerance(c: &ConnectionSet, tol: f64) -> Result<PstVerdict> {
    let divisor = c.divisor();
    let time = RationalPi::new(1, 2 * i64::from(divisor))?;
    let occurs = if c.dim() <= MAX_ALL_PAIRS_DIM || divisor % 2 == 1 || divisor == 2 {
        condition_c(c, divisor)?
    } else {
        // (b) at the center is equivalent to (c) and is linear in 2^dim
        condition_b(c, divisor, center(c))?
    };
    let target = if occurs {
        // (b) at a = e_i pins coordinate i of the target to (w_i / D) mod 2
        let bits = c
            .row_weights()
            .iter()
            .enumerate()
            .filter(|(_, &w)| (w / divisor) % 2 == 1)
            .fold(0u32, |acc, (i, _)| acc | (1 << i));
        let u = BitVec::new(c.dim(), bits)?;
        if u.is_zero() {
            return Err(Error::Inconsistency("transfer condition holds but center is zero".into()));
        }
        if u != center(c) {
            return Err(Error::Inconsistency(format!(
                "target {u} differs from the center {}",
                center(c)
            )));
        }
        if !condition_b(c, divisor, u)? {
            return Err(Error::Inconsistency(format!(
                "support condition holds at {divisor} but parity condition fails at center {u}"
            )));
        }
        Some(u)
    } else {
        None
    };

    let mut verdict = PstVerdict {
        occurs,
        target,
        time,
        divisor,
        row_gcd: row_gcd(c),
        phase: None,
        max_off_diagonal: None,
        certified_by: Certification::Theorem,
    };
    if c.dim() > MAX_CERTIFY_DIM {
        return Ok(verdict);
    }

    let row = amplitude_row::<f64>(c, time)?;
    let (argmax, max_off) = row.max_off_diagonal();
    verdict.max_off_diagonal = Some(max_off);
    match target {
        Some(u) => {
            let phase = row.at(u);
            if phase.norm() < 1.0 - tol {
                return Err(Error::Inconsistency(format!(
                    "theorem predicts transfer to {u} at {} but |H| = {}",
                    time.pi_label(),
                    phase.norm()
                )));
            }
            verdict.phase = Some(phase);
        }
        None => {
            if max_off >= 1.0 - tol {
                return Err(Error::Inconsistency(format!(
                    "theorem rules out transfer at {} but |H(0,{argmax})| = {max_off}",
                    time.pi_label()
                )));
            }
        }
    }
    verdict.certified_by = Certification::Both;
    Ok(verdict)
}

/// Minimum period `pi/D` and the phase `exp(i m pi / D)` of `H` there.
pub fn min_period(c: &ConnectionSet) -> Result<PeriodInfo> {
    min_period_with_tolerance(c, default_tolerance(c.dim()))
}

pub fn min_period_with_tolerance(c: &ConnectionSet, tol: f64) -> Result<PeriodInfo> {
    let divisor = c.divisor();
    let period = RationalPi::new(1, i64::from(divisor))?;
    let angle: f64 = period.phase_angle(c.len() as i64);
    let alpha = Complex64::from_polar(1.0, angle);
    let mut info = PeriodInfo {
        period,
        alpha,
        deviation: None,
    };
    if c.dim() <= MAX_CERTIFY_DIM {
        let row = amplitude_row::<f64>(c, period)?;
        let dev = row.deviation_from_indicator(0, alpha);
        if dev > tol {
            return Err(Error::Inconsistency(format!(
                "H({}) deviates from alpha * I by {dev}",
                period.pi_label()
            )));
        }
        info.deviation = Some(dev);
    }
    Ok(info)
}

/// The divisor's multiplicative structure restricted to rows: `D | row_gcd`.
pub fn divisor_divides_row_gcd(c: &ConnectionSet) -> bool {
    row_gcd(c).is_multiple_of(c.divisor())
}
