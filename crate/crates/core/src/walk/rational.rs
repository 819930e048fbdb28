use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// The time `p*pi/q`, stored in lowest terms with `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPi {
    p: i64,
    q: i64,
}

impl RationalPi {
    pub const ZERO: RationalPi = RationalPi { p: 0, q: 1 };

    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidTime(format!("{p}/{q}")));
        }
        let g = p.gcd(&q).max(1);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    /// `pi / q`.
    pub fn pi_over(q: i64) -> Result<Self> {
        Self::new(1, q)
    }

    pub fn numer(self) -> i64 {
        self.p
    }

    pub fn denom(self) -> i64 {
        self.q
    }

    pub fn to_radians<T: Real>(self) -> T {
        T::from_int(self.p) * T::PI() / T::from_int(self.q)
    }

    /// Angle of `exp(i * lambda * t)` reduced into `[0, 2*pi)` before
    /// conversion to floating point.
    pub fn phase_angle<T: Real>(self, lambda: i64) -> T {
        let modulus = 2 * i128::from(self.q);
        let r = (i128::from(self.p) * i128::from(lambda)).rem_euclid(modulus);
        T::from_int(r as i64) * T::PI() / T::from_int(self.q)
    }

    /// Human-readable form such as `1/4·π`.
    pub fn pi_label(self) -> String {
        format!("{}/{}·π", self.p, self.q)
    }
}

impl fmt::Display for RationalPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Accepts `p/q` or a bare integer `p`.
impl FromStr for RationalPi {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidTime(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q <= 0 {
            return Err(bad());
        }
        Self::new(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces() {
        let t = RationalPi::new(2, -8).unwrap();
        assert_eq!((t.numer(), t.denom()), (-1, 4));
        assert_eq!(RationalPi::new(0, 5).unwrap(), RationalPi::ZERO);
        assert!(RationalPi::new(1, 0).is_err());
    }

    #[test]
    fn parses() {
        assert_eq!("3/6".parse::<RationalPi>().unwrap(), RationalPi::new(1, 2).unwrap());
        assert_eq!("2".parse::<RationalPi>().unwrap(), RationalPi::new(2, 1).unwrap());
        assert!("1/0".parse::<RationalPi>().is_err());
        assert!("1/-2".parse::<RationalPi>().is_err());
        assert!("0.25".parse::<RationalPi>().is_err());
        assert_eq!(RationalPi::new(1, 4).unwrap().pi_label(), "1/4·π");
    }

    #[test]
    fn phase_is_reduced() {
        let t = RationalPi::new(1, 4).unwrap();
        let a: f64 = t.phase_angle(11);
        assert!((a - 3.0 * std::f64::consts::PI / 4.0).abs() < 1e-15);
        let b: f64 = t.phase_angle(-5);
        assert!((b - 3.0 * std::f64::consts::PI / 4.0).abs() < 1e-15);
        // huge products stay exact
        let c: f64 = RationalPi::new(1_000_000_007, 3).unwrap().phase_angle(1 << 40);
        assert!((0.0..2.0 * std::f64::consts::PI).contains(&c));
    }
}
