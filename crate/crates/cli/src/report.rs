//! JSON documents. Keys keep declaration order; floats carry 17
//! significant digits.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use cubepst::census::CensusResult;
use cubepst::{BitVec, CodeProfile, ConnectionSet, PeriodInfo, PstVerdict, Spectrum};

use crate::CliError;

/// A float rendered as `d.dddddddddddddddde±x`; non-finite values become `null`.
#[derive(Debug)]
pub struct Float(Box<RawValue>);

impl Float {
    pub fn new(x: f64) -> Self {
        let text = if x.is_finite() {
            format!("{x:.16e}")
        } else {
            "null".to_string()
        };
        Self(RawValue::from_string(text).expect("valid JSON number"))
    }
}

impl Serialize for Float {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[derive(Debug, Serialize)]
pub struct ComplexJson {
    pub re: Float,
    pub im: Float,
}

impl From<Complex64> for ComplexJson {
    fn from(z: Complex64) -> Self {
        Self {
            re: Float::new(z.re),
            im: Float::new(z.im),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VectorJson {
    pub bits: String,
    pub int: u32,
}

impl From<BitVec> for VectorJson {
    fn from(v: BitVec) -> Self {
        Self {
            bits: v.to_string(),
            int: v.bits(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct InputJson {
    pub d: usize,
    pub m: usize,
    pub valency: usize,
}

impl From<&ConnectionSet> for InputJson {
    fn from(c: &ConnectionSet) -> Self {
        Self {
            d: c.dim(),
            m: c.len(),
            valency: c.len(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ProfileJson {
    pub divisor: u32,
    pub row_gcd: u32,
    pub center: VectorJson,
    pub sigma: VectorJson,
    pub even: bool,
    pub doubly_even: bool,
    pub self_orthogonal: bool,
    pub spanning: bool,
}

impl From<&CodeProfile> for ProfileJson {
    fn from(p: &CodeProfile) -> Self {
        Self {
            divisor: p.divisor,
            row_gcd: p.row_gcd,
            center: p.center.into(),
            sigma: p.sigma.into(),
            even: p.even,
            doubly_even: p.doubly_even,
            self_orthogonal: p.self_orthogonal,
            spanning: p.spanning,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct EigenJson {
    pub eigenvalue: i64,
    pub multiplicity: u64,
}

pub fn spectrum_json(s: &Spectrum) -> Vec<EigenJson> {
    s.entries()
        .iter()
        .map(|&(eigenvalue, multiplicity)| EigenJson {
            eigenvalue,
            multiplicity,
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct PstJson {
    pub occurs: bool,
    pub target: Option<VectorJson>,
    pub time: String,
    pub phase: Option<ComplexJson>,
    pub max_off_diagonal: Option<Float>,
    pub certified_by: &'static str,
}

impl From<&PstVerdict> for PstJson {
    fn from(v: &PstVerdict) -> Self {
        Self {
            occurs: v.occurs,
            target: v.target.map(Into::into),
            time: v.time.pi_label(),
            phase: v.phase.map(Into::into),
            max_off_diagonal: v.max_off_diagonal.map(Float::new),
            certified_by: v.certified_by.as_str(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PeriodJson {
    pub period: String,
    pub alpha: ComplexJson,
    pub deviation: Option<Float>,
}

impl From<&PeriodInfo> for PeriodJson {
    fn from(p: &PeriodInfo) -> Self {
        Self {
            period: p.period.pi_label(),
            alpha: p.alpha.into(),
            deviation: p.deviation.map(Float::new),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct TolerancesJson {
    pub numeric: Float,
}

/// Full analysis of one connection set.
#[derive(Debug, Serialize)]
pub struct Report {
    pub input: InputJson,
    pub profile: ProfileJson,
    pub spectrum: Vec<EigenJson>,
    pub pst: PstJson,
    pub period: PeriodJson,
    pub tolerances: TolerancesJson,
}

#[derive(Debug, Serialize)]
pub struct VerifyJson {
    pub time: String,
    pub target: VectorJson,
    pub amplitude: ComplexJson,
    pub modulus: Float,
    pub tolerance: Float,
    pub verdict: bool,
}

#[derive(Debug, Serialize)]
pub struct OrbitJson {
    pub valency: usize,
    pub size: u64,
    pub complement_partner: Option<usize>,
    pub elements: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct CensusJson {
    pub dim: usize,
    pub constraint: &'static str,
    pub orbits: Vec<OrbitJson>,
    pub raw_survivors: u64,
    pub non_spanning_survivors: u64,
    pub non_spanning_orbits: usize,
    pub spectra_distinct: bool,
}

impl From<&CensusResult> for CensusJson {
    fn from(r: &CensusResult) -> Self {
        let orbits = r
            .orbit_reps
            .iter()
            .enumerate()
            .map(|(k, c)| OrbitJson {
                valency: r.valencies[k],
                size: r.orbit_sizes[k],
                complement_partner: r.complement_partner[k],
                elements: c.iter().map(|v| v.to_string()).collect(),
            })
            .collect();
        Self {
            dim: r.dim,
            constraint: r.constraint.name(),
            orbits,
            raw_survivors: r.raw_survivors,
            non_spanning_survivors: r.non_spanning_survivors,
            non_spanning_orbits: r.non_spanning_orbits,
            spectra_distinct: r.spectra_distinct,
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc).map_err(|e| CliError::Output(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
