//! Command-line front end: file formats, JSON reports and subcommands.

use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use cubepst::census::{enumerate_census, Constraint, ScanOptions};
use cubepst::construct::{complement, direct_sum, hypercube, power, pst_to_target};
use cubepst::profile::{center, classify};
use cubepst::pst::{default_tolerance, detect_pst_with_tolerance, min_period_with_tolerance};
use cubepst::walk::{amplitude_entry, spectrum};
use cubepst::{BitVec, ConnectionSet, RationalPi};

pub mod format;
pub mod report;

pub use format::Format;
use report::{to_json, CensusJson, Float, Report, TolerancesJson, VerifyJson};

/// Environment variable holding the default numeric tolerance.
pub const TOL_ENV: &str = "CUBEPST_TOL";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{path}: {source}")]
    File { path: String, source: Box<CliError> },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] cubepst::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Output(String),
}

const AFTER_HELP: &str = "\
Bit strings are written with coordinate 1 first: the leftmost character is
coordinate 1 and the least significant bit of the integer encoding, so
00001 is e5 = 16. Times are rational multiples of pi given as p/q.
Exit status: 0 success, 2 when pst-verify finds no transfer, 1 on errors.";

#[derive(Debug, Parser)]
#[command(name = "cubepst", version, about = "Perfect state transfer on cubelike graphs", after_help = AFTER_HELP)]
pub struct Cli {
    /// Input and output format for connection sets.
    #[arg(long, value_enum, default_value_t, global = true)]
    pub format: Format,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Numeric tolerance; defaults by dimension when unset.
    #[arg(long, env = TOL_ENV, global = true)]
    pub tol: Option<f64>,
    /// Keep input column order instead of sorting.
    #[arg(long, global = true)]
    pub keep_order: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Profile, spectrum, transfer verdict and period.
    Analyze { input: PathBuf },
    /// Check |H(t)_{0,u}| >= 1 - tol numerically.
    PstVerify {
        input: PathBuf,
        /// Time as p/q, meaning p/q * pi.
        #[arg(long)]
        time: RationalPi,
        /// Target vertex as a bit string.
        #[arg(long)]
        target: String,
    },
    /// Minimum period and the phase there.
    Period { input: PathBuf },
    /// Eigenvalues with multiplicities.
    Spectrum { input: PathBuf },
    /// Edit a connection set (default: the hypercube) in at most two
    /// elements so that transfer from 0 to the target occurs at pi/2.
    ConstructTarget {
        input: Option<PathBuf>,
        #[arg(long)]
        target: String,
    },
    /// Complement of the connection set in the nonzero vectors.
    Complement { input: PathBuf },
    /// Cartesian product of two graphs.
    Product { left: PathBuf, right: PathBuf },
    /// Cartesian power.
    Power {
        input: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Classify spanning self-orthogonal connection sets up to linear equivalence.
    Census {
        #[arg(long)]
        dim: usize,
        /// even-so or doubly-even.
        #[arg(long, default_value = "even-so")]
        constraint: Constraint,
        /// Resumable scan state file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Number of scan chunks.
        #[arg(long, default_value_t = 256)]
        chunks: u32,
        /// Stop after this many batches of chunks.
        #[arg(long)]
        max_batches: Option<u32>,
    },
    /// CSV of |H(t)_{0,u}| sampled 64q times per pi up to p/q * pi.
    AmplitudeCurve {
        input: PathBuf,
        /// Target vertex; defaults to the center of the code.
        #[arg(long)]
        target: Option<String>,
        /// End time p/q; defaults to the minimum period.
        #[arg(long)]
        until: Option<RationalPi>,
    },
}

/// Text to print and, for pst-verify, the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub verdict: Option<bool>,
}

impl Outcome {
    fn text(stdout: String) -> Self {
        Self {
            stdout,
            verdict: None,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Some(false) => 2,
            _ => 0,
        }
    }
}

fn read_input(path: &Path, cli: &Cli) -> Result<ConnectionSet, CliError> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{name}: {e}")))?
    };
    format::parse(&text, cli.format, cli.keep_order).map_err(|e| CliError::File {
        path: name,
        source: Box::new(e),
    })
}

fn tolerance(cli: &Cli, dim: usize) -> Result<f64, CliError> {
    match cli.tol {
        None => Ok(default_tolerance(dim)),
        Some(t) if t > 0.0 && t < 1.0 => Ok(t),
        Some(t) => Err(CliError::Usage(format!("tolerance {t} must lie in (0, 1)"))),
    }
}

fn target_of(s: &str, dim: Option<usize>) -> Result<BitVec, CliError> {
    let v = BitVec::from_bit_str(s)?;
    if let Some(d) = dim {
        if v.dim() != d {
            return Err(CliError::Usage(format!(
                "target {s} has {} bits, graph dimension is {d}",
                v.dim()
            )));
        }
    }
    if v.is_zero() {
        return Err(cubepst::Error::ZeroTarget.into());
    }
    Ok(v)
}

fn fmt_complex(z: Complex64) -> String {
    format!("{:.12} {} {:.12}i", z.re, if z.im < 0.0 { '-' } else { '+' }, z.im.abs())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn build_report(c: &ConnectionSet, tol: f64) -> Result<Report, CliError> {
    let profile = classify(c);
    let verdict = detect_pst_with_tolerance(c, tol)?;
    let period = min_period_with_tolerance(c, tol)?;
    Ok(Report {
        input: c.into(),
        profile: (&profile).into(),
        spectrum: report::spectrum_json(&spectrum(c)),
        pst: (&verdict).into(),
        period: (&period).into(),
        tolerances: TolerancesJson {
            numeric: Float::new(tol),
        },
    })
}

fn analyze_text(c: &ConnectionSet, tol: f64) -> Result<String, CliError> {
    let p = classify(c);
    let v = detect_pst_with_tolerance(c, tol)?;
    let period = min_period_with_tolerance(c, tol)?;
    let mut out = String::new();
    writeln!(out, "dimension {}, valency {}", c.dim(), c.len()).unwrap();
    writeln!(
        out,
        "divisor {}, row gcd {}, center {}, sigma {}",
        p.divisor, p.row_gcd, p.center, p.sigma
    )
    .unwrap();
    writeln!(
        out,
        "even {}, doubly even {}, self-orthogonal {}, spanning {}",
        yes_no(p.even),
        yes_no(p.doubly_even),
        yes_no(p.self_orthogonal),
        yes_no(p.spanning)
    )
    .unwrap();
    out.push_str(&spectrum_text(c));
    match (v.target, v.phase) {
        (Some(u), Some(phase)) => writeln!(
            out,
            "transfer: 0 -> {u} at {}, phase {}, certified by {}",
            v.time.pi_label(),
            fmt_complex(phase),
            v.certified_by.as_str()
        ),
        (Some(u), None) => writeln!(
            out,
            "transfer: 0 -> {u} at {}, certified by {}",
            v.time.pi_label(),
            v.certified_by.as_str()
        ),
        _ => writeln!(out, "transfer: none (certified by {})", v.certified_by.as_str()),
    }
    .unwrap();
    writeln!(out, "period: {}, alpha {}", period.period.pi_label(), fmt_complex(period.alpha)).unwrap();
    Ok(out)
}

fn spectrum_text(c: &ConnectionSet) -> String {
    let terms: Vec<String> = spectrum(c)
        .entries()
        .iter()
        .map(|(e, k)| format!("{e}^{k}"))
        .collect();
    format!("spectrum: {}\n", terms.join(" "))
}

fn emit_graph(c: &ConnectionSet, cli: &Cli) -> Result<String, CliError> {
    if cli.json {
        let tol = tolerance(cli, c.dim())?;
        to_json(&build_report(c, tol)?)
    } else {
        Ok(format::print(c, cli.format))
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Analyze { input } => {
            let c = read_input(input, cli)?;
            let tol = tolerance(cli, c.dim())?;
            let text = if cli.json {
                to_json(&build_report(&c, tol)?)?
            } else {
                analyze_text(&c, tol)?
            };
            Ok(Outcome::text(text))
        }
        Command::PstVerify {
            input,
            time,
            target,
        } => {
            let c = read_input(input, cli)?;
            let tol = tolerance(cli, c.dim())?;
            let u = target_of(target, Some(c.dim()))?;
            let h: Complex64 = amplitude_entry(&c, *time, BitVec::zero(c.dim())?, u)?;
            let verdict = h.norm() >= 1.0 - tol;
            let stdout = if cli.json {
                to_json(&VerifyJson {
                    time: time.pi_label(),
                    target: u.into(),
                    amplitude: h.into(),
                    modulus: Float::new(h.norm()),
                    tolerance: Float::new(tol),
                    verdict,
                })?
            } else {
                format!(
                    "|H({})_(0,{u})| = {:.15}\ntransfer: {}\n",
                    time.pi_label(),
                    h.norm(),
                    yes_no(verdict)
                )
            };
            Ok(Outcome {
                stdout,
                verdict: Some(verdict),
            })
        }
        Command::Period { input } => {
            let c = read_input(input, cli)?;
            let tol = tolerance(cli, c.dim())?;
            let p = min_period_with_tolerance(&c, tol)?;
            let text = if cli.json {
                to_json(&report::PeriodJson::from(&p))?
            } else {
                format!("period: {}, alpha {}\n", p.period.pi_label(), fmt_complex(p.alpha))
            };
            Ok(Outcome::text(text))
        }
        Command::Spectrum { input } => {
            let c = read_input(input, cli)?;
            let text = if cli.json {
                to_json(&report::spectrum_json(&spectrum(&c)))?
            } else {
                spectrum_text(&c)
            };
            Ok(Outcome::text(text))
        }
        Command::ConstructTarget { input, target } => {
            let base = match input {
                Some(path) => read_input(path, cli)?,
                None => hypercube(BitVec::from_bit_str(target)?.dim())?,
            };
            let u = target_of(target, Some(base.dim()))?;
            let c = pst_to_target(&base, u)?;
            Ok(Outcome::text(emit_graph(&c, cli)?))
        }
        Command::Complement { input } => {
            let c = complement(&read_input(input, cli)?)?;
            Ok(Outcome::text(emit_graph(&c, cli)?))
        }
        Command::Product { left, right } => {
            let c = direct_sum(&read_input(left, cli)?, &read_input(right, cli)?)?;
            Ok(Outcome::text(emit_graph(&c, cli)?))
        }
        Command::Power { input, k } => {
            let c = power(&read_input(input, cli)?, *k)?;
            Ok(Outcome::text(emit_graph(&c, cli)?))
        }
        Command::Census {
            dim,
            constraint,
            checkpoint,
            chunks,
            max_batches,
        } => {
            let opts = ScanOptions {
                chunks: *chunks,
                checkpoint: checkpoint.clone(),
                max_batches: *max_batches,
                ..ScanOptions::default()
            };
            let r = enumerate_census(*dim, *constraint, &opts)?;
            if cli.json {
                return Ok(Outcome::text(to_json(&CensusJson::from(&r))?));
            }
            let mut out = String::new();
            writeln!(
                out,
                "# {} orbits of spanning {} connection sets in dimension {}",
                r.orbit_reps.len(),
                r.constraint.name(),
                r.dim
            )
            .unwrap();
            for (k, rep) in r.orbit_reps.iter().enumerate() {
                let partner = r.complement_partner[k]
                    .map(|j| format!("complement of orbit {}", j + 1))
                    .unwrap_or_else(|| "complement outside the census".into());
                writeln!(
                    out,
                    "\n# orbit {}: valency {}, size {}, {partner}",
                    k + 1,
                    r.valencies[k],
                    r.orbit_sizes[k]
                )
                .unwrap();
                out.push_str(&format::print(rep, cli.format));
            }
            writeln!(
                out,
                "\n# {} spanning survivors; {} non-spanning survivors in {} orbits; spectra pairwise distinct: {}",
                r.raw_survivors,
                r.non_spanning_survivors,
                r.non_spanning_orbits,
                yes_no(r.spectra_distinct)
            )
            .unwrap();
            Ok(Outcome::text(out))
        }
        Command::AmplitudeCurve {
            input,
            target,
            until,
        } => {
            let c = read_input(input, cli)?;
            let u = match target {
                Some(s) => target_of(s, Some(c.dim()))?,
                None => center(&c),
            };
            let end = match until {
                Some(t) => *t,
                None => RationalPi::new(1, i64::from(c.divisor()))?,
            };
            if end.numer() <= 0 {
                return Err(CliError::Usage(format!("end time {end} must be positive")));
            }
            let zero = BitVec::zero(c.dim())?;
            let steps = 64 * end.denom();
            let mut out = String::from("t,modulus\n");
            for k in 0..=64 * end.numer() {
                let t = RationalPi::new(k, steps)?;
                let h: Complex64 = amplitude_entry(&c, t, zero, u)?;
                writeln!(out, "{:.16e},{:.16e}", t.to_radians::<f64>(), h.norm()).unwrap();
            }
            Ok(Outcome::text(out))
        }
    }
}
