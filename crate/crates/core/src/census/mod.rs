//! Exhaustive census of connection sets in dimension at most 5 whose codes
//! are self-orthogonal with divisor 2 mod 4, or doubly even, grouped into
//! orbits under GL(d, 2).
//!
//! The scan walks the subsets of `Z_2^d \ {0, 1...1}` in Gray-code order.
//! Every visited subset `S` stands for two candidates: `S` itself and its
//! complement in `Z_2^d \ {0}`, whose counters are the full-set counters
//! minus those of `S`. This covers each subset of `Z_2^d \ {0}` exactly once.

pub mod checkpoint;
pub mod group;
pub mod state;

use std::path::PathBuf;
use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::ConnectionSet;
use crate::walk::spectrum;

pub use checkpoint::Checkpoint;
pub use group::{canonical_form, group_order, LinearMap};
pub use state::{PredicateTables, PredicateVerdict, SurvivorPredicateState};

use group::{fold_elements, lex_key, map_mask, set_of_mask};

/// Largest dimension the census and full canonicalization support.
pub const MAX_CENSUS_DIM: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constraint {
    /// Self-orthogonal with divisor congruent to 2 mod 4.
    EvenSelfOrthogonal,
    /// Divisor divisible by 4 (self-orthogonality follows).
    DoublyEven,
}

impl Constraint {
    pub const ALL: [Constraint; 2] = [Constraint::EvenSelfOrthogonal, Constraint::DoublyEven];

    pub fn name(self) -> &'static str {
        match self {
            Constraint::EvenSelfOrthogonal => "even-so",
            Constraint::DoublyEven => "doubly-even",
        }
    }

    /// Class of a self-orthogonal code with the given divisor.
    pub fn of_divisor(divisor: u32) -> Option<Self> {
        match divisor % 4 {
            2 => Some(Constraint::EvenSelfOrthogonal),
            0 => Some(Constraint::DoublyEven),
            _ => None,
        }
    }

    fn class_byte(self, spanning: bool) -> u8 {
        let base = match self {
            Constraint::EvenSelfOrthogonal => 0,
            Constraint::DoublyEven => 1,
        };
        if spanning {
            base
        } else {
            base + 2
        }
    }

    fn from_class_byte(b: u8) -> (Self, bool) {
        let c = if b.is_multiple_of(2) {
            Constraint::EvenSelfOrthogonal
        } else {
            Constraint::DoublyEven
        };
        (c, b < 2)
    }
}

impl std::str::FromStr for Constraint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even-so" => Ok(Constraint::EvenSelfOrthogonal),
            "doubly-even" => Ok(Constraint::DoublyEven),
            _ => Err(Error::Unsupported(format!("unknown census constraint {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Number of contiguous Gray-code ranges; rounded to a power of two.
    pub chunks: u32,
    /// Chunks processed between checkpoint writes.
    pub batch: u32,
    pub checkpoint: Option<PathBuf>,
    /// Stop with [`Error::BudgetExceeded`] after this many batches.
    pub max_batches: Option<u32>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            chunks: 256,
            batch: 16,
            checkpoint: None,
            max_batches: None,
        }
    }
}

/// Survivors of the census predicate, by class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome {
    pub dim: usize,
    /// `(membership mask, constraint, spanning)`, sorted by mask.
    pub survivors: Vec<(u32, Constraint, bool)>,
}

impl ScanOutcome {
    pub fn masks(&self, constraint: Constraint, spanning: bool) -> Vec<u32> {
        self.survivors
            .iter()
            .filter(|&&(_, c, s)| c == constraint && s == spanning)
            .map(|&(m, _, _)| m)
            .collect()
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_CENSUS_DIM {
        return Err(Error::Unsupported(format!(
            "census dimension {dim} (supported: 1..={MAX_CENSUS_DIM})"
        )));
    }
    Ok(())
}

#[inline]
fn record(state: &SurvivorPredicateState<'_>, out: &mut Vec<(u32, u8)>) {
    let v = state.verdict();
    if let Some(c) = Constraint::of_divisor(v.divisor) {
        out.push((state.members(), c.class_byte(v.spanning)));
    }
}

fn scan_chunk(tables: &PredicateTables, start: u64, len: u64) -> Vec<(u32, u8)> {
    let gray = |i: u64| (i ^ (i >> 1)) as u32;
    let mut out = Vec::new();
    let mut s = SurvivorPredicateState::from_members(tables, gray(start) << 1);
    let mut visit = |s: &SurvivorPredicateState<'_>| {
        if !s.is_empty() && s.is_self_orthogonal() {
            record(s, &mut out);
        }
        if s.complement_is_self_orthogonal() {
            record(&s.complement(), &mut out);
        }
    };
    visit(&s);
    for i in start + 1..start + len {
        s.toggle(i.trailing_zeros() + 1);
        visit(&s);
    }
    out
}

/// Runs (or resumes) the subset scan.
pub fn scan(dim: usize, opts: &ScanOptions) -> Result<ScanOutcome> {
    check_dim(dim)?;
    let tables = PredicateTables::new(dim);
    let free_bits = (1u32 << dim) - 2;
    let total: u64 = 1 << free_bits;
    let chunks = u64::from(opts.chunks.max(1)).next_power_of_two().min(total) as u32;
    let chunk_len = total / u64::from(chunks);
    let batch = opts.batch.max(1);

    let mut next = 0u32;
    let mut records: Vec<(u32, u8)> = Vec::new();
    if let Some(path) = &opts.checkpoint {
        if let Some(cp) = Checkpoint::load(path)? {
            if usize::from(cp.dim) != dim || cp.total_chunks != chunks {
                return Err(Error::Checkpoint(format!(
                    "{} was written for dim {} with {} chunks, not dim {dim} with {chunks}",
                    path.display(),
                    cp.dim,
                    cp.total_chunks
                )));
            }
            next = cp.next_chunk;
            records = cp.records;
        }
    }

    let mut batches_run = 0u32;
    while next < chunks {
        if opts.max_batches.is_some_and(|max| batches_run >= max) {
            return Err(Error::BudgetExceeded {
                completed: next,
                total: chunks,
            });
        }
        let end = next.saturating_add(batch).min(chunks);
        let found: Vec<Vec<(u32, u8)>> = (next..end)
            .into_par_iter()
            .map(|k| scan_chunk(&tables, u64::from(k) * chunk_len, chunk_len))
            .collect();
        records.extend(found.into_iter().flatten());
        next = end;
        batches_run += 1;
        if let Some(path) = &opts.checkpoint {
            Checkpoint {
                dim: dim as u8,
                total_chunks: chunks,
                next_chunk: next,
                records: records.clone(),
            }
            .save(path)?;
        }
    }

    records.sort_unstable();
    records.dedup();
    let survivors = records
        .into_iter()
        .map(|(m, b)| {
            let (c, spanning) = Constraint::from_class_byte(b);
            (m, c, spanning)
        })
        .collect();
    Ok(ScanOutcome { dim, survivors })
}

/// Partition of a GL-closed set of membership masks into orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbits {
    /// Canonical (lexicographically least) member of each orbit.
    pub representatives: Vec<u32>,
    pub sizes: Vec<u64>,
    /// Orbit index of each input mask, aligned with the sorted input.
    pub orbit_of: Vec<usize>,
}

#[derive(Debug)]
struct OrbitAcc {
    best: u32,
    marked: u64,
    problem: Option<String>,
}

/// Groups sorted, distinct masks into GL(dim, 2) orbits. Fails if some image
/// of a member falls outside the input set.
pub fn orbit_census(survivors: &[u32], dim: usize) -> Result<Orbits> {
    check_dim(dim)?;
    if survivors.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Inconsistency("survivor masks must be sorted and distinct".into()));
    }
    const FREE: u32 = u32::MAX;
    let assigned: Vec<AtomicU32> = survivors.iter().map(|_| AtomicU32::new(FREE)).collect();
    let order = group_order(dim);
    let mut representatives = Vec::new();
    let mut sizes = Vec::new();

    for (idx, &seed) in survivors.iter().enumerate() {
        if assigned[idx].load(Ordering::Relaxed) != FREE {
            continue;
        }
        let k = representatives.len() as u32;
        let acc = fold_elements(
            dim,
            || OrbitAcc {
                best: seed,
                marked: 0,
                problem: None,
            },
            |mut acc, g| {
                let img = map_mask(&g.table(), seed);
                if lex_key(img) > lex_key(acc.best) {
                    acc.best = img;
                }
                match survivors.binary_search(&img) {
                    Ok(j) => match assigned[j].compare_exchange(FREE, k, Ordering::Relaxed, Ordering::Relaxed) {
                        Ok(_) => acc.marked += 1,
                        Err(prev) if prev == k => {}
                        Err(prev) => {
                            acc.problem.get_or_insert(format!("mask {img:#x} lies in orbits {prev} and {k}"));
                        }
                    },
                    Err(_) => {
                        acc.problem.get_or_insert(format!(
                            "image {img:#x} of survivor {seed:#x} is not a survivor"
                        ));
                    }
                }
                acc
            },
            |a, b| OrbitAcc {
                best: if lex_key(a.best) >= lex_key(b.best) { a.best } else { b.best },
                marked: a.marked + b.marked,
                problem: a.problem.or(b.problem),
            },
        )?;
        if let Some(p) = acc.problem {
            return Err(Error::Inconsistency(p));
        }
        if !order.is_multiple_of(acc.marked) {
            return Err(Error::Inconsistency(format!(
                "orbit size {} does not divide |GL({dim},2)| = {order}",
                acc.marked
            )));
        }
        representatives.push(acc.best);
        sizes.push(acc.marked);
    }

    let orbit_of: Vec<usize> = assigned
        .iter()
        .map(|a| a.load(Ordering::Relaxed) as usize)
        .collect();
    if sizes.iter().sum::<u64>() != survivors.len() as u64 {
        return Err(Error::Inconsistency("orbit sizes do not cover the survivors".into()));
    }
    Ok(Orbits {
        representatives,
        sizes,
        orbit_of,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub dim: usize,
    pub constraint: Constraint,
    /// Canonical forms, ordered by valency and then lexicographically.
    pub orbit_reps: Vec<ConnectionSet>,
    pub orbit_sizes: Vec<u64>,
    /// Orbit holding the complements of each orbit's members, if in the census.
    pub complement_partner: Vec<Option<usize>>,
    pub valencies: Vec<usize>,
    /// Number of spanning survivors, equal to the sum of orbit sizes.
    pub raw_survivors: u64,
    /// Survivors of the same class that do not span.
    pub non_spanning_survivors: u64,
    pub non_spanning_orbits: usize,
    /// Whether the representatives have pairwise distinct spectra, which
    /// makes them pairwise non-isomorphic as graphs.
    pub spectra_distinct: bool,
}

impl CensusResult {
    /// Complement pairs `(i, j)` with `i <= j`.
    pub fn complement_pairing(&self) -> Vec<(usize, usize)> {
        self.complement_partner
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.filter(|&j| i <= j).map(|j| (i, j)))
            .collect()
    }
}

fn build_result(outcome: &ScanOutcome, constraint: Constraint) -> Result<CensusResult> {
    let dim = outcome.dim;
    let spanning = outcome.masks(constraint, true);
    let non_spanning = outcome.masks(constraint, false);
    let orbits = orbit_census(&spanning, dim)?;
    let non_spanning_orbits = orbit_census(&non_spanning, dim)?.representatives.len();

    let mut idx: Vec<usize> = (0..orbits.representatives.len()).collect();
    let reps = &orbits.representatives;
    idx.sort_by_key(|&k| (reps[k].count_ones(), std::cmp::Reverse(lex_key(reps[k]))));
    let mut new_pos = vec![0usize; idx.len()];
    for (pos, &k) in idx.iter().enumerate() {
        new_pos[k] = pos;
    }

    let full = PredicateTables::new(dim).full_members();
    let mut orbit_reps = Vec::new();
    let mut orbit_sizes = Vec::new();
    let mut complement_partner = Vec::new();
    let mut valencies = Vec::new();
    for &k in &idx {
        let set = set_of_mask(dim, reps[k])?;
        let comp = full ^ reps[k];
        let partner = spanning
            .binary_search(&comp)
            .ok()
            .map(|j| new_pos[orbits.orbit_of[j]]);
        valencies.push(set.len());
        orbit_reps.push(set);
        orbit_sizes.push(orbits.sizes[k]);
        complement_partner.push(partner);
    }
    let mut spectra: Vec<_> = orbit_reps.iter().map(spectrum).collect();
    let count = spectra.len();
    spectra.sort_by(|a, b| a.entries().cmp(b.entries()));
    spectra.dedup();

    Ok(CensusResult {
        dim,
        constraint,
        orbit_reps,
        orbit_sizes,
        complement_partner,
        valencies,
        raw_survivors: spanning.len() as u64,
        non_spanning_survivors: non_spanning.len() as u64,
        non_spanning_orbits,
        spectra_distinct: spectra.len() == count,
    })
}

/// Census for one constraint.
pub fn enumerate_census(dim: usize, constraint: Constraint, opts: &ScanOptions) -> Result<CensusResult> {
    let outcome = scan(dim, opts)?;
    build_result(&outcome, constraint)
}

/// Census for every constraint from a single scan.
pub fn enumerate_all(dim: usize, opts: &ScanOptions) -> Result<Vec<CensusResult>> {
    let outcome = scan(dim, opts)?;
    Constraint::ALL
        .iter()
        .map(|&c| build_result(&outcome, c))
        .collect()
}

pub fn census_from_outcome(outcome: &ScanOutcome, constraint: Constraint) -> Result<CensusResult> {
    build_result(outcome, constraint)
}
