//! Binary checkpoint of a partially completed census scan.
//!
//! All integers are little endian.
//!
//! | offset | size | field                                        |
//! |--------|------|----------------------------------------------|
//! | 0      | 8    | magic `CUBEPSTK`                             |
//! | 8      | 2    | format version (1)                           |
//! | 10     | 1    | dimension                                    |
//! | 11     | 1    | reserved, 0                                  |
//! | 12     | 4    | total number of scan chunks                  |
//! | 16     | 4    | next chunk to scan                           |
//! | 20     | 8    | number of survivor records `n`               |
//! | 28     | 5n   | records: membership mask `u32`, class `u8`   |
//!
//! Class bytes: 0 even-not-doubly-even spanning, 1 doubly-even spanning,
//! 2 even-not-doubly-even non-spanning, 3 doubly-even non-spanning.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

pub const MAGIC: &[u8; 8] = b"CUBEPSTK";
pub const VERSION: u16 = 1;
const HEADER_LEN: usize = 28;
const RECORD_LEN: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub dim: u8,
    pub total_chunks: u32,
    pub next_chunk: u32,
    /// `(membership mask, class byte)`.
    pub records: Vec<(u32, u8)>,
}

impl Checkpoint {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(HEADER_LEN + RECORD_LEN * self.records.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.push(self.dim);
        out.push(0);
        out.extend_from_slice(&self.total_chunks.to_le_bytes());
        out.extend_from_slice(&self.next_chunk.to_le_bytes());
        out.extend_from_slice(&(self.records.len() as u64).to_le_bytes());
        for &(mask, class) in &self.records {
            out.extend_from_slice(&mask.to_le_bytes());
            out.push(class);
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let bad = |msg: &str| Error::Checkpoint(msg.to_string());
        if bytes.len() < HEADER_LEN {
            return Err(bad("truncated header"));
        }
        if &bytes[0..8] != MAGIC {
            return Err(bad("bad magic"));
        }
        let version = u16::from_le_bytes([bytes[8], bytes[9]]);
        if version != VERSION {
            return Err(Error::Checkpoint(format!("unsupported version {version}")));
        }
        let dim = bytes[10];
        let u32_at = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().expect("4 bytes"));
        let total_chunks = u32_at(12);
        let next_chunk = u32_at(16);
        if next_chunk > total_chunks {
            return Err(bad("scan position beyond end"));
        }
        let n = u64::from_le_bytes(bytes[20..28].try_into().expect("8 bytes")) as usize;
        if bytes.len() != HEADER_LEN + RECORD_LEN * n {
            return Err(bad("record section length mismatch"));
        }
        let records = bytes[HEADER_LEN..]
            .chunks_exact(RECORD_LEN)
            .map(|r| {
                let class = r[4];
                if class > 3 {
                    return Err(bad("unknown class byte"));
                }
                Ok((u32::from_le_bytes(r[0..4].try_into().expect("4 bytes")), class))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim,
            total_chunks,
            next_chunk,
            records,
        })
    }

    /// Writes through a temporary sibling file and renames it into place.
    pub fn save(&self, path: &Path) -> Result<()> {
        let io = |e: std::io::Error| Error::Checkpoint(format!("{}: {e}", path.display()));
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(&self.to_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, path).map_err(io)
    }

    /// `Ok(None)` when the file does not exist.
    pub fn load(path: &Path) -> Result<Option<Self>> {
        match fs::read(path) {
            Ok(bytes) => Self::from_bytes(&bytes).map(Some),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(Error::Checkpoint(format!("{}: {e}", path.display()))),
        }
    }
}
