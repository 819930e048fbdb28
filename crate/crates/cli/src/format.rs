//! Text formats for connection sets.
//!
//! A matrix file holds `d m` on its first data line followed by `d` rows of
//! `m` space-separated bits; column `j` is element `j` of the set. A set
//! file holds one bit string per line. In both, lines starting with `#` and
//! blank lines are ignored, and the leftmost character of a bit string is
//! coordinate 1, the least significant bit of the integer encoding.

use std::fmt::Write as _;

use cubepst::gf2::MAX_DIM;
use cubepst::{BitVec, ColumnOrder, ConnectionSet};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Matrix,
    Set,
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

fn order(keep_order: bool) -> ColumnOrder {
    if keep_order {
        ColumnOrder::AsGiven
    } else {
        ColumnOrder::Sorted
    }
}

pub fn parse(text: &str, format: Format, keep_order: bool) -> Result<ConnectionSet, CliError> {
    match format {
        Format::Matrix => parse_matrix(text, keep_order),
        Format::Set => parse_set(text, keep_order),
    }
}

pub fn parse_matrix(text: &str, keep_order: bool) -> Result<ConnectionSet, CliError> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(0, "empty input"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [d, m] = dims[..] else {
        return Err(parse_err(header_line, "expected header `d m`"));
    };
    let d: usize = d
        .parse()
        .map_err(|_| parse_err(header_line, format!("bad row count `{d}`")))?;
    let m: usize = m
        .parse()
        .map_err(|_| parse_err(header_line, format!("bad column count `{m}`")))?;
    if d == 0 || d > MAX_DIM {
        return Err(parse_err(header_line, format!("dimension {d} outside 1..={MAX_DIM}")));
    }
    if m == 0 || (m as u64) >= 1u64 << d {
        return Err(parse_err(
            header_line,
            format!("column count {m} outside 1..2^{d}"),
        ));
    }

    let mut columns = vec![0u32; m];
    let mut last_line = header_line;
    for i in 0..d {
        let (line, row) = lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("expected {d} rows, found {i}")))?;
        let bits: Vec<&str> = row.split_whitespace().collect();
        if bits.len() != m {
            return Err(parse_err(line, format!("expected {m} entries, found {}", bits.len())));
        }
        for (j, b) in bits.iter().enumerate() {
            match *b {
                "0" => {}
                "1" => columns[j] |= 1 << i,
                other => return Err(parse_err(line, format!("entry `{other}` is not 0 or 1"))),
            }
        }
        last_line = line;
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "unexpected data after the matrix"));
    }

    if let Some(j) = columns.iter().position(|&c| c == 0) {
        return Err(parse_err(last_line, format!("column {} is zero", j + 1)));
    }
    for j in 0..m {
        if let Some(k) = (j + 1..m).find(|&k| columns[k] == columns[j]) {
            return Err(parse_err(
                last_line,
                format!("columns {} and {} are equal (not projective)", j + 1, k + 1),
            ));
        }
    }
    Ok(ConnectionSet::with_order(d, columns, order(keep_order))?)
}

pub fn parse_set(text: &str, keep_order: bool) -> Result<ConnectionSet, CliError> {
    let mut dim = None;
    let mut seen: Vec<(u32, usize)> = Vec::new();
    for (line, s) in data_lines(text) {
        let v = BitVec::from_bit_str(s).map_err(|_| parse_err(line, format!("bad bit string `{s}`")))?;
        match dim {
            None => dim = Some(v.dim()),
            Some(d) if d != v.dim() => {
                return Err(parse_err(line, format!("expected {d} bits, found {}", v.dim())));
            }
            _ => {}
        }
        if v.is_zero() {
            return Err(parse_err(line, "zero vector"));
        }
        if let Some(&(_, first)) = seen.iter().find(|(b, _)| *b == v.bits()) {
            return Err(parse_err(line, format!("duplicate of line {first} (not projective)")));
        }
        seen.push((v.bits(), line));
    }
    let dim = dim.ok_or_else(|| parse_err(0, "empty input"))?;
    Ok(ConnectionSet::with_order(
        dim,
        seen.into_iter().map(|(b, _)| b),
        order(keep_order),
    )?)
}

pub fn print(c: &ConnectionSet, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Matrix => {
            writeln!(out, "{} {}", c.dim(), c.len()).unwrap();
            for row in c.matrix() {
                let cells: Vec<&str> = row.iter().map(|&b| if b == 1 { "1" } else { "0" }).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
        }
        Format::Set => {
            for v in c.iter() {
                writeln!(out, "{v}").unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubepst::construct::example_graph;

    const EXAMPLE: &str = include_str!("../fixtures/example.matrix");

    #[test]
    fn fixture_is_the_example() {
        let c = parse_matrix(EXAMPLE, true).unwrap();
        assert_eq!(c.elements(), example_graph().elements());
        assert!(parse_matrix(EXAMPLE, false).unwrap().same_set(&example_graph()));
    }

    #[test]
    fn set_file_bit_order() {
        let c = parse_set("00001\n00010\n", true).unwrap();
        assert_eq!(c.elements(), &[16, 8]);
    }

    #[test]
    fn equal_columns_rejected_with_line() {
        let err = parse_matrix("# two equal columns\n2 2\n1 1\n0 0\n", false).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 4, .. }), "{err}");
        assert!(err.to_string().contains("not projective"));
    }

    #[test]
    fn malformed_lines_report_position() {
        let cases = [
            ("2\n", 1),
            ("2 2\n1 0\n", 2),
            ("2 2\n1 0\n0 2\n", 3),
            ("2 2\n1 0\n0 1 1\n", 3),
            ("2 2\n1 0\n\n0 0\n", 4),
            ("2 2\n1 0\n0 1\n1 1\n", 4),
            ("40 1\n", 1),
            ("2 4\n", 1),
        ];
        for (text, line) in cases {
            match parse_matrix(text, false) {
                Err(CliError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        let set_cases = [("01\n10\n01\n", 3), ("01\n110\n", 2), ("01\n00\n", 2), ("# c\n0x\n", 2)];
        for (text, line) in set_cases {
            match parse_set(text, false) {
                Err(CliError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }
}
