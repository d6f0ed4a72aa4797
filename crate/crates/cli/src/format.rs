//! Matrix text files and solution files.
//!
//! A matrix file has one row per line. Entries are the characters `0` and `1`,
//! optionally separated by commas or whitespace. Lines whose first non-blank
//! character is `#` are comments; blank lines are skipped. Every row must have
//! the same number of entries.

use std::path::Path;

use modresc_core::{BoolMatrix, ModRescPair};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: unexpected character {found:?} (expected '0' or '1')")]
    BadEntry { line: usize, column: usize, found: char },
    #[error("line {line}: row has {found} entries, expected {expected}")]
    RaggedRow { line: usize, expected: usize, found: usize },
    #[error("no matrix rows found")]
    Empty,
    #[error("solution file: {0}")]
    Solution(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub fn parse_matrix(text: &str) -> Result<BoolMatrix, FormatError> {
    let mut rows: Vec<Vec<bool>> = Vec::new();
    let mut first_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for (col, ch) in raw.chars().enumerate() {
            match ch {
                '0' => row.push(false),
                '1' => row.push(true),
                ',' => {}
                c if c.is_whitespace() => {}
                c => return Err(FormatError::BadEntry { line, column: col + 1, found: c }),
            }
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(FormatError::RaggedRow { line, expected: first.len(), found: row.len() });
            }
        } else {
            first_line = line;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(FormatError::Empty);
    }
    if rows[0].is_empty() {
        return Err(FormatError::RaggedRow { line: first_line, expected: 1, found: 0 });
    }
    Ok(BoolMatrix::from_rows(&rows).expect("rows checked to be rectangular"))
}

/// Reads a matrix file; `-` means standard input.
pub fn load_matrix(path: &Path) -> Result<BoolMatrix, FormatError> {
    parse_matrix(&read_input(path)?)
}

pub fn read_input(path: &Path) -> Result<String, FormatError> {
    let io_err = |e: std::io::Error| FormatError::Io { path: path.display().to_string(), message: e.to_string() };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

/// One line per row, entries concatenated without separators.
pub fn write_matrix(m: &BoolMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(if m.get(i, j) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn matrix_to_json(m: &BoolMatrix) -> Vec<Vec<u8>> {
    m.to_rows()
}

fn matrix_from_json(v: &Value, key: &str) -> Result<BoolMatrix, FormatError> {
    let err = |msg: String| FormatError::Solution(format!("\"{key}\": {msg}"));
    let rows = v.get(key).and_then(Value::as_array).ok_or_else(|| err("missing or not an array".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| err(format!("row {i} is not an array")))?;
        let mut r = Vec::with_capacity(row.len());
        for (j, x) in row.iter().enumerate() {
            match x.as_u64() {
                Some(0) => r.push(0u8),
                Some(1) => r.push(1u8),
                _ => return Err(err(format!("entry ({i}, {j}) is {x}, expected 0 or 1"))),
            }
        }
        out.push(r);
    }
    BoolMatrix::from_u8_rows(&out).map_err(|e| err(e.to_string()))
}

/// Reads `M` and `R` from a JSON object with `"M"` and `"R"` keys, such as a
/// `solve` report.
pub fn parse_solution_json(text: &str) -> Result<ModRescPair, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(|e| FormatError::Solution(e.to_string()))?;
    let m = matrix_from_json(&v, "M")?;
    let r = matrix_from_json(&v, "R")?;
    // An empty list has no rows to fix its width, so widths only disagree when both are nonempty.
    let k = if m.rows() > 0 { m.cols() } else { r.cols() };
    let fix = |x: BoolMatrix| if x.rows() == 0 { BoolMatrix::zeros(0, k) } else { x };
    ModRescPair::new(fix(m), fix(r)).map_err(|e| FormatError::Solution(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_separators_and_comments() {
        let m = parse_matrix("# header\n1,0 1\n\n  0 1 0\n# trailing\r\n").unwrap();
        assert_eq!(m, BoolMatrix::from_u8_rows(&[[1, 0, 1], [0, 1, 0]]).unwrap());
    }

    #[test]
    fn reports_position_of_bad_entry() {
        assert_eq!(
            parse_matrix("10\n1x\n").unwrap_err(),
            FormatError::BadEntry { line: 2, column: 2, found: 'x' }
        );
        assert!(matches!(parse_matrix("1 2"), Err(FormatError::BadEntry { line: 1, column: 3, .. })));
    }

    #[test]
    fn rejects_ragged_and_empty() {
        assert_eq!(
            parse_matrix("101\n10\n").unwrap_err(),
            FormatError::RaggedRow { line: 2, expected: 3, found: 2 }
        );
        assert_eq!(parse_matrix("# nothing\n\n").unwrap_err(), FormatError::Empty);
        assert!(parse_matrix(",,\n").is_err());
    }

    #[test]
    fn write_then_parse() {
        let m = BoolMatrix::from_u8_rows(&[[1, 0], [0, 0], [1, 1]]).unwrap();
        assert_eq!(parse_matrix(&write_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn solution_json() {
        let pair = parse_solution_json(r#"{"M": [[1,0],[0,1]], "R": [[0,1],[1,0]], "k": 2}"#).unwrap();
        assert_eq!(pair.gene_count(), 2);
        let empty = parse_solution_json(r#"{"M": [[],[]], "R": [[],[],[]]}"#).unwrap();
        assert_eq!((empty.mod_genes.rows(), empty.resc_genes.rows(), empty.gene_count()), (2, 3, 0));
        assert!(parse_solution_json(r#"{"M": [[2]], "R": [[0]]}"#).is_err());
        assert!(parse_solution_json(r#"{"M": [[1]]}"#).is_err());
        assert!(parse_solution_json(r#"{"M": [[1]], "R": [[0, 1]]}"#).is_err());
    }
}
