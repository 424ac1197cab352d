//! Loading of the six local x-coordinates from the versioned data file:
//! one point per line, integer coefficients of powers of pi, ascending,
//! '#' comments allowed.

use seven_padic::local::{LocalElem, LocalField};
use std::path::Path;

#[derive(Debug)]
pub enum DataError {
    Io(std::io::Error),
    Parse(String),
    WrongCount(usize),
}

impl std::fmt::Display for DataError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DataError::Io(e) => write!(f, "{e}"),
            DataError::Parse(s) => write!(f, "parse error: {s}"),
            DataError::WrongCount(n) => write!(f, "expected 6 coordinate lines, found {n}"),
        }
    }
}

impl std::error::Error for DataError {}

impl From<std::io::Error> for DataError {
    fn from(e: std::io::Error) -> Self {
        DataError::Io(e)
    }
}

pub fn parse_digit_lines(text: &str) -> Result<Vec<Vec<i64>>, DataError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let digits: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
        out.push(digits.map_err(|e| DataError::Parse(format!("{e} in {line:?}")))?);
    }
    Ok(out)
}

/// The six x-coordinates as local elements.
pub fn load_local_points(
    path: &Path,
    field: &LocalField,
) -> Result<Vec<LocalElem>, DataError> {
    let text = std::fs::read_to_string(path)?;
    let lines = parse_digit_lines(&text)?;
    if lines.len() != 6 {
        return Err(DataError::WrongCount(lines.len()));
    }
    Ok(lines.iter().map(|d| field.from_pi_digits(d)).collect())
}

/// Repository-root data directory, resolved from this crate's manifest.
pub fn default_data_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("..")
        .join("..")
        .join("data")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_file_parses_and_matches_fixture() {
        let field = LocalField::new(120).unwrap();
        let pts = load_local_points(&default_data_dir().join("local_points.txt"), &field).unwrap();
        assert_eq!(pts.len(), 6);
        assert!(field.eq_to_prec(&pts[0], &field.from_i64(0)));
        assert!(field.eq_to_prec(&pts[1], &field.from_i64(-1)));
        // x_3 starts 3 + 4 pi^2 + 5 pi^3 + ...
        let x3 = field.from_pi_digits(&[3, 0, 4, 5, 1, 4, 2, 6, 5, 5, 5]);
        assert!(field.eq_to_prec(&pts[2], &x3));
    }
}
