//! Parsing of the versioned plain-text data files: the mod-5 relation
//! matrix, the annihilating differential's coordinate vector, the two
//! algebraic points, and the divisor bookkeeping notes.

use crate::algebraic::AlgebraicPoint;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Debug)]
pub enum DataError {
    Io(std::io::Error),
    Parse(String),
}

impl std::fmt::Display for DataError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DataError::Io(e) => write!(f, "{e}"),
            DataError::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for DataError {}

impl From<std::io::Error> for DataError {
    fn from(e: std::io::Error) -> Self {
        DataError::Io(e)
    }
}

pub fn default_data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("..")
        .join("..")
        .join("data")
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_row<T: std::str::FromStr>(line: &str) -> Result<Vec<T>, DataError>
where
    T::Err: std::fmt::Display,
{
    line.split_whitespace()
        .map(|t| {
            t.parse::<T>()
                .map_err(|e| DataError::Parse(format!("{e} in {line:?}")))
        })
        .collect()
}

/// 6 rows x 12 columns, entries mod 5.
pub fn load_relation_matrix(path: &Path) -> Result<Vec<Vec<u8>>, DataError> {
    let text = std::fs::read_to_string(path)?;
    let rows: Result<Vec<Vec<u8>>, _> = data_lines(&text).map(parse_row::<u8>).collect();
    let rows = rows?;
    if rows.len() != 6 || rows.iter().any(|r| r.len() != 12) {
        return Err(DataError::Parse("expected 6 rows of 12 entries".into()));
    }
    Ok(rows)
}

/// 12 coordinates of the annihilating differential.
pub fn load_omega_vector(path: &Path) -> Result<[u8; 12], DataError> {
    let text = std::fs::read_to_string(path)?;
    let rows: Vec<Vec<u8>> = data_lines(&text)
        .map(parse_row::<u8>)
        .collect::<Result<_, _>>()?;
    if rows.len() != 1 || rows[0].len() != 12 {
        return Err(DataError::Parse("expected one row of 12 entries".into()));
    }
    Ok(rows[0].clone().try_into().unwrap())
}

pub fn load_algebraic_point(path: &Path) -> Result<AlgebraicPoint, DataError> {
    let text = std::fs::read_to_string(path)?;
    let mut fields: BTreeMap<String, String> = BTreeMap::new();
    for line in data_lines(&text) {
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| DataError::Parse(format!("missing ':' in {line:?}")))?;
        fields.insert(key.trim().to_string(), rest.trim().to_string());
    }
    let get = |k: &str| {
        fields
            .get(k)
            .ok_or_else(|| DataError::Parse(format!("missing field {k}")))
    };
    let minpoly: Vec<i64> = parse_row(get("minpoly")?)?;
    let vnum: Vec<i64> = parse_row(get("vnum")?)?;
    let vden: i64 = get("vden")?
        .parse()
        .map_err(|e| DataError::Parse(format!("{e}")))?;
    Ok(AlgebraicPoint {
        minpoly,
        vnum,
        vden,
    })
}

/// The divisor bookkeeping notes: symbol degrees, the kernel-of-reduction
/// generators, and the three divisor relations; only degree-0 consistency
/// is machine checked.
#[derive(Clone, Debug)]
pub struct DivisorNotes {
    pub degrees: Vec<(String, i64)>,
    pub generators: Vec<(String, Vec<i64>)>,
    pub relations: Vec<(Vec<i64>, Vec<i64>)>,
}

impl DivisorNotes {
    pub fn degree_of(&self, combo: &[i64]) -> i64 {
        combo
            .iter()
            .zip(&self.degrees)
            .map(|(c, (_, d))| c * d)
            .sum()
    }

    pub fn all_degree_consistent(&self) -> bool {
        self.generators.iter().all(|(_, c)| self.degree_of(c) == 0)
            && self
                .relations
                .iter()
                .all(|(l, r)| self.degree_of(l) == self.degree_of(r))
    }
}

pub fn load_divisor_notes(path: &Path) -> Result<DivisorNotes, DataError> {
    let text = std::fs::read_to_string(path)?;
    let mut degrees = Vec::new();
    let mut generators = Vec::new();
    let mut rel_parts: BTreeMap<String, Vec<i64>> = BTreeMap::new();
    for line in data_lines(&text) {
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| DataError::Parse(format!("missing ':' in {line:?}")))?;
        let key = key.trim();
        if key == "symbols" {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            for pair in toks.chunks(2) {
                degrees.push((
                    pair[0].to_string(),
                    pair[1]
                        .parse()
                        .map_err(|e| DataError::Parse(format!("{e}")))?,
                ));
            }
        } else if key.starts_with('B') {
            generators.push((key.to_string(), parse_row(rest)?));
        } else if key.starts_with("rel") {
            rel_parts.insert(key.to_string(), parse_row(rest)?);
        }
    }
    let mut relations = Vec::new();
    for i in 1..=3 {
        let l = rel_parts
            .get(&format!("rel{i}_lhs"))
            .ok_or_else(|| DataError::Parse(format!("missing rel{i}_lhs")))?;
        let r = rel_parts
            .get(&format!("rel{i}_rhs"))
            .ok_or_else(|| DataError::Parse(format!("missing rel{i}_rhs")))?;
        relations.push((l.clone(), r.clone()));
    }
    Ok(DivisorNotes {
        degrees,
        generators,
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_data_files_parse() {
        let dir = default_data_dir();
        let m = load_relation_matrix(&dir.join("relation_matrix.txt")).unwrap();
        assert_eq!(m.len(), 6);
        let omega = load_omega_vector(&dir.join("omega_vector.txt")).unwrap();
        assert_eq!(omega, [3, 1, 0, 3, 2, 0, 0, 0, 1, 2, 0, 0]);
        let notes = load_divisor_notes(&dir.join("divisor_notes.txt")).unwrap();
        assert_eq!(notes.degrees.len(), 10);
        assert_eq!(notes.generators.len(), 6);
        assert!(notes.all_degree_consistent());
    }
}
