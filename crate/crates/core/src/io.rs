//! JSON input formats.
//!
//! Matrix file: `{"n": 4, "vars": ["x1", ...], "matrix": [["x1", "x2"], ...]}`
//! (`n` optional, entries are strings or integers).
//! Ideal file: `{"vars": [...], "generators": ["x^2 + y", ...], "label": "..."}`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{IdealSpec, MatrixError, SymPolyMatrix};
use crate::poly::PolyError;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("declared n={declared} but the matrix has {found} rows")]
    SizeMismatch { declared: usize, found: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Integer(i64),
}

impl Entry {
    fn source(&self) -> String {
        match self {
            Entry::Text(s) => s.clone(),
            Entry::Integer(v) => v.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub vars: Vec<String>,
    pub matrix: Vec<Vec<Entry>>,
}

impl MatrixFile {
    pub fn from_matrix(f: &SymPolyMatrix) -> Self {
        MatrixFile {
            n: Some(f.n()),
            vars: f.vars().to_vec(),
            matrix: f.to_strings().into_iter().map(|r| r.into_iter().map(Entry::Text).collect()).collect(),
        }
    }

    pub fn build(&self) -> Result<SymPolyMatrix, InputError> {
        if let Some(declared) = self.n {
            if declared != self.matrix.len() {
                return Err(InputError::SizeMismatch { declared, found: self.matrix.len() });
            }
        }
        let sources: Vec<Vec<String>> = self.matrix.iter().map(|r| r.iter().map(Entry::source).collect()).collect();
        Ok(SymPolyMatrix::build(&self.vars, &sources)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl IdealFile {
    pub fn build(&self) -> Result<IdealSpec, InputError> {
        let label = self.label.clone().unwrap_or_else(|| "I".to_string());
        Ok(IdealSpec::parse(&self.generators, self.vars.clone(), label)?)
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError::Read { path: path.display().to_string(), message: e.to_string() })
}

pub fn parse_matrix_json(text: &str) -> Result<SymPolyMatrix, InputError> {
    serde_json::from_str::<MatrixFile>(text)?.build()
}

pub fn parse_ideal_json(text: &str) -> Result<IdealSpec, InputError> {
    serde_json::from_str::<IdealFile>(text)?.build()
}

pub fn load_matrix(path: &Path) -> Result<SymPolyMatrix, InputError> {
    parse_matrix_json(&read(path)?)
}

pub fn load_ideal(path: &Path) -> Result<IdealSpec, InputError> {
    parse_ideal_json(&read(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::hankel_example;

    #[test]
    fn round_trip_example() {
        let text = serde_json::to_string(&MatrixFile::from_matrix(&hankel_example())).unwrap();
        assert_eq!(parse_matrix_json(&text).unwrap(), hankel_example());
    }

    #[test]
    fn integer_entries() {
        let f = parse_matrix_json(r#"{"vars": ["x"], "matrix": [["x", 1], [1, 0]]}"#).unwrap();
        assert_eq!(f.to_strings()[0][1], "1");
    }

    #[test]
    fn asymmetric_names_the_entry() {
        let e = parse_matrix_json(r#"{"vars": ["x", "y"], "matrix": [["x", "y"], ["x", "y"]]}"#).unwrap_err();
        assert!(matches!(e, InputError::Matrix(MatrixError::Asymmetric { row: 1, col: 2 })));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_matrix_json(r#"{"vars": [], "matrix": []}"#), Err(InputError::Matrix(MatrixError::Empty))));
        assert!(matches!(parse_matrix_json(r#"{"n": 3, "vars": [], "matrix": [["1"]]}"#), Err(InputError::SizeMismatch { .. })));
        assert!(matches!(parse_matrix_json(r#"{"vars": ["x"], "matrix": [["x +"]]}"#), Err(InputError::Matrix(MatrixError::Parse { row: 1, col: 1, .. }))));
        assert!(matches!(parse_matrix_json("not json"), Err(InputError::Json(_))));
    }

    #[test]
    fn ideal_file() {
        let i = parse_ideal_json(r#"{"vars": ["x", "y"], "generators": ["x^2", "y^3"], "label": "J"}"#).unwrap();
        assert_eq!(i.generators().len(), 2);
        assert_eq!(i.label(), "J");
    }
}
