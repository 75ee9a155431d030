//! Loading JSON input files and walking them with path-aware accessors.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_rational::Rational64;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Bad input: names the file and the JSON path of the offending value.
#[derive(Debug, Clone, PartialEq)]
pub struct InputError {
    pub file: String,
    pub path: String,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.file, self.path, self.message)
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(InputError),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(e) => write!(f, "input error: {e}"),
            CliError::Compute(m) => write!(f, "computation error: {m}"),
        }
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        CliError::Input(e)
    }
}

pub fn compute<E: fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

/// A parsed input file.
#[derive(Debug)]
pub struct Doc {
    pub name: String,
    pub dir: PathBuf,
    pub value: Value,
}

impl Doc {
    pub fn root(&self) -> Node<'_> {
        Node::new(&self.name, &self.value)
    }
}

/// Every file read during a run, with its digest.
#[derive(Debug, Default)]
pub struct Inputs {
    pub files: Vec<(String, String)>,
}

impl Inputs {
    pub fn load(&mut self, path: &Path) -> Result<Doc, InputError> {
        let name = path.display().to_string();
        let err = |path: &str, message: String| InputError {
            file: name.clone(),
            path: path.into(),
            message,
        };
        let bytes = std::fs::read(path).map_err(|e| err("$", format!("cannot read: {e}")))?;
        self.files.push((name.clone(), hex::encode(Sha256::digest(&bytes))));
        let value: Value = serde_json::from_slice(&bytes)
            .map_err(|e| err("$", format!("line {} column {}: {e}", e.line(), e.column())))?;
        Ok(Doc {
            dir: path.parent().map(Path::to_path_buf).unwrap_or_default(),
            name,
            value,
        })
    }
}

/// A value inside a document together with its location.
#[derive(Clone, Debug)]
pub struct Node<'a> {
    pub file: &'a str,
    pub path: String,
    pub value: &'a Value,
}

impl<'a> Node<'a> {
    pub fn new(file: &'a str, value: &'a Value) -> Self {
        Node {
            file,
            path: "$".into(),
            value,
        }
    }

    pub fn err(&self, message: impl Into<String>) -> InputError {
        InputError {
            file: self.file.into(),
            path: self.path.clone(),
            message: message.into(),
        }
    }

    pub fn has(&self, key: &str) -> bool {
        self.value.get(key).is_some()
    }

    pub fn opt(&self, key: &str) -> Option<Node<'a>> {
        let value = self.value.as_object()?.get(key)?;
        if value.is_null() {
            return None;
        }
        Some(Node {
            file: self.file,
            path: format!("{}.{key}", self.path),
            value,
        })
    }

    pub fn get(&self, key: &str) -> Result<Node<'a>, InputError> {
        if !self.value.is_object() {
            return Err(self.err(format!("expected an object with field `{key}`")));
        }
        self.opt(key).ok_or_else(|| self.err(format!("missing field `{key}`")))
    }

    pub fn items(&self) -> Result<Vec<Node<'a>>, InputError> {
        let arr = self.value.as_array().ok_or_else(|| self.err("expected an array"))?;
        Ok(arr
            .iter()
            .enumerate()
            .map(|(i, value)| Node {
                file: self.file,
                path: format!("{}[{i}]", self.path),
                value,
            })
            .collect())
    }

    pub fn entries(&self) -> Result<Vec<(String, Node<'a>)>, InputError> {
        let obj = self.value.as_object().ok_or_else(|| self.err("expected an object"))?;
        Ok(obj
            .iter()
            .map(|(k, value)| {
                (
                    k.clone(),
                    Node {
                        file: self.file,
                        path: format!("{}.{k}", self.path),
                        value,
                    },
                )
            })
            .collect())
    }

    pub fn i64(&self) -> Result<i64, InputError> {
        self.value.as_i64().ok_or_else(|| self.err("expected an integer"))
    }

    pub fn usize(&self) -> Result<usize, InputError> {
        self.value
            .as_u64()
            .and_then(|x| usize::try_from(x).ok())
            .ok_or_else(|| self.err("expected a non-negative integer"))
    }

    /// A real number, or an exact rational written as `"p/q"`.
    pub fn f64(&self) -> Result<f64, InputError> {
        match self.value {
            Value::Number(n) => n.as_f64().ok_or_else(|| self.err("expected a number")),
            Value::String(s) => Rational64::from_str(s.trim())
                .map(|r| *r.numer() as f64 / *r.denom() as f64)
                .map_err(|_| self.err(format!("expected a number or \"p/q\", found {s:?}"))),
            _ => Err(self.err("expected a number")),
        }
    }

    pub fn i64_vec(&self) -> Result<Vec<i64>, InputError> {
        self.items()?.iter().map(Node::i64).collect()
    }

    pub fn f64_vec(&self) -> Result<Vec<f64>, InputError> {
        self.items()?.iter().map(Node::f64).collect()
    }

    /// Rows of integers, all of length `cols` when given.
    pub fn int_rows(&self, cols: Option<usize>) -> Result<Vec<Vec<i64>>, InputError> {
        let mut rows = Vec::new();
        let mut width = cols;
        for row in self.items()? {
            let r = row.i64_vec()?;
            match width {
                Some(w) if w != r.len() => {
                    return Err(row.err(format!("expected {w} entries, found {}", r.len())));
                }
                _ => width = Some(r.len()),
            }
            rows.push(r);
        }
        Ok(rows)
    }
}

/// Integer coordinates written as `3` or `1,-2`.
pub fn parse_coords(text: &str, n: usize) -> Result<Vec<i64>, String> {
    let coords: Vec<i64> = if text.trim().is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| format!("{text:?} is not a list of integers")))
            .collect::<Result<_, _>>()?
    };
    if coords.len() != n {
        return Err(format!("{text:?} has {} coordinates, the group has {n} generators", coords.len()));
    }
    Ok(coords)
}
