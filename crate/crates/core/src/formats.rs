//! JSON file formats for codes and embeddings.

use serde::{Deserialize, Serialize};

use crate::code_geometry::Embedding;
use crate::error::{Error, Result};
use crate::pauli_algebra::{Pauli, StabilizerCode};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub n: usize,
    pub generators: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_d: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ParsedCode {
    pub code: StabilizerCode,
    pub claimed_d: Option<usize>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

// 1-based line and column of a byte offset.
fn location(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

// Byte offset of the opening quote of the `index`-th string in the
// "generators" array.
fn generator_offset(text: &str, index: usize) -> Option<usize> {
    let key = text.find("\"generators\"")?;
    let start = key + text[key..].find('[')?;
    let bytes = text.as_bytes();
    let mut seen = 0;
    let mut i = start + 1;
    while i < bytes.len() && bytes[i] != b']' {
        if bytes[i] == b'"' {
            if seen == index {
                return Some(i);
            }
            seen += 1;
            i += 1;
            while i < bytes.len() && bytes[i] != b'"' {
                i += if bytes[i] == b'\\' { 2 } else { 1 };
            }
        }
        i += 1;
    }
    None
}

/// Parses `{"n": .., "generators": [..], "claimed_d": ..}`. Malformed
/// generators are reported at their position in `text`.
pub fn parse_code(text: &str) -> Result<ParsedCode> {
    let file: CodeFile = serde_json::from_str(text).map_err(json_error)?;
    let mut gens = Vec::with_capacity(file.generators.len());
    for (i, s) in file.generators.iter().enumerate() {
        let at = |extra: usize| {
            let (line, column) = generator_offset(text, i).map_or((0, 0), |o| location(text, o + 1 + extra));
            (line, column)
        };
        let p: Pauli = match s.parse() {
            Ok(p) => p,
            Err(e) => {
                let (line, column) = at(0);
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("generator {i}: {e}"),
                });
            }
        };
        if p.n() != file.n {
            let (line, column) = at(0);
            return Err(Error::Parse {
                line,
                column,
                message: format!("generator {i} has {} qubits, expected n = {}", p.n(), file.n),
            });
        }
        gens.push(p);
    }
    let code = StabilizerCode::new(file.n, gens)?;
    Ok(ParsedCode {
        code,
        claimed_d: file.claimed_d,
    })
}

pub fn code_to_file(code: &StabilizerCode, claimed_d: Option<usize>) -> CodeFile {
    CodeFile {
        n: code.n(),
        generators: code.generators().iter().map(|g| g.to_string()).collect(),
        claimed_d,
    }
}

pub fn write_code(code: &StabilizerCode, claimed_d: Option<usize>) -> String {
    to_json(&code_to_file(code, claimed_d))
}

/// Parses `{"points": [[x, y], ..]}` and validates the embedding.
pub fn parse_embedding(text: &str) -> Result<Embedding> {
    serde_json::from_str(text).map_err(json_error)
}

pub fn write_embedding(emb: &Embedding) -> String {
    to_json(emb)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
