//! Game files: UTF-8 JSON with `"A"`, optional `"B"` and optional
//! `"symmetric"`. Entries are JSON integers or `"p/q"` strings.

use std::path::Path;

use serde::Deserialize;
use serde_json::{json, Value};

use super::report::matrix_json;
use super::CliError;
use crate::model::{int, parse_rational, GameMatrix, Rational};

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGameFile {
    #[serde(rename = "A")]
    a: Vec<Vec<Entry>>,
    #[serde(rename = "B", default)]
    b: Option<Vec<Vec<Entry>>>,
    #[serde(default)]
    symmetric: bool,
}

/// A parsed game. `b` holds player 2's payoffs with player 2's strategies
/// as rows, so it is the transpose shape of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameFile {
    pub a: GameMatrix,
    pub b: Option<GameMatrix>,
    pub symmetric: bool,
}

fn entries(raw: Vec<Vec<Entry>>, name: &str) -> Result<Vec<Vec<Rational>>, CliError> {
    raw.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| match e {
                    Entry::Int(n) => Ok(int(n)),
                    Entry::Text(s) => {
                        parse_rational(&s).map_err(|e| CliError::Input(format!("\"{name}\": {e}")))
                    }
                })
                .collect()
        })
        .collect()
}

fn matrix(raw: Vec<Vec<Entry>>, name: &str) -> Result<GameMatrix, CliError> {
    GameMatrix::new(entries(raw, name)?).map_err(|e| CliError::Input(format!("\"{name}\": {e}")))
}

impl GameFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawGameFile = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed game file: {e}")))?;
        let a = matrix(raw.a, "A")?;
        let b = raw.b.map(|b| matrix(b, "B")).transpose()?;
        if raw.symmetric {
            if b.is_some() {
                return Err(CliError::Input(
                    "a symmetric game must not carry \"B\"".into(),
                ));
            }
            let a = a
                .into_symmetric()
                .map_err(|e| CliError::Input(format!("\"A\": {e}")))?;
            return Ok(GameFile {
                a,
                b: None,
                symmetric: true,
            });
        }
        if let Some(b) = &b {
            if b.rows() != a.cols() || b.cols() != a.rows() {
                return Err(CliError::Domain(format!(
                    "\"B\" is {}x{} but \"A\" is {}x{}; expected {}x{}",
                    b.rows(),
                    b.cols(),
                    a.rows(),
                    a.cols(),
                    a.cols(),
                    a.rows()
                )));
            }
        }
        Ok(GameFile {
            a,
            b,
            symmetric: false,
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Player `p`'s own payoff matrix, rows indexed by that player's
    /// strategies.
    pub fn player(&self, p: u8) -> Option<&GameMatrix> {
        match p {
            1 => Some(&self.a),
            2 if self.symmetric => Some(&self.a),
            2 => self.b.as_ref(),
            _ => None,
        }
    }

    /// Both players' matrices when the file describes a full game.
    pub fn bimatrix(&self) -> Option<(&GameMatrix, &GameMatrix)> {
        Some((self.player(1)?, self.player(2)?))
    }

    /// The file as written back out: rationals as strings.
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "A": matrix_json(&self.a), "symmetric": self.symmetric });
        if let Some(b) = &self.b {
            v["B"] = matrix_json(b);
        }
        v
    }
}
