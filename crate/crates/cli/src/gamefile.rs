//! JSON game files.
//!
//! ```json
//! {"class": "d2", "k": 2, "m": 2, "n": [2, 3],
//!  "matrices": [[["0", "-1"], ["1", "0"]], [["-2", "0", "1/2"], ["-1", "0", "1"]]]}
//! ```
//!
//! Entries are strings (`"p"`, `"p/q"` or a decimal such as `"0.25"`) or JSON
//! integers. `k`, `m` and `n` are optional and checked when present.

use std::fmt;
use std::path::Path;

use mcgame::axioms::AnyGame;
use mcgame::game::{MultiGameD1, MultiGameD2, ScalarGame};
use mcgame::rational::{format_rational, parse_rational, Rational};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameFile {
    pub name: Option<String>,
    pub description: Option<String>,
    pub game: AnyGame,
}

impl GameFile {
    pub fn new(game: AnyGame) -> Self {
        GameFile { name: None, description: None, game }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Class {
    Scalar,
    D1,
    D2,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Columns {
    Shared(usize),
    PerCriterion(Vec<usize>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGameFile {
    name: Option<String>,
    description: Option<String>,
    class: Class,
    k: Option<usize>,
    m: Option<usize>,
    n: Option<Columns>,
    matrices: Vec<Vec<Vec<Entry>>>,
}

struct Entry(Rational);

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntryVisitor;

        impl Visitor<'_> for EntryVisitor {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string such as \"-3/4\" or \"0.5\", or an integer")
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<Entry, E> {
                parse_rational(s).map(Entry).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                Ok(Entry(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                Ok(Entry(Rational::from_integer(v.into())))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Entry, E> {
                Err(E::custom(format!("floating-point literal {v} is not exact; quote it, e.g. \"{v}\"")))
            }
        }

        d.deserialize_any(EntryVisitor)
    }
}

pub fn parse_game(path: &Path) -> Result<GameFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_game_str(&text, &path.display().to_string())
}

/// Parses a game file; `origin` names the source in error messages.
pub fn parse_game_str(text: &str, origin: &str) -> Result<GameFile, CliError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawGameFile = serde_path_to_error::deserialize(&mut de)
        .map_err(|e| CliError::Parse(format!("{origin}: field {}: {}", e.path(), e.inner())))?;
    de.end().map_err(|e| CliError::Parse(format!("{origin}: {e}")))?;
    let game = build(raw.class, raw.k, raw.m, raw.n.as_ref(), raw.matrices)
        .map_err(|msg| CliError::Dimension(format!("{origin}: {msg}")))?;
    Ok(GameFile { name: raw.name, description: raw.description, game })
}

fn build(
    class: Class,
    k: Option<usize>,
    m: Option<usize>,
    n: Option<&Columns>,
    raw: Vec<Vec<Vec<Entry>>>,
) -> Result<AnyGame, String> {
    if raw.is_empty() {
        return Err("matrices: no matrix given".into());
    }
    if let Some(k) = k {
        if k != raw.len() {
            return Err(format!("k is {k} but {} matrices are given", raw.len()));
        }
    }
    if class == Class::Scalar && raw.len() != 1 {
        return Err(format!("a scalar game has one matrix, {} given", raw.len()));
    }
    let mut matrices = Vec::with_capacity(raw.len());
    for (l, rows) in raw.into_iter().enumerate() {
        let Some(first) = rows.first() else {
            return Err(format!("matrices[{l}] has no rows"));
        };
        let width = first.len();
        if width == 0 {
            return Err(format!("matrices[{l}][0] has no entries"));
        }
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != width) {
            return Err(format!("matrices[{l}][{i}] has {} entries, matrices[{l}][0] has {width}", row.len()));
        }
        if let Some(m) = m {
            if rows.len() != m {
                return Err(format!("m is {m} but matrices[{l}] has {} rows", rows.len()));
            }
        }
        let rows: Vec<Vec<Rational>> = rows.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect();
        matrices.push(ScalarGame::new(rows).map_err(|e| format!("matrices[{l}]: {e}"))?);
    }
    let m0 = matrices[0].rows();
    if let Some(l) = matrices.iter().position(|a| a.rows() != m0) {
        return Err(format!("matrices[{l}] has {} rows, matrices[0] has {m0}", matrices[l].rows()));
    }
    let cols: Vec<usize> = matrices.iter().map(ScalarGame::cols).collect();
    match (class, n) {
        (_, None) => {}
        (_, Some(Columns::Shared(n))) => {
            if let Some(l) = cols.iter().position(|c| c != n) {
                return Err(format!("n is {n} but matrices[{l}] has {} columns", cols[l]));
            }
        }
        (Class::D2, Some(Columns::PerCriterion(ns))) => {
            if ns != &cols {
                return Err(format!("n is {ns:?} but the matrices have {cols:?} columns"));
            }
        }
        (_, Some(Columns::PerCriterion(_))) => {
            return Err("n: a per-criterion column list is only allowed for class d2".into());
        }
    }
    match class {
        Class::Scalar => Ok(AnyGame::Scalar(matrices.remove(0))),
        Class::D1 => {
            if let Some(l) = cols.iter().position(|&c| c != cols[0]) {
                return Err(format!(
                    "class d1 shares player II's strategy, but matrices[{l}] has {} columns and matrices[0] has {}",
                    cols[l], cols[0]
                ));
            }
            MultiGameD1::new(matrices).map(AnyGame::D1).map_err(|e| e.to_string())
        }
        Class::D2 => MultiGameD2::new(matrices).map(AnyGame::D2).map_err(|e| e.to_string()),
    }
}

pub fn class_name(game: &AnyGame) -> &'static str {
    match game {
        AnyGame::Scalar(_) => "scalar",
        AnyGame::D1(_) => "d1",
        AnyGame::D2(_) => "d2",
    }
}

pub fn matrix_json(a: &ScalarGame) -> Value {
    Value::Array(
        a.to_rows().iter().map(|r| Value::Array(r.iter().map(|v| Value::String(format_rational(v))).collect())).collect(),
    )
}

/// The game in file form, with `k`, `m` and `n` filled in.
pub fn game_json(game: &AnyGame) -> Value {
    let matrices = game.matrices();
    let n = match game {
        AnyGame::D2(g) => json!(g.column_counts()),
        _ => json!(matrices[0].cols()),
    };
    json!({
        "class": class_name(game),
        "k": game.criteria(),
        "m": game.rows(),
        "n": n,
        "matrices": matrices.iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

pub fn emit_game(file: &GameFile) -> Value {
    let mut value = game_json(&file.game);
    let map: &mut Map<String, Value> = value.as_object_mut().expect("game_json builds an object");
    if let Some(name) = &file.name {
        map.insert("name".into(), Value::String(name.clone()));
    }
    if let Some(description) = &file.description {
        map.insert("description".into(), Value::String(description.clone()));
    }
    value
}

pub fn emit_game_string(file: &GameFile) -> String {
    let mut s = serde_json::to_string_pretty(&emit_game(file)).expect("JSON values always serialize");
    s.push('\n');
    s
}
