//! JSON (de)serialization for every domain type, plus the solution-record
//! format emitted by the CLI.
//!
//! All data is integral; the writer emits objects with sorted keys so that
//! golden files diff cleanly. Parsing always validates: a loaded group,
//! brace, or action has passed the same exhaustive checks as a constructed
//! one.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::BraceAction;
use crate::brace::{BraceError, SkewBrace};
use crate::braiding::{BraidingOperator, PairMap};
use crate::group::{Endomorphism, FiniteGroup, GroupAction};
use crate::reflection::ReflectionMap;
use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed JSON: {message}")]
    Schema { path: PathBuf, message: String },
    #[error("{path}: {message}")]
    Validation { path: PathBuf, message: String },
}

impl IoError {
    fn schema(path: &Path, message: impl ToString) -> IoError {
        IoError::Schema { path: path.to_path_buf(), message: message.to_string() }
    }

    fn validation(path: &Path, message: impl ToString) -> IoError {
        IoError::Validation { path: path.to_path_buf(), message: message.to_string() }
    }
}

// Field names are declared in alphabetical order so the derived serializer
// emits sorted keys.

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub mul: Vec<Vec<usize>>,
    pub size: usize,
    pub unit: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BraceJson {
    pub circ: Vec<Vec<usize>>,
    pub dot: Vec<Vec<usize>>,
    pub size: usize,
    pub unit: usize,
}

/// A brace embedded in an action file, either inline or as a relative path.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BraceRef {
    Inline(BraceJson),
    Path(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ActionJson {
    pub act: Vec<Vec<usize>>,
    pub brace: BraceRef,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<Vec<Vec<usize>>>,
    pub set_size: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BraidingJson {
    pub lhd: Vec<Vec<usize>>,
    pub rhd: Vec<Vec<usize>>,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairMapJson {
    pub p: usize,
    pub q: usize,
    pub table: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KMapJson {
    pub k: Vec<Vec<(usize, usize)>>,
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckJson {
    pub id: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

/// Machine-readable outcome of a CLI run: the checked or produced tables,
/// where they came from, and one entry per verified equation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub checks: Vec<CheckJson>,
    /// "YBE" for braid/Yang-Baxter objects, "RE" for reflection objects.
    pub kind: String,
    pub provenance: BTreeMap<String, serde_json::Value>,
    pub tables: BTreeMap<String, serde_json::Value>,
}

impl SolutionRecord {
    pub fn new(kind: &str) -> SolutionRecord {
        SolutionRecord {
            checks: Vec::new(),
            kind: kind.to_string(),
            provenance: BTreeMap::new(),
            tables: BTreeMap::new(),
        }
    }

    pub fn push_report(&mut self, report: &CheckReport) {
        for c in &report.checks {
            self.checks.push(CheckJson {
                id: c.name.to_string(),
                pass: c.pass,
                witness: c.witness.clone(),
            });
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    out.push('\n');
    out
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, IoError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| IoError::Read { path: path.to_path_buf(), source })?;
    serde_json::from_str(&text).map_err(|e| IoError::schema(path, e))
}

pub fn group_to_json(g: &FiniteGroup) -> GroupJson {
    GroupJson { mul: g.table_rows(), size: g.order(), unit: g.unit() }
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, IoError> {
    let raw: GroupJson = read_json(path)?;
    if raw.mul.len() != raw.size {
        return Err(IoError::schema(path, "mul table does not match declared size"));
    }
    FiniteGroup::from_table(raw.mul, raw.unit).map_err(|e| IoError::validation(path, e))
}

pub fn brace_to_json(b: &SkewBrace) -> BraceJson {
    BraceJson {
        circ: b.circ().table_rows(),
        dot: b.dot().table_rows(),
        size: b.order(),
        unit: b.unit(),
    }
}

fn brace_from_json(raw: BraceJson, path: &Path) -> Result<SkewBrace, IoError> {
    if raw.circ.len() != raw.size || raw.dot.len() != raw.size {
        return Err(IoError::schema(path, "tables do not match declared size"));
    }
    let circ = FiniteGroup::from_table(raw.circ, raw.unit)
        .map_err(|e| IoError::validation(path, format!("circ: {e}")))?;
    let dot = FiniteGroup::from_table(raw.dot, raw.unit)
        .map_err(|e| IoError::validation(path, format!("dot: {e}")))?;
    SkewBrace::new(circ, dot).map_err(|e: BraceError| IoError::validation(path, e))
}

pub fn load_brace(path: &Path) -> Result<SkewBrace, IoError> {
    brace_from_json(read_json(path)?, path)
}

pub fn action_to_json(action: &BraceAction) -> ActionJson {
    ActionJson {
        act: action.action().table_rows(),
        brace: BraceRef::Inline(brace_to_json(action.brace())),
        pi: Some(action.pi_family().iter().map(|e| e.table().to_vec()).collect()),
        set_size: action.set_size(),
    }
}

/// Loads a brace action; `pi` is mandatory here. Path-valued brace
/// references resolve relative to the directory of the action file.
pub fn load_action(path: &Path) -> Result<BraceAction, IoError> {
    let raw: ActionJson = read_json(path)?;
    let (brace, act) = resolve_action_parts(&raw, path)?;
    let Some(pi_rows) = raw.pi else {
        return Err(IoError::schema(path, "missing field `pi`"));
    };
    if pi_rows.len() != act.set_size() {
        return Err(IoError::schema(path, "pi does not match set_size"));
    }
    let pi = pi_rows.into_iter().map(Endomorphism::from_table_unchecked).collect();
    BraceAction::new(&brace, act, pi).map_err(|e| IoError::validation(path, e))
}

/// Loads the circ-action part of an action file, ignoring `pi` if present.
pub fn load_bare_action(path: &Path) -> Result<(SkewBrace, GroupAction), IoError> {
    let raw: ActionJson = read_json(path)?;
    resolve_action_parts(&raw, path)
}

/// Loads all parts of an action file without running the brace-action
/// validator, so callers can report its checks themselves.
pub fn load_action_parts(
    path: &Path,
) -> Result<(SkewBrace, GroupAction, Vec<Endomorphism>), IoError> {
    let raw: ActionJson = read_json(path)?;
    let (brace, act) = resolve_action_parts(&raw, path)?;
    let Some(pi_rows) = raw.pi else {
        return Err(IoError::schema(path, "missing field `pi`"));
    };
    let n = brace.order();
    if pi_rows.len() != act.set_size()
        || pi_rows.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n))
    {
        return Err(IoError::schema(path, "pi does not match set_size and order"));
    }
    let pi = pi_rows.into_iter().map(Endomorphism::from_table_unchecked).collect();
    Ok((brace, act, pi))
}

fn resolve_action_parts(
    raw: &ActionJson,
    path: &Path,
) -> Result<(SkewBrace, GroupAction), IoError> {
    let brace = match &raw.brace {
        BraceRef::Inline(b) => brace_from_json(b.clone(), path)?,
        BraceRef::Path(rel) => {
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            load_brace(&base.join(rel))?
        }
    };
    let act = GroupAction::new(brace.circ(), raw.set_size, raw.act.clone())
        .map_err(|e| IoError::validation(path, e))?;
    Ok((brace, act))
}

pub fn braiding_to_json(r: &BraidingOperator) -> BraidingJson {
    BraidingJson { lhd: r.lhd_rows(), rhd: r.rhd_rows(), size: r.order() }
}

/// Loads the tables of a braiding file; no group is attached, so axiom
/// checks need a separate group. The tables convert directly to a pair map.
pub fn load_braiding_tables(path: &Path) -> Result<BraidingJson, IoError> {
    let raw: BraidingJson = read_json(path)?;
    let n = raw.size;
    let ok = raw.rhd.len() == n
        && raw.lhd.len() == n
        && raw.rhd.iter().chain(&raw.lhd).all(|row| {
            row.len() == n && row.iter().all(|&v| v < n)
        });
    if !ok {
        return Err(IoError::schema(path, "tables do not match declared size"));
    }
    Ok(raw)
}

pub fn braiding_tables_to_pair_map(raw: &BraidingJson) -> PairMap {
    let n = raw.size;
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (raw.rhd[a][b], raw.lhd[a][b]))
        .collect();
    PairMap::new(n, n, table).expect("validated tables form a pair map")
}

pub fn pair_map_to_json(map: &PairMap) -> PairMapJson {
    let q = map.right_size();
    let table = (0..map.left_size())
        .map(|a| (0..q).map(|x| map.apply(a, x)).collect())
        .collect();
    PairMapJson { p: map.left_size(), q, table }
}

pub fn load_pair_map(path: &Path) -> Result<PairMap, IoError> {
    let raw: PairMapJson = read_json(path)?;
    if raw.table.len() != raw.p || raw.table.iter().any(|row| row.len() != raw.q) {
        return Err(IoError::schema(path, "table does not match declared sizes"));
    }
    PairMap::new(raw.p, raw.q, raw.table.into_iter().flatten().collect())
        .ok_or_else(|| IoError::schema(path, "table entries out of range"))
}

/// Loads either a braiding file or a generic pair-map file as a pair map.
pub fn load_square_map(path: &Path) -> Result<PairMap, IoError> {
    if let Ok(raw) = load_braiding_tables(path) {
        return Ok(braiding_tables_to_pair_map(&raw));
    }
    load_pair_map(path)
}

/// Loads a k-map file or a generic pair-map file as a pair map.
pub fn load_rectangular_map(path: &Path) -> Result<PairMap, IoError> {
    if let Ok((n, m, table)) = load_k_map(path) {
        return Ok(PairMap::new(n, m, table).expect("validated k table"));
    }
    load_pair_map(path)
}

pub fn reflection_to_json(k: &ReflectionMap) -> KMapJson {
    let m = k.set_size();
    let table = (0..k.group_order())
        .map(|a| (0..m).map(|x| k.apply(a, x)).collect())
        .collect();
    KMapJson { k: table, m, n: k.group_order() }
}

/// Group order, set size, and the flattened table of a k-map file.
pub type KMapParts = (usize, usize, Vec<(usize, usize)>);

pub fn load_k_map(path: &Path) -> Result<KMapParts, IoError> {
    let raw: KMapJson = read_json(path)?;
    if raw.k.len() != raw.n || raw.k.iter().any(|row| row.len() != raw.m) {
        return Err(IoError::schema(path, "k table does not match declared sizes"));
    }
    let flat: Vec<(usize, usize)> = raw.k.into_iter().flatten().collect();
    if flat.iter().any(|&(a, x)| a >= raw.n || x >= raw.m) {
        return Err(IoError::schema(path, "k entries out of range"));
    }
    Ok((raw.n, raw.m, flat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::universal_action;
    use crate::brace::s3_brace;
    use crate::catalog;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        use std::io::Write;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn group_round_trip() {
        let g = catalog::cyclic(2);
        let text = to_canonical_json(&group_to_json(&g));
        let f = write_temp(&text);
        let loaded = load_group(f.path()).unwrap();
        assert_eq!(loaded, g);
        assert_eq!(to_canonical_json(&group_to_json(&loaded)), text);
    }

    #[test]
    fn brace_file_without_dot_is_a_schema_error() {
        let f = write_temp(r#"{"circ": [[0]], "size": 1, "unit": 0}"#);
        match load_brace(f.path()) {
            Err(IoError::Schema { message, .. }) => assert!(message.contains("dot")),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn invalid_tables_are_validation_errors() {
        let f = write_temp(r#"{"mul": [[0, 1], [1, 1]], "size": 2, "unit": 0}"#);
        assert!(matches!(load_group(f.path()), Err(IoError::Validation { .. })));
    }

    #[test]
    fn action_round_trip_with_inline_brace() {
        let u = universal_action(&s3_brace());
        let text = to_canonical_json(&action_to_json(&u));
        let f = write_temp(&text);
        let loaded = load_action(f.path()).unwrap();
        assert_eq!(loaded, u);
        assert_eq!(to_canonical_json(&action_to_json(&loaded)), text);
    }

    #[test]
    fn action_brace_may_be_a_relative_path() {
        let dir = tempfile::tempdir().unwrap();
        let brace_path = dir.path().join("b.json");
        std::fs::write(&brace_path, to_canonical_json(&brace_to_json(&s3_brace()))).unwrap();
        let action = ActionJson {
            act: GroupAction::translation(s3_brace().circ()).table_rows(),
            brace: BraceRef::Path("b.json".into()),
            pi: Some(vec![vec![0; 6]; 6]),
            set_size: 6,
        };
        let action_path = dir.path().join("a.json");
        std::fs::write(&action_path, to_canonical_json(&action)).unwrap();
        let loaded = load_action(&action_path).unwrap();
        assert_eq!(loaded.brace(), &s3_brace());
    }

    #[test]
    fn keys_are_emitted_in_sorted_order() {
        let text = to_canonical_json(&brace_to_json(&s3_brace()));
        let circ = text.find("\"circ\"").unwrap();
        let dot = text.find("\"dot\"").unwrap();
        let size = text.find("\"size\"").unwrap();
        let unit = text.find("\"unit\"").unwrap();
        assert!(circ < dot && dot < size && size < unit);
    }
}
