//! The relation catalog as a JSON-lines file.
//!
//! One relation per line: `{"id", "kind", "origin", "lhs", "rhs"}`, where the
//! two sides are written in the diagram-expression grammar.  Blank lines and
//! lines starting with `#` are ignored.

use std::path::Path;

use fold_soergel::foldcat::{parse_expr, relation_catalog, Relation, RelationKind};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// The catalog shipped with the tool (regenerate with `catalog_jsonl`).
pub const SHIPPED_CATALOG: &str = include_str!("../data/catalog.jsonl");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogLine {
    pub id: String,
    #[serde(default = "default_kind")]
    pub kind: String,
    pub origin: String,
    pub lhs: String,
    pub rhs: String,
}

fn default_kind() -> String {
    RelationKind::Derived.as_str().to_string()
}

impl CatalogLine {
    pub fn from_relation(r: &Relation) -> CatalogLine {
        CatalogLine {
            id: r.id.clone(),
            kind: r.kind.as_str().to_string(),
            origin: r.origin.clone(),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
        }
    }

    /// Parses both sides; errors name the relation and the side.
    pub fn to_relation(&self) -> Result<Relation, CliError> {
        let kind = match self.kind.as_str() {
            "defining" => RelationKind::Defining,
            "derived" => RelationKind::Derived,
            other => return Err(CliError::Parse(format!("relation {}: unknown kind {:?}", self.id, other))),
        };
        let side = |name: &str, text: &str| {
            parse_expr(text).map_err(|e| CliError::Parse(format!("relation {} ({}): {}", self.id, name, e)))
        };
        let lhs = side("lhs", &self.lhs)?;
        let rhs = side("rhs", &self.rhs)?;
        Ok(Relation::new(&self.id, kind, &self.origin, lhs, rhs))
    }
}

/// Serializes relations, one JSON object per line.
pub fn to_jsonl(relations: &[Relation]) -> String {
    let mut out = String::new();
    for r in relations {
        out.push_str(&serde_json::to_string(&CatalogLine::from_relation(r)).expect("plain strings serialize"));
        out.push('\n');
    }
    out
}

/// The built-in catalog in file form.
pub fn catalog_jsonl() -> String {
    to_jsonl(&relation_catalog())
}

/// Parses a JSON-lines catalog.
pub fn parse_jsonl(text: &str) -> Result<Vec<Relation>, CliError> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let l: CatalogLine =
            serde_json::from_str(t).map_err(|e| CliError::Parse(format!("catalog line {}: {}", n + 1, e)))?;
        out.push(l.to_relation()?);
    }
    Ok(out)
}

/// Reads a catalog file.
pub fn read_catalog(path: &Path) -> Result<Vec<Relation>, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse_jsonl(&text)
}
