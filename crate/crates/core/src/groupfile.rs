//! Group files: one JSON document per group.
//!
//! ```json
//! { "name": "C2", "labels": ["1", "c"], "table": [[0, 1], [1, 0]] }
//! { "name": "D8", "perms": { "degree": 4, "generators": [[1, 2, 3, 0], [2, 1, 0, 3]] } }
//! ```
//!
//! Exactly one of `table` (row-major Cayley table) or `perms` (image arrays
//! composed left to right) must be present. `name` and `labels` are optional;
//! `labels` is only accepted alongside `table`. Unknown keys are rejected.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::group::{Group, GroupError, DEFAULT_ORDER_LIMIT};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("group file must contain exactly one of `table` or `perms`")]
    Shape,
    #[error("`labels` is only allowed together with `table`")]
    LabelsWithPerms,
    #[error("invalid group: {0}")]
    Validation(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Permutations {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perms: Option<Permutations>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile, LoadError> {
        serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn into_group(self) -> Result<Group, LoadError> {
        match (self.table, self.perms) {
            (Some(table), None) => Ok(Group::from_table(table, self.labels)?),
            (None, Some(perms)) => {
                if self.labels.is_some() {
                    return Err(LoadError::LabelsWithPerms);
                }
                Ok(Group::from_permutations(
                    perms.degree,
                    &perms.generators,
                    DEFAULT_ORDER_LIMIT,
                )?)
            }
            _ => Err(LoadError::Shape),
        }
    }

    /// Table form of a group, labels included.
    pub fn from_group(name: &str, group: &Group) -> GroupFile {
        GroupFile {
            name: Some(name.to_string()),
            labels: Some(group.labels().to_vec()),
            table: Some(group.table_rows()),
            perms: None,
        }
    }

    /// Rows on single lines, so tables stay readable.
    pub fn to_text(&self) -> String {
        let mut out = String::from("{\n");
        let mut fields = Vec::new();
        if let Some(name) = &self.name {
            fields.push(format!("  \"name\": {}", json(name)));
        }
        if let Some(labels) = &self.labels {
            fields.push(format!("  \"labels\": {}", json(labels)));
        }
        if let Some(table) = &self.table {
            let rows: Vec<String> = table.iter().map(|r| format!("    {}", json(r))).collect();
            fields.push(format!("  \"table\": [\n{}\n  ]", rows.join(",\n")));
        }
        if let Some(perms) = &self.perms {
            fields.push(format!("  \"perms\": {}", json(perms)));
        }
        out.push_str(&fields.join(",\n"));
        out.push_str("\n}\n");
        out
    }
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serialises")
}

/// Reads and validates a group file. The name defaults to the file stem.
pub fn load_group(path: &Path) -> Result<(String, Group), LoadError> {
    let text = fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file = GroupFile::parse(&text)?;
    let name = file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "group".to_string())
    });
    Ok((name, file.into_group()?))
}

/// File name used when exporting a catalog entry.
pub fn file_name(name: &str) -> String {
    let stem: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    format!("{stem}.group.json")
}

/// Writes every entry to `dir` in table form; returns the paths written.
pub fn export_catalog(
    entries: &[CatalogEntry],
    dir: &Path,
) -> Result<Vec<std::path::PathBuf>, std::io::Error> {
    fs::create_dir_all(dir)?;
    entries
        .iter()
        .map(|e| {
            let path = dir.join(file_name(&e.name));
            fs::write(&path, GroupFile::from_group(&e.name, &e.group).to_text())?;
            Ok(path)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Axis;

    #[test]
    fn table_file_for_c2() {
        let f = GroupFile::parse(r#"{"name": "C2", "table": [[0, 1], [1, 0]]}"#).unwrap();
        let g = f.into_group().unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn perms_file_for_d8() {
        let f = GroupFile::parse(
            r#"{"perms": {"degree": 4, "generators": [[1, 2, 3, 0], [2, 1, 0, 3]]}}"#,
        )
        .unwrap();
        let g = f.into_group().unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().len(), 2);
        assert!(!g.is_abelian());
    }

    #[test]
    fn broken_latin_square_names_the_row() {
        let f = GroupFile::parse(r#"{"table": [[0, 1, 2], [1, 1, 0], [2, 0, 1]]}"#).unwrap();
        match f.into_group() {
            Err(LoadError::Validation(GroupError::NotLatinSquare { axis, line, .. })) => {
                assert_eq!((axis, line), (Axis::Row, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_keys_and_bad_shapes() {
        assert!(matches!(
            GroupFile::parse(r#"{"table": [[0]], "colour": "red"}"#),
            Err(LoadError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            GroupFile::parse(r#"{"perms": {"degree": 1, "generators": [], "x": 1}}"#),
            Err(LoadError::Parse { .. })
        ));
        assert!(matches!(
            GroupFile::parse(r#"{"name": "x"}"#).unwrap().into_group(),
            Err(LoadError::Shape)
        ));
        let both = r#"{"table": [[0]], "perms": {"degree": 1, "generators": []}}"#;
        assert!(matches!(
            GroupFile::parse(both).unwrap().into_group(),
            Err(LoadError::Shape)
        ));
        let labelled = r#"{"labels": ["e"], "perms": {"degree": 1, "generators": []}}"#;
        assert!(matches!(
            GroupFile::parse(labelled).unwrap().into_group(),
            Err(LoadError::LabelsWithPerms)
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = GroupFile::parse("{\n  \"table\": [[0,\n}").unwrap_err();
        match err {
            LoadError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn text_round_trip() {
        let g = crate::catalog::dihedral(8);
        let text = GroupFile::from_group("D8", &g).to_text();
        let back = GroupFile::parse(&text).unwrap();
        assert_eq!(back.name.as_deref(), Some("D8"));
        let h = back.into_group().unwrap();
        assert_eq!(h, g);
        assert_eq!(h.labels(), g.labels());
    }
}
