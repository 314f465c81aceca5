//! Text input for dissections.
//!
//! Two forms are accepted:
//!
//! ```text
//! # optional display name
//! 8: 0-3, 3-7
//! ```
//!
//! and `{"m": 8, "diagonals": [[0, 3], [3, 7]], "name": "octagon"}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{validate, PartitionError, PolygonDissection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid dissection at {location}: {source}")]
    Invalid { location: String, source: PartitionError },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DissectionDocument {
    pub m: usize,
    #[serde(default)]
    pub diagonals: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl DissectionDocument {
    pub fn dissection(&self) -> Result<PolygonDissection, PartitionError> {
        validate(self.m, &self.diagonals)
    }

    pub fn from_dissection(d: &PolygonDissection, name: Option<String>) -> Self {
        Self { m: d.m(), diagonals: d.diagonal_list(), name }
    }

    /// Compact form, e.g. `8: 0-3, 3-7`, preceded by `# name` when named.
    pub fn to_compact(&self) -> String {
        let pairs: Vec<String> = self.diagonals.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let line = if pairs.is_empty() {
            format!("{}:", self.m)
        } else {
            format!("{}: {}", self.m, pairs.join(", "))
        };
        match &self.name {
            Some(n) => format!("# {n}\n{line}"),
            None => line,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError::Syntax { line, column, message: message.into() }
}

pub fn parse_input(text: &str) -> Result<DissectionDocument, InputError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_compact(text)
    }
}

fn parse_json(text: &str) -> Result<DissectionDocument, InputError> {
    let doc: DissectionDocument =
        serde_json::from_str(text).map_err(|e| syntax(e.line(), e.column(), e.to_string()))?;
    doc.dissection().map_err(|source| InputError::Invalid {
        location: match source.diagonal_index() {
            Some(i) => format!("diagonal #{}", i + 1),
            None => "\"m\"".to_string(),
        },
        source,
    })?;
    Ok(doc)
}

fn parse_compact(text: &str) -> Result<DissectionDocument, InputError> {
    let mut name = None;
    let mut body = None;
    for (ln, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(c) = trimmed.strip_prefix('#') {
            if body.is_none() && name.is_none() {
                name = Some(c.trim().to_string());
            }
            continue;
        }
        if body.is_some() {
            return Err(syntax(ln + 1, 1, "unexpected second dissection line"));
        }
        body = Some((ln + 1, line));
    }
    let (ln, line) = body.ok_or_else(|| syntax(1, 1, "empty input"))?;

    let colon = line.find(':').ok_or_else(|| syntax(ln, line.len() + 1, "expected ':' after the vertex count"))?;
    let head = &line[..colon];
    let m: usize = head
        .trim()
        .parse()
        .map_err(|_| syntax(ln, 1 + head.len() - head.trim_start().len(), "expected a vertex count"))?;

    let mut diagonals = Vec::new();
    let mut columns = Vec::new();
    let rest = &line[colon + 1..];
    if !rest.trim().is_empty() {
        let mut offset = colon + 1;
        for item in rest.split(',') {
            let col = offset + 1 + item.len() - item.trim_start().len();
            offset += item.len() + 1;
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| syntax(ln, col, format!("expected 'a-b', found {:?}", item.trim())))?;
            let a: usize = a.trim().parse().map_err(|_| syntax(ln, col, format!("bad vertex {:?}", a.trim())))?;
            let b: usize = b.trim().parse().map_err(|_| syntax(ln, col, format!("bad vertex {:?}", b.trim())))?;
            diagonals.push((a, b));
            columns.push(col);
        }
    }
    let doc = DissectionDocument { m, diagonals, name };
    doc.dissection().map_err(|source| {
        let column = source.diagonal_index().map_or(1, |i| columns[i]);
        InputError::Invalid { location: format!("line {ln}, column {column}"), source }
    })?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn compact_forms() {
        let d = parse_input("5: 0-2").unwrap();
        assert_eq!((d.m, d.diagonals.clone()), (5, vec![(0, 2)]));
        let d = parse_input("3:").unwrap();
        assert_eq!((d.m, d.diagonals.len()), (3, 0));
        let d = parse_input("  8 :0 - 3 ,3-7  ").unwrap();
        assert_eq!(d.diagonals, vec![(0, 3), (3, 7)]);
        let d = parse_input("# octagon\n\n8: 0-3, 3-7\n").unwrap();
        assert_eq!(d.name.as_deref(), Some("octagon"));
    }

    #[test]
    fn crossing_reports_second_pair() {
        let err = parse_input("6: 0-2, 1-3").unwrap_err();
        match err {
            InputError::Invalid { location, source: PartitionError::Crossing { index, .. } } => {
                assert_eq!(index, 1);
                assert_eq!(location, "line 1, column 9");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_input(""), Err(InputError::Syntax { .. })));
        assert!(matches!(parse_input("8 0-2"), Err(InputError::Syntax { .. })));
        assert!(matches!(parse_input("x: 0-2"), Err(InputError::Syntax { .. })));
        assert!(matches!(parse_input("8: 0-2,"), Err(InputError::Syntax { column: 8, .. })));
        assert!(matches!(parse_input("8: 0-2\n7:"), Err(InputError::Syntax { line: 2, .. })));
        assert!(matches!(parse_input("{\"m\": 8,"), Err(InputError::Syntax { .. })));
    }

    #[test]
    fn json_form() {
        let d = parse_input(r#"{"m": 8, "diagonals": [[0,3],[3,7]]}"#).unwrap();
        assert_eq!(d.diagonals, vec![(0, 3), (3, 7)]);
        let err = parse_input(r#"{"m": 6, "diagonals": [[0,2],[1,3]]}"#).unwrap_err();
        assert!(matches!(err, InputError::Invalid { ref location, .. } if location == "diagonal #2"));
    }

    fn arb_document() -> impl Strategy<Value = DissectionDocument> {
        (3usize..10, proptest::option::of("[a-z][a-z ]{0,8}[a-z]")).prop_flat_map(|(m, name)| {
            let all: Vec<_> = crate::census::enumerate_dissections(m).unwrap().collect();
            (0..all.len()).prop_map(move |i| DissectionDocument::from_dissection(&all[i], name.clone()))
        })
    }

    proptest! {
        #[test]
        fn serializers_round_trip(doc in arb_document()) {
            prop_assert_eq!(parse_input(&doc.to_compact()).unwrap(), doc.clone());
            prop_assert_eq!(parse_input(&doc.to_json()).unwrap(), doc);
        }
    }
}
