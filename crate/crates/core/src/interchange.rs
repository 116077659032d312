//! Version 1.0 JSON representation of statements.
//!
//! ```json
//! {"aid_version":"1.0","pairs":[{"ordinal":1,"slug":"artificial_intelligence_tool",
//!   "display":"Artificial Intelligence Tool","raw":"Artificial Intelligence Tool","text":"ToolX"}]}
//! ```
//!
//! Unrecognised headings carry `null` for `ordinal`, `slug` and `display`
//! and keep their `raw` text. The slug is the stable join key. The schema
//! lives at `crates/core/schema/aid-statement-v1.schema.json`.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::model::{validate_statement_text, AidStatement, BuildError, DisclosurePair, Origin};
use crate::span::SourceSpan;
use crate::taxonomy::{normalize, resolve, HeadingId};

pub const AID_VERSION: &str = "1.0";

const SCHEMA: &str = include_str!("../schema/aid-statement-v1.schema.json");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterchangeError {
    #[error("invalid JSON: {0}")]
    InvalidJson(String),
    #[error("unsupported aid_version `{0}` (expected `{AID_VERSION}`)")]
    UnsupportedVersion(String),
    #[error("statement has no pairs")]
    EmptyPairs,
    #[error("{pointer}: {message}")]
    Schema { pointer: String, message: String },
}

fn schema_error(pointer: impl Into<String>, message: impl Into<String>) -> InterchangeError {
    InterchangeError::Schema {
        pointer: pointer.into(),
        message: message.into(),
    }
}

#[derive(Serialize)]
struct StatementDoc<'a> {
    aid_version: &'static str,
    pairs: Vec<PairDoc<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label_span: Option<SourceSpan>,
}

#[derive(Serialize)]
struct PairDoc<'a> {
    ordinal: Option<u8>,
    slug: Option<&'static str>,
    display: Option<&'static str>,
    raw: &'a str,
    text: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    heading_span: Option<SourceSpan>,
    #[serde(skip_serializing_if = "Option::is_none")]
    statement_span: Option<SourceSpan>,
}

fn document(statement: &AidStatement, include_spans: bool) -> StatementDoc<'_> {
    let spans = |span: SourceSpan| include_spans.then_some(span);
    StatementDoc {
        aid_version: AID_VERSION,
        pairs: statement
            .pairs
            .iter()
            .map(|pair| PairDoc {
                ordinal: pair.heading.map(HeadingId::ordinal),
                slug: pair.heading.map(HeadingId::slug),
                display: pair.heading.map(HeadingId::display),
                raw: &pair.heading_raw,
                text: &pair.statement,
                heading_span: spans(pair.heading_span),
                statement_span: spans(pair.statement_span),
            })
            .collect(),
        label_span: spans(statement.label_span),
    }
}

/// Compact JSON with fixed key order and no trailing newline.
pub fn to_json(statement: &AidStatement, include_spans: bool) -> String {
    serde_json::to_string(&document(statement, include_spans)).expect("statement documents always serialize")
}

/// Same document as a [`Value`], for embedding in larger outputs.
pub fn to_json_value(statement: &AidStatement, include_spans: bool) -> Value {
    serde_json::to_value(document(statement, include_spans)).expect("statement documents always serialize")
}

/// The JSON Schema describing [`to_json`] output.
pub fn json_schema() -> &'static str {
    SCHEMA
}

/// Reads a version 1.0 document back into a built statement.
pub fn from_json(document: &str) -> Result<AidStatement, InterchangeError> {
    let value: Value = serde_json::from_str(document).map_err(|e| InterchangeError::InvalidJson(e.to_string()))?;
    from_json_value(&value)
}

pub fn from_json_value(value: &Value) -> Result<AidStatement, InterchangeError> {
    let root = value
        .as_object()
        .ok_or_else(|| schema_error("", "expected an object"))?;
    check_keys(root, "", &["aid_version", "pairs", "label_span"])?;
    match root.get("aid_version") {
        Some(Value::String(v)) if v == AID_VERSION => {}
        Some(Value::String(v)) => return Err(InterchangeError::UnsupportedVersion(v.clone())),
        Some(_) => return Err(schema_error("/aid_version", "expected a string")),
        None => return Err(schema_error("/aid_version", "missing required field")),
    }
    if let Some(span) = root.get("label_span") {
        check_span(span, "/label_span")?;
    }
    let pairs = match root.get("pairs") {
        Some(Value::Array(pairs)) => pairs,
        Some(_) => return Err(schema_error("/pairs", "expected an array")),
        None => return Err(schema_error("/pairs", "missing required field")),
    };
    if pairs.is_empty() {
        return Err(InterchangeError::EmptyPairs);
    }
    let pairs = pairs
        .iter()
        .enumerate()
        .map(|(i, pair)| read_pair(pair, &format!("/pairs/{i}")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AidStatement {
        pairs,
        label_span: SourceSpan::SYNTHETIC,
        terminated: true,
        origin: Origin::Built,
    })
}

fn check_keys(object: &Map<String, Value>, pointer: &str, allowed: &[&str]) -> Result<(), InterchangeError> {
    match object.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(key) => Err(schema_error(format!("{pointer}/{key}"), "unknown field")),
        None => Ok(()),
    }
}

fn check_span(value: &Value, pointer: &str) -> Result<(), InterchangeError> {
    let object = value
        .as_object()
        .ok_or_else(|| schema_error(pointer, "expected a span object"))?;
    const FIELDS: [(&str, u64); 4] = [("start_byte", 0), ("end_byte", 0), ("start_line", 1), ("start_col", 1)];
    check_keys(object, pointer, &FIELDS.map(|(name, _)| name))?;
    for (name, min) in FIELDS {
        match object.get(name).and_then(Value::as_u64) {
            Some(n) if n >= min => {}
            _ => {
                return Err(schema_error(
                    format!("{pointer}/{name}"),
                    format!("expected an integer >= {min}"),
                ))
            }
        }
    }
    Ok(())
}

fn read_pair(value: &Value, pointer: &str) -> Result<DisclosurePair, InterchangeError> {
    let object = value
        .as_object()
        .ok_or_else(|| schema_error(pointer, "expected an object"))?;
    check_keys(
        object,
        pointer,
        &[
            "ordinal",
            "slug",
            "display",
            "raw",
            "text",
            "heading_span",
            "statement_span",
        ],
    )?;
    let field = |name: &str| {
        object
            .get(name)
            .ok_or_else(|| schema_error(format!("{pointer}/{name}"), "missing required field"))
    };
    let string = |name: &str| -> Result<&str, InterchangeError> {
        field(name)?
            .as_str()
            .ok_or_else(|| schema_error(format!("{pointer}/{name}"), "expected a string"))
    };

    let ordinal = match field("ordinal")? {
        Value::Null => None,
        v => {
            let id = v
                .as_u64()
                .and_then(|n| u8::try_from(n).ok())
                .and_then(HeadingId::from_ordinal)
                .ok_or_else(|| {
                    schema_error(format!("{pointer}/ordinal"), "expected an integer from 1 to 14 or null")
                })?;
            Some(id)
        }
    };
    let slug = match field("slug")? {
        Value::Null => None,
        Value::String(s) => Some(
            HeadingId::from_slug(s)
                .ok_or_else(|| schema_error(format!("{pointer}/slug"), format!("unknown slug `{s}`")))?,
        ),
        _ => return Err(schema_error(format!("{pointer}/slug"), "expected a string or null")),
    };
    if ordinal != slug {
        return Err(schema_error(format!("{pointer}/ordinal"), "ordinal and slug disagree"));
    }
    match field("display")? {
        Value::Null if slug.is_none() => {}
        Value::String(d) if slug.is_some_and(|id| id.display() == d) => {}
        _ => {
            return Err(schema_error(
                format!("{pointer}/display"),
                "display must be the canonical heading for the slug, or null with a null slug",
            ))
        }
    }

    let raw = string("raw")?;
    if normalize(raw).is_empty() {
        return Err(schema_error(format!("{pointer}/raw"), "heading text is empty"));
    }
    if let (Some(id), Some(other)) = (slug, resolve(raw).id()) {
        if id != other {
            return Err(schema_error(
                format!("{pointer}/raw"),
                format!("`{raw}` names `{}`, not `{}`", other.display(), id.display()),
            ));
        }
    }

    let text = string("text")?;
    validate_statement_text(text).map_err(|e| {
        let message = match e {
            BuildError::ForbiddenCharacter(c) => format!("text contains reserved character `{c}`"),
            other => other.to_string(),
        };
        schema_error(format!("{pointer}/text"), message)
    })?;
    for name in ["heading_span", "statement_span"] {
        if let Some(span) = object.get(name) {
            check_span(span, &format!("{pointer}/{name}"))?;
        }
    }

    Ok(DisclosurePair {
        heading_raw: raw.to_owned(),
        heading: slug,
        statement: text.to_owned(),
        heading_span: SourceSpan::SYNTHETIC,
        statement_span: SourceSpan::SYNTHETIC,
    })
}
