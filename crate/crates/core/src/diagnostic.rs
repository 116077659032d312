use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::span::SourceSpan;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

/// Published rule codes. Codes are never reused; `AID-E005` is retired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleCode {
    /// Missing `AID Statement:` label.
    E001,
    /// First pair is not the tool section.
    E002,
    /// Missing terminal period.
    E003,
    /// Colon inside statement text.
    E004,
    /// Segment without a heading separator.
    E006,
    /// Empty statement text or empty segment.
    E007,
    /// Unknown heading.
    E008,
    /// Duplicate heading.
    W101,
    /// Pairs out of taxonomy order.
    W102,
    /// Non-canonical heading spelling.
    W103,
    /// Suspiciously short statement text.
    W104,
    /// Confusable colon or semicolon.
    W105,
    /// Trailing content after the terminal period.
    W106,
    /// Non-canonical label casing.
    W107,
}

impl RuleCode {
    pub const ALL: [RuleCode; 14] = [
        RuleCode::E001,
        RuleCode::E002,
        RuleCode::E003,
        RuleCode::E004,
        RuleCode::E006,
        RuleCode::E007,
        RuleCode::E008,
        RuleCode::W101,
        RuleCode::W102,
        RuleCode::W103,
        RuleCode::W104,
        RuleCode::W105,
        RuleCode::W106,
        RuleCode::W107,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleCode::E001 => "AID-E001",
            RuleCode::E002 => "AID-E002",
            RuleCode::E003 => "AID-E003",
            RuleCode::E004 => "AID-E004",
            RuleCode::E006 => "AID-E006",
            RuleCode::E007 => "AID-E007",
            RuleCode::E008 => "AID-E008",
            RuleCode::W101 => "AID-W101",
            RuleCode::W102 => "AID-W102",
            RuleCode::W103 => "AID-W103",
            RuleCode::W104 => "AID-W104",
            RuleCode::W105 => "AID-W105",
            RuleCode::W106 => "AID-W106",
            RuleCode::W107 => "AID-W107",
        }
    }

    /// Grammar rules that may not be disabled in strict mode.
    pub fn is_grammar(self) -> bool {
        matches!(
            self,
            RuleCode::E001 | RuleCode::E002 | RuleCode::E003 | RuleCode::E004 | RuleCode::E006 | RuleCode::E007
        )
    }
}

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule code `{0}`")]
pub struct UnknownRuleCode(pub String);

impl FromStr for RuleCode {
    type Err = UnknownRuleCode;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleCode::ALL
            .into_iter()
            .find(|code| code.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownRuleCode(s.to_owned()))
    }
}

impl Serialize for RuleCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for RuleCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub code: RuleCode,
    pub severity: Severity,
    pub message: String,
    pub span: SourceSpan,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub suggestion: Option<String>,
}

impl Diagnostic {
    pub fn new(code: RuleCode, severity: Severity, span: SourceSpan, message: impl Into<String>) -> Self {
        Diagnostic {
            code,
            severity,
            message: message.into(),
            span,
            suggestion: None,
        }
    }

    pub fn with_suggestion(mut self, suggestion: impl Into<String>) -> Self {
        self.suggestion = Some(suggestion.into());
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

/// Orders diagnostics by where they start, then by code.
pub(crate) fn sort_diagnostics(diagnostics: &mut [Diagnostic]) {
    diagnostics.sort_by_key(|d| (d.span.start_byte, d.span.end_byte, d.code));
}
