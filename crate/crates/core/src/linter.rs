//! Rule engine over parsed or built statements.
//!
//! Grammar findings come from the parser and are passed through. Rules that
//! only need the statement itself (tool-first, heading resolution, duplicates,
//! ordering, short text, confusable punctuation) are evaluated here, so they
//! also apply to statements that were built or loaded from JSON.
//!
//! Configuration is a small TOML document:
//!
//! ```toml
//! mode = "strict"          # or "lenient" (default)
//! max_suggestions = 3
//!
//! [rules]
//! AID-W102 = "off"         # "error", "warning" or "off"
//! AID-W104 = "error"
//! ```

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::diagnostic::{sort_diagnostics, Diagnostic, RuleCode, Severity};
use crate::model::{AidStatement, Origin, RESERVED};
use crate::parser::{self, parse_statement, unknown_heading, ParseError, ParseMode, ParseOutcome};
use crate::span::SourceSpan;
use crate::taxonomy::{resolve, HeadingId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleInfo {
    pub code: RuleCode,
    pub default_severity: Severity,
    pub description: &'static str,
}

const CATALOG: [RuleInfo; 14] = [
    RuleInfo {
        code: RuleCode::E001,
        default_severity: Severity::Error,
        description: "Statement must open with the `AID Statement:` label.",
    },
    RuleInfo {
        code: RuleCode::E002,
        default_severity: Severity::Error,
        description: "The first pair must be the tool section (`Artificial Intelligence Tool`); \
                      the tool section always comes first.",
    },
    RuleInfo {
        code: RuleCode::E003,
        default_severity: Severity::Error,
        description: "The last pair must end with a period.",
    },
    RuleInfo {
        code: RuleCode::E004,
        default_severity: Severity::Error,
        description: "Statement text may not contain `:`, which separates headings from statements.",
    },
    RuleInfo {
        code: RuleCode::E006,
        default_severity: Severity::Error,
        description: "Every `;`-separated segment must be a `heading: statement` pair.",
    },
    RuleInfo {
        code: RuleCode::E007,
        default_severity: Severity::Error,
        description: "Statement text and segments may not be empty.",
    },
    RuleInfo {
        code: RuleCode::E008,
        default_severity: Severity::Error,
        description: "Heading is not in the taxonomy. Reported as a warning in lenient mode.",
    },
    RuleInfo {
        code: RuleCode::W101,
        default_severity: Severity::Warning,
        description: "Heading appears more than once.",
    },
    RuleInfo {
        code: RuleCode::W102,
        default_severity: Severity::Warning,
        description: "Pairs are not in taxonomy order (unknown headings are ignored).",
    },
    RuleInfo {
        code: RuleCode::W103,
        default_severity: Severity::Warning,
        description: "Heading uses a tolerated but non-canonical spelling.",
    },
    RuleInfo {
        code: RuleCode::W104,
        default_severity: Severity::Warning,
        description: "Statement text is shorter than 3 characters and may be a placeholder.",
    },
    RuleInfo {
        code: RuleCode::W105,
        default_severity: Severity::Warning,
        description: "Statement text contains a character that looks like `:` or `;`.",
    },
    RuleInfo {
        code: RuleCode::W106,
        default_severity: Severity::Warning,
        description: "Content follows the terminal period in the same paragraph.",
    },
    RuleInfo {
        code: RuleCode::W107,
        default_severity: Severity::Warning,
        description: "Label is not written as `AID Statement:`.",
    },
];

/// Every rule, errors first, in code order.
pub fn rule_catalog() -> &'static [RuleInfo] {
    &CATALOG
}

fn rule_info(code: RuleCode) -> &'static RuleInfo {
    CATALOG
        .iter()
        .find(|r| r.code == code)
        .expect("every code is cataloged")
}

/// Characters that render like the reserved separators.
const CONFUSABLES: [(char, char); 9] = [
    ('\u{FF1A}', ':'),
    ('\u{FE55}', ':'),
    ('\u{FE13}', ':'),
    ('\u{2236}', ':'),
    ('\u{A789}', ':'),
    ('\u{FF1B}', ';'),
    ('\u{FE54}', ';'),
    ('\u{FE14}', ';'),
    ('\u{037E}', ';'),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleLevel {
    Error,
    Warning,
    Off,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("{0} is a grammar rule and cannot be turned off in strict mode")]
    GrammarRuleDisabled(RuleCode),
    #[error("max_suggestions must be at least 1")]
    ZeroSuggestions,
    #[error(transparent)]
    UnknownRule(#[from] crate::diagnostic::UnknownRuleCode),
    #[error("invalid lint configuration: {0}")]
    Syntax(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintConfig {
    mode: ParseMode,
    severity_overrides: BTreeMap<RuleCode, RuleLevel>,
    max_suggestions: usize,
}

impl Default for LintConfig {
    fn default() -> Self {
        LintConfig {
            mode: ParseMode::Lenient,
            severity_overrides: BTreeMap::new(),
            max_suggestions: parser::DEFAULT_SUGGESTIONS,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    mode: Option<ModeName>,
    max_suggestions: Option<usize>,
    #[serde(default)]
    rules: HashMap<String, RuleLevel>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum ModeName {
    Strict,
    Lenient,
}

impl LintConfig {
    pub fn new(
        mode: ParseMode,
        severity_overrides: BTreeMap<RuleCode, RuleLevel>,
        max_suggestions: usize,
    ) -> Result<Self, ConfigError> {
        if max_suggestions == 0 {
            return Err(ConfigError::ZeroSuggestions);
        }
        let config = LintConfig {
            mode,
            severity_overrides,
            max_suggestions,
        };
        config.check()?;
        Ok(config)
    }

    pub fn strict() -> Self {
        LintConfig {
            mode: ParseMode::Strict,
            ..LintConfig::default()
        }
    }

    pub fn lenient() -> Self {
        LintConfig::default()
    }

    pub fn from_toml(source: &str) -> Result<Self, ConfigError> {
        let file: ConfigFile = toml::from_str(source).map_err(|e| ConfigError::Syntax(e.message().to_owned()))?;
        let mut overrides = BTreeMap::new();
        for (code, level) in file.rules {
            overrides.insert(code.parse::<RuleCode>()?, level);
        }
        let mode = match file.mode {
            Some(ModeName::Strict) => ParseMode::Strict,
            Some(ModeName::Lenient) | None => ParseMode::Lenient,
        };
        LintConfig::new(
            mode,
            overrides,
            file.max_suggestions.unwrap_or(parser::DEFAULT_SUGGESTIONS),
        )
    }

    fn check(&self) -> Result<(), ConfigError> {
        if self.mode == ParseMode::Strict {
            let disabled = self
                .severity_overrides
                .iter()
                .find(|&(code, level)| code.is_grammar() && *level == RuleLevel::Off);
            if let Some((&code, _)) = disabled {
                return Err(ConfigError::GrammarRuleDisabled(code));
            }
        }
        Ok(())
    }

    pub fn mode(&self) -> ParseMode {
        self.mode
    }

    /// Switches mode, re-validating overrides.
    pub fn with_mode(mut self, mode: ParseMode) -> Result<Self, ConfigError> {
        self.mode = mode;
        self.check()?;
        Ok(self)
    }

    pub fn with_override(mut self, code: RuleCode, level: RuleLevel) -> Result<Self, ConfigError> {
        self.severity_overrides.insert(code, level);
        self.check()?;
        Ok(self)
    }

    pub fn max_suggestions(&self) -> usize {
        self.max_suggestions
    }

    /// Effective severity for `code`, or `None` when the rule is off.
    pub fn level(&self, code: RuleCode) -> Option<Severity> {
        match self.severity_overrides.get(&code) {
            Some(RuleLevel::Error) => Some(Severity::Error),
            Some(RuleLevel::Warning) => Some(Severity::Warning),
            Some(RuleLevel::Off) => None,
            None if code == RuleCode::E008 && self.mode == ParseMode::Lenient => Some(Severity::Warning),
            None => Some(rule_info(code).default_severity),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LintReport {
    pub diagnostics: Vec<Diagnostic>,
    pub error_count: usize,
    pub warning_count: usize,
    pub verdict: Verdict,
}

impl LintReport {
    fn from_diagnostics(mut diagnostics: Vec<Diagnostic>, config: &LintConfig) -> Self {
        diagnostics.retain_mut(|d| match config.level(d.code) {
            Some(severity) => {
                d.severity = severity;
                true
            }
            None => false,
        });
        sort_diagnostics(&mut diagnostics);
        let error_count = diagnostics.iter().filter(|d| d.is_error()).count();
        LintReport {
            warning_count: diagnostics.len() - error_count,
            error_count,
            verdict: if error_count > 0 { Verdict::Fail } else { Verdict::Pass },
            diagnostics,
        }
    }

    pub fn codes(&self) -> Vec<RuleCode> {
        self.diagnostics.iter().map(|d| d.code).collect()
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Codes recomputed here from the statement; parser copies are replaced.
const STATEMENT_RULES: [RuleCode; 3] = [RuleCode::E002, RuleCode::E008, RuleCode::W103];

/// Lints `statement`, merging the findings its parse produced.
pub fn lint(statement: &AidStatement, parse_diagnostics: &[Diagnostic], config: &LintConfig) -> LintReport {
    let mut diagnostics: Vec<Diagnostic> = parse_diagnostics
        .iter()
        .filter(|d| !STATEMENT_RULES.contains(&d.code))
        .cloned()
        .collect();
    check_statement(statement, config, &mut diagnostics);
    LintReport::from_diagnostics(diagnostics, config)
}

/// Lints a parse result, including one that carries no statement.
pub fn lint_outcome(outcome: &ParseOutcome, config: &LintConfig) -> LintReport {
    match &outcome.statement {
        Some(statement) => lint(statement, &outcome.diagnostics, config),
        None => LintReport::from_diagnostics(outcome.diagnostics.clone(), config),
    }
}

/// Parses `input` leniently and lints the result under `config`.
pub fn lint_text(input: &str, config: &LintConfig) -> LintReport {
    match parse_statement(input, ParseMode::Lenient) {
        Ok(outcome) => lint_outcome(&outcome, config),
        Err(ParseError::NotAStatement | ParseError::InvalidUtf8 { .. }) => {
            let message = "no `AID Statement:` label and no `heading: statement` pairs found";
            let missing = Diagnostic::new(RuleCode::E001, Severity::Error, SourceSpan::SYNTHETIC, message);
            LintReport::from_diagnostics(vec![missing], config)
        }
    }
}

/// Span of `len` bytes at `offset` inside a pair's statement text. Falls
/// back to the pair span when the text is not a verbatim slice of the input.
fn text_span(span: SourceSpan, text: &str, offset: usize, len: usize) -> SourceSpan {
    if span.len() != text.len() {
        return span;
    }
    let before = &text[..offset];
    let (start_line, start_col) = match before.rfind('\n') {
        Some(nl) => (
            span.start_line + before.matches('\n').count(),
            before[nl + 1..].chars().count() + 1,
        ),
        None => (span.start_line, span.start_col + before.chars().count()),
    };
    SourceSpan {
        start_byte: span.start_byte + offset,
        end_byte: span.start_byte + offset + len,
        start_line,
        start_col,
    }
}

fn check_statement(statement: &AidStatement, config: &LintConfig, out: &mut Vec<Diagnostic>) {
    let warn = |code, span, message: String| Diagnostic::new(code, Severity::Warning, span, message);

    if let Some(first) = statement.pairs.first() {
        if first.heading.is_some_and(|id| !id.is_tool()) {
            out.push(Diagnostic::new(
                RuleCode::E002,
                Severity::Error,
                first.heading_span,
                format!(
                    "statement must begin with the `{}` section, found `{}`",
                    HeadingId::TOOL.display(),
                    first.heading_raw
                ),
            ));
        }
    }

    let mut seen: HashMap<HeadingId, usize> = HashMap::new();
    let mut highest: Option<HeadingId> = None;
    for (index, pair) in statement.pairs.iter().enumerate() {
        match pair.heading {
            None => out.push(unknown_heading(
                &pair.heading_raw,
                pair.heading_span,
                Severity::Error,
                config.max_suggestions,
            )),
            Some(id) => {
                if resolve(&pair.heading_raw).is_alias() {
                    out.push(
                        warn(
                            RuleCode::W103,
                            pair.heading_span,
                            format!(
                                "non-canonical heading `{}`; canonical form is `{}`",
                                pair.heading_raw,
                                id.display()
                            ),
                        )
                        .with_suggestion(id.display()),
                    );
                }
                if let Some(first) = seen.get(&id) {
                    out.push(warn(
                        RuleCode::W101,
                        pair.heading_span,
                        format!("heading `{}` already appeared as pair {}", id.display(), first + 1),
                    ));
                } else {
                    seen.insert(id, index);
                }
                match highest {
                    Some(prev) if id < prev => out.push(warn(
                        RuleCode::W102,
                        pair.heading_span,
                        format!("`{}` should come before `{}`", id.display(), prev.display()),
                    )),
                    _ => highest = Some(id),
                }
            }
        }

        let text = pair.statement.as_str();
        let trimmed_len = text.trim().chars().count();
        if trimmed_len > 0 && trimmed_len < 3 {
            out.push(warn(
                RuleCode::W104,
                pair.statement_span,
                format!("statement text `{text}` is very short; is it a placeholder?"),
            ));
        }
        for (offset, c) in text.char_indices() {
            if let Some(&(_, looks_like)) = CONFUSABLES.iter().find(|(confusable, _)| *confusable == c) {
                out.push(warn(
                    RuleCode::W105,
                    text_span(pair.statement_span, text, offset, c.len_utf8()),
                    format!("U+{:04X} looks like a reserved `{looks_like}`", u32::from(c)),
                ));
            }
        }

        if statement.origin == Origin::Built {
            for (offset, c) in text.char_indices().filter(|(_, c)| RESERVED.contains(c)) {
                let code = if c == ':' { RuleCode::E004 } else { RuleCode::E006 };
                out.push(Diagnostic::new(
                    code,
                    Severity::Error,
                    text_span(pair.statement_span, text, offset, 1),
                    format!("statement text contains a reserved `{c}`"),
                ));
            }
            if trimmed_len == 0 {
                out.push(Diagnostic::new(
                    RuleCode::E007,
                    Severity::Error,
                    pair.statement_span,
                    "statement text is empty",
                ));
            }
        }
    }
}
