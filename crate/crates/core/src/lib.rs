//! Parsing, linting, formatting and extraction of AI Disclosure (AID)
//! Statements.
//!
//! An AID Statement is a single sentence appended to a work that discloses
//! how AI tools were used, one `heading: statement` pair per stage:
//!
//! ```text
//! AID Statement: Artificial Intelligence Tool: ToolX; Visualization: ToolX drew the figures.
//! ```
//!
//! ```
//! use aid_core::{parse_statement, ParseMode, HeadingId};
//!
//! let outcome = parse_statement(
//!     "AID Statement: Artificial Intelligence Tool: ToolX; Visualization: ToolX drew the figures.",
//!     ParseMode::Strict,
//! )
//! .unwrap();
//! let statement = outcome.statement.unwrap();
//! assert_eq!(statement.pairs[1].heading, Some(HeadingId::Visualization));
//! ```

pub mod diagnostic;
pub mod extractor;
pub mod formatter;
pub mod interchange;
pub mod linter;
pub mod model;
pub mod parser;
pub mod span;
pub mod taxonomy;

pub use diagnostic::{Diagnostic, RuleCode, Severity};
pub use extractor::{extract, DocumentFormat, ExtractedStatement};
pub use formatter::{canonicalize, format_text, Style};
pub use interchange::{from_json, json_schema, to_json, InterchangeError};
pub use linter::{lint, lint_text, rule_catalog, LintConfig, LintReport, Verdict};
pub use model::{AidStatement, BuildError, DisclosurePair, Origin, StatementBuilder};
pub use parser::{locate_label, parse_bytes, parse_statement, ParseError, ParseMode, ParseOutcome};
pub use span::SourceSpan;
pub use taxonomy::{all_headings, resolve, suggest, HeadingEntry, HeadingId, MatchKind, MatchResult};
