//! Statement data types and the validating builder.

use crate::span::SourceSpan;
use crate::taxonomy::HeadingId;

/// Characters reserved by the grammar and therefore banned from statement
/// text.
pub const RESERVED: [char; 2] = [':', ';'];

/// One `heading: statement` unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisclosurePair {
    /// Heading as written, with emphasis and surrounding whitespace removed.
    pub heading_raw: String,
    pub heading: Option<HeadingId>,
    pub statement: String,
    pub heading_span: SourceSpan,
    pub statement_span: SourceSpan,
}

impl DisclosurePair {
    /// A pair with synthetic spans and a canonical heading.
    pub fn built(heading: HeadingId, statement: impl Into<String>) -> Self {
        DisclosurePair {
            heading_raw: heading.display().to_owned(),
            heading: Some(heading),
            statement: statement.into(),
            heading_span: SourceSpan::SYNTHETIC,
            statement_span: SourceSpan::SYNTHETIC,
        }
    }

    /// Canonical display when resolved, raw heading otherwise.
    pub fn heading_text(&self) -> &str {
        if let Some(id) = self.heading {
            return id.display();
        }
        &self.heading_raw
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Parsed,
    Built,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AidStatement {
    pub pairs: Vec<DisclosurePair>,
    pub label_span: SourceSpan,
    /// Whether the terminal period was present.
    pub terminated: bool,
    pub origin: Origin,
}

impl AidStatement {
    pub fn ordinals(&self) -> Vec<Option<u8>> {
        self.pairs.iter().map(|p| p.heading.map(HeadingId::ordinal)).collect()
    }

    /// Compares content while ignoring spans, origin and the spelling of
    /// resolved headings.
    pub fn equivalent(&self, other: &AidStatement) -> bool {
        self.terminated == other.terminated
            && self.pairs.len() == other.pairs.len()
            && self.pairs.iter().zip(&other.pairs).all(|(a, b)| {
                a.heading == b.heading
                    && a.statement == b.statement
                    && (a.heading.is_some() || a.heading_raw == b.heading_raw)
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("statement text is empty")]
    EmptyStatementText,
    #[error("statement text contains reserved character `{0}`")]
    ForbiddenCharacter(char),
    #[error("the tool section is set when the builder is created and cannot be added again")]
    ToolSectionDuplicated,
}

/// Checks the character rule and non-emptiness of one statement text.
pub fn validate_statement_text(text: &str) -> Result<(), BuildError> {
    if let Some(c) = text.chars().find(|c| RESERVED.contains(c)) {
        return Err(BuildError::ForbiddenCharacter(c));
    }
    if text.trim().is_empty() {
        return Err(BuildError::EmptyStatementText);
    }
    Ok(())
}

/// Assembles a statement programmatically. The tool section is always first.
#[derive(Debug, Clone)]
pub struct StatementBuilder {
    pairs: Vec<DisclosurePair>,
}

impl StatementBuilder {
    pub fn new(tool_description: &str) -> Result<Self, BuildError> {
        validate_statement_text(tool_description)?;
        Ok(StatementBuilder {
            pairs: vec![DisclosurePair::built(HeadingId::TOOL, tool_description)],
        })
    }

    /// Appends a pair. Duplicate headings are accepted here; the linter
    /// reports them.
    pub fn add(&mut self, heading: HeadingId, statement: &str) -> Result<&mut Self, BuildError> {
        if heading.is_tool() {
            return Err(BuildError::ToolSectionDuplicated);
        }
        validate_statement_text(statement)?;
        self.pairs.push(DisclosurePair::built(heading, statement));
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn finish(self) -> AidStatement {
        AidStatement {
            pairs: self.pairs,
            label_span: SourceSpan::SYNTHETIC,
            terminated: true,
            origin: Origin::Built,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_seeds_tool_pair() {
        let builder =
            StatementBuilder::new("ChatGPT v.4o and Microsoft Copilot (University of Waterloo institutional instance)")
                .unwrap();
        assert_eq!(builder.len(), 1);
        let statement = builder.finish();
        assert_eq!(statement.ordinals(), vec![Some(1)]);
        assert_eq!(statement.origin, Origin::Built);
        assert!(statement.terminated);
        assert_eq!(statement.pairs[0].heading_span, SourceSpan::SYNTHETIC);
    }

    #[test]
    fn new_rejects_bad_text() {
        assert_eq!(StatementBuilder::new("").unwrap_err(), BuildError::EmptyStatementText);
        assert_eq!(
            StatementBuilder::new("   ").unwrap_err(),
            BuildError::EmptyStatementText
        );
        assert_eq!(
            StatementBuilder::new("Tool: GPT").unwrap_err(),
            BuildError::ForbiddenCharacter(':')
        );
    }

    #[test]
    fn add_rules() {
        let mut builder = StatementBuilder::new("ToolX").unwrap();
        builder
            .add(
                HeadingId::Conceptualization,
                "ChatGPT was used to revise research questions",
            )
            .unwrap();
        assert_eq!(builder.len(), 2);
        assert_eq!(
            builder.add(HeadingId::TOOL, "another tool").unwrap_err(),
            BuildError::ToolSectionDuplicated
        );
        assert_eq!(
            builder
                .add(HeadingId::Visualization, "made a graph; twice")
                .unwrap_err(),
            BuildError::ForbiddenCharacter(';')
        );
        assert_eq!(builder.len(), 2);
    }

    #[test]
    fn insertion_order_is_kept() {
        let mut builder = StatementBuilder::new("ToolX").unwrap();
        builder
            .add(HeadingId::ProjectAdministration, "timelines")
            .unwrap()
            .add(HeadingId::Conceptualization, "questions")
            .unwrap()
            .add(HeadingId::Conceptualization, "more questions")
            .unwrap();
        assert_eq!(builder.finish().ordinals(), vec![Some(1), Some(14), Some(2), Some(2)]);
    }

    #[test]
    fn fullwidth_colon_is_not_reserved() {
        assert!(validate_statement_text("Tool\u{FF1A} GPT").is_ok());
    }
}
