//! Text to [`AidStatement`], with byte-accurate spans and diagnostics.
//!
//! The grammar is small enough to run as a fixed pipeline over the input:
//! find the label, split the body on every `;` (the character is reserved,
//! so the split is unambiguous), peel the terminal `.` off the last segment,
//! split each segment at its first `:`, then resolve headings.

use crate::diagnostic::{sort_diagnostics, Diagnostic, RuleCode, Severity};
use crate::model::{AidStatement, DisclosurePair, Origin};
use crate::span::{LineIndex, SourceSpan};
use crate::taxonomy::{self, HeadingId, MatchKind};

/// Number of heading candidates offered for an unknown heading.
pub const DEFAULT_SUGGESTIONS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// Any error-severity finding suppresses the statement.
    Strict,
    /// Always returns a best-effort statement alongside the diagnostics.
    #[default]
    Lenient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseOutcome {
    pub statement: Option<AidStatement>,
    /// Sorted by span start.
    pub diagnostics: Vec<Diagnostic>,
}

impl ParseOutcome {
    pub fn has_errors(&self) -> bool {
        self.diagnostics.iter().any(Diagnostic::is_error)
    }

    pub fn codes(&self) -> Vec<RuleCode> {
        self.diagnostics.iter().map(|d| d.code).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8 (first invalid byte at offset {valid_up_to})")]
    InvalidUtf8 { valid_up_to: usize },
    #[error("input contains neither an `AID Statement:` label nor any `heading: statement` pair")]
    NotAStatement,
}

/// A label occurrence found in some text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct LabelMatch {
    pub start: usize,
    pub end: usize,
    pub canonical_casing: bool,
}

fn is_emphasis(b: u8) -> bool {
    b == b'*' || b == b'_'
}

fn skip_while(bytes: &[u8], mut at: usize, pred: impl Fn(u8) -> bool) -> usize {
    while at < bytes.len() && pred(bytes[at]) {
        at += 1;
    }
    at
}

/// Tries to match the label starting exactly at `at` (where leading emphasis
/// may begin).
pub(crate) fn match_label_at(input: &str, at: usize) -> Option<LabelMatch> {
    let bytes = input.as_bytes();
    let word = skip_while(bytes, at, is_emphasis);
    if word > at && word - at > 3 {
        return None;
    }
    if word > 0 && word == at {
        let prev = input[..at].chars().next_back()?;
        if prev.is_alphanumeric() {
            return None;
        }
    }
    let aid = bytes.get(word..word + 3)?;
    if !aid.eq_ignore_ascii_case(b"aid") {
        return None;
    }
    let gap = skip_while(bytes, word + 3, |b| b == b' ' || b == b'\t' || b == b'\n' || b == b'\r');
    if gap == word + 3 {
        return None;
    }
    let statement = bytes.get(gap..gap + 9)?;
    if !statement.eq_ignore_ascii_case(b"statement") {
        return None;
    }
    let mut cursor = skip_while(bytes, gap + 9, is_emphasis);
    cursor = skip_while(bytes, cursor, |b| b == b' ' || b == b'\t');
    if bytes.get(cursor) != Some(&b':') {
        return None;
    }
    let end = skip_while(bytes, cursor + 1, is_emphasis);
    let canonical_casing = aid == b"AID" && statement == b"Statement";
    Some(LabelMatch {
        start: at,
        end,
        canonical_casing,
    })
}

/// Finds the first label at or after byte `from`.
pub(crate) fn find_label(input: &str, from: usize) -> Option<LabelMatch> {
    let bytes = input.as_bytes();
    let mut at = from;
    while at < bytes.len() {
        let b = bytes[at];
        if b == b'a' || b == b'A' {
            // include a directly preceding emphasis run in the match
            let mut start = at;
            while start > from && is_emphasis(bytes[start - 1]) && at - start < 3 {
                start -= 1;
            }
            let found = (start..=at).find_map(|s| match_label_at(input, s));
            if found.is_some() {
                return found;
            }
        }
        at += 1;
    }
    None
}

/// Span of the first `AID Statement:` label in `input`, if any.
pub fn locate_label(input: &str) -> Option<SourceSpan> {
    let found = find_label(input, 0)?;
    Some(LineIndex::new(input).span(found.start, found.end))
}

/// Parses raw bytes, rejecting invalid UTF-8.
pub fn parse_bytes(input: &[u8], mode: ParseMode) -> Result<ParseOutcome, ParseError> {
    let text = std::str::from_utf8(input).map_err(|e| ParseError::InvalidUtf8 {
        valid_up_to: e.valid_up_to(),
    })?;
    parse_statement(text, mode)
}

/// Parses one statement occupying the whole of `input`.
pub fn parse_statement(input: &str, mode: ParseMode) -> Result<ParseOutcome, ParseError> {
    Parser::new(input, mode).run()
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    index: LineIndex<'a>,
    mode: ParseMode,
    diagnostics: Vec<Diagnostic>,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, mode: ParseMode) -> Self {
        Parser {
            input,
            bytes: input.as_bytes(),
            index: LineIndex::new(input),
            mode,
            diagnostics: Vec::new(),
        }
    }

    fn emit(
        &mut self,
        code: RuleCode,
        severity: Severity,
        span: SourceSpan,
        message: impl Into<String>,
    ) -> &mut Diagnostic {
        self.diagnostics.push(Diagnostic::new(code, severity, span, message));
        self.diagnostics.last_mut().expect("just pushed")
    }

    fn error(&mut self, code: RuleCode, span: SourceSpan, message: impl Into<String>) -> &mut Diagnostic {
        self.emit(code, Severity::Error, span, message)
    }

    /// Shrinks `start..end` past leading and trailing whitespace.
    fn trim(&self, start: usize, end: usize) -> (usize, usize) {
        let slice = &self.input[start..end];
        let lead = slice.len() - slice.trim_start().len();
        let trimmed = slice.trim();
        (start + lead, start + lead + trimmed.len())
    }

    /// Shrinks past whitespace and emphasis markers on both sides.
    fn trim_trivia(&self, start: usize, end: usize) -> (usize, usize) {
        let slice = &self.input[start..end];
        let is_trivia = |c: char| c.is_whitespace() || c == '*' || c == '_';
        let lead = slice.len() - slice.trim_start_matches(is_trivia).len();
        let trimmed = slice.trim_matches(is_trivia);
        (start + lead, start + lead + trimmed.len())
    }

    fn run(mut self) -> Result<ParseOutcome, ParseError> {
        let mut start = 0;
        if self.input.starts_with('\u{FEFF}') {
            start = '\u{FEFF}'.len_utf8();
        }
        let (content_start, content_end) = self.trim(start, self.input.len());

        let label = match_label_at(self.input, content_start);
        if label.is_none() && !self.input[content_start..content_end].contains(':') {
            return Err(ParseError::NotAStatement);
        }
        let (label_span, body_start) = match label {
            Some(found) => {
                let span = self.index.span(found.start, found.end);
                if !found.canonical_casing {
                    self.emit(
                        RuleCode::W107,
                        Severity::Warning,
                        span,
                        "label should be written `AID Statement:`",
                    )
                    .suggestion = Some("AID Statement:".to_owned());
                }
                (span, found.end)
            }
            None => {
                let span = self.index.point(content_start);
                self.error(
                    RuleCode::E001,
                    span,
                    "statement does not begin with the `AID Statement:` label",
                );
                (span, content_start)
            }
        };

        let (_, mut body_end) = self.trim(body_start, content_end.max(body_start));
        // closing emphasis after the terminal period, as in `**...study.**`
        let unemphasized = self.input[body_start..body_end].trim_end_matches(['*', '_']);
        if unemphasized.ends_with('.') {
            body_end = body_start + unemphasized.len();
        }
        let mut segments: Vec<(usize, usize)> = Vec::new();
        let mut seg_start = body_start;
        for (offset, _) in self.input[body_start..body_end].match_indices(';') {
            let at = body_start + offset;
            segments.push((seg_start, at));
            seg_start = at + 1;
        }
        segments.push((seg_start, body_end));

        let terminated = body_end > body_start && self.bytes[body_end - 1] == b'.';
        if terminated {
            if let Some(last) = segments.last_mut() {
                last.1 = body_end - 1;
            }
        } else {
            self.error(
                RuleCode::E003,
                self.index.point(body_end),
                "the final pair must end with a period",
            );
        }

        let mut pairs = Vec::with_capacity(segments.len());
        for (seg_start, seg_end) in segments {
            if let Some(pair) = self.parse_segment(seg_start, seg_end) {
                pairs.push(pair);
            }
        }

        if let Some(first) = pairs.first() {
            if first.heading.is_some_and(|id| !id.is_tool()) {
                let span = first.heading_span;
                let message = format!(
                    "statement must begin with the `{}` section, found `{}`",
                    HeadingId::TOOL.display(),
                    first.heading_raw
                );
                self.error(RuleCode::E002, span, message);
            }
        }

        sort_diagnostics(&mut self.diagnostics);
        let suppress = self.mode == ParseMode::Strict && self.diagnostics.iter().any(Diagnostic::is_error);
        let statement = (!pairs.is_empty() && !suppress).then_some(AidStatement {
            pairs,
            label_span,
            terminated,
            origin: Origin::Parsed,
        });
        Ok(ParseOutcome {
            statement,
            diagnostics: self.diagnostics,
        })
    }

    fn parse_segment(&mut self, seg_start: usize, seg_end: usize) -> Option<DisclosurePair> {
        let (start, end) = self.trim(seg_start, seg_end);
        if start == end {
            self.error(
                RuleCode::E007,
                self.index.point(seg_start),
                "empty segment between separators",
            );
            return None;
        }
        let Some(colon) = self.input[start..end].find(':').map(|i| start + i) else {
            let span = self.index.span(start, end);
            self.error(RuleCode::E006, span, "segment has no `heading: statement` separator");
            return None;
        };

        let (heading_start, heading_end) = self.trim_trivia(start, colon);
        if heading_start == heading_end {
            let span = self.index.span(start, end);
            self.error(RuleCode::E006, span, "segment has no heading before the `:` separator");
            return None;
        }
        // emphasis closing right after the colon belongs to the heading, as in `*Heading:*`
        let after_colon = skip_while(self.bytes, colon + 1, is_emphasis).min(end);
        let (text_start, text_end) = self.trim(after_colon, end);

        for (offset, _) in self.input[text_start..text_end].match_indices(':') {
            let at = text_start + offset;
            self.error(
                RuleCode::E004,
                self.index.span(at, at + 1),
                "statement text contains a reserved `:`",
            );
        }
        if text_start == text_end {
            self.error(RuleCode::E007, self.index.point(text_start), "statement text is empty");
        }

        let heading_raw = &self.input[heading_start..heading_end];
        let heading_span = self.index.span(heading_start, heading_end);
        let resolved = taxonomy::resolve(heading_raw);
        match resolved.kind {
            MatchKind::Exact(_) => {}
            MatchKind::Alias(id) => {
                let message = format!(
                    "non-canonical heading `{heading_raw}`; canonical form is `{}`",
                    id.display()
                );
                self.emit(RuleCode::W103, Severity::Warning, heading_span, message)
                    .suggestion = Some(id.display().to_owned());
            }
            MatchKind::Unknown => {
                let severity = match self.mode {
                    ParseMode::Strict => Severity::Error,
                    ParseMode::Lenient => Severity::Warning,
                };
                let diagnostic = unknown_heading(heading_raw, heading_span, severity, DEFAULT_SUGGESTIONS);
                self.diagnostics.push(diagnostic);
            }
        }

        Some(DisclosurePair {
            heading_raw: heading_raw.to_owned(),
            heading: resolved.id(),
            statement: self.input[text_start..text_end].to_owned(),
            heading_span,
            statement_span: self.index.span(text_start, text_end),
        })
    }
}

/// Builds the AID-E008 finding, listing up to `limit` candidates.
pub(crate) fn unknown_heading(raw: &str, span: SourceSpan, severity: Severity, limit: usize) -> Diagnostic {
    let candidates = taxonomy::suggest(raw, limit);
    let mut message = format!("unknown heading `{raw}`");
    if !candidates.is_empty() {
        let names: Vec<String> = candidates.iter().map(|(e, _)| format!("`{}`", e.display)).collect();
        message.push_str("; did you mean ");
        message.push_str(&names.join(", "));
        message.push('?');
    }
    let mut diagnostic = Diagnostic::new(RuleCode::E008, severity, span, message);
    diagnostic.suggestion = candidates.first().map(|(e, _)| e.display.to_owned());
    diagnostic
}
