//! Finds statements embedded in larger documents.
//!
//! A block starts at a label and runs to the end of its paragraph (a blank
//! line or the end of the document). In Markdown, headings and thematic
//! breaks also end a block. A second label inside the same paragraph starts
//! a new block. Each block is parsed leniently and every span is reported in
//! document coordinates.

use crate::diagnostic::{sort_diagnostics, Diagnostic, RuleCode, Severity};
use crate::model::AidStatement;
use crate::parser::{find_label, parse_statement, ParseError, ParseMode, ParseOutcome};
use crate::span::{LineIndex, SourceSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DocumentFormat {
    #[default]
    PlainText,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedStatement {
    pub outcome: ParseOutcome,
    /// From the label to the end of the block, trailing whitespace excluded.
    pub document_span: SourceSpan,
    pub block_index: usize,
}

/// Words that end in a period without ending a sentence.
const ABBREVIATIONS: [&str; 14] = [
    "e.g", "i.e", "etc", "vs", "al", "cf", "approx", "v", "ver", "no", "fig", "inc", "ltd", "dr",
];

/// Extracts from raw bytes, rejecting invalid UTF-8.
pub fn extract_bytes(document: &[u8], format: DocumentFormat) -> Result<Vec<ExtractedStatement>, ParseError> {
    let text = std::str::from_utf8(document).map_err(|e| ParseError::InvalidUtf8 {
        valid_up_to: e.valid_up_to(),
    })?;
    Ok(extract(text, format))
}

/// Every statement in `document`, in document order.
pub fn extract(document: &str, format: DocumentFormat) -> Vec<ExtractedStatement> {
    let index = LineIndex::new(document);
    let mut found = Vec::new();
    let mut cursor = 0;
    while let Some(label) = find_label(document, cursor) {
        let mut block_end = block_end(document, label.start, format);
        if let Some(next) = find_label(document, label.end).filter(|next| next.start < block_end) {
            block_end = next.start;
        }
        let block_end = label.start + document[label.start..block_end].trim_end().len();
        let (statement_end, trailing) = split_trailing(document, label.end, block_end);

        let block = &document[label.start..statement_end];
        let mut outcome = match parse_statement(block, ParseMode::Lenient) {
            Ok(outcome) => outcome,
            // the block starts with a label, so this cannot happen
            Err(_) => ParseOutcome {
                statement: None,
                diagnostics: Vec::new(),
            },
        };
        translate(&mut outcome, label.start, &index);
        if let Some(start) = trailing {
            outcome.diagnostics.push(Diagnostic::new(
                RuleCode::W106,
                Severity::Warning,
                index.span(start, block_end),
                "text after the terminal period is not part of the statement",
            ));
            sort_diagnostics(&mut outcome.diagnostics);
        }

        found.push(ExtractedStatement {
            outcome,
            document_span: index.span(label.start, block_end),
            block_index: found.len(),
        });
        cursor = block_end.max(label.end);
    }
    found
}

fn is_blank(line: &str) -> bool {
    line.trim().is_empty()
}

fn is_markdown_boundary(line: &str) -> bool {
    let line = line.trim_start_matches(' ');
    let hashes = line.bytes().take_while(|&b| b == b'#').count();
    if (1..=6).contains(&hashes) && line[hashes..].chars().next().is_none_or(char::is_whitespace) {
        return true;
    }
    let marks: String = line.chars().filter(|c| !c.is_whitespace()).collect();
    marks.len() >= 3
        && ["-", "*", "_"]
            .iter()
            .any(|mark| marks.chars().all(|c| c.to_string() == *mark))
}

/// Byte offset where the paragraph containing `start` ends.
fn block_end(document: &str, start: usize, format: DocumentFormat) -> usize {
    let first_line_end = document[start..].find('\n').map_or(document.len(), |i| start + i + 1);
    let mut at = first_line_end;
    while at < document.len() {
        let line_end = document[at..].find('\n').map_or(document.len(), |i| at + i + 1);
        let line = &document[at..line_end];
        if is_blank(line) || (format == DocumentFormat::Markdown && is_markdown_boundary(line)) {
            return at;
        }
        at = line_end;
    }
    document.len()
}

/// Looks for a sentence break inside the last pair of the block. Returns the
/// end of the statement and, when prose follows it, where that prose starts.
fn split_trailing(document: &str, body_start: usize, block_end: usize) -> (usize, Option<usize>) {
    let body = &document[body_start..block_end];
    let last_segment = body.rfind(';').map_or(0, |i| i + 1);
    let Some(colon) = body[last_segment..].find(':') else {
        return (block_end, None);
    };
    let text_start = last_segment + colon + 1;
    for (offset, _) in body[text_start..].match_indices('.') {
        let dot = text_start + offset;
        let close = dot + 1 + body[dot + 1..].bytes().take_while(|&b| b == b'*' || b == b'_').count();
        let followed_by_space = body[close..].chars().next().is_some_and(char::is_whitespace);
        if !followed_by_space {
            continue;
        }
        let word_start = body[..dot].rfind(char::is_whitespace).map_or(0, |i| i + 1);
        let word = body[word_start..dot]
            .trim_start_matches(['(', '"', '\''])
            .to_lowercase();
        if ABBREVIATIONS.contains(&word.as_str()) {
            continue;
        }
        let rest = &body[close..];
        let lead = rest.len() - rest.trim_start().len();
        if rest.trim().is_empty() {
            break;
        }
        return (body_start + close, Some(body_start + close + lead));
    }
    (block_end, None)
}

fn shift(span: &mut SourceSpan, offset: usize, index: &LineIndex<'_>) {
    *span = index.span(span.start_byte + offset, span.end_byte + offset);
}

fn translate(outcome: &mut ParseOutcome, offset: usize, index: &LineIndex<'_>) {
    for diagnostic in &mut outcome.diagnostics {
        shift(&mut diagnostic.span, offset, index);
    }
    if let Some(AidStatement { pairs, label_span, .. }) = &mut outcome.statement {
        shift(label_span, offset, index);
        for pair in pairs {
            shift(&mut pair.heading_span, offset, index);
            shift(&mut pair.statement_span, offset, index);
        }
    }
}
