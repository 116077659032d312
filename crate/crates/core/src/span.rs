use serde::{Deserialize, Serialize};

/// A byte range in some input text, with the 1-based line and column of its
/// start. Columns count Unicode scalar values, not bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SourceSpan {
    pub start_byte: usize,
    pub end_byte: usize,
    pub start_line: usize,
    pub start_col: usize,
}

impl SourceSpan {
    /// The zero-length anchor used for statements that were never parsed.
    pub const SYNTHETIC: SourceSpan = SourceSpan {
        start_byte: 0,
        end_byte: 0,
        start_line: 1,
        start_col: 1,
    };

    pub fn len(&self) -> usize {
        self.end_byte - self.start_byte
    }

    pub fn is_empty(&self) -> bool {
        self.start_byte == self.end_byte
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.start_byte..self.end_byte
    }

    pub fn contains(&self, other: &SourceSpan) -> bool {
        self.start_byte <= other.start_byte && other.end_byte <= self.end_byte
    }
}

/// Maps byte offsets of one text to line/column positions.
#[derive(Debug, Clone)]
pub struct LineIndex<'a> {
    text: &'a str,
    line_starts: Vec<usize>,
}

impl<'a> LineIndex<'a> {
    pub fn new(text: &'a str) -> Self {
        let line_starts = std::iter::once(0)
            .chain(text.match_indices('\n').map(|(i, _)| i + 1))
            .collect();
        LineIndex { text, line_starts }
    }

    /// Builds a span for `start..end`. Offsets must lie on char boundaries.
    pub fn span(&self, start: usize, end: usize) -> SourceSpan {
        debug_assert!(start <= end && end <= self.text.len());
        let line = self.line_starts.partition_point(|&s| s <= start);
        let line_start = self.line_starts[line - 1];
        SourceSpan {
            start_byte: start,
            end_byte: end,
            start_line: line,
            start_col: self.text[line_start..start].chars().count() + 1,
        }
    }

    pub fn point(&self, at: usize) -> SourceSpan {
        self.span(at, at)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_and_column() {
        let text = "ab\ncdé\n\nf";
        let index = LineIndex::new(text);
        assert_eq!(index.span(0, 1).start_line, 1);
        let c = index.span(3, 4);
        assert_eq!((c.start_line, c.start_col), (2, 1));
        // é is two bytes but one column
        let after = index.point(7);
        assert_eq!((after.start_line, after.start_col), (2, 4));
        let blank = index.point(8);
        assert_eq!((blank.start_line, blank.start_col), (3, 1));
        let last = index.point(text.len());
        assert_eq!((last.start_line, last.start_col), (4, 2));
    }
}
