use crate::model::AidStatement;
use crate::taxonomy::HeadingId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Plain,
    /// Headings wrapped in single asterisks, colon outside the emphasis.
    Markdown,
}

/// Renders `statement` as a single canonical line.
///
/// Resolved headings use their canonical display, unresolved ones keep the
/// raw text. Whitespace runs inside statement text collapse to one space.
pub fn format_text(statement: &AidStatement, style: Style) -> String {
    let mut out = String::from("AID Statement: ");
    for (i, pair) in statement.pairs.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        let heading = pair.heading_text();
        match style {
            Style::Plain => out.push_str(heading),
            Style::Markdown => {
                out.push('*');
                out.push_str(heading);
                out.push('*');
            }
        }
        out.push(':');
        for word in pair.statement.split_whitespace() {
            out.push(' ');
            out.push_str(word);
        }
    }
    out.push('.');
    out
}

/// Rewrites resolved headings to their canonical display and, when
/// `reorder` is set, sorts pairs into taxonomy order.
///
/// Sorting is stable. An unresolved pair travels with the closest resolved
/// pair before it; unresolved pairs at the very start stay at the start.
pub fn canonicalize(statement: &AidStatement, reorder: bool) -> AidStatement {
    let mut pairs = statement.pairs.clone();
    for pair in &mut pairs {
        if let Some(id) = pair.heading {
            pair.heading_raw = id.display().to_owned();
        }
    }
    if reorder {
        let mut groups: Vec<(u8, Vec<_>)> = Vec::new();
        for pair in pairs {
            match (pair.heading, groups.last_mut()) {
                (None, Some(group)) => group.1.push(pair),
                (None, None) => groups.push((0, vec![pair])),
                (Some(id), _) => groups.push((HeadingId::ordinal(id), vec![pair])),
            }
        }
        groups.sort_by_key(|(ordinal, _)| *ordinal);
        pairs = groups.into_iter().flat_map(|(_, group)| group).collect();
    }
    AidStatement {
        pairs,
        label_span: statement.label_span,
        terminated: true,
        origin: statement.origin,
    }
}
