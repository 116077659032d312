//! Single-fault variants of a well-formed statement, each paired with the
//! rule code and byte span a linter must report for it.
//!
//! The generator only does string surgery on `heading: text` pieces and
//! tracks offsets while re-assembling; it never calls into the parser.

#![allow(dead_code)]

#[derive(Debug, Clone)]
pub struct Mutation {
    pub name: String,
    pub text: String,
    pub code: &'static str,
    pub span: (usize, usize),
}

#[derive(Debug, Clone)]
struct Piece {
    /// Heading with its emphasis and colon, e.g. `*Visualization:*`.
    head: String,
    text: String,
}

struct Layout {
    text: String,
    /// (head start, text start, text end) per piece.
    offsets: Vec<(usize, usize, usize)>,
}

const LABEL: &str = "AID Statement:";

fn pieces(source: &str) -> Vec<Piece> {
    let body = source.trim_end().strip_prefix(LABEL).expect("label").trim();
    let body = body.strip_suffix('.').expect("terminal period");
    body.split(';')
        .map(|segment| {
            let segment = segment.trim();
            let colon = segment.find(':').expect("separator");
            let stars = segment[colon + 1..].bytes().take_while(|&b| b == b'*').count();
            let head_end = colon + 1 + stars;
            Piece {
                head: segment[..head_end].to_owned(),
                text: segment[head_end..].trim().to_owned(),
            }
        })
        .collect()
}

fn layout(pieces: &[Piece], separator: &str, terminator: &str) -> Layout {
    let mut text = format!("{LABEL} ");
    let mut offsets = Vec::new();
    for (i, piece) in pieces.iter().enumerate() {
        if i > 0 {
            text.push_str(separator);
        }
        let head_start = text.len();
        text.push_str(&piece.head);
        text.push(' ');
        let text_start = text.len();
        text.push_str(&piece.text);
        offsets.push((head_start, text_start, text.len()));
    }
    text.push_str(terminator);
    Layout { text, offsets }
}

/// Byte range of the bare heading name inside a head like `*Name:*`.
fn name_range(head: &str) -> (usize, usize) {
    let trivia = |c: char| c == '*' || c == '_' || c == ':' || c == ' ';
    let start = head.len() - head.trim_start_matches(trivia).len();
    (start, start + head.trim_matches(trivia).len())
}

/// Index of the space closest to the middle of `text`.
fn middle_space(text: &str) -> usize {
    let mid = text.len() / 2;
    text.match_indices(' ')
        .map(|(i, _)| i)
        .min_by_key(|&i| i.abs_diff(mid))
        .expect("statement text has at least two words")
}

pub fn reassemble(source: &str) -> String {
    layout(&pieces(source), "; ", ".").text
}

pub fn mutations(source: &str, tag: &str) -> Vec<Mutation> {
    let original = pieces(source);
    let base = layout(&original, "; ", ".");
    let mut out = Vec::new();

    for (name, terminator) in [
        ("period-removed", ""),
        ("period-to-bang", "!"),
        ("period-to-question", "?"),
    ] {
        let variant = layout(&original, "; ", terminator);
        let end = variant.text.len();
        out.push(Mutation {
            name: format!("{tag}/{name}"),
            text: variant.text,
            code: "AID-E003",
            span: (end, end),
        });
    }

    for k in 1..original.len() {
        let mut swapped = original.clone();
        swapped.swap(0, k);
        let variant = layout(&swapped, "; ", ".");
        let (head_start, _, _) = variant.offsets[0];
        let (s, e) = name_range(&swapped[0].head);
        out.push(Mutation {
            name: format!("{tag}/swap-0-{k}"),
            text: variant.text,
            code: "AID-E002",
            span: (head_start + s, head_start + e),
        });
    }

    for (i, piece) in original.iter().enumerate() {
        let space = middle_space(&piece.text);
        let (_, text_start, text_end) = base.offsets[i];

        let mut with_colon = original.clone();
        with_colon[i].text.insert(space, ':');
        out.push(Mutation {
            name: format!("{tag}/colon-in-{i}"),
            text: layout(&with_colon, "; ", ".").text,
            code: "AID-E004",
            span: (text_start + space, text_start + space + 1),
        });

        let mut with_semicolon = original.clone();
        with_semicolon[i].text.replace_range(space..space + 1, "; ");
        out.push(Mutation {
            name: format!("{tag}/semicolon-in-{i}"),
            text: layout(&with_semicolon, "; ", ".").text,
            code: "AID-E006",
            span: (text_start + space + 2, text_end + 1),
        });

        let (head_start, _, _) = base.offsets[i];
        let (s, _) = name_range(&piece.head);
        for distance in [1, 2] {
            let mut misspelled = original.clone();
            let head = &mut misspelled[i].head;
            let replaced = head[s + 1..].chars().next().unwrap();
            let substitute = if replaced == 'x' { "q" } else { "x" };
            head.replace_range(s + 1..s + 1 + replaced.len_utf8(), substitute);
            let mut end = s + head[s..].trim_end_matches(['*', ':', ' ']).len();
            if distance == 2 {
                let last = head[..end].chars().next_back().unwrap();
                head.replace_range(end - last.len_utf8()..end, "");
                end -= last.len_utf8();
            }
            out.push(Mutation {
                name: format!("{tag}/misspell-{i}-d{distance}"),
                text: layout(&misspelled, "; ", ".").text,
                code: "AID-E008",
                span: (head_start + s, head_start + end),
            });
        }

        if i + 1 < original.len() {
            // the separator after piece i sits at text_end; insert a second one
            let mut text = base.text.clone();
            text.insert(text_end + 1, ';');
            out.push(Mutation {
                name: format!("{tag}/empty-after-{i}"),
                text,
                code: "AID-E007",
                span: (text_end + 1, text_end + 1),
            });
        }
    }

    let dangling = layout(&original, "; ", "; .");
    let at = dangling.text.len() - 2;
    out.push(Mutation {
        name: format!("{tag}/dangling-separator"),
        text: dangling.text,
        code: "AID-E007",
        span: (at, at),
    });

    out
}
