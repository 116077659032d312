//! The closed registry of the fourteen disclosure headings.
//!
//! Every heading has a stable [`HeadingId`] (ordinal plus slug), a canonical
//! display form, its definition, and a fixed set of tolerated aliases. Input
//! headings go through [`normalize`] before lookup, so emphasis markers,
//! casing and runs of whitespace never matter. Dash variants, `&`/`and` and
//! plural endings are folded separately and resolve as aliases.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

/// Identifier of one of the fourteen headings, in taxonomy order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HeadingId {
    ArtificialIntelligenceTool,
    Conceptualization,
    Methodology,
    InformationCollection,
    DataCollectionMethod,
    Execution,
    DataCuration,
    DataAnalysis,
    PrivacyAndSecurity,
    Interpretation,
    Visualization,
    WritingReviewEditing,
    WritingTranslation,
    ProjectAdministration,
}

impl HeadingId {
    pub const ALL: [HeadingId; 14] = [
        HeadingId::ArtificialIntelligenceTool,
        HeadingId::Conceptualization,
        HeadingId::Methodology,
        HeadingId::InformationCollection,
        HeadingId::DataCollectionMethod,
        HeadingId::Execution,
        HeadingId::DataCuration,
        HeadingId::DataAnalysis,
        HeadingId::PrivacyAndSecurity,
        HeadingId::Interpretation,
        HeadingId::Visualization,
        HeadingId::WritingReviewEditing,
        HeadingId::WritingTranslation,
        HeadingId::ProjectAdministration,
    ];

    /// The tool section, which must open every statement.
    pub const TOOL: HeadingId = HeadingId::ArtificialIntelligenceTool;

    /// Position in the taxonomy, 1 through 14.
    pub fn ordinal(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_ordinal(ordinal: u8) -> Option<HeadingId> {
        ordinal
            .checked_sub(1)
            .and_then(|i| Self::ALL.get(usize::from(i)).copied())
    }

    pub fn slug(self) -> &'static str {
        match self {
            HeadingId::ArtificialIntelligenceTool => "artificial_intelligence_tool",
            HeadingId::Conceptualization => "conceptualization",
            HeadingId::Methodology => "methodology",
            HeadingId::InformationCollection => "information_collection",
            HeadingId::DataCollectionMethod => "data_collection_method",
            HeadingId::Execution => "execution",
            HeadingId::DataCuration => "data_curation",
            HeadingId::DataAnalysis => "data_analysis",
            HeadingId::PrivacyAndSecurity => "privacy_and_security",
            HeadingId::Interpretation => "interpretation",
            HeadingId::Visualization => "visualization",
            HeadingId::WritingReviewEditing => "writing_review_editing",
            HeadingId::WritingTranslation => "writing_translation",
            HeadingId::ProjectAdministration => "project_administration",
        }
    }

    pub fn from_slug(slug: &str) -> Option<HeadingId> {
        Self::ALL.into_iter().find(|id| id.slug() == slug)
    }

    pub fn entry(self) -> &'static HeadingEntry {
        &registry().entries[usize::from(self.ordinal() - 1)]
    }

    /// Canonical display form, e.g. `Writing – Review & Editing`.
    pub fn display(self) -> &'static str {
        self.entry().display
    }

    pub fn is_tool(self) -> bool {
        self == HeadingId::TOOL
    }
}

impl fmt::Display for HeadingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display())
    }
}

/// One row of the taxonomy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeadingEntry {
    pub id: HeadingId,
    pub display: &'static str,
    pub definition: &'static str,
    /// Registered variants, already in [`normalize`]d form.
    pub aliases: &'static [&'static str],
}

/// How a raw heading matched the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchKind {
    Exact(HeadingId),
    Alias(HeadingId),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchResult {
    pub kind: MatchKind,
    /// Input after emphasis stripping, trimming, whitespace collapsing and
    /// lowercasing.
    pub normalized_input: String,
}

impl MatchResult {
    pub fn id(&self) -> Option<HeadingId> {
        match self.kind {
            MatchKind::Exact(id) | MatchKind::Alias(id) => Some(id),
            MatchKind::Unknown => None,
        }
    }

    pub fn is_alias(&self) -> bool {
        matches!(self.kind, MatchKind::Alias(_))
    }
}

// Definitions are kept word for word; downstream tooling quotes them.
const ENTRIES: [HeadingEntry; 14] = [
    HeadingEntry {
        id: HeadingId::ArtificialIntelligenceTool,
        display: "Artificial Intelligence Tool",
        definition: "The selection of tool or tools and versions of those tools used and dates of use. \
                     May also include note of any known biases or limitations of the models or data sets.",
        aliases: &["artificial intelligence tool(s)", "artificial intelligence tools"],
    },
    HeadingEntry {
        id: HeadingId::Conceptualization,
        display: "Conceptualization",
        definition: "The development of the research idea or hypothesis including framing or revision \
                     of research questions and hypotheses.",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::Methodology,
        display: "Methodology",
        definition: "The planning for the execution of the study including all direct contributions \
                     to the study design.",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::InformationCollection,
        display: "Information Collection",
        definition: "The use of artificial intelligence to surface patterns in existing literature and \
                     identify information relevant to the framing, development, or design of the study.",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::DataCollectionMethod,
        display: "Data Collection Method",
        definition: "The development or design of software or instruments used in the study.",
        aliases: &["data collection methods"],
    },
    HeadingEntry {
        id: HeadingId::Execution,
        display: "Execution",
        definition: "The direct conduct of research procedures or tasks (e.g. AI web scraping, \
                     synthetic surveys, etc.)",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::DataCuration,
        display: "Data Curation",
        definition: "The management and organization of those data.",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::DataAnalysis,
        display: "Data Analysis",
        definition: "The performance of statistical or mathematical analysis, regressions, text \
                     analysis, and more using artificial intelligence tools.",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::PrivacyAndSecurity,
        display: "Privacy and Security",
        definition: "The ways in which data privacy and security were upheld in alignment with the \
                     expectations of ethical conduct of research, disciplinary guidelines, and \
                     institutional policies.",
        aliases: &["privacy & security"],
    },
    HeadingEntry {
        id: HeadingId::Interpretation,
        display: "Interpretation",
        definition: "The use of artificial intelligence tools to categorize, summarize, or manipulate \
                     data and suggest associated conclusions.",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::Visualization,
        display: "Visualization",
        definition: "The creation of visualizations or other graphical representations of the data.",
        aliases: &[],
    },
    HeadingEntry {
        id: HeadingId::WritingReviewEditing,
        display: "Writing – Review & Editing",
        definition: "The revision and editing of the manuscript.",
        aliases: &[
            "writing - review & editing",
            "writing — review & editing",
            "writing – review and editing",
            "writing - review and editing",
            "writing — review and editing",
        ],
    },
    HeadingEntry {
        id: HeadingId::WritingTranslation,
        display: "Writing – Translation",
        definition: "The use of artificial intelligence to translate text across languages at any \
                     point in the drafting process.",
        aliases: &["writing - translation", "writing — translation"],
    },
    HeadingEntry {
        id: HeadingId::ProjectAdministration,
        display: "Project Administration",
        definition: "Any administrative tasks related to the study, including managing budgets, \
                     timelines, and communications.",
        aliases: &[],
    },
];

struct Registry {
    entries: &'static [HeadingEntry; 14],
    /// normalized canonical display -> id
    exact: HashMap<String, HeadingId>,
    /// folded key (canonical and aliases) -> id
    folded: HashMap<String, HeadingId>,
}

fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut exact = HashMap::new();
        let mut folded = HashMap::new();
        for entry in &ENTRIES {
            exact.insert(normalize(entry.display), entry.id);
            let keys = std::iter::once(normalize(entry.display)).chain(entry.aliases.iter().map(|a| normalize(a)));
            for key in keys {
                let previous = folded.insert(fold(&key), entry.id);
                assert!(
                    previous.is_none_or(|p| p == entry.id),
                    "alias {key:?} registered for two headings"
                );
            }
        }
        Registry {
            entries: &ENTRIES,
            exact,
            folded,
        }
    })
}

/// All fourteen entries in ordinal order.
pub fn all_headings() -> &'static [HeadingEntry] {
    registry().entries
}

fn is_emphasis(c: char) -> bool {
    c == '*' || c == '_'
}

fn is_dash(c: char) -> bool {
    matches!(
        c,
        '-' | '\u{2010}' | '\u{2011}' | '\u{2012}' | '\u{2013}' | '\u{2014}' | '\u{2015}' | '\u{2212}'
    )
}

/// Surface normalization: strip surrounding emphasis, trim, collapse
/// whitespace runs to one space, lowercase.
pub fn normalize(raw: &str) -> String {
    let stripped = raw.trim_matches(|c: char| is_emphasis(c) || c.is_whitespace());
    let mut out = String::with_capacity(stripped.len());
    for word in stripped.split_whitespace() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.extend(word.chars().flat_map(char::to_lowercase));
    }
    out
}

/// Folds a normalized heading into its lookup key: every dash becomes a
/// spaced hyphen and `&` becomes `and`.
fn fold(normalized: &str) -> String {
    let mut spaced = String::with_capacity(normalized.len() + 8);
    for c in normalized.chars() {
        if is_dash(c) {
            spaced.push_str(" - ");
        } else if c == '&' {
            spaced.push_str(" and ");
        } else {
            spaced.push(c);
        }
    }
    spaced.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn singular_candidate(normalized: &str) -> Option<&str> {
    if let Some(stem) = normalized.strip_suffix("(s)") {
        return Some(stem.trim_end());
    }
    let stem = normalized.strip_suffix('s')?;
    // only the final word may lose its plural ending
    (!stem.is_empty() && !stem.ends_with(' ')).then_some(stem)
}

/// Resolves a raw heading against the registry.
pub fn resolve(raw: &str) -> MatchResult {
    let normalized_input = normalize(raw);
    let reg = registry();
    let kind = if let Some(&id) = reg.exact.get(&normalized_input) {
        MatchKind::Exact(id)
    } else if let Some(&id) = reg.folded.get(&fold(&normalized_input)) {
        MatchKind::Alias(id)
    } else if let Some(&id) = singular_candidate(&normalized_input).and_then(|stem| reg.folded.get(&fold(stem))) {
        MatchKind::Alias(id)
    } else {
        MatchKind::Unknown
    };
    MatchResult { kind, normalized_input }
}

/// Levenshtein distance over Unicode scalar values.
pub fn edit_distance(a: &str, b: &str) -> usize {
    let b: Vec<char> = b.chars().collect();
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, ca) in a.chars().enumerate() {
        cur[0] = i + 1;
        for (j, &cb) in b.iter().enumerate() {
            let substitution = prev[j] + usize::from(ca != cb);
            cur[j + 1] = substitution.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Candidate headings for `raw`, nearest first.
///
/// Distance is measured between the normalized input and each normalized
/// canonical display. Candidates farther than `max(3, ceil(len / 3))` are
/// dropped, where `len` counts the characters of the normalized input. Ties
/// go to the lower ordinal.
pub fn suggest(raw: &str, limit: usize) -> Vec<(&'static HeadingEntry, usize)> {
    let input = normalize(raw);
    let cutoff = 3.max(input.chars().count().div_ceil(3));
    let mut ranked: Vec<_> = all_headings()
        .iter()
        .map(|entry| (entry, edit_distance(&input, &normalize(entry.display))))
        .filter(|&(_, distance)| distance <= cutoff)
        .collect();
    ranked.sort_by_key(|&(entry, distance)| (distance, entry.id.ordinal()));
    ranked.truncate(limit);
    ranked
}
