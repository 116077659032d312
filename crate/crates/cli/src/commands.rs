use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use aid_core::linter::{lint_outcome, LintConfig};
use aid_core::{
    all_headings, canonicalize, format_text, from_json, interchange::to_json_value, lint_text, parse_statement,
    resolve, suggest, to_json, DocumentFormat, ExtractedStatement, HeadingId, LintReport, ParseError, ParseMode,
    StatementBuilder, Style,
};
use serde_json::json;

use crate::output::{plural, print_diagnostics};

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn content(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

type CommandResult = Result<ExitCode, Failure>;

fn exit(success: bool) -> ExitCode {
    if success {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn display_name(path: &Path) -> String {
    if path.as_os_str() == "-" {
        "<stdin>".to_owned()
    } else {
        path.display().to_string()
    }
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, Failure> {
    let mut bytes = Vec::new();
    let result = if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::read(path).map(|b| bytes = b)
    };
    result.map_err(|e| Failure::usage(format!("{}: {e}", display_name(path))))?;
    Ok(bytes)
}

/// Reads UTF-8 text; undecodable input is a content failure, not an I/O one.
fn read_text(path: &Path) -> Result<String, Failure> {
    String::from_utf8(read_bytes(path)?).map_err(|e| {
        Failure::content(format!(
            "{}: {}",
            display_name(path),
            ParseError::InvalidUtf8 {
                valid_up_to: e.utf8_error().valid_up_to()
            }
        ))
    })
}

fn load_config(config: Option<&Path>, strict: bool, lenient: bool) -> Result<LintConfig, Failure> {
    let mut loaded = match config {
        Some(path) => {
            let source =
                std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            LintConfig::from_toml(&source).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        None => LintConfig::default(),
    };
    let mode = if strict {
        Some(ParseMode::Strict)
    } else if lenient {
        Some(ParseMode::Lenient)
    } else {
        None
    };
    if let Some(mode) = mode {
        loaded = loaded.with_mode(mode).map_err(|e| Failure::usage(e.to_string()))?;
    }
    Ok(loaded)
}

fn summary(name: &str, report: &LintReport) -> String {
    format!(
        "{name}: {} ({}, {})",
        if report.passed() { "pass" } else { "fail" },
        plural(report.error_count, "error"),
        plural(report.warning_count, "warning")
    )
}

pub fn lint(path: &Path, strict: bool, lenient: bool, config: Option<&Path>, json: bool) -> CommandResult {
    let config = load_config(config, strict, lenient)?;
    let name = display_name(path);
    let text = read_text(path)?;
    let report = lint_text(&text, &config);
    if json {
        let mut value = serde_json::to_value(&report).expect("report serializes");
        value["path"] = json!(name);
        println!("{value}");
    } else {
        print_diagnostics(&name, &report.diagnostics);
        eprintln!("{}", summary(&name, &report));
    }
    Ok(exit(report.passed()))
}

pub fn fmt(path: &Path, markdown: bool, reorder: bool, check: bool) -> CommandResult {
    let name = display_name(path);
    let text = read_text(path)?;
    let report = lint_text(&text, &LintConfig::lenient());
    let outcome = parse_statement(&text, ParseMode::Lenient).ok();
    let statement = match outcome.and_then(|o| o.statement) {
        Some(statement) if report.passed() => statement,
        _ => {
            print_diagnostics(&name, &report.diagnostics);
            return Err(Failure::content(format!(
                "{name}: cannot format a statement with errors"
            )));
        }
    };
    let style = if markdown { Style::Markdown } else { Style::Plain };
    let formatted = format_text(&canonicalize(&statement, reorder), style);
    if check {
        let current = text
            .strip_suffix('\n')
            .map_or(text.as_str(), |t| t.strip_suffix('\r').unwrap_or(t));
        if current != formatted {
            eprintln!("{name}: not canonically formatted");
            return Ok(ExitCode::from(1));
        }
        return Ok(ExitCode::SUCCESS);
    }
    println!("{formatted}");
    Ok(ExitCode::SUCCESS)
}

struct FileResult {
    name: String,
    found: Result<Vec<(ExtractedStatement, LintReport)>, Failure>,
}

fn extract_file(path: &Path, format: DocumentFormat) -> FileResult {
    let name = display_name(path);
    let found = read_text(path).map(|text| {
        aid_core::extract(&text, format)
            .into_iter()
            .map(|block| {
                let report = lint_outcome(&block.outcome, &LintConfig::lenient());
                (block, report)
            })
            .collect()
    });
    FileResult { name, found }
}

fn extract_paths(paths: &[PathBuf], markdown: bool) -> Vec<FileResult> {
    let format = if markdown {
        DocumentFormat::Markdown
    } else {
        DocumentFormat::PlainText
    };
    let mut sorted: Vec<&PathBuf> = paths.iter().collect();
    sorted.sort();
    // stdin cannot be shared between threads; read it on this one
    let mut results: Vec<FileResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = sorted
            .iter()
            .filter(|p| p.as_os_str() != "-")
            .map(|p| scope.spawn(move || extract_file(p, format)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("extraction thread"))
            .collect()
    });
    if sorted.iter().any(|p| p.as_os_str() == "-") {
        results.push(extract_file(Path::new("-"), format));
    }
    results.sort_by(|a, b| a.name.cmp(&b.name));
    results
}

pub fn extract(paths: &[PathBuf], json: bool, markdown: bool, fail_if_none: bool) -> CommandResult {
    let results = extract_paths(paths, markdown);
    let mut worst = 0u8;
    let mut total = 0usize;
    let mut records = Vec::new();
    for result in &results {
        let blocks = match &result.found {
            Ok(blocks) => blocks,
            Err(failure) => {
                eprintln!("aid: {}", failure.message);
                worst = worst.max(failure.code);
                continue;
            }
        };
        for (block, report) in blocks {
            total += 1;
            let span = &block.document_span;
            if json {
                records.push(json!({
                    "path": result.name,
                    "block_index": block.block_index,
                    "document_span": span,
                    "statement": block.outcome.statement.as_ref().map(|s| to_json_value(s, true)),
                    "diagnostics": report.diagnostics,
                }));
            } else {
                let pairs = block.outcome.statement.as_ref().map_or(0, |s| s.pairs.len());
                println!(
                    "{}:{}:{}: statement {} ({}, {}, {})",
                    result.name,
                    span.start_line,
                    span.start_col,
                    block.block_index,
                    plural(pairs, "pair"),
                    plural(report.error_count, "error"),
                    plural(report.warning_count, "warning")
                );
                print_diagnostics(&result.name, &report.diagnostics);
            }
        }
    }
    if json {
        println!("{}", serde_json::Value::Array(records));
    }
    if worst == 2 {
        return Ok(ExitCode::from(2));
    }
    if fail_if_none && total == 0 {
        eprintln!("aid: no AID Statement found");
        return Ok(ExitCode::from(1));
    }
    Ok(exit(worst == 0))
}

pub fn convert(path: &Path, to_json_output: bool, spans: bool) -> CommandResult {
    let name = display_name(path);
    let text = read_text(path)?;
    if to_json_output {
        let report = lint_text(&text, &LintConfig::lenient());
        let statement = parse_statement(&text, ParseMode::Lenient)
            .ok()
            .and_then(|o| o.statement);
        match statement {
            Some(statement) if report.passed() => {
                println!("{}", to_json(&statement, spans));
                Ok(ExitCode::SUCCESS)
            }
            _ => {
                print_diagnostics(&name, &report.diagnostics);
                Err(Failure::content(format!(
                    "{name}: cannot convert a statement with errors"
                )))
            }
        }
    } else {
        let statement = from_json(&text).map_err(|e| Failure::content(format!("{name}: {e}")))?;
        println!("{}", format_text(&statement, Style::Plain));
        Ok(ExitCode::SUCCESS)
    }
}

fn resolve_heading(raw: &str) -> Result<HeadingId, Failure> {
    if let Some(id) = resolve(raw).id() {
        return Ok(id);
    }
    let options: Vec<String> = suggest(raw, 3)
        .iter()
        .map(|(e, _)| format!("`{}`", e.display))
        .collect();
    let hint = if options.is_empty() {
        "run `aid headings` for the list".to_owned()
    } else {
        format!("did you mean {}?", options.join(", "))
    };
    Err(Failure::content(format!("unknown heading `{raw}`; {hint}")))
}

pub fn new(tool: &str, pairs: &[String], markdown: bool) -> CommandResult {
    let mut builder = StatementBuilder::new(tool).map_err(|e| Failure::content(format!("--tool: {e}")))?;
    for pair in pairs {
        let (heading, text) = pair
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("--pair `{pair}`: expected HEADING=TEXT")))?;
        let id = resolve_heading(heading)?;
        builder
            .add(id, text)
            .map_err(|e| Failure::content(format!("--pair `{heading}`: {e}")))?;
    }
    let style = if markdown { Style::Markdown } else { Style::Plain };
    println!("{}", format_text(&canonicalize(&builder.finish(), false), style));
    Ok(ExitCode::SUCCESS)
}

pub fn headings(json: bool) -> CommandResult {
    if json {
        let rows: Vec<_> = all_headings()
            .iter()
            .map(|e| {
                json!({
                    "ordinal": e.id.ordinal(),
                    "slug": e.id.slug(),
                    "display": e.display,
                    "definition": e.definition,
                    "aliases": e.aliases,
                })
            })
            .collect();
        println!("{}", serde_json::Value::Array(rows));
    } else {
        for e in all_headings() {
            println!(
                "{}\t{}\t{}\t{}\t{}",
                e.id.ordinal(),
                e.id.slug(),
                e.display,
                e.definition,
                e.aliases.join(", ")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}
