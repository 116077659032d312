use std::io::IsTerminal;

use aid_core::{Diagnostic, Severity};

/// Colour only on an interactive stderr, and never when `NO_COLOR` is set.
pub fn use_color() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty()) && std::io::stderr().is_terminal()
}

/// `path:line:col: severity[code]: message`, plus a help line for suggestions.
pub fn render(path: &str, diagnostic: &Diagnostic, color: bool) -> String {
    let span = &diagnostic.span;
    let (label, paint) = match diagnostic.severity {
        Severity::Error => ("error", "\x1b[1;31m"),
        Severity::Warning => ("warning", "\x1b[1;33m"),
    };
    let label = if color {
        format!("{paint}{label}\x1b[0m")
    } else {
        label.to_owned()
    };
    let mut line = format!(
        "{path}:{}:{}: {label}[{}]: {}",
        span.start_line,
        span.start_col,
        diagnostic.code.as_str(),
        diagnostic.message
    );
    if let Some(suggestion) = &diagnostic.suggestion {
        line.push_str(&format!("\n  help: did you mean `{suggestion}`?"));
    }
    line
}

pub fn print_diagnostics(path: &str, diagnostics: &[Diagnostic]) {
    let color = use_color();
    for diagnostic in diagnostics {
        eprintln!("{}", render(path, diagnostic, color));
    }
}

pub fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}
