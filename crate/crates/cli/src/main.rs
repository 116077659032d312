//! `aid`: lint, format, extract, convert and generate AID Statements.
//!
//! Exit codes: 0 success, 1 content failure (lint errors, unformatted input,
//! unparseable statements), 2 usage or I/O failure.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "aid", version, about = "Tools for AI Disclosure (AID) Statements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Representation {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check a statement against the rule catalog.
    Lint {
        /// File to read, or `-` for standard input.
        #[arg(default_value = "-")]
        path: PathBuf,
        /// Unknown headings are errors.
        #[arg(long, conflicts_with = "lenient")]
        strict: bool,
        /// Unknown headings are warnings (default).
        #[arg(long)]
        lenient: bool,
        /// Lint configuration file (TOML).
        #[arg(long, env = "AID_CONFIG")]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Print the canonical form of a statement.
    Fmt {
        #[arg(default_value = "-")]
        path: PathBuf,
        /// Wrap headings in Markdown emphasis.
        #[arg(long)]
        markdown: bool,
        /// Sort pairs into taxonomy order.
        #[arg(long)]
        reorder: bool,
        /// Print nothing; exit 1 when the input is not already canonical.
        #[arg(long)]
        check: bool,
    },
    /// Find statements embedded in documents.
    Extract {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Treat input as Markdown (headings and rules end a block).
        #[arg(long)]
        markdown_input: bool,
        /// Exit 1 when no statement is found.
        #[arg(long)]
        fail_if_none: bool,
    },
    /// Convert between statement text and JSON.
    Convert {
        #[arg(default_value = "-")]
        path: PathBuf,
        #[arg(long, value_enum)]
        to: Representation,
        /// Include source spans in JSON output.
        #[arg(long)]
        spans: bool,
    },
    /// Generate a statement from flags.
    New {
        /// Tools, versions and dates of use.
        #[arg(long)]
        tool: String,
        /// `Heading=statement text`; repeatable.
        #[arg(long = "pair", value_name = "HEADING=TEXT")]
        pairs: Vec<String>,
        #[arg(long)]
        markdown: bool,
    },
    /// List the taxonomy headings.
    Headings {
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Lint {
            path,
            strict,
            lenient,
            config,
            format,
        } => commands::lint(&path, strict, lenient, config.as_deref(), format == OutputFormat::Json),
        Command::Fmt {
            path,
            markdown,
            reorder,
            check,
        } => commands::fmt(&path, markdown, reorder, check),
        Command::Extract {
            paths,
            format,
            markdown_input,
            fail_if_none,
        } => commands::extract(&paths, format == OutputFormat::Json, markdown_input, fail_if_none),
        Command::Convert { path, to, spans } => commands::convert(&path, to == Representation::Json, spans),
        Command::New { tool, pairs, markdown } => commands::new(&tool, &pairs, markdown),
        Command::Headings { format } => commands::headings(format == OutputFormat::Json),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("aid: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
