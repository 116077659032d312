//! Scripted `aid` invocations with their expected exit codes.

#![allow(dead_code)]

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

pub const RESEARCH: &str = include_str!("../../../core/tests/fixtures/research.txt");
pub const EDUCATION: &str = include_str!("../../../core/tests/fixtures/education.txt");

pub struct Case {
    pub name: &'static str,
    pub args: Vec<String>,
    pub stdin: Option<String>,
    pub code: i32,
    /// Substring expected on stdout (or stderr when prefixed with `!`).
    pub expect: Option<&'static str>,
}

pub struct Workspace {
    dir: tempfile::TempDir,
}

impl Workspace {
    pub fn new() -> Self {
        let dir = tempfile::tempdir().expect("temp dir");
        let files: &[(&str, &[u8])] = &[
            ("research.txt", RESEARCH.as_bytes()),
            ("education.txt", EDUCATION.as_bytes()),
            ("empty.txt", b""),
            (
                "concept_first.txt",
                b"AID Statement: Conceptualization: revised questions; Artificial Intelligence Tool: ChatGPT.",
            ),
            (
                "unknown.txt",
                b"AID Statement: Artificial Intelligence Tool: ChatGPT; Vibes: good ones.",
            ),
            ("malformed.json", b"{\"aid_version\": \"1.0\", \"pairs\": ["),
            ("binary.txt", &[0xff, 0xfe, 0x41]),
            ("strict.toml", b"mode = \"strict\"\n"),
            ("quiet.toml", b"[rules]\nAID-W103 = \"off\"\n"),
            ("broken.toml", b"mode = \"loose\"\n"),
            (
                "unterminated.txt",
                b"AID Statement: Artificial Intelligence Tool: ChatGPT",
            ),
        ];
        for (name, bytes) in files {
            std::fs::write(dir.path().join(name), bytes).expect("write fixture");
        }
        let manuscript = format!("Title\n\nBody text: with a colon.\n\n{EDUCATION}\nReferences\n");
        std::fs::write(dir.path().join("manuscript.md"), manuscript).expect("write fixture");
        Workspace { dir }
    }

    pub fn path(&self, name: &str) -> String {
        self.dir.path().join(name).display().to_string()
    }

    pub fn root(&self) -> &Path {
        self.dir.path()
    }
}

fn args(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

pub fn cases(ws: &Workspace) -> Vec<Case> {
    let p = |name: &str| ws.path(name);
    let case = |name, parts: Vec<String>, code, expect| Case {
        name,
        args: parts,
        stdin: None,
        code,
        expect,
    };
    let piped = |name, parts: Vec<String>, input: &str, code, expect| Case {
        name,
        args: parts,
        stdin: Some(input.to_owned()),
        code,
        expect,
    };
    vec![
        // lint
        case(
            "lint research lenient",
            args(&["lint", "--lenient", &p("research.txt")]),
            0,
            Some("!AID-W103"),
        ),
        case(
            "lint education strict",
            args(&["lint", "--strict", &p("education.txt")]),
            0,
            None,
        ),
        case(
            "lint tool not first",
            args(&["lint", &p("concept_first.txt")]),
            1,
            Some("!AID-E002"),
        ),
        case(
            "lint unknown heading lenient",
            args(&["lint", &p("unknown.txt")]),
            0,
            Some("!AID-E008"),
        ),
        case(
            "lint unknown heading strict",
            args(&["lint", "--strict", &p("unknown.txt")]),
            1,
            Some("!AID-E008"),
        ),
        case(
            "lint strict via config",
            args(&["lint", "--config", &p("strict.toml"), &p("unknown.txt")]),
            1,
            None,
        ),
        case(
            "lint rule turned off",
            args(&[
                "lint",
                "--format",
                "json",
                "--config",
                &p("quiet.toml"),
                &p("research.txt"),
            ]),
            0,
            Some("\"warning_count\":0"),
        ),
        case(
            "lint json report",
            args(&["lint", "--format", "json", &p("concept_first.txt")]),
            1,
            Some("\"verdict\":\"fail\""),
        ),
        case("lint missing file", args(&["lint", &p("absent.txt")]), 2, None),
        case(
            "lint broken config",
            args(&["lint", "--config", &p("broken.toml"), &p("research.txt")]),
            2,
            None,
        ),
        case(
            "lint missing config",
            args(&["lint", "--config", &p("absent.toml"), &p("research.txt")]),
            2,
            None,
        ),
        case("lint invalid utf-8", args(&["lint", &p("binary.txt")]), 1, None),
        case(
            "lint unknown flag",
            args(&["lint", "--pedantic", &p("research.txt")]),
            2,
            None,
        ),
        case(
            "lint conflicting modes",
            args(&["lint", "--strict", "--lenient", &p("research.txt")]),
            2,
            None,
        ),
        piped("lint stdin pass", args(&["lint", "-"]), EDUCATION, 0, None),
        piped(
            "lint stdin fail",
            args(&["lint", "-"]),
            "AID Statement: Artificial Intelligence Tool: X",
            1,
            Some("!AID-E003"),
        ),
        piped(
            "lint stdin not a statement",
            args(&["lint", "-"]),
            "hello world",
            1,
            Some("!AID-E001"),
        ),
        // fmt
        case(
            "fmt research",
            args(&["fmt", &p("research.txt")]),
            0,
            Some("Data Collection Method: ChatGPT"),
        ),
        case(
            "fmt education markdown",
            args(&["fmt", "--markdown", &p("education.txt")]),
            0,
            Some("*Visualization*:"),
        ),
        case(
            "fmt check unformatted",
            args(&["fmt", "--check", &p("research.txt")]),
            1,
            None,
        ),
        case(
            "fmt unparseable",
            args(&["fmt", &p("unterminated.txt")]),
            1,
            Some("!AID-E003"),
        ),
        case("fmt missing file", args(&["fmt", &p("absent.txt")]), 2, None),
        piped(
            "fmt stdin",
            args(&["fmt", "--reorder", "-"]),
            EDUCATION,
            0,
            Some("AID Statement: Artificial"),
        ),
        piped(
            "fmt check canonical stdin",
            args(&["fmt", "--check", "-"]),
            "AID Statement: Artificial Intelligence Tool: ToolX; Conceptualization: revised questions.\n",
            0,
            None,
        ),
        // extract
        case(
            "extract manuscript json",
            args(&["extract", "--format", "json", "--markdown-input", &p("manuscript.md")]),
            0,
            Some("\"block_index\":0"),
        ),
        case(
            "extract empty",
            args(&["extract", "--format", "json", &p("empty.txt")]),
            0,
            Some("[]"),
        ),
        case(
            "extract empty fail-if-none",
            args(&["extract", "--fail-if-none", &p("empty.txt")]),
            1,
            None,
        ),
        case(
            "extract missing file",
            args(&["extract", &p("research.txt"), &p("absent.txt")]),
            2,
            None,
        ),
        case("extract no paths", args(&["extract"]), 2, None),
        piped(
            "extract stdin",
            args(&["extract", "--fail-if-none", "-"]),
            RESEARCH,
            0,
            Some("7 pairs"),
        ),
        // convert
        case(
            "convert research to json",
            args(&["convert", "--to", "json", &p("research.txt")]),
            0,
            Some("\"slug\":\"project_administration\""),
        ),
        case(
            "convert malformed json",
            args(&["convert", "--to", "text", &p("malformed.json")]),
            1,
            None,
        ),
        case(
            "convert bad text",
            args(&["convert", "--to", "json", &p("concept_first.txt")]),
            1,
            Some("!AID-E002"),
        ),
        case(
            "convert missing target",
            args(&["convert", &p("research.txt")]),
            2,
            None,
        ),
        case(
            "convert missing file",
            args(&["convert", "--to", "json", &p("absent.txt")]),
            2,
            None,
        ),
        piped(
            "convert stdin json to text",
            args(&["convert", "--to", "text", "-"]),
            r#"{"aid_version":"1.0","pairs":[{"ordinal":1,"slug":"artificial_intelligence_tool","display":"Artificial Intelligence Tool","raw":"AI Tool","text":"ToolX"}]}"#,
            0,
            Some("AID Statement: Artificial Intelligence Tool: ToolX."),
        ),
        // new
        case(
            "new tool only",
            args(&["new", "--tool", "ToolX"]),
            0,
            Some("AID Statement: Artificial Intelligence Tool: ToolX."),
        ),
        case(
            "new with pair",
            args(&[
                "new",
                "--tool",
                "ChatGPT",
                "--pair",
                "Conceptualization=revised questions",
            ]),
            0,
            Some("ChatGPT; Conceptualization: revised questions."),
        ),
        case(
            "new alias heading",
            args(&["new", "--tool", "T", "--pair", "Privacy & Security=none shared"]),
            0,
            Some("Privacy and Security: none shared"),
        ),
        case(
            "new unknown heading",
            args(&["new", "--tool", "T", "--pair", "Vibes=stuff"]),
            1,
            None,
        ),
        case(
            "new misspelled heading",
            args(&["new", "--tool", "T", "--pair", "Visualisation=charts"]),
            1,
            Some("!Visualization"),
        ),
        case(
            "new forbidden character",
            args(&["new", "--tool", "T", "--pair", "Visualization=a; b"]),
            1,
            None,
        ),
        case(
            "new tool twice",
            args(&["new", "--tool", "T", "--pair", "Artificial Intelligence Tool=U"]),
            1,
            None,
        ),
        case(
            "new malformed pair",
            args(&["new", "--tool", "T", "--pair", "Visualization"]),
            2,
            None,
        ),
        case("new without tool", args(&["new"]), 2, None),
        // headings
        case(
            "headings text",
            args(&["headings"]),
            0,
            Some("1\tartificial_intelligence_tool\tArtificial Intelligence Tool"),
        ),
        case(
            "headings json",
            args(&["headings", "--format", "json"]),
            0,
            Some("\"ordinal\":14"),
        ),
        case("headings bad format", args(&["headings", "--format", "yaml"]), 2, None),
        // top level
        case("no subcommand", args(&[]), 2, None),
        case("unknown subcommand", args(&["vet"]), 2, None),
    ]
}

pub fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_aid"))
}

pub fn run(args: &[String], stdin: Option<&str>, cwd: &Path) -> Output {
    let mut child = Command::new(binary())
        .args(args)
        .current_dir(cwd)
        .env_remove("AID_CONFIG")
        .env("NO_COLOR", "1")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn aid");
    let mut pipe = child.stdin.take().expect("stdin");
    if let Some(input) = stdin {
        pipe.write_all(input.as_bytes()).expect("write stdin");
    }
    drop(pipe);
    child.wait_with_output().expect("wait for aid")
}

/// Runs one case and describes any mismatch.
pub fn check(case: &Case, cwd: &Path) -> Result<(), String> {
    let output = run(&case.args, case.stdin.as_deref(), cwd);
    let stdout = String::from_utf8(output.stdout).map_err(|_| format!("{}: stdout is not UTF-8", case.name))?;
    let stderr = String::from_utf8_lossy(&output.stderr);
    let code = output.status.code().unwrap_or(-1);
    if code != case.code {
        return Err(format!("{}: exit {code}, expected {}\n{stderr}", case.name, case.code));
    }
    if let Some(expect) = case.expect {
        let (stream, needle) = match expect.strip_prefix('!') {
            Some(needle) => (stderr.as_ref(), needle),
            None => (stdout.as_str(), expect),
        };
        if !stream.contains(needle) {
            return Err(format!(
                "{}: `{needle}` missing from output\nstdout: {stdout}\nstderr: {stderr}",
                case.name
            ));
        }
    }
    Ok(())
}
