//! Deterministic output plumbing: pinned float formatting, `#`-prefixed
//! CSV metadata headers, and the exit-code mapping.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

/// No command consumes randomness; the fixed seed is still recorded so the
/// metadata block pins every reproducibility-relevant input.
pub const SEED: u64 = 0;

/// 17 significant digits: enough to reproduce any f64 bit pattern.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug)]
pub enum CliError {
    /// Arguments outside the domain of the requested computation.
    Domain(String),
    /// I/O or other internal failure.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(msg) => write!(f, "{msg}"),
            CliError::Internal(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<cyclo_core::Error> for CliError {
    fn from(e: cyclo_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Default directory for output files: `$CYCLO_OUT_DIR` or the working
/// directory.
pub fn out_dir() -> PathBuf {
    std::env::var_os("CYCLO_OUT_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."))
}

/// Resolve an output path: explicit flag wins, otherwise `name` inside the
/// default output directory.
pub fn resolve_out(explicit: Option<PathBuf>, name: &str) -> PathBuf {
    explicit.unwrap_or_else(|| out_dir().join(name))
}

/// Ordered command metadata rendered at the top of every artifact.
pub struct Meta {
    command: &'static str,
    params: Vec<(&'static str, String)>,
    notes: Vec<String>,
}

impl Meta {
    pub fn new(command: &'static str) -> Self {
        Meta {
            command,
            params: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &'static str, value: impl MetaValue) -> Self {
        self.params.push((key, value.render()));
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// `#`-prefixed header block: command, version, seed, parameters,
    /// notes, column names.
    pub fn csv_header(&self, columns: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("# command: {}\n", self.command));
        out.push_str(&format!("# version: {ARTIFACT_VERSION}\n"));
        out.push_str(&format!("# seed: {SEED}\n"));
        for (k, v) in &self.params {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("# note: {note}\n"));
        }
        out.push_str(&format!("# columns: {columns}\n"));
        out
    }

    /// The same metadata as a JSON object (key order: BTreeMap,
    /// deterministic).
    pub fn json(&self) -> serde_json::Value {
        let mut params = serde_json::Map::new();
        for (k, v) in &self.params {
            params.insert((*k).into(), serde_json::Value::String(v.clone()));
        }
        let mut obj = serde_json::Map::new();
        obj.insert("command".into(), self.command.into());
        obj.insert("version".into(), ARTIFACT_VERSION.into());
        obj.insert("seed".into(), SEED.into());
        obj.insert("parameters".into(), serde_json::Value::Object(params));
        if !self.notes.is_empty() {
            obj.insert(
                "notes".into(),
                serde_json::Value::Array(
                    self.notes.iter().map(|n| n.as_str().into()).collect(),
                ),
            );
        }
        serde_json::Value::Object(obj)
    }
}

/// Values rendered into metadata headers; floats go through the pinned
/// 17-significant-digit format.
pub trait MetaValue {
    fn render(&self) -> String;
}

impl MetaValue for f64 {
    fn render(&self) -> String {
        fmt_f64(*self)
    }
}

impl MetaValue for u64 {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl MetaValue for usize {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl MetaValue for i64 {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl MetaValue for bool {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl MetaValue for &str {
    fn render(&self) -> String {
        (*self).to_string()
    }
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    fs::write(path, contents)?;
    Ok(())
}

/// JSON goes to `--out` when given, stdout otherwise.
pub fn emit_json(out: Option<&Path>, value: &serde_json::Value) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => write_file(path, &text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
