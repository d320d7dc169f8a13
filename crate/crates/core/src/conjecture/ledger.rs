//! Experiment records and the append-only JSONL ledger.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Cap, Result};
use crate::groebner::GbStats;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Aborted,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "True",
            Verdict::False => "False",
            Verdict::Aborted => "Aborted",
        })
    }
}

/// One verification task's outcome. `cap` is set exactly when the verdict
/// is `aborted`.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentRecord {
    pub schema: u32,
    pub task: String,
    pub params: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<Cap>,
    /// Gröbner statistics, one entry per basis computed.
    pub gb_stats: Vec<GbStats>,
    pub elapsed_ms: u64,
    pub engine_version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    /// Task-specific report.
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl ExperimentRecord {
    pub fn new(task: impl Into<String>, params: Value, verdict: Verdict) -> Self {
        ExperimentRecord {
            schema: SCHEMA,
            task: task.into(),
            params,
            verdict,
            cap: None,
            gb_stats: Vec::new(),
            elapsed_ms: 0,
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            detail: Value::Null,
        }
    }

    pub fn aborted(task: impl Into<String>, params: Value, cap: Cap) -> Self {
        let mut r = Self::new(task, params, Verdict::Aborted);
        r.cap = Some(cap);
        r
    }
}

/// Appends records to a JSONL file. Appends from several threads are
/// serialised; existing lines are never rewritten.
#[derive(Debug)]
pub struct Ledger {
    path: PathBuf,
    lock: Mutex<()>,
}

impl Ledger {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Ledger {
            path: path.into(),
            lock: Mutex::new(()),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, rec: &ExperimentRecord) -> Result<()> {
        let mut line = serde_json::to_string(rec)?;
        line.push('\n');
        let _guard = self.lock.lock().unwrap_or_else(|e| e.into_inner());
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())?;
        Ok(())
    }

    /// Every record in the file, as raw JSON.
    pub fn read_all(&self) -> Result<Vec<Value>> {
        let f = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for line in BufReader::new(f).lines() {
            let line = line?;
            if !line.trim().is_empty() {
                out.push(serde_json::from_str(&line)?);
            }
        }
        Ok(out)
    }
}
