//! Named batteries of tasks, run on a bounded worker pool.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use super::ledger::{ExperimentRecord, Ledger, Verdict};
use super::{check_fixed_pair, check_prop41, check_theorem44, verify_a4, verify_prop43, verify_small_critical};
use crate::error::{Error, Result};
use crate::graphs::load_graph;
use crate::groebner::GbConfig;

/// One unit of work. Graphs are given as specs so records name them the way
/// the command line does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "task", rename_all = "kebab-case")]
pub enum Task {
    Thm44 { k: usize, n: usize, nprime: usize },
    Pair { g: String, h: String, k: usize },
    Prop41 { k: usize, n: usize, nprime: usize },
    A4,
    SmallCritical { k: usize, max_n: usize },
    Prop43 { k: usize },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Thm44 { .. } => "thm44",
            Task::Pair { .. } => "pair",
            Task::Prop41 { .. } => "prop41",
            Task::A4 => "verify-a4",
            Task::SmallCritical { .. } => "verify-small-critical",
            Task::Prop43 { .. } => "verify-prop43",
        }
    }

    fn params(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("task serialises");
        if let Value::Object(m) = &mut v {
            m.remove("task");
        }
        v
    }
}

pub const SUITES: &[&str] = &["thm44-desk", "pairs-desk", "cycles-desk", "structural"];

pub fn suite_tasks(name: &str) -> Result<Vec<Task>> {
    let pair = |g: &str, h: &str, k| Task::Pair {
        g: g.into(),
        h: h.into(),
        k,
    };
    Ok(match name {
        "thm44-desk" => vec![
            Task::Thm44 { k: 3, n: 4, nprime: 4 },
            Task::Thm44 { k: 3, n: 4, nprime: 5 },
        ],
        "pairs-desk" => vec![pair("H0", "H0", 4), pair("H0", "Grotzsch", 4)],
        "cycles-desk" => vec![pair("C5", "C5", 3), pair("C5", "C7", 3), pair("C7", "C7", 3)],
        "structural" => {
            let mut t = vec![
                Task::A4,
                Task::SmallCritical { k: 3, max_n: 7 },
                Task::SmallCritical { k: 4, max_n: 7 },
                Task::Prop41 { k: 3, n: 3, nprime: 3 },
                Task::Prop41 { k: 3, n: 4, nprime: 4 },
            ];
            t.extend((2..=10).map(|k| Task::Prop43 { k }));
            t
        }
        _ => {
            return Err(Error::param(format!(
                "unknown suite `{name}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    })
}

/// Runs one task. Resource caps become `aborted` records; parse errors,
/// parameter errors and oracle mismatches are returned as errors.
pub fn run_task(task: &Task, config: &GbConfig) -> Result<ExperimentRecord> {
    let start = Instant::now();
    let params = task.params();
    let outcome: Result<(bool, Vec<crate::groebner::GbStats>, Value)> = (|| {
        Ok(match task {
            Task::Thm44 { k, n, nprime } => {
                let r = check_theorem44(*k, *n, *nprime, config)?;
                (
                    r.holds,
                    vec![r.stats_j.clone(), r.stats_i.clone()],
                    serde_json::to_value(&r)?,
                )
            }
            Task::Pair { g, h, k } => {
                let (gg, hh) = (load_graph(g)?, load_graph(h)?);
                let r = check_fixed_pair(&gg, &hh, *k, config)?;
                (r.holds, vec![r.stats.clone()], serde_json::to_value(&r)?)
            }
            Task::Prop41 { k, n, nprime } => {
                let r = check_prop41(*k, *n, *nprime)?;
                (r.holds, vec![], serde_json::to_value(&r)?)
            }
            Task::A4 => {
                let r = verify_a4()?;
                (r.ok(), vec![], serde_json::to_value(&r)?)
            }
            Task::SmallCritical { k, max_n } => {
                let r = verify_small_critical(*k, *max_n)?;
                (r.ok(), vec![], serde_json::to_value(&r)?)
            }
            Task::Prop43 { k } => (verify_prop43(*k), vec![], Value::Null),
        })
    })();
    let mut rec = match outcome {
        Ok((holds, stats, detail)) => {
            let mut r = ExperimentRecord::new(task.name(), params, Verdict::from(holds));
            r.gb_stats = stats;
            r.detail = detail;
            r
        }
        Err(Error::Aborted(cap)) => ExperimentRecord::aborted(task.name(), params, cap),
        Err(e) => return Err(e),
    };
    rec.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(rec)
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub gb: GbConfig,
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            gb: GbConfig::default(),
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Runs every task of `name`, appending each record to `ledger` as it
/// completes. Records come back in task order. If any task fails hard, the
/// remaining tasks still run and the first error is returned.
pub fn run_experiment_suite(
    name: &str,
    config: &SuiteConfig,
    ledger: Option<&Ledger>,
) -> Result<Vec<ExperimentRecord>> {
    let tasks = suite_tasks(name)?;
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<ExperimentRecord>>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
    let workers = config.threads.clamp(1, tasks.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(task) = tasks.get(i) else { break };
                let mut out = run_task(task, &config.gb);
                if let (Ok(rec), Some(l)) = (&out, ledger) {
                    if let Err(e) = l.append(rec) {
                        out = Err(e);
                    }
                }
                *slots[i].lock().unwrap() = Some(out);
            });
        }
    });
    let mut records = Vec::with_capacity(tasks.len());
    let mut first_err = None;
    for slot in slots {
        match slot.into_inner().unwrap().expect("every task ran") {
            Ok(r) => records.push(r),
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match first_err {
        Some(e) => Err(e),
        None => Ok(records),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn unknown_suite() {
        assert!(suite_tasks("nope").is_err());
        assert_eq!(suite_tasks("cycles-desk").unwrap().len(), 3);
    }

    #[test]
    fn task_params_drop_tag() {
        let t = Task::Thm44 { k: 3, n: 4, nprime: 5 };
        assert_eq!(t.params(), json!({"k": 3, "n": 4, "nprime": 5}));
    }

    #[test]
    fn cap_becomes_aborted() {
        let cfg = GbConfig {
            max_terms: 10,
            ..GbConfig::default()
        };
        let r = run_task(
            &Task::Pair {
                g: "C5".into(),
                h: "C5".into(),
                k: 3,
            },
            &cfg,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Aborted);
        assert!(r.cap.is_some());
    }

    #[test]
    fn cycles_suite_appends() {
        let dir = tempfile::tempdir().unwrap();
        let ledger = Ledger::new(dir.path().join("l.jsonl"));
        let cfg = SuiteConfig {
            threads: 2,
            ..SuiteConfig::default()
        };
        let recs = run_experiment_suite("cycles-desk", &cfg, Some(&ledger)).unwrap();
        assert!(recs.iter().all(|r| r.verdict == Verdict::True));
        run_experiment_suite("cycles-desk", &cfg, Some(&ledger)).unwrap();
        let all = ledger.read_all().unwrap();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|r| r["verdict"] == "true"));
    }
}
