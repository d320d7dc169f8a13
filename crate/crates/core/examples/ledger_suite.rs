//! Runs a named suite on a worker pool and appends its records to a JSONL
//! ledger in the system temp directory.

use hedet::conjecture::{run_experiment_suite, Ledger, SuiteConfig};

fn main() -> hedet::Result<()> {
    let path = std::env::temp_dir().join("hedet-example-ledger.jsonl");
    let ledger = Ledger::new(&path);
    let records = run_experiment_suite("cycles-desk", &SuiteConfig::default(), Some(&ledger))?;
    for r in &records {
        println!("{} {} -> {} in {} ms", r.task, r.params, r.verdict, r.elapsed_ms);
    }
    println!("{} records now in {}", ledger.read_all()?.len(), path.display());
    Ok(())
}
