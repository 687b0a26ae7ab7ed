//! Run a checkpointed pipeline from a TOML config and print its table.
//!
//!     cargo run --release --example pipeline -- configs/table1.toml [output_dir]

use std::path::PathBuf;

use folkman::pipeline::{format_table, run_pipeline, PipelineConfig, RunOptions};
use folkman::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let config = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/table1.toml"));
    let output_dir = args.next().map(PathBuf::from);
    let cfg = PipelineConfig::load(&config)?;
    let opts = RunOptions { output_dir, ..Default::default() };
    let reports = run_pipeline(&cfg, &opts, |r| {
        eprintln!("{:<14} {:>8} maximal  {:.2}s{}", r.id, r.maximal, r.seconds, if r.resumed { " (resumed)" } else { "" })
    })?;
    print!("{}", format_table(&reports));
    Ok(())
}
