//! Runs every check and prints the report.

use ntrace::pipeline::{run_pipeline, PipelineOptions};
use ntrace::FixtureRegistry;

fn main() -> ntrace::Result<()> {
    let report = run_pipeline(&FixtureRegistry::new(), &PipelineOptions::default())?;
    print!("{report}");
    std::process::exit(report.exit_code());
}
