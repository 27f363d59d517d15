//! Verification harness: runs named check suites from the `eisenlat`
//! library and emits a text or JSON report.
//!
//! Exit status: 0 when every check passes, 1 when any check fails,
//! 2 on usage or configuration errors (clap reports those itself).

use clap::Parser;
use eisenlat::report::{run_suite, Suite};
use eisenlat::Config;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "eisenlat",
    version,
    about = "Exact verification suites for Eisenstein lattices, codes, and reflection groups",
    after_help = "Suites: codes, root-lattices, niemeier, model, uniqueness, root-span, \
                  y555, null-types, all.\n\
                  Exit status: 0 all checks pass, 1 a check fails, 2 usage error."
)]
struct Args {
    /// Suite to run.
    suite: String,

    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,

    /// Cap on group-closure sizes.
    #[arg(long, default_value_t = Config::default().closure_cap)]
    closure_cap: usize,

    /// Cap on short-vector enumerations.
    #[arg(long, default_value_t = Config::default().enum_cap)]
    enum_cap: usize,

    /// Worker threads for the data-parallel scans (0 = all cores,
    /// 1 = sequential). Results are identical for every setting.
    #[arg(long, default_value_t = 0)]
    threads: usize,

    /// Print progress lines for long suites to stderr.
    #[arg(long, short)]
    verbose: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let Some(suite) = Suite::from_name(&args.suite) else {
        eprintln!(
            "error: unknown suite '{}' (expected one of: {})",
            args.suite,
            Suite::ALL.map(Suite::name).join(", ")
        );
        return ExitCode::from(2);
    };
    let config = Config {
        closure_cap: args.closure_cap,
        enum_cap: args.enum_cap,
        threads: args.threads,
    };
    if args.verbose {
        eprintln!("running suite {} …", suite.name());
    }
    let report = run_suite(suite, &config, args.verbose);
    if args.verbose {
        eprintln!("finished in {} ms", report.wall_ms);
    }
    if args.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.overall {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
