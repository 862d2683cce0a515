use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use vcbound::io::{read_graph, InputFormat};
use vcbound::report::{build_report, emit_report, OutputMode, ReportOptions};
use vcbound::DEFAULT_SIZE_LIMIT;

// `--exact` without a value uses this limit; keep the literal below in sync.
const _: () = assert!(DEFAULT_SIZE_LIMIT == 26);

const REPORT_SCHEMA: &str = include_str!("../../../../docs/report-schema.md");

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    EdgeList,
    Dimacs,
}

/// Lower and upper bounds for the vertex cover number of a graph.
#[derive(Debug, Parser)]
#[command(name = "vcbound", version)]
struct Args {
    /// Input graph file.
    #[arg(required_unless_present = "seed_docs")]
    file: Option<PathBuf>,

    /// Input format; inferred from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Print the enter/exit events of phase 2.
    #[arg(long)]
    trace: bool,

    /// Also compute matching, clique-partition and ceiling bounds.
    #[arg(long)]
    baselines: bool,

    /// Compute the exact cover number when the graph has at most N vertices.
    #[arg(long, value_name = "N", num_args = 0..=1, require_equals = true,
          default_missing_value = "26")]
    exact: Option<usize>,

    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,

    /// Print the JSON report schema and exit.
    #[arg(long)]
    seed_docs: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.seed_docs {
        print!("{REPORT_SCHEMA}");
        return ExitCode::SUCCESS;
    }
    let path = args.file.expect("clap enforces the file argument");
    let format = args.format.map(|f| match f {
        Format::EdgeList => InputFormat::EdgeList,
        Format::Dimacs => InputFormat::Dimacs,
    });
    let graph = match read_graph(&path, format) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("vcbound: {}: {e}", path.display());
            return ExitCode::from(1);
        }
    };
    let (report, refused) = build_report(
        &graph,
        ReportOptions {
            trace: args.trace,
            baselines: args.baselines,
            exact_limit: args.exact,
        },
    );
    let mode = if args.json {
        OutputMode::Json
    } else {
        OutputMode::Text
    };
    print!("{}", emit_report(&report, mode));
    match refused {
        Some(e) => {
            eprintln!("vcbound: exact search refused: {e}");
            ExitCode::from(2)
        }
        None => ExitCode::SUCCESS,
    }
}
