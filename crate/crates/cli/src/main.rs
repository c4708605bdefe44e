use std::fs;
use std::path::PathBuf;

use clap::Parser;

use qclust_cli::{run, Algo, CliError, RunConfig, WeightsSource};

/// Graph clustering by ratio-based cluster quality.
#[derive(Parser, Debug)]
#[command(name = "qclust", version)]
struct Args {
    /// Edge-list file: one "u v" pair per line, '#' starts a comment.
    #[arg(long)]
    graph: PathBuf,

    /// Vertex weights: "deg", "unit", or a path to a "vertex weight" file.
    #[arg(long, default_value = "deg")]
    weights: String,

    /// Cluster-count regularizer; must lie in [0, 1] for --algo pipeline.
    #[arg(long, default_value_t = 0.0)]
    lambda: f64,

    /// Algorithm to run.
    #[arg(long, value_enum, default_value_t = Algo::Pipeline)]
    algo: Algo,

    /// RNG seed for the randomized pipeline.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Pipeline restarts; the best result by objective value is kept.
    #[arg(long, default_value_t = 1)]
    trials: usize,

    /// Also emit the spanning-forest bound certificate.
    #[arg(long)]
    bounds: bool,

    /// Output path, or "stdout".
    #[arg(long, default_value = "stdout")]
    output: String,
}

fn read_input(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::InputFile {
        path: path.to_string(),
        message: e.to_string(),
    })
}

fn execute(args: &Args) -> Result<(), CliError> {
    let graph_text = read_input(&args.graph.display().to_string())?;
    let weights = match args.weights.as_str() {
        "deg" => WeightsSource::Degree,
        "unit" => WeightsSource::Unit,
        path => WeightsSource::File(read_input(path)?),
    };
    let config = RunConfig {
        weights,
        lambda: args.lambda,
        algo: args.algo,
        seed: args.seed,
        trials: args.trials,
        bounds: args.bounds,
    };
    let report = run(&graph_text, &config)?;
    let mut json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Internal(format!("report serialization failed: {e}")))?;
    json.push('\n');
    match args.output.as_str() {
        "stdout" => print!("{json}"),
        path => fs::write(path, &json)?,
    }
    Ok(())
}

fn main() {
    let args = Args::parse();
    if let Err(e) = execute(&args) {
        let json = serde_json::to_string_pretty(&e.to_json())
            .unwrap_or_else(|_| format!("{{\"error\":{{\"code\":\"{}\"}}}}", e.code()));
        println!("{json}");
        std::process::exit(e.exit_code());
    }
}
