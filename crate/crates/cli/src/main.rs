use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nlspectra_cli::compute::{cmd_compute, Input};
use nlspectra_cli::example1::{cmd_example1, Part, EXAMPLE_SEQUENCE};
use nlspectra_cli::tables::{cmd_table, GraphModel, TableId, TableSpec, DEFAULT_N_LIST};
use nlspectra_cli::{Format, HarnessError};

#[derive(Parser)]
#[command(name = "nlspectra", version, about = "Normalized-Laplacian Estrada index and energy bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Ws,
}

#[derive(Subcommand)]
enum Command {
    /// Exact indices and every bound for one graph or degree sequence.
    Compute {
        /// Edge-list file: `n m` header, then `m` lines `i j` (1-based).
        #[arg(long, conflicts_with = "degseq", required_unless_present = "degseq")]
        input: Option<PathBuf>,
        /// Comma-separated degree sequence.
        #[arg(long)]
        degseq: Option<String>,
        /// `all`, or comma-separated bound ids (`nee.li`) or names (`li`).
        #[arg(long, default_value = "all")]
        bounds: String,
        #[arg(long, default_value = "md")]
        format: Format,
    },
    /// Bound comparison table over generated graphs.
    Table {
        #[arg(long)]
        id: TableId,
        /// Comma-separated graph orders.
        #[arg(long, value_delimiter = ',')]
        n_list: Option<Vec<usize>>,
        #[arg(long, value_enum)]
        model: Option<ModelArg>,
        /// ER edge probability.
        #[arg(long, conflicts_with = "mean_degree")]
        q: Option<f64>,
        /// ER with q = mean_degree / (n - 1).
        #[arg(long)]
        mean_degree: Option<f64>,
        /// WS rewiring probability.
        #[arg(long)]
        p: Option<f64>,
        /// WS lattice neighbours per side.
        #[arg(long, default_value_t = 2)]
        ring_k: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        replicates: usize,
        /// Worker threads; 1 runs serially, 0 uses all cores.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Distinct samples for the example tables.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
    },
    /// Bounds for the fixed degree-sequence class and sampled NEE range.
    Example1 {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = EXAMPLE_SEQUENCE)]
        degseq: String,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value = "md")]
        format: Format,
    },
}

fn model_for(spec: &TableSpec, model: Option<ModelArg>, q: Option<f64>, mean_degree: Option<f64>, p: Option<f64>, ring_k: usize) -> GraphModel {
    let default = spec.model;
    let er = match default {
        GraphModel::Er { .. } => true,
        GraphModel::Ws { .. } => false,
    };
    let er = match model {
        Some(ModelArg::Er) => true,
        Some(ModelArg::Ws) => false,
        None => er,
    };
    if er {
        if q.is_some() || mean_degree.is_some() {
            GraphModel::Er { q, mean_degree }
        } else if let GraphModel::Er { .. } = default {
            default
        } else {
            GraphModel::Er { q: Some(0.5), mean_degree: None }
        }
    } else {
        GraphModel::Ws { p: p.unwrap_or(0.1), ring_k }
    }
}

fn run(cli: Cli) -> Result<String, HarnessError> {
    match cli.command {
        Command::Compute { input, degseq, bounds, format } => {
            let names: Option<Vec<String>> =
                (bounds != "all").then(|| bounds.split(',').map(|s| s.trim().to_string()).collect());
            let input = match (&input, &degseq) {
                (Some(path), _) => Input::EdgeList(path),
                (None, Some(list)) => Input::Degrees(list),
                (None, None) => unreachable!("clap requires one input"),
            };
            cmd_compute(&input, names.as_deref(), format)
        }
        Command::Table { id, n_list, model, q, mean_degree, p, ring_k, seed, format, replicates, threads, trials } => {
            let mut spec = TableSpec::new(id, n_list.unwrap_or_else(|| DEFAULT_N_LIST.to_vec()), seed);
            spec.model = model_for(&spec, model, q, mean_degree, p, ring_k);
            spec.replicates = replicates;
            spec.threads = threads;
            spec.trials = trials;
            cmd_table(&spec, format)
        }
        Command::Example1 { trials, seed, degseq, threads, format } => {
            cmd_example1(&degseq, trials, seed, threads, Part::All, format)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
