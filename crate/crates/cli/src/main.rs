//! `qloc`: batch front end for the locality toolkit.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "qloc", version, about = "Locality audits and certificates for 2D-embedded stabilizer codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
    /// Reserved; every algorithm is deterministic.
    #[arg(long, global = true, hide = true)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct Constants {
    #[arg(long, default_value_t = 0.01)]
    pub c0: f64,
    #[arg(long, default_value_t = 100.0)]
    pub c1: f64,
}

#[derive(Args, Debug, Clone)]
pub struct DistanceSource {
    /// Distance to certify against; defaults to the code file's claimed_d,
    /// then to an exhaustive search up to --weight-cap.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 8)]
    pub weight_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Grow,
    Recursive,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Interaction lengths against the theorem's floor.
    Audit {
        #[arg(long)]
        code: std::path::PathBuf,
        #[arg(long)]
        embedding: std::path::PathBuf,
        #[arg(long)]
        ell: f64,
        #[arg(long, default_value_t = 8)]
        weight_cap: usize,
        #[command(flatten)]
        constants: Constants,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build a correctability certificate for the qubits in a rectangle.
    Certify {
        #[arg(long)]
        code: std::path::PathBuf,
        #[arg(long)]
        embedding: std::path::PathBuf,
        #[arg(long)]
        ell: f64,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
        /// x_lo,x_hi,y_lo,y_hi; defaults to a box around all qubits.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        rect: Option<Vec<f64>>,
        #[command(flatten)]
        distance: DistanceSource,
    },
    /// Replay a certificate.
    Verify {
        #[arg(long)]
        code: std::path::PathBuf,
        #[arg(long)]
        cert: std::path::PathBuf,
        /// Also check the root against the erasure oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Split the qubits into A, B, C with certificates for A and B.
    Partition {
        #[arg(long)]
        code: std::path::PathBuf,
        #[arg(long)]
        embedding: std::path::PathBuf,
        #[arg(long)]
        ell: f64,
        #[arg(long)]
        w: Option<f64>,
        #[command(flatten)]
        distance: DistanceSource,
    },
    /// Concatenate an inner code into every qubit of an outer code.
    Concat {
        #[arg(long)]
        inner: std::path::PathBuf,
        #[arg(long)]
        outer: std::path::PathBuf,
    },
    /// Concatenated code laid out with bounded interaction length.
    Construct {
        #[arg(long)]
        inner: std::path::PathBuf,
        /// Explicit outer surface-code side (with --ell).
        #[arg(long, requires = "ell", conflicts_with_all = ["n", "k", "d"])]
        side: Option<usize>,
        #[arg(long)]
        ell: Option<f64>,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        /// Target parameters (instead of --side / --ell).
        #[arg(long, requires_all = ["k", "d"])]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Defaults to 100 / epsilon of the inner code.
        #[arg(long)]
        c0: Option<f64>,
        #[arg(long, default_value_t = 100.0)]
        c1: f64,
        #[arg(long)]
        out_code: Option<std::path::PathBuf>,
        #[arg(long)]
        out_embedding: Option<std::path::PathBuf>,
    },
    /// Rotated surface code on an m x m lattice.
    Surface {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out_code: Option<std::path::PathBuf>,
        #[arg(long)]
        out_embedding: Option<std::path::PathBuf>,
    },
    /// Append ancilla qubits with single-qubit X generators.
    Pad {
        #[arg(long)]
        code: std::path::PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        embedding: Option<std::path::PathBuf>,
        #[arg(long)]
        out_code: Option<std::path::PathBuf>,
        #[arg(long)]
        out_embedding: Option<std::path::PathBuf>,
    },
    /// Grid offset with few points near vertices and edges.
    Tile {
        /// Point file for X.
        #[arg(long)]
        x: std::path::PathBuf,
        /// Point file for Y (a multiset; repeated points allowed).
        #[arg(long)]
        y: std::path::PathBuf,
        #[arg(long)]
        w: f64,
        #[arg(long)]
        ell: f64,
    },
    /// Balanced separator strip for a point set.
    Separator {
        #[arg(long)]
        points: std::path::PathBuf,
        #[arg(long)]
        ell: f64,
    },
    /// Closed-form thresholds for [[n, k, d]].
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        constants: Constants,
    },
    /// Interaction bounds for well-known code families.
    Families {
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Minimum weight of a logical operator.
    Distance {
        #[arg(long)]
        code: std::path::PathBuf,
        #[arg(long)]
        weight_cap: Option<usize>,
    },
    /// Whether erasing a qubit set is recoverable.
    Correctable {
        #[arg(long)]
        code: std::path::PathBuf,
        /// Comma-separated qubit indices.
        #[arg(long, value_delimiter = ',', conflicts_with = "all")]
        qubits: Vec<usize>,
        /// All qubits.
        #[arg(long)]
        all: bool,
    },
}

fn configure_threads() {
    if let Some(n) = std::env::var("QLOC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match commands::run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Some(msg) = &out.note {
                eprintln!("{msg}");
            }
            match written {
                Ok(()) => ExitCode::from(out.status),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status)
        }
    }
}
