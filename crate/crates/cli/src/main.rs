//! `ufn`: Ufnarovskii graphs, the path-algebra homomorphism and its kernel
//! from the command line.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ufn_core::pathalg::DEFAULT_VERTEX_BOUND;
use ufn_core::presentation::DEFAULT_ENUMERATION_BOUND;
use ufn_core::Exec;

#[derive(Parser, Debug)]
#[command(
    name = "ufn",
    version,
    about = "Ufnarovskii graphs of monomial algebras"
)]
pub struct Cli {
    /// Degree bound for tables and exhaustive checks.
    #[arg(long, global = true, default_value_t = 10)]
    pub max_degree: usize,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Refuse to enumerate more than this many candidate words.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub guard: u64,
    /// Comma-separated names for the Veronese block generators.
    #[arg(long, global = true, value_delimiter = ',')]
    pub alias: Vec<String>,
    /// Largest quiver handed to the isomorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_BOUND)]
    pub vertex_bound: usize,
    /// Run every sweep on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the Ufnarovskii graph.
    Graph {
        input: PathBuf,
        #[command(flatten)]
        opts: GraphOpts,
    },
    /// Emit the images of the generators, or of one word.
    Hom {
        input: PathBuf,
        #[command(flatten)]
        opts: HomOpts,
    },
    /// Emit the kernel set and per-degree dimensions.
    Kernel { input: PathBuf },
    /// Run every exhaustive check up to the degree bound.
    Verify { input: PathBuf },
    /// Emit the quadratic Veronese presentation and its graph.
    Veronese {
        input: PathBuf,
        #[command(flatten)]
        opts: VeroneseOpts,
    },
    /// Build the quivers with incidence matrices L·R and R·L.
    Lrrl {
        left: PathBuf,
        right: PathBuf,
        /// Reference for L·R: a presentation, quiver or matrix file.
        #[arg(long)]
        reference_lr: Option<PathBuf>,
        /// Reference for R·L: a presentation, quiver or matrix file.
        #[arg(long)]
        reference_rl: Option<PathBuf>,
    },
    /// Read a quiver with relations and continue with another subcommand.
    FromQuiver {
        quiver: PathBuf,
        #[command(subcommand)]
        then: Option<Then>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Then {
    /// Emit the derived presentation (the default).
    Presentation,
    Graph(GraphOpts),
    Hom(HomOpts),
    Kernel,
    Verify,
    Veronese(VeroneseOpts),
}

#[derive(Args, Debug, Clone, Default)]
pub struct GraphOpts {
    /// Name arrows by their label instead of their defining word.
    #[arg(long)]
    pub labels: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct HomOpts {
    /// Also emit the image of this word.
    #[arg(long)]
    pub word: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct VeroneseOpts {
    /// Veronese index; must be at least the window width.
    pub n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if let Some(msg) = outcome.stderr {
                eprintln!("{msg}");
            }
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
