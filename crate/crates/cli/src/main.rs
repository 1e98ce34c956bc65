mod commands;

use clap::{Args, Parser, Subcommand, ValueEnum};
use skein_core::error::{AlgebraError, Error};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "skein", version, about = "Exact planar diagram evaluation: circular forms, matchings, Gram matrices and state spaces")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads for Gram assembly (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Enumeration bound; the default depends on the command.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Spherical,
    General,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Forms,
    Matchings,
    Outer,
}

/// A quadruple given by path or builtin name, with parameter values.
#[derive(Args, Clone)]
pub struct QuadArgs {
    /// Quadruple JSON file or builtin fixture name (tl, tl_numeric,
    /// semisimple2, semisimple2_numeric, trunc_polyN_ddx, nilpotent_c2).
    #[arg(long)]
    pub quadruple: String,
    /// Value of the parameter `d`.
    #[arg(long)]
    pub d: Option<String>,
    /// Parameter value as NAME=VALUE; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List circular forms, crossingless matchings or outer matchings.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Circles for forms, arcs for matchings.
        #[arg(long)]
        n: usize,
    },
    /// Canonical and spherical canonical encodings of a circular form.
    Canon {
        #[arg(long)]
        form: String,
    },
    /// Evaluate a closed diagram or circular form.
    Eval {
        #[command(flatten)]
        quad: QuadArgs,
        #[arg(long, conflicts_with = "diagram")]
        form: Option<String>,
        /// Diagram JSON file with no boundary points.
        #[arg(long)]
        diagram: Option<String>,
    },
    /// Pair two disks (spherical) or a disk with an outer diagram (general).
    Pair {
        #[command(flatten)]
        quad: QuadArgs,
        /// Disk diagram JSON; give twice for the spherical pairing.
        #[arg(long, required = true)]
        diagram: Vec<String>,
        /// Outer diagram JSON for the general pairing.
        #[arg(long)]
        outer: Option<String>,
    },
    /// Gram matrix of the basis-labelled spanning set, or its blocks.
    Gram {
        #[command(flatten)]
        quad: QuadArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Spherical)]
        mode: Mode,
        /// Split by boundary label sequence (idempotent basis only).
        #[arg(long)]
        blocks: bool,
    },
    /// Dimensions of the state spaces A(0..=n).
    Statespace {
        #[command(flatten)]
        quad: QuadArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::General)]
        mode: Mode,
    },
    /// Basis and structure constants of the endomorphism algebra of n points.
    Tl {
        #[command(flatten)]
        quad: QuadArgs,
        #[arg(long)]
        n: usize,
    },
    /// Meander determinant and Chebyshev root check for n = 1..=N.
    Meander {
        #[arg(long)]
        n: usize,
    },
    /// Check the printed Gram block tables for n (2..=5).
    Tables {
        #[arg(long)]
        n: usize,
        /// Random variety points per row.
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
    /// Check the quadruple axioms and sphericality.
    Validate {
        #[command(flatten)]
        quad: QuadArgs,
        /// Random variety points for symbolic identities.
        #[arg(long, default_value_t = 25)]
        trials: usize,
    },
    /// ω-generated subalgebra, pairing radical and dim A(0).
    Recognize {
        #[command(flatten)]
        quad: QuadArgs,
    },
    /// Generic nondegeneracy experiment on the semisimple family.
    Experiment {
        /// Algebra dimension.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        points: usize,
        /// Use the whole Gram matrix instead of its blocks.
        #[arg(long)]
        full: bool,
    },
}

/// Outcome of a command that ran to completion.
pub struct Report {
    pub json: serde_json::Value,
    pub table: String,
    /// The command finished but found a violation (exit code 1).
    pub failed: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Bound(_) => 3,
        Error::Algebra(AlgebraError::NotSpherical(_) | AlgebraError::NotIdempotent()) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let g = &cli.global;
    let result = match cli.command {
        Command::Enumerate { kind, n } => commands::enumerate(g, kind, n),
        Command::Canon { form } => commands::canon(&form),
        Command::Eval { quad, form, diagram } => commands::eval(g, &quad, form.as_deref(), diagram.as_deref()),
        Command::Pair { quad, diagram, outer } => commands::pair(g, &quad, &diagram, outer.as_deref()),
        Command::Gram { quad, n, mode, blocks } => commands::gram(g, &quad, n, mode, blocks),
        Command::Statespace { quad, n, mode } => commands::statespace(g, &quad, n, mode),
        Command::Tl { quad, n } => commands::tl(g, &quad, n),
        Command::Meander { n } => commands::meander(n),
        Command::Tables { n, trials } => commands::tables(g, n, trials),
        Command::Validate { quad, trials } => commands::validate(g, &quad, trials),
        Command::Recognize { quad } => commands::recognize(g, &quad),
        Command::Experiment { k, n, points, full } => commands::experiment(g, k, n, points, full),
    };
    match result {
        Ok(report) => {
            let text = match g.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("serialisable") + "\n",
                Format::Table => report.table,
            };
            // a closed pipe is not an error of the computation
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(if report.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
