use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use embed47::cli::{self, OutputFormat};
use embed47::lattice::HomClass;
use embed47::manifold4;
use embed47::surgery;

#[derive(Parser)]
#[command(name = "embed47", version, about = "Classify smooth embeddings of 4-manifolds in 7-space")]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate BH values and fiber counts of a manifold
    Classify {
        file: PathBuf,
        /// Max absolute coordinate of the enumerated classes
        #[arg(long, default_value_t = 8)]
        bound: u32,
    },
    /// Fiber over one BH value: count and eta residues
    Fiber {
        file: PathBuf,
        #[arg(long)]
        u: String,
    },
    /// Act by k knotted 4-spheres on an isotopy class
    Act {
        file: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        eta: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(0..12))]
        k: u64,
    },
    /// Connected-sum fiber count from two divisibilities
    SumCount { d1: u64, d2: u64 },
    /// Intersection form, p-pairings and boundary invariants of a framed link
    Handles { file: PathBuf },
    /// Eells-Kuiper class of the boundary of a framed link
    Ek { file: PathBuf },
    /// Kreck obstruction of a framed link with a given z^2 pairing vector
    Eta {
        file: PathBuf,
        #[arg(long)]
        zsq: String,
        #[arg(long)]
        d: u64,
    },
    /// Express a quadruple "sigma,alpha,z4,s" over the generator set
    Quadruples { target: String },
}

fn read(path: &PathBuf) -> embed47::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| embed47::Error::BadInput(format!("{}: {e}", path.display())))
}

fn emit<T: serde::Serialize>(report: &T, text: String, format: OutputFormat) {
    match format {
        OutputFormat::Text => print!("{text}"),
        OutputFormat::Structured => {
            println!("{}", serde_json::to_string_pretty(report).unwrap())
        }
    }
}

fn run(args: Args) -> embed47::Result<()> {
    let format = match args.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Structured,
    };
    match args.command {
        Command::Classify { file, bound } => {
            let manifold = manifold4::parse_manifold(&read(&file)?)?;
            let r = cli::cmd_classify(&manifold, bound);
            emit(&r, r.render_text(), format);
        }
        Command::Fiber { file, u } => {
            let manifold = manifold4::parse_manifold(&read(&file)?)?;
            let u = HomClass(cli::parse_vector(&u)?);
            let r = cli::cmd_fiber(&manifold, u)?;
            emit(&r, r.render_text(), format);
        }
        Command::Act { file, u, eta, k } => {
            let manifold = manifold4::parse_manifold(&read(&file)?)?;
            let u = HomClass(cli::parse_vector(&u)?);
            let r = cli::cmd_act(&manifold, u, eta, k)?;
            emit(&r, r.render_text(), format);
        }
        Command::SumCount { d1, d2 } => {
            let r = cli::cmd_sum_count(d1, d2);
            emit(&r, r.render_text(), format);
        }
        Command::Handles { file } => {
            let link = surgery::parse_link(&read(&file)?)?;
            let r = cli::cmd_handles(&link)?;
            emit(&r, r.render_text(), format);
        }
        Command::Ek { file } => {
            let link = surgery::parse_link(&read(&file)?)?;
            let r = cli::cmd_ek(&link)?;
            emit(&r, r.render_text(), format);
        }
        Command::Eta { file, zsq, d } => {
            let link = surgery::parse_link(&read(&file)?)?;
            let zsq = cli::parse_vector(&zsq)?;
            let r = cli::cmd_eta(&link, &zsq, &BigInt::from(d))?;
            emit(&r, r.render_text(), format);
        }
        Command::Quadruples { target } => {
            let q = cli::parse_quadruple(&target)?;
            let r = cli::cmd_quadruples(&q);
            emit(&r, r.render_text(), format);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
