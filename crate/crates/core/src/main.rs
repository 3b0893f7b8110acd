use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sqfree_lab::groebner::MonomialOrder;
use sqfree_lab::workbench::{run, run_corpus, Command, JobSpec, OutputMode, EXIT_FAILURE, EXIT_PARSE};
use sqfree_lab::FieldSpec;

#[derive(Parser)]
#[command(name = "sqfree-lab", version, about = "Stanley-Reisner rings, squarefree Ext duals and Lyubeznik tables")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct JobArgs {
    /// Complex file (`vertices: n`) or ideal file (`vars: n`).
    #[arg(long, short)]
    input: PathBuf,
    /// Coefficient field characteristic: 0 for the rationals or a prime.
    #[arg(long = "char", value_parser = parse_field)]
    characteristic: Option<FieldSpec>,
    /// Monomial order for ideal commands.
    #[arg(long, default_value = "degrevlex")]
    order: MonomialOrder,
    /// Emit one JSON object instead of text.
    #[arg(long)]
    json: bool,
    /// Primes compared by `stability`.
    #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 5, 7, 11])]
    primes: Vec<u32>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced simplicial homology.
    Homology(JobArgs),
    /// Reisner's Cohen-Macaulay criterion.
    Cm(JobArgs),
    /// Buchsbaum test: pure with Cohen-Macaulay links of nonempty faces.
    Buchsbaum(JobArgs),
    /// Canonical Cohen-Macaulay test.
    Ccm(JobArgs),
    /// Lyubeznik table of the Stanley-Reisner ring.
    Lyubeznik(JobArgs),
    /// Dual graph of the facets and its components.
    DualGraph(JobArgs),
    /// Reduced Groebner basis.
    Groebner(JobArgs),
    /// Minimal generators of the initial ideal.
    InitialIdeal(JobArgs),
    /// Whether the initial ideal is squarefree.
    Radical(JobArgs),
    /// Initial ideal over the rationals against its reductions modulo primes.
    Stability(JobArgs),
    /// Stanley-Reisner ideal of a complex.
    SrIdeal(JobArgs),
    /// Complex of a squarefree monomial ideal.
    ComplexOfIdeal(JobArgs),
    /// Run the bundled regression corpus.
    Corpus {
        #[arg(long, default_value = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))]
        dir: PathBuf,
    },
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let c: u64 = s.parse().map_err(|_| format!("`{s}` is not a non-negative integer"))?;
    FieldSpec::new(c).map_err(|e| e.to_string())
}

fn job(command: Command, args: JobArgs) -> JobSpec {
    JobSpec {
        command,
        input: args.input,
        field: args.characteristic,
        order: args.order,
        output: if args.json { OutputMode::Json } else { OutputMode::Text },
        primes: args.primes,
    }
}

fn exit(code: i32) -> ExitCode {
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let spec = match cli.command {
        Cmd::Homology(a) => job(Command::Homology, a),
        Cmd::Cm(a) => job(Command::Cm, a),
        Cmd::Buchsbaum(a) => job(Command::Buchsbaum, a),
        Cmd::Ccm(a) => job(Command::Ccm, a),
        Cmd::Lyubeznik(a) => job(Command::Lyubeznik, a),
        Cmd::DualGraph(a) => job(Command::DualGraph, a),
        Cmd::Groebner(a) => job(Command::Groebner, a),
        Cmd::InitialIdeal(a) => job(Command::InitialIdeal, a),
        Cmd::Radical(a) => job(Command::Radical, a),
        Cmd::Stability(a) => job(Command::Stability, a),
        Cmd::SrIdeal(a) => job(Command::SrIdeal, a),
        Cmd::ComplexOfIdeal(a) => job(Command::ComplexOfIdeal, a),
        Cmd::Corpus { dir } => {
            return match run_corpus(&dir) {
                Ok(summary) => {
                    print!("{}", summary.to_text());
                    exit(if summary.all_passed() { 0 } else { EXIT_FAILURE })
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    exit(EXIT_PARSE)
                }
            };
        }
    };
    let outcome = run(&spec);
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    exit(outcome.code)
}
