use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sympdec_cli::commands::{self, DecideKind, InducedArgs, Outcome};
use sympdec_cli::verify::{Suite, VerifyConfig};
use sympdec_core::homotopy::{Family, Space};
use sympdec_core::induced::InducedOp;
use sympdec_core::lifting::ObstructionKind;

#[derive(Parser, Debug)]
#[command(name = "sympdec", version, about = "Tensor decompositions of symplectic bundles and Azumaya algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Human,
    Json,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FamilyArg {
    Sp,
    Psp,
    O,
    So,
    U,
    Gl,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sp => Family::Sp,
            FamilyArg::Psp => Family::PSp,
            FamilyArg::O => Family::O,
            FamilyArg::So => Family::SO,
            FamilyArg::U => Family::U,
            FamilyArg::Gl => Family::GL,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SpaceArg {
    Group,
    Classifying,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum DecideArg {
    Azumaya,
    Bundle,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum ExampleArg {
    #[value(name = "sphere-4m4")]
    Sphere4m4,
    #[value(name = "sphere-c")]
    SphereC,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homotopy group of a classical group or its classifying space
    Pi {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        i: u64,
        #[arg(long, value_enum, default_value = "group")]
        space: SpaceArg,
    },
    /// Matrix of an induced map on homotopy groups
    Induced {
        /// direct-sum, r-fold, doubling, tensor-sp-o, tensor-quotient,
        /// tensor-sp-sp, square-tensor, ttilde or J
        #[arg(value_parser = parse_op)]
        op: InducedOp,
        #[arg(long)]
        i: u64,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        u: Option<u64>,
        #[arg(long)]
        v: Option<u64>,
        /// The unknown bit; both values are reported when omitted
        #[arg(long)]
        z: Option<u8>,
    },
    /// Decomposability verdict for Azumaya algebras or symplectic bundles
    Decide {
        #[arg(value_enum)]
        kind: DecideArg,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        dim: u64,
    },
    /// Algebra on a sphere that does not decompose
    Example {
        #[arg(value_enum)]
        kind: ExampleArg,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Least positive u, v with |vn - 4um^2| = 1
    Bezout {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Connectivity of J, degree by degree
    Connectivity {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Obstruction degrees in the Moore-Postnikov tower
    Postnikov {
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Run a verification suite
    Verify {
        /// closure, lemmas, mixed-product, center, formulas, bezout, J-iso or all
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, env = "SYMPDEC_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        samples: u64,
        #[arg(long, default_value_t = 2)]
        max_m: u64,
        #[arg(long, default_value_t = 3)]
        max_n: u64,
        #[arg(long, default_value_t = 3)]
        max_r: u64,
        /// Include wall-clock time (makes output run-dependent)
        #[arg(long)]
        timing: bool,
    },
}

fn parse_op(s: &str) -> Result<InducedOp, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Pi { family, n, i, space } => {
            let space = match space {
                SpaceArg::Group => Space::Group,
                SpaceArg::Classifying => Space::Classifying,
            };
            commands::pi(family.into(), n, i, space)
        }
        Command::Induced { op, i, m, n, r, u, v, z } => {
            commands::induced(&InducedArgs { op, i, m, n, r, u, v, z })
        }
        Command::Decide { kind, m, n, dim } => {
            let kind = match kind {
                DecideArg::Azumaya => DecideKind::Azumaya,
                DecideArg::Bundle => DecideKind::Bundle,
            };
            commands::decide(kind, m, n, dim)
        }
        Command::Example { kind, m, n } => {
            let kind = match kind {
                ExampleArg::Sphere4m4 => ObstructionKind::Sphere4m4,
                ExampleArg::SphereC => ObstructionKind::SphereC,
            };
            commands::example(kind, m, n)
        }
        Command::Bezout { m, n } => commands::bezout(m, n),
        Command::Connectivity { m, n } => commands::connectivity(m, n),
        Command::Postnikov { m, n } => commands::postnikov(m, n),
        Command::Verify {
            suite,
            seed,
            samples,
            max_m,
            max_n,
            max_r,
            timing,
        } => {
            let cfg = VerifyConfig {
                seed,
                samples,
                max_m,
                max_n,
                max_r,
            };
            commands::run_verify(suite, &cfg, timing)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = dispatch(cli.command);
    match cli.output {
        Output::Json => println!(
            "{}",
            serde_json::to_string_pretty(&outcome.json).expect("json value")
        ),
        Output::Human => {
            if outcome.exit == commands::EXIT_USAGE {
                eprintln!("{}", outcome.human);
            } else {
                println!("{}", outcome.human);
            }
        }
    }
    ExitCode::from(outcome.exit)
}
