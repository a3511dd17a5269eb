use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use envlat_core::caps::{ENV_CAP_RANK, ENV_CAP_WEYL};
use envlat_core::counting::{self, Method};
use envlat_core::envlattice::{CrossSectionLattice, Idempotent};
use envlat_core::renner;
use envlat_core::verify::{verify_all, verify_diagram, Report};
use envlat_core::{export, Caps, DynkinDiagram, Error, WeylGroup};

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "envlat",
    version,
    about = "Orbit combinatorics of enveloping monoids"
)]
struct Cli {
    /// Largest Weyl group order to enumerate
    #[arg(long, global = true, env = ENV_CAP_WEYL)]
    cap_weyl: Option<u64>,

    /// Largest diagram rank for lattice enumeration
    #[arg(long, global = true, env = ENV_CAP_RANK)]
    cap_rank: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the cross-section lattice of a diagram
    Lattice {
        diagram: String,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Classify the local monoids of each element
    Classify {
        diagram: String,
        /// A single element, e.g. "I=1,2;J=1"
        #[arg(long)]
        element: Option<String>,
    },
    /// Orbit counts d_n for type A
    Count {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Rec)]
        method: MethodArg,
        /// Cross-check all methods and the series identities
        #[arg(long)]
        check: bool,
    },
    /// Renner monoid queries
    #[command(subcommand)]
    Renner(RennerCommand),
    /// Run the invariant checks
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum RennerCommand {
    /// The poset of a rank-one orbit as DOT
    Rank1 {
        diagram: String,
        /// The node s: the orbit of e(S, S \ {s}) by default
        #[arg(long = "s")]
        node: usize,
        /// Use e(S \ {s}, S) instead
        #[arg(long)]
        full_j: bool,
    },
    /// Count of rank-one Renner elements, with the per-atom breakdown
    R1count { diagram: String },
}

#[derive(Args)]
struct VerifyArgs {
    /// A diagram such as "B3", or "all"
    target: String,
    /// Highest rank visited by "all"
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Rec,
    Gf,
    Enum,
    All,
}

enum Failure {
    Usage(String),
    Cap(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::CapExceeded { .. } => Failure::Cap(err.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CAP)
        }
        Err(Failure::Verification(report)) => {
            eprintln!("{}", pretty(&report));
            ExitCode::from(EXIT_VERIFY)
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn caps(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(w) = cli.cap_weyl {
        caps.weyl = w;
    }
    if let Some(r) = cli.cap_rank {
        caps.rank = r;
    }
    caps
}

fn run(cli: Cli) -> Outcome {
    let caps = caps(&cli);
    match cli.command {
        Command::Lattice { diagram, dot, .. } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let lattice = CrossSectionLattice::enumerate(&d, caps.rank)?;
            if dot {
                Ok(export::lattice_dot(&lattice))
            } else {
                Ok(pretty(&export::lattice_json(&lattice)) + "\n")
            }
        }
        Command::Classify { diagram, element } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let lattice = CrossSectionLattice::enumerate(&d, caps.rank)?;
            let only = element
                .map(|spec| Idempotent::parse(&d, &spec))
                .transpose()?;
            Ok(pretty(&export::classify_json(&lattice, only.as_ref())) + "\n")
        }
        Command::Count {
            max_n,
            method,
            check,
        } => count(max_n, method, check, &caps),
        Command::Renner(cmd) => renner_cmd(cmd, &caps),
        Command::Verify(args) => verify(args, &caps),
    }
}

fn count(max_n: usize, method: MethodArg, check: bool, caps: &Caps) -> Outcome {
    let (name, rows) = match method {
        MethodArg::Rec => (
            "rec",
            counting::series(max_n, Method::Recurrence, caps.rank)?,
        ),
        MethodArg::Gf => (
            "gf",
            counting::series(max_n, Method::GeneratingFunction, caps.rank)?,
        ),
        MethodArg::Enum => (
            "enum",
            counting::series(max_n, Method::Enumeration, caps.rank)?,
        ),
        MethodArg::All => {
            let rec = counting::series(max_n, Method::Recurrence, caps.rank)?;
            let gf = counting::series(max_n, Method::GeneratingFunction, caps.rank)?;
            let en = counting::series(max_n, Method::Enumeration, caps.rank)?;
            let bad: Vec<usize> = (0..=max_n)
                .filter(|&n| rec[n] != gf[n] || rec[n] != en[n])
                .collect();
            if !bad.is_empty() {
                return Err(Failure::Verification(json!({
                    "schema": export::SCHEMA,
                    "kind": "count_failure",
                    "disagreeing_n": bad,
                })));
            }
            ("all", rec)
        }
    };
    if check {
        let mismatches = counting::agreement_report(max_n, max_n.min(caps.rank), caps.rank)?;
        if !mismatches.is_empty() {
            return Err(Failure::Verification(json!({
                "schema": export::SCHEMA,
                "kind": "count_failure",
                "mismatches": mismatches,
            })));
        }
    }
    Ok(pretty(&export::count_json(name, &rows)) + "\n")
}

fn weyl(d: &DynkinDiagram, caps: &Caps) -> Result<WeylGroup, Failure> {
    Ok(WeylGroup::enumerate(d, caps.weyl)?)
}

fn renner_cmd(cmd: RennerCommand, caps: &Caps) -> Outcome {
    match cmd {
        RennerCommand::Rank1 {
            diagram,
            node,
            full_j,
        } => {
            let d = DynkinDiagram::parse(&diagram)?;
            if node == 0 || node > d.rank() {
                return Err(Failure::Usage(format!(
                    "node {node} is not a node of {d} (1..={})",
                    d.rank()
                )));
            }
            let full = d.nodes();
            let (i, j) = if full_j {
                (full.without(node), full)
            } else {
                (full, full.without(node))
            };
            let e = Idempotent::essential(&d, i, j)?;
            let w = weyl(&d, caps)?;
            let poset = renner::rank1_orbit_poset(&w, &e)?;
            Ok(export::rank1_dot(&w, &poset))
        }
        RennerCommand::R1count { diagram } => {
            let d = DynkinDiagram::parse(&diagram)?;
            let formula = renner::count_r1(&d)?;
            let lattice = CrossSectionLattice::enumerate(&d, caps.rank)?;
            let w = weyl(&d, caps)?;
            let breakdown = renner::r1_breakdown(&lattice, &w)?;
            let direct = renner::count_r1_direct(&lattice, &w)?;
            let out = export::r1count_json(&d.name(), &formula, &direct, &breakdown);
            if formula != direct {
                return Err(Failure::Verification(out));
            }
            Ok(pretty(&out) + "\n")
        }
    }
}

fn verify(args: VerifyArgs, caps: &Caps) -> Outcome {
    let reports: Vec<Report> = if args.target.eq_ignore_ascii_case("all") {
        verify_all(args.max_rank, caps)?
    } else {
        vec![verify_diagram(&DynkinDiagram::parse(&args.target)?, caps)?]
    };
    let passed = reports.iter().all(Report::passed);
    let out = export::envelope("verify", json!({ "passed": passed, "reports": reports }));
    if passed {
        Ok(pretty(&out) + "\n")
    } else {
        Err(Failure::Verification(out))
    }
}
