//! Command-line front end: load a curve, parse classes and stability
//! parameters, dispatch the exact computations, and print the result as
//! an aligned markdown table, CSV, or JSON.
//!
//! Exit codes: `0` success, `1` invalid input (including flag parse
//! errors), `2` broken internal invariant.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand};

use render::Format;

#[derive(Parser)]
#[command(
    name = "curvestab",
    version,
    about = "Exact wall-and-chamber computations for moduli of sheaves on singular curves"
)]
pub(crate) struct Cli {
    #[command(subcommand)]
    pub(crate) command: Command,
}

/// Which curve to work on: a named preset or a JSON description.
#[derive(Args)]
#[command(group(ArgGroup::new("curve_source").required(true).args(["preset", "spec"])))]
pub(crate) struct CurveArgs {
    /// Curve preset: node, cusp, tacnode, ordinary(n), or A(k).
    #[arg(long)]
    pub(crate) preset: Option<String>,

    /// Path to a curve description in JSON.
    #[arg(long, value_name = "PATH")]
    pub(crate) spec: Option<PathBuf>,
}

/// How to print dimensions that depend on the genus of the normalization.
#[derive(Args, Clone, Copy)]
pub(crate) struct GenusArgs {
    /// Substitute this integer for the genus g in printed dimensions.
    #[arg(long, value_name = "INT", conflicts_with = "genus_symbolic")]
    pub(crate) genus: Option<i64>,

    /// Print dimensions as polynomials in g (the default).
    #[arg(long)]
    pub(crate) genus_symbolic: bool,
}

impl GenusArgs {
    pub(crate) fn mode(self) -> render::GenusMode {
        match self.genus {
            Some(g) => render::GenusMode::At(g),
            None => render::GenusMode::Symbolic,
        }
    }
}

#[derive(Subcommand)]
pub(crate) enum Command {
    /// Enumerate the numerical walls for a class.
    Walls(WallsArgs),
    /// Wall-and-chamber decomposition of the two-parameter triangle.
    Chambers(ChambersArgs),
    /// Flip data for a simple wall v = u + w.
    Flip(FlipArgs),
    /// Euler pairing of one class (with itself) or of two classes.
    Euler(EulerArgs),
    /// Expected dimension of the moduli space of a class.
    Dim(DimArgs),
    /// Support constants and the support inequality at a parameter point.
    Support(SupportArgs),
    /// Modules over the Auslander algebra of the tacnode.
    #[command(subcommand)]
    Auslander(AuslanderCmd),
    /// Conductor ideals of plane curve singularities.
    Conductor(ConductorArgs),
    /// Full wall-crossing report for a class.
    Report(ReportArgs),
}

#[derive(Args)]
pub(crate) struct WallsArgs {
    #[command(flatten)]
    pub(crate) curve: CurveArgs,

    /// Class coordinates `rk,deg,ell...`, e.g. `6,1,6` or `2,1,2,4`.
    #[arg(long, value_name = "a,b,..")]
    pub(crate) class: String,

    #[command(flatten)]
    pub(crate) genus: GenusArgs,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct ChambersArgs {
    #[command(flatten)]
    pub(crate) curve: CurveArgs,

    /// Class coordinates `rk,deg,ell1,ell2`.
    #[arg(long, value_name = "a,b,..")]
    pub(crate) class: String,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct FlipArgs {
    #[command(flatten)]
    pub(crate) curve: CurveArgs,

    /// The two summands u and w (pass --class twice).
    #[arg(long = "class", value_name = "a,b,..", action = clap::ArgAction::Append, required = true)]
    pub(crate) classes: Vec<String>,

    #[command(flatten)]
    pub(crate) genus: GenusArgs,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct EulerArgs {
    #[command(flatten)]
    pub(crate) curve: CurveArgs,

    /// One class for the self-pairing, or two classes (pass --class twice).
    #[arg(long = "class", value_name = "a,b,..", action = clap::ArgAction::Append, required = true)]
    pub(crate) classes: Vec<String>,

    #[command(flatten)]
    pub(crate) genus: GenusArgs,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct DimArgs {
    #[command(flatten)]
    pub(crate) curve: CurveArgs,

    /// Class coordinates `rk,deg,ell...`.
    #[arg(long, value_name = "a,b,..")]
    pub(crate) class: String,

    #[command(flatten)]
    pub(crate) genus: GenusArgs,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct SupportArgs {
    #[command(flatten)]
    pub(crate) curve: CurveArgs,

    /// Node-path parameter t (shorthand for delta = [[t]]).
    #[arg(long, value_name = "p/q", conflicts_with_all = ["delta1", "delta2", "params"])]
    pub(crate) t: Option<String>,

    /// First triangle coordinate (with --delta2).
    #[arg(long, value_name = "p/q", requires = "delta2", conflicts_with = "params")]
    pub(crate) delta1: Option<String>,

    /// Second triangle coordinate (with --delta1).
    #[arg(long, value_name = "p/q", requires = "delta1", conflicts_with = "params")]
    pub(crate) delta2: Option<String>,

    /// Full stability parameters as inline JSON.
    #[arg(long, value_name = "JSON")]
    pub(crate) params: Option<String>,

    /// Optional class to test against the support inequality.
    #[arg(long, value_name = "a,b,..")]
    pub(crate) class: Option<String>,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Subcommand)]
pub(crate) enum AuslanderCmd {
    /// Feasible submodule invariants (l1, l2) with moduli dimensions.
    Submodules(SubmodulesArgs),
    /// Hom and Ext dimensions between two modules.
    Ext(ExtArgs),
    /// Minimal projective resolution of a module.
    Resolve(ResolveArgs),
}

#[derive(Args)]
pub(crate) struct SubmodulesArgs {
    /// Rank of the classes; the ambient module is P2^(2*rank).
    #[arg(long, default_value = "1")]
    pub(crate) rank: u32,

    #[command(flatten)]
    pub(crate) genus: GenusArgs,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct ExtArgs {
    /// Built-in module name (p1, p2, s1, s2) or path to a module in JSON.
    pub(crate) a: String,

    /// Built-in module name (p1, p2, s1, s2) or path to a module in JSON.
    pub(crate) b: String,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct ResolveArgs {
    /// Built-in module name (p1, p2, s1, s2) or path to a module in JSON.
    pub(crate) module: String,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct ConductorArgs {
    /// Singularity kind: node, cusp, ordinary, A, or multiplicities
    /// (omit to print the whole table).
    pub(crate) kind: Option<String>,

    /// Parameter: n for ordinary, k for A_k, or e1,e2,... for multiplicities.
    pub(crate) param: Option<String>,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

#[derive(Args)]
pub(crate) struct ReportArgs {
    #[command(flatten)]
    pub(crate) curve: CurveArgs,

    /// Class coordinates `rk,deg,ell...`.
    #[arg(long, value_name = "a,b,..")]
    pub(crate) class: String,

    #[command(flatten)]
    pub(crate) genus: GenusArgs,

    #[arg(long, value_enum, default_value = "md")]
    pub(crate) format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let ok = matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = err.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    let outcome =
        std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| commands::run(cli.command)));
    match outcome {
        Ok(Ok(doc)) => {
            print!("{doc}");
            ExitCode::SUCCESS
        }
        Ok(Err(failure)) => failure.report(),
        Err(_) => {
            eprintln!("internal error: unexpected panic (a bug, not bad input)");
            ExitCode::from(2)
        }
    }
}
