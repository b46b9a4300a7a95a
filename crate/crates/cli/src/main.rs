use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod io;
mod opspec;

/// Exit codes: 0 success, 1 usage or parse error, 2 validation error,
/// 3 law failure.
#[derive(Parser)]
#[command(
    name = "superpose",
    version,
    about = "Multi-valued discrete functions: decompose, operate, solve, verify"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Alphabet family tables are read with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Number-valued tables: `-1, 0, 1` for three symbols, `0..N-1`
    /// (or balanced `-k..k`) otherwise.
    Function,
    /// Operator-valued tables over the symbols `-e, o, e`.
    Operator,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a table into a superposition of unary functions.
    Decompose(DecomposeArgs),
    /// Apply operators to tables.
    Apply(ApplyArgs),
    /// Solve an equation with one unknown.
    Solve(SolveArgs),
    /// Run the operator-law suites.
    Laws(LawsArgs),
    /// Re-run a verb over the operator-level alphabet.
    Lift(LiftArgs),
    /// Pretty-print a table in block layout.
    Show(ShowArgs),
}

#[derive(Args)]
struct DecomposeArgs {
    /// Table file to decompose.
    #[arg(long = "in", value_name = "FILE")]
    input: String,
    /// Write the formula here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    /// Keep a term for every table point, zero-valued ones included.
    #[arg(long)]
    unpruned: bool,
    #[arg(long, value_enum, default_value = "function")]
    level: Level,
}

#[derive(Args)]
struct ApplyArgs {
    /// Input table file; repeat for several tables.
    #[arg(long = "in", value_name = "FILE", required = true)]
    input: Vec<String>,
    /// Operator to apply, in order: `C(1,0,2)`, `T1:(1,-1,0)`,
    /// `T0:conv((1,0,0))`, `FALSE@3`, `SUM`.
    #[arg(long = "op", value_name = "SPEC", required = true)]
    ops: Vec<String>,
    /// Write the resulting table here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    #[arg(long, value_enum, default_value = "function")]
    level: Level,
}

#[derive(Args)]
struct SolveArgs {
    /// Equation file, e.g. `solve x : (x f1 a) f3 (x f2 b) = c`.
    #[arg(long, value_name = "FILE")]
    eq: String,
    /// Function binding `name=table-file`; repeat per name.
    #[arg(long = "bind", value_name = "NAME=FILE", required = true)]
    bindings: Vec<String>,
    /// Directory for solution.tbl and solution.formula (stdout otherwise).
    #[arg(long, value_name = "DIR")]
    out: Option<String>,
    /// Also write every intermediate of the symbolic route.
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value = "function")]
    level: Level,
}

#[derive(Args)]
struct LawsArgs {
    /// Which suite to run.
    #[arg(long, value_enum, default_value = "all")]
    check: commands::laws::Suite,
    /// Functions sampled per table entry.
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Write the report lines here as well as stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<String>,
    /// Write the machine-readable summary with counterexample tables.
    #[arg(long, value_name = "FILE")]
    summary: Option<String>,
    #[arg(long, value_enum, default_value = "function")]
    level: Level,
}

#[derive(Args)]
struct LiftArgs {
    #[command(subcommand)]
    inner: LiftCommand,
}

#[derive(Subcommand)]
enum LiftCommand {
    Decompose(DecomposeArgs),
    Apply(ApplyArgs),
    Solve(SolveArgs),
    Laws(LawsArgs),
    Show(ShowArgs),
}

#[derive(Args)]
struct ShowArgs {
    /// Table file to display.
    #[arg(long = "in", value_name = "FILE")]
    input: String,
    #[arg(long, value_enum, default_value = "function")]
    level: Level,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap handles --help/--version as "errors" with success status
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify(&err))
        }
    }
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Decompose(args) => commands::decompose::run(args),
        Command::Apply(args) => commands::apply::run(args),
        Command::Solve(args) => commands::solve::run(args),
        Command::Laws(args) => commands::laws::run(args),
        Command::Show(args) => commands::show::run(args),
        Command::Lift(args) => match args.inner {
            LiftCommand::Decompose(mut a) => {
                a.level = Level::Operator;
                commands::decompose::run(a)
            }
            LiftCommand::Apply(mut a) => {
                a.level = Level::Operator;
                commands::apply::run(a)
            }
            LiftCommand::Solve(mut a) => {
                a.level = Level::Operator;
                commands::solve::run(a)
            }
            LiftCommand::Laws(mut a) => {
                a.level = Level::Operator;
                commands::laws::run(a)
            }
            LiftCommand::Show(mut a) => {
                a.level = Level::Operator;
                commands::show::run(a)
            }
        },
    }
}

/// Parse problems exit 1, everything else that bubbles up as a core error
/// is a validation failure and exits 2; plain I/O problems exit 1.
fn classify(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(core) = cause.downcast_ref::<superpose_core::Error>() {
            return if core.is_parse() { 1 } else { 2 };
        }
    }
    1
}
