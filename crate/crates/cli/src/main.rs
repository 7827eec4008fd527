use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mcgame::axioms::{Axiom, Subject};
use mcgame::lp::DEFAULT_TIE_CAP;
use mcgame::transforms::DEFAULT_SIZE_CAP;
use mcgame_cli::{
    parse_game, run_command, AxiomParams, CliError, ColumnSpec, Command, Exact, Flags, Format, RationalList, RowSpec,
};

#[derive(Parser)]
#[command(name = "mcgame", version, about = "Exact solvers for multicriteria zero-sum matrix games")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Weight grid resolution r (weights are multiples of 1/r)
    #[arg(long, global = true)]
    grid: Option<u32>,
    /// Oracle grid resolution for player I
    #[arg(long = "x-grid", global = true, default_value_t = 50)]
    x_grid: u32,
    /// Oracle grid resolution for player II
    #[arg(long = "y-grid", global = true)]
    y_grid: Option<u32>,
    /// Enumerate every vertex of tied optimal sets (default)
    #[arg(long, global = true, overrides_with = "no_ties")]
    ties: bool,
    /// Keep one optimal solution per weight
    #[arg(long = "no-ties", global = true, overrides_with = "ties")]
    no_ties: bool,
    #[arg(long = "tie-cap", global = true, default_value_t = DEFAULT_TIE_CAP)]
    tie_cap: usize,
    /// Largest column count the product constructions may build
    #[arg(long = "size-cap", global = true, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: u128,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Exit with status 4 when an axiom check fails
    #[arg(long = "fail-on-axiom-violation", global = true)]
    fail_on_axiom_violation: bool,
    /// Add decimal renderings with this many digits
    #[arg(long, global = true)]
    decimals: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Value and optimal strategies of a one-criterion game
    Value { game: PathBuf },
    /// Weighted minimax payoffs of a shared-strategy game
    Minimax { game: PathBuf },
    /// Pareto-optimal security payoffs
    Poss { game: PathBuf },
    /// Security levels of a row strategy
    Security {
        game: PathBuf,
        #[arg(long)]
        strategy: RationalList,
    },
    /// Amalgamated one-criterion game
    Amalgamate {
        game: PathBuf,
        #[arg(long)]
        weights: Option<RationalList>,
    },
    /// Joined games, one per choice of columns
    Em { game: PathBuf },
    /// Shared-strategy game over column tuples
    ProductGame { game: PathBuf },
    /// Check one axiom on one instance
    CheckAxiom {
        game: PathBuf,
        #[arg(long)]
        axiom: Axiom,
        #[arg(long)]
        subject: Subject,
        /// Lower game for monotonicity
        #[arg(long)]
        lower: Option<PathBuf>,
        /// Column for criterion l, as "l:v1,v2,..."; repeat per criterion
        #[arg(long = "add-column")]
        add_column: Vec<ColumnSpec>,
        /// Column to remove, counted from 1
        #[arg(long)]
        column: Option<usize>,
        /// Criterion the column is removed from, counted from 1
        #[arg(long)]
        criterion: Option<usize>,
        /// Row to add, one list per criterion separated by ';'
        #[arg(long = "add-row")]
        add_row: Option<RowSpec>,
        /// Row to remove, counted from 1
        #[arg(long)]
        row: Option<usize>,
        /// Merge weight to report on
        #[arg(long)]
        focus: Option<Exact>,
    },
    /// Pinned separating instances for each pair of axioms
    IndependenceTable,
    /// Compare a sweep with its grid oracle
    OracleCompare { game: PathBuf },
}

fn index(name: &str, v: Option<usize>) -> Result<Option<usize>, CliError> {
    match v {
        Some(0) => Err(CliError::Usage(format!("--{name} counts from 1"))),
        v => Ok(v.map(|i| i - 1)),
    }
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let flags = Flags {
        grid: cli.grid,
        x_grid: cli.x_grid,
        y_grid: cli.y_grid,
        ties: !cli.no_ties,
        tie_cap: cli.tie_cap,
        size_cap: cli.size_cap,
        format: match cli.format {
            OutputFormat::Text => Format::Text,
            OutputFormat::Structured => Format::Structured,
        },
        fail_on_axiom_violation: cli.fail_on_axiom_violation,
        decimals: cli.decimals,
    };
    let (command, path) = match cli.command {
        Cmd::Value { game } => (Command::Value, Some(game)),
        Cmd::Minimax { game } => (Command::Minimax, Some(game)),
        Cmd::Poss { game } => (Command::Poss, Some(game)),
        Cmd::Security { game, strategy } => (Command::Security { strategy: strategy.0 }, Some(game)),
        Cmd::Amalgamate { game, weights } => (Command::Amalgamate { weights: weights.map(|w| w.0) }, Some(game)),
        Cmd::Em { game } => (Command::Em, Some(game)),
        Cmd::ProductGame { game } => (Command::ProductGame, Some(game)),
        Cmd::CheckAxiom { game, axiom, subject, lower, add_column, column, criterion, add_row, row, focus } => {
            let params = AxiomParams {
                lower: lower.as_deref().map(parse_game).transpose()?,
                add_columns: add_column,
                column: index("column", column)?,
                criterion: index("criterion", criterion)?,
                add_row,
                row: index("row", row)?,
                focus: focus.map(|f| f.0),
            };
            (Command::CheckAxiom { axiom, subject, params: Box::new(params) }, Some(game))
        }
        Cmd::IndependenceTable => (Command::IndependenceTable, None),
        Cmd::OracleCompare { game } => (Command::OracleCompare, Some(game)),
    };
    let game = path.as_deref().map(parse_game).transpose()?;
    let report = run_command(&command, game.as_ref(), &flags)?;
    Ok((report.render(flags.format), report.axiom_failed && flags.fail_on_axiom_violation))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((output, failed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(output.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(if failed { 4 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
