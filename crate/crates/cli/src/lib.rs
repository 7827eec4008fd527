//! Batch front end for the `mcgame` solvers: game files, commands and reports.

pub mod commands;
pub mod error;
pub mod gamefile;

pub use commands::{run_command, AxiomParams, ColumnSpec, Command, Exact, Flags, Format, RationalList, Report, RowSpec};
pub use error::CliError;
pub use gamefile::{emit_game, emit_game_string, parse_game, parse_game_str, GameFile};
