//! File formats and subcommands behind the `oddcut` binary.

pub mod commands;
pub mod format;

pub use commands::{cmd_gomory_hu, cmd_separate, cmd_tcut, Flags, Output};
pub use format::{parse_graph, parse_instance, parse_point, print_instance, print_point, FileMode, GraphFile, InstanceFile, ParseError};
