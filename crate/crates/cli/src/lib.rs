//! Library surface of the batch front end, exposed so integration tests can
//! drive the parser and dispatcher in-process.

pub mod problem;
pub mod run;

pub use problem::{parse_problem, ProblemFile};
pub use run::{error_output, run, CommandOutput, BOOL_FLAGS, COMMANDS};
