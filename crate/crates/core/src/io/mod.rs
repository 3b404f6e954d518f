//! Event scripts and session replay, plus the line-oriented service bridge.

mod pairs;
mod script;
mod serve;
mod transcript;

pub use pairs::{parse_pairs, PairsError};
pub use script::{encode_event, encode_script, parse_line, parse_script, ScriptError};
pub use serve::{Server, Service};
pub use transcript::{run_session, ReplayError, Transcript};
