use thiserror::Error;

use crate::config::Config;
use crate::controller::{Session, SessionError, Snapshot};
use crate::event::{InputEvent, OutputEvent};
use crate::model::UiTree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("event {index}: {source}")]
    Session {
        index: usize,
        #[source]
        source: SessionError,
    },
    #[error(transparent)]
    Init(SessionError),
}

/// Everything a session emitted, followed by its final state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub events: Vec<OutputEvent>,
    pub summary: Snapshot,
}

impl Transcript {
    /// One JSON object per line: the events in order, then the state line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.events {
            s.push_str(&e.to_json());
            s.push('\n');
        }
        s.push_str(&self.summary.to_json());
        s.push('\n');
        s
    }
}

/// Replays `script` from a fresh session.
pub fn run_session(
    tree: &UiTree,
    config: &Config,
    script: &[InputEvent],
) -> Result<Transcript, ReplayError> {
    let mut session = Session::new(tree, config.clone()).map_err(ReplayError::Init)?;
    let mut events = Vec::new();
    for (index, ev) in script.iter().enumerate() {
        let out = session
            .handle(tree, ev)
            .map_err(|source| ReplayError::Session { index, source })?;
        events.extend(out);
    }
    Ok(Transcript {
        events,
        summary: session.snapshot(tree),
    })
}
