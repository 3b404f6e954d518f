use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::angle::Angle;
use crate::event::{Button, InputEvent, InputKind, Key, Millis, Wheel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: unknown wheel {wheel}")]
    UnknownWheel { line: usize, wheel: u8 },
    #[error("line {line}: degrees must be finite, non-zero and at most 1e9 in magnitude")]
    BadDegrees { line: usize },
    #[error("line {line}: timestamp {got} precedes {previous}")]
    DecreasingTimestamp {
        line: usize,
        previous: Millis,
        got: Millis,
    },
}

impl ScriptError {
    pub fn line(&self) -> usize {
        match *self {
            ScriptError::Malformed { line, .. }
            | ScriptError::UnknownWheel { line, .. }
            | ScriptError::BadDegrees { line }
            | ScriptError::DecreasingTimestamp { line, .. } => line,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct WireInput {
    t: Millis,
    #[serde(flatten)]
    kind: WireKind,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WireKind {
    Wheel { wheel: u8, degrees: f64 },
    ButtonDown { button: Button },
    ButtonUp { button: Button },
    KeyDown { key: Key },
    KeyUp { key: Key },
}

/// Parses one wire-format input line. `line` is used for error reporting.
pub fn parse_line(text: &str, line: usize) -> Result<InputEvent, ScriptError> {
    let wire: WireInput = serde_json::from_str(text).map_err(|e| ScriptError::Malformed {
        line,
        message: e.to_string(),
    })?;
    let kind = match wire.kind {
        WireKind::Wheel { wheel, degrees } => {
            let wheel = Wheel::try_from(wheel)
                .map_err(|wheel| ScriptError::UnknownWheel { line, wheel })?;
            if !Angle::is_representable(degrees) || Angle::from_degrees(degrees).is_zero() {
                return Err(ScriptError::BadDegrees { line });
            }
            InputKind::WheelTurn {
                wheel,
                degrees: Angle::from_degrees(degrees),
            }
        }
        WireKind::ButtonDown { button } => InputKind::ButtonDown(button),
        WireKind::ButtonUp { button } => InputKind::ButtonUp(button),
        WireKind::KeyDown { key } => InputKind::KeyDown(key),
        WireKind::KeyUp { key } => InputKind::KeyUp(key),
    };
    Ok(InputEvent::new(wire.t, kind))
}

/// Parses a newline-delimited script. Blank lines are skipped but still
/// counted for line numbers.
pub fn parse_script(text: &str) -> Result<Vec<InputEvent>, ScriptError> {
    let mut events: Vec<InputEvent> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let line = i + 1;
        let ev = parse_line(raw, line)?;
        if let Some(prev) = events.last() {
            if ev.t < prev.t {
                return Err(ScriptError::DecreasingTimestamp {
                    line,
                    previous: prev.t,
                    got: ev.t,
                });
            }
        }
        events.push(ev);
    }
    Ok(events)
}

pub fn encode_event(event: &InputEvent) -> String {
    let kind = match event.kind {
        InputKind::WheelTurn { wheel, degrees } => WireKind::Wheel {
            wheel: wheel.number(),
            degrees: degrees.degrees(),
        },
        InputKind::ButtonDown(button) => WireKind::ButtonDown { button },
        InputKind::ButtonUp(button) => WireKind::ButtonUp { button },
        InputKind::KeyDown(key) => WireKind::KeyDown { key },
        InputKind::KeyUp(key) => WireKind::KeyUp { key },
    };
    serde_json::to_string(&WireInput { t: event.t, kind }).expect("input events serialize")
}

pub fn encode_script(events: &[InputEvent]) -> String {
    events.iter().map(|e| encode_event(e) + "\n").collect()
}
