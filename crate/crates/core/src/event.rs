//! Device input events and engine feedback events.
//!
//! Both serialize to the newline-delimited wire format: one flat JSON object
//! per event with `t` first and a `kind` tag.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;

/// One of the three physical wheels, index finger first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Wheel {
    One,
    Two,
    Three,
}

impl Wheel {
    pub const ALL: [Wheel; 3] = [Wheel::One, Wheel::Two, Wheel::Three];

    pub fn number(self) -> u8 {
        match self {
            Wheel::One => 1,
            Wheel::Two => 2,
            Wheel::Three => 3,
        }
    }

    pub fn slot(self) -> usize {
        usize::from(self.number() - 1)
    }
}

impl TryFrom<u8> for Wheel {
    type Error = u8;

    fn try_from(n: u8) -> Result<Self, u8> {
        match n {
            1 => Ok(Wheel::One),
            2 => Ok(Wheel::Two),
            3 => Ok(Wheel::Three),
            other => Err(other),
        }
    }
}

impl fmt::Display for Wheel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Wheel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Button {
    Primary,
    Secondary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Key {
    Ctrl,
}

/// Timestamp in milliseconds.
pub type Millis = u64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InputKind {
    WheelTurn { wheel: Wheel, degrees: Angle },
    ButtonDown(Button),
    ButtonUp(Button),
    KeyDown(Key),
    KeyUp(Key),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputEvent {
    pub t: Millis,
    pub kind: InputKind,
}

impl InputEvent {
    pub fn new(t: Millis, kind: InputKind) -> Self {
        Self { t, kind }
    }

    pub fn wheel(t: Millis, wheel: Wheel, degrees: f64) -> Self {
        Self::new(
            t,
            InputKind::WheelTurn {
                wheel,
                degrees: Angle::from_degrees(degrees),
            },
        )
    }

    pub fn button_down(t: Millis, button: Button) -> Self {
        Self::new(t, InputKind::ButtonDown(button))
    }

    pub fn button_up(t: Millis, button: Button) -> Self {
        Self::new(t, InputKind::ButtonUp(button))
    }

    pub fn ctrl_down(t: Millis) -> Self {
        Self::new(t, InputKind::KeyDown(Key::Ctrl))
    }

    pub fn ctrl_up(t: Millis) -> Self {
        Self::new(t, InputKind::KeyUp(Key::Ctrl))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tone {
    Valid,
    Invalid,
    Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MouseButton {
    Left,
    Right,
}

impl From<Button> for MouseButton {
    fn from(b: Button) -> Self {
        match b {
            Button::Primary => MouseButton::Left,
            Button::Secondary => MouseButton::Right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClickTarget {
    Node(String),
    Pos([i32; 2]),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "HNAV")]
    HNav,
    #[serde(rename = "NAV2D")]
    Nav2D,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::HNav => "HNAV",
            Mode::Nav2D => "NAV2D",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftDirection {
    Up,
    Down,
}

/// Feedback produced by the navigation engines.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputKind {
    Speech {
        text: String,
    },
    Beep {
        tone: Tone,
    },
    Haptic,
    FocusChanged {
        wheel: Wheel,
        node: String,
    },
    CursorMoved {
        x: i32,
        y: i32,
    },
    Click {
        button: MouseButton,
        #[serde(flatten)]
        target: ClickTarget,
    },
    ModeChanged {
        mode: Mode,
        teleport: bool,
    },
    LevelShift {
        direction: ShiftDirection,
    },
}

impl OutputKind {
    pub fn speech(text: impl Into<String>) -> Self {
        OutputKind::Speech { text: text.into() }
    }

    pub fn invalid() -> Self {
        OutputKind::Beep {
            tone: Tone::Invalid,
        }
    }
}

/// An [`OutputKind`] stamped with the time of the input that caused it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OutputEvent {
    pub t: Millis,
    #[serde(flatten)]
    pub kind: OutputKind,
}

impl OutputEvent {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("output events serialize")
    }
}
