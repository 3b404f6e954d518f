//! Session state machine: detent quantization, button chords, long-press and
//! mode switching between hierarchical and 2D navigation.
//!
//! Every button action resolves on release. That is what lets a CTRL chord
//! (both buttons) and a long press be told apart from a plain click.

use serde::Serialize;
use thiserror::Error;

use crate::angle::Angle;
use crate::config::Config;
use crate::event::{
    Button, ClickTarget, InputEvent, InputKind, Key, Millis, Mode, MouseButton, OutputEvent,
    OutputKind, Tone, Wheel,
};
use crate::hnav::{HNavError, HNavState};
use crate::model::UiTree;
use crate::nav2d::{announce_location, Cursor2DState};

/// Splits accumulated rotation into whole detents (truncated toward zero)
/// and the carried remainder.
pub fn quantize(residual: Angle, degrees: Angle, resolution: Angle) -> (i64, Angle) {
    assert!(
        resolution > Angle::ZERO,
        "rotation resolution must be positive"
    );
    (residual + degrees).div_rem(resolution)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("event at t={got} precedes previous event at t={previous}")]
    OutOfOrder { previous: Millis, got: Millis },
    #[error("wheel turn of zero degrees")]
    ZeroRotation,
    #[error(transparent)]
    Tree(#[from] HNavError),
}

/// Full engine state as sent to clients after every input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    kind: &'static str,
    pub mode: Mode,
    pub teleport: bool,
    pub focus: [Option<String>; 3],
    pub window_base: u32,
    pub pos: [i32; 2],
    pub speed: u32,
}

impl Snapshot {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("snapshots serialize")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Session {
    mode: Mode,
    hnav: HNavState,
    nav2d: Cursor2DState,
    ctrl_down: bool,
    primary_since: Option<Millis>,
    secondary_since: Option<Millis>,
    chord_latched: bool,
    residuals: [Angle; 3],
    last_t: Option<Millis>,
    config: Config,
}

impl Session {
    pub fn new(tree: &UiTree, config: Config) -> Result<Self, SessionError> {
        Ok(Self {
            mode: Mode::HNav,
            hnav: HNavState::new(tree)?,
            nav2d: Cursor2DState::new(tree, &config),
            ctrl_down: false,
            primary_since: None,
            secondary_since: None,
            chord_latched: false,
            residuals: [Angle::ZERO; 3],
            last_t: None,
            config,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn hnav(&self) -> &HNavState {
        &self.hnav
    }

    pub fn nav2d(&self) -> &Cursor2DState {
        &self.nav2d
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn residual(&self, wheel: Wheel) -> Angle {
        self.residuals[wheel.slot()]
    }

    pub fn chord_latched(&self) -> bool {
        self.chord_latched
    }

    pub fn snapshot(&self, tree: &UiTree) -> Snapshot {
        Snapshot {
            kind: "state",
            mode: self.mode,
            teleport: self.nav2d.teleport,
            focus: self
                .hnav
                .focus_triple(tree)
                .map(|f| f.map(|ix| tree.id(ix).to_owned())),
            window_base: self.hnav.window_base(tree),
            pos: [self.nav2d.pos.x, self.nav2d.pos.y],
            speed: self.nav2d.speed,
        }
    }

    /// Applies one input event. On error the session is left untouched.
    pub fn handle(
        &mut self,
        tree: &UiTree,
        event: &InputEvent,
    ) -> Result<Vec<OutputEvent>, SessionError> {
        if let Some(previous) = self.last_t {
            if event.t < previous {
                return Err(SessionError::OutOfOrder {
                    previous,
                    got: event.t,
                });
            }
        }
        let out = match event.kind {
            InputKind::WheelTurn { wheel, degrees } => {
                if degrees.is_zero() {
                    return Err(SessionError::ZeroRotation);
                }
                self.turn(tree, wheel, degrees)
            }
            InputKind::KeyDown(Key::Ctrl) => self.ctrl_pressed(tree),
            InputKind::KeyUp(Key::Ctrl) => {
                self.ctrl_down = false;
                Vec::new()
            }
            InputKind::ButtonDown(button) => self.button_pressed(button, event.t),
            InputKind::ButtonUp(button) => self.button_released(tree, button, event.t),
        };
        self.last_t = Some(event.t);
        Ok(out
            .into_iter()
            .map(|kind| OutputEvent { t: event.t, kind })
            .collect())
    }

    /// Flips between hierarchical and 2D navigation, keeping both states.
    pub fn toggle_mode(&mut self) -> Vec<OutputKind> {
        self.mode = match self.mode {
            Mode::HNav => Mode::Nav2D,
            Mode::Nav2D => Mode::HNav,
        };
        vec![
            OutputKind::ModeChanged {
                mode: self.mode,
                teleport: self.nav2d.teleport,
            },
            OutputKind::Beep { tone: Tone::Mode },
        ]
    }

    fn turn(&mut self, tree: &UiTree, wheel: Wheel, degrees: Angle) -> Vec<OutputKind> {
        let slot = wheel.slot();
        let (detents, residual) = quantize(self.residuals[slot], degrees, self.config.resolution());
        self.residuals[slot] = residual;
        if detents == 0 {
            return Vec::new();
        }
        match self.mode {
            Mode::HNav => self.hnav.rotate(tree, wheel, detents),
            Mode::Nav2D => self.nav2d.move_cursor(tree, &self.config, wheel, detents),
        }
    }

    fn both_buttons_down(&self) -> bool {
        self.primary_since.is_some() && self.secondary_since.is_some()
    }

    fn ctrl_pressed(&mut self, tree: &UiTree) -> Vec<OutputKind> {
        if self.ctrl_down {
            return Vec::new();
        }
        self.ctrl_down = true;
        if self.both_buttons_down() {
            self.chord_latched = true;
        }
        let idle = self.primary_since.is_none() && self.secondary_since.is_none();
        if self.mode == Mode::Nav2D && idle {
            vec![OutputKind::speech(announce_location(
                self.nav2d.pos,
                tree.screen(),
            ))]
        } else {
            Vec::new()
        }
    }

    fn button_pressed(&mut self, button: Button, t: Millis) -> Vec<OutputKind> {
        let slot = match button {
            Button::Primary => &mut self.primary_since,
            Button::Secondary => &mut self.secondary_since,
        };
        if slot.is_none() {
            *slot = Some(t);
        }
        if self.ctrl_down && self.both_buttons_down() {
            self.chord_latched = true;
        }
        Vec::new()
    }

    fn button_released(&mut self, tree: &UiTree, button: Button, t: Millis) -> Vec<OutputKind> {
        let slot = match button {
            Button::Primary => &mut self.primary_since,
            Button::Secondary => &mut self.secondary_since,
        };
        let Some(pressed_at) = slot.take() else {
            return Vec::new();
        };

        if self.chord_latched {
            if self.primary_since.is_none() && self.secondary_since.is_none() {
                self.chord_latched = false;
                return self.toggle_mode();
            }
            return Vec::new();
        }

        if self.ctrl_down {
            return match (self.mode, button) {
                (Mode::HNav, Button::Primary) => self.hnav.shift_down(tree),
                (Mode::HNav, Button::Secondary) => self.hnav.shift_up(tree),
                (Mode::Nav2D, _) => vec![OutputKind::invalid()],
            };
        }

        match (self.mode, button) {
            (Mode::HNav, _) => self.hnav.activate(tree, button),
            (Mode::Nav2D, Button::Secondary) if t - pressed_at >= self.config.long_press_ms => {
                self.nav2d.teleport = !self.nav2d.teleport;
                vec![OutputKind::ModeChanged {
                    mode: Mode::Nav2D,
                    teleport: self.nav2d.teleport,
                }]
            }
            (Mode::Nav2D, _) => vec![OutputKind::Click {
                button: MouseButton::from(button),
                target: ClickTarget::Pos([self.nav2d.pos.x, self.nav2d.pos.y]),
            }],
        }
    }
}
