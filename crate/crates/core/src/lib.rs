//! Navigation engine for a three-wheel, two-button screen-reader input
//! device.
//!
//! - [`model`]: UI trees loaded from JSON fixtures, validation, hit-testing.
//! - [`hnav`]: hierarchical mode, one wheel per tree level.
//! - [`nav2d`]: 2D pointer mode with a speed wheel and directional teleport.
//! - [`controller`]: the session state machine that turns raw device events
//!   into navigation and feedback.
//! - [`planner`]: minimal action counts versus linear screen-reader stepping.
//! - [`io`]: event scripts and replay transcripts, plus the line service.

pub mod angle;
pub mod config;
pub mod controller;
pub mod event;
pub mod hnav;
pub mod io;
pub mod model;
pub mod nav2d;
pub mod planner;

pub use angle::Angle;
pub use config::Config;
pub use controller::{quantize, Session, SessionError, Snapshot};
pub use event::{Button, InputEvent, InputKind, Mode, OutputEvent, OutputKind, Wheel};
pub use hnav::HNavState;
pub use model::{load_tree, NodeIx, Point, Rect, UiTree};
pub use nav2d::{announce_location, teleport_target, Cursor2DState, Direction};
pub use planner::{cost_report, linear_cost, min_actions, ActionPlan};
