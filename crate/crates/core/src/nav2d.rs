//! 2D cursor mode: wheel 1 moves along X, wheel 2 along Y, wheel 3 sets the
//! speed multiplier. With teleport enabled, X/Y detents jump to the nearest
//! element center in the direction of motion instead.

use crate::config::Config;
use crate::event::{OutputKind, Wheel};
use crate::model::{NodeIx, Point, Screen, UiTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
    Up,
    Down,
}

impl Direction {
    /// Whether `c` lies in the closed 90° cone opening from `from` toward
    /// this direction. Points level with `from` on the motion axis never
    /// qualify.
    pub fn cone_contains(self, from: Point, c: Point) -> bool {
        let dx = i64::from(c.x) - i64::from(from.x);
        let dy = i64::from(c.y) - i64::from(from.y);
        match self {
            Direction::Right => dx > 0 && dy.abs() <= dx,
            Direction::Left => dx < 0 && dy.abs() <= -dx,
            Direction::Up => dy < 0 && dx.abs() <= -dy,
            Direction::Down => dy > 0 && dx.abs() <= dy,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cursor2DState {
    pub pos: Point,
    pub speed: u32,
    pub teleport: bool,
    pub last_hover: Option<NodeIx>,
}

/// Nearest bounded element center inside the direction cone from `pos`.
/// Ties go to the lexicographically smaller id.
pub fn teleport_target(tree: &UiTree, pos: Point, direction: Direction) -> Option<NodeIx> {
    let mut best: Option<(i64, &str, NodeIx)> = None;
    for ix in tree.iter() {
        let Some(bounds) = tree.node(ix).bounds else {
            continue;
        };
        let c = bounds.center();
        if !direction.cone_contains(pos, c) {
            continue;
        }
        let dx = i64::from(c.x) - i64::from(pos.x);
        let dy = i64::from(c.y) - i64::from(pos.y);
        let d2 = dx * dx + dy * dy;
        let id = tree.id(ix);
        let closer = match best {
            None => true,
            Some((bd, bid, _)) => d2 < bd || (d2 == bd && id < bid),
        };
        if closer {
            best = Some((d2, id, ix));
        }
    }
    best.map(|(_, _, ix)| ix)
}

/// "P% from the left and Q% from the top", each rounded half-up.
pub fn announce_location(pos: Point, screen: Screen) -> String {
    format!(
        "{}% from the left and {}% from the top",
        percent(pos.x, screen.width),
        percent(pos.y, screen.height)
    )
}

fn percent(v: i32, extent: i32) -> i64 {
    let (v, extent) = (i64::from(v), i64::from(extent));
    (200 * v + extent).div_euclid(2 * extent)
}

impl Cursor2DState {
    /// Cursor at the screen center with the configured default speed.
    pub fn new(tree: &UiTree, config: &Config) -> Self {
        let pos = tree.screen().center();
        Self {
            pos,
            speed: config.default_speed,
            teleport: false,
            last_hover: tree.node_at_point(pos),
        }
    }

    pub fn move_cursor(
        &mut self,
        tree: &UiTree,
        config: &Config,
        wheel: Wheel,
        detents: i64,
    ) -> Vec<OutputKind> {
        if detents == 0 {
            return Vec::new();
        }
        match wheel {
            Wheel::Three => self.change_speed(config, detents),
            Wheel::One | Wheel::Two if self.teleport => {
                let direction = match wheel {
                    Wheel::One if detents > 0 => Direction::Right,
                    Wheel::One => Direction::Left,
                    _ if (detents > 0) != config.invert_y => Direction::Up,
                    _ => Direction::Down,
                };
                self.teleport(tree, direction, detents.unsigned_abs())
            }
            Wheel::One | Wheel::Two => self.glide(tree, config, wheel, detents),
        }
    }

    fn change_speed(&mut self, config: &Config, detents: i64) -> Vec<OutputKind> {
        let next = (i64::from(self.speed))
            .saturating_add(detents)
            .clamp(1, i64::from(config.max_speed)) as u32;
        if next == self.speed {
            return vec![OutputKind::invalid()];
        }
        let steps = next.abs_diff(self.speed);
        self.speed = next;
        (0..steps).map(|_| OutputKind::Haptic).collect()
    }

    fn glide(
        &mut self,
        tree: &UiTree,
        config: &Config,
        wheel: Wheel,
        detents: i64,
    ) -> Vec<OutputKind> {
        let delta = detents
            .saturating_mul(i64::from(config.base_step))
            .saturating_mul(i64::from(self.speed));
        let screen = tree.screen();
        let shifted = |v: i32, d: i64| v64_to_i32(i64::from(v).saturating_add(d));
        let target = match wheel {
            Wheel::One => Point::new(shifted(self.pos.x, delta), self.pos.y),
            _ if config.invert_y => Point::new(self.pos.x, shifted(self.pos.y, delta)),
            _ => Point::new(self.pos.x, shifted(self.pos.y, delta.saturating_neg())),
        };
        let next = screen.clamp(target);
        if next == self.pos {
            return vec![OutputKind::invalid()];
        }
        self.pos = next;

        let mut out: Vec<OutputKind> = (0..detents.unsigned_abs())
            .map(|_| OutputKind::Haptic)
            .collect();
        out.push(OutputKind::CursorMoved {
            x: next.x,
            y: next.y,
        });
        let hover = tree.node_at_point(next);
        if hover != self.last_hover {
            self.last_hover = hover;
            if let Some(node) = hover {
                out.push(OutputKind::speech(tree.name(node)));
            }
        }
        out
    }

    fn teleport(&mut self, tree: &UiTree, direction: Direction, hops: u64) -> Vec<OutputKind> {
        let mut out = Vec::new();
        for _ in 0..hops {
            let Some(node) = teleport_target(tree, self.pos, direction) else {
                break;
            };
            let c = tree
                .node(node)
                .bounds
                .expect("candidates have bounds")
                .center();
            self.pos = c;
            out.push(OutputKind::Haptic);
            out.push(OutputKind::CursorMoved { x: c.x, y: c.y });
            out.push(OutputKind::speech(tree.name(node)));
        }
        if out.is_empty() {
            return vec![OutputKind::invalid()];
        }
        // The teleport speech already names the target; no separate hover
        // readout.
        self.last_hover = tree.node_at_point(self.pos);
        out
    }
}

fn v64_to_i32(v: i64) -> i32 {
    v.clamp(i64::from(i32::MIN), i64::from(i32::MAX)) as i32
}
