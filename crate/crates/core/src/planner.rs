//! Navigation cost: shortest wheel/shift sequences under hierarchical
//! navigation, compared with linear next/previous stepping.
//!
//! The search runs over the memoryless variant of the engine so that a
//! state's successors depend only on where the three cursors are.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::event::Wheel;
use crate::hnav::{HNavState, WheelCursor};
use crate::model::{NodeIx, UiTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Rotate { wheel: Wheel, forward: bool },
    ShiftUp,
    ShiftDown,
}

impl Action {
    /// Expansion order; fixes which of several minimal plans is returned.
    pub const ORDER: [Action; 8] = [
        Action::Rotate {
            wheel: Wheel::One,
            forward: false,
        },
        Action::Rotate {
            wheel: Wheel::One,
            forward: true,
        },
        Action::Rotate {
            wheel: Wheel::Two,
            forward: false,
        },
        Action::Rotate {
            wheel: Wheel::Two,
            forward: true,
        },
        Action::Rotate {
            wheel: Wheel::Three,
            forward: false,
        },
        Action::Rotate {
            wheel: Wheel::Three,
            forward: true,
        },
        Action::ShiftUp,
        Action::ShiftDown,
    ];

    /// Applies the action to `state`; returns whether anything moved.
    pub fn apply(self, state: &mut HNavState, tree: &UiTree) -> bool {
        let before = state.cursors();
        match self {
            Action::Rotate { wheel, forward } => {
                state.rotate(tree, wheel, if forward { 1 } else { -1 });
            }
            Action::ShiftUp => {
                state.shift_up(tree);
            }
            Action::ShiftDown => {
                state.shift_down(tree);
            }
        }
        state.cursors() != before
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::Rotate { wheel, forward } => {
                write!(f, "W{}{}", wheel.number(), if *forward { '+' } else { '-' })
            }
            Action::ShiftUp => f.write_str("ShiftUp"),
            Action::ShiftDown => f.write_str("ShiftDown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPlan {
    pub actions: Vec<Action>,
}

impl ActionPlan {
    pub fn cost(&self) -> usize {
        self.actions.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("unknown node {0:?}")]
    UnknownNode(String),
    #[error("{0:?} is the root and cannot hold a wheel's focus")]
    Root(String),
    #[error("no action sequence reaches {0:?}")]
    Unreachable(String),
}

fn resolve(tree: &UiTree, id: &str) -> Result<NodeIx, PlanError> {
    let ix = tree
        .lookup(id)
        .ok_or_else(|| PlanError::UnknownNode(id.to_owned()))?;
    if ix == tree.root() {
        return Err(PlanError::Root(id.to_owned()));
    }
    Ok(ix)
}

fn holds(state: &HNavState, tree: &UiTree, target: NodeIx) -> bool {
    state.focus_triple(tree).contains(&Some(target))
}

/// Breadth-first search for the shortest plan that puts `target` under any
/// wheel, starting from `start`'s cursor positions.
pub fn min_actions(
    tree: &UiTree,
    start: &HNavState,
    target: &str,
) -> Result<ActionPlan, PlanError> {
    let goal = resolve(tree, target)?;
    let start = start.forgetful();
    if holds(&start, tree, goal) {
        return Ok(ActionPlan {
            actions: Vec::new(),
        });
    }

    type Key = [WheelCursor; 3];
    let mut came_from: HashMap<Key, (Key, Action)> = HashMap::new();
    let start_key = start.cursors();
    let mut queue = VecDeque::from([start]);
    came_from.insert(start_key, (start_key, Action::ShiftUp));

    while let Some(state) = queue.pop_front() {
        for action in Action::ORDER {
            let mut next = state.clone();
            if !action.apply(&mut next, tree) {
                continue;
            }
            let key = next.cursors();
            if came_from.contains_key(&key) {
                continue;
            }
            came_from.insert(key, (state.cursors(), action));
            if holds(&next, tree, goal) {
                let mut actions = Vec::new();
                let mut cur = key;
                while cur != start_key {
                    let (prev, a) = came_from[&cur];
                    actions.push(a);
                    cur = prev;
                }
                actions.reverse();
                return Ok(ActionPlan { actions });
            }
            queue.push_back(next);
        }
    }
    Err(PlanError::Unreachable(target.to_owned()))
}

/// Next/previous steps a linear screen reader needs between two nodes.
pub fn linear_cost(tree: &UiTree, from: &str, target: &str) -> Result<usize, PlanError> {
    let look = |id: &str| {
        tree.lookup(id)
            .ok_or_else(|| PlanError::UnknownNode(id.to_owned()))
    };
    let (a, b) = (look(from)?, look(target)?);
    Ok(tree.preorder_index(a).abs_diff(tree.preorder_index(b)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostRow {
    pub start: String,
    pub target: String,
    pub wheeler_cost: usize,
    pub linear_cost: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct CostReport {
    pub rows: Vec<CostRow>,
}

impl CostReport {
    pub const HEADER: &'static str = "start,target,wheeler_cost,linear_cost,ratio";

    pub fn to_csv(&self) -> String {
        let mut s = String::from(Self::HEADER);
        s.push('\n');
        for r in &self.rows {
            writeln!(
                s,
                "{},{},{},{},{:.4}",
                r.start, r.target, r.wheeler_cost, r.linear_cost, r.ratio
            )
            .expect("writing to a String");
        }
        s
    }

    pub fn mean_wheeler_cost(&self) -> f64 {
        mean(self.rows.iter().map(|r| r.wheeler_cost))
    }

    pub fn mean_linear_cost(&self) -> f64 {
        mean(self.rows.iter().map(|r| r.linear_cost))
    }
}

fn mean(xs: impl ExactSizeIterator<Item = usize>) -> f64 {
    let n = xs.len();
    if n == 0 {
        return 0.0;
    }
    xs.sum::<usize>() as f64 / n as f64
}

/// Wheeler versus linear cost for each `(start, target)` pair. Wheel 1
/// starts on `start` with the lower wheels on first children.
pub fn cost_report(tree: &UiTree, sample: &[(String, String)]) -> Result<CostReport, PlanError> {
    let rows = sample
        .iter()
        .map(|(start, target)| {
            let from = resolve(tree, start)?;
            let state = HNavState::focused_on(tree, from).expect("non-root node has a parent");
            let wheeler_cost = min_actions(tree, &state, target)?.cost();
            let linear_cost = linear_cost(tree, start, target)?;
            let ratio = if linear_cost == 0 {
                1.0
            } else {
                wheeler_cost as f64 / linear_cost as f64
            };
            Ok(CostRow {
                start: start.clone(),
                target: target.clone(),
                wheeler_cost,
                linear_cost,
                ratio,
            })
        })
        .collect::<Result<_, PlanError>>()?;
    Ok(CostReport { rows })
}
