//! Hierarchical navigation: three wheel cursors over consecutive tree levels.
//!
//! Wheel 1 scans the children of the window anchor, wheel 2 scans the
//! children of wheel 1's focus, wheel 3 the children of wheel 2's focus.
//! Moving an upper wheel re-cascades the lower ones onto the remembered child
//! of the new focus, or the first child on a first visit.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::event::{Button, ClickTarget, OutputKind, ShiftDirection, Wheel};
use crate::model::{NodeIx, UiTree};

/// One wheel's position: the node whose children it scans, and which child.
///
/// `anchor` is `None` only below an empty wheel. `index` is `None` when the
/// anchor is a leaf (or absent); such a wheel is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WheelCursor {
    pub anchor: Option<NodeIx>,
    pub index: Option<usize>,
}

impl WheelCursor {
    const DETACHED: WheelCursor = WheelCursor {
        anchor: None,
        index: None,
    };

    pub fn focused(&self, tree: &UiTree) -> Option<NodeIx> {
        let (a, i) = (self.anchor?, self.index?);
        tree.child_ixs(a).get(i).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HNavError {
    #[error("root {0:?} has no children; nothing to navigate")]
    Unnavigable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HNavState {
    wheels: [WheelCursor; 3],
    memory: BTreeMap<NodeIx, usize>,
    active: Wheel,
    remember: bool,
}

impl HNavState {
    /// Wheels on the top three levels, each on its first child.
    pub fn new(tree: &UiTree) -> Result<Self, HNavError> {
        Self::init(tree, true)
    }

    /// Like [`HNavState::new`] but never records or recalls per-node memory:
    /// cascades always land on the first child.
    pub fn memoryless(tree: &UiTree) -> Result<Self, HNavError> {
        Self::init(tree, false)
    }

    fn init(tree: &UiTree, remember: bool) -> Result<Self, HNavError> {
        let root = tree.root();
        if tree.child_ixs(root).is_empty() {
            return Err(HNavError::Unnavigable(tree.id(root).to_owned()));
        }
        let mut s = Self {
            wheels: [
                WheelCursor {
                    anchor: Some(root),
                    index: Some(0),
                },
                WheelCursor::DETACHED,
                WheelCursor::DETACHED,
            ],
            memory: BTreeMap::new(),
            active: Wheel::One,
            remember,
        };
        s.cascade_below(tree, 0);
        Ok(s)
    }

    /// A memoryless state with wheel 1 resting on `node`. `None` for the root.
    pub fn focused_on(tree: &UiTree, node: NodeIx) -> Option<Self> {
        let parent = tree.parent(node)?;
        let mut s = Self {
            wheels: [
                WheelCursor {
                    anchor: Some(parent),
                    index: Some(tree.sibling_index(node)),
                },
                WheelCursor::DETACHED,
                WheelCursor::DETACHED,
            ],
            memory: BTreeMap::new(),
            active: Wheel::One,
            remember: false,
        };
        s.cascade_below(tree, 0);
        Some(s)
    }

    /// Copy of this state with memory cleared and disabled.
    pub fn forgetful(&self) -> Self {
        Self {
            memory: BTreeMap::new(),
            remember: false,
            ..self.clone()
        }
    }

    pub fn cursor(&self, wheel: Wheel) -> WheelCursor {
        self.wheels[wheel.slot()]
    }

    pub fn cursors(&self) -> [WheelCursor; 3] {
        self.wheels
    }

    pub fn focused(&self, tree: &UiTree, wheel: Wheel) -> Option<NodeIx> {
        self.wheels[wheel.slot()].focused(tree)
    }

    pub fn focus_triple(&self, tree: &UiTree) -> [Option<NodeIx>; 3] {
        self.wheels.map(|w| w.focused(tree))
    }

    pub fn active_wheel(&self) -> Wheel {
        self.active
    }

    pub fn memory(&self) -> &BTreeMap<NodeIx, usize> {
        &self.memory
    }

    pub fn remembers(&self) -> bool {
        self.remember
    }

    /// Tree level scanned by wheel 1 (level 1 = children of the root).
    pub fn window_base(&self, tree: &UiTree) -> u32 {
        let anchor = self.wheels[0].anchor.expect("wheel 1 always anchored");
        tree.depth(anchor) + 1
    }

    fn recall(&self, anchor: NodeIx) -> usize {
        if self.remember {
            self.memory.get(&anchor).copied().unwrap_or(0)
        } else {
            0
        }
    }

    fn cursor_over(&self, tree: &UiTree, anchor: Option<NodeIx>) -> WheelCursor {
        match anchor {
            None => WheelCursor::DETACHED,
            Some(a) if tree.child_ixs(a).is_empty() => WheelCursor {
                anchor: Some(a),
                index: None,
            },
            Some(a) => WheelCursor {
                anchor: Some(a),
                index: Some(self.recall(a)),
            },
        }
    }

    fn cascade_below(&mut self, tree: &UiTree, slot: usize) {
        for j in slot + 1..3 {
            let above = self.wheels[j - 1].focused(tree);
            self.wheels[j] = self.cursor_over(tree, above);
        }
    }

    fn note(&mut self, slot: usize) {
        if let (
            true,
            WheelCursor {
                anchor: Some(a),
                index: Some(i),
            },
        ) = (self.remember, self.wheels[slot])
        {
            self.memory.insert(a, i);
        }
    }

    /// Moves `wheel` by `detents` siblings, clamped to the sibling list.
    pub fn rotate(&mut self, tree: &UiTree, wheel: Wheel, detents: i64) -> Vec<OutputKind> {
        if detents == 0 {
            return Vec::new();
        }
        let slot = wheel.slot();
        let WheelCursor {
            anchor: Some(anchor),
            index: Some(index),
        } = self.wheels[slot]
        else {
            return vec![OutputKind::invalid()];
        };
        let last = tree.child_ixs(anchor).len() as i64 - 1;
        let target = (index as i64).saturating_add(detents).clamp(0, last) as usize;
        if target == index {
            return vec![OutputKind::invalid()];
        }

        self.wheels[slot].index = Some(target);
        self.note(slot);
        self.cascade_below(tree, slot);
        self.active = wheel;

        let node = tree.child_ixs(anchor)[target];
        let mut out: Vec<OutputKind> = (0..index.abs_diff(target))
            .map(|_| OutputKind::Haptic)
            .collect();
        out.push(OutputKind::FocusChanged {
            wheel,
            node: tree.id(node).to_owned(),
        });
        out.push(OutputKind::speech(tree.name(node)));
        out
    }

    /// Moves all three cursors one level deeper. Needs a focus on wheel 2.
    pub fn shift_down(&mut self, tree: &UiTree) -> Vec<OutputKind> {
        if self.focused(tree, Wheel::Two).is_none() {
            return vec![OutputKind::invalid()];
        }
        let before = self.focus_triple(tree);
        self.wheels[0] = self.wheels[1];
        self.wheels[1] = self.wheels[2];
        self.cascade_below(tree, 1);
        self.note(0);
        self.announce_shift(tree, ShiftDirection::Down, before)
    }

    /// Moves all three cursors one level up. Wheel 1 lands on its old
    /// anchor's position among its siblings.
    pub fn shift_up(&mut self, tree: &UiTree) -> Vec<OutputKind> {
        let anchor = self.wheels[0].anchor.expect("wheel 1 always anchored");
        let Some(parent) = tree.parent(anchor) else {
            return vec![OutputKind::invalid()];
        };
        let before = self.focus_triple(tree);
        self.wheels[2] = self.wheels[1];
        self.wheels[1] = self.wheels[0];
        self.wheels[0] = WheelCursor {
            anchor: Some(parent),
            index: Some(tree.sibling_index(anchor)),
        };
        self.note(0);
        self.announce_shift(tree, ShiftDirection::Up, before)
    }

    fn announce_shift(
        &self,
        tree: &UiTree,
        direction: ShiftDirection,
        before: [Option<NodeIx>; 3],
    ) -> Vec<OutputKind> {
        let mut out = vec![OutputKind::LevelShift { direction }];
        for wheel in Wheel::ALL {
            let now = self.focused(tree, wheel);
            if let Some(node) = now.filter(|_| now != before[wheel.slot()]) {
                out.push(OutputKind::FocusChanged {
                    wheel,
                    node: tree.id(node).to_owned(),
                });
                out.push(OutputKind::speech(tree.name(node)));
            }
        }
        out
    }

    /// Clicks the focus of the most recently rotated wheel.
    pub fn activate(&self, tree: &UiTree, button: Button) -> Vec<OutputKind> {
        match self.focused(tree, self.active) {
            Some(node) => vec![OutputKind::Click {
                button: button.into(),
                target: ClickTarget::Node(tree.id(node).to_owned()),
            }],
            None => vec![OutputKind::invalid()],
        }
    }

    /// Checks the chain, depth-window and memory invariants.
    pub fn check_invariants(&self, tree: &UiTree) -> Result<(), String> {
        let w1 = self.wheels[0];
        let base_anchor = w1.anchor.ok_or("wheel 1 has no anchor")?;
        let i1 = w1.index.ok_or("wheel 1 is empty")?;
        if i1 >= tree.child_ixs(base_anchor).len() {
            return Err(format!("wheel 1 index {i1} out of range"));
        }
        let base = tree.depth(base_anchor) + 1;
        for j in 1..3 {
            let above = self.wheels[j - 1].focused(tree);
            let w = self.wheels[j];
            if w.anchor != above {
                return Err(format!(
                    "wheel {} anchor does not follow wheel {j}'s focus",
                    j + 1
                ));
            }
            match (w.anchor, w.index) {
                (Some(a), Some(i)) => {
                    if i >= tree.child_ixs(a).len() {
                        return Err(format!("wheel {} index {i} out of range", j + 1));
                    }
                    if tree.depth(a) + 1 != base + j as u32 {
                        return Err(format!("wheel {} outside the depth window", j + 1));
                    }
                }
                (Some(a), None) if !tree.child_ixs(a).is_empty() => {
                    return Err(format!("wheel {} empty over a node with children", j + 1));
                }
                (None, Some(_)) => return Err(format!("wheel {} indexed without anchor", j + 1)),
                _ => {}
            }
        }
        for (&a, &i) in &self.memory {
            if i >= tree.child_ixs(a).len() {
                return Err(format!("memory for {} holds invalid index {i}", tree.id(a)));
            }
        }
        if self.remember {
            for (j, w) in self.wheels.iter().enumerate() {
                if let (Some(a), Some(i)) = (w.anchor, w.index) {
                    if self.recall(a) != i {
                        return Err(format!("wheel {} disagrees with memory", j + 1));
                    }
                }
            }
        }
        Ok(())
    }
}
