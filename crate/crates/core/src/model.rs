//! UI-tree data model: loading and validating fixtures, plus hit-testing.
//!
//! A [`UiTree`] is an immutable snapshot of an application's accessibility
//! hierarchy. Nodes are stored in depth-first pre-order with the root at
//! index 0, so [`NodeIx`] order is also document order for serialization.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Handle to a node inside one [`UiTree`]. Only meaningful for the tree that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeIx(u32);

impl NodeIx {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Screen dimensions in pixels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Screen {
    pub width: i32,
    pub height: i32,
}

impl Screen {
    pub fn new(width: i32, height: i32) -> Self {
        Self { width, height }
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= 0 && p.y >= 0 && p.x < self.width && p.y < self.height
    }

    pub fn clamp(&self, p: Point) -> Point {
        Point {
            x: p.x.clamp(0, self.width - 1),
            y: p.y.clamp(0, self.height - 1),
        }
    }

    pub fn center(&self) -> Point {
        Point::new(self.width / 2, self.height / 2)
    }
}

/// A pixel position on screen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub const fn new(x: i32, y: i32) -> Self {
        Self { x, y }
    }
}

/// Element bounds in screen pixels. Containment is half-open:
/// `x <= px < x + w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub x: i32,
    pub y: i32,
    pub w: i32,
    pub h: i32,
}

impl Rect {
    pub const fn new(x: i32, y: i32, w: i32, h: i32) -> Self {
        Self { x, y, w, h }
    }

    pub fn contains(&self, p: Point) -> bool {
        let (px, py) = (i64::from(p.x), i64::from(p.y));
        let (x, y) = (i64::from(self.x), i64::from(self.y));
        px >= x && py >= y && px < x + i64::from(self.w) && py < y + i64::from(self.h)
    }

    pub fn area(&self) -> i64 {
        i64::from(self.w) * i64::from(self.h)
    }

    /// Pixel center, rounded toward the top-left. Always inside the rect.
    pub fn center(&self) -> Point {
        Point::new(self.x + self.w / 2, self.y + self.h / 2)
    }

    fn within(&self, screen: Screen) -> bool {
        let right = i64::from(self.x) + i64::from(self.w);
        let bottom = i64::from(self.y) + i64::from(self.h);
        self.x >= 0
            && self.y >= 0
            && right <= i64::from(screen.width)
            && bottom <= i64::from(screen.height)
    }
}

/// Widget role. Unknown roles are preserved verbatim so fixtures round-trip.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "String", into = "String")]
pub enum Role {
    Application,
    Window,
    Pane,
    Menu,
    MenuItem,
    Button,
    Icon,
    Toolbar,
    List,
    ListItem,
    Tab,
    Text,
    Other(String),
}

impl Role {
    pub fn as_str(&self) -> &str {
        match self {
            Role::Application => "application",
            Role::Window => "window",
            Role::Pane => "pane",
            Role::Menu => "menu",
            Role::MenuItem => "menu-item",
            Role::Button => "button",
            Role::Icon => "icon",
            Role::Toolbar => "toolbar",
            Role::List => "list",
            Role::ListItem => "list-item",
            Role::Tab => "tab",
            Role::Text => "text",
            Role::Other(s) => s,
        }
    }
}

impl From<String> for Role {
    fn from(s: String) -> Self {
        match s.as_str() {
            "application" => Role::Application,
            "window" => Role::Window,
            "pane" => Role::Pane,
            "menu" => Role::Menu,
            "menu-item" => Role::MenuItem,
            "button" => Role::Button,
            "icon" => Role::Icon,
            "toolbar" => Role::Toolbar,
            "list" => Role::List,
            "list-item" => Role::ListItem,
            "tab" => Role::Tab,
            "text" => Role::Text,
            _ => Role::Other(s),
        }
    }
}

impl From<&str> for Role {
    fn from(s: &str) -> Self {
        Role::from(s.to_owned())
    }
}

impl From<Role> for String {
    fn from(r: Role) -> Self {
        r.as_str().to_owned()
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A node of a validated tree.
#[derive(Debug, Clone, PartialEq)]
pub struct UiNode {
    pub id: String,
    pub name: String,
    pub role: Role,
    pub bounds: Option<Rect>,
    children: Vec<NodeIx>,
    parent: Option<NodeIx>,
    depth: u32,
}

impl UiNode {
    pub fn children(&self) -> &[NodeIx] {
        &self.children
    }

    pub fn parent(&self) -> Option<NodeIx> {
        self.parent
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("malformed tree document: {0}")]
    Malformed(String),
    #[error("screen must be at least 1x1, got {width}x{height}")]
    BadScreen { width: i32, height: i32 },
    #[error("duplicate node id {0:?}")]
    DuplicateId(String),
    #[error("unknown node reference {0:?}")]
    UnknownReference(String),
    #[error("cycle detected at {0:?}")]
    Cycle(String),
    #[error("multiple parents for {0:?}")]
    MultipleParents(String),
    #[error("node {0:?} is not reachable from the root")]
    Orphan(String),
    #[error("bounds of {0:?} must be at least 1x1")]
    DegenerateBounds(String),
    #[error("bounds of {0:?} lie outside the screen")]
    BoundsOutsideScreen(String),
    #[error("unknown node id {0:?}")]
    UnknownId(String),
}

/// Serialized form of one node. Field order is the canonical key order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: String,
    pub name: String,
    pub role: Role,
    pub bounds: Option<Rect>,
    #[serde(default)]
    pub children: Vec<String>,
}

/// Serialized form of a whole tree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeDoc {
    pub screen: Screen,
    pub root: String,
    pub nodes: Vec<NodeDoc>,
}

/// An immutable, validated UI hierarchy.
#[derive(Debug, Clone, PartialEq)]
pub struct UiTree {
    screen: Screen,
    nodes: Vec<UiNode>,
    by_id: HashMap<String, NodeIx>,
}

/// Parses and validates a tree document.
pub fn load_tree(document: &str) -> Result<UiTree, TreeError> {
    let doc: TreeDoc =
        serde_json::from_str(document).map_err(|e| TreeError::Malformed(e.to_string()))?;
    UiTree::from_doc(doc)
}

impl UiTree {
    pub fn from_doc(doc: TreeDoc) -> Result<Self, TreeError> {
        let TreeDoc {
            screen,
            root,
            nodes,
        } = doc;
        if screen.width < 1 || screen.height < 1 {
            return Err(TreeError::BadScreen {
                width: screen.width,
                height: screen.height,
            });
        }

        let mut pos: HashMap<&str, usize> = HashMap::with_capacity(nodes.len());
        for (i, n) in nodes.iter().enumerate() {
            if pos.insert(n.id.as_str(), i).is_some() {
                return Err(TreeError::DuplicateId(n.id.clone()));
            }
        }
        let root_pos = *pos
            .get(root.as_str())
            .ok_or_else(|| TreeError::UnknownReference(root.clone()))?;

        // Self-loops are reported as cycles before parent counting, otherwise a
        // non-root self-loop would surface as a second parent.
        for n in &nodes {
            for c in &n.children {
                if !pos.contains_key(c.as_str()) {
                    return Err(TreeError::UnknownReference(c.clone()));
                }
                if *c == n.id {
                    return Err(TreeError::Cycle(n.id.clone()));
                }
            }
        }

        let mut parent: Vec<Option<usize>> = vec![None; nodes.len()];
        for (i, n) in nodes.iter().enumerate() {
            for c in &n.children {
                let ci = pos[c.as_str()];
                if parent[ci].is_some() {
                    return Err(TreeError::MultipleParents(c.clone()));
                }
                parent[ci] = Some(i);
            }
        }

        // Every node has at most one parent, so each parent chain either ends
        // at a parentless node or loops.
        for start in 0..nodes.len() {
            let mut seen = vec![false; nodes.len()];
            let mut cur = start;
            seen[cur] = true;
            while let Some(p) = parent[cur] {
                if seen[p] {
                    return Err(TreeError::Cycle(nodes[p].id.clone()));
                }
                seen[p] = true;
                cur = p;
            }
            if cur != root_pos {
                return Err(TreeError::Orphan(nodes[cur].id.clone()));
            }
        }

        for n in &nodes {
            if let Some(b) = n.bounds {
                if b.w < 1 || b.h < 1 {
                    return Err(TreeError::DegenerateBounds(n.id.clone()));
                }
                if !b.within(screen) {
                    return Err(TreeError::BoundsOutsideScreen(n.id.clone()));
                }
            }
        }

        let child_pos: Vec<Vec<usize>> = nodes
            .iter()
            .map(|n| n.children.iter().map(|c| pos[c.as_str()]).collect())
            .collect();
        drop(pos);

        // Re-number in pre-order.
        let mut order = Vec::with_capacity(nodes.len());
        let mut stack = vec![(root_pos, 0u32)];
        let mut depth_of = vec![0u32; nodes.len()];
        while let Some((i, d)) = stack.pop() {
            order.push(i);
            depth_of[i] = d;
            for &c in child_pos[i].iter().rev() {
                stack.push((c, d + 1));
            }
        }
        let mut new_ix = vec![0u32; nodes.len()];
        for (k, &i) in order.iter().enumerate() {
            new_ix[i] = k as u32;
        }

        let mut slots: Vec<Option<NodeDoc>> = nodes.into_iter().map(Some).collect();
        let mut out = Vec::with_capacity(order.len());
        let mut by_id = HashMap::with_capacity(order.len());
        for &i in &order {
            let doc = slots[i].take().expect("each node visited once");
            by_id.insert(doc.id.clone(), NodeIx(new_ix[i]));
            out.push(UiNode {
                id: doc.id,
                name: doc.name,
                role: doc.role,
                bounds: doc.bounds,
                children: child_pos[i].iter().map(|&c| NodeIx(new_ix[c])).collect(),
                parent: parent[i].map(|p| NodeIx(new_ix[p])),
                depth: depth_of[i],
            });
        }

        Ok(Self {
            screen,
            nodes: out,
            by_id,
        })
    }

    pub fn screen(&self) -> Screen {
        self.screen
    }

    pub fn root(&self) -> NodeIx {
        NodeIx(0)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, ix: NodeIx) -> &UiNode {
        &self.nodes[ix.index()]
    }

    pub fn lookup(&self, id: &str) -> Option<NodeIx> {
        self.by_id.get(id).copied()
    }

    pub fn id(&self, ix: NodeIx) -> &str {
        &self.nodes[ix.index()].id
    }

    pub fn name(&self, ix: NodeIx) -> &str {
        &self.nodes[ix.index()].name
    }

    pub fn child_ixs(&self, ix: NodeIx) -> &[NodeIx] {
        &self.nodes[ix.index()].children
    }

    pub fn parent(&self, ix: NodeIx) -> Option<NodeIx> {
        self.nodes[ix.index()].parent
    }

    pub fn depth(&self, ix: NodeIx) -> u32 {
        self.nodes[ix.index()].depth
    }

    /// Deepest level present; the root alone has height 0.
    pub fn height(&self) -> u32 {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// Position of `ix` among its parent's children; 0 for the root.
    pub fn sibling_index(&self, ix: NodeIx) -> usize {
        match self.parent(ix) {
            Some(p) => self
                .child_ixs(p)
                .iter()
                .position(|&c| c == ix)
                .expect("parent lists child"),
            None => 0,
        }
    }

    /// Children of the node with the given id, in stored order.
    pub fn children(&self, id: &str) -> Result<Vec<&str>, TreeError> {
        let ix = self
            .lookup(id)
            .ok_or_else(|| TreeError::UnknownId(id.to_owned()))?;
        Ok(self.child_ixs(ix).iter().map(|&c| self.id(c)).collect())
    }

    /// All node handles in pre-order.
    pub fn iter(&self) -> impl Iterator<Item = NodeIx> + '_ {
        (0..self.nodes.len() as u32).map(NodeIx)
    }

    /// Pre-order position of a node; equals its handle index.
    pub fn preorder_index(&self, ix: NodeIx) -> usize {
        ix.index()
    }

    /// The element under `point`: smallest area among containing bounds, then
    /// deepest, then first in document order.
    pub fn node_at_point(&self, point: Point) -> Option<NodeIx> {
        let mut best: Option<(i64, u32, NodeIx)> = None;
        for (i, n) in self.nodes.iter().enumerate() {
            let Some(b) = n.bounds else { continue };
            if !b.contains(point) {
                continue;
            }
            let area = b.area();
            let better = match best {
                None => true,
                Some((ba, bd, _)) => area < ba || (area == ba && n.depth > bd),
            };
            if better {
                best = Some((area, n.depth, NodeIx(i as u32)));
            }
        }
        best.map(|(_, _, ix)| ix)
    }

    pub fn to_doc(&self) -> TreeDoc {
        TreeDoc {
            screen: self.screen,
            root: self.id(self.root()).to_owned(),
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeDoc {
                    id: n.id.clone(),
                    name: n.name.clone(),
                    role: n.role.clone(),
                    bounds: n.bounds,
                    children: n.children.iter().map(|&c| self.id(c).to_owned()).collect(),
                })
                .collect(),
        }
    }

    /// Canonical text form: pre-order nodes, two-space indentation, trailing
    /// newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_doc()).expect("tree doc serializes");
        s.push('\n');
        s
    }
}

/// Programmatic tree construction, validated exactly like a loaded document.
#[derive(Debug, Clone)]
pub struct TreeBuilder {
    screen: Screen,
    nodes: Vec<NodeDoc>,
}

impl TreeBuilder {
    pub fn new(width: i32, height: i32) -> Self {
        Self {
            screen: Screen::new(width, height),
            nodes: Vec::new(),
        }
    }

    pub fn node(
        mut self,
        id: &str,
        name: &str,
        role: impl Into<Role>,
        bounds: Option<Rect>,
        children: &[&str],
    ) -> Self {
        self.nodes.push(NodeDoc {
            id: id.to_owned(),
            name: name.to_owned(),
            role: role.into(),
            bounds,
            children: children.iter().map(|c| (*c).to_owned()).collect(),
        });
        self
    }

    pub fn build(self, root: &str) -> Result<UiTree, TreeError> {
        UiTree::from_doc(TreeDoc {
            screen: self.screen,
            root: root.to_owned(),
            nodes: self.nodes,
        })
    }
}
