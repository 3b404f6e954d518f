#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wheeler::model::{NodeDoc, Rect, Screen, TreeDoc};
use wheeler::nav2d::Direction;
use wheeler::{load_tree, NodeIx, Point, UiTree};

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(rel)
}

pub fn read_fixture(rel: &str) -> String {
    std::fs::read_to_string(fixture(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

pub fn t1() -> UiTree {
    load_tree(&read_fixture("trees/t1.json")).expect("t1 loads")
}

pub fn desktop() -> UiTree {
    load_tree(&read_fixture("trees/desktop.json")).expect("desktop loads")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ix(t: &UiTree, id: &str) -> NodeIx {
    t.lookup(id).unwrap_or_else(|| panic!("no node {id}"))
}

pub fn ids(t: &UiTree, triple: [Option<NodeIx>; 3]) -> [Option<&str>; 3] {
    triple.map(|f| f.map(|i| t.id(i)))
}

#[derive(Debug, Clone, Copy)]
pub struct TreeShape {
    pub max_nodes: usize,
    pub max_depth: u32,
    pub max_children: usize,
    pub bounds_probability: f64,
    pub screen: (i32, i32),
}

impl Default for TreeShape {
    fn default() -> Self {
        Self {
            max_nodes: 40,
            max_depth: 6,
            max_children: 5,
            bounds_probability: 0.7,
            screen: (640, 480),
        }
    }
}

pub fn random_rect<R: Rng>(rng: &mut R, screen: (i32, i32)) -> Rect {
    let w = rng.gen_range(1..=screen.0.min(200));
    let h = rng.gen_range(1..=screen.1.min(200));
    let x = rng.gen_range(0..=screen.0 - w);
    let y = rng.gen_range(0..=screen.1 - h);
    Rect::new(x, y, w, h)
}

/// Random tree whose root has at least one child. Documents list nodes in a
/// shuffled order so the loader's re-ordering is exercised too.
pub fn random_tree<R: Rng>(rng: &mut R, shape: TreeShape) -> UiTree {
    let n = rng.gen_range(2..=shape.max_nodes.max(2));
    let mut depth = vec![0u32];
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    for i in 1..n {
        let open: Vec<usize> = (0..i)
            .filter(|&p| depth[p] < shape.max_depth && children[p].len() < shape.max_children)
            .collect();
        if open.is_empty() {
            break;
        }
        let p = if i == 1 {
            0
        } else {
            open[rng.gen_range(0..open.len())]
        };
        children[p].push(i);
        children.push(Vec::new());
        depth.push(depth[p] + 1);
    }
    let mut nodes: Vec<NodeDoc> = (0..children.len())
        .map(|i| NodeDoc {
            id: format!("n{i}"),
            name: format!("Node {i}"),
            role: if children[i].is_empty() {
                "button"
            } else {
                "pane"
            }
            .into(),
            bounds: rng
                .gen_bool(shape.bounds_probability)
                .then(|| random_rect(rng, shape.screen)),
            children: children[i].iter().map(|c| format!("n{c}")).collect(),
        })
        .collect();
    for i in (1..nodes.len()).rev() {
        let j = rng.gen_range(0..=i);
        nodes.swap(i, j);
    }
    UiTree::from_doc(TreeDoc {
        screen: Screen::new(shape.screen.0, shape.screen.1),
        root: "n0".into(),
        nodes,
    })
    .expect("generated trees are valid")
}

/// Flat layout of bounded elements under one unbounded root.
pub fn random_layout<R: Rng>(rng: &mut R, count: usize, screen: (i32, i32)) -> UiTree {
    let ids: Vec<String> = (0..count)
        .map(|i| format!("e{:03}", rng.gen_range(0..1000) * 1000 + i))
        .collect();
    let mut nodes = vec![NodeDoc {
        id: "root".into(),
        name: "Desktop".into(),
        role: "pane".into(),
        bounds: None,
        children: ids.clone(),
    }];
    for id in &ids {
        // Small rects on a coarse grid make equal distances and cone-edge
        // cases common.
        let w = rng.gen_range(1..=4) * 2;
        let h = rng.gen_range(1..=4) * 2;
        let x = rng.gen_range(0..(screen.0 - w) / 10) * 10;
        let y = rng.gen_range(0..(screen.1 - h) / 10) * 10;
        nodes.push(NodeDoc {
            id: id.clone(),
            name: id.to_uppercase(),
            role: "icon".into(),
            bounds: Some(Rect::new(x, y, w, h)),
            children: vec![],
        });
    }
    UiTree::from_doc(TreeDoc {
        screen: Screen::new(screen.0, screen.1),
        root: "root".into(),
        nodes,
    })
    .expect("layouts are valid")
}

/// Hierarchical navigation recomputed from scratch: the only state is the
/// anchor of the top wheel plus the per-node remembered child. All three
/// focuses are re-derived on every query. Without memory, positions off the
/// current chain are forgotten after every operation.
#[derive(Debug, Clone)]
pub struct NaiveHNav {
    pub base: NodeIx,
    pub memory: HashMap<NodeIx, usize>,
    pub remember: bool,
}

impl NaiveHNav {
    pub fn new(t: &UiTree, remember: bool) -> Self {
        Self {
            base: t.root(),
            memory: HashMap::new(),
            remember,
        }
    }

    fn pick(&self, t: &UiTree, a: NodeIx) -> Option<NodeIx> {
        let i = self.memory.get(&a).copied().unwrap_or(0);
        t.child_ixs(a).get(i).copied()
    }

    fn settle(&mut self, t: &UiTree) {
        if self.remember {
            return;
        }
        let [f1, f2, _] = self.focus(t);
        let chain = [Some(self.base), f1, f2];
        self.memory.retain(|a, _| chain.contains(&Some(*a)));
    }

    pub fn focus(&self, t: &UiTree) -> [Option<NodeIx>; 3] {
        let f1 = self.pick(t, self.base);
        let f2 = f1.and_then(|f| self.pick(t, f));
        let f3 = f2.and_then(|f| self.pick(t, f));
        [f1, f2, f3]
    }

    pub fn window_base(&self, t: &UiTree) -> u32 {
        t.depth(self.base) + 1
    }

    pub fn rotate(&mut self, t: &UiTree, wheel: usize, detents: i64) {
        let [f1, f2, _] = self.focus(t);
        let anchor = [Some(self.base), f1, f2][wheel];
        let Some(a) = anchor else { return };
        let n = t.child_ixs(a).len() as i64;
        if n == 0 {
            return;
        }
        let cur = self.memory.get(&a).copied().unwrap_or(0) as i64;
        self.memory
            .insert(a, (cur + detents).clamp(0, n - 1) as usize);
        self.settle(t);
    }

    pub fn shift_down(&mut self, t: &UiTree) {
        let [f1, f2, _] = self.focus(t);
        if f2.is_some() {
            self.base = f1.unwrap();
        }
        self.settle(t);
    }

    pub fn shift_up(&mut self, t: &UiTree) {
        if let Some(p) = t.parent(self.base) {
            self.memory.insert(p, t.sibling_index(self.base));
            self.base = p;
        }
        self.settle(t);
    }
}

/// Brute-force teleport: project every bounded center onto the motion axis,
/// keep the cone, sort by (squared distance, id).
pub fn teleport_oracle(t: &UiTree, pos: Point, dir: Direction) -> Option<String> {
    let mut found: Vec<(i64, String)> = t
        .iter()
        .filter_map(|i| {
            let b = t.node(i).bounds?;
            let (cx, cy) = (i64::from(b.x + b.w / 2), i64::from(b.y + b.h / 2));
            let (dx, dy) = (cx - i64::from(pos.x), cy - i64::from(pos.y));
            let (forward, lateral) = match dir {
                Direction::Right => (dx, dy),
                Direction::Left => (-dx, dy),
                Direction::Up => (-dy, dx),
                Direction::Down => (dy, dx),
            };
            (forward > 0 && lateral.abs() <= forward)
                .then(|| (dx * dx + dy * dy, t.id(i).to_owned()))
        })
        .collect();
    found.sort();
    found.into_iter().next().map(|(_, id)| id)
}

/// Brute-force hit test: every containing node, sorted by
/// (area, deeper first, document order).
#[allow(clippy::int_plus_one)]
pub fn hit_oracle(t: &UiTree, p: Point) -> Option<NodeIx> {
    let mut hits: Vec<(i64, std::cmp::Reverse<u32>, usize, NodeIx)> = t
        .iter()
        .filter_map(|i| {
            let b = t.node(i).bounds?;
            let inside = p.x >= b.x && p.x <= b.x + b.w - 1 && p.y >= b.y && p.y <= b.y + b.h - 1;
            inside.then(|| {
                (
                    i64::from(b.w) * i64::from(b.h),
                    std::cmp::Reverse(t.depth(i)),
                    t.preorder_index(i),
                    i,
                )
            })
        })
        .collect();
    hits.sort();
    hits.first().map(|h| h.3)
}

/// Pre-order listing by explicit recursion over `children`.
pub fn preorder_ids(t: &UiTree) -> Vec<String> {
    fn walk(t: &UiTree, id: &str, out: &mut Vec<String>) {
        out.push(id.to_owned());
        for c in t.children(id).unwrap() {
            walk(t, c, out);
        }
    }
    let mut out = Vec::new();
    walk(t, t.id(t.root()), &mut out);
    out
}

/// Least number of actions after which each node is focused on some wheel,
/// by exhaustive depth-first enumeration of action sequences. A state is only
/// re-expanded when reached by a strictly shorter prefix.
pub fn enumerate_min_costs(
    t: &UiTree,
    start: &wheeler::HNavState,
    max_depth: usize,
) -> HashMap<NodeIx, usize> {
    use wheeler::planner::Action;

    fn dfs(
        t: &UiTree,
        s: &wheeler::HNavState,
        depth: usize,
        max_depth: usize,
        seen: &mut HashMap<[wheeler::hnav::WheelCursor; 3], usize>,
        best: &mut HashMap<NodeIx, usize>,
    ) {
        for f in s.focus_triple(t).into_iter().flatten() {
            let e = best.entry(f).or_insert(usize::MAX);
            *e = (*e).min(depth);
        }
        if depth == max_depth {
            return;
        }
        for a in Action::ORDER {
            let mut next = s.clone();
            a.apply(&mut next, t);
            let key = next.cursors();
            if seen.get(&key).is_some_and(|&d| d <= depth + 1) {
                continue;
            }
            seen.insert(key, depth + 1);
            dfs(t, &next, depth + 1, max_depth, seen, best);
        }
    }

    let start = start.forgetful();
    let mut seen = HashMap::from([(start.cursors(), 0)]);
    let mut best = HashMap::new();
    dfs(t, &start, 0, max_depth, &mut seen, &mut best);
    best
}
