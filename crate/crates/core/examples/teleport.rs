//! Teleport: with teleport on, each wheel detent jumps to the nearest element
//! in that direction rather than nudging the cursor.

use std::path::Path;

use wheeler::{load_tree, teleport_target, Direction, Point};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/trees");
    let tree = load_tree(&std::fs::read_to_string(dir.join("desktop.json"))?)?;

    let mut at = tree.screen().center();
    let mut lines = vec![format!("start at {at:?}")];
    for dir in [
        Direction::Up,
        Direction::Left,
        Direction::Left,
        Direction::Left,
        Direction::Down,
    ] {
        match teleport_target(&tree, at, dir) {
            Some(node) => {
                at = tree
                    .node(node)
                    .bounds
                    .expect("targets have bounds")
                    .center();
                lines.push(format!(
                    "{dir:?}: {} at ({}, {})",
                    tree.name(node),
                    at.x,
                    at.y
                ));
            }
            None => lines.push(format!("{dir:?}: nothing there")),
        }
    }
    let corner = Point::new(0, 0);
    lines.push(format!(
        "from the corner going up: {:?}",
        teleport_target(&tree, corner, Direction::Up)
    ));
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
