//! 2D cursor mode on a desktop layout: a fast sweep from the lower-left to
//! the upper-right corner, with a location readout at each end.

use std::path::Path;

use wheeler::{load_tree, Button, Config, InputEvent, OutputKind, Session, Wheel};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/trees");
    let tree = load_tree(&std::fs::read_to_string(dir.join("desktop.json"))?)?;
    let mut session = Session::new(&tree, Config::default())?;

    let script = [
        InputEvent::ctrl_down(0),
        InputEvent::button_down(10, Button::Primary),
        InputEvent::button_down(20, Button::Secondary),
        InputEvent::button_up(60, Button::Secondary),
        InputEvent::button_up(70, Button::Primary),
        InputEvent::ctrl_up(80),
        InputEvent::wheel(100, Wheel::Three, 140.0),
        InputEvent::wheel(200, Wheel::One, -400.0),
        InputEvent::wheel(300, Wheel::Two, -240.0),
        InputEvent::ctrl_down(400),
        InputEvent::ctrl_up(410),
        InputEvent::wheel(500, Wheel::One, 800.0),
        InputEvent::wheel(600, Wheel::Two, 440.0),
        InputEvent::ctrl_down(700),
        InputEvent::ctrl_up(710),
    ];
    let mut lines = Vec::new();
    for ev in &script {
        for out in session.handle(&tree, ev)? {
            match out.kind {
                OutputKind::Haptic => {}
                OutputKind::CursorMoved { x, y } => {
                    lines.push(format!("t={:<4} cursor ({x}, {y})", out.t))
                }
                other => lines.push(format!("t={:<4} {}", out.t, serde_json::to_string(&other)?)),
            }
        }
    }
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
