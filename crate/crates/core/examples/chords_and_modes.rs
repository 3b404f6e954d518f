//! Button semantics in both modes. Holding CTRL turns a button press into a
//! level shift, and the CTRL chord switches modes without losing focus.

use wheeler::model::TreeBuilder;
use wheeler::{Button, Config, InputEvent, Session, Wheel};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let tree = TreeBuilder::new(400, 300)
        .node("app", "Editor", "application", None, &["file", "edit"])
        .node("file", "File", "menu", None, &["open", "save"])
        .node("edit", "Edit", "menu", None, &["undo"])
        .node("open", "Open", "menu-item", None, &[])
        .node("save", "Save", "menu-item", None, &[])
        .node("undo", "Undo", "menu-item", None, &[])
        .build("app")?;
    let config = Config {
        long_press_ms: 250,
        ..Config::default()
    };
    let mut session = Session::new(&tree, config)?;

    let chord = |t: u64| {
        [
            InputEvent::ctrl_down(t),
            InputEvent::button_down(t + 5, Button::Primary),
            InputEvent::button_down(t + 10, Button::Secondary),
            InputEvent::button_up(t + 40, Button::Primary),
            InputEvent::button_up(t + 45, Button::Secondary),
            InputEvent::ctrl_up(t + 50),
        ]
    };
    let mut script = vec![
        InputEvent::wheel(0, Wheel::Two, 20.0),
        InputEvent::button_down(100, Button::Primary),
        InputEvent::button_up(150, Button::Primary),
    ];
    script.extend(chord(200));
    script.push(InputEvent::button_down(300, Button::Secondary));
    script.push(InputEvent::button_up(600, Button::Secondary));
    script.extend(chord(700));

    let mut lines = Vec::new();
    for ev in &script {
        for out in session.handle(&tree, ev)? {
            lines.push(out.to_json());
        }
        if ev.t == 150 {
            lines.push(format!(
                "-- focus before the mode round trip: {:?}",
                ids(&tree, session.hnav().focus_triple(&tree))
            ));
        }
    }
    lines.push(format!(
        "-- focus after: {:?}",
        ids(&tree, session.hnav().focus_triple(&tree))
    ));
    Ok(lines)
}

fn ids(tree: &wheeler::UiTree, triple: [Option<wheeler::NodeIx>; 3]) -> Vec<&str> {
    triple
        .iter()
        .map(|f| f.map_or("-", |i| tree.id(i)))
        .collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
