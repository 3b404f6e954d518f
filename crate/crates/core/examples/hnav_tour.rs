//! Hierarchical navigation over a small menu tree: each wheel walks one
//! level, and turning an upper wheel re-seats the wheels below it.

use wheeler::model::TreeBuilder;
use wheeler::{HNavState, Wheel};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let tree = TreeBuilder::new(800, 600)
        .node("app", "Mail", "application", None, &["inbox", "sent"])
        .node("inbox", "Inbox", "list", None, &["m1", "m2"])
        .node("sent", "Sent", "list", None, &["m3"])
        .node("m1", "Lunch plans", "list-item", None, &["a1"])
        .node("m2", "Invoice", "list-item", None, &[])
        .node("m3", "Re: Lunch", "list-item", None, &[])
        .node("a1", "menu.pdf", "attachment", None, &[])
        .build("app")?;
    let mut nav = HNavState::new(&tree)?;
    let mut lines = Vec::new();
    let mut show = |nav: &HNavState, label: &str| {
        let focus: Vec<&str> = nav
            .focus_triple(&tree)
            .iter()
            .map(|f| f.map_or("-", |i| tree.name(i)))
            .collect();
        lines.push(format!("{label:<12} {}", focus.join(" | ")));
    };
    show(&nav, "start");
    nav.rotate(&tree, Wheel::Two, 1);
    show(&nav, "wheel 2 +1");
    nav.rotate(&tree, Wheel::One, 1);
    show(&nav, "wheel 1 +1");
    nav.rotate(&tree, Wheel::One, -1);
    show(&nav, "wheel 1 -1");
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
