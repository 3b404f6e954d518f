//! Level shifting: the three wheels are a sliding window over a tree that is
//! deeper than three levels.

use wheeler::model::TreeBuilder;
use wheeler::HNavState;

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let levels = ["root", "l1", "l2", "l3", "l4", "l5"];
    let mut builder = TreeBuilder::new(100, 100);
    for pair in levels.windows(2) {
        builder = builder.node(pair[0], &pair[0].to_uppercase(), "group", None, &[pair[1]]);
    }
    let tree = builder.node("l5", "L5", "item", None, &[]).build("root")?;

    let mut nav = HNavState::new(&tree)?;
    let mut lines = Vec::new();
    let describe = |nav: &HNavState| {
        let focus: Vec<&str> = nav
            .focus_triple(&tree)
            .iter()
            .map(|f| f.map_or("-", |i| tree.id(i)))
            .collect();
        format!(
            "levels {}..{}: {}",
            nav.window_base(&tree),
            nav.window_base(&tree) + 2,
            focus.join(" ")
        )
    };
    lines.push(describe(&nav));
    loop {
        let base = nav.window_base(&tree);
        nav.shift_down(&tree);
        if nav.window_base(&tree) == base {
            lines.push("no deeper level to show".to_owned());
            break;
        }
        lines.push(describe(&nav));
    }
    nav.shift_up(&tree);
    lines.push(format!("back up, {}", describe(&nav)));
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
