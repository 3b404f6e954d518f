//! Navigation cost: the fewest wheel turns and level shifts that bring a
//! target under some wheel, next to the steps a linear screen reader needs.

use std::path::Path;

use wheeler::{cost_report, load_tree, min_actions, HNavState};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/trees/t1.json");
    let tree = load_tree(&std::fs::read_to_string(path)?)?;

    let start = HNavState::new(&tree)?;
    let plan = min_actions(&tree, &start, "n232")?;
    let steps: Vec<String> = plan.actions.iter().map(ToString::to_string).collect();
    let mut out = format!("reach \"Time\" from the start: {}\n\n", steps.join(" "));

    let pairs: Vec<(String, String)> = [
        ("n11", "n31"),
        ("n121", "n22"),
        ("n3", "n1"),
        ("n21", "n232"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    let report = cost_report(&tree, &pairs)?;
    out.push_str(&report.to_csv());
    out.push_str(&format!(
        "\nmean cost: {:.2} with wheels, {:.2} linear\n",
        report.mean_wheeler_cost(),
        report.mean_linear_cost()
    ));
    Ok(out)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
