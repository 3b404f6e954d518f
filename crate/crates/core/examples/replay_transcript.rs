//! Replays a recorded event script and prints the transcript a driver would
//! consume: one JSON object per output event, then the final state.

use std::path::Path;

use wheeler::io::{parse_script, run_session};
use wheeler::{load_tree, Config};

pub fn run_example() -> Result<String, Box<dyn std::error::Error>> {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let tree = load_tree(&std::fs::read_to_string(fixtures.join("trees/t1.json"))?)?;
    let config = Config::parse("# one detent per 20 degrees\nrotation_resolution = 20\n")?;
    let script = parse_script(&std::fs::read_to_string(
        fixtures.join("scripts/level_shift.jsonl"),
    )?)?;
    Ok(run_session(&tree, &config, &script)?.to_text())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run_example()?);
    Ok(())
}
