//! The line protocol a device driver or simulator speaks. Each input line is
//! answered with its output events followed by the new state.

use std::io::{BufRead, BufReader, Write};
use std::net::TcpStream;
use std::path::Path;
use std::thread;

use wheeler::io::{Server, Service};
use wheeler::{load_tree, Config};

pub fn run_example() -> Result<Vec<String>, Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/trees/t1.json");
    let tree = load_tree(&std::fs::read_to_string(path)?)?;
    let mut server = Server::bind("127.0.0.1:0", Service::new(tree, Config::default())?)?;
    let addr = server.local_addr()?;
    let worker = thread::spawn(move || server.serve_one());

    let stream = TcpStream::connect(addr)?;
    let mut writer = stream.try_clone()?;
    let reader = BufReader::new(stream);
    let inputs = [
        r#"{"t":0,"kind":"wheel","wheel":1,"degrees":40}"#,
        r#"{"t":50,"kind":"oops"}"#,
        r#"{"t":90,"kind":"button_down","button":"primary"}"#,
        r#"{"t":140,"kind":"button_up","button":"primary"}"#,
    ];
    for line in inputs {
        writeln!(writer, "{line}")?;
    }
    writer.shutdown(std::net::Shutdown::Write)?;

    let lines: Vec<String> = reader.lines().collect::<Result<_, _>>()?;
    worker.join().expect("server thread")?;
    Ok(lines)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for line in run_example()? {
        println!("{line}");
    }
    Ok(())
}
