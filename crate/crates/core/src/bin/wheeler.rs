use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wheeler::io::{parse_pairs, parse_script, run_session, Server, Service};
use wheeler::{cost_report, load_tree, Config, UiTree};

#[derive(Parser)]
#[command(name = "wheeler", version, about = "Three-wheel navigation engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay an event script and print the transcript.
    Replay {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        script: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Serve a session over newline-delimited JSON on 127.0.0.1.
    Serve {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        port: u16,
    },
    /// Write a navigation cost report for start,target pairs.
    Plan {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        pairs: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn tree(path: &Path) -> Result<UiTree, String> {
    load_tree(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn config(path: Option<&Path>) -> Result<Config, String> {
    match path {
        Some(p) => Config::parse(&read(p)?).map_err(|e| format!("{}: {e}", p.display())),
        None => Ok(Config::default()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Replay {
            tree: tree_path,
            config: cfg,
            script,
            out,
        } => {
            let tree = tree(&tree_path)?;
            let cfg = config(cfg.as_deref())?;
            let events =
                parse_script(&read(&script)?).map_err(|e| format!("{}: {e}", script.display()))?;
            let transcript = run_session(&tree, &cfg, &events).map_err(|e| e.to_string())?;
            emit(out.as_deref(), &transcript.to_text())
        }
        Command::Serve {
            tree: tree_path,
            config: cfg,
            port,
        } => {
            let service = Service::new(tree(&tree_path)?, config(cfg.as_deref())?)
                .map_err(|e| e.to_string())?;
            let mut server = Server::bind(("127.0.0.1", port), service)
                .map_err(|e| format!("port {port}: {e}"))?;
            eprintln!(
                "listening on {}",
                server.local_addr().map_err(|e| e.to_string())?
            );
            server.run().map_err(|e| e.to_string())
        }
        Command::Plan {
            tree: tree_path,
            pairs,
            out,
        } => {
            let tree = tree(&tree_path)?;
            let sample =
                parse_pairs(&read(&pairs)?).map_err(|e| format!("{}: {e}", pairs.display()))?;
            let report = cost_report(&tree, &sample).map_err(|e| e.to_string())?;
            emit(out.as_deref(), &report.to_csv())
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
