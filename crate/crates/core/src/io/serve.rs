use std::io::{self, BufRead, BufReader, Write};
use std::net::{TcpListener, TcpStream, ToSocketAddrs};

use serde_json::json;

use crate::config::Config;
use crate::controller::{Session, SessionError};
use crate::model::UiTree;

use super::script::parse_line;

/// A session driven by wire-format lines. Survives client reconnects.
#[derive(Debug, Clone)]
pub struct Service {
    tree: UiTree,
    session: Session,
}

impl Service {
    pub fn new(tree: UiTree, config: Config) -> Result<Self, SessionError> {
        let session = Session::new(&tree, config)?;
        Ok(Self { tree, session })
    }

    pub fn session(&self) -> &Session {
        &self.session
    }

    pub fn tree(&self) -> &UiTree {
        &self.tree
    }

    pub fn snapshot_line(&self) -> String {
        self.session.snapshot(&self.tree).to_json()
    }

    /// Handles one client line. Returns the output event lines followed by a
    /// state snapshot, or a single error line with the session unchanged.
    pub fn handle_line(&mut self, text: &str, line: usize) -> Vec<String> {
        let event = match parse_line(text, line) {
            Ok(ev) => ev,
            Err(_) => return vec![json!({"error": "parse", "line": line}).to_string()],
        };
        match self.session.handle(&self.tree, &event) {
            Ok(out) => {
                let mut lines: Vec<String> = out.iter().map(|e| e.to_json()).collect();
                lines.push(self.snapshot_line());
                lines
            }
            Err(e) => vec![
                json!({"error": "session", "line": line, "message": e.to_string()}).to_string(),
            ],
        }
    }

    /// Serves one connected client until it disconnects. The client first
    /// receives the current snapshot.
    pub fn serve_client(&mut self, stream: TcpStream) -> io::Result<()> {
        let mut writer = stream.try_clone()?;
        writeln!(writer, "{}", self.snapshot_line())?;
        let reader = BufReader::new(stream);
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            for out in self.handle_line(&line, i + 1) {
                writeln!(writer, "{out}")?;
            }
            writer.flush()?;
        }
        Ok(())
    }
}

/// TCP front end: one client at a time, in arrival order.
#[derive(Debug)]
pub struct Server {
    listener: TcpListener,
    service: Service,
}

impl Server {
    pub fn bind(addr: impl ToSocketAddrs, service: Service) -> io::Result<Self> {
        Ok(Self {
            listener: TcpListener::bind(addr)?,
            service,
        })
    }

    pub fn local_addr(&self) -> io::Result<std::net::SocketAddr> {
        self.listener.local_addr()
    }

    pub fn service(&self) -> &Service {
        &self.service
    }

    /// Accepts and serves a single client.
    pub fn serve_one(&mut self) -> io::Result<()> {
        let (stream, _) = self.listener.accept()?;
        self.service.serve_client(stream)
    }

    pub fn run(&mut self) -> io::Result<()> {
        loop {
            if let Err(e) = self.serve_one() {
                // A dropped client must not end the service.
                eprintln!("client error: {e}");
            }
        }
    }
}
