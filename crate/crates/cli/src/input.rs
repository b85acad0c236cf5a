use std::fs;
use std::io::{self, Read};

use pairdom_core::pds::normalize;
use pairdom_core::{named_graph, parse_graph6, Graph, Matching, PairedDomSet};

use crate::CliError;

/// Where a single graph comes from. Exactly one source must be given.
#[derive(Debug, Clone, Default)]
pub struct GraphSource {
    pub name: Option<String>,
    pub g6: Option<String>,
    pub file: Option<String>,
}

/// A resolved graph with the identifier used in reports.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub id: String,
    pub graph: Graph,
}

impl GraphSource {
    pub fn load(&self) -> Result<Loaded, CliError> {
        match (&self.name, &self.g6, &self.file) {
            (Some(name), None, None) => {
                let graph = named_graph(name).map_err(|e| CliError::Parse(e.to_string()))?;
                Ok(Loaded {
                    id: name.clone(),
                    graph,
                })
            }
            (None, Some(code), None) => Ok(Loaded {
                id: code.clone(),
                graph: parse_line(code)?,
            }),
            (None, None, Some(path)) => {
                let text = read_text(path)?;
                let (lineno, line) = text
                    .lines()
                    .enumerate()
                    .find(|(_, l)| !l.trim().is_empty())
                    .ok_or_else(|| CliError::Parse(format!("{path}: no graph6 record")))?;
                let graph = parse_line(line)
                    .map_err(|e| CliError::Parse(format!("{path}:{}: {e}", lineno + 1)))?;
                Ok(Loaded {
                    id: format!("{}:{}", display_path(path), lineno + 1),
                    graph,
                })
            }
            _ => Err(CliError::Usage(
                "give exactly one of --name, --g6 or --file".into(),
            )),
        }
    }
}

pub fn parse_line(line: &str) -> Result<Graph, CliError> {
    parse_graph6(line.trim_end()).map_err(|e| CliError::Parse(e.to_string()))
}

/// Reads a whole file, or standard input for `-`.
pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))
    }
}

pub fn display_path(path: &str) -> &str {
    if path == "-" {
        "stdin"
    } else {
        path
    }
}

/// Parses a matching written as `0-1,2-3`.
pub fn parse_pds(text: &str) -> Result<PairedDomSet, CliError> {
    let bad = || {
        CliError::Parse(format!(
            "malformed pair list {text:?}, expected e.g. 0-1,2-3"
        ))
    };
    let mut edges = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item.split_once('-').ok_or_else(bad)?;
        let u: usize = a.trim().parse().map_err(|_| bad())?;
        let v: usize = b.trim().parse().map_err(|_| bad())?;
        edges.push(normalize(u, v));
    }
    let m = Matching::new(edges).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(PairedDomSet::from_matching(m))
}
