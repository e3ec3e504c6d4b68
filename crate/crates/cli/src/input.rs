use std::io::Read;
use std::path::Path;

use slee_core::graph::parse_graph6;
use slee_core::Graph;

use crate::Failure;

/// Where graph6 text comes from: `-` or nothing means stdin, an existing
/// file path is read, anything else is taken as inline graph6.
pub fn read_source(input: Option<&str>) -> Result<String, Failure> {
    match input {
        None | Some("-") => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
        Some(arg) if Path::new(arg).is_file() => {
            std::fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))
        }
        Some(inline) => Ok(inline.to_string()),
    }
}

/// Parses one graph per non-blank line; an optional `>>graph6<<` header is
/// accepted on each line.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>, Failure> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(no, line)| {
            let body = line.strip_prefix(">>graph6<<").unwrap_or(line).trim();
            parse_graph6(body).map_err(|e| Failure::Usage(format!("line {no}: {e}")))
        })
        .collect()
}

pub fn read_graphs(input: Option<&str>) -> Result<Vec<Graph>, Failure> {
    parse_lines(&read_source(input)?)
}

pub fn read_one(input: Option<&str>) -> Result<Graph, Failure> {
    let graphs = read_graphs(input)?;
    match graphs.as_slice() {
        [g] => Ok(*g),
        other => Err(Failure::Usage(format!("expected exactly one graph, got {}", other.len()))),
    }
}
