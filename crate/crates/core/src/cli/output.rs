//! Text formats: edge lists, DOT and the sweep CSV.

use std::fmt::Write as _;

use crate::analysis::SweepReport;
use crate::model::{Network, Relation, SocialRangeMatrix};
use crate::{Error, Result};

/// One `i j` line per edge, `i < j`, ascending.
pub fn write_edge_list(net: &Network) -> String {
    net.edges()
        .iter()
        .map(|(i, j)| format!("{i} {j}\n"))
        .collect()
}

/// Reads an edge list written by [`write_edge_list`]. Blank lines and lines
/// starting with `#` are skipped; pairs may appear in either orientation.
pub fn parse_edge_list(text: &str, n_agents: usize) -> Result<Network> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || {
            Error::Precondition(format!(
                "edge list line {}: expected `i j`, got {line:?}",
                lineno + 1
            ))
        };
        let mut fields = line.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad());
        };
        let i: usize = a.parse().map_err(|_| bad())?;
        let j: usize = b.parse().map_err(|_| bad())?;
        if i == j {
            return Err(bad());
        }
        edges.push((i, j));
    }
    Network::from_edges(n_agents, &edges)
}

fn edge_style(rel: Relation) -> (&'static str, &'static str) {
    match rel {
        Relation::Friend => ("solid", "darkgreen"),
        Relation::Enemy => ("dashed", "red"),
        Relation::Neutral => ("dotted", "gray"),
    }
}

/// Undirected Graphviz graph; each edge carries the relation and weight of
/// the pair in `matrix`.
pub fn write_dot(net: &Network, matrix: &SocialRangeMatrix) -> String {
    let mut out = String::from("graph network {\n    node [shape=circle];\n");
    for i in 0..net.n_agents() {
        writeln!(out, "    {i} [label=\"{i}\"];").unwrap();
    }
    for (i, j) in net.edges() {
        let rel = matrix.relation(i, j);
        let (style, color) = edge_style(rel);
        writeln!(
            out,
            "    {i} -- {j} [relation={}, weight=\"{}\", style={style}, color={color}];",
            rel.as_str(),
            matrix.get(i, j)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// `i-j;i-j;...` in lexicographic order, empty for the null network.
pub fn format_edges_compact(edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|(i, j)| format!("{i}-{j}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// `ratio,stable_count,example_edges` with the smallest-key stable network as
/// the example.
pub fn write_sweep_csv(report: &SweepReport) -> String {
    let mut out = String::from("ratio,stable_count,example_edges\n");
    for p in &report.points {
        let example = p
            .example
            .as_ref()
            .map(|s| format_edges_compact(&s.edges()))
            .unwrap_or_default();
        writeln!(out, "{:.6},{},{example}", p.ratio, p.stable_count).unwrap();
    }
    out
}
