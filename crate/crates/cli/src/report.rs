use std::fmt::Write;

use capcut_core::{Edge, Graph};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

#[derive(Debug, Default, Serialize)]
pub struct Stats {
    pub nodes_expanded: Option<u64>,
    pub partitions_tried: Option<usize>,
    /// Only filled in with `--timing`, so default output stays byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

/// Result of `solve` and `oracle`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub answer: Answer,
    pub k_min: Option<usize>,
    pub deleted_edges: Vec<Edge>,
    pub engine: String,
    pub stats: Stats,
    pub verdict: String,
}

impl RunReport {
    pub fn new(command: String, engine: &str) -> Self {
        RunReport {
            command,
            answer: Answer::No,
            k_min: None,
            deleted_edges: Vec::new(),
            engine: engine.to_string(),
            stats: Stats::default(),
            verdict: "solved".into(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let answer = match self.answer {
            Answer::Yes => "yes",
            Answer::No => "no",
        };
        writeln!(out, "answer: {answer} ({})", self.verdict).unwrap();
        if let Some(k) = self.k_min {
            writeln!(out, "k_min: {k}").unwrap();
        }
        if !self.deleted_edges.is_empty() {
            let edges: Vec<String> = self.deleted_edges.iter().map(|(u, v)| format!("{u} {v}")).collect();
            writeln!(out, "deleted: {}", edges.join("; ")).unwrap();
        }
        writeln!(out, "engine: {}", self.engine).unwrap();
        if let Some(n) = self.stats.nodes_expanded {
            writeln!(out, "nodes expanded: {n}").unwrap();
        }
        if let Some(p) = self.stats.partitions_tried {
            writeln!(out, "partitions tried: {p}").unwrap();
        }
        if let Some(ms) = self.stats.millis {
            writeln!(out, "time: {ms} ms").unwrap();
        }
        out
    }
}

/// Graphviz rendering with deleted edges drawn dashed and red.
pub fn dot(g: &Graph, deleted: &[Edge]) -> String {
    let mut out = String::from("graph capcut {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        if deleted.binary_search(&(u, v)).is_ok() {
            writeln!(out, "  {u} -- {v} [style=dashed, color=red];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
