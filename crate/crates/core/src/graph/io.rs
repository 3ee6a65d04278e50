//! JSON interchange and DOT export. Both are byte-stable for a fixed vertex order.

use serde::{Deserialize, Serialize};

use super::{Graph, PointedGraph};
use crate::error::{Error, Result};

/// `{"vertices":[...],"edges":[[u,v],...],"basepoint":...}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

impl GraphJson {
    pub fn from_graph(graph: &Graph, basepoint: Option<usize>) -> Self {
        GraphJson {
            vertices: graph.labels().to_vec(),
            edges: graph
                .edges()
                .iter()
                .map(|&(u, v)| [graph.label(u).to_string(), graph.label(v).to_string()])
                .collect(),
            basepoint: basepoint.map(|b| graph.label(b).to_string()),
        }
    }

    pub fn from_pointed(pointed: &PointedGraph) -> Self {
        Self::from_graph(&pointed.graph, Some(pointed.basepoint))
    }

    /// Builds the graph and resolves the optional basepoint.
    pub fn to_graph(&self) -> Result<(Graph, Option<usize>)> {
        let edges: Vec<(&str, &str)> = self.edges.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let graph = Graph::from_labels(&vertices, &edges)?;
        let basepoint = self.basepoint.as_deref().map(|b| graph.vertex(b)).transpose()?;
        Ok((graph, basepoint))
    }

    pub fn to_pointed(&self) -> Result<PointedGraph> {
        match self.to_graph()? {
            (graph, Some(b)) => PointedGraph::new(graph, b),
            _ => Err(Error::Malformed("graph has no basepoint".into())),
        }
    }
}

pub fn graph_to_json(graph: &Graph, basepoint: Option<usize>) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(graph, basepoint)).expect("graph JSON serializes")
}

pub fn graph_from_json(text: &str) -> Result<(Graph, Option<usize>)> {
    let parsed: GraphJson = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    parsed.to_graph()
}

/// Graphviz DOT for an undirected graph.
pub fn graph_to_dot(graph: &Graph, name: &str) -> String {
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = format!("graph {} {{\n", quote(name));
    for label in graph.labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for &(u, v) in graph.edges() {
        out.push_str(&format!("  {} -- {};\n", quote(graph.label(u)), quote(graph.label(v))));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, build_star};

    #[test]
    fn json_round_trip_is_byte_stable() {
        let g = build_star(3, 2).unwrap();
        let text = graph_to_json(&g, Some(0));
        let (back, base) = graph_from_json(&text).unwrap();
        assert_eq!(base, Some(0));
        assert_eq!(back.labels(), g.labels());
        assert_eq!(back.edges(), g.edges());
        assert_eq!(graph_to_json(&back, base), text);
    }

    #[test]
    fn json_shape() {
        let g = build_path(1).unwrap();
        assert_eq!(
            serde_json::to_string(&GraphJson::from_graph(&g, None)).unwrap(),
            r#"{"vertices":["v0","v1"],"edges":[["v0","v1"]]}"#
        );
        assert!(graph_from_json(r#"{"vertices":["a"],"edges":[["a","b"]]}"#).is_err());
    }

    #[test]
    fn dot_export() {
        let g = build_path(1).unwrap();
        assert_eq!(graph_to_dot(&g, "P1"), "graph \"P1\" {\n  \"v0\";\n  \"v1\";\n  \"v0\" -- \"v1\";\n}\n");
    }
}
