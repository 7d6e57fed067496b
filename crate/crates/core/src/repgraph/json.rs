//! Graph interchange format:
//! `{"v_dim": d, "nodes": [{"label", "mark"}...], "edges": [[a, b, mult]...]}`
//! with node 0 first (the trivial module), undirected edges listed once, and
//! loops allowed.

use serde::{Deserialize, Serialize};

use super::RepGraph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct NodeDoc {
    label: String,
    mark: u64,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    v_dim: u64,
    nodes: Vec<NodeDoc>,
    edges: Vec<(String, String, u64)>,
}

/// Serializes a symmetric graph; edge order is the upper triangle in
/// row-major order, so identical graphs produce identical bytes.
pub fn graph_to_json(g: &RepGraph) -> Result<String> {
    if !g.is_symmetric() {
        return Err(Error::AsymmetricAdjacency);
    }
    let n = g.node_count();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i..n {
            if g.adj[i][j] > 0 {
                edges.push((g.labels[i].clone(), g.labels[j].clone(), g.adj[i][j]));
            }
        }
    }
    let doc = GraphDoc {
        v_dim: g.v_dim,
        nodes: g
            .labels
            .iter()
            .zip(&g.marks)
            .map(|(label, &mark)| NodeDoc {
                label: label.clone(),
                mark,
            })
            .collect(),
        edges,
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn graph_from_json(text: &str) -> Result<RepGraph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let n = doc.nodes.len();
    if n == 0 {
        return Err(Error::BadGraph("no nodes".into()));
    }
    let labels: Vec<String> = doc.nodes.iter().map(|nd| nd.label.clone()).collect();
    let marks: Vec<u64> = doc.nodes.iter().map(|nd| nd.mark).collect();
    let mut adj = vec![vec![0u64; n]; n];
    for (a, b, mult) in &doc.edges {
        let i = labels
            .iter()
            .position(|l| l == a)
            .ok_or_else(|| Error::BadGraph(format!("edge references unknown node `{a}`")))?;
        let j = labels
            .iter()
            .position(|l| l == b)
            .ok_or_else(|| Error::BadGraph(format!("edge references unknown node `{b}`")))?;
        adj[i][j] += mult;
        if i != j {
            adj[j][i] += mult;
        }
    }
    let graph = RepGraph {
        labels,
        marks,
        adj,
        v_dim: doc.v_dim,
    };
    graph.validate()?;
    Ok(graph)
}
