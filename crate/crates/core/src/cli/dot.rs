//! DOT renderings: the representation graph with marks as node annotations,
//! and the leveled Bratteli diagram with path counts as subscripts.

use crate::repgraph::{BratteliLevel, RepGraph};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph; edge multiplicity is rendered as parallel edges.
pub fn graph_dot(g: &RepGraph, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {} {{\n", sanitize(name)));
    out.push_str("  node [shape=circle];\n");
    for (label, mark) in g.labels.iter().zip(&g.marks) {
        out.push_str(&format!(
            "  {} [label={}];\n",
            quote(label),
            quote(&format!("{label} ({mark})"))
        ));
    }
    let n = g.node_count();
    for i in 0..n {
        for j in i..n {
            for _ in 0..g.adj[i][j] {
                out.push_str(&format!(
                    "  {} -- {};\n",
                    quote(&g.labels[i]),
                    quote(&g.labels[j])
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Leveled DOT graph of the Bratteli diagram: level `k` shows the nodes with
/// a nonzero path count, labeled `λ_{m_k^λ}`, with one edge per adjacency
/// multiplicity between consecutive levels and the centralizer dimension in
/// a row annotation.
pub fn bratteli_dot(g: &RepGraph, levels: &[BratteliLevel], name: &str) -> String {
    use num_traits::Zero;
    let mut out = String::new();
    out.push_str(&format!("graph {} {{\n", sanitize(name)));
    out.push_str("  rankdir=TB;\n  node [shape=none];\n");
    for level in levels {
        let k = level.k;
        out.push_str("  { rank=same;");
        out.push_str(&format!(
            " {} [label={}];",
            quote(&format!("z{k}")),
            quote(&format!("dim Z_{k} = {}", level.z_dim))
        ));
        for (i, m) in level.mults.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            let id = format!("L{k}_{}", g.labels[i]);
            out.push_str(&format!(
                " {} [label={}];",
                quote(&id),
                quote(&format!("{}_{}", g.labels[i], m))
            ));
        }
        out.push_str(" }\n");
    }
    for pair in levels.windows(2) {
        let (upper, lower) = (&pair[0], &pair[1]);
        for (i, mi) in upper.mults.iter().enumerate() {
            if mi.is_zero() {
                continue;
            }
            for (j, mj) in lower.mults.iter().enumerate() {
                if mj.is_zero() {
                    continue;
                }
                for _ in 0..g.adj[i][j] {
                    out.push_str(&format!(
                        "  {} -- {};\n",
                        quote(&format!("L{}_{}", upper.k, g.labels[i])),
                        quote(&format!("L{}_{}", lower.k, g.labels[j]))
                    ));
                }
            }
        }
    }
    // keep the annotation column aligned
    if levels.len() > 1 {
        for pair in levels.windows(2) {
            out.push_str(&format!(
                "  {} -- {} [style=invis];\n",
                quote(&format!("z{}", pair[0].k)),
                quote(&format!("z{}", pair[1].k))
            ));
        }
    }
    out.push_str("}\n");
    out
}

fn sanitize(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    if cleaned.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        format!("g{cleaned}")
    } else if cleaned.is_empty() {
        "g".into()
    } else {
        cleaned
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{descriptor, GroupKind};
    use crate::repgraph::{bratteli, mckay_graph};

    #[test]
    fn graph_dot_has_parallel_edges_for_multiplicity() {
        let g = mckay_graph(&descriptor(GroupKind::Cyclic(2)).unwrap()).unwrap();
        let dot = graph_dot(&g, "C2");
        assert_eq!(dot.matches("\"0\" -- \"1\";").count(), 2);
    }

    #[test]
    fn bratteli_dot_mentions_counts() {
        let g = mckay_graph(&descriptor(GroupKind::S4Demo).unwrap()).unwrap();
        let levels = bratteli(&g, 2).unwrap();
        let dot = bratteli_dot(&g, &levels, "S4");
        assert!(dot.contains("dim Z_2 = 4"));
        assert!(dot.contains("(3,1)_1"));
    }
}
