//! Representation graphs: construction from the catalog (the affine Dynkin
//! diagrams) or from ingested character tables, affine-node deletion, exact
//! big-integer walk counting, and level data for the associated Bratteli
//! diagram.

mod chartable;
mod json;

pub use chartable::{graph_from_chartable, s4_character_table, CharTable};
pub use json::{graph_from_json, graph_to_json};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groups::{GroupDescriptor, GroupKind};

/// A labeled multigraph on the irreducible modules of a group, with
/// `adj[μ][λ]` counting the multiplicity of module `λ` in `μ ⊗ V`.
///
/// Node 0 is the trivial module. `marks` are the module dimensions and
/// `v_dim` the dimension of `V`; every row satisfies
/// `Σ_λ adj[μ][λ]·marks[λ] = v_dim·marks[μ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepGraph {
    pub labels: Vec<String>,
    pub marks: Vec<u64>,
    pub adj: Vec<Vec<u64>>,
    pub v_dim: u64,
}

impl RepGraph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn node_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.node_count();
        (0..n).all(|i| (i + 1..n).all(|j| self.adj[i][j] == self.adj[j][i]))
    }

    /// Checks the structural invariants: square adjacency, positive marks,
    /// unique labels, and the dimension count per node.
    pub fn validate(&self) -> Result<()> {
        let n = self.node_count();
        if self.marks.len() != n || self.adj.len() != n {
            return Err(Error::BadGraph(
                "label/mark/adjacency sizes disagree".into(),
            ));
        }
        for row in &self.adj {
            if row.len() != n {
                return Err(Error::BadGraph("adjacency matrix is not square".into()));
            }
        }
        if self.marks.contains(&0) {
            return Err(Error::BadGraph("every mark must be positive".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &self.labels {
            if !seen.insert(l) {
                return Err(Error::BadGraph(format!("duplicate node label `{l}`")));
            }
        }
        for mu in 0..n {
            let weighted: u64 = (0..n).map(|la| self.adj[mu][la] * self.marks[la]).sum();
            if weighted != self.v_dim * self.marks[mu] {
                return Err(Error::BadGraph(format!(
                    "dimension count fails at node `{}`: {} ≠ {}·{}",
                    self.labels[mu], weighted, self.v_dim, self.marks[mu]
                )));
            }
        }
        Ok(())
    }

    /// True when every node is reachable from node 0 along edges in either
    /// direction.
    pub fn connected_from_trivial(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && (self.adj[i][j] > 0 || self.adj[j][i] > 0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Builds the representation graph of the defining module from the catalog:
/// the affine Dynkin diagram for the SU(2) kinds (with the two-node cyclic
/// case degenerating to a double edge), or the fixed five-node demo graph.
pub fn mckay_graph(desc: &GroupDescriptor) -> Result<RepGraph> {
    let n_nodes = desc.node_count();
    let mut adj = vec![vec![0u64; n_nodes]; n_nodes];
    let add_edge = |a: usize, b: usize, m: u64, adj: &mut Vec<Vec<u64>>| {
        adj[a][b] += m;
        adj[b][a] += m;
    };
    match desc.kind {
        GroupKind::Cyclic(2) => add_edge(0, 1, 2, &mut adj),
        GroupKind::Cyclic(n) => {
            let n = n as usize;
            for i in 0..n {
                add_edge(i, (i + 1) % n, 1, &mut adj);
            }
        }
        GroupKind::BinaryDihedral(n) => {
            let n = n as usize;
            // chain node `j` (1 ≤ j ≤ n-1) sits at index j+1
            add_edge(0, 2, 1, &mut adj);
            add_edge(1, 2, 1, &mut adj);
            for j in 1..n - 1 {
                add_edge(j + 1, j + 2, 1, &mut adj);
            }
            add_edge(n, n + 1, 1, &mut adj);
            add_edge(n, n + 2, 1, &mut adj);
        }
        GroupKind::BinaryTetrahedral => {
            for (a, b) in [(0, 6), (6, 3), (1, 2), (2, 3), (3, 4), (4, 5)] {
                add_edge(a, b, 1, &mut adj);
            }
        }
        GroupKind::BinaryOctahedral => {
            for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)] {
                add_edge(a, b, 1, &mut adj);
            }
        }
        GroupKind::BinaryIcosahedral => {
            for (a, b) in [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (5, 8),
            ] {
                add_edge(a, b, 1, &mut adj);
            }
        }
        GroupKind::S4Demo => {
            adj = vec![
                vec![0, 1, 0, 0, 0],
                vec![1, 1, 1, 1, 0],
                vec![0, 1, 0, 1, 0],
                vec![0, 1, 1, 1, 1],
                vec![0, 0, 0, 1, 0],
            ];
        }
    }
    let v_dim = if desc.kind == GroupKind::S4Demo { 3 } else { 2 };
    let graph = RepGraph {
        labels: desc.node_labels.clone(),
        marks: desc.marks.clone(),
        adj,
        v_dim,
    };
    graph.validate().map_err(|e| {
        Error::Internal(format!(
            "catalog graph for {} invalid: {e}",
            desc.kind.name()
        ))
    })?;
    Ok(graph)
}

/// Removes node 0 (the affine node) and its incident edges; for catalog
/// graphs the result is the finite Dynkin diagram.
pub fn delete_affine(g: &RepGraph) -> Result<RepGraph> {
    if g.node_count() < 2 {
        return Err(Error::TooSmall(
            "cannot delete the affine node of a graph with fewer than 2 nodes".into(),
        ));
    }
    let n = g.node_count();
    Ok(RepGraph {
        labels: g.labels[1..].to_vec(),
        marks: g.marks[1..].to_vec(),
        adj: (1..n)
            .map(|i| (1..n).map(|j| g.adj[i][j]).collect())
            .collect(),
        v_dim: g.v_dim,
    })
}

/// Exact walk counts: entry `k` is the vector `e₀ᵀ·Aᵏ`, the number of
/// `k`-step walks from node 0 to each node, so `m_0 = δ_{λ,0}`.
pub fn walk_counts(g: &RepGraph, k_max: usize) -> Vec<Vec<BigInt>> {
    let n = g.node_count();
    let mut levels = Vec::with_capacity(k_max + 1);
    let mut current = vec![BigInt::zero(); n];
    if n > 0 {
        current[0] = BigInt::one();
    }
    levels.push(current.clone());
    for _ in 0..k_max {
        let mut next = vec![BigInt::zero(); n];
        for (mu, row) in g.adj.iter().enumerate() {
            if current[mu].is_zero() {
                continue;
            }
            for (la, &a) in row.iter().enumerate() {
                if a > 0 {
                    next[la] += &current[mu] * BigInt::from(a);
                }
            }
        }
        levels.push(next.clone());
        current = next;
    }
    levels
}

/// One level of the Bratteli diagram: the multiplicity vector at level `k`
/// and the centralizer dimension `Σ_λ (m_k^λ)²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BratteliLevel {
    pub k: usize,
    pub mults: Vec<BigInt>,
    pub z_dim: BigInt,
}

/// Levels `0..=k_max` of the Bratteli diagram. When the adjacency matrix is
/// symmetric this also cross-checks `z_dim(k) = m_{2k}^0`; a failure there is
/// a bug, not bad input.
pub fn bratteli(g: &RepGraph, k_max: usize) -> Result<Vec<BratteliLevel>> {
    let symmetric = g.is_symmetric();
    let depth = if symmetric { 2 * k_max } else { k_max };
    let walks = walk_counts(g, depth);
    let mut levels = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mults = walks[k].clone();
        let z_dim: BigInt = mults.iter().map(|m| m * m).sum();
        if symmetric && z_dim != walks[2 * k][0] {
            return Err(Error::Internal(format!(
                "centralizer dimension at level {k} disagrees with closed-walk count"
            )));
        }
        levels.push(BratteliLevel { k, mults, z_dim });
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{descriptor, GroupKind};

    fn graph(kind: GroupKind) -> RepGraph {
        mckay_graph(&descriptor(kind).unwrap()).unwrap()
    }

    #[test]
    fn s4_adjacency_is_the_expected_matrix() {
        let g = graph(GroupKind::S4Demo);
        assert_eq!(g.adj[1], vec![1, 1, 1, 1, 0]);
        assert_eq!(g.adj[3], vec![0, 1, 1, 1, 1]);
        assert_eq!(g.v_dim, 3);
        assert!(g.is_symmetric());
    }

    #[test]
    fn cyclic_three_is_a_triangle() {
        let g = graph(GroupKind::Cyclic(3));
        assert_eq!(g.adj, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert!(g.marks.iter().all(|&m| m == 1));
    }

    #[test]
    fn two_node_cyclic_has_a_double_edge() {
        let g = graph(GroupKind::Cyclic(2));
        assert_eq!(g.adj, vec![vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn small_dihedral_is_a_star() {
        let g = graph(GroupKind::BinaryDihedral(2));
        assert_eq!(g.marks, vec![1, 1, 2, 1, 1]);
        let degree: Vec<u64> = g.adj.iter().map(|row| row.iter().sum()).collect();
        assert_eq!(degree, vec![1, 1, 4, 1, 1]);
    }

    #[test]
    fn marks_are_a_perron_frobenius_eigenvector() {
        for kind in GroupKind::catalog(12) {
            let g = graph(kind);
            for mu in 0..g.node_count() {
                let w: u64 = (0..g.node_count())
                    .map(|la| g.adj[mu][la] * g.marks[la])
                    .sum();
                assert_eq!(w, g.v_dim * g.marks[mu], "{} node {mu}", kind.name());
            }
        }
    }

    #[test]
    fn delete_affine_shapes() {
        let a3 = delete_affine(&graph(GroupKind::Cyclic(4))).unwrap();
        assert_eq!(a3.adj, vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]);

        let e8 = delete_affine(&graph(GroupKind::BinaryIcosahedral)).unwrap();
        assert_eq!(e8.node_count(), 8);

        let single = RepGraph {
            labels: vec!["0".into()],
            marks: vec![1],
            adj: vec![vec![0]],
            v_dim: 1,
        };
        assert!(matches!(delete_affine(&single), Err(Error::TooSmall(_))));
    }

    #[test]
    fn walk_counts_start_at_the_unit_vector() {
        let g = graph(GroupKind::BinaryOctahedral);
        let walks = walk_counts(&g, 0);
        assert_eq!(walks[0][0], BigInt::one());
        assert!(walks[0][1..].iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn s4_walks_match_known_values() {
        let g = graph(GroupKind::S4Demo);
        let walks = walk_counts(&g, 6);
        let node = g.node_index("(2,1^2)").unwrap();
        assert_eq!(walks[6][node], BigInt::from(91));
    }

    #[test]
    fn cyclic_five_invariant_walks() {
        let g = graph(GroupKind::Cyclic(5));
        let walks = walk_counts(&g, 7);
        assert_eq!(walks[7][0], BigInt::from(14));
    }

    #[test]
    fn bratteli_levels_for_s4() {
        let g = graph(GroupKind::S4Demo);
        let levels = bratteli(&g, 3).unwrap();
        assert_eq!(levels[0].z_dim, BigInt::one());
        let m2: Vec<i64> = vec![1, 1, 1, 1, 0];
        assert_eq!(
            levels[2].mults,
            m2.into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        assert_eq!(levels[2].z_dim, BigInt::from(4));
        assert_eq!(levels[3].z_dim, BigInt::from(31));
    }

    #[test]
    fn power_sum_identity_across_catalog() {
        for kind in GroupKind::catalog(8) {
            let g = graph(kind);
            let walks = walk_counts(&g, 20);
            for (k, level) in walks.iter().enumerate() {
                let total: BigInt = level
                    .iter()
                    .zip(&g.marks)
                    .map(|(m, &d)| m * BigInt::from(d))
                    .sum();
                assert_eq!(
                    total,
                    BigInt::from(g.v_dim).pow(k as u32),
                    "{} level {k}",
                    kind.name()
                );
            }
        }
    }
}
