//! Thin numeric helpers: eigenvalues of small symmetric integer matrices and
//! multiset comparison of real spectra.

use nalgebra::DMatrix;

/// Eigenvalues of a symmetric nonnegative-integer matrix, unordered.
///
/// Panics if the matrix is not square or not symmetric; callers gate on
/// symmetry first.
pub fn symmetric_eigenvalues(adj: &[Vec<u64>]) -> Vec<f64> {
    let n = adj.len();
    for row in adj {
        assert_eq!(row.len(), n, "adjacency matrix must be square");
    }
    let m = DMatrix::from_fn(n, n, |i, j| {
        assert_eq!(adj[i][j], adj[j][i], "adjacency matrix must be symmetric");
        adj[i][j] as f64
    });
    m.symmetric_eigen().eigenvalues.as_slice().to_vec()
}

/// Max absolute difference between two equally long sorted sequences; this is
/// the optimal matching distance for multisets of reals. Returns infinity on
/// a length mismatch.
pub fn sorted_mismatch(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_spectrum() {
        let adj = vec![
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ];
        let mut eig = symmetric_eigenvalues(&adj);
        eig.sort_by(f64::total_cmp);
        let want = [-2.0, 0.0, 0.0, 2.0];
        for (a, b) in eig.iter().zip(want) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn mismatch_of_unequal_lengths_is_infinite() {
        assert!(sorted_mismatch(&[1.0], &[1.0, 2.0]).is_infinite());
    }
}
