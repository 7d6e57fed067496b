use super::intpoly::IntPoly;
use crate::error::{Error, Result};

/// Square matrix with integer-polynomial entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "row of length {} in a {n}×{n} matrix",
                    row.len()
                )));
            }
        }
        Ok(PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> IntPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| {
            if i == j {
                IntPoly::one()
            } else {
                IntPoly::zero()
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: IntPoly) {
        self.entries[i * self.n + j] = p;
    }

    /// Copy of the matrix with column `j` replaced by `col`.
    pub fn with_column(&self, j: usize, col: &[IntPoly]) -> Self {
        assert_eq!(col.len(), self.n);
        let mut m = self.clone();
        for i in 0..self.n {
            m.set(i, j, col[i].clone());
        }
        m
    }

    /// Exact determinant. Cofactor expansion below dimension 5, fraction-free
    /// elimination above; the two always agree.
    pub fn det(&self) -> IntPoly {
        if self.n < 5 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Determinant by cofactor expansion along the first column.
    pub fn det_cofactor(&self) -> IntPoly {
        match self.n {
            0 => return IntPoly::one(),
            1 => return self.at(0, 0).clone(),
            _ => {}
        }
        let mut det = IntPoly::zero();
        for i in 0..self.n {
            let c = self.at(i, 0);
            if c.is_zero() {
                continue;
            }
            let minor = self.minor(i, 0).det_cofactor();
            let term = c * &minor;
            if i % 2 == 0 {
                det = &det + &term;
            } else {
                det = &det - &term;
            }
        }
        det
    }

    fn minor(&self, row: usize, col: usize) -> PolyMatrix {
        let n = self.n - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..self.n {
            if i == row {
                continue;
            }
            for j in 0..self.n {
                if j == col {
                    continue;
                }
                entries.push(self.at(i, j).clone());
            }
        }
        PolyMatrix { n, entries }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Every division in
    /// the update is exact over the polynomial ring.
    pub fn det_bareiss(&self) -> IntPoly {
        let n = self.n;
        if n == 0 {
            return IntPoly::one();
        }
        let mut m = self.clone();
        let mut prev = IntPoly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                    return IntPoly::zero();
                };
                for j in 0..n {
                    let a = m.at(k, j).clone();
                    let b = m.at(r, j).clone();
                    m.set(k, j, b);
                    m.set(r, j, a);
                }
                negate = !negate;
            }
            let pivot = m.at(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.at(i, j) * &pivot) - &(m.at(i, k) * m.at(k, j));
                    let q = num.div_exact(&prev).expect("fraction-free update is exact");
                    m.set(i, j, q);
                }
                m.set(i, k, IntPoly::zero());
            }
            prev = pivot;
        }
        let det = m.at(n - 1, n - 1).clone();
        if negate {
            -&det
        } else {
            det
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn one_by_one_identity() {
        let m = PolyMatrix::from_rows(vec![vec![IntPoly::one()]]).unwrap();
        assert_eq!(m.det(), IntPoly::one());
    }

    #[test]
    fn triangular_det_is_diagonal_product() {
        let m = PolyMatrix::from_rows(vec![
            vec![p(&[1, 1]), p(&[5]), p(&[0, 0, 3])],
            vec![IntPoly::zero(), p(&[2, -1]), p(&[7])],
            vec![IntPoly::zero(), IntPoly::zero(), p(&[0, 4])],
        ])
        .unwrap();
        let want = &(&p(&[1, 1]) * &p(&[2, -1])) * &p(&[0, 4]);
        assert_eq!(m.det(), want);
        assert_eq!(m.det_bareiss(), want);
    }

    #[test]
    fn singular_matrix() {
        let row = vec![p(&[1, 2]), p(&[3])];
        let m = PolyMatrix::from_rows(vec![row.clone(), row]).unwrap();
        assert_eq!(m.det(), IntPoly::zero());
        assert_eq!(m.det_bareiss(), IntPoly::zero());
    }

    #[test]
    fn bareiss_handles_zero_pivot() {
        let m = PolyMatrix::from_rows(vec![
            vec![IntPoly::zero(), p(&[1]), p(&[0, 1]), p(&[2]), p(&[1])],
            vec![p(&[1]), IntPoly::zero(), p(&[1]), p(&[0, 2]), p(&[0, 1])],
            vec![p(&[0, 1]), p(&[1]), p(&[1]), p(&[1]), p(&[3])],
            vec![p(&[2]), p(&[0, -1]), p(&[1, 1]), IntPoly::zero(), p(&[1])],
            vec![p(&[1]), p(&[1]), p(&[0, 0, 1]), p(&[1]), IntPoly::zero()],
        ])
        .unwrap();
        assert_eq!(m.det_bareiss(), m.det_cofactor());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(PolyMatrix::from_rows(vec![vec![p(&[1])], vec![]]).is_err());
    }
}
