use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{integer, Rational};

/// Full-rank `k × n` matrix `M`, the linear map `x ↦ Mx`.
///
/// Its center is `P(ker M) ⊂ P^{n-1}`, the common zeros of the row forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProjection {
    rows: Vec<Vec<Rational>>,
}

impl LinearProjection {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::precondition("projection needs at least one row"));
        }
        let n = rows[0].len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::ArityMismatch {
                expected: n,
                actual: bad.len(),
            });
        }
        if k > n {
            return Err(Error::precondition(format!("{k} rows exceed {n} columns")));
        }
        if linalg::rank(&rows) != k {
            return Err(Error::precondition("projection matrix is not of full rank"));
        }
        Ok(LinearProjection { rows })
    }

    pub fn identity(n: usize) -> Self {
        LinearProjection {
            rows: (0..n)
                .map(|i| (0..n).map(|j| integer(i64::from(i == j))).collect())
                .collect(),
        }
    }

    /// Keeps the listed coordinates of `C^n`, in order.
    pub fn coordinates(n: usize, keep: &[usize]) -> Result<Self> {
        LinearProjection::new(
            keep.iter()
                .map(|&i| (0..n).map(|j| integer(i64::from(i == j))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn target_dim(&self) -> usize {
        self.rows.len()
    }

    pub fn source_dim(&self) -> usize {
        self.rows[0].len()
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Whether the center is empty, i.e. `M` is injective.
    pub fn has_empty_center(&self) -> bool {
        self.target_dim() == self.source_dim()
    }

    /// Rows as `p/q` strings.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|q| q.to_string()).collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_is_checked() {
        let dup = vec![vec![integer(1), integer(2)], vec![integer(2), integer(4)]];
        assert!(LinearProjection::new(dup).is_err());
        assert!(LinearProjection::new(vec![vec![integer(1)], vec![integer(2)]]).is_err());
        let p = LinearProjection::coordinates(3, &[0, 2]).unwrap();
        assert_eq!(p.apply(&[integer(1), integer(2), integer(3)]), vec![integer(1), integer(3)]);
        assert!(LinearProjection::identity(3).has_empty_center());
    }
}
