use std::fmt;

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Square matrix of [`IntPoly`] entries stored row-major.
///
/// Indices are 0-based: the entry written `(i, j)` with 1-based indices in
/// the usual mathematical notation lives at `get(i - 1, j - 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    /// Builds a `dim × dim` matrix from row-major entries.
    pub fn new(dim: usize, entries: Vec<IntPoly>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimension must be at least 1".into(),
            ));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: dim * dim,
                right: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<IntPoly>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: bad.len(),
            });
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let entries = (0..dim * dim)
            .map(|idx| {
                if idx / dim == idx % dim {
                    IntPoly::one()
                } else {
                    IntPoly::zero()
                }
            })
            .collect();
        Self::new(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[IntPoly] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<IntPoly> {
        (0..self.dim).map(|i| self.get(i, j).clone()).collect()
    }

    /// Matrix product over the polynomial ring.
    pub fn mat_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_dim(self.dim, other.dim)?;
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(dot((0..n).map(|t| (self.get(i, t), other.get(t, j)))));
            }
        }
        Ok(PolyMatrix { dim: n, entries })
    }

    /// Matrix times column vector.
    pub fn mat_vec(&self, v: &[IntPoly]) -> Result<Vec<IntPoly>> {
        check_dim(self.dim, v.len())?;
        Ok((0..self.dim)
            .map(|i| dot(self.row(i).iter().zip(v)))
            .collect())
    }
}

/// Row vector times matrix: `dim²` polynomial products.
pub fn row_vec_mat(v: &[IntPoly], m: &PolyMatrix) -> Result<Vec<IntPoly>> {
    check_dim(v.len(), m.dim)?;
    Ok((0..m.dim)
        .map(|j| dot(v.iter().zip((0..m.dim).map(|t| m.get(t, j)))))
        .collect())
}

fn check_dim(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

fn dot<'a>(pairs: impl Iterator<Item = (&'a IntPoly, &'a IntPoly)>) -> IntPoly {
    pairs
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(IntPoly::zero(), |acc, (a, b)| acc + a * b)
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.dim {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
