//! Linear subspaces of K^m represented by a canonical basis.
//!
//! The basis is kept in reduced row echelon form, so two values represent the
//! same subspace exactly when they are structurally equal. Sums stack bases
//! and re-canonicalize; intersections use the Zassenhaus block trick.

use super::mat::Mat;
use super::scalar::{FieldSpec, Scalar};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct VecSubspace {
    ambient: usize,
    field: FieldSpec,
    /// Full-row-rank matrix in reduced row echelon form; rows span the space.
    basis: Mat,
}

impl VecSubspace {
    /// Subspace spanned by the given vectors (any number, any dependencies).
    pub fn from_spanning(ambient: usize, field: FieldSpec, vectors: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::InvalidInput(format!(
                "spanning vector has length {} in ambient dimension {ambient}",
                v.len()
            )));
        }
        let m = Mat::from_rows(field, vectors.to_vec())?;
        Ok(Self::from_mat_rows(ambient, field, &m))
    }

    fn from_mat_rows(ambient: usize, field: FieldSpec, m: &Mat) -> Self {
        let (rr, pivots) = m.rref();
        let mut data = Vec::with_capacity(pivots.len() * ambient);
        for i in 0..pivots.len() {
            data.extend_from_slice(rr.row(i));
        }
        let basis = Mat::new(pivots.len(), ambient, field, data)
            .expect("echelon rows have ambient length");
        VecSubspace { ambient, field, basis }
    }

    pub fn zero(ambient: usize, field: FieldSpec) -> Self {
        VecSubspace {
            ambient,
            field,
            basis: Mat::zeros(0, ambient, field),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Self {
        VecSubspace {
            ambient,
            field,
            basis: Mat::identity(ambient, field),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// Reduces `v` against the echelon basis and reports whether it lands in
    /// the span.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::InvalidInput(format!(
                "vector length {} does not match ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        let mut w = v.to_vec();
        for i in 0..self.basis.rows() {
            // pivot column = first nonzero of the echelon row, with entry 1
            let row = self.basis.row(i);
            let pivot = row
                .iter()
                .position(|e| !e.is_zero())
                .expect("basis rows are nonzero");
            if w[pivot].is_zero() {
                continue;
            }
            let f = w[pivot].clone();
            for (wj, rj) in w.iter_mut().zip(row.iter()) {
                if !rj.is_zero() {
                    *wj = &*wj - &(&f * rj);
                }
            }
        }
        Ok(w.iter().all(Scalar::is_zero))
    }

    pub fn is_subspace_of(&self, other: &VecSubspace) -> Result<bool> {
        self.check_compatible(other)?;
        for row in self.basis.row_vecs() {
            if !other.contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &VecSubspace) -> Result<VecSubspace> {
        self.check_compatible(other)?;
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Self::from_mat_rows(self.ambient, self.field, &stacked))
    }

    /// Zassenhaus intersection: row-reduce [A | A; B | 0]; rows whose left
    /// half vanishes carry an intersection basis in the right half.
    pub fn intersect(&self, other: &VecSubspace) -> Result<VecSubspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let mut rows = Vec::new();
        for r in self.basis.row_vecs() {
            let mut row = r.clone();
            row.extend(r);
            rows.push(row);
        }
        for r in other.basis.row_vecs() {
            let mut row = r.clone();
            row.extend(vec![Scalar::zero(self.field); n]);
            rows.push(row);
        }
        if rows.is_empty() {
            return Ok(VecSubspace::zero(n, self.field));
        }
        let block = Mat::from_rows(self.field, rows)?;
        let (rr, pivots) = block.rref();
        let mut inter = Vec::new();
        for i in 0..pivots.len() {
            let row = rr.row(i);
            if row[..n].iter().all(Scalar::is_zero) {
                inter.push(row[n..].to_vec());
            }
        }
        VecSubspace::from_spanning(n, self.field, &inter)
    }

    fn check_compatible(&self, other: &VecSubspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::InvalidInput(format!(
                "subspace mismatch: ambient {} ({}) vs {} ({})",
                self.ambient, self.field, other.ambient, other.field
            )));
        }
        Ok(())
    }
}
