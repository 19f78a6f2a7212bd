use super::elim::{rref, rref_rows};
use super::field::{FieldSpec, Scalar};
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// A subspace of `field^ambient` with a selector basis: for each basis
/// vector `j` there is a coordinate `selectors[j]` where vector `j` is 1
/// and every other basis vector is 0. Coordinates of a member `v` are then
/// just `v[selectors[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    basis: Vec<SparseVec>,
    selectors: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient,
            field,
            basis: Vec::new(),
            selectors: Vec::new(),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient,
            field,
            basis: (0..ambient).map(|i| vec![(i, field.one())]).collect(),
            selectors: (0..ambient).collect(),
        }
    }

    /// Span of arbitrary vectors.
    pub fn span(ambient: usize, field: FieldSpec, vectors: &[SparseVec]) -> Result<Self> {
        let red = rref_rows(field, vectors, ambient, &[])?;
        Ok(Subspace {
            ambient,
            field,
            basis: red.rows,
            selectors: red.pivots,
        })
    }

    pub fn kernel_of(m: &SparseMatrix) -> Result<Self> {
        let red = rref(m)?;
        let (free, basis) = red.kernel();
        Ok(Subspace {
            ambient: m.cols(),
            field: m.field(),
            basis,
            selectors: free,
        })
    }

    pub fn image_of(m: &SparseMatrix) -> Result<Self> {
        Subspace::span(m.rows(), m.field(), &m.columns())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn selectors(&self) -> &[usize] {
        &self.selectors
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.ambient, self.field, &self.basis)
            .expect("basis vectors are in range")
    }

    /// `v - sum_j v[s_j] b_j`; zero exactly when `v` lies in the subspace.
    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        let mut dense: Vec<Option<Scalar>> = vec![None; self.ambient];
        let mut touched: Vec<usize> = Vec::with_capacity(v.len());
        for (i, x) in v {
            dense[*i] = Some(x.clone());
            touched.push(*i);
        }
        let coords = self.raw_coordinates(v);
        for (b, c) in self.basis.iter().zip(&coords) {
            if c.is_zero() {
                continue;
            }
            for (i, x) in b {
                let p = c * x;
                match &mut dense[*i] {
                    Some(acc) => *acc = &*acc - &p,
                    slot @ None => {
                        *slot = Some(-&p);
                        touched.push(*i);
                    }
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();
        touched
            .into_iter()
            .filter_map(|i| {
                let x = dense[i].take()?;
                (!x.is_zero()).then_some((i, x))
            })
            .collect()
    }

    fn raw_coordinates(&self, v: &SparseVec) -> Vec<Scalar> {
        let mut dense: Vec<Option<&Scalar>> = vec![None; self.ambient];
        for (i, x) in v {
            dense[*i] = Some(x);
        }
        self.selectors
            .iter()
            .map(|&s| dense[s].cloned().unwrap_or_else(|| self.field.zero()))
            .collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.residual(v).is_empty()
    }

    /// Coordinates in this basis, or `None` if `v` is not a member.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        self.contains(v).then(|| self.raw_coordinates(v))
    }

    pub fn coordinates_sparse(&self, v: &SparseVec) -> Option<SparseVec> {
        self.coordinates(v).map(|c| {
            c.into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect()
        })
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of {}^{} and {}^{}",
                self.field, self.ambient, other.field, other.ambient
            )));
        }
        Ok(())
    }

    /// `self ∩ other`: members `A α` of `self` whose residual against `other` vanishes.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let residuals: Vec<SparseVec> = self.basis.iter().map(|b| other.residual(b)).collect();
        let p = SparseMatrix::from_columns(self.ambient, self.field, &residuals)?;
        let ker = Subspace::kernel_of(&p)?;
        let vectors: Vec<SparseVec> = ker
            .basis
            .iter()
            .map(|alpha| self.combination(alpha))
            .collect();
        Subspace::span(self.ambient, self.field, &vectors)
    }

    /// `sum_j alpha[j] b_j`.
    pub fn combination(&self, alpha: &SparseVec) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (j, c) in alpha {
            acc = super::sparse::axpy(&acc, c, &self.basis[*j]);
        }
        acc
    }

    /// Image of this subspace under `m` (as a subspace of the codomain).
    pub fn image_under(&self, m: &SparseMatrix) -> Result<Subspace> {
        let vecs: Vec<SparseVec> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Subspace::span(m.rows(), m.field(), &vecs)
    }
}

/// `dim(outer) - dim(inner)`, after checking `inner ⊆ outer`.
pub fn quotient_dim(outer: &Subspace, inner: &Subspace) -> Result<usize> {
    outer.same_ambient(inner)?;
    for (k, b) in inner.basis().iter().enumerate() {
        if !outer.contains(b) {
            return Err(Error::ContainmentViolation(format!(
                "inner basis vector {k} not in outer subspace (ambient {})",
                outer.ambient()
            )));
        }
    }
    Ok(outer.dim() - inner.dim())
}
