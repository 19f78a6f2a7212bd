use std::fmt;

use super::field::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Default cap on `rows * cols` for any matrix the engine materializes.
pub const DEFAULT_ENTRY_BUDGET: u64 = 5_000_000;

/// Cap on potential entries (`rows * cols`) of materialized matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_ENTRY_BUDGET)
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget(u64::MAX)
    }

    pub fn check(&self, rows: usize, cols: usize, context: impl Into<String>) -> Result<()> {
        let potential = (rows as u128) * (cols as u128);
        if potential > self.0 as u128 {
            return Err(Error::BudgetExceeded {
                context: context.into(),
                rows,
                cols,
                budget: self.0,
            });
        }
        Ok(())
    }
}

/// Adds `s * b` into `a`; both sorted.
pub fn axpy(a: &SparseVec, s: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = s * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(s * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Collapses unsorted `(index, value)` terms into a canonical sparse vector.
pub fn normalize_terms(mut terms: Vec<(usize, Scalar)>) -> SparseVec {
    terms.sort_by_key(|t| t.0);
    let mut out: SparseVec = Vec::with_capacity(terms.len());
    for (i, v) in terms {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = &*acc + &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

pub fn scale_vec(v: &SparseVec, s: &Scalar) -> SparseVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, s * x)).collect()
}

/// Row-major sparse matrix over a single field.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<SparseVec>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                writeln!(f, "  ({r}, {c}) = {v}")?;
            }
        }
        Ok(())
    }
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        SparseMatrix {
            rows,
            cols,
            field,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let one = field.one();
        SparseMatrix {
            rows: n,
            cols: n,
            field,
            data: (0..n).map(|i| vec![(i, one.clone())]).collect(),
        }
    }

    /// Builds a matrix from triplets; duplicates are summed, zeros dropped.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::IndexOutOfRange(format!(
                    "entry ({r}, {c}) in a {rows}x{cols} matrix"
                )));
            }
            field.check(&v)?;
            buckets[r].push((c, v));
        }
        Ok(SparseMatrix {
            rows,
            cols,
            field,
            data: buckets.into_iter().map(normalize_terms).collect(),
        })
    }

    /// Rows must already be canonical sparse vectors.
    pub fn from_rows(cols: usize, field: FieldSpec, data: Vec<SparseVec>) -> Result<Self> {
        for row in &data {
            for w in row.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(Error::Invalid("row indices not strictly increasing".into()));
                }
            }
            for (c, v) in row {
                if *c >= cols {
                    return Err(Error::IndexOutOfRange(format!("column {c} >= {cols}")));
                }
                field.check(v)?;
                if v.is_zero() {
                    return Err(Error::Invalid("stored zero entry".into()));
                }
            }
        }
        Ok(SparseMatrix {
            rows: data.len(),
            cols,
            field,
            data,
        })
    }

    pub fn from_columns(rows: usize, field: FieldSpec, columns: &[SparseVec]) -> Result<Self> {
        let trip = columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v.clone())));
        SparseMatrix::from_triplets(rows, columns.len(), field, trip)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn row(&self, r: usize) -> &SparseVec {
        &self.data[r]
    }

    pub fn row_data(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.data[r].binary_search_by_key(&c, |t| t.0) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.entries() {
            data[c].push((r, v.clone()));
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            data,
        }
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    fn same_shape(&self, other: &SparseMatrix, op: &str) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field.to_string(),
                found: other.field.to_string(),
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&self.field.one(), other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&-&self.field.one(), other)
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: &Scalar, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_shape(other, "add")?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| axpy(a, s, b))
            .collect();
        Ok(self.with_data(data))
    }

    fn with_data(&self, data: Vec<SparseVec>) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn scale(&self, s: &Scalar) -> SparseMatrix {
        self.with_data(self.data.iter().map(|r| scale_vec(r, s)).collect())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field.to_string(),
                found: other.field.to_string(),
            });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product {}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc: Vec<Option<Scalar>> = vec![None; other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    let p = a * b;
                    match &mut acc[*c] {
                        Some(x) => *x = &*x + &p,
                        slot @ None => {
                            *slot = Some(p);
                            touched.push(*c);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &c in &touched {
                let v = acc[c].take().unwrap();
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
            touched.clear();
            data.push(out);
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            field: self.field,
            data,
        })
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut dense: Vec<Option<Scalar>> = vec![None; self.cols];
        for (i, x) in v {
            dense[*i] = Some(x.clone());
        }
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: Option<Scalar> = None;
            for (c, a) in row {
                if let Some(x) = &dense[*c] {
                    let p = a * x;
                    acc = Some(match acc {
                        Some(s) => &s + &p,
                        None => p,
                    });
                }
            }
            if let Some(s) = acc {
                if !s.is_zero() {
                    out.push((r, s));
                }
            }
        }
        out
    }

    /// Stacks blocks vertically; all must share a column count.
    pub fn vstack(blocks: &[&SparseMatrix], cols: usize, field: FieldSpec) -> Result<SparseMatrix> {
        let mut data = Vec::new();
        for b in blocks {
            if b.cols != cols || b.field != field {
                return Err(Error::DimensionMismatch("vstack column count".into()));
            }
            data.extend(b.data.iter().cloned());
        }
        Ok(SparseMatrix {
            rows: data.len(),
            cols,
            field,
            data,
        })
    }

    /// Places `block` with its top-left corner at `(r0, c0)` into triplets.
    pub fn push_block(
        &self,
        r0: usize,
        c0: usize,
        sign: &Scalar,
        out: &mut Vec<(usize, usize, Scalar)>,
    ) {
        for (r, c, v) in self.entries() {
            out.push((r0 + r, c0 + c, sign * v));
        }
    }

    /// Dense rendering for small matrices (tests, reports).
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut m = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            m[r][c] = v.clone();
        }
        m
    }

    pub fn from_dense(field: FieldSpec, rows: &[Vec<i64>]) -> SparseMatrix {
        let cols = rows.first().map_or(0, Vec::len);
        let trip = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(move |(c, v)| (r, c, field.from_i64(*v)))
        });
        SparseMatrix::from_triplets(rows.len(), cols, field, trip).expect("dense input")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_merge_and_drop_zeros() {
        let q = FieldSpec::Rational;
        let m = SparseMatrix::from_triplets(
            2,
            2,
            q,
            vec![
                (0, 1, q.from_i64(2)),
                (0, 1, q.from_i64(-2)),
                (1, 0, q.from_i64(3)),
                (1, 0, q.from_i64(1)),
            ],
        )
        .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), q.from_i64(4));
    }

    #[test]
    fn out_of_range_rejected() {
        let q = FieldSpec::Rational;
        assert!(SparseMatrix::from_triplets(1, 1, q, vec![(0, 1, q.one())]).is_err());
    }

    #[test]
    fn product_matches_dense() {
        let q = FieldSpec::Rational;
        let a = SparseMatrix::from_dense(q, &[vec![1, 2], vec![0, 1], vec![3, 0]]);
        let b = SparseMatrix::from_dense(q, &[vec![1, 0, -1], vec![2, 1, 0]]);
        let c = a.mul(&b).unwrap();
        let want = SparseMatrix::from_dense(
            q,
            &[vec![5, 2, -1], vec![2, 1, 0], vec![3, 0, -3]],
        );
        assert_eq!(c, want);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn budget_guard() {
        assert!(Budget(10).check(3, 3, "x").is_ok());
        assert!(matches!(
            Budget(10).check(4, 3, "x"),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
