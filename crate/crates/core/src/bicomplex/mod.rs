//! Double complexes built from face maps, their identities and total cohomology.

pub mod explicit;
pub mod faces;
pub mod homotopy;
pub mod restricted;
pub mod theory;

#[cfg(test)]
mod tests;

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{quotient_dim, FieldSpec, SparseMatrix, Subspace};

pub use explicit::{build_extension, extensions_equivalent, z1_b1_explicit, CocyclePair, Z1B1};
pub use faces::{FaceSource, GsFaces, HomShape, ModuleFaces, Variant};
pub use homotopy::{
    col_homotopy, homotopy_sweep, hopf_vanishing_check, hopf_vanishing_general, row_homotopy,
    HomotopyKind, HomotopySweep, SweepRow, VanishingReport,
};
pub use restricted::{restricted_bicomplex, ClosureDefect, Restricted, Restriction};
pub use theory::{run_theory, Registry, Theory, TheoryInput};

/// Horizontal and vertical differentials of a double complex, stored for
/// every bidegree with `n + p ≤ qmax - 1`; dimensions up to `n + p = qmax`.
#[derive(Clone, Debug)]
pub struct Bicomplex {
    pub kind: String,
    field: FieldSpec,
    qmax: usize,
    dims: Vec<Vec<usize>>,
    dm: Vec<Vec<SparseMatrix>>,
    dc: Vec<Vec<SparseMatrix>>,
}

impl Bicomplex {
    pub fn from_source(kind: impl Into<String>, src: &dyn FaceSource, qmax: usize) -> Result<Self> {
        let dims = (0..=qmax)
            .map(|n| (0..=qmax - n).map(|p| src.dim(n, p)).collect())
            .collect();
        let mut dm = Vec::new();
        let mut dc = Vec::new();
        for n in 0..qmax {
            let mut row_m = Vec::new();
            let mut row_c = Vec::new();
            for p in 0..qmax - n {
                row_m.push(src.dm(n, p)?);
                row_c.push(src.dc(n, p)?);
            }
            dm.push(row_m);
            dc.push(row_c);
        }
        Ok(Bicomplex { kind: kind.into(), field: src.field(), qmax, dims, dm, dc })
    }

    /// Assembles a bicomplex from explicit data; shapes are checked.
    pub fn from_parts(
        kind: impl Into<String>,
        field: FieldSpec,
        qmax: usize,
        dims: Vec<Vec<usize>>,
        dm: Vec<Vec<SparseMatrix>>,
        dc: Vec<Vec<SparseMatrix>>,
    ) -> Result<Self> {
        let bc = Bicomplex { kind: kind.into(), field, qmax, dims, dm, dc };
        for n in 0..qmax {
            for p in 0..qmax - n {
                let (sm, sc) = (bc.dm(n, p), bc.dc(n, p));
                let src = bc.dim(n, p);
                if sm.cols() != src || sc.cols() != src || sm.rows() != bc.dim(n + 1, p) || sc.rows() != bc.dim(n, p + 1)
                {
                    return Err(Error::DimensionMismatch(format!("differentials at ({n},{p})")));
                }
            }
        }
        Ok(bc)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn qmax(&self) -> usize {
        self.qmax
    }

    pub fn dim(&self, n: usize, p: usize) -> usize {
        self.dims[n][p]
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    pub fn dm(&self, n: usize, p: usize) -> &SparseMatrix {
        &self.dm[n][p]
    }

    pub fn dc(&self, n: usize, p: usize) -> &SparseMatrix {
        &self.dc[n][p]
    }

    /// Offsets of the blocks `(n, q-n)` of `Tot^q`, ordered by `n`, and the total size.
    pub fn block_offsets(&self, q: usize) -> (Vec<usize>, usize) {
        let mut off = Vec::with_capacity(q + 1);
        let mut acc = 0;
        for n in 0..=q {
            off.push(acc);
            acc += self.dim(n, q - n);
        }
        (off, acc)
    }

    /// `D = d_m + (-1)^n d_c` from `Tot^q` to `Tot^{q+1}`.
    pub fn total_differential(&self, q: usize) -> Result<SparseMatrix> {
        if q >= self.qmax {
            return Err(Error::IndexOutOfRange(format!("Tot^{q} differential, qmax = {}", self.qmax)));
        }
        let (src, cols) = self.block_offsets(q);
        let (dst, rows) = self.block_offsets(q + 1);
        let one = self.field.one();
        let mut trip = Vec::new();
        for n in 0..=q {
            let p = q - n;
            self.dm(n, p).push_block(dst[n + 1], src[n], &one, &mut trip);
            self.dc(n, p).push_block(dst[n], src[n], &one.signed(n), &mut trip);
        }
        SparseMatrix::from_triplets(rows, cols, self.field, trip)
    }
}

/// One row of a total cohomology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub q: usize,
    pub total_dim: usize,
    pub kernel_dim: usize,
    /// Rank of `D^{q-1}`.
    pub image_dim: usize,
    pub h: usize,
}

/// `dim Hᵠ(Tot)` for `q ≤ qmax - 1`. The image of `D^{q-1}` is checked to
/// lie in the kernel of `D^q` before taking the quotient.
pub fn total_cohomology(bc: &Bicomplex) -> Result<Vec<DegreeRow>> {
    let mut out = Vec::new();
    let mut incoming: Option<Subspace> = None;
    for q in 0..bc.qmax() {
        let d = bc.total_differential(q)?;
        let ker = Subspace::kernel_of(&d)?;
        let im = match incoming.take() {
            Some(s) => s,
            None => Subspace::zero(d.cols(), bc.field()),
        };
        let h = quotient_dim(&ker, &im)?;
        out.push(DegreeRow { q, total_dim: d.cols(), kernel_dim: ker.dim(), image_dim: im.dim(), h });
        incoming = Some(Subspace::image_of(&d)?);
    }
    Ok(out)
}

/// The family a checked identity belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityFamily {
    /// `b_j b_i = b_i b_{j-1}` for `i < j`.
    FaceB,
    /// `c_j c_i = c_i c_{j-1}` for `i < j`.
    FaceC,
    /// `c_j b_i = b_i c_j`.
    Mixed,
    DmSquared,
    DcSquared,
    /// `d_c d_m = d_m d_c`.
    Commute,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub family: IdentityFamily,
    pub n: usize,
    pub p: usize,
    pub i: usize,
    pub j: usize,
    /// Nonzero entries of the difference.
    pub nnz: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checked: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum FaceKey {
    B(usize, usize, usize),
    C(usize, usize, usize),
}

struct FaceCache<'s> {
    src: &'s dyn FaceSource,
    map: HashMap<FaceKey, SparseMatrix>,
}

impl FaceCache<'_> {
    fn get(&mut self, key: FaceKey) -> Result<&SparseMatrix> {
        if !self.map.contains_key(&key) {
            let m = match key {
                FaceKey::B(n, p, i) => self.src.face_b(n, p, i)?,
                FaceKey::C(n, p, j) => self.src.face_c(n, p, j)?,
            };
            self.map.insert(key, m);
        }
        Ok(&self.map[&key])
    }

    fn compose(&mut self, outer: FaceKey, inner: FaceKey) -> Result<SparseMatrix> {
        let a = self.get(inner)?.clone();
        self.get(outer)?.mul(&a)
    }
}

/// Checks every cosimplicial and mixed face identity with source bidegree
/// `n + p + 2 ≤ qmax`, and `d² = 0`, `d_c d_m = d_m d_c` on the same range.
pub fn verify_bicomplex_identities(src: &dyn FaceSource, qmax: usize) -> Result<IdentityReport> {
    let mut cache = FaceCache { src, map: HashMap::new() };
    let mut report = IdentityReport::default();
    let record = |report: &mut IdentityReport, diff: SparseMatrix, family, n, p, i, j| {
        report.checked += 1;
        if !diff.is_zero() {
            report.failures.push(IdentityFailure { family, n, p, i, j, nnz: diff.nnz() });
        }
    };
    use FaceKey::{B, C};
    let Some(top) = qmax.checked_sub(2) else {
        return Ok(report);
    };
    for total in 0..=top {
        for n in 0..=total {
            let p = total - n;
            for j in 1..=n + 2 {
                for i in 0..j {
                    let lhs = cache.compose(B(n + 1, p, j), B(n, p, i))?;
                    let rhs = cache.compose(B(n + 1, p, i), B(n, p, j - 1))?;
                    record(&mut report, lhs.sub(&rhs)?, IdentityFamily::FaceB, n, p, i, j);
                }
            }
            for j in 1..=p + 2 {
                for i in 0..j {
                    let lhs = cache.compose(C(n, p + 1, j), C(n, p, i))?;
                    let rhs = cache.compose(C(n, p + 1, i), C(n, p, j - 1))?;
                    record(&mut report, lhs.sub(&rhs)?, IdentityFamily::FaceC, n, p, i, j);
                }
            }
            for i in 0..=n + 1 {
                for j in 0..=p + 1 {
                    let lhs = cache.compose(C(n + 1, p, j), B(n, p, i))?;
                    let rhs = cache.compose(B(n, p + 1, i), C(n, p, j))?;
                    record(&mut report, lhs.sub(&rhs)?, IdentityFamily::Mixed, n, p, i, j);
                }
            }
            let (dm0, dm1, dm_up) = (src.dm(n, p)?, src.dm(n + 1, p)?, src.dm(n, p + 1)?);
            let (dc0, dc1, dc_right) = (src.dc(n, p)?, src.dc(n, p + 1)?, src.dc(n + 1, p)?);
            record(&mut report, dm1.mul(&dm0)?, IdentityFamily::DmSquared, n, p, 0, 0);
            record(&mut report, dc1.mul(&dc0)?, IdentityFamily::DcSquared, n, p, 0, 0);
            let comm = dc_right.mul(&dm0)?.sub(&dm_up.mul(&dc0)?)?;
            record(&mut report, comm, IdentityFamily::Commute, n, p, 0, 0);
        }
    }
    Ok(report)
}

/// Total cohomology together with the identity verdicts that justify it.
#[derive(Clone, Debug, Serialize)]
pub struct CohomologyReport {
    pub theory: String,
    pub field: String,
    pub qmax: usize,
    pub dims: Vec<Vec<usize>>,
    pub degrees: Vec<DegreeRow>,
    pub identities: Option<IdentityReport>,
}

impl CohomologyReport {
    pub fn h(&self, q: usize) -> Option<usize> {
        self.degrees.iter().find(|r| r.q == q).map(|r| r.h)
    }

    pub fn h_vector(&self) -> Vec<usize> {
        self.degrees.iter().map(|r| r.h).collect()
    }
}

pub fn cohomology_report(bc: &Bicomplex, identities: Option<IdentityReport>) -> Result<CohomologyReport> {
    Ok(CohomologyReport {
        theory: bc.kind.clone(),
        field: bc.field().to_string(),
        qmax: bc.qmax(),
        dims: bc.dims().to_vec(),
        degrees: total_cohomology(bc)?,
        identities,
    })
}
