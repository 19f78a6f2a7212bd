//! Sparse exact elimination.
//!
//! Columns are visited in a fixed order: shortest columns first (fewest
//! nonzeros in the input), ties broken by column index. Rows are inserted in
//! index order and each becomes a pivot row on its leading surviving entry,
//! so the pivot for a column is the lowest-index row that reaches it. The
//! whole procedure is deterministic.
//!
//! Over prime fields rows are normalized to a unit pivot. Over the
//! rationals rows are cleared to primitive integer vectors and eliminated
//! fraction-free (`pivot * row - coeff * pivot_row`, then divided by the
//! content), which keeps coefficient growth in check; back-substitution to
//! reduced form happens once, at the end, in exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{inv_mod, mul_mod, FieldSpec, Scalar};
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::Result;

type Row<E> = Vec<(usize, E)>;

trait Arith {
    type E: Clone;
    /// Returns `pv * target - t * pivot` (or the field analogue with `pv = 1`).
    fn combine(&self, target: &Row<Self::E>, t: &Self::E, pivot: &Row<Self::E>) -> Row<Self::E>;
    fn finish(&self, row: &mut Row<Self::E>);
}

struct ModP(u64);

impl Arith for ModP {
    type E = u64;

    fn combine(&self, target: &Row<u64>, t: &u64, pivot: &Row<u64>) -> Row<u64> {
        // pivot rows carry a unit leading entry
        let p = self.0;
        let s = (p - t) % p;
        let mut out = Vec::with_capacity(target.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            if j == pivot.len() || (i < target.len() && target[i].0 < pivot[j].0) {
                out.push(target[i]);
                i += 1;
            } else if i == target.len() || pivot[j].0 < target[i].0 {
                out.push((pivot[j].0, mul_mod(s, pivot[j].1, p)));
                j += 1;
            } else {
                let v = (target[i].1 + mul_mod(s, pivot[j].1, p)) % p;
                if v != 0 {
                    out.push((target[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    fn finish(&self, row: &mut Row<u64>) {
        let inv = inv_mod(row[0].1, self.0);
        for e in row.iter_mut() {
            e.1 = mul_mod(e.1, inv, self.0);
        }
    }
}

struct FractionFree;

impl FractionFree {
    fn primitive(row: &mut Row<BigInt>) {
        let mut g = BigInt::zero();
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if row.first().is_some_and(|e| e.1.is_negative()) {
            g = -g;
        }
        if !g.is_one() && !g.is_zero() {
            for e in row.iter_mut() {
                e.1 = &e.1 / &g;
            }
        }
    }
}

impl Arith for FractionFree {
    type E = BigInt;

    fn combine(&self, target: &Row<BigInt>, t: &BigInt, pivot: &Row<BigInt>) -> Row<BigInt> {
        let pv = &pivot[0].1;
        let g = pv.gcd(t);
        let (mt, mp) = (pv / &g, t / &g);
        let mut out = Vec::with_capacity(target.len() + pivot.len());
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < pivot.len() {
            if j == pivot.len() || (i < target.len() && target[i].0 < pivot[j].0) {
                out.push((target[i].0, &mt * &target[i].1));
                i += 1;
            } else if i == target.len() || pivot[j].0 < target[i].0 {
                out.push((pivot[j].0, -(&mp * &pivot[j].1)));
                j += 1;
            } else {
                let v = &mt * &target[i].1 - &mp * &pivot[j].1;
                if !v.is_zero() {
                    out.push((target[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        FractionFree::primitive(&mut out);
        out
    }

    fn finish(&self, row: &mut Row<BigInt>) {
        FractionFree::primitive(row);
    }
}

/// Echelon form in key coordinates: each pivot row's first entry is its pivot.
fn echelon<A: Arith>(arith: &A, rows: Vec<Row<A::E>>, ncols: usize) -> Vec<Row<A::E>> {
    let mut pivot_of_key: Vec<Option<usize>> = vec![None; ncols];
    let mut pivots: Vec<Row<A::E>> = Vec::new();
    for mut row in rows {
        let mut pos = 0;
        while pos < row.len() {
            let key = row[pos].0;
            match pivot_of_key[key] {
                Some(pi) => {
                    let t = row[pos].1.clone();
                    row = arith.combine(&row, &t, &pivots[pi]);
                }
                None => pos += 1,
            }
        }
        if !row.is_empty() {
            arith.finish(&mut row);
            pivot_of_key[row[0].0] = Some(pivots.len());
            pivots.push(row);
        }
    }
    pivots
}

/// Column visiting order. `defer` columns are placed after all others.
fn column_keys(m_rows: &[SparseVec], ncols: usize, defer: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut counts = vec![0usize; ncols];
    for row in m_rows {
        for (c, _) in row {
            counts[*c] += 1;
        }
    }
    let mut deferred = vec![false; ncols];
    for &c in defer {
        deferred[c] = true;
    }
    let mut order: Vec<usize> = (0..ncols).collect();
    order.sort_by_key(|&c| (deferred[c], counts[c], c));
    let mut key_of = vec![0usize; ncols];
    for (k, &c) in order.iter().enumerate() {
        key_of[c] = k;
    }
    (key_of, order)
}

fn keyed<E: Clone>(row: &SparseVec, key_of: &[usize], conv: impl Fn(&Scalar) -> E) -> Row<E> {
    let mut r: Row<E> = row.iter().map(|(c, v)| (key_of[*c], conv(v))).collect();
    r.sort_by_key(|e| e.0);
    r
}

fn rational_rows(rows: &[SparseVec], key_of: &[usize]) -> Vec<Row<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for (_, v) in row {
                if let Scalar::Rational(q) = v {
                    lcm = lcm.lcm(q.denom());
                }
            }
            keyed(row, key_of, |v| match v {
                Scalar::Rational(q) => q.numer() * (&lcm / q.denom()),
                Scalar::Mod { .. } => unreachable!("checked field"),
            })
        })
        .collect()
}

fn mod_rows(rows: &[SparseVec], key_of: &[usize]) -> Vec<Row<u64>> {
    rows.iter()
        .map(|row| {
            keyed(row, key_of, |v| match v {
                Scalar::Mod { value, .. } => *value,
                Scalar::Rational(_) => unreachable!("checked field"),
            })
        })
        .collect()
}

fn check_rows(field: FieldSpec, rows: &[SparseVec]) -> Result<()> {
    for row in rows {
        for (_, v) in row {
            field.check(v)?;
        }
    }
    Ok(())
}

/// Rank of raw rows over `field`; errors if an entry lives in another field.
pub fn rank_rows(field: FieldSpec, rows: &[SparseVec], ncols: usize) -> Result<usize> {
    check_rows(field, rows)?;
    let (key_of, _) = column_keys(rows, ncols, &[]);
    Ok(match field {
        FieldSpec::Rational => echelon(&FractionFree, rational_rows(rows, &key_of), ncols).len(),
        FieldSpec::Prime { p } => echelon(&ModP(p), mod_rows(rows, &key_of), ncols).len(),
    })
}

pub fn rank(m: &SparseMatrix) -> Result<usize> {
    rank_rows(m.field(), m.row_data(), m.cols())
}

/// Reduced row echelon form in original column indices.
#[derive(Clone, Debug)]
pub struct Rref {
    pub field: FieldSpec,
    pub cols: usize,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    /// Rows with a unit entry at their pivot and zeros at every other pivot column.
    pub rows: Vec<SparseVec>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Basis of the null space; vector for free column `f` has a 1 at `f`
    /// and 0 at every other free column.
    pub fn kernel(&self) -> (Vec<usize>, Vec<SparseVec>) {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![usize::MAX; self.cols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut vecs: Vec<Vec<(usize, Scalar)>> = free
            .iter()
            .map(|&f| vec![(f, self.field.one())])
            .collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            for (c, v) in row {
                if *c != pc {
                    vecs[slot[*c]].push((pc, -v));
                }
            }
        }
        for v in vecs.iter_mut() {
            v.sort_by_key(|e| e.0);
        }
        (free, vecs)
    }
}

/// Computes the RREF of `rows`; columns in `defer` are eliminated last.
pub fn rref_rows(
    field: FieldSpec,
    rows: &[SparseVec],
    ncols: usize,
    defer: &[usize],
) -> Result<Rref> {
    check_rows(field, rows)?;
    let (key_of, order) = column_keys(rows, ncols, defer);
    // echelon rows converted to scalar rows with unit pivots, keyed
    let mut ech: Vec<Vec<(usize, Scalar)>> = match field {
        FieldSpec::Rational => echelon(&FractionFree, rational_rows(rows, &key_of), ncols)
            .into_iter()
            .map(|r| {
                let lead = r[0].1.clone();
                r.into_iter()
                    .map(|(k, v)| (k, Scalar::Rational(BigRational::new(v, lead.clone()))))
                    .collect()
            })
            .collect(),
        FieldSpec::Prime { p } => echelon(&ModP(p), mod_rows(rows, &key_of), ncols)
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|(k, v)| (k, Scalar::Mod { value: v, modulus: p }))
                    .collect()
            })
            .collect(),
    };
    ech.sort_by_key(|r| r[0].0);
    let mut row_of_key: Vec<Option<usize>> = vec![None; ncols];
    for (i, r) in ech.iter().enumerate() {
        row_of_key[r[0].0] = Some(i);
    }
    for i in (0..ech.len()).rev() {
        let mut row = std::mem::take(&mut ech[i]);
        let mut pos = 1;
        while pos < row.len() {
            let key = row[pos].0;
            match row_of_key[key] {
                Some(j) if j != i => {
                    let t = -&row[pos].1;
                    row = super::sparse::axpy(&row, &t, &ech[j]);
                }
                _ => pos += 1,
            }
        }
        ech[i] = row;
    }
    let mut pivots = Vec::with_capacity(ech.len());
    let mut out = Vec::with_capacity(ech.len());
    for r in ech {
        pivots.push(order[r[0].0]);
        let mut orig: SparseVec = r.into_iter().map(|(k, v)| (order[k], v)).collect();
        orig.sort_by_key(|e| e.0);
        out.push(orig);
    }
    Ok(Rref {
        field,
        cols: ncols,
        pivots,
        rows: out,
    })
}

pub fn rref(m: &SparseMatrix) -> Result<Rref> {
    rref_rows(m.field(), m.row_data(), m.cols(), &[])
}

/// A solution `x` of `m x = rhs`, or `None` when the system is inconsistent.
pub fn solve(m: &SparseMatrix, rhs: &SparseVec) -> Result<Option<SparseVec>> {
    let n = m.cols();
    let mut rhs_dense: Vec<Option<Scalar>> = vec![None; m.rows()];
    for (i, v) in rhs {
        rhs_dense[*i] = Some(v.clone());
    }
    let rows: Vec<SparseVec> = m
        .row_data()
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut row = row.clone();
            if let Some(v) = rhs_dense[r].take() {
                row.push((n, v));
            }
            row
        })
        .collect();
    let red = rref_rows(m.field(), &rows, n + 1, &[n])?;
    if red.pivots.contains(&n) {
        return Ok(None);
    }
    let mut x = Vec::new();
    for (row, &pc) in red.rows.iter().zip(&red.pivots) {
        if let Some((_, v)) = row.iter().find(|e| e.0 == n) {
            x.push((pc, v.clone()));
        }
    }
    x.sort_by_key(|e| e.0);
    Ok(Some(x))
}

/// Inverse of a square matrix, or `None` when it is singular.
pub fn inverse(m: &SparseMatrix) -> Result<Option<SparseMatrix>> {
    if m.rows() != m.cols() {
        return Err(crate::error::Error::DimensionMismatch(format!(
            "inverse of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if rank(m)? < m.rows() {
        return Ok(None);
    }
    let one = m.field().one();
    let mut cols = Vec::with_capacity(m.cols());
    for j in 0..m.rows() {
        match solve(m, &vec![(j, one.clone())])? {
            Some(x) => cols.push(x),
            None => return Ok(None),
        }
    }
    SparseMatrix::from_columns(m.rows(), m.field(), &cols).map(Some)
}
