//! Finite-dimensional bialgebras given by structure constants.

mod antipode;
pub mod catalog;

pub use antipode::{solve_antipode, Antipode, AntipodeKind};

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{normalize_terms, Budget, FieldSpec, Scalar, SparseMatrix, SparseVec};

/// Coproduct terms `(b, c, coeff)` of some `Δ(e_a)`.
pub type CoproductTerms = Vec<(usize, usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    name: String,
    field: FieldSpec,
    dim: usize,
    mult: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    comult: Vec<CoproductTerms>,
    counit: SparseVec,
    counit_dense: Vec<Scalar>,
}

fn normalize_pairs(terms: CoproductTerms, dim: usize) -> CoproductTerms {
    let flat = terms.into_iter().map(|(b, c, s)| (b * dim + c, s)).collect();
    normalize_terms(flat)
        .into_iter()
        .map(|(k, s)| (k / dim, k % dim, s))
        .collect()
}

impl Bialgebra {
    /// Validates shapes and fields and canonicalizes the structure constants.
    /// Axioms are not checked here; see [`verify_bialgebra`].
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        dim: usize,
        mult: Vec<Vec<SparseVec>>,
        unit: SparseVec,
        comult: Vec<CoproductTerms>,
        counit: SparseVec,
    ) -> Result<Self> {
        let oob = |what: &str, i: usize| {
            Error::DimensionMismatch(format!("{what}: basis index {i} >= dim {dim}"))
        };
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "multiplication table must be {dim}x{dim}"
            )));
        }
        if comult.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication must have {dim} entries"
            )));
        }
        let mut canon_mult = Vec::with_capacity(dim);
        for row in mult {
            let mut out_row = Vec::with_capacity(dim);
            for terms in row {
                for (c, s) in &terms {
                    if *c >= dim {
                        return Err(oob("mult", *c));
                    }
                    field.check(s)?;
                }
                out_row.push(normalize_terms(terms));
            }
            canon_mult.push(out_row);
        }
        let mut canon_comult = Vec::with_capacity(dim);
        for terms in comult {
            for (b, c, s) in &terms {
                if *b >= dim || *c >= dim {
                    return Err(oob("comult", (*b).max(*c)));
                }
                field.check(s)?;
            }
            canon_comult.push(normalize_pairs(terms, dim));
        }
        for (what, v) in [("unit", &unit), ("counit", &counit)] {
            for (i, s) in v {
                if *i >= dim {
                    return Err(oob(what, *i));
                }
                field.check(s)?;
            }
        }
        let unit = normalize_terms(unit);
        let counit = normalize_terms(counit);
        let mut counit_dense = vec![field.zero(); dim];
        for (i, s) in &counit {
            counit_dense[*i] = s.clone();
        }
        Ok(Bialgebra {
            name: name.into(),
            field,
            dim,
            mult: canon_mult,
            unit,
            comult: canon_comult,
            counit,
            counit_dense,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self, a: usize, b: usize) -> &SparseVec {
        &self.mult[a][b]
    }

    pub fn mult_table(&self) -> &[Vec<SparseVec>] {
        &self.mult
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn comult(&self, a: usize) -> &CoproductTerms {
        &self.comult[a]
    }

    pub fn comult_table(&self) -> &[CoproductTerms] {
        &self.comult
    }

    pub fn counit(&self) -> &SparseVec {
        &self.counit
    }

    pub fn counit_of(&self, a: usize) -> &Scalar {
        &self.counit_dense[a]
    }

    /// Product of two vectors of `A`.
    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (a, s) in x {
            for (b, t) in y {
                let st = s * t;
                for (c, u) in &self.mult[*a][*b] {
                    terms.push((*c, &st * u));
                }
            }
        }
        normalize_terms(terms)
    }

    /// `e_{k_1} e_{k_2} ... e_{k_r}`, left to right; the empty product is the unit.
    pub fn product(&self, factors: &[usize]) -> SparseVec {
        let mut acc = self.unit.clone();
        for &k in factors {
            acc = self.mul_vec(&acc, &vec![(k, self.field.one())]);
        }
        acc
    }

    pub fn basis_vec(&self, a: usize) -> SparseVec {
        vec![(a, self.field.one())]
    }

    pub fn counit_vec(&self, x: &SparseVec) -> Scalar {
        let mut acc = self.field.zero();
        for (a, s) in x {
            acc = &acc + &(s * &self.counit_dense[*a]);
        }
        acc
    }

    /// Terms of the iterated coproduct `Δ_p(e_a)` as `(legs, coeff)` with
    /// `p + 1` legs; `Δ_0 = id`, `Δ_p = (Δ ⊗ id^{p-1}) ∘ Δ_{p-1}`.
    pub fn delta_iter_terms(&self, a: usize, p: usize) -> Vec<(Vec<usize>, Scalar)> {
        let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(vec![a], self.field.one())];
        for _ in 0..p {
            let mut next: Vec<(Vec<usize>, Scalar)> = Vec::new();
            for (legs, s) in &terms {
                for (b, c, t) in &self.comult[legs[0]] {
                    let mut nl = Vec::with_capacity(legs.len() + 1);
                    nl.push(*b);
                    nl.push(*c);
                    nl.extend_from_slice(&legs[1..]);
                    next.push((nl, s * t));
                }
            }
            terms = merge_leg_terms(next, self.dim);
        }
        terms
    }

    /// Matrix of `Δ_p : A → A^{p+1}`, output legs flattened most-significant first.
    pub fn delta_iter(&self, p: usize, budget: Budget) -> Result<SparseMatrix> {
        let rows = self.dim.pow(p as u32 + 1);
        budget.check(rows, self.dim, format!("delta_iter({p})"))?;
        let mut trip = Vec::new();
        for a in 0..self.dim {
            for (legs, s) in self.delta_iter_terms(a, p) {
                trip.push((flatten(&legs, self.dim), a, s));
            }
        }
        SparseMatrix::from_triplets(rows, self.dim, self.field, trip)
    }

    /// Matrix of `id^i ⊗ Δ ⊗ id^{k-1-i}` on `A^k`.
    pub fn delta_at(&self, k: usize, i: usize, budget: Budget) -> Result<SparseMatrix> {
        let d = self.dim;
        let cols = d.pow(k as u32);
        let rows = cols * d;
        budget.check(rows, cols, "delta_at")?;
        let mut trip = Vec::new();
        for x in 0..cols {
            let legs = unflatten(x, d, k);
            for (b, c, s) in &self.comult[legs[i]] {
                let mut nl = legs[..i].to_vec();
                nl.push(*b);
                nl.push(*c);
                nl.extend_from_slice(&legs[i + 1..]);
                trip.push((flatten(&nl, d), x, s.clone()));
            }
        }
        SparseMatrix::from_triplets(rows, cols, self.field, trip)
    }

    /// Renames the bialgebra.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

fn merge_leg_terms(terms: Vec<(Vec<usize>, Scalar)>, dim: usize) -> Vec<(Vec<usize>, Scalar)> {
    let Some(len) = terms.first().map(|t| t.0.len()) else {
        return terms;
    };
    let flat = terms
        .into_iter()
        .map(|(legs, s)| (flatten(&legs, dim), s))
        .collect();
    normalize_terms(flat)
        .into_iter()
        .map(|(k, s)| (unflatten(k, dim, len), s))
        .collect()
}

/// Mixed-radix index, most significant digit first.
pub fn flatten(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * base + x)
}

pub fn unflatten(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    /// `Δ` and `ε` are unital algebra morphisms.
    Compatibility,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Compatibility => "bialgebra compatibility",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// Basis indices at which the identity fails.
    pub witness: Vec<usize>,
    /// `lhs - rhs` in the flattened target space.
    pub defect: SparseVec,
}

pub(crate) fn diff(field: FieldSpec, lhs: &SparseVec, rhs: &SparseVec) -> SparseVec {
    crate::linalg::axpy(lhs, &-&field.one(), rhs)
}

/// Exact check of the bialgebra axioms; an empty list means all hold.
pub fn verify_bialgebra(b: &Bialgebra) -> Vec<AxiomViolation> {
    let d = b.dim;
    let f = b.field;
    let mut out = Vec::new();
    let mut report = |axiom, witness: Vec<usize>, defect: SparseVec| {
        if !defect.is_empty() {
            out.push(AxiomViolation { axiom, witness, defect });
        }
    };
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let lhs = b.mul_vec(&b.mult[x][y], &b.basis_vec(z));
                let rhs = b.mul_vec(&b.basis_vec(x), &b.mult[y][z]);
                report(Axiom::Associativity, vec![x, y, z], diff(f, &lhs, &rhs));
            }
        }
    }
    for x in 0..d {
        let ex = b.basis_vec(x);
        report(Axiom::Unit, vec![x], diff(f, &b.mul_vec(&b.unit, &ex), &ex));
        report(Axiom::Unit, vec![x], diff(f, &b.mul_vec(&ex, &b.unit), &ex));
    }
    for a in 0..d {
        // (Δ⊗id)Δ vs (id⊗Δ)Δ
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for (x, y, s) in &b.comult[a] {
            for (u, v, t) in &b.comult[*x] {
                lhs.push((flatten(&[*u, *v, *y], d), s * t));
            }
            for (u, v, t) in &b.comult[*y] {
                rhs.push((flatten(&[*x, *u, *v], d), s * t));
            }
        }
        report(
            Axiom::Coassociativity,
            vec![a],
            diff(f, &normalize_terms(lhs), &normalize_terms(rhs)),
        );
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (x, y, s) in &b.comult[a] {
            left.push((*y, s * &b.counit_dense[*x]));
            right.push((*x, s * &b.counit_dense[*y]));
        }
        report(Axiom::Counit, vec![a], diff(f, &normalize_terms(left), &b.basis_vec(a)));
        report(Axiom::Counit, vec![a], diff(f, &normalize_terms(right), &b.basis_vec(a)));
    }
    for x in 0..d {
        for y in 0..d {
            // Δ(xy) = Δ(x)Δ(y)
            let mut lhs = Vec::new();
            for (c, s) in &b.mult[x][y] {
                for (u, v, t) in &b.comult[*c] {
                    lhs.push((u * d + v, s * t));
                }
            }
            let mut rhs = Vec::new();
            for (x1, x2, s) in &b.comult[x] {
                for (y1, y2, t) in &b.comult[y] {
                    let st = s * t;
                    for (u, p) in &b.mult[*x1][*y1] {
                        for (v, q) in &b.mult[*x2][*y2] {
                            rhs.push((u * d + v, &st * &(p * q)));
                        }
                    }
                }
            }
            report(
                Axiom::Compatibility,
                vec![x, y],
                diff(f, &normalize_terms(lhs), &normalize_terms(rhs)),
            );
            let eps_xy = b.counit_vec(&b.mult[x][y]);
            let prod = &b.counit_dense[x] * &b.counit_dense[y];
            let defect = &eps_xy - &prod;
            report(
                Axiom::Compatibility,
                vec![x, y],
                if defect.is_zero() { vec![] } else { vec![(0, defect)] },
            );
        }
    }
    // Δ(1) = 1⊗1, ε(1) = 1
    let mut delta_unit = Vec::new();
    for (a, s) in &b.unit {
        for (u, v, t) in &b.comult[*a] {
            delta_unit.push((u * d + v, s * t));
        }
    }
    let mut unit_unit = Vec::new();
    for (a, s) in &b.unit {
        for (c, t) in &b.unit {
            unit_unit.push((a * d + c, s * t));
        }
    }
    report(
        Axiom::Compatibility,
        vec![],
        diff(f, &normalize_terms(delta_unit), &normalize_terms(unit_unit)),
    );
    let eps_one = &b.counit_vec(&b.unit) - &b.field.one();
    report(
        Axiom::Compatibility,
        vec![],
        if eps_one.is_zero() { vec![] } else { vec![(0, eps_one)] },
    );
    out
}
