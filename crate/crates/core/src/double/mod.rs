//! Finite-dimensional algebras, the Drinfel'd double and its modules.

mod ext;

pub use ext::{compare_h_ext, ext_bar, CompareRow, Comparison};

use serde::Serialize;

use crate::bialgebra::{solve_antipode, AntipodeKind, Bialgebra};
use crate::error::{Error, Result};
use crate::linalg::{inverse, normalize_terms, FieldSpec, SparseMatrix, SparseVec};
use crate::structures::{check_yd, StructuredModule};

/// An associative unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub name: String,
    field: FieldSpec,
    dim: usize,
    mult: Vec<Vec<SparseVec>>,
    unit: SparseVec,
}

/// `[x][y][z]` for associativity, `[x]` for the unit laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraDefect {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

impl Algebra {
    pub fn new(name: impl Into<String>, field: FieldSpec, dim: usize, mult: Vec<Vec<SparseVec>>, unit: SparseVec) -> Result<Self> {
        if mult.len() != dim || mult.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!("multiplication table is not {dim}x{dim}")));
        }
        for v in mult.iter().flatten().chain(std::iter::once(&unit)) {
            for (i, s) in v {
                if *i >= dim {
                    return Err(Error::IndexOutOfRange(format!("basis index {i} in a {dim}-dimensional algebra")));
                }
                field.check(s)?;
            }
        }
        let mult = mult.into_iter().map(|r| r.into_iter().map(normalize_terms).collect()).collect();
        Ok(Algebra { name: name.into(), field, dim, mult, unit: normalize_terms(unit) })
    }

    /// The algebra underlying a bialgebra.
    pub fn of(b: &Bialgebra) -> Self {
        Algebra {
            name: b.name().to_string(),
            field: b.field(),
            dim: b.dim(),
            mult: b.mult_table().to_vec(),
            unit: b.unit().clone(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mult(&self, x: usize, y: usize) -> &SparseVec {
        &self.mult[x][y]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, s) in x {
            for (j, t) in y {
                let st = s * t;
                for (k, c) in &self.mult[*i][*j] {
                    terms.push((*k, &st * c));
                }
            }
        }
        normalize_terms(terms)
    }

    /// Associativity on all basis triples and both unit laws.
    pub fn check(&self) -> Vec<AlgebraDefect> {
        let mut out = Vec::new();
        let e = |i: usize| vec![(i, self.field.one())];
        for x in 0..self.dim {
            if self.mul_vec(&self.unit, &e(x)) != e(x) {
                out.push(AlgebraDefect { law: "left-unit", witness: vec![x] });
            }
            if self.mul_vec(&e(x), &self.unit) != e(x) {
                out.push(AlgebraDefect { law: "right-unit", witness: vec![x] });
            }
        }
        for x in 0..self.dim {
            for y in 0..self.dim {
                let xy = &self.mult[x][y];
                for z in 0..self.dim {
                    let lhs = self.mul_vec(xy, &e(z));
                    let rhs = self.mul_vec(&e(x), &self.mult[y][z]);
                    if lhs != rhs {
                        out.push(AlgebraDefect { law: "associativity", witness: vec![x, y, z] });
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|x| (0..x).all(|y| self.mult[x][y] == self.mult[y][x]))
    }
}

/// A left module over an [`Algebra`]: `act[x][u] = e_x·m_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraModule {
    pub name: String,
    pub dim: usize,
    act: Vec<Vec<SparseVec>>,
}

impl AlgebraModule {
    pub fn new(name: impl Into<String>, alg: &Algebra, dim: usize, act: Vec<Vec<SparseVec>>) -> Result<Self> {
        if act.len() != alg.dim() || act.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "action needs {}x{dim} columns",
                alg.dim()
            )));
        }
        for v in act.iter().flatten() {
            for (i, s) in v {
                if *i >= dim {
                    return Err(Error::IndexOutOfRange(format!("module index {i} >= {dim}")));
                }
                alg.field().check(s)?;
            }
        }
        let act = act.into_iter().map(|r| r.into_iter().map(normalize_terms).collect()).collect();
        Ok(AlgebraModule { name: name.into(), dim, act })
    }

    /// The left action of a structured module, forgetting everything else.
    pub fn from_structured(alg: &Algebra, m: &StructuredModule) -> Result<Self> {
        AlgebraModule::new(m.name.clone(), alg, m.dim, m.left()?.table().to_vec())
    }

    pub fn get(&self, x: usize, u: usize) -> &SparseVec {
        &self.act[x][u]
    }

    pub fn apply(&self, x: usize, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (u, s) in v {
            for (w, t) in &self.act[x][*u] {
                terms.push((*w, s * t));
            }
        }
        normalize_terms(terms)
    }

    pub fn apply_vec(&self, x: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (i, s) in x {
            for (w, t) in self.apply(*i, v) {
                terms.push((w, s * &t));
            }
        }
        normalize_terms(terms)
    }

    /// Unit and associativity defects of the action.
    pub fn check(&self, alg: &Algebra) -> Vec<AlgebraDefect> {
        let one = alg.field().one();
        let mut out = Vec::new();
        for u in 0..self.dim {
            let e = vec![(u, one.clone())];
            if self.apply_vec(alg.unit(), &e) != e {
                out.push(AlgebraDefect { law: "module-unit", witness: vec![u] });
            }
            for x in 0..alg.dim() {
                for y in 0..alg.dim() {
                    let lhs = self.apply_vec(alg.mult(x, y), &e);
                    let rhs = self.apply(x, &self.act[y][u]);
                    if lhs != rhs {
                        out.push(AlgebraDefect { law: "module-associativity", witness: vec![x, y, u] });
                    }
                }
            }
        }
        out
    }
}

/// `D(A)` on `A*⊗A`, basis `φ_i⊗e_j` at index `i·d + j`.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    pub algebra: Algebra,
    /// Name of the Hopf algebra it was built from.
    pub source: String,
    /// Dimension of that Hopf algebra.
    pub base_dim: usize,
}

impl DoubleAlgebra {
    pub fn index(&self, phi: usize, a: usize) -> usize {
        phi * self.base_dim + a
    }
}

/// The Drinfel'd double with the product
/// `(φ⊗a)(ψ⊗b) = Σ φ·(a₁⇀ψ↼S⁻¹(a₃)) ⊗ a₂b`.
pub fn drinfeld_double(b: &Bialgebra) -> Result<DoubleAlgebra> {
    let s = solve_antipode(b, AntipodeKind::Antipode)
        .ok_or_else(|| Error::Unsupported(format!("{} has no antipode", b.name())))?;
    let d = b.dim();
    let f = b.field();
    let s_mat = SparseMatrix::from_columns(d, f, &(0..d).map(|a| s.image(a)).collect::<Vec<_>>())?;
    let s_inv = inverse(&s_mat)?
        .ok_or_else(|| Error::Unsupported(format!("antipode of {} is not invertible", b.name())))?;
    let s_inv_cols = s_inv.columns();

    // convolution φ_i·φ_j = Σ_x Δ(e_x)[i, j] φ_x
    let mut conv = vec![vec![Vec::new(); d]; d];
    for x in 0..d {
        for (i, j, c) in b.comult(x) {
            conv[*i][*j].push((x, c.clone()));
        }
    }
    let conv: Vec<Vec<SparseVec>> = conv.into_iter().map(|r| r.into_iter().map(normalize_terms).collect()).collect();
    // (e_p ⇀ φ_j ↼ e_q)(e_x) = φ_j(e_q e_x e_p)
    let hit = |j: usize, p: usize, q: usize| -> SparseVec {
        let mut out = Vec::new();
        for x in 0..d {
            let qxp = b.mul_vec(b.mult(q, x), &b.basis_vec(p));
            if let Some((_, c)) = qxp.iter().find(|(k, _)| *k == j) {
                out.push((x, c.clone()));
            }
        }
        out
    };
    let deltas: Vec<_> = (0..d).map(|a| b.delta_iter_terms(a, 2)).collect();
    let n = d * d;
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..d {
        for p in 0..d {
            for j in 0..d {
                for r in 0..d {
                    let mut terms = Vec::new();
                    for (legs, c) in &deltas[p] {
                        let (a1, a2, a3) = (legs[0], legs[1], legs[2]);
                        let right_legs = b.mult(a2, r);
                        for (q, sq) in &s_inv_cols[a3] {
                            let cs = c * sq;
                            for (x, h) in hit(j, a1, *q) {
                                for (y, t) in &conv[i][x] {
                                    let coeff = &(&cs * &h) * t;
                                    for (z, u) in right_legs {
                                        terms.push((y * d + z, &coeff * u));
                                    }
                                }
                            }
                        }
                    }
                    mult[i * d + p][j * d + r] = normalize_terms(terms);
                }
            }
        }
    }
    // unit ε⊗1
    let mut unit = Vec::new();
    for (x, e) in b.counit().iter() {
        for (u, c) in b.unit() {
            unit.push((x * d + u, e * c));
        }
    }
    let algebra = Algebra::new(format!("D({})", b.name()), f, n, mult, unit)?;
    Ok(DoubleAlgebra { algebra, source: b.name().to_string(), base_dim: d })
}

/// `(φ_i⊗e_a)·m = Σ φ_i((a·m)₁)(a·m)₀`, with no axiom checks.
pub fn transport_action(dbl: &DoubleAlgebra, m: &StructuredModule) -> Result<AlgebraModule> {
    let d = dbl.base_dim;
    let (act, rho) = (m.left()?, m.rho()?);
    let mut table = vec![vec![Vec::new(); m.dim]; d * d];
    for a in 0..d {
        for u in 0..m.dim {
            for (w, s) in act.get(a, u) {
                for (w0, k, t) in rho.get(*w) {
                    table[k * d + a][u].push((*w0, s * t));
                }
            }
        }
    }
    AlgebraModule::new(m.name.clone(), &dbl.algebra, m.dim, table)
}

/// A Yetter-Drinfel'd module as a left `D(A)`-module. Failure of the module
/// axioms on a valid YD module means the double's convention is wrong.
pub fn transport_yd(b: &Bialgebra, dbl: &DoubleAlgebra, m: &StructuredModule) -> Result<AlgebraModule> {
    if let Some(d) = check_yd(b, m)?.first() {
        return Err(Error::Precondition(format!("{} fails {} at {:?}", m.name, d.check, d.witness)));
    }
    let t = transport_action(dbl, m)?;
    if let Some(d) = t.check(&dbl.algebra).first() {
        return Err(Error::ConventionMismatch(format!(
            "transported {} fails {} at {:?}",
            m.name, d.law, d.witness
        )));
    }
    Ok(t)
}
