use super::{check_hopf_module, ModuleClass, StructuredModule};
use crate::bialgebra::{solve_antipode, AntipodeKind, Bialgebra, CoproductTerms};
use crate::error::{Error, Result};
use crate::linalg::{inverse, normalize_terms, Budget, Scalar, SparseMatrix, SparseVec, Subspace};

/// The one-dimensional module `k`: `a·1 = ε(a)`, `1 ↦ 1⊗1`.
pub fn trivial_yd(b: &Bialgebra) -> StructuredModule {
    let act = (0..b.dim())
        .map(|a| {
            let e = b.counit_of(a);
            vec![if e.is_zero() { vec![] } else { vec![(0, e.clone())] }]
        })
        .collect();
    let coact = vec![b.unit().iter().map(|(e, s)| (0, *e, s.clone())).collect()];
    StructuredModule::new("k", b.field(), 1, ModuleClass::Yd)
        .with_left_action(act)
        .and_then(|m| m.with_right_coaction(coact))
        .expect("trivial module shapes")
}

/// One-dimensional module with `a·1 = χ(a)` and `1 ↦ 1⊗e_g`.
pub fn one_dimensional(
    b: &Bialgebra,
    name: &str,
    chi: &[Scalar],
    degree: usize,
    class: ModuleClass,
) -> Result<StructuredModule> {
    if chi.len() != b.dim() || degree >= b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{name}: character needs {} values and a degree below that",
            b.dim()
        )));
    }
    let act = chi
        .iter()
        .map(|c| vec![if c.is_zero() { vec![] } else { vec![(0, c.clone())] }])
        .collect();
    StructuredModule::new(name, b.field(), 1, class)
        .with_left_action(act)?
        .with_right_coaction(vec![vec![(0, degree, b.field().one())]])
}

/// Module given by one action matrix per basis element (column `u` is
/// `e_a·m_u`) and a grading `m_u ↦ m_u⊗e_{degrees[u]}`.
pub fn from_matrices(
    b: &Bialgebra,
    name: &str,
    action: &[SparseMatrix],
    degrees: &[usize],
    class: ModuleClass,
) -> Result<StructuredModule> {
    let dim = degrees.len();
    if action.len() != b.dim() || action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "{name}: need {} square action matrices of size {dim}",
            b.dim()
        )));
    }
    let act = action.iter().map(|m| m.columns()).collect();
    let one = b.field().one();
    let coact = degrees.iter().enumerate().map(|(u, &g)| vec![(u, g, one.clone())]).collect();
    StructuredModule::new(name, b.field(), dim, class)
        .with_left_action(act)?
        .with_right_coaction(coact)
}

fn regular_left(b: &Bialgebra) -> Vec<Vec<SparseVec>> {
    (0..b.dim())
        .map(|a| (0..b.dim()).map(|x| b.mult(a, x).clone()).collect())
        .collect()
}

fn regular_right(b: &Bialgebra) -> Vec<Vec<SparseVec>> {
    (0..b.dim())
        .map(|a| (0..b.dim()).map(|x| b.mult(x, a).clone()).collect())
        .collect()
}

/// `A` with left multiplication and `Δ` as right coaction.
pub fn regular_hopf_module(b: &Bialgebra) -> StructuredModule {
    StructuredModule::new(format!("{} (regular)", b.name()), b.field(), b.dim(), ModuleClass::Hopf)
        .with_left_action(regular_left(b))
        .and_then(|m| m.with_right_coaction(b.comult_table().to_vec()))
        .expect("regular module shapes")
}

/// `A` with both multiplications and `Δ` as both coactions.
pub fn regular_bimodule(b: &Bialgebra) -> StructuredModule {
    regular_hopf_module(b)
        .with_class(ModuleClass::HopfBimodule)
        .with_name(format!("{} (regular bimodule)", b.name()))
        .with_right_action(regular_right(b))
        .and_then(|m| m.with_left_coaction(b.comult_table().to_vec()))
        .expect("regular module shapes")
}

/// `V⊗A` with `a·(v⊗x) = v⊗ax` and `ρ(v⊗x) = Σ v⊗x₁⊗x₂`; basis index `v·d + x`.
pub fn free_hopf_module(dim_v: usize, b: &Bialgebra, budget: Budget) -> Result<StructuredModule> {
    if dim_v == 0 {
        return Err(Error::Precondition("free Hopf module needs dim V >= 1".into()));
    }
    let d = b.dim();
    let dim = dim_v * d;
    budget.check(dim, dim * d, "free Hopf module")?;
    let act = (0..d)
        .map(|a| {
            (0..dim)
                .map(|u| {
                    let (v, x) = (u / d, u % d);
                    b.mult(a, x).iter().map(|(y, s)| (v * d + y, s.clone())).collect()
                })
                .collect()
        })
        .collect();
    let coact = (0..dim)
        .map(|u| {
            let (v, x) = (u / d, u % d);
            b.comult(x).iter().map(|(x1, x2, s)| (v * d + x1, *x2, s.clone())).collect()
        })
        .collect();
    StructuredModule::new(format!("k^{dim_v} (x) {}", b.name()), b.field(), dim, ModuleClass::Hopf)
        .with_left_action(act)?
        .with_right_coaction(coact)
}

/// `A⊗V⊗A` with outer actions and the diagonal coactions
/// `ρ(x⊗v⊗y) = Σ x₁⊗v⊗y₁ ⊗ x₂y₂`, `λ(x⊗v⊗y) = Σ x₁y₁ ⊗ x₂⊗v⊗y₂`.
/// Basis index `(x·dimV + v)·d + y`.
pub fn free_hopf_bimodule(dim_v: usize, b: &Bialgebra, budget: Budget) -> Result<StructuredModule> {
    if dim_v == 0 {
        return Err(Error::Precondition("free Hopf bimodule needs dim V >= 1".into()));
    }
    let d = b.dim();
    let dim = d * dim_v * d;
    budget.check(dim, dim * d, "free Hopf bimodule")?;
    let idx = |x: usize, v: usize, y: usize| (x * dim_v + v) * d + y;
    let split = |u: usize| (u / (dim_v * d), (u / d) % dim_v, u % d);
    let mut left = vec![vec![Vec::new(); dim]; d];
    let mut right = vec![vec![Vec::new(); dim]; d];
    for a in 0..d {
        for u in 0..dim {
            let (x, v, y) = split(u);
            left[a][u] = b.mult(a, x).iter().map(|(c, s)| (idx(*c, v, y), s.clone())).collect();
            right[a][u] = b.mult(y, a).iter().map(|(c, s)| (idx(x, v, *c), s.clone())).collect();
        }
    }
    let mut rho: Vec<CoproductTerms> = vec![Vec::new(); dim];
    let mut lam: Vec<CoproductTerms> = vec![Vec::new(); dim];
    for u in 0..dim {
        let (x, v, y) = split(u);
        for (x1, x2, s) in b.comult(x) {
            for (y1, y2, t) in b.comult(y) {
                let st = s * t;
                for (z, r) in b.mult(*x2, *y2) {
                    rho[u].push((idx(*x1, v, *y1), *z, &st * r));
                }
                for (z, r) in b.mult(*x1, *y1) {
                    lam[u].push((*z, idx(*x2, v, *y2), &st * r));
                }
            }
        }
    }
    StructuredModule::new(
        format!("{0} (x) k^{dim_v} (x) {0}", b.name()),
        b.field(),
        dim,
        ModuleClass::HopfBimodule,
    )
    .with_left_action(left)?
    .with_right_action(right)?
    .with_right_coaction(rho)?
    .with_left_coaction(lam)
}

/// `{m : ρ(m) = m⊗1}`, as the kernel of `ρ - id⊗η`.
pub fn coinvariants(b: &Bialgebra, m: &StructuredModule) -> Result<Subspace> {
    let rho = m.rho()?;
    let d = b.dim();
    let minus = -&b.field().one();
    let cols: Vec<SparseVec> = (0..m.dim)
        .map(|u| {
            let mut terms: Vec<(usize, Scalar)> =
                rho.get(u).iter().map(|(u0, a, s)| (u0 * d + a, s.clone())).collect();
            terms.extend(b.unit().iter().map(|(e, s)| (u * d + e, s * &minus)));
            normalize_terms(terms)
        })
        .collect();
    Subspace::kernel_of(&SparseMatrix::from_columns(m.dim * d, b.field(), &cols)?)
}

/// The isomorphism `V⊗A ≅ M` for a Hopf module over a bialgebra with skew
/// antipode; `V = coinvariants(M)` with its selector basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub coinvariants: Subspace,
    /// `V⊗A → M`, column `j·d + a` is `e_a·v_j`.
    pub forward: SparseMatrix,
    /// `M → V⊗A`, `m ↦ Σ P(m₀)⊗m₁` with `P(m) = Σ S̄(m₁)·m₀`.
    pub inverse: SparseMatrix,
    /// `P` as a map from `M` to coordinates in `V`.
    pub projection: SparseMatrix,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::DecompositionFailure(msg.into())
}

pub fn fundamental_decomposition(b: &Bialgebra, m: &StructuredModule) -> Result<Decomposition> {
    let skew = solve_antipode(b, AntipodeKind::Skew)
        .ok_or_else(|| Error::Unsupported(format!("{} has no skew antipode", b.name())))?;
    if let Some(d) = check_hopf_module(b, m)?.first() {
        return Err(fail(format!("not a Hopf module: {} fails at {:?}", d.check, d.witness)));
    }
    let act = m.left()?;
    let rho = m.rho()?;
    let d = b.dim();
    let field = b.field();
    let v = coinvariants(b, m)?;
    let dv = v.dim();

    let mut fwd_cols = Vec::with_capacity(dv * d);
    for basis in v.basis() {
        for a in 0..d {
            fwd_cols.push(act.apply(a, basis));
        }
    }
    let forward = SparseMatrix::from_columns(m.dim, field, &fwd_cols)?;

    let mut proj_cols = Vec::with_capacity(m.dim);
    for u in 0..m.dim {
        let mut pm: SparseVec = Vec::new();
        for (u0, m1, s) in rho.get(u) {
            let sb = skew.image(*m1);
            let piece = act.apply_vec(&sb, &vec![(*u0, s.clone())]);
            pm = crate::linalg::axpy(&pm, &field.one(), &piece);
        }
        let coords = v
            .coordinates_sparse(&pm)
            .ok_or_else(|| fail(format!("projection of basis vector {u} is not coinvariant")))?;
        proj_cols.push(coords);
    }
    let projection = SparseMatrix::from_columns(dv, field, &proj_cols)?;

    let proj_rows = projection.transpose();
    let mut inv_cols = Vec::with_capacity(m.dim);
    for u in 0..m.dim {
        let mut terms = Vec::new();
        for (u0, m1, s) in rho.get(u) {
            for (j, c) in proj_rows.row(*u0) {
                terms.push((j * d + m1, s * c));
            }
        }
        inv_cols.push(normalize_terms(terms));
    }
    let inverse_map = SparseMatrix::from_columns(dv * d, field, &inv_cols)?;

    if forward.mul(&inverse_map)? != SparseMatrix::identity(m.dim, field)
        || inverse_map.mul(&forward)? != SparseMatrix::identity(dv * d, field)
    {
        return Err(fail("forward and inverse maps do not compose to the identity"));
    }
    Ok(Decomposition {
        coinvariants: v,
        forward,
        inverse: inverse_map,
        projection,
    })
}

/// Transports every structure of `m` along the invertible change of basis
/// `p` (new basis vector `u` is column `u` of `p⁻¹`, i.e. `m' = p m`).
pub fn conjugate(m: &StructuredModule, p: &SparseMatrix) -> Result<StructuredModule> {
    if p.rows() != m.dim || p.cols() != m.dim {
        return Err(Error::DimensionMismatch(format!(
            "change of basis must be {0}x{0}",
            m.dim
        )));
    }
    let pinv = inverse(p)?.ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
    let pinv_cols = pinv.columns();
    let transport_action = |act: &super::ActionTensor| -> Vec<Vec<SparseVec>> {
        act.table()
            .iter()
            .enumerate()
            .map(|(a, _)| {
                pinv_cols
                    .iter()
                    .map(|col| p.mul_vec(&act.apply(a, col)))
                    .collect()
            })
            .collect()
    };
    let transport_coaction = |co: &super::CoactionTensor| -> Vec<CoproductTerms> {
        pinv_cols
            .iter()
            .map(|col| {
                let mut terms: CoproductTerms = Vec::new();
                for (u, s) in col {
                    for (x, y, t) in co.get(*u) {
                        let st = s * t;
                        let (u0, a) = match co.side {
                            super::Side::Right => (*x, *y),
                            super::Side::Left => (*y, *x),
                        };
                        for (w, r) in p.mul_vec(&vec![(u0, st.clone())]) {
                            match co.side {
                                super::Side::Right => terms.push((w, a, r)),
                                super::Side::Left => terms.push((a, w, r)),
                            }
                        }
                    }
                }
                terms
            })
            .collect()
    };
    let mut out = StructuredModule::new(format!("{} (conjugated)", m.name), m.field, m.dim, m.class);
    if let Some(a) = &m.left_action {
        out = out.with_left_action(transport_action(a))?;
    }
    if let Some(a) = &m.right_action {
        out = out.with_right_action(transport_action(a))?;
    }
    if let Some(c) = &m.right_coaction {
        out = out.with_right_coaction(transport_coaction(c))?;
    }
    if let Some(c) = &m.left_coaction {
        out = out.with_left_coaction(transport_coaction(c))?;
    }
    Ok(out)
}
