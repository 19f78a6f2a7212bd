//! Sub-bicomplexes of right A-linear and/or left A-colinear cochains.

use serde::Serialize;

use super::faces::{assemble, expand_coproducts, tensor_expand, HomShape, ModuleFaces, Variant};
use super::Bicomplex;
use crate::bialgebra::Bialgebra;
use crate::error::Result;
use crate::linalg::{Budget, SparseMatrix, Subspace};
use crate::structures::StructuredModule;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Restriction {
    /// `Hom_{mod-A}`
    Right,
    /// `Hom^{A-comod}`
    Left,
    /// Both constraints.
    TwoSided,
}

/// A basis vector of a restricted space whose image leaves the next one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureDefect {
    /// `"m"` or `"c"`.
    pub differential: &'static str,
    pub n: usize,
    pub p: usize,
    pub basis_index: usize,
    pub residual_nnz: usize,
}

#[derive(Clone, Debug)]
pub struct Restricted {
    pub restriction: Restriction,
    pub full: Bicomplex,
    /// `subspaces[n][p]` for `n + p ≤ qmax`.
    pub subspaces: Vec<Vec<Subspace>>,
    /// Empty iff both differentials preserve the subspaces.
    pub closure: Vec<ClosureDefect>,
    /// The bicomplex in subspace coordinates; `None` when closure fails.
    pub restricted: Option<Bicomplex>,
}

/// `f ↦ f(x·b) - f(x)·b`, rows indexed by `(b·inDim + x)·outDim + y`.
pub fn right_linearity_defect(
    b: &Bialgebra,
    m: &StructuredModule,
    n: &StructuredModule,
    deg: (usize, usize),
    budget: Budget,
) -> Result<SparseMatrix> {
    let (nn, p) = deg;
    let sh = HomShape { d: b.dim(), dim_m: m.dim, dim_n: n.dim };
    let (rm, rn) = (m.right()?, n.right()?);
    let (f, one, d) = (b.field(), b.field().one(), b.dim());
    let old = (sh.in_dim(nn), sh.out_dim(p));
    let new = (d * sh.in_dim(nn), sh.out_dim(p));
    let in_dim = sh.in_dim(nn);
    let dp = d.pow(p as u32);
    let ctx = format!("right-linearity defect at ({nn},{p})");
    let through_input = assemble(
        f,
        budget,
        &ctx,
        old,
        new,
        |x| {
            let (a, inner) = (x / in_dim, x % in_dim);
            let (legs, u) = sh.decode_in(inner, nn);
            rm.get(a, u)
                .iter()
                .map(|(u2, s)| (Vec::new(), sh.encode_in(&legs, *u2), s.clone()))
                .collect()
        },
        |_, y| vec![(y, one.clone())],
    )?;
    let deltas: Vec<_> = (0..d).map(|a| b.delta_iter_terms(a, p)).collect();
    let through_output = assemble(
        f,
        budget,
        &ctx,
        old,
        new,
        |x| vec![(vec![x / in_dim], x % in_dim, one.clone())],
        |e, y| {
            let (w, ks) = sh.decode_out(y, p);
            let mut out = Vec::new();
            for (l, c) in &deltas[e[0]] {
                let prods: Vec<_> = ks.iter().zip(&l[1..]).map(|(k, li)| b.mult(*k, *li).clone()).collect();
                let tail = tensor_expand(f, &prods, d);
                for (w2, s) in rn.get(l[0], w) {
                    for (t, q) in &tail {
                        out.push((w2 * dp + t, &(c * s) * q));
                    }
                }
            }
            out
        },
    )?;
    through_input.sub(&through_output)
}

/// `f ↦ (id⊗f)λ - λf`, rows indexed by `x·(d·outDim) + z·outDim + y`.
pub fn left_colinearity_defect(
    b: &Bialgebra,
    m: &StructuredModule,
    n: &StructuredModule,
    deg: (usize, usize),
    budget: Budget,
) -> Result<SparseMatrix> {
    let (nn, p) = deg;
    let sh = HomShape { d: b.dim(), dim_m: m.dim, dim_n: n.dim };
    let (lm, ln) = (m.lambda()?, n.lambda()?);
    let (f, one, d) = (b.field(), b.field().one(), b.dim());
    let out_dim = sh.out_dim(p);
    let dp = d.pow(p as u32);
    let old = (sh.in_dim(nn), out_dim);
    let new = (sh.in_dim(nn), d * out_dim);
    let ctx = format!("left-colinearity defect at ({nn},{p})");
    let through_input = assemble(
        f,
        budget,
        &ctx,
        old,
        new,
        |x| {
            let (legs, u) = sh.decode_in(x, nn);
            let mut out = Vec::new();
            for (xs, ys, c) in expand_coproducts(b, &legs) {
                for (a, u0, s) in lm.get(u) {
                    let mut e = xs.clone();
                    e.push(*a);
                    out.push((e, sh.encode_in(&ys, *u0), &c * s));
                }
            }
            out
        },
        |e, y| b.product(e).into_iter().map(|(z, c)| (z * out_dim + y, c)).collect(),
    )?;
    let through_output = assemble(
        f,
        budget,
        &ctx,
        old,
        new,
        |x| vec![(Vec::new(), x, one.clone())],
        |_, y| {
            let (w, _) = sh.decode_out(y, p);
            let rest = y % dp;
            ln.get(w)
                .iter()
                .map(|(z, w0, s)| (z * out_dim + w0 * dp + rest, s.clone()))
                .collect()
        },
    )?;
    through_input.sub(&through_output)
}

fn restricted_space(
    b: &Bialgebra,
    m: &StructuredModule,
    n: &StructuredModule,
    which: Restriction,
    deg: (usize, usize),
    budget: Budget,
) -> Result<Subspace> {
    match which {
        Restriction::Right => Subspace::kernel_of(&right_linearity_defect(b, m, n, deg, budget)?),
        Restriction::Left => Subspace::kernel_of(&left_colinearity_defect(b, m, n, deg, budget)?),
        Restriction::TwoSided => {
            let r = Subspace::kernel_of(&right_linearity_defect(b, m, n, deg, budget)?)?;
            let l = Subspace::kernel_of(&left_colinearity_defect(b, m, n, deg, budget)?)?;
            r.intersect(&l)
        }
    }
}

/// Matrix of `d` restricted to `src → dst` in basis coordinates, or the
/// indices of source basis vectors whose image leaves `dst`.
fn restrict(d: &SparseMatrix, src: &Subspace, dst: &Subspace) -> std::result::Result<SparseMatrix, Vec<(usize, usize)>> {
    let mut cols = Vec::with_capacity(src.dim());
    let mut bad = Vec::new();
    for (k, v) in src.basis().iter().enumerate() {
        let img = d.mul_vec(v);
        match dst.coordinates_sparse(&img) {
            Some(c) => cols.push(c),
            None => bad.push((k, dst.residual(&img).len())),
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }
    Ok(SparseMatrix::from_columns(dst.dim(), d.field(), &cols).expect("coordinates fit the target"))
}

/// The restricted sub-bicomplex of the Hopf-module bicomplex `C(M, N)`.
/// Closure under both differentials is verified exactly before the
/// matrices are restricted.
pub fn restricted_bicomplex(
    b: &Bialgebra,
    m: &StructuredModule,
    n: &StructuredModule,
    which: Restriction,
    qmax: usize,
    budget: Budget,
) -> Result<Restricted> {
    let faces = ModuleFaces::new(b, m, n, Variant::Hopf, budget)?;
    let full = Bicomplex::from_source("hopf", &faces, qmax)?;
    let mut subspaces = Vec::new();
    for nn in 0..=qmax {
        let mut row = Vec::new();
        for p in 0..=qmax - nn {
            row.push(restricted_space(b, m, n, which, (nn, p), budget)?);
        }
        subspaces.push(row);
    }
    let mut closure = Vec::new();
    let mut dm = Vec::new();
    let mut dc = Vec::new();
    for nn in 0..qmax {
        let (mut row_m, mut row_c) = (Vec::new(), Vec::new());
        for p in 0..qmax - nn {
            let src = &subspaces[nn][p];
            for (label, d, dst) in [
                ("m", full.dm(nn, p), &subspaces[nn + 1][p]),
                ("c", full.dc(nn, p), &subspaces[nn][p + 1]),
            ] {
                match restrict(d, src, dst) {
                    Ok(r) => {
                        if label == "m" {
                            row_m.push(r)
                        } else {
                            row_c.push(r)
                        }
                    }
                    Err(bad) => closure.extend(bad.into_iter().map(|(k, nnz)| ClosureDefect {
                        differential: label,
                        n: nn,
                        p,
                        basis_index: k,
                        residual_nnz: nnz,
                    })),
                }
            }
        }
        dm.push(row_m);
        dc.push(row_c);
    }
    let name = match which {
        Restriction::Right => "r",
        Restriction::Left => "l",
        Restriction::TwoSided => "t",
    };
    let restricted = if closure.is_empty() {
        let dims = subspaces.iter().map(|r| r.iter().map(Subspace::dim).collect()).collect();
        Some(Bicomplex::from_parts(name, b.field(), qmax, dims, dm, dc)?)
    } else {
        None
    };
    Ok(Restricted { restriction: which, full, subspaces, closure, restricted })
}
