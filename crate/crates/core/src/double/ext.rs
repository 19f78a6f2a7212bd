//! `Ext` over a finite-dimensional algebra from the bar complex, and its
//! comparison with the Yetter-Drinfel'd cohomology.

use serde::Serialize;

use super::{drinfeld_double, transport_yd, Algebra, AlgebraModule};
use crate::bialgebra::{flatten, unflatten, Bialgebra};
use crate::bicomplex::faces::assemble;
use crate::bicomplex::{cohomology_report, Bicomplex, ModuleFaces, Variant};
use crate::error::{Error, Result};
use crate::linalg::{rank, Budget, SparseMatrix};
use crate::structures::StructuredModule;

/// `δ : Hom(Bⁿ⊗M, N) → Hom(B^{n+1}⊗M, N)`,
/// `δf(x¹⊗…⊗x^{n+1}⊗m) = x¹·f(x²⊗…) + Σ (-1)^i f(…⊗xⁱx^{i+1}⊗…) + (-1)^{n+1} f(x¹⊗…⊗x^{n+1}·m)`.
fn bar_differential(alg: &Algebra, m: &AlgebraModule, n: &AlgebraModule, deg: usize, budget: Budget) -> Result<SparseMatrix> {
    let d = alg.dim();
    let f = alg.field();
    let one = f.one();
    let old = (d.pow(deg as u32) * m.dim, n.dim);
    let new = (d.pow(deg as u32 + 1) * m.dim, n.dim);
    let decode = |x: usize| (unflatten(x / m.dim, d, deg + 1), x % m.dim);
    let ctx = format!("bar differential in degree {deg}");
    let mut acc: Option<SparseMatrix> = None;
    for i in 0..=deg + 1 {
        let face = assemble(
            f,
            budget,
            &ctx,
            old,
            new,
            |x| {
                let (legs, u) = decode(x);
                if i == 0 {
                    vec![(vec![legs[0]], flatten(&legs[1..], d) * m.dim + u, one.clone())]
                } else if i == deg + 1 {
                    m.get(legs[deg], u)
                        .iter()
                        .map(|(u2, s)| (Vec::new(), flatten(&legs[..deg], d) * m.dim + u2, s.clone()))
                        .collect()
                } else {
                    alg.mult(legs[i - 1], legs[i])
                        .iter()
                        .map(|(c, s)| {
                            let mut nl = legs[..i - 1].to_vec();
                            nl.push(*c);
                            nl.extend_from_slice(&legs[i + 1..]);
                            (Vec::new(), flatten(&nl, d) * m.dim + u, s.clone())
                        })
                        .collect()
                }
            },
            |e, v| if e.is_empty() { vec![(v, one.clone())] } else { n.get(e[0], v).clone() },
        )?;
        let sgn = one.signed(i);
        acc = Some(match acc {
            None => face.scale(&sgn),
            Some(a) => a.add_scaled(&sgn, &face)?,
        });
    }
    Ok(acc.expect("at least two faces"))
}

/// `dim Extⁿ_B(M, N)` for `n ≤ nmax`.
pub fn ext_bar(alg: &Algebra, m: &AlgebraModule, n: &AlgebraModule, nmax: usize, budget: Budget) -> Result<Vec<usize>> {
    for (label, x) in [("M", m), ("N", n)] {
        if let Some(d) = x.check(alg).first() {
            return Err(Error::Precondition(format!("{label} fails {} at {:?}", d.law, d.witness)));
        }
    }
    let mut out = Vec::new();
    let mut prev: Option<(SparseMatrix, usize)> = None;
    for deg in 0..=nmax {
        let delta = bar_differential(alg, m, n, deg, budget)?;
        let r = rank(&delta)?;
        let incoming = match &prev {
            Some((p, rp)) => {
                if !delta.mul(p)?.is_zero() {
                    return Err(Error::ContainmentViolation(format!("bar differential squares to non-zero in degree {deg}")));
                }
                *rp
            }
            None => 0,
        };
        out.push(delta.cols() - r - incoming);
        prev = Some((delta, r));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareRow {
    pub n: usize,
    pub h: usize,
    pub ext: usize,
    pub agree: bool,
    /// Whether equality in this degree is a theorem (n ≤ 1) or open.
    pub asserted: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub bialgebra: String,
    pub double_dim: usize,
    pub m: String,
    pub n: String,
    pub rows: Vec<CompareRow>,
}

/// `dim Hⁿ(M, N)` next to `dim Extⁿ_{D(A)}(M, N)` for `n ≤ nmax`. The rows
/// `n = 0, 1` must agree; a mismatch there is an assertion failure.
pub fn compare_h_ext(b: &Bialgebra, m: &StructuredModule, n: &StructuredModule, nmax: usize, budget: Budget) -> Result<Comparison> {
    let faces = ModuleFaces::new(b, m, n, Variant::YetterDrinfeld, budget)?;
    let bc = Bicomplex::from_source("yd", &faces, nmax + 1)?;
    let h = cohomology_report(&bc, None)?.h_vector();
    let dbl = drinfeld_double(b)?;
    let (tm, tn) = (transport_yd(b, &dbl, m)?, transport_yd(b, &dbl, n)?);
    let ext = ext_bar(&dbl.algebra, &tm, &tn, nmax, budget)?;
    let rows: Vec<CompareRow> = (0..=nmax)
        .map(|k| CompareRow { n: k, h: h[k], ext: ext[k], agree: h[k] == ext[k], asserted: k <= 1 })
        .collect();
    if let Some(r) = rows.iter().find(|r| r.asserted && !r.agree) {
        return Err(Error::AssertionFailed(format!(
            "H^{k} = {h} but Ext^{k} = {e} for ({m}, {n}) over {b}",
            k = r.n,
            h = r.h,
            e = r.ext,
            m = m.name,
            n = n.name,
            b = b.name()
        )));
    }
    Ok(Comparison {
        bialgebra: b.name().to_string(),
        double_dim: dbl.algebra.dim(),
        m: m.name.clone(),
        n: n.name.clone(),
        rows,
    })
}
