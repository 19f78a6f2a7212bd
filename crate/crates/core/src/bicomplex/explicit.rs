//! First cohomology from the structure maps, and the extensions it classifies.

use super::faces::{HomShape, Variant};
use crate::bialgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar, SparseMatrix, SparseVec, Subspace};
use crate::structures::{check_hopf_module, check_yd, ModuleClass, StructuredModule};

/// A pair `(ω′, ρ′)` with `ω′ ∈ Hom(A⊗M, N)` and `ρ′ ∈ Hom(M, N⊗A)` in the
/// canonical coordinates of `Y^{1,0}` and `Y^{0,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocyclePair {
    pub omega: SparseVec,
    pub rho: SparseVec,
}

/// `Z¹` and `B¹` as subspaces of `Y^{1,0} ⊕ Y^{0,1}` (ω′ block first).
#[derive(Clone, Debug)]
pub struct Z1B1 {
    pub variant: Variant,
    pub shape: HomShape,
    /// Stacked cocycle equations; `Z¹` is their kernel.
    pub equations: SparseMatrix,
    /// `f ↦ (d_m f, d_c f)` on `Hom(M, N)`.
    pub coboundary: SparseMatrix,
    pub z1: Subspace,
    pub b1: Subspace,
}

impl Z1B1 {
    pub fn omega_dim(&self) -> usize {
        self.shape.dim(1, 0)
    }

    pub fn rho_dim(&self) -> usize {
        self.shape.dim(0, 1)
    }

    pub fn h1(&self) -> usize {
        self.z1.dim() - self.b1.dim()
    }

    pub fn stack(&self, pair: &CocyclePair) -> SparseVec {
        let off = self.omega_dim();
        let mut v = pair.omega.clone();
        v.extend(pair.rho.iter().map(|(i, s)| (i + off, s.clone())));
        v
    }

    pub fn split(&self, v: &SparseVec) -> CocyclePair {
        let off = self.omega_dim();
        let (omega, rho): (Vec<_>, Vec<_>) = v.iter().cloned().partition(|(i, _)| *i < off);
        CocyclePair { omega, rho: rho.into_iter().map(|(i, s)| (i - off, s)).collect() }
    }

    pub fn is_cocycle(&self, pair: &CocyclePair) -> bool {
        self.z1.contains(&self.stack(pair))
    }
}

struct Eqs {
    field: FieldSpec,
    trip: Vec<(usize, usize, Scalar)>,
}

impl Eqs {
    fn push(&mut self, row: usize, col: usize, s: Scalar) {
        if !s.is_zero() {
            self.trip.push((row, col, s));
        }
    }

    fn neg(&self, s: &Scalar) -> Scalar {
        &self.field.zero() - s
    }
}

/// The cocycle equations of a pair `(ω′, ρ′)` written out directly:
///
/// * `ω′(id⊗ω_M) + ω_N(id⊗ω′) = ω′(μ⊗id)` on `A⊗A⊗M`,
/// * `(ρ′⊗id)ρ_M + (ρ_N⊗id)ρ′ = (id⊗Δ)ρ′` on `M`,
/// * a mixed equation on `A⊗M` with values in `N⊗A`, whose right side is
///   `ρ′(a₂·m)⁰⊗ρ′(a₂·m)¹a₁ + ω′(a₂⊗m)₀⊗ω′(a₂⊗m)₁a₁` for Yetter-Drinfel'd
///   modules and `ρ′(a·m) + ρ_N(ω′(a⊗m))` for Hopf modules; the left side
///   `ω′(a₁⊗m₀)⊗a₂m₁ + a₁·ρ′(m)⁰⊗a₂ρ′(m)¹` is shared.
///
/// `B¹` is spanned by `(ω_N(id⊗f) - fω_M, ρ_N f - (f⊗id)ρ_M)`.
pub fn z1_b1_explicit(
    variant: Variant,
    b: &Bialgebra,
    m: &StructuredModule,
    n: &StructuredModule,
) -> Result<Z1B1> {
    m.validate_shape(b)?;
    n.validate_shape(b)?;
    let (am, rm, an, rn) = (m.left()?, m.rho()?, n.left()?, n.rho()?);
    let d = b.dim();
    let (dm, dn) = (m.dim, n.dim);
    let sh = HomShape { d, dim_m: dm, dim_n: dn };
    let field = b.field();
    // unknown columns
    let om = |a: usize, u: usize, v: usize| (a * dm + u) * dn + v;
    let off = sh.dim(1, 0);
    let rh = |u: usize, v: usize, k: usize| off + u * dn * d + v * d + k;
    // equation rows
    let r1 = |a: usize, c: usize, u: usize, v: usize| ((a * d + c) * dm + u) * dn + v;
    let off2 = d * d * dm * dn;
    let r2 = |u: usize, v: usize, k1: usize, k2: usize| off2 + ((u * dn + v) * d + k1) * d + k2;
    let off3 = off2 + dm * dn * d * d;
    let r3 = |a: usize, u: usize, v: usize, k: usize| off3 + ((a * dm + u) * dn + v) * d + k;
    let rows = off3 + d * dm * dn * d;
    let cols = off + sh.dim(0, 1);

    let mut e = Eqs { field, trip: Vec::new() };
    for a in 0..d {
        for c in 0..d {
            for u in 0..dm {
                for vp in 0..dn {
                    // a·ω′(c⊗m_u)
                    for (v, s) in an.get(a, vp) {
                        e.push(r1(a, c, u, *v), om(c, u, vp), s.clone());
                    }
                    // ω′(a⊗c·m_u)
                    for (u2, s) in am.get(c, u) {
                        e.push(r1(a, c, u, vp), om(a, *u2, vp), s.clone());
                    }
                    // -ω′(ac⊗m_u)
                    for (ac, s) in b.mult(a, c) {
                        let t = e.neg(s);
                        e.push(r1(a, c, u, vp), om(*ac, u, vp), t);
                    }
                }
            }
        }
    }
    for u in 0..dm {
        for v in 0..dn {
            for k in 0..d {
                // (ρ′⊗id)ρ_M
                for (u0, m1, s) in rm.get(u) {
                    e.push(r2(u, v, k, *m1), rh(*u0, v, k), s.clone());
                }
            }
        }
        for vp in 0..dn {
            for k in 0..d {
                // (ρ_N⊗id)ρ′
                for (v, z, t) in rn.get(vp) {
                    e.push(r2(u, *v, *z, k), rh(u, vp, k), t.clone());
                }
                // -(id⊗Δ)ρ′
                for (k1, k2, t) in b.comult(k) {
                    let t = e.neg(t);
                    e.push(r2(u, vp, *k1, *k2), rh(u, vp, k), t);
                }
            }
        }
    }
    for a in 0..d {
        for u in 0..dm {
            for (a1, a2, s) in b.comult(a) {
                // ω′(a₁⊗m₀)⊗a₂m₁
                for (u0, m1, t) in rm.get(u) {
                    for (k, q) in b.mult(*a2, *m1) {
                        for v in 0..dn {
                            e.push(r3(a, u, v, *k), om(*a1, *u0, v), &(s * t) * q);
                        }
                    }
                }
                // a₁·ρ′(m)⁰⊗a₂ρ′(m)¹
                for vp in 0..dn {
                    for kp in 0..d {
                        for (v, r) in an.get(*a1, vp) {
                            for (k, q) in b.mult(*a2, kp) {
                                e.push(r3(a, u, *v, *k), rh(u, vp, kp), &(s * r) * q);
                            }
                        }
                    }
                }
                if variant == Variant::YetterDrinfeld {
                    // -ρ′(a₂·m)⁰⊗ρ′(a₂·m)¹a₁
                    for (u2, r) in am.get(*a2, u) {
                        for v in 0..dn {
                            for kp in 0..d {
                                for (k, q) in b.mult(kp, *a1) {
                                    let c = e.neg(&(&(s * r) * q));
                                    e.push(r3(a, u, v, *k), rh(*u2, v, kp), c);
                                }
                            }
                        }
                    }
                    // -ω′(a₂⊗m)₀⊗ω′(a₂⊗m)₁a₁
                    for vp in 0..dn {
                        for (v, z, t) in rn.get(vp) {
                            for (k, q) in b.mult(*z, *a1) {
                                let c = e.neg(&(&(s * t) * q));
                                e.push(r3(a, u, *v, *k), om(*a2, u, vp), c);
                            }
                        }
                    }
                }
            }
            if variant == Variant::Hopf {
                // -ρ′(a·m)
                for (u2, r) in am.get(a, u) {
                    for v in 0..dn {
                        for k in 0..d {
                            let c = e.neg(r);
                            e.push(r3(a, u, v, k), rh(*u2, v, k), c);
                        }
                    }
                }
                // -ρ_N(ω′(a⊗m))
                for vp in 0..dn {
                    for (v, z, t) in rn.get(vp) {
                        let c = e.neg(t);
                        e.push(r3(a, u, *v, *z), om(a, u, vp), c);
                    }
                }
            }
        }
    }
    let equations = SparseMatrix::from_triplets(rows, cols, field, e.trip)?;

    let mut cb = Eqs { field, trip: Vec::new() };
    let fc = |u: usize, v: usize| u * dn + v;
    for u in 0..dm {
        for vp in 0..dn {
            for a in 0..d {
                for (v, s) in an.get(a, vp) {
                    cb.push(om(a, u, *v), fc(u, vp), s.clone());
                }
            }
            for (v, z, t) in rn.get(vp) {
                cb.push(rh(u, *v, *z), fc(u, vp), t.clone());
            }
        }
        for a in 0..d {
            for (u2, r) in am.get(a, u) {
                for v in 0..dn {
                    let c = cb.neg(r);
                    cb.push(om(a, u, v), fc(*u2, v), c);
                }
            }
        }
        for (u0, m1, s) in rm.get(u) {
            for v in 0..dn {
                let c = cb.neg(s);
                cb.push(rh(u, v, *m1), fc(*u0, v), c);
            }
        }
    }
    let coboundary = SparseMatrix::from_triplets(cols, dm * dn, field, cb.trip)?;
    let z1 = Subspace::kernel_of(&equations)?;
    let b1 = Subspace::image_of(&coboundary)?;
    if !z1.contains_subspace(&b1) {
        return Err(Error::ContainmentViolation("B¹ is not contained in Z¹".into()));
    }
    Ok(Z1B1 { variant, shape: sh, equations, coboundary, z1, b1 })
}

/// The module `N ⊕ M` (basis of `N` first) with
/// `a·(x, m) = (a·x + ω′(a⊗m), a·m)` and `ρ(x, m) = ρ_N(x) + ρ′(m) + ρ_M(m)`,
/// and whether it passes the axioms of the variant.
pub fn build_extension(
    variant: Variant,
    b: &Bialgebra,
    m: &StructuredModule,
    n: &StructuredModule,
    pair: &CocyclePair,
) -> Result<(StructuredModule, bool)> {
    let (am, rm, an, rn) = (m.left()?, m.rho()?, n.left()?, n.rho()?);
    let d = b.dim();
    let (dm, dn) = (m.dim, n.dim);
    let sh = HomShape { d, dim_m: dm, dim_n: dn };
    for (i, _) in &pair.omega {
        if *i >= sh.dim(1, 0) {
            return Err(Error::IndexOutOfRange(format!("ω′ coordinate {i}")));
        }
    }
    for (i, _) in &pair.rho {
        if *i >= sh.dim(0, 1) {
            return Err(Error::IndexOutOfRange(format!("ρ′ coordinate {i}")));
        }
    }
    let mut act: Vec<Vec<SparseVec>> = vec![vec![Vec::new(); dn + dm]; d];
    for (a, row) in act.iter_mut().enumerate() {
        for v in 0..dn {
            row[v] = an.get(a, v).clone();
        }
        for u in 0..dm {
            let mut col: SparseVec = am.get(a, u).iter().map(|(x, s)| (dn + x, s.clone())).collect();
            for (i, s) in &pair.omega {
                let (inp, v) = (i / dn, i % dn);
                if inp == a * dm + u {
                    col.push((v, s.clone()));
                }
            }
            row[dn + u] = crate::linalg::normalize_terms(col);
        }
    }
    let mut coact = Vec::with_capacity(dn + dm);
    for v in 0..dn {
        coact.push(rn.get(v).clone());
    }
    for u in 0..dm {
        let mut terms: Vec<_> = rm.get(u).iter().map(|(u0, k, s)| (dn + u0, *k, s.clone())).collect();
        for (i, s) in &pair.rho {
            let (src, rest) = (i / (dn * d), i % (dn * d));
            if src == u {
                terms.push((rest / d, rest % d, s.clone()));
            }
        }
        coact.push(terms);
    }
    let class = match variant {
        Variant::YetterDrinfeld => ModuleClass::Yd,
        Variant::Hopf => ModuleClass::Hopf,
    };
    let ext = StructuredModule::new(format!("{}+{}", n.name, m.name), b.field(), dn + dm, class)
        .with_left_action(act)?
        .with_right_coaction(merge_coaction(coact))?;
    let defects = match variant {
        Variant::YetterDrinfeld => check_yd(b, &ext)?,
        Variant::Hopf => check_hopf_module(b, &ext)?,
    };
    Ok((ext, defects.is_empty()))
}

fn merge_coaction(coact: Vec<Vec<(usize, usize, Scalar)>>) -> Vec<Vec<(usize, usize, Scalar)>> {
    coact
        .into_iter()
        .map(|terms| {
            let mut sorted = terms;
            sorted.sort_by_key(|t| (t.0, t.1));
            let mut out: Vec<(usize, usize, Scalar)> = Vec::new();
            for (x, k, s) in sorted {
                match out.last_mut() {
                    Some(last) if last.0 == x && last.1 == k => last.2 = &last.2 + &s,
                    _ => out.push((x, k, s)),
                }
            }
            out.retain(|t| !t.2.is_zero());
            out
        })
        .collect()
}

/// Two cocycles give equivalent extensions iff they differ by a coboundary.
pub fn extensions_equivalent(z: &Z1B1, p1: &CocyclePair, p2: &CocyclePair) -> Result<bool> {
    for (k, p) in [p1, p2].into_iter().enumerate() {
        if !z.is_cocycle(p) {
            return Err(Error::Precondition(format!("pair {} is not a cocycle", k + 1)));
        }
    }
    let diff = crate::linalg::axpy(&z.stack(p1), &z.z1.field().from_i64(-1), &z.stack(p2));
    Ok(z.b1.contains(&diff))
}
