//! Face maps as matrices in the canonical bases of `Hom(Aⁿ⊗M, N⊗Aᵖ)`.

use std::collections::HashMap;

use crate::bialgebra::{flatten, unflatten, Bialgebra};
use crate::error::{Error, Result};
use crate::linalg::{normalize_terms, Budget, FieldSpec, Scalar, SparseMatrix, SparseVec};
use crate::structures::{ActionTensor, CoactionTensor, StructuredModule};

/// Anything that can produce the face maps of a double complex.
pub trait FaceSource {
    fn field(&self) -> FieldSpec;
    fn dim(&self, n: usize, p: usize) -> usize;
    /// `b_i^{n,p}`, `0 ≤ i ≤ n+1`.
    fn face_b(&self, n: usize, p: usize, i: usize) -> Result<SparseMatrix>;
    /// `c_j^{n,p}`, `0 ≤ j ≤ p+1`.
    fn face_c(&self, n: usize, p: usize, j: usize) -> Result<SparseMatrix>;

    fn dm(&self, n: usize, p: usize) -> Result<SparseMatrix> {
        alternating(self.field(), (0..=n + 1).map(|i| self.face_b(n, p, i)))
    }

    fn dc(&self, n: usize, p: usize) -> Result<SparseMatrix> {
        alternating(self.field(), (0..=p + 1).map(|j| self.face_c(n, p, j)))
    }
}

fn alternating(field: FieldSpec, faces: impl Iterator<Item = Result<SparseMatrix>>) -> Result<SparseMatrix> {
    let mut acc: Option<SparseMatrix> = None;
    for (i, f) in faces.enumerate() {
        let f = f?;
        let s = field.one().signed(i);
        acc = Some(match acc {
            None => f.scale(&s),
            Some(a) => a.add_scaled(&s, &f)?,
        });
    }
    Ok(acc.expect("at least two faces"))
}

fn out_of_range(kind: &str, n: usize, p: usize, i: usize) -> Error {
    Error::IndexOutOfRange(format!("face {kind}_{i} at bidegree ({n},{p})"))
}

/// Sizes of `Aⁿ⊗M` and `N⊗Aᵖ` and the flat index maps between them.
#[derive(Clone, Copy, Debug)]
pub struct HomShape {
    pub d: usize,
    pub dim_m: usize,
    pub dim_n: usize,
}

impl HomShape {
    pub fn in_dim(&self, n: usize) -> usize {
        self.d.pow(n as u32) * self.dim_m
    }

    pub fn out_dim(&self, p: usize) -> usize {
        self.dim_n * self.d.pow(p as u32)
    }

    pub fn dim(&self, n: usize, p: usize) -> usize {
        self.in_dim(n) * self.out_dim(p)
    }

    pub fn encode_in(&self, legs: &[usize], u: usize) -> usize {
        flatten(legs, self.d) * self.dim_m + u
    }

    pub fn decode_in(&self, idx: usize, n: usize) -> (Vec<usize>, usize) {
        (unflatten(idx / self.dim_m, self.d, n), idx % self.dim_m)
    }

    pub fn encode_out(&self, v: usize, legs: &[usize]) -> usize {
        v * self.d.pow(legs.len() as u32) + flatten(legs, self.d)
    }

    pub fn decode_out(&self, idx: usize, p: usize) -> (usize, Vec<usize>) {
        let dp = self.d.pow(p as u32);
        (idx / dp, unflatten(idx % dp, self.d, p))
    }

    pub fn coord(&self, p: usize, input: usize, output: usize) -> usize {
        input * self.out_dim(p) + output
    }
}

pub(crate) type PreTerms = Vec<(Vec<usize>, usize, Scalar)>;

/// Matrix of `f ↦ g` where `g(x) = Σ c₁·post(e, f(x′))` over the terms
/// `(e, x′, c₁)` of `pre(x)`. `post(e, y)` lists `(y′, c₂)`; its results
/// are memoized per `(e, y)`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn assemble(
    field: FieldSpec,
    budget: Budget,
    context: &str,
    old: (usize, usize),
    new: (usize, usize),
    pre: impl Fn(usize) -> PreTerms,
    post: impl Fn(&[usize], usize) -> SparseVec,
) -> Result<SparseMatrix> {
    let (old_in, old_out) = old;
    let (new_in, new_out) = new;
    let rows = new_in * new_out;
    let cols = old_in * old_out;
    budget.check(rows, cols, context)?;
    let mut memo: HashMap<(Vec<usize>, usize), SparseVec> = HashMap::new();
    let mut trip = Vec::new();
    for x in 0..new_in {
        for (e, xp, c1) in pre(x) {
            for y in 0..old_out {
                let terms = memo
                    .entry((e.clone(), y))
                    .or_insert_with(|| post(&e, y));
                for (yp, c2) in terms.iter() {
                    trip.push((x * new_out + yp, xp * old_out + y, &c1 * c2));
                }
            }
        }
    }
    SparseMatrix::from_triplets(rows, cols, field, trip)
}

/// Expansion of `v₁ ⊗ … ⊗ v_r` into flat indices (most significant first).
pub(crate) fn tensor_expand(field: FieldSpec, factors: &[SparseVec], base: usize) -> SparseVec {
    let mut acc: Vec<(usize, Scalar)> = vec![(0, field.one())];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (i, s) in &acc {
            for (j, t) in f {
                next.push((i * base + j, s * t));
            }
        }
        acc = next;
    }
    normalize_terms(acc)
}

/// All choices of one coproduct term per input: `(first legs, second legs, coeff)`.
pub(crate) fn expand_coproducts(b: &Bialgebra, legs: &[usize]) -> Vec<(Vec<usize>, Vec<usize>, Scalar)> {
    let mut acc = vec![(Vec::new(), Vec::new(), b.field().one())];
    for &a in legs {
        let mut next = Vec::with_capacity(acc.len() * b.comult(a).len());
        for (xs, ys, s) in &acc {
            for (x, y, t) in b.comult(a) {
                let mut xs = xs.clone();
                let mut ys = ys.clone();
                xs.push(*x);
                ys.push(*y);
                next.push((xs, ys, s * t));
            }
        }
        acc = next;
    }
    acc
}

/// Which of the two families of faces to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Faces of `Y^{n,p}` for Yetter-Drinfel'd modules.
    YetterDrinfeld,
    /// Faces of `C^{n,p}` for left-right Hopf modules.
    Hopf,
}

/// Faces of `Hom(Aⁿ⊗M, N⊗Aᵖ)` built from the structure maps of `M` and `N`.
pub struct ModuleFaces<'a> {
    b: &'a Bialgebra,
    shape: HomShape,
    variant: Variant,
    budget: Budget,
    act_m: &'a ActionTensor,
    rho_m: &'a CoactionTensor,
    act_n: &'a ActionTensor,
    rho_n: &'a CoactionTensor,
}

impl<'a> ModuleFaces<'a> {
    pub fn new(
        b: &'a Bialgebra,
        m: &'a StructuredModule,
        n: &'a StructuredModule,
        variant: Variant,
        budget: Budget,
    ) -> Result<Self> {
        m.validate_shape(b)?;
        n.validate_shape(b)?;
        Ok(ModuleFaces {
            b,
            shape: HomShape { d: b.dim(), dim_m: m.dim, dim_n: n.dim },
            variant,
            budget,
            act_m: m.left()?,
            rho_m: m.rho()?,
            act_n: n.left()?,
            rho_n: n.rho()?,
        })
    }

    pub fn shape(&self) -> HomShape {
        self.shape
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    fn sizes(&self, n: usize, p: usize) -> (usize, usize) {
        (self.shape.in_dim(n), self.shape.out_dim(p))
    }

    fn products(&self, pairs: impl Iterator<Item = (usize, usize)>) -> Vec<SparseVec> {
        pairs.map(|(x, y)| self.b.mult(x, y).clone()).collect()
    }

    fn identity_post(y: usize, one: &Scalar) -> SparseVec {
        vec![(y, one.clone())]
    }
}

impl FaceSource for ModuleFaces<'_> {
    fn field(&self) -> FieldSpec {
        self.b.field()
    }

    fn dim(&self, n: usize, p: usize) -> usize {
        self.shape.dim(n, p)
    }

    fn face_b(&self, n: usize, p: usize, i: usize) -> Result<SparseMatrix> {
        if i > n + 1 {
            return Err(out_of_range("b", n, p, i));
        }
        let sh = self.shape;
        let (d, f, one) = (sh.d, self.b.field(), self.b.field().one());
        let ctx = format!("b_{i} at ({n},{p})");
        let old = self.sizes(n, p);
        let new = self.sizes(n + 1, p);
        let dp = d.pow(p as u32);
        if i == 0 {
            // (a¹)₁·f(a²⊗…)⁰ ⊗ (a¹)₂f(…)¹ ⊗ … ⊗ (a¹)_{p+1}f(…)ᵖ
            let deltas: Vec<_> = (0..d).map(|a| self.b.delta_iter_terms(a, p)).collect();
            return assemble(
                f,
                self.budget,
                &ctx,
                old,
                new,
                |x| {
                    let (legs, u) = sh.decode_in(x, n + 1);
                    let rest = sh.encode_in(&legs[1..], u);
                    deltas[legs[0]].iter().map(|(l, c)| (l.clone(), rest, c.clone())).collect()
                },
                |l, y| {
                    let (w, ks) = sh.decode_out(y, p);
                    let acted = self.act_n.get(l[0], w);
                    let prods = self.products(l[1..].iter().copied().zip(ks.iter().copied()));
                    let tail = tensor_expand(f, &prods, d);
                    let mut out = Vec::new();
                    for (w2, s) in acted {
                        for (t, c) in &tail {
                            out.push((w2 * dp + t, s * c));
                        }
                    }
                    out
                },
            );
        }
        if i <= n {
            return assemble(
                f,
                self.budget,
                &ctx,
                old,
                new,
                |x| {
                    let (legs, u) = sh.decode_in(x, n + 1);
                    self.b
                        .mult(legs[i - 1], legs[i])
                        .iter()
                        .map(|(c, s)| {
                            let mut nl = legs[..i - 1].to_vec();
                            nl.push(*c);
                            nl.extend_from_slice(&legs[i + 1..]);
                            (Vec::new(), sh.encode_in(&nl, u), s.clone())
                        })
                        .collect()
                },
                |_, y| Self::identity_post(y, &one),
            );
        }
        match self.variant {
            Variant::YetterDrinfeld => {
                // f(…⊗(a^{n+1})_{p+1}·m)⁰ ⊗ f(…)¹(a^{n+1})₁ ⊗ … ⊗ f(…)ᵖ(a^{n+1})_p;
                // at p = 0 this is f(…⊗a^{n+1}·m).
                let deltas: Vec<_> = (0..d).map(|a| self.b.delta_iter_terms(a, p)).collect();
                assemble(
                    f,
                    self.budget,
                    &ctx,
                    old,
                    new,
                    |x| {
                        let (legs, u) = sh.decode_in(x, n + 1);
                        let mut out = Vec::new();
                        for (l, c) in &deltas[legs[n]] {
                            for (u2, s) in self.act_m.get(l[p], u) {
                                out.push((l[..p].to_vec(), sh.encode_in(&legs[..n], *u2), c * s));
                            }
                        }
                        out
                    },
                    |l, y| {
                        let (w, ks) = sh.decode_out(y, p);
                        let prods = self.products(ks.iter().copied().zip(l.iter().copied()));
                        tensor_expand(f, &prods, d)
                            .into_iter()
                            .map(|(t, c)| (w * dp + t, c))
                            .collect()
                    },
                )
            }
            Variant::Hopf => assemble(
                f,
                self.budget,
                &ctx,
                old,
                new,
                |x| {
                    let (legs, u) = sh.decode_in(x, n + 1);
                    self.act_m
                        .get(legs[n], u)
                        .iter()
                        .map(|(u2, s)| (Vec::new(), sh.encode_in(&legs[..n], *u2), s.clone()))
                        .collect()
                },
                |_, y| Self::identity_post(y, &one),
            ),
        }
    }

    fn face_c(&self, n: usize, p: usize, j: usize) -> Result<SparseMatrix> {
        if j > p + 1 {
            return Err(out_of_range("c", n, p, j));
        }
        let sh = self.shape;
        let (d, f, one) = (sh.d, self.b.field(), self.b.field().one());
        let ctx = format!("c_{j} at ({n},{p})");
        let old = self.sizes(n, p);
        let new = self.sizes(n, p + 1);
        let dp1 = d.pow(p as u32 + 1);
        let dp = d.pow(p as u32);
        if j == 0 {
            return match self.variant {
                Variant::YetterDrinfeld => assemble(
                    // (f((a¹)₂⊗…⊗m)⁰)₀ ⊗ (f(…)⁰)₁(a¹)₁…(aⁿ)₁ ⊗ f(…)¹ ⊗ …
                    f,
                    self.budget,
                    &ctx,
                    old,
                    new,
                    |x| {
                        let (legs, u) = sh.decode_in(x, n);
                        expand_coproducts(self.b, &legs)
                            .into_iter()
                            .map(|(xs, ys, c)| (xs, sh.encode_in(&ys, u), c))
                            .collect()
                    },
                    |xs, y| {
                        let (w, _) = sh.decode_out(y, p);
                        let rest = y % dp;
                        let mut out = Vec::new();
                        for (w0, z, s) in self.rho_n.get(w) {
                            let mut factors = vec![*z];
                            factors.extend_from_slice(xs);
                            for (e, t) in self.b.product(&factors) {
                                out.push((w0 * dp1 + e * dp + rest, s * &t));
                            }
                        }
                        out
                    },
                ),
                Variant::Hopf => assemble(
                    f,
                    self.budget,
                    &ctx,
                    old,
                    new,
                    |x| vec![(Vec::new(), x, one.clone())],
                    |_, y| {
                        let (w, _) = sh.decode_out(y, p);
                        let rest = y % dp;
                        self.rho_n
                            .get(w)
                            .iter()
                            .map(|(w0, z, s)| (w0 * dp1 + z * dp + rest, s.clone()))
                            .collect()
                    },
                ),
            };
        }
        if j <= p {
            return assemble(
                f,
                self.budget,
                &ctx,
                old,
                new,
                |x| vec![(Vec::new(), x, one.clone())],
                |_, y| {
                    let (w, ks) = sh.decode_out(y, p);
                    self.b
                        .comult(ks[j - 1])
                        .iter()
                        .map(|(k1, k2, s)| {
                            let mut nk = ks[..j - 1].to_vec();
                            nk.push(*k1);
                            nk.push(*k2);
                            nk.extend_from_slice(&ks[j..]);
                            (sh.encode_out(w, &nk), s.clone())
                        })
                        .collect()
                },
            );
        }
        // f((a¹)₁⊗…⊗(aⁿ)₁⊗m₀) ⊗ (a¹)₂…(aⁿ)₂m₁, the same in both variants
        assemble(
            f,
            self.budget,
            &ctx,
            old,
            new,
            |x| {
                let (legs, u) = sh.decode_in(x, n);
                let mut out = Vec::new();
                for (xs, ys, c) in expand_coproducts(self.b, &legs) {
                    for (u0, m1, s) in self.rho_m.get(u) {
                        let mut e = ys.clone();
                        e.push(*m1);
                        out.push((e, sh.encode_in(&xs, *u0), &c * s));
                    }
                }
                out
            },
            |e, y| {
                self.b
                    .product(e)
                    .into_iter()
                    .map(|(t, c)| (y * d + t, c))
                    .collect()
            },
        )
    }
}

/// Gerstenhaber-Schack faces on `Hom(Aⁿ, Aᵖ)` with the diagonal actions of
/// `A` on `Aᵖ` (through `ε` when `p = 0`), coded without module data.
pub struct GsFaces<'a> {
    b: &'a Bialgebra,
    budget: Budget,
}

impl<'a> GsFaces<'a> {
    pub fn new(b: &'a Bialgebra, budget: Budget) -> Self {
        GsFaces { b, budget }
    }

    /// Diagonal action of `a` on the tensor `k₁⊗…⊗k_p` from the given side.
    fn diagonal(&self, a: usize, ks: &[usize], left: bool) -> SparseVec {
        let f = self.b.field();
        if ks.is_empty() {
            let e = self.b.counit_of(a);
            return if e.is_zero() { vec![] } else { vec![(0, e.clone())] };
        }
        let mut out = Vec::new();
        for (legs, c) in self.b.delta_iter_terms(a, ks.len() - 1) {
            let prods: Vec<SparseVec> = legs
                .iter()
                .zip(ks)
                .map(|(l, k)| if left { self.b.mult(*l, *k).clone() } else { self.b.mult(*k, *l).clone() })
                .collect();
            for (t, s) in tensor_expand(f, &prods, self.b.dim()) {
                out.push((t, &c * &s));
            }
        }
        normalize_terms(out)
    }
}

impl FaceSource for GsFaces<'_> {
    fn field(&self) -> FieldSpec {
        self.b.field()
    }

    fn dim(&self, n: usize, p: usize) -> usize {
        self.b.dim().pow((n + p) as u32)
    }

    fn face_b(&self, n: usize, p: usize, i: usize) -> Result<SparseMatrix> {
        if i > n + 1 {
            return Err(out_of_range("b", n, p, i));
        }
        let d = self.b.dim();
        let f = self.b.field();
        let one = f.one();
        let old = (d.pow(n as u32), d.pow(p as u32));
        let new = (d.pow(n as u32 + 1), d.pow(p as u32));
        let ctx = format!("gs b_{i} at ({n},{p})");
        let pre = |x: usize| -> PreTerms {
            let legs = unflatten(x, d, n + 1);
            if i == 0 {
                vec![(vec![legs[0]], flatten(&legs[1..], d), one.clone())]
            } else if i == n + 1 {
                vec![(vec![legs[n]], flatten(&legs[..n], d), one.clone())]
            } else {
                self.b
                    .mult(legs[i - 1], legs[i])
                    .iter()
                    .map(|(c, s)| {
                        let mut nl = legs[..i - 1].to_vec();
                        nl.push(*c);
                        nl.extend_from_slice(&legs[i + 1..]);
                        (Vec::new(), flatten(&nl, d), s.clone())
                    })
                    .collect()
            }
        };
        let post = |e: &[usize], y: usize| -> SparseVec {
            if e.is_empty() {
                return vec![(y, one.clone())];
            }
            self.diagonal(e[0], &unflatten(y, d, p), i == 0)
        };
        assemble(f, self.budget, &ctx, old, new, pre, post)
    }

    fn face_c(&self, n: usize, p: usize, j: usize) -> Result<SparseMatrix> {
        if j > p + 1 {
            return Err(out_of_range("c", n, p, j));
        }
        let d = self.b.dim();
        let f = self.b.field();
        let one = f.one();
        let old = (d.pow(n as u32), d.pow(p as u32));
        let new = (d.pow(n as u32), d.pow(p as u32 + 1));
        let ctx = format!("gs c_{j} at ({n},{p})");
        let dp = d.pow(p as u32);
        if j == 0 || j == p + 1 {
            // c₀: Σ (a¹)₁…(aⁿ)₁ ⊗ f((a¹)₂⊗…); c_{p+1}: Σ f((a¹)₁⊗…) ⊗ (a¹)₂…(aⁿ)₂
            let first = j == 0;
            return assemble(
                f,
                self.budget,
                &ctx,
                old,
                new,
                |x| {
                    expand_coproducts(self.b, &unflatten(x, d, n))
                        .into_iter()
                        .map(|(xs, ys, c)| {
                            if first {
                                (xs, flatten(&ys, d), c)
                            } else {
                                (ys, flatten(&xs, d), c)
                            }
                        })
                        .collect()
                },
                |e, y| {
                    self.b
                        .product(e)
                        .into_iter()
                        .map(|(t, c)| (if first { t * dp + y } else { y * d + t }, c))
                        .collect()
                },
            );
        }
        assemble(
            f,
            self.budget,
            &ctx,
            old,
            new,
            |x| vec![(Vec::new(), x, one.clone())],
            |_, y| {
                let ks = unflatten(y, d, p);
                self.b
                    .comult(ks[j - 1])
                    .iter()
                    .map(|(k1, k2, s)| {
                        let mut nk = ks[..j - 1].to_vec();
                        nk.push(*k1);
                        nk.push(*k2);
                        nk.extend_from_slice(&ks[j..]);
                        (flatten(&nk, d), s.clone())
                    })
                    .collect()
            },
        )
    }
}
