//! Independent oracles shared by the integration tests. Nothing here uses the
//! library's elimination, assembly or index helpers; only structure constants
//! and scalar arithmetic are borrowed.
#![allow(dead_code)]

use std::collections::BTreeMap;

use ydcoh::bialgebra::catalog::{cyclic_group, sweedler};
use ydcoh::bialgebra::Bialgebra;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use ydcoh::linalg::{FieldSpec, Scalar, SparseMatrix};
use ydcoh::structures::fixtures::yd_catalog;
use ydcoh::structures::StructuredModule;

// ---- dense elimination -----------------------------------------------------

/// Rank by plain Gaussian elimination on dense rows.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, pivot);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let pr: Vec<Scalar> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let k = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pr) {
                    *x = &*x - &(&k * p);
                }
            }
        }
        rows[r] = pr;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

pub fn nullity(rows: Vec<Vec<Scalar>>, unknowns: usize) -> usize {
    unknowns - rank(rows)
}

// ---- dense tensors ---------------------------------------------------------

/// A vector keyed by multi-indices.
pub type Tensor = BTreeMap<Vec<usize>, Scalar>;

pub fn add_to(t: &mut Tensor, key: Vec<usize>, s: Scalar) {
    if s.is_zero() {
        return;
    }
    let e = t.entry(key.clone()).or_insert_with(|| s.field().zero());
    *e = &*e + &s;
    if e.is_zero() {
        t.remove(&key);
    }
}

/// `Δ^{(k-1)}(e_a)` as `k`-tuples, coassociating on the last leg.
pub fn delta_k(b: &Bialgebra, a: usize, k: usize) -> Vec<(Vec<usize>, Scalar)> {
    let mut cur = vec![(vec![a], b.field().one())];
    for _ in 1..k {
        let mut next = Vec::new();
        for (legs, s) in cur {
            let last = *legs.last().unwrap();
            for (x, y, c) in b.comult(last) {
                let mut l = legs[..legs.len() - 1].to_vec();
                l.push(*x);
                l.push(*y);
                next.push((l, &s * c));
            }
        }
        cur = next;
    }
    cur
}

/// Product of basis elements as `(index, coeff)` terms.
pub fn prod(b: &Bialgebra, xs: &[usize]) -> Vec<(usize, Scalar)> {
    let mut cur: Vec<(usize, Scalar)> = b.unit().clone();
    for &x in xs {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (y, s) in &cur {
            for (z, t) in b.mult(*y, x) {
                let e = acc.entry(*z).or_insert_with(|| b.field().zero());
                *e = &*e + &(s * t);
            }
        }
        cur = acc.into_iter().filter(|(_, s)| !s.is_zero()).collect();
    }
    cur
}

// ---- morphism spaces -------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    LeftAction,
    RightAction,
    RightCoaction,
    LeftCoaction,
}

/// `dim` of linear maps `f: M → N` commuting with every listed structure,
/// solved as one homogeneous system in the `dim M · dim N` entries of `f`.
pub fn equivariant_dim(b: &Bialgebra, m: &StructuredModule, n: &StructuredModule, structures: &[Structure]) -> usize {
    let field = b.field();
    let (dm, dn, d) = (m.dim, n.dim, b.dim());
    // unknown f[w][u]: coefficient of n_w in f(m_u)
    let var = |w: usize, u: usize| w * dm + u;
    let unknowns = dm * dn;
    let mut rows = Vec::new();
    let mut push = |eq: BTreeMap<usize, Scalar>| {
        if eq.values().any(|s| !s.is_zero()) {
            let mut row = vec![field.zero(); unknowns];
            for (k, s) in eq {
                row[k] = s;
            }
            rows.push(row);
        }
    };
    let acc = |eq: &mut BTreeMap<usize, Scalar>, k: usize, s: Scalar| {
        let e = eq.entry(k).or_insert_with(|| field.zero());
        *e = &*e + &s;
    };
    for st in structures {
        match st {
            Structure::LeftAction | Structure::RightAction => {
                let (am, an) = if *st == Structure::LeftAction {
                    (m.left().unwrap(), n.left().unwrap())
                } else {
                    (m.right().unwrap(), n.right().unwrap())
                };
                // f(a·m_u) - a·f(m_u), coefficient of n_z
                for a in 0..d {
                    for u in 0..dm {
                        for z in 0..dn {
                            let mut eq = BTreeMap::new();
                            for (u2, s) in am.get(a, u) {
                                acc(&mut eq, var(z, *u2), s.clone());
                            }
                            for w in 0..dn {
                                for (z2, s) in an.get(a, w) {
                                    if *z2 == z {
                                        acc(&mut eq, var(w, u), -s);
                                    }
                                }
                            }
                            push(eq);
                        }
                    }
                }
            }
            Structure::RightCoaction | Structure::LeftCoaction => {
                let right = *st == Structure::RightCoaction;
                let (cm, cn) = if right {
                    (m.rho().unwrap(), n.rho().unwrap())
                } else {
                    (m.lambda().unwrap(), n.lambda().unwrap())
                };
                // coaction(f(m_u)) - (f⊗id)coaction(m_u), coefficient of (n_z, e_x)
                for u in 0..dm {
                    for z in 0..dn {
                        for x in 0..d {
                            let mut eq = BTreeMap::new();
                            for w in 0..dn {
                                for t in cn.get(w) {
                                    let (w0, y, s) = if right { (t.0, t.1, &t.2) } else { (t.1, t.0, &t.2) };
                                    if w0 == z && y == x {
                                        acc(&mut eq, var(w, u), s.clone());
                                    }
                                }
                            }
                            for t in cm.get(u) {
                                let (u0, y, s) = if right { (t.0, t.1, &t.2) } else { (t.1, t.0, &t.2) };
                                if y == x {
                                    acc(&mut eq, var(z, u0), -s);
                                }
                            }
                            push(eq);
                        }
                    }
                }
            }
        }
    }
    nullity(rows, unknowns)
}

pub const MODULE_AND_COMODULE: &[Structure] = &[Structure::LeftAction, Structure::RightCoaction];
pub const ALL_FOUR: &[Structure] =
    &[Structure::LeftAction, Structure::RightAction, Structure::RightCoaction, Structure::LeftCoaction];

// ---- direct face evaluation ------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Yd,
    Hopf,
}

/// A cochain in `Hom(Aⁿ⊗M, N⊗Aᵖ)`: input key `[a¹..aⁿ, u]`, output key
/// `[v, k¹..kᵖ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub n: usize,
    pub p: usize,
    pub values: BTreeMap<Vec<usize>, Tensor>,
}

pub fn digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = x % base;
        x /= base;
    }
    out
}

fn number(ds: &[usize], base: usize) -> usize {
    ds.iter().fold(0, |acc, &x| acc * base + x)
}

/// Input index `((a¹ d + a²) … ) dimM + u`, output `v dᵖ + (k¹ … kᵖ)`,
/// coordinate `input · (dimN dᵖ) + output`.
pub struct Indexing {
    pub d: usize,
    pub dim_m: usize,
    pub dim_n: usize,
}

impl Indexing {
    pub fn cochain_dim(&self, n: usize, p: usize) -> usize {
        self.d.pow(n as u32) * self.dim_m * self.dim_n * self.d.pow(p as u32)
    }

    pub fn basis_cochain(&self, n: usize, p: usize, coord: usize, field: FieldSpec) -> Cochain {
        let out_dim = self.dim_n * self.d.pow(p as u32);
        let (input, out) = (coord / out_dim, coord % out_dim);
        let mut key_in = digits(input / self.dim_m, self.d, n);
        key_in.push(input % self.dim_m);
        let mut key_out = vec![out / self.d.pow(p as u32)];
        key_out.extend(digits(out % self.d.pow(p as u32), self.d, p));
        let mut t = Tensor::new();
        t.insert(key_out, field.one());
        let mut values = BTreeMap::new();
        values.insert(key_in, t);
        Cochain { n, p, values }
    }

    /// Sparse coordinates of a cochain.
    pub fn coordinates(&self, f: &Cochain) -> BTreeMap<usize, Scalar> {
        let out_dim = self.dim_n * self.d.pow(f.p as u32);
        let mut out = BTreeMap::new();
        for (kin, t) in &f.values {
            let input = number(&kin[..f.n], self.d) * self.dim_m + kin[f.n];
            for (kout, s) in t {
                let o = kout[0] * self.d.pow(f.p as u32) + number(&kout[1..], self.d);
                if !s.is_zero() {
                    out.insert(input * out_dim + o, s.clone());
                }
            }
        }
        out
    }
}

pub struct Oracle<'a> {
    pub b: &'a Bialgebra,
    pub m: &'a StructuredModule,
    pub n: &'a StructuredModule,
    pub flavor: Flavor,
}

impl<'a> Oracle<'a> {
    fn eval(&self, f: &Cochain, legs: &[usize], u: usize) -> Tensor {
        let mut key = legs.to_vec();
        key.push(u);
        f.values.get(&key).cloned().unwrap_or_default()
    }

    /// `f` on a linear combination of module vectors at fixed legs.
    fn eval_vec(&self, f: &Cochain, legs: &[usize], v: &[(usize, Scalar)]) -> Tensor {
        let mut out = Tensor::new();
        for (u, s) in v {
            for (k, t) in self.eval(f, legs, *u) {
                add_to(&mut out, k, s * &t);
            }
        }
        out
    }

    fn all_inputs(&self, n: usize) -> Vec<(Vec<usize>, usize)> {
        let d = self.b.dim();
        let mut out = Vec::new();
        for x in 0..d.pow(n as u32) {
            for u in 0..self.m.dim {
                out.push((digits(x, d, n), u));
            }
        }
        out
    }

    fn collect(&self, n: usize, p: usize, mut g: impl FnMut(&[usize], usize) -> Tensor) -> Cochain {
        let mut values = BTreeMap::new();
        for (legs, u) in self.all_inputs(n) {
            let t = g(&legs, u);
            if !t.is_empty() {
                let mut key = legs.clone();
                key.push(u);
                values.insert(key, t);
            }
        }
        Cochain { n, p, values }
    }

    pub fn b_face(&self, i: usize, f: &Cochain) -> Cochain {
        let (n, p) = (f.n, f.p);
        let b = self.b;
        self.collect(n + 1, p, |legs, u| {
            let mut out = Tensor::new();
            if i == 0 {
                let act = self.n.left().unwrap();
                for (xs, c) in delta_k(b, legs[0], p + 1) {
                    for (key, s) in self.eval(f, &legs[1..], u) {
                        for (v2, t) in act.get(xs[0], key[0]) {
                            let mut parts: Vec<Vec<(usize, Scalar)>> = vec![vec![(*v2, &(&c * &s) * t)]];
                            for k in 0..p {
                                parts.push(prod(b, &[xs[k + 1], key[k + 1]]));
                            }
                            for (kk, ss) in expand(b.field(), &parts) {
                                add_to(&mut out, kk, ss);
                            }
                        }
                    }
                }
            } else if i <= n {
                for (y, c) in b.mult(legs[i - 1], legs[i]) {
                    let mut l = legs[..i - 1].to_vec();
                    l.push(*y);
                    l.extend_from_slice(&legs[i + 1..]);
                    for (key, s) in self.eval(f, &l, u) {
                        add_to(&mut out, key, c * &s);
                    }
                }
            } else {
                let act = self.m.left().unwrap();
                let last = legs[n];
                match self.flavor {
                    Flavor::Hopf => {
                        for (key, s) in self.eval_vec(f, &legs[..n], act.get(last, u)) {
                            add_to(&mut out, key, s);
                        }
                    }
                    Flavor::Yd => {
                        for (xs, c) in delta_k(b, last, p + 1) {
                            let moved = act.get(xs[p], u);
                            for (key, s) in self.eval_vec(f, &legs[..n], moved) {
                                let mut parts: Vec<Vec<(usize, Scalar)>> = vec![vec![(key[0], &c * &s)]];
                                for k in 0..p {
                                    parts.push(prod(b, &[key[k + 1], xs[k]]));
                                }
                                for (kk, ss) in expand(b.field(), &parts) {
                                    add_to(&mut out, kk, ss);
                                }
                            }
                        }
                    }
                }
            }
            out
        })
    }

    pub fn c_face(&self, j: usize, f: &Cochain) -> Cochain {
        let (n, p) = (f.n, f.p);
        let b = self.b;
        let one = b.field().one();
        self.collect(n, p + 1, |legs, u| {
            let mut out = Tensor::new();
            if j == 0 {
                let rho = self.n.rho().unwrap();
                // split every leg when the degree of f must absorb the a's
                let splits: Vec<(Vec<usize>, Vec<usize>, Scalar)> = match self.flavor {
                    Flavor::Hopf => vec![(vec![], legs.to_vec(), one.clone())],
                    Flavor::Yd => split_all(b, legs),
                };
                for (firsts, seconds, c) in splits {
                    for (key, s) in self.eval(f, &seconds, u) {
                        for (v0, y, t) in rho.get(key[0]) {
                            let mut factor = vec![*y];
                            factor.extend_from_slice(&firsts);
                            for (z, r) in prod(b, &factor) {
                                let mut kk = vec![*v0, z];
                                kk.extend_from_slice(&key[1..]);
                                add_to(&mut out, kk, &(&(&c * &s) * t) * &r);
                            }
                        }
                    }
                }
            } else if j <= p {
                for (key, s) in self.eval(f, legs, u) {
                    for (x, y, c) in b.comult(key[j]) {
                        let mut kk = key[..j].to_vec();
                        kk.push(*x);
                        kk.push(*y);
                        kk.extend_from_slice(&key[j + 1..]);
                        add_to(&mut out, kk, c * &s);
                    }
                }
            } else {
                let rho = self.m.rho().unwrap();
                for (firsts, seconds, c) in split_all(b, legs) {
                    for (u0, z, t) in rho.get(u) {
                        let mut factor = seconds.clone();
                        factor.push(*z);
                        let tail = prod(b, &factor);
                        for (key, s) in self.eval(f, &firsts, *u0) {
                            for (w, r) in &tail {
                                let mut kk = key.clone();
                                kk.push(*w);
                                add_to(&mut out, kk, &(&(&c * t) * &s) * r);
                            }
                        }
                    }
                }
            }
            out
        })
    }
}

/// `Σ (a¹)₁…(aⁿ)₁ ; (a¹)₂…(aⁿ)₂` as lists of first and second legs.
fn split_all(b: &Bialgebra, legs: &[usize]) -> Vec<(Vec<usize>, Vec<usize>, Scalar)> {
    let mut cur = vec![(vec![], vec![], b.field().one())];
    for &a in legs {
        let mut next = Vec::new();
        for (f, s, c) in &cur {
            for (x, y, t) in b.comult(a) {
                let mut f2 = f.clone();
                f2.push(*x);
                let mut s2 = s.clone();
                s2.push(*y);
                next.push((f2, s2, c * t));
            }
        }
        cur = next;
    }
    cur
}

/// Tensor product of a list of vectors, as multi-index keys.
fn expand(field: FieldSpec, parts: &[Vec<(usize, Scalar)>]) -> Vec<(Vec<usize>, Scalar)> {
    let mut cur: Vec<(Vec<usize>, Scalar)> = vec![(vec![], field.one())];
    for part in parts {
        let mut next = Vec::new();
        for (k, s) in &cur {
            for (i, t) in part {
                let mut k2 = k.clone();
                k2.push(*i);
                next.push((k2, s * t));
            }
        }
        cur = next;
    }
    cur
}

// ---- basis changes -------------------------------------------------------

/// `L·U` with unit diagonals, so always invertible. Conjugating by it makes
/// structure tables dense.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> SparseMatrix {
    let mut lower = vec![vec![0i64; n]; n];
    let mut upper = vec![vec![0i64; n]; n];
    for i in 0..n {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for j in 0..i {
            lower[i][j] = rng.gen_range(-2..=2);
            upper[j][i] = rng.gen_range(-2..=2);
        }
    }
    let l = SparseMatrix::from_dense(field, &lower);
    let u = SparseMatrix::from_dense(field, &upper);
    l.mul(&u).unwrap()
}

/// A permutation times shears on disjoint coordinate pairs: still mixes the
/// basis, but keeps tables sparse enough for cohomology over Q.
pub fn sparse_invertible(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec) -> SparseMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rows = vec![vec![0i64; n]; n];
    for (i, &j) in perm.iter().enumerate() {
        rows[i][j] = 1;
    }
    let p = SparseMatrix::from_dense(field, &rows);
    let mut shear = vec![vec![0i64; n]; n];
    for (i, row) in shear.iter_mut().enumerate() {
        row[i] = 1;
    }
    for k in (0..n.saturating_sub(1)).step_by(2) {
        shear[k][k + 1] = if rng.gen_bool(0.5) { 1 } else { -1 };
    }
    let s = SparseMatrix::from_dense(field, &shear);
    p.mul(&s).unwrap()
}

// ---- fixtures --------------------------------------------------------------

pub fn q() -> FieldSpec {
    FieldSpec::Rational
}

pub fn f2() -> FieldSpec {
    FieldSpec::Prime { p: 2 }
}

/// The four bialgebras of the identity battery.
pub fn battery_bialgebras() -> Vec<Bialgebra> {
    vec![
        cyclic_group(2, q()).unwrap(),
        cyclic_group(2, f2()).unwrap(),
        cyclic_group(3, q()).unwrap(),
        sweedler(q()).unwrap(),
    ]
}

/// Every ordered pair of catalog YD modules over `b`.
pub fn yd_pairs(b: &Bialgebra) -> Vec<(StructuredModule, StructuredModule)> {
    let cat: Vec<StructuredModule> = yd_catalog(b).unwrap().into_iter().map(|(_, m)| m).collect();
    let mut out = Vec::new();
    for m in &cat {
        for n in &cat {
            out.push((m.clone(), n.clone()));
        }
    }
    out
}
