//! Modules and comodules over a bialgebra, and the compatibility classes
//! built from them: Yetter-Drinfel'd modules, left-right Hopf modules and
//! Hopf bimodules.

mod build;
pub mod fixtures;

pub use build::{
    coinvariants, conjugate, free_hopf_bimodule, free_hopf_module, from_matrices,
    fundamental_decomposition, one_dimensional, regular_bimodule, regular_hopf_module,
    trivial_yd, Decomposition,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bialgebra::{Bialgebra, CoproductTerms};
use crate::error::{Error, Result};
use crate::linalg::{normalize_terms, FieldSpec, Scalar, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// `act[a][u]` is `e_a · m_u` (left) or `m_u · e_a` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTensor {
    pub side: Side,
    act: Vec<Vec<SparseVec>>,
}

impl ActionTensor {
    pub fn new(side: Side, dim: usize, act: Vec<Vec<SparseVec>>) -> Result<Self> {
        for (a, row) in act.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action row {a} has {} entries, module has dim {dim}",
                    row.len()
                )));
            }
        }
        let act = act
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        if let Some((i, _)) = v.iter().find(|(i, _)| *i >= dim) {
                            return Err(Error::DimensionMismatch(format!(
                                "action image index {i} >= dim {dim}"
                            )));
                        }
                        Ok(normalize_terms(v))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ActionTensor { side, act })
    }

    pub fn get(&self, a: usize, u: usize) -> &SparseVec {
        &self.act[a][u]
    }

    pub fn table(&self) -> &[Vec<SparseVec>] {
        &self.act
    }

    /// Action of a basis element on an arbitrary vector.
    pub fn apply(&self, a: usize, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (u, s) in v {
            for (w, t) in &self.act[a][*u] {
                terms.push((*w, s * t));
            }
        }
        normalize_terms(terms)
    }

    /// Action of an arbitrary algebra element on an arbitrary vector.
    pub fn apply_vec(&self, x: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (a, s) in x {
            for (w, t) in self.apply(*a, v) {
                terms.push((w, s * &t));
            }
        }
        normalize_terms(terms)
    }
}

/// `coact[u]` lists `(u₀, a, c)` for a right coaction `m_u ↦ Σ c m_{u₀}⊗e_a`,
/// or `(a, u₀, c)` for a left coaction `m_u ↦ Σ c e_a⊗m_{u₀}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionTensor {
    pub side: Side,
    coact: Vec<CoproductTerms>,
}

impl CoactionTensor {
    pub fn new(side: Side, dim: usize, coact: Vec<CoproductTerms>) -> Result<Self> {
        if coact.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "coaction has {} entries, module has dim {dim}",
                coact.len()
            )));
        }
        let coact = coact
            .into_iter()
            .map(|terms| {
                for (x, y, _) in &terms {
                    let u0 = if side == Side::Right { *x } else { *y };
                    if u0 >= dim {
                        return Err(Error::DimensionMismatch(format!(
                            "coaction image index {u0} >= dim {dim}"
                        )));
                    }
                }
                Ok(merge_pairs(terms))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoactionTensor { side, coact })
    }

    pub fn get(&self, u: usize) -> &CoproductTerms {
        &self.coact[u]
    }

    pub fn table(&self) -> &[CoproductTerms] {
        &self.coact
    }

    /// Algebra legs appearing in the tensor, for shape validation.
    fn algebra_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.coact.iter().flatten().map(move |(x, y, _)| match self.side {
            Side::Right => *y,
            Side::Left => *x,
        })
    }
}

fn merge_pairs(mut terms: CoproductTerms) -> CoproductTerms {
    terms.sort_by_key(|(x, y, _)| (*x, *y));
    let mut out: CoproductTerms = Vec::with_capacity(terms.len());
    for (x, y, s) in terms {
        match out.last_mut() {
            Some(last) if last.0 == x && last.1 == y => last.2 = &last.2 + &s,
            _ => out.push((x, y, s)),
        }
    }
    out.retain(|t| !t.2.is_zero());
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleClass {
    Plain,
    Yd,
    Hopf,
    HopfBimodule,
}

impl fmt::Display for ModuleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleClass::Plain => "plain",
            ModuleClass::Yd => "yd",
            ModuleClass::Hopf => "hopf",
            ModuleClass::HopfBimodule => "hopf-bimodule",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredModule {
    pub name: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub class: ModuleClass,
    pub left_action: Option<ActionTensor>,
    pub right_action: Option<ActionTensor>,
    pub right_coaction: Option<CoactionTensor>,
    pub left_coaction: Option<CoactionTensor>,
}

impl StructuredModule {
    pub fn new(name: impl Into<String>, field: FieldSpec, dim: usize, class: ModuleClass) -> Self {
        StructuredModule {
            name: name.into(),
            field,
            dim,
            class,
            left_action: None,
            right_action: None,
            right_coaction: None,
            left_coaction: None,
        }
    }

    pub fn with_left_action(mut self, act: Vec<Vec<SparseVec>>) -> Result<Self> {
        self.left_action = Some(ActionTensor::new(Side::Left, self.dim, act)?);
        Ok(self)
    }

    pub fn with_right_action(mut self, act: Vec<Vec<SparseVec>>) -> Result<Self> {
        self.right_action = Some(ActionTensor::new(Side::Right, self.dim, act)?);
        Ok(self)
    }

    pub fn with_right_coaction(mut self, coact: Vec<CoproductTerms>) -> Result<Self> {
        self.right_coaction = Some(CoactionTensor::new(Side::Right, self.dim, coact)?);
        Ok(self)
    }

    pub fn with_left_coaction(mut self, coact: Vec<CoproductTerms>) -> Result<Self> {
        self.left_coaction = Some(CoactionTensor::new(Side::Left, self.dim, coact)?);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_class(mut self, class: ModuleClass) -> Self {
        self.class = class;
        self
    }

    pub fn left(&self) -> Result<&ActionTensor> {
        self.left_action
            .as_ref()
            .ok_or_else(|| Error::StructureMissing(format!("{}: left action", self.name)))
    }

    pub fn right(&self) -> Result<&ActionTensor> {
        self.right_action
            .as_ref()
            .ok_or_else(|| Error::StructureMissing(format!("{}: right action", self.name)))
    }

    pub fn rho(&self) -> Result<&CoactionTensor> {
        self.right_coaction
            .as_ref()
            .ok_or_else(|| Error::StructureMissing(format!("{}: right coaction", self.name)))
    }

    pub fn lambda(&self) -> Result<&CoactionTensor> {
        self.left_coaction
            .as_ref()
            .ok_or_else(|| Error::StructureMissing(format!("{}: left coaction", self.name)))
    }

    /// Checks that every tensor is indexed by the basis of `b` and over its field.
    pub fn validate_shape(&self, b: &Bialgebra) -> Result<()> {
        if self.field != b.field() {
            return Err(Error::FieldMismatch {
                expected: b.field().to_string(),
                found: self.field.to_string(),
            });
        }
        for act in [&self.left_action, &self.right_action].into_iter().flatten() {
            if act.act.len() != b.dim() {
                return Err(Error::DimensionMismatch(format!(
                    "{}: action has {} rows, algebra has dim {}",
                    self.name,
                    act.act.len(),
                    b.dim()
                )));
            }
            check_scalars(self.field, act.act.iter().flatten().flatten().map(|t| &t.1))?;
        }
        for co in [&self.right_coaction, &self.left_coaction].into_iter().flatten() {
            if let Some(a) = co.algebra_indices().find(|&a| a >= b.dim()) {
                return Err(Error::DimensionMismatch(format!(
                    "{}: coaction leg {a} >= algebra dim {}",
                    self.name,
                    b.dim()
                )));
            }
            check_scalars(self.field, co.coact.iter().flatten().map(|t| &t.2))?;
        }
        Ok(())
    }

    /// `ρ(m_u)` as a vector of `M⊗A`, index `u₀·d + a`.
    pub fn rho_vec(&self, d: usize, v: &SparseVec) -> Result<SparseVec> {
        let rho = self.rho()?;
        let mut terms = Vec::new();
        for (u, s) in v {
            for (u0, a, t) in rho.get(*u) {
                terms.push((u0 * d + a, s * t));
            }
        }
        Ok(normalize_terms(terms))
    }
}

fn check_scalars<'a>(field: FieldSpec, it: impl Iterator<Item = &'a Scalar>) -> Result<()> {
    for s in it {
        field.check(s)?;
    }
    Ok(())
}

/// Which identity a [`Defect`] refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    LeftActionUnit,
    LeftActionAssociativity,
    RightActionUnit,
    RightActionAssociativity,
    RightCoactionCounit,
    RightCoactionCoassociativity,
    LeftCoactionCounit,
    LeftCoactionCoassociativity,
    /// `Σ (a₂·m)₀ ⊗ (a₂·m)₁a₁ = Σ a₁·m₀ ⊗ a₂m₁`
    YetterDrinfeld,
    /// `ρ(a·m) = Σ a₁·m₀ ⊗ a₂m₁`
    HopfLeftRight,
    /// `λ(a·m) = Σ a₁m₍₋₁₎ ⊗ a₂·m₍₀₎`
    HopfLeftLeft,
    /// `λ(m·a) = Σ m₍₋₁₎a₁ ⊗ m₍₀₎·a₂`
    HopfRightLeft,
    /// `ρ(m·a) = Σ m₀·a₁ ⊗ m₁a₂`
    HopfRightRight,
    Bimodule,
    /// `(λ⊗id)ρ = (id⊗ρ)λ`
    Bicomodule,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

/// A failing identity at a basis witness; `defect` is `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defect {
    pub check: Check,
    pub witness: Vec<usize>,
    pub defect: SparseVec,
}

/// Empty iff every checked identity holds.
pub type DefectReport = Vec<Defect>;

struct Checker<'a> {
    b: &'a Bialgebra,
    dim: usize,
    out: DefectReport,
}

impl<'a> Checker<'a> {
    fn new(b: &'a Bialgebra, m: &StructuredModule) -> Self {
        Checker { b, dim: m.dim, out: Vec::new() }
    }

    fn compare(&mut self, check: Check, witness: Vec<usize>, lhs: Vec<(usize, Scalar)>, rhs: Vec<(usize, Scalar)>) {
        let minus = -&self.b.field().one();
        let defect = crate::linalg::axpy(&normalize_terms(lhs), &minus, &normalize_terms(rhs));
        if !defect.is_empty() {
            self.out.push(Defect { check, witness, defect });
        }
    }

    fn left_action(&mut self, act: &ActionTensor) {
        let (b, dim) = (self.b, self.dim);
        for u in 0..dim {
            let lhs = act.apply_vec(b.unit(), &vec![(u, b.field().one())]);
            self.compare(Check::LeftActionUnit, vec![u], lhs, vec![(u, b.field().one())]);
        }
        for x in 0..b.dim() {
            for y in 0..b.dim() {
                for u in 0..dim {
                    let e = vec![(u, b.field().one())];
                    let lhs = act.apply_vec(b.mult(x, y), &e);
                    let rhs = act.apply(x, act.get(y, u));
                    self.compare(Check::LeftActionAssociativity, vec![x, y, u], lhs, rhs);
                }
            }
        }
    }

    fn right_action(&mut self, act: &ActionTensor) {
        let (b, dim) = (self.b, self.dim);
        for u in 0..dim {
            let lhs = act.apply_vec(b.unit(), &vec![(u, b.field().one())]);
            self.compare(Check::RightActionUnit, vec![u], lhs, vec![(u, b.field().one())]);
        }
        for u in 0..dim {
            for x in 0..b.dim() {
                for y in 0..b.dim() {
                    let e = vec![(u, b.field().one())];
                    // (m·x)·y against m·(xy)
                    let lhs = act.apply(y, act.get(x, u));
                    let rhs = act.apply_vec(b.mult(x, y), &e);
                    self.compare(Check::RightActionAssociativity, vec![u, x, y], lhs, rhs);
                }
            }
        }
    }

    fn right_coaction(&mut self, rho: &CoactionTensor) {
        let (b, dim) = (self.b, self.dim);
        let d = b.dim();
        for u in 0..dim {
            let lhs = rho.get(u).iter().map(|(u0, a, s)| (*u0, s * b.counit_of(*a))).collect();
            self.compare(Check::RightCoactionCounit, vec![u], lhs, vec![(u, b.field().one())]);
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (u0, a, s) in rho.get(u) {
                for (u00, a2, t) in rho.get(*u0) {
                    lhs.push(((u00 * d + a2) * d + a, s * t));
                }
                for (x, y, t) in b.comult(*a) {
                    rhs.push(((u0 * d + x) * d + y, s * t));
                }
            }
            self.compare(Check::RightCoactionCoassociativity, vec![u], lhs, rhs);
        }
    }

    fn left_coaction(&mut self, lam: &CoactionTensor) {
        let (b, dim) = (self.b, self.dim);
        let d = b.dim();
        for u in 0..dim {
            let lhs = lam.get(u).iter().map(|(a, u0, s)| (*u0, s * b.counit_of(*a))).collect();
            self.compare(Check::LeftCoactionCounit, vec![u], lhs, vec![(u, b.field().one())]);
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for (a, u0, s) in lam.get(u) {
                for (a2, u00, t) in lam.get(*u0) {
                    lhs.push(((a * d + a2) * dim + u00, s * t));
                }
                for (x, y, t) in b.comult(*a) {
                    rhs.push(((x * d + y) * dim + u0, s * t));
                }
            }
            self.compare(Check::LeftCoactionCoassociativity, vec![u], lhs, rhs);
        }
    }

    /// `Σ a₁·m₀ ⊗ a₂m₁` in `M⊗A`, the right-hand side shared by the YD and Hopf compatibility conditions.
    fn diagonal_rhs(&self, act: &ActionTensor, rho: &CoactionTensor, a: usize, u: usize) -> Vec<(usize, Scalar)> {
        let d = self.b.dim();
        let mut out = Vec::new();
        for (u0, m1, s) in rho.get(u) {
            for (a1, a2, t) in self.b.comult(a) {
                let st = s * t;
                for (w, r) in act.get(*a1, *u0) {
                    for (y, q) in self.b.mult(*a2, *m1) {
                        out.push((w * d + y, &(&st * r) * q));
                    }
                }
            }
        }
        out
    }

    fn yetter_drinfeld(&mut self, act: &ActionTensor, rho: &CoactionTensor) {
        let d = self.b.dim();
        for a in 0..d {
            for u in 0..self.dim {
                let mut lhs = Vec::new();
                for (a1, a2, s) in self.b.comult(a) {
                    for (u1, t) in act.get(*a2, u) {
                        let st = s * t;
                        for (w, z, r) in rho.get(*u1) {
                            for (y, q) in self.b.mult(*z, *a1) {
                                lhs.push((w * d + y, &(&st * r) * q));
                            }
                        }
                    }
                }
                let rhs = self.diagonal_rhs(act, rho, a, u);
                self.compare(Check::YetterDrinfeld, vec![a, u], lhs, rhs);
            }
        }
    }

    fn hopf_left_right(&mut self, act: &ActionTensor, rho: &CoactionTensor) {
        let d = self.b.dim();
        for a in 0..d {
            for u in 0..self.dim {
                let mut lhs = Vec::new();
                for (u1, t) in act.get(a, u) {
                    for (w, z, r) in rho.get(*u1) {
                        lhs.push((w * d + z, t * r));
                    }
                }
                let rhs = self.diagonal_rhs(act, rho, a, u);
                self.compare(Check::HopfLeftRight, vec![a, u], lhs, rhs);
            }
        }
    }

    fn hopf_left_left(&mut self, act: &ActionTensor, lam: &CoactionTensor) {
        let (d, dim) = (self.b.dim(), self.dim);
        for a in 0..d {
            for u in 0..dim {
                let mut lhs = Vec::new();
                for (u1, t) in act.get(a, u) {
                    for (z, w, r) in lam.get(*u1) {
                        lhs.push((z * dim + w, t * r));
                    }
                }
                let mut rhs = Vec::new();
                for (mm1, u0, s) in lam.get(u) {
                    for (a1, a2, t) in self.b.comult(a) {
                        let st = s * t;
                        for (y, q) in self.b.mult(*a1, *mm1) {
                            for (w, r) in act.get(*a2, *u0) {
                                rhs.push((y * dim + w, &(&st * q) * r));
                            }
                        }
                    }
                }
                self.compare(Check::HopfLeftLeft, vec![a, u], lhs, rhs);
            }
        }
    }

    fn hopf_right_left(&mut self, ract: &ActionTensor, lam: &CoactionTensor) {
        let (d, dim) = (self.b.dim(), self.dim);
        for u in 0..dim {
            for a in 0..d {
                let mut lhs = Vec::new();
                for (u1, t) in ract.get(a, u) {
                    for (z, w, r) in lam.get(*u1) {
                        lhs.push((z * dim + w, t * r));
                    }
                }
                let mut rhs = Vec::new();
                for (mm1, u0, s) in lam.get(u) {
                    for (a1, a2, t) in self.b.comult(a) {
                        let st = s * t;
                        for (y, q) in self.b.mult(*mm1, *a1) {
                            for (w, r) in ract.get(*a2, *u0) {
                                rhs.push((y * dim + w, &(&st * q) * r));
                            }
                        }
                    }
                }
                self.compare(Check::HopfRightLeft, vec![u, a], lhs, rhs);
            }
        }
    }

    fn hopf_right_right(&mut self, ract: &ActionTensor, rho: &CoactionTensor) {
        let d = self.b.dim();
        for u in 0..self.dim {
            for a in 0..d {
                let mut lhs = Vec::new();
                for (u1, t) in ract.get(a, u) {
                    for (w, z, r) in rho.get(*u1) {
                        lhs.push((w * d + z, t * r));
                    }
                }
                let mut rhs = Vec::new();
                for (u0, m1, s) in rho.get(u) {
                    for (a1, a2, t) in self.b.comult(a) {
                        let st = s * t;
                        for (w, r) in ract.get(*a1, *u0) {
                            for (y, q) in self.b.mult(*m1, *a2) {
                                rhs.push((w * d + y, &(&st * r) * q));
                            }
                        }
                    }
                }
                self.compare(Check::HopfRightRight, vec![u, a], lhs, rhs);
            }
        }
    }

    fn bimodule(&mut self, lact: &ActionTensor, ract: &ActionTensor) {
        let d = self.b.dim();
        for a in 0..d {
            for u in 0..self.dim {
                for c in 0..d {
                    let lhs = ract.apply(c, lact.get(a, u));
                    let rhs = lact.apply(a, ract.get(c, u));
                    self.compare(Check::Bimodule, vec![a, u, c], lhs, rhs);
                }
            }
        }
    }

    fn bicomodule(&mut self, rho: &CoactionTensor, lam: &CoactionTensor) {
        let (d, dim) = (self.b.dim(), self.dim);
        for u in 0..dim {
            let mut lhs = Vec::new();
            for (u0, a, s) in rho.get(u) {
                for (z, w, t) in lam.get(*u0) {
                    lhs.push(((z * dim + w) * d + a, s * t));
                }
            }
            let mut rhs = Vec::new();
            for (z, u0, s) in lam.get(u) {
                for (w, a, t) in rho.get(*u0) {
                    rhs.push(((z * dim + w) * d + a, s * t));
                }
            }
            self.compare(Check::Bicomodule, vec![u], lhs, rhs);
        }
    }

    fn own_axioms(&mut self, m: &StructuredModule) {
        if let Some(a) = &m.left_action {
            self.left_action(a);
        }
        if let Some(a) = &m.right_action {
            self.right_action(a);
        }
        if let Some(c) = &m.right_coaction {
            self.right_coaction(c);
        }
        if let Some(c) = &m.left_coaction {
            self.left_coaction(c);
        }
    }
}

/// Axioms of each structure present on `m`, without any compatibility.
pub fn check_structures(b: &Bialgebra, m: &StructuredModule) -> Result<DefectReport> {
    m.validate_shape(b)?;
    let mut c = Checker::new(b, m);
    c.own_axioms(m);
    Ok(c.out)
}

/// Structure axioms of the left action and right coaction, then the
/// Yetter-Drinfel'd condition at every `(a, u)`. Defect index: `u₀·d + a`.
pub fn check_yd(b: &Bialgebra, m: &StructuredModule) -> Result<DefectReport> {
    m.validate_shape(b)?;
    let (act, rho) = (m.left()?, m.rho()?);
    let mut c = Checker::new(b, m);
    c.left_action(act);
    c.right_coaction(rho);
    c.yetter_drinfeld(act, rho);
    Ok(c.out)
}

/// Like [`check_yd`] with the left-right Hopf module condition.
pub fn check_hopf_module(b: &Bialgebra, m: &StructuredModule) -> Result<DefectReport> {
    m.validate_shape(b)?;
    let (act, rho) = (m.left()?, m.rho()?);
    let mut c = Checker::new(b, m);
    c.left_action(act);
    c.right_coaction(rho);
    c.hopf_left_right(act, rho);
    Ok(c.out)
}

/// Full set of Hopf bimodule axioms.
pub fn check_hopf_bimodule(b: &Bialgebra, m: &StructuredModule) -> Result<DefectReport> {
    m.validate_shape(b)?;
    let (la, ra, rho, lam) = (m.left()?, m.right()?, m.rho()?, m.lambda()?);
    let mut c = Checker::new(b, m);
    c.own_axioms(m);
    c.bimodule(la, ra);
    c.bicomodule(rho, lam);
    c.hopf_left_left(la, lam);
    c.hopf_left_right(la, rho);
    c.hopf_right_left(ra, lam);
    c.hopf_right_right(ra, rho);
    Ok(c.out)
}

/// Objects of `A_lr^r`: bimodule, left-right and right-right Hopf module.
pub fn check_right_hopf(b: &Bialgebra, m: &StructuredModule) -> Result<DefectReport> {
    m.validate_shape(b)?;
    let (la, ra, rho) = (m.left()?, m.right()?, m.rho()?);
    let mut c = Checker::new(b, m);
    c.left_action(la);
    c.right_action(ra);
    c.right_coaction(rho);
    c.bimodule(la, ra);
    c.hopf_left_right(la, rho);
    c.hopf_right_right(ra, rho);
    Ok(c.out)
}

/// Objects of `A_l^lr`: bicomodule, left-left and left-right Hopf module.
pub fn check_left_hopf(b: &Bialgebra, m: &StructuredModule) -> Result<DefectReport> {
    m.validate_shape(b)?;
    let (la, rho, lam) = (m.left()?, m.rho()?, m.lambda()?);
    let mut c = Checker::new(b, m);
    c.left_action(la);
    c.right_coaction(rho);
    c.left_coaction(lam);
    c.bicomodule(rho, lam);
    c.hopf_left_left(la, lam);
    c.hopf_left_right(la, rho);
    Ok(c.out)
}

/// Runs the check matching the declared class.
pub fn check_class(b: &Bialgebra, m: &StructuredModule) -> Result<DefectReport> {
    match m.class {
        ModuleClass::Plain => check_structures(b, m),
        ModuleClass::Yd => check_yd(b, m),
        ModuleClass::Hopf => check_hopf_module(b, m),
        ModuleClass::HopfBimodule => check_hopf_bimodule(b, m),
    }
}

#[cfg(test)]
mod tests;
