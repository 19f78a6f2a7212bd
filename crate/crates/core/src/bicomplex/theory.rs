//! Cohomology theories behind a common interface, selected by name.

use super::faces::{FaceSource, GsFaces, ModuleFaces, Variant};
use super::restricted::{restricted_bicomplex, Restriction};
use super::{cohomology_report, verify_bicomplex_identities, Bicomplex, CohomologyReport};
use crate::bialgebra::Bialgebra;
use crate::error::{Error, Result};
use crate::linalg::Budget;
use crate::structures::{
    check_hopf_bimodule, check_hopf_module, check_left_hopf, check_right_hopf, check_yd, Defect,
    StructuredModule,
};

/// Everything a theory needs to build its bicomplex.
#[derive(Clone, Copy)]
pub struct TheoryInput<'a> {
    pub b: &'a Bialgebra,
    pub m: &'a StructuredModule,
    pub n: &'a StructuredModule,
    pub qmax: usize,
    pub budget: Budget,
}

pub trait Theory: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;

    /// Axiom defects of the inputs, tagged with the module they belong to.
    fn validate(&self, input: &TheoryInput) -> Result<Vec<(String, Defect)>>;

    /// Face maps whose identities are verified alongside the cohomology.
    fn faces<'a>(&self, input: &TheoryInput<'a>) -> Result<Box<dyn FaceSource + 'a>>;

    fn bicomplex(&self, input: &TheoryInput) -> Result<Bicomplex>;
}

type Checker = fn(&Bialgebra, &StructuredModule) -> Result<Vec<Defect>>;

fn tag_defects(input: &TheoryInput, check: Checker) -> Result<Vec<(String, Defect)>> {
    let mut out = Vec::new();
    for (label, m) in [("M", input.m), ("N", input.n)] {
        for d in check(input.b, m)? {
            out.push((label.to_string(), d));
        }
    }
    Ok(out)
}

struct ModuleTheory {
    name: &'static str,
    description: &'static str,
    variant: Variant,
    check: Checker,
}

impl Theory for ModuleTheory {
    fn name(&self) -> &'static str {
        self.name
    }

    fn description(&self) -> &'static str {
        self.description
    }

    fn validate(&self, input: &TheoryInput) -> Result<Vec<(String, Defect)>> {
        tag_defects(input, self.check)
    }

    fn faces<'a>(&self, input: &TheoryInput<'a>) -> Result<Box<dyn FaceSource + 'a>> {
        Ok(Box::new(ModuleFaces::new(input.b, input.m, input.n, self.variant, input.budget)?))
    }

    fn bicomplex(&self, input: &TheoryInput) -> Result<Bicomplex> {
        let faces = ModuleFaces::new(input.b, input.m, input.n, self.variant, input.budget)?;
        Bicomplex::from_source(self.name, &faces, input.qmax)
    }
}

struct GsTheory;

impl Theory for GsTheory {
    fn name(&self) -> &'static str {
        "gs"
    }

    fn description(&self) -> &'static str {
        "Gerstenhaber-Schack complex Hom(A^n, A^p); the modules are ignored"
    }

    fn validate(&self, _input: &TheoryInput) -> Result<Vec<(String, Defect)>> {
        Ok(Vec::new())
    }

    fn faces<'a>(&self, input: &TheoryInput<'a>) -> Result<Box<dyn FaceSource + 'a>> {
        Ok(Box::new(GsFaces::new(input.b, input.budget)))
    }

    fn bicomplex(&self, input: &TheoryInput) -> Result<Bicomplex> {
        Bicomplex::from_source("gs", &GsFaces::new(input.b, input.budget), input.qmax)
    }
}

struct RestrictedTheory {
    restriction: Restriction,
}

impl Theory for RestrictedTheory {
    fn name(&self) -> &'static str {
        match self.restriction {
            Restriction::Right => "r",
            Restriction::Left => "l",
            Restriction::TwoSided => "t",
        }
    }

    fn description(&self) -> &'static str {
        match self.restriction {
            Restriction::Right => "Hopf-module complex restricted to right A-linear cochains",
            Restriction::Left => "Hopf-module complex restricted to left A-colinear cochains",
            Restriction::TwoSided => "Hopf-bimodule complex: right linear and left colinear cochains",
        }
    }

    fn validate(&self, input: &TheoryInput) -> Result<Vec<(String, Defect)>> {
        let check: Checker = match self.restriction {
            Restriction::Right => check_right_hopf,
            Restriction::Left => check_left_hopf,
            Restriction::TwoSided => check_hopf_bimodule,
        };
        let mut out = tag_defects(input, check_hopf_module)?;
        for d in tag_defects(input, check)? {
            if !out.contains(&d) {
                out.push(d);
            }
        }
        Ok(out)
    }

    fn faces<'a>(&self, input: &TheoryInput<'a>) -> Result<Box<dyn FaceSource + 'a>> {
        Ok(Box::new(ModuleFaces::new(input.b, input.m, input.n, Variant::Hopf, input.budget)?))
    }

    fn bicomplex(&self, input: &TheoryInput) -> Result<Bicomplex> {
        let r = restricted_bicomplex(input.b, input.m, input.n, self.restriction, input.qmax, input.budget)?;
        match r.restricted {
            Some(bc) => Ok(bc),
            None => {
                let w = &r.closure[0];
                Err(Error::ContainmentViolation(format!(
                    "{} cochains not closed under d_{} at ({},{}), basis vector {}",
                    self.name(),
                    w.differential,
                    w.n,
                    w.p,
                    w.basis_index
                )))
            }
        }
    }
}

/// Named theories; lookups are by exact name.
pub struct Registry {
    theories: Vec<Box<dyn Theory>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry { theories: Vec::new() }
    }

    /// `yd`, `hopf`, `gs`, `r`, `l` and `t`.
    pub fn builtin() -> Self {
        let mut r = Registry::empty();
        let entries: Vec<Box<dyn Theory>> = vec![
            Box::new(ModuleTheory {
                name: "yd",
                description: "Yetter-Drinfel'd bicomplex Hom(A^n M, N A^p)",
                variant: Variant::YetterDrinfeld,
                check: check_yd,
            }),
            Box::new(ModuleTheory {
                name: "hopf",
                description: "left-right Hopf-module bicomplex Hom(A^n M, N A^p)",
                variant: Variant::Hopf,
                check: check_hopf_module,
            }),
            Box::new(GsTheory),
            Box::new(RestrictedTheory { restriction: Restriction::Right }),
            Box::new(RestrictedTheory { restriction: Restriction::Left }),
            Box::new(RestrictedTheory { restriction: Restriction::TwoSided }),
        ];
        for t in entries {
            r.register(t).expect("builtin names are distinct");
        }
        r
    }

    pub fn register(&mut self, theory: Box<dyn Theory>) -> Result<()> {
        if self.theories.iter().any(|t| t.name() == theory.name()) {
            return Err(Error::Invalid(format!("theory {} registered twice", theory.name())));
        }
        self.theories.push(theory);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&dyn Theory> {
        self.theories
            .iter()
            .find(|t| t.name() == name)
            .map(|t| t.as_ref())
            .ok_or_else(|| {
                Error::Invalid(format!("unknown theory {name:?}; known: {}", self.names().join(", ")))
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.theories.iter().map(|t| t.name()).collect()
    }
}

/// Validates the inputs, verifies the face identities and computes the
/// total cohomology. Invalid inputs are a precondition error.
pub fn run_theory(theory: &dyn Theory, input: &TheoryInput) -> Result<CohomologyReport> {
    let defects = theory.validate(input)?;
    if let Some((label, d)) = defects.first() {
        return Err(Error::Precondition(format!(
            "{label} fails {} at {:?} ({} defects in total)",
            d.check,
            d.witness,
            defects.len()
        )));
    }
    let faces = theory.faces(input)?;
    let identities = verify_bicomplex_identities(faces.as_ref(), input.qmax)?;
    let bc = theory.bicomplex(input)?;
    cohomology_report(&bc, Some(identities))
}
