//! The JSON structure-constant format, batch tasks and reports.

mod report;
mod schema;
mod task;
#[cfg(test)]
mod tests;

pub use report::{Report, Tables, Verdict};
pub use task::{exit_code, run_task, Command, TaskSpec};

use serde::Serialize;

use crate::bialgebra::catalog::catalog;
use crate::bialgebra::{verify_bialgebra, Bialgebra, CoproductTerms};
use crate::error::{Error, Result};
use crate::linalg::{Budget, FieldSpec, Scalar, SparseVec};
use crate::structures::fixtures::yd_catalog;
use crate::structures::{
    check_class, free_hopf_bimodule, free_hopf_module, regular_bimodule, regular_hopf_module,
    trivial_yd, StructuredModule,
};
use schema::{PairTerm, RawBialgebra, RawDocument, RawField, RawModule, Term};

/// A failed axiom found while loading a document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    /// `bialgebra` or `module <name>`.
    pub subject: String,
    pub check: String,
    pub witness: Vec<usize>,
}

/// A parsed and shape-checked input. Axiom failures do not reject the
/// document; they are collected in `diagnostics`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub bialgebra: Bialgebra,
    pub modules: Vec<StructuredModule>,
    pub task: Option<TaskSpec>,
    pub diagnostics: Vec<Diagnostic>,
}

impl InputDocument {
    /// From objects already in memory, running the same checks as
    /// [`parse_input`].
    pub fn new(bialgebra: Bialgebra, modules: Vec<StructuredModule>, task: Option<TaskSpec>) -> Result<Self> {
        let field = bialgebra.field();
        for m in &modules {
            m.validate_shape(&bialgebra)?;
        }
        let diagnostics = diagnose(&bialgebra, &modules)?;
        Ok(InputDocument { field, bialgebra, modules, task, diagnostics })
    }

    pub fn module(&self, name: &str) -> Result<&StructuredModule> {
        self.modules.iter().find(|m| m.name == name).ok_or_else(|| {
            let known: Vec<_> = self.modules.iter().map(|m| m.name.as_str()).collect();
            Error::Invalid(format!("no module named {name:?}; known: {known:?}"))
        })
    }

    /// True when the bialgebra and every module pass their axioms.
    pub fn is_valid(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

fn diagnose(b: &Bialgebra, modules: &[StructuredModule]) -> Result<Vec<Diagnostic>> {
    let mut out: Vec<Diagnostic> = verify_bialgebra(b)
        .into_iter()
        .map(|v| Diagnostic { subject: "bialgebra".into(), check: v.axiom.to_string(), witness: v.witness })
        .collect();
    for m in modules {
        for d in check_class(b, m)? {
            out.push(Diagnostic { subject: format!("module {}", m.name), check: d.check.to_string(), witness: d.witness });
        }
    }
    Ok(out)
}

fn field_of(raw: &RawField) -> Result<FieldSpec> {
    match (raw.kind.as_str(), raw.p) {
        ("rational", None) => Ok(FieldSpec::Rational),
        ("prime", Some(p)) => FieldSpec::prime(p),
        ("prime", None) => Err(Error::Invalid("field: prime field needs \"p\"".into())),
        ("rational", Some(_)) => Err(Error::Invalid("field: rational field takes no \"p\"".into())),
        (other, _) => Err(Error::Invalid(format!("field: unknown type {other:?}"))),
    }
}

struct Reader {
    field: FieldSpec,
}

impl Reader {
    fn coeff(&self, text: &str, path: &str) -> Result<Scalar> {
        self.field.parse(text).map_err(|e| match e {
            Error::InvalidCoefficient { text, reason } => {
                Error::InvalidCoefficient { text, reason: format!("{reason} (at {path})") }
            }
            other => other,
        })
    }

    fn index(&self, i: usize, bound: usize, path: &str) -> Result<usize> {
        if i >= bound {
            return Err(Error::DimensionMismatch(format!("{path}: basis index {i} >= dimension {bound}")));
        }
        Ok(i)
    }

    fn len(&self, got: usize, want: usize, path: &str) -> Result<()> {
        if got != want {
            return Err(Error::DimensionMismatch(format!("{path}: {got} entries, expected {want}")));
        }
        Ok(())
    }

    fn vector(&self, terms: &[Term], bound: usize, path: &str) -> Result<SparseVec> {
        terms
            .iter()
            .enumerate()
            .map(|(k, (i, c))| {
                let at = format!("{path}[{k}]");
                Ok((self.index(*i, bound, &at)?, self.coeff(c, &at)?))
            })
            .collect()
    }

    fn pairs(&self, terms: &[PairTerm], bounds: (usize, usize), path: &str) -> Result<CoproductTerms> {
        terms
            .iter()
            .enumerate()
            .map(|(k, (x, y, c))| {
                let at = format!("{path}[{k}]");
                Ok((self.index(*x, bounds.0, &at)?, self.index(*y, bounds.1, &at)?, self.coeff(c, &at)?))
            })
            .collect()
    }

    /// `[rows][cols]` of vectors in a `bound`-dimensional space.
    fn table(&self, t: &[Vec<Vec<Term>>], shape: (usize, usize), bound: usize, path: &str) -> Result<Vec<Vec<SparseVec>>> {
        self.len(t.len(), shape.0, path)?;
        t.iter()
            .enumerate()
            .map(|(a, row)| {
                let at = format!("{path}[{a}]");
                self.len(row.len(), shape.1, &at)?;
                row.iter().enumerate().map(|(u, v)| self.vector(v, bound, &format!("{at}[{u}]"))).collect()
            })
            .collect()
    }

    fn coaction(&self, t: &[Vec<PairTerm>], bounds: (usize, usize), dim: usize, path: &str) -> Result<Vec<CoproductTerms>> {
        self.len(t.len(), dim, path)?;
        t.iter().enumerate().map(|(u, v)| self.pairs(v, bounds, &format!("{path}[{u}]"))).collect()
    }

    fn bialgebra(&self, raw: &RawBialgebra) -> Result<Bialgebra> {
        if let Some(name) = &raw.catalog {
            let explicit = raw.dim.is_some() || raw.mult.is_some() || raw.comult.is_some();
            if explicit {
                return Err(Error::Invalid("bialgebra: give either \"catalog\" or explicit tables".into()));
            }
            let b = catalog(name, self.field)?;
            return Ok(match &raw.name {
                Some(n) => b.with_name(n.clone()),
                None => b,
            });
        }
        let missing = |key: &str| Error::Invalid(format!("bialgebra: missing \"{key}\""));
        let d = raw.dim.ok_or_else(|| missing("dim"))?;
        let mult = self.table(raw.mult.as_ref().ok_or_else(|| missing("mult"))?, (d, d), d, "bialgebra.mult")?;
        let unit = self.vector(raw.unit.as_ref().ok_or_else(|| missing("unit"))?, d, "bialgebra.unit")?;
        let comult = self.coaction(raw.comult.as_ref().ok_or_else(|| missing("comult"))?, (d, d), d, "bialgebra.comult")?;
        let counit = self.vector(raw.counit.as_ref().ok_or_else(|| missing("counit"))?, d, "bialgebra.counit")?;
        let name = raw.name.clone().unwrap_or_else(|| "A".to_string());
        Bialgebra::new(name, self.field, d, mult, unit, comult, counit)
    }

    fn module(&self, b: &Bialgebra, raw: &RawModule, path: &str) -> Result<StructuredModule> {
        if let Some(spec) = &raw.builtin {
            let explicit = raw.dim.is_some()
                || raw.action.is_some()
                || raw.right_action.is_some()
                || raw.coaction.is_some()
                || raw.left_coaction.is_some();
            if explicit {
                return Err(Error::Invalid(format!("{path}: give either \"builtin\" or explicit tensors")));
            }
            let m = builtin_module(b, spec)?.with_name(raw.name.clone());
            return Ok(match raw.class {
                Some(c) => m.with_class(c),
                None => m,
            });
        }
        let class = raw.class.ok_or_else(|| Error::Invalid(format!("{path}: missing \"class\"")))?;
        let dim = raw.dim.ok_or_else(|| Error::Invalid(format!("{path}: missing \"dim\"")))?;
        let d = b.dim();
        let mut m = StructuredModule::new(raw.name.clone(), self.field, dim, class);
        if let Some(t) = &raw.action {
            m = m.with_left_action(self.table(t, (d, dim), dim, &format!("{path}.action"))?)?;
        }
        if let Some(t) = &raw.right_action {
            m = m.with_right_action(self.table(t, (d, dim), dim, &format!("{path}.right_action"))?)?;
        }
        if let Some(t) = &raw.coaction {
            m = m.with_right_coaction(self.coaction(t, (dim, d), dim, &format!("{path}.coaction"))?)?;
        }
        if let Some(t) = &raw.left_coaction {
            m = m.with_left_coaction(self.coaction(t, (d, dim), dim, &format!("{path}.left_coaction"))?)?;
        }
        m.validate_shape(b)?;
        Ok(m)
    }
}

fn builtin_module(b: &Bialgebra, spec: &str) -> Result<StructuredModule> {
    let count = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::Invalid(format!("builtin {spec:?}: bad dimension {s:?}")))
    };
    if let Some(k) = spec.strip_prefix("free:") {
        return free_hopf_module(count(k)?, b, Budget::default());
    }
    if let Some(k) = spec.strip_prefix("free-bimodule:") {
        return free_hopf_bimodule(count(k)?, b, Budget::default());
    }
    if let Some(label) = spec.strip_prefix("catalog:") {
        return yd_catalog(b)?
            .into_iter()
            .find(|(l, _)| l == label)
            .map(|(_, m)| m)
            .ok_or_else(|| Error::Invalid(format!("no catalog module {label:?} over {}", b.name())));
    }
    match spec {
        "trivial" => Ok(trivial_yd(b)),
        "regular" => Ok(regular_hopf_module(b)),
        "regular-bimodule" => Ok(regular_bimodule(b)),
        _ => Err(Error::Invalid(format!("unknown builtin module {spec:?}"))),
    }
}

/// Parses and validates a document. Syntax errors carry the line and
/// column; shape errors name the offending path.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let raw: RawDocument = serde_json::from_str(text)
        .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
    let reader = Reader { field: field_of(&raw.field)? };
    let b = reader.bialgebra(&raw.bialgebra)?;
    let mut modules = Vec::with_capacity(raw.modules.len());
    for (k, rm) in raw.modules.iter().enumerate() {
        let m = reader.module(&b, rm, &format!("modules[{k}]"))?;
        if modules.iter().any(|x: &StructuredModule| x.name == m.name) {
            return Err(Error::Invalid(format!("modules[{k}]: duplicate name {:?}", m.name)));
        }
        modules.push(m);
    }
    InputDocument::new(b, modules, raw.task)
}

fn terms_out(v: &SparseVec) -> Vec<Term> {
    v.iter().map(|(i, s)| (*i, s.to_string())).collect()
}

fn pairs_out(v: &CoproductTerms) -> Vec<PairTerm> {
    v.iter().map(|(x, y, s)| (*x, *y, s.to_string())).collect()
}

fn table_out(t: &[Vec<SparseVec>]) -> Vec<Vec<Vec<Term>>> {
    t.iter().map(|r| r.iter().map(terms_out).collect()).collect()
}

fn raw_document(doc: &InputDocument) -> RawDocument {
    let b = &doc.bialgebra;
    let field = match doc.field {
        FieldSpec::Rational => RawField { kind: "rational".into(), p: None },
        FieldSpec::Prime { p } => RawField { kind: "prime".into(), p: Some(p) },
    };
    let bialgebra = RawBialgebra {
        name: Some(b.name().to_string()),
        catalog: None,
        dim: Some(b.dim()),
        mult: Some(table_out(b.mult_table())),
        unit: Some(terms_out(b.unit())),
        comult: Some(b.comult_table().iter().map(pairs_out).collect()),
        counit: Some(terms_out(b.counit())),
    };
    let modules = doc
        .modules
        .iter()
        .map(|m| RawModule {
            name: m.name.clone(),
            class: Some(m.class),
            builtin: None,
            dim: Some(m.dim),
            action: m.left_action.as_ref().map(|t| table_out(t.table())),
            right_action: m.right_action.as_ref().map(|t| table_out(t.table())),
            coaction: m.right_coaction.as_ref().map(|t| t.table().iter().map(pairs_out).collect()),
            left_coaction: m.left_coaction.as_ref().map(|t| t.table().iter().map(pairs_out).collect()),
        })
        .collect();
    RawDocument { field, bialgebra, modules, task: doc.task.clone() }
}

/// Explicit-table JSON of a document, readable by [`parse_input`].
pub fn emit_document(doc: &InputDocument) -> String {
    serde_json::to_string_pretty(&raw_document(doc)).expect("document serializes")
}

pub(crate) fn document_value(doc: &InputDocument) -> serde_json::Value {
    serde_json::to_value(raw_document(doc)).expect("document serializes")
}

/// A catalog bialgebra with its YD catalog modules, the regular Hopf module
/// `A` and the regular Hopf bimodule `A-bimod`.
pub fn catalog_document(name: &str, field: FieldSpec) -> Result<InputDocument> {
    let b = catalog(name, field)?;
    let mut modules: Vec<StructuredModule> = yd_catalog(&b)?.into_iter().map(|(_, m)| m).collect();
    modules.push(regular_hopf_module(&b).with_name("A"));
    modules.push(regular_bimodule(&b).with_name("A-bimod"));
    InputDocument::new(b, modules, None)
}
