use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::report::{Report, Tables, Verdict};
use super::{document_value, InputDocument};
use crate::bialgebra::{solve_antipode, AntipodeKind};
use crate::bicomplex::{
    homotopy_sweep, hopf_vanishing_check, hopf_vanishing_general, run_theory, IdentityReport,
    Registry, TheoryInput,
};
use crate::double::compare_h_ext;
use crate::error::{Error, Result};
use crate::linalg::Budget;
use crate::structures::{trivial_yd, ModuleClass, StructuredModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Check,
    Cohomology,
    Vanishing,
    HomotopyVerify,
    ExtCompare,
    CatalogEmit,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

/// The `task` block. Unset parameters take the defaults listed here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub command: Command,
    /// Default `yd`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theory: Option<String>,
    /// Source module; defaults to the first module of a fitting class, or
    /// the trivial module.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    /// Default 3.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qmax: Option<usize>,
    /// Default 2.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nmax: Option<usize>,
    /// Default 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_v: Option<usize>,
    /// Default 1.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_w: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

impl TaskSpec {
    pub fn new(command: Command) -> Self {
        TaskSpec {
            command,
            theory: None,
            m: None,
            n: None,
            qmax: None,
            nmax: None,
            dim_v: None,
            dim_w: None,
            budget: None,
        }
    }

    fn budget(&self) -> Budget {
        self.budget.map(Budget).unwrap_or_default()
    }
}

/// Process exit status for an error: 3 for the entry budget, 1 when a
/// verified identity or assertion failed, 2 for anything wrong with the
/// input.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::AssertionFailed(_)
        | Error::ContainmentViolation(_)
        | Error::ConventionMismatch(_)
        | Error::DecompositionFailure(_) => 1,
        _ => 2,
    }
}

fn pick(doc: &InputDocument, name: Option<&str>, classes: &[ModuleClass]) -> Result<StructuredModule> {
    if let Some(name) = name {
        return doc.module(name).cloned();
    }
    Ok(doc
        .modules
        .iter()
        .find(|m| classes.contains(&m.class))
        .cloned()
        .unwrap_or_else(|| trivial_yd(&doc.bialgebra).with_name("trivial")))
}

fn identity_verdict(r: &IdentityReport, qmax: usize) -> Verdict {
    let detail = match r.failures.first() {
        None => format!("{} identities checked", r.checked),
        Some(f) => format!(
            "{} of {} fail, first {:?} at ({},{}) i={} j={}",
            r.failures.len(),
            r.checked,
            f.family,
            f.n,
            f.p,
            f.i,
            f.j
        ),
    };
    Verdict::asserted(format!("bicomplex identities for n+p <= {qmax}"), r.passed(), detail)
}

fn check(doc: &InputDocument) -> (Vec<Verdict>, Tables) {
    let b = &doc.bialgebra;
    let count = |subject: &str| doc.diagnostics.iter().filter(|d| d.subject == subject).count();
    let failures = |n: usize| if n == 0 { "all hold".to_string() } else { format!("{n} failures") };
    let mut verdicts = vec![];
    let k = count("bialgebra");
    verdicts.push(Verdict::asserted("bialgebra axioms", k == 0, failures(k)));
    for m in &doc.modules {
        let k = count(&format!("module {}", m.name));
        verdicts.push(Verdict::asserted(format!("module {} ({})", m.name, m.class), k == 0, failures(k)));
    }
    let antipode = solve_antipode(b, AntipodeKind::Antipode).is_some();
    let skew_antipode = solve_antipode(b, AntipodeKind::Skew).is_some();
    verdicts.push(Verdict::info("antipode exists", antipode));
    verdicts.push(Verdict::info("skew antipode exists", skew_antipode));
    let tables = Tables::Check { antipode, skew_antipode, diagnostics: doc.diagnostics.clone() };
    (verdicts, tables)
}

/// Runs the document's task block.
pub fn run_task(doc: &InputDocument) -> Result<Report> {
    let task = doc.task.as_ref().ok_or_else(|| Error::Invalid("document has no task block".into()))?;
    let start = Instant::now();
    let b = &doc.bialgebra;
    let budget = task.budget();
    let qmax = task.qmax.unwrap_or(3);
    let (verdicts, tables) = match task.command {
        Command::Check => check(doc),
        Command::Cohomology => {
            let registry = Registry::builtin();
            let theory = registry.get(task.theory.as_deref().unwrap_or("yd"))?;
            let classes: &[ModuleClass] = match theory.name() {
                "yd" => &[ModuleClass::Yd],
                "hopf" => &[ModuleClass::Hopf, ModuleClass::HopfBimodule],
                _ => &[ModuleClass::HopfBimodule],
            };
            let m = pick(doc, task.m.as_deref(), classes)?;
            let n = pick(doc, task.n.as_deref().or(task.m.as_deref()), classes)?;
            let report = run_theory(theory, &TheoryInput { b, m: &m, n: &n, qmax, budget })?;
            let verdicts = report.identities.iter().map(|r| identity_verdict(r, qmax)).collect();
            (verdicts, Tables::Cohomology(report))
        }
        Command::Vanishing => {
            let report = match (&task.m, &task.n) {
                (None, None) => hopf_vanishing_check(b, task.dim_v.unwrap_or(1), task.dim_w.unwrap_or(1), qmax, budget)?,
                (m, n) => {
                    let m = pick(doc, m.as_deref(), &[])?;
                    let n = pick(doc, n.as_deref().or(task.m.as_deref()), &[])?;
                    hopf_vanishing_general(b, &m, &n, qmax, budget)?
                }
            };
            let mut verdicts: Vec<Verdict> = report.direct.identities.iter().map(|r| identity_verdict(r, qmax)).collect();
            let h: Vec<String> = report.direct.h_vector().iter().map(|h| h.to_string()).collect();
            verdicts.push(Verdict::asserted(
                format!("H^q = 0 for 1 <= q <= {}", qmax.saturating_sub(1)),
                report.vanishes,
                format!("H = [{}]", h.join(", ")),
            ));
            let a: Vec<String> = report.assembly.iter().map(|h| h.to_string()).collect();
            verdicts.push(Verdict::asserted(
                "single-column evaluation agrees",
                report.agree,
                format!("column = [{}]", a.join(", ")),
            ));
            (verdicts, Tables::Vanishing(report))
        }
        Command::HomotopyVerify => {
            let max_total = qmax.saturating_sub(1);
            let sweep = homotopy_sweep(b, task.dim_v.unwrap_or(1), task.dim_w.unwrap_or(1), max_total, budget)?;
            let vectors: usize = sweep.rows.iter().map(|r| r.kernel_dim).sum();
            let ok: usize = sweep.rows.iter().map(|r| r.reproduced).sum();
            let verdict = Verdict::asserted(
                format!("homotopies reproduce kernel vectors for n+p <= {max_total}"),
                sweep.passed(),
                format!("{ok} of {vectors}"),
            );
            (vec![verdict], Tables::Homotopy(sweep))
        }
        Command::ExtCompare => {
            let m = pick(doc, task.m.as_deref(), &[])?;
            let n = pick(doc, task.n.as_deref().or(task.m.as_deref()), &[])?;
            let cmp = compare_h_ext(b, &m, &n, task.nmax.unwrap_or(2), budget)?;
            let verdicts = cmp
                .rows
                .iter()
                .map(|r| {
                    let name = format!("H^{0} = Ext^{0}", r.n);
                    let detail = format!("{} vs {}", r.h, r.ext);
                    if r.asserted {
                        Verdict::asserted(name, r.agree, detail)
                    } else {
                        Verdict { detail, ..Verdict::info(name, r.agree) }
                    }
                })
                .collect();
            (verdicts, Tables::ExtCompare(cmp))
        }
        Command::CatalogEmit => {
            let mut plain = doc.clone();
            plain.task = None;
            (vec![], Tables::Catalog { document: document_value(&plain) })
        }
    };
    let mut runtimes_ms = BTreeMap::new();
    runtimes_ms.insert("total".to_string(), start.elapsed().as_secs_f64() * 1e3);
    Ok(Report::new(task.command, doc, verdicts, tables, runtimes_ms))
}
