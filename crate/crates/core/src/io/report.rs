use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{Command, Diagnostic, InputDocument};
use crate::bicomplex::{CohomologyReport, HomotopySweep, VanishingReport};
use crate::conventions;
use crate::double::Comparison;

/// `asserted` verdicts decide the exit status; the others are evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub asserted: bool,
    pub detail: String,
}

impl Verdict {
    pub fn asserted(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Verdict { name: name.into(), passed, asserted: true, detail: detail.into() }
    }

    pub fn info(name: impl Into<String>, passed: bool) -> Self {
        Verdict { name: name.into(), passed, asserted: false, detail: String::new() }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Tables {
    Check { antipode: bool, skew_antipode: bool, diagnostics: Vec<Diagnostic> },
    Cohomology(CohomologyReport),
    Vanishing(VanishingReport),
    Homotopy(HomotopySweep),
    ExtCompare(Comparison),
    Catalog { document: serde_json::Value },
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: Command,
    pub field: String,
    pub bialgebra: String,
    pub conventions: BTreeMap<String, String>,
    pub verdicts: Vec<Verdict>,
    pub tables: Tables,
    /// Wall-clock milliseconds; the only nondeterministic field.
    pub runtimes_ms: BTreeMap<String, f64>,
}

impl Report {
    pub(crate) fn new(
        command: Command,
        doc: &InputDocument,
        verdicts: Vec<Verdict>,
        tables: Tables,
        runtimes_ms: BTreeMap<String, f64>,
    ) -> Self {
        Report {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            field: doc.field.to_string(),
            bialgebra: doc.bialgebra.name().to_string(),
            conventions: conventions::all().into_iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            verdicts,
            tables,
            runtimes_ms,
        }
    }

    /// True iff every asserted verdict passed.
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed || !v.asserted)
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON report with runtimes cleared, byte-identical across runs.
    pub fn to_json_deterministic(&self) -> String {
        let mut r = self.clone();
        r.runtimes_ms.clear();
        r.to_json()
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {} over {} ({})", self.tool, self.version, self.command, self.bialgebra, self.field);
        self.render_tables(&mut s);
        if !self.verdicts.is_empty() {
            let _ = writeln!(s, "\nverdicts");
            for v in &self.verdicts {
                let tag = match (v.asserted, v.passed) {
                    (true, true) => "PASS",
                    (true, false) => "FAIL",
                    (false, true) => "yes ",
                    (false, false) => "no  ",
                };
                if v.detail.is_empty() {
                    let _ = writeln!(s, "  {tag}  {}", v.name);
                } else {
                    let _ = writeln!(s, "  {tag}  {}: {}", v.name, v.detail);
                }
            }
        }
        for (k, ms) in &self.runtimes_ms {
            let _ = writeln!(s, "\nruntime {k}: {ms:.1} ms");
        }
        s
    }

    fn render_tables(&self, s: &mut String) {
        match &self.tables {
            Tables::Check { diagnostics, .. } => {
                if !diagnostics.is_empty() {
                    let _ = writeln!(s, "\ndiagnostics");
                    for d in diagnostics {
                        let _ = writeln!(s, "  {}: {} at {:?}", d.subject, d.check, d.witness);
                    }
                }
            }
            Tables::Cohomology(r) => cohomology_table(s, r),
            Tables::Vanishing(r) => {
                cohomology_table(s, &r.direct);
                let _ = writeln!(s, "\n  q  single-column");
                for (q, h) in r.assembly.iter().enumerate() {
                    let _ = writeln!(s, "  {q:>1}  {h:>13}");
                }
            }
            Tables::Homotopy(sw) => {
                let _ = writeln!(s, "\nV = k^{}, W = k^{}", sw.dim_v, sw.dim_w);
                let _ = writeln!(s, "  kind     n  p  kernel  reproduced");
                for r in &sw.rows {
                    let kind = serde_json::to_value(r.kind).expect("unit variant");
                    let _ = writeln!(
                        s,
                        "  {:<7} {:>2} {:>2} {:>7} {:>11}",
                        kind.as_str().unwrap_or("?"),
                        r.n,
                        r.p,
                        r.kernel_dim,
                        r.reproduced
                    );
                }
            }
            Tables::ExtCompare(c) => {
                let _ = writeln!(s, "\nM = {}, N = {}, dim D(A) = {}", c.m, c.n, c.double_dim);
                let _ = writeln!(s, "  n  H^n  Ext^n  agree");
                for r in &c.rows {
                    let open = if r.asserted { "" } else { "  (not asserted)" };
                    let _ = writeln!(s, "  {}  {:>3}  {:>5}  {:<5}{open}", r.n, r.h, r.ext, r.agree);
                }
            }
            Tables::Catalog { document } => {
                let _ = writeln!(s, "{}", serde_json::to_string_pretty(document).expect("json value"));
            }
        }
    }
}

fn cohomology_table(s: &mut String, r: &CohomologyReport) {
    let _ = writeln!(s, "\ntheory {}, qmax {}", r.theory, r.qmax);
    let _ = writeln!(s, "  q  dim Tot  ker D  im D  H^q");
    for d in &r.degrees {
        let _ = writeln!(s, "  {}  {:>7}  {:>5}  {:>4}  {:>3}", d.q, d.total_dim, d.kernel_dim, d.image_dim, d.h);
    }
}
