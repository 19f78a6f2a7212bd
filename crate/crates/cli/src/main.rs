use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ydcoh::io::{catalog_document, emit_document, exit_code, parse_input, run_task, Command, InputDocument, TaskSpec};
use ydcoh::linalg::FieldSpec;
use ydcoh::Error;

#[derive(Parser)]
#[command(name = "ydcoh", version, about = "Deformation cohomology of Yetter-Drinfel'd modules and Hopf (bi)modules")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct Common {
    /// Input document (JSON)
    file: PathBuf,
    /// Cap on rows*cols of any materialized matrix
    #[arg(long)]
    budget: Option<u64>,
    /// Also write the machine-readable report here
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct Modules {
    /// Source module, by name
    #[arg(short, long)]
    m: Option<String>,
    /// Target module, by name (defaults to the source)
    #[arg(short, long)]
    n: Option<String>,
}

#[derive(Subcommand)]
enum Sub {
    /// Verify the bialgebra and module axioms
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Total cohomology of one of the bicomplexes
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        modules: Modules,
        /// yd, hopf, gs, r, l or t
        #[arg(long)]
        theory: Option<String>,
        #[arg(long)]
        qmax: Option<usize>,
    },
    /// Vanishing of cohomology for Hopf modules, with the single-column cross-check
    Vanishing {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        modules: Modules,
        #[arg(long)]
        qmax: Option<usize>,
        #[arg(long)]
        dim_v: Option<usize>,
        #[arg(long)]
        dim_w: Option<usize>,
    },
    /// Check the contracting homotopies on every kernel vector
    HomotopyVerify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        qmax: Option<usize>,
        #[arg(long)]
        dim_v: Option<usize>,
        #[arg(long)]
        dim_w: Option<usize>,
    },
    /// Compare H^n with Ext^n over the Drinfel'd double
    ExtCompare {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        modules: Modules,
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Print a catalog bialgebra and its modules as an input document
    CatalogEmit {
        /// sweedler, truncated-monoid, cyclic-group(n) or dual-of(...)
        name: String,
        /// Work over F_p instead of Q
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Run the task block stored in the document
    Run {
        #[command(flatten)]
        common: Common,
    },
}

fn load(path: &Path) -> Result<InputDocument, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}

fn task_of(doc: &InputDocument, command: Command) -> TaskSpec {
    match &doc.task {
        Some(t) => TaskSpec { command, ..t.clone() },
        None => TaskSpec::new(command),
    }
}

fn execute(common: &Common, command: Option<Command>, edit: impl FnOnce(&mut TaskSpec)) -> Result<u8, Error> {
    let mut doc = load(&common.file)?;
    let mut task = match command {
        Some(c) => task_of(&doc, c),
        None => doc.task.clone().ok_or_else(|| Error::Invalid("document has no task block".into()))?,
    };
    edit(&mut task);
    if common.budget.is_some() {
        task.budget = common.budget;
    }
    doc.task = Some(task);
    let report = run_task(&doc)?;
    print!("{}", report.render_text());
    if let Some(path) = &common.json {
        fs::write(path, report.to_json() + "\n").map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    }
    Ok(report.exit_code())
}

fn set<T>(slot: &mut Option<T>, value: Option<T>) {
    if value.is_some() {
        *slot = value;
    }
}

fn dispatch(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Sub::Check { common } => execute(&common, Some(Command::Check), |_| {}),
        Sub::Cohomology { common, modules, theory, qmax } => execute(&common, Some(Command::Cohomology), |t| {
            set(&mut t.theory, theory);
            set(&mut t.qmax, qmax);
            set(&mut t.m, modules.m);
            set(&mut t.n, modules.n);
        }),
        Sub::Vanishing { common, modules, qmax, dim_v, dim_w } => execute(&common, Some(Command::Vanishing), |t| {
            set(&mut t.qmax, qmax);
            set(&mut t.dim_v, dim_v);
            set(&mut t.dim_w, dim_w);
            set(&mut t.m, modules.m);
            set(&mut t.n, modules.n);
        }),
        Sub::HomotopyVerify { common, qmax, dim_v, dim_w } => execute(&common, Some(Command::HomotopyVerify), |t| {
            set(&mut t.qmax, qmax);
            set(&mut t.dim_v, dim_v);
            set(&mut t.dim_w, dim_w);
        }),
        Sub::ExtCompare { common, modules, nmax } => execute(&common, Some(Command::ExtCompare), |t| {
            set(&mut t.nmax, nmax);
            set(&mut t.m, modules.m);
            set(&mut t.n, modules.n);
        }),
        Sub::CatalogEmit { name, prime } => {
            let field = match prime {
                Some(p) => FieldSpec::prime(p)?,
                None => FieldSpec::Rational,
            };
            println!("{}", emit_document(&catalog_document(&name, field)?));
            Ok(0)
        }
        Sub::Run { common } => execute(&common, None, |_| {}),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
