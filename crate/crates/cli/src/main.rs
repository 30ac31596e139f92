//! `pbwcheck`: resolutions, central extensions and PBW tests for finitely
//! presented graded algebras and their deformations.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pbw_core::centralext::CentralExtension;
use pbw_core::pbw::{pbw_verdict, Method};
use pbw_core::presentation::{render, Presentation, RelationKind};
use pbw_core::report::{self, Report};
use pbw_core::resolution::minimal_resolution;
use pbw_core::{Field, FieldKind, GfRuntime, Rational, RuntimePrime};

const DEFAULT_MAX_DEG: usize = 10;
const DEFAULT_CENTRAL: &str = "z";

#[derive(Parser)]
#[command(name = "pbwcheck", version, about = "PBW tests for deformations of graded algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Presentation file.
    file: PathBuf,
    /// Degree bound N; overrides `option max-deg` in the file.
    #[arg(long)]
    max_deg: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Human-readable output instead of JSON.
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert series of A through degree N.
    Hilbert(Common),
    /// First four terms of the minimal resolution of the trivial module.
    Resolution(Common),
    /// Complexity c(A), exact or as a lower bound.
    Complexity(Common),
    /// The central extension D of a deformation.
    CentralExt {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        central: Option<String>,
        /// Also write D as a presentation file.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Whether the central variable is regular on D in low degrees.
    Regularity {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        central: Option<String>,
        /// Check degrees up to p (default: the complexity).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Decide the PBW property.
    PbwCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        central: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        method: Vec<MethodArg>,
        /// Include per-method wall times (breaks byte-identical output).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Jacobi,
    Regularity,
    Condition4,
    Oracle,
    All,
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Hilbert(c) | Command::Resolution(c) | Command::Complexity(c) => c,
            Command::CentralExt { common, .. }
            | Command::Regularity { common, .. }
            | Command::PbwCheck { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Hilbert(_) => "hilbert",
            Command::Resolution(_) => "resolution",
            Command::Complexity(_) => "complexity",
            Command::CentralExt { .. } => "central-ext",
            Command::Regularity { .. } => "regularity",
            Command::PbwCheck { .. } => "pbw-check",
        }
    }

    fn central(&self) -> Option<&str> {
        match self {
            Command::CentralExt { central, .. }
            | Command::Regularity { central, .. }
            | Command::PbwCheck { central, .. } => central.as_deref(),
            _ => None,
        }
    }
}

/// Report plus whether the answer was negative.
type Outcome = (Report, bool);

fn run<K: Field>(cmd: &Command, pres: &Presentation) -> Result<Outcome, String> {
    let n = cmd.common().max_deg.or(pres.max_deg).unwrap_or(DEFAULT_MAX_DEG);
    let zname = cmd
        .central()
        .map(str::to_string)
        .or_else(|| pres.central.clone())
        .unwrap_or_else(|| DEFAULT_CENTRAL.to_string());
    let e = |e: pbw_core::Error| e.to_string();
    let mut rep = Report::new::<K>(cmd.name(), &pres.alphabet, n);
    let mut negative = false;
    match cmd {
        Command::Hilbert(_) => {
            let alg = pres.algebra::<K>(n).map_err(e)?;
            rep.hilbert = Some((0..=n).map(|d| alg.dim(d)).collect());
        }
        Command::Resolution(_) => {
            let alg = pres.algebra::<K>(n).map_err(e)?;
            let res = minimal_resolution(&alg).map_err(e)?;
            rep.resolution = Some(report::resolution_section(&alg, &res));
        }
        Command::Complexity(_) => {
            let alg = pres.algebra::<K>(n).map_err(e)?;
            let res = minimal_resolution(&alg).map_err(e)?;
            rep.complexity = Some(report::complexity_section(&alg, &res.complexity()));
        }
        Command::CentralExt { export, .. } => {
            let def = pres.deformation::<K>(n).map_err(e)?;
            let d = CentralExtension::build(&def, &zname, n).map_err(e)?;
            if let Some(path) = export {
                let text = render(d.extended_alphabet(), &d.presentation_relations(), RelationKind::Graded, None);
                std::fs::write(path, text).map_err(|err| format!("{}: {err}", path.display()))?;
            }
            rep.central_extension = Some(report::central_ext_section(&d));
        }
        Command::Regularity { degree, .. } => {
            let def = pres.deformation::<K>(n).map_err(e)?;
            let p = match degree {
                Some(p) => *p,
                None => {
                    let res = minimal_resolution(def.base()).map_err(e)?;
                    res.complexity().value
                }
            };
            let d = CentralExtension::build(&def, &zname, n).map_err(e)?;
            let v = d.regular_to_degree(p).map_err(e)?;
            negative = !v.regular;
            rep.regularity = Some(report::regularity_section(&d, &v));
        }
        Command::PbwCheck { method, timings, .. } => {
            let def = pres.deformation::<K>(n).map_err(e)?;
            let methods: Vec<Method> = if method.contains(&MethodArg::All) {
                Method::ALL.to_vec()
            } else {
                method
                    .iter()
                    .map(|m| match m {
                        MethodArg::Jacobi => Method::Jacobi,
                        MethodArg::Regularity => Method::Regularity,
                        MethodArg::Condition4 => Method::Condition4,
                        MethodArg::Oracle => Method::Oracle,
                        MethodArg::All => unreachable!(),
                    })
                    .collect()
            };
            let out = pbw_verdict(&def, n, &methods, &zname).map_err(e)?;
            negative = out.pbw == Some(false);
            rep.pbw = Some(report::pbw_section(&pres.alphabet, &out, *timings));
        }
    }
    Ok((rep, negative))
}

fn load(path: &Path) -> Result<Presentation, String> {
    Presentation::load(path).map_err(|e| e.to_string())
}

fn main_inner(cli: &Cli) -> Result<bool, String> {
    let common = cli.command.common();
    let pres = load(&common.file)?;
    let (rep, negative) = match pres.field {
        FieldKind::Rational => run::<Rational>(&cli.command, &pres)?,
        FieldKind::Prime(p) => {
            RuntimePrime::set(p).map_err(|e| e.to_string())?;
            run::<GfRuntime>(&cli.command, &pres)?
        }
    };
    let body = if common.text {
        rep.to_text()
    } else {
        let mut s = serde_json::to_string_pretty(&rep).map_err(|e| e.to_string())?;
        s.push('\n');
        s
    };
    match &common.out {
        Some(path) => std::fs::write(path, body).map_err(|err| format!("{}: {err}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(negative)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match main_inner(&cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
