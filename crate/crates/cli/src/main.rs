use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qgk::algebra::{check_pbw_consistency, Presentation};
use qgk::gk::{self, GkResult};
use qgk::io::{self as qio, Document};
use qgk::scalar::Assignment;
use qgk::{catalog, Error};

/// Q-solvable algebras in PBW normal form and the transform to twisted
/// Laurent generators.
#[derive(Parser)]
#[command(name = "qgk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a presentation's invariants and PBW consistency.
    Validate { file: PathBuf },
    /// Run the transform; the result is JSON, the summary a table.
    Gk {
        file: PathBuf,
        /// Write the result here and the summary to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a transform result against its input.
    Verify { result: PathBuf, original: PathBuf },
    /// Evaluate the parameters of a presentation or result.
    Specialize {
        file: PathBuf,
        /// `name=value`, repeated for every parameter.
        #[arg(long = "set", required = true)]
        set: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Catalog presentations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Names of the catalog families.
    List,
    /// Print a family's presentation.
    Emit {
        name: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Reported already; exit 1.
    Reported,
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn summary(r: &GkResult) -> String {
    let params = r.input.params();
    let mut s = String::new();
    s.push_str(&format!("{:<6} {:<8} {:<12} {:<16} {}\n", "stage", "pivot", "generator", "eigenvalue", "components"));
    for (k, st) in r.stages.iter().enumerate() {
        let pivot = r.stage_input(k).names()[st.pivot].clone();
        for g in st.generators.iter().filter(|g| g.eigenvalue.is_some()) {
            let ev = g.eigenvalue.as_ref().map(|e| e.format(params)).unwrap_or_default();
            let all: Vec<String> = g.eigenvalues.iter().map(|e| e.format(params)).collect();
            s.push_str(&format!("{:<6} {:<8} {:<12} {:<16} {}\n", k + 1, pivot, g.name, ev, all.join(", ")));
        }
    }
    s.push_str("denominators:\n");
    let mut any = false;
    for (k, st) in r.stages.iter().enumerate() {
        for (a, b) in &st.denominators {
            any = true;
            s.push_str(&format!("  stage {}: {}\n", k + 1, gk::difference_text(a, b, params)));
        }
    }
    if !any {
        s.push_str("  none\n");
    }
    s.push_str("final relations:\n");
    let fin = &r.final_presentation;
    for i in 0..fin.n() {
        for j in i + 1..fin.n() {
            s.push_str(&format!("  {}\n", fin.relation_text(i, j)));
        }
    }
    s
}

fn validate(file: &Path) -> Result<(), Failure> {
    let p = qio::presentation_from_json(&read(file)?)?;
    let diags = p.validate();
    if !diags.is_empty() {
        for d in &diags {
            println!("invalid: {d}");
        }
        return Err(Failure::Reported);
    }
    println!("invariants: ok");
    match check_pbw_consistency(&p) {
        Ok(()) => {
            println!("diamond check: ok");
            Ok(())
        }
        Err(c) => {
            println!("diamond check: {c}");
            Err(Failure::Reported)
        }
    }
}

fn run_gk(file: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let p = qio::presentation_from_json(&read(file)?)?;
    let r = gk::gk_transform(&p)?;
    let json = qio::result_to_json(&r);
    match out {
        Some(path) => {
            write_out(Some(path), &json)?;
            print!("{}", summary(&r));
        }
        None => {
            print!("{json}");
            eprint!("{}", summary(&r));
        }
    }
    Ok(())
}

fn verify(result: &Path, original: &Path) -> Result<(), Failure> {
    let r = qio::result_from_json(&read(result)?)?;
    let p = qio::presentation_from_json(&read(original)?)?;
    let report = gk::verify_twisted(&r, &p);
    print!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Reported)
    }
}

fn specialize(file: &Path, set: &[String], out: Option<&Path>) -> Result<(), Failure> {
    let text = match qio::document_from_json(&read(file)?)? {
        Document::Presentation(p) => {
            let point = Assignment::parse(p.params(), set)?;
            qio::presentation_to_json(&p.specialize(&point)?)
        }
        Document::Result(r) => {
            let point = Assignment::parse(r.input.params(), set)?;
            qio::result_to_json(&r.specialize(&point)?)
        }
    };
    write_out(out, &text)
}

fn emit(name: &str, n: usize, out: Option<&Path>) -> Result<(), Failure> {
    let p: Presentation = catalog::build(name, n)?;
    write_out(out, &qio::presentation_to_json(&p))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::WeylDetected(_) => 2,
        Error::Parse { .. }
        | Error::Format(_)
        | Error::Malformed(_)
        | Error::InvalidParameters(_)
        | Error::UnknownParameter(_)
        | Error::NotGamma(_)
        | Error::UnknownName(_)
        | Error::ZeroDenominator
        | Error::DivisionByZero => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Gk { file, out } => run_gk(file, out.as_deref()),
        Command::Verify { result, original } => verify(result, original),
        Command::Specialize { file, set, out } => specialize(file, set, out.as_deref()),
        Command::Catalog { action: CatalogAction::List } => {
            for name in catalog::NAMES {
                println!("{name}");
            }
            Ok(())
        }
        Command::Catalog { action: CatalogAction::Emit { name, n, out } } => emit(name, *n, out.as_deref()),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reported) => ExitCode::from(1),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if let Error::WeylDetected(cert) = &e {
                println!("Weyl certificate");
                println!("{}", cert.format());
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
