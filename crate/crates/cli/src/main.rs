use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lexfan::io::{self, from_json, to_json, ComplexWire, FanWire, LaurentWire, PolyhedronWire};
use lexfan::{
    cone_over_complex, fiber_report, hilbert_basis, is_complete_fan, is_member, star_fan, tilted_generators,
    validate_complex, weight, Error, QAdmissibleFan, QComplex, QMonomial, QPolyhedron, Q,
};

#[derive(Parser)]
#[command(name = "lexfan", version, about = "Polyhedral geometry over lexicographic value groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a polyhedron, complex or fan document.
    Validate { input: PathBuf },
    /// Recession complex of a fan at a level.
    Recession {
        #[arg(long)]
        level: usize,
        input: PathBuf,
    },
    /// Vertices of a polyhedron or complex.
    Vertices { input: PathBuf },
    /// Nonempty faces of a polyhedron.
    Faces { input: PathBuf },
    /// Star fan of a complex at a vertex; rows of the point are separated by `;`.
    Star {
        #[arg(long)]
        vertex: String,
        input: PathBuf,
    },
    /// Components, stars and adjacency of every fiber of a fan.
    FiberReport {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        input: PathBuf,
    },
    /// Weight of a Laurent document over a polyhedron.
    Weight {
        #[arg(long)]
        laurent: PathBuf,
        input: PathBuf,
    },
    /// Membership of a valued monomial in the tilted algebra of a polyhedron.
    Member {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        val: String,
        input: PathBuf,
    },
    /// Generators of the tilted algebra of a pointed polyhedron.
    Generators { input: PathBuf },
    /// Admissible fan over a complex.
    ConeOver { input: PathBuf },
    /// SVG drawing of a complex, or of a fan's recession complex at --level.
    Plot {
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        level: Option<usize>,
        input: PathBuf,
    },
}

enum Failure {
    /// A well-formed input that fails a check.
    Invalid(String),
    Malformed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => {
                Failure::Malformed(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

enum Doc {
    Polyhedron(QPolyhedron),
    Complex(QComplex, Option<Vec<(usize, usize)>>),
    Fan(QAdmissibleFan, Option<Vec<QComplex>>),
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { path: field, message } => {
            let field = if field.is_empty() || field == "." { "$".to_string() } else { field };
            Failure::Malformed(format!("{}: {field}: {message}", path.display()))
        }
        other => other.into(),
    }
}

fn load(path: &Path) -> std::result::Result<Doc, Failure> {
    let text = read(path)?;
    let value: Value = from_json(&text).map_err(|e| in_file(path, e))?;
    let has = |k: &str| value.get(k).is_some();
    let doc = if has("cones") {
        let w: FanWire = from_json(&text).map_err(|e| in_file(path, e))?;
        let (f, e) = io::fan_from_wire(&w).map_err(|e| in_file(path, e))?;
        Doc::Fan(f, e)
    } else if has("cells") {
        let w: ComplexWire = from_json(&text).map_err(|e| in_file(path, e))?;
        let (c, i) = io::complex_from_wire(&w).map_err(|e| in_file(path, e))?;
        Doc::Complex(c, i)
    } else if has("halfspaces") {
        let w: PolyhedronWire = from_json(&text).map_err(|e| in_file(path, e))?;
        Doc::Polyhedron(io::polyhedron_from_wire(&w).map_err(|e| in_file(path, e))?)
    } else {
        return Err(Failure::Malformed(format!(
            "{}: $: expected one of the fields \"halfspaces\", \"cells\" or \"cones\"",
            path.display()
        )));
    };
    Ok(doc)
}

fn load_polyhedron(path: &Path) -> std::result::Result<QPolyhedron, Failure> {
    match load(path)? {
        Doc::Polyhedron(p) => Ok(p),
        _ => Err(Failure::Malformed(format!("{}: expected a polyhedron document", path.display()))),
    }
}

fn load_complex(path: &Path) -> std::result::Result<QComplex, Failure> {
    match load(path)? {
        Doc::Complex(c, _) => Ok(c),
        _ => Err(Failure::Malformed(format!("{}: expected a complex document", path.display()))),
    }
}

fn load_fan(path: &Path) -> std::result::Result<QAdmissibleFan, Failure> {
    match load(path)? {
        Doc::Fan(f, _) => Ok(f),
        _ => Err(Failure::Malformed(format!("{}: expected a fan document", path.display()))),
    }
}

fn same_complex(a: &QComplex, b: &QComplex) -> bool {
    a.cells().len() == b.cells().len()
        && a.cells().iter().all(|c| b.find_cell(c).is_some())
        && b.cells().iter().all(|c| a.find_cell(c).is_some())
}

fn validate(path: &Path) -> Outcome {
    let mut problems: Vec<String> = Vec::new();
    match load(path)? {
        Doc::Polyhedron(p) => {
            if p.is_empty() {
                problems.push("polyhedron is empty".into());
            }
        }
        Doc::Complex(c, incidences) => {
            problems.extend(validate_complex(&c).violations.iter().map(|v| v.to_string()));
            if let Some(expected) = incidences {
                let mut expected = expected;
                expected.sort_unstable();
                if problems.is_empty() && expected != c.incidences() {
                    problems.push(format!("declared incidences {expected:?} differ from computed {:?}", c.incidences()));
                }
            }
        }
        Doc::Fan(f, expected) => {
            problems.extend(f.validate()?.violations.iter().map(|v| v.to_string()));
            if let Some(recs) = expected {
                for (level, want) in recs.iter().enumerate() {
                    if !same_complex(&f.recession(level)?, want) {
                        problems.push(format!("recession complex at level {level} differs from expected_rec[{level}]"));
                    }
                }
            }
        }
    }
    if problems.is_empty() {
        Ok("valid".into())
    } else {
        Err(Failure::Invalid(format!("invalid\n{}", problems.join("\n"))))
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { input } => validate(&input),
        Command::Recession { level, input } => {
            let fan = load_fan(&input)?;
            Ok(to_json(&io::complex_to_wire(&fan.recession(level)?, false)))
        }
        Command::Vertices { input } => {
            let points = match load(&input)? {
                Doc::Polyhedron(p) => p.vertices()?,
                Doc::Complex(c, _) => c.vertices().into_iter().map(|(_, p)| p).collect(),
                Doc::Fan(..) => return Err(Failure::Malformed("vertices expects a polyhedron or complex".into())),
            };
            let wire: Vec<_> = points.iter().map(io::point_to_wire).collect();
            Ok(to_json(&wire))
        }
        Command::Faces { input } => {
            let p = load_polyhedron(&input)?;
            let faces: Vec<Value> = p
                .faces()
                .iter()
                .map(|f| json!({"tight": f.tight, "dim": f.dim, "witness": io::point_to_wire(&f.witness)}))
                .collect();
            Ok(to_json(&faces))
        }
        Command::Star { vertex, input } => {
            let c = load_complex(&input)?;
            let w = io::parse_point::<Q>(&vertex, c.n(), c.k())?;
            let fan = star_fan(&c, &w)?;
            let complete = is_complete_fan(&fan)?;
            let maximal = fan
                .maximal_cones()
                .into_iter()
                .map(|i| {
                    let cone = &fan.cones()[i];
                    Ok(json!({"rays": cone.rays(), "hilbert_basis": hilbert_basis(cone)?}))
                })
                .collect::<lexfan::Result<Vec<Value>>>()?;
            Ok(to_json(&json!({"fan": io::rational_fan_to_wire(&fan), "complete": complete, "maximal": maximal})))
        }
        Command::FiberReport { format, input } => {
            let report = fiber_report(&load_fan(&input)?)?;
            Ok(match format {
                Format::Text => report.to_string(),
                Format::Machine => to_json(&io::fiber_report_to_wire(&report)),
            })
        }
        Command::Weight { laurent, input } => {
            let p = load_polyhedron(&input)?;
            let text = read(&laurent)?;
            let wire: LaurentWire = from_json(&text).map_err(|e| in_file(&laurent, e))?;
            let f = io::laurent_from_wire(&wire, p.n(), p.k()).map_err(|e| in_file(&laurent, e))?;
            Ok(to_json(&io::lexvec_to_wire(&weight(&p, &f)?)))
        }
        Command::Member { u, val, input } => {
            let p = load_polyhedron(&input)?;
            let m = QMonomial::new(io::parse_ints(&u, p.n())?, io::parse_lexvec(&val, p.k())?);
            Ok(is_member(&p, &m)?.to_string())
        }
        Command::Generators { input } => Ok(to_json(&io::generators_to_wire(&tilted_generators(&load_polyhedron(&input)?)?))),
        Command::ConeOver { input } => Ok(to_json(&io::fan_to_wire(&cone_over_complex(&load_complex(&input)?)?))),
        Command::Plot { output, level, input } => {
            let complex = match (load(&input)?, level) {
                (Doc::Fan(f, _), Some(l)) => f.recession(l)?,
                (Doc::Fan(..), None) => return Err(Failure::Malformed("plotting a fan requires --level".into())),
                (Doc::Complex(c, _), None) => c,
                (Doc::Polyhedron(p), None) => QComplex::from_faces(&p),
                (_, Some(_)) => return Err(Failure::Malformed("--level applies only to fan documents".into())),
            };
            let svg = lexfan::plot::plot(&complex)?;
            fs::write(&output, svg).map_err(|e| Failure::Malformed(format!("{}: {e}", output.display())))?;
            Ok(format!("wrote {}", output.display()))
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            emit(&msg);
            ExitCode::from(1)
        }
        Err(Failure::Malformed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
