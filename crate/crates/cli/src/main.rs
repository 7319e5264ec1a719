use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use logmod::morphism::DEFAULT_BOUND;
use logmod::Int;
use logmod_cli::commands::{self, Failure, Outcome};
use logmod_cli::{doc, generate, tree, verify};

#[derive(Parser)]
#[command(name = "logmod", version, about = "Exactness, integrality, blow-ups and fan subdivisions of fs monoid charts")]
struct Cli {
    /// Search bound for the bounded Kato criterion.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    bound: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for `generate`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
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
    /// Neatness, exactness and integrality of a hom, pointwise and per face.
    Analyze { hom: PathBuf },
    /// Push-out of the first hom along the second (same source).
    Pushout { hom: PathBuf, along: PathBuf },
    /// Chart cover of the blow-up of a monoid along an ideal.
    Blowup { monoid: PathBuf, ideal: PathBuf },
    /// Blow up the base of a job until every chart becomes exact.
    Exactify { job: PathBuf },
    /// Subdivide so that every chart map becomes integral.
    Integralize { hom: PathBuf },
    #[command(subcommand)]
    Fan(FanCommand),
    /// Re-check an emitted result.
    Verify { result: PathBuf },
    /// Print a random input document of the given kind (monoid, hom, job).
    Generate { kind: String },
}

#[derive(Subcommand)]
enum FanCommand {
    /// Star subdivision at a vector.
    Subdivide {
        fan: PathBuf,
        #[arg(allow_negative_numbers = true, required = true)]
        coords: Vec<String>,
    },
    /// Smooth refinement with the same support.
    Resolve { fan: PathBuf },
    /// Validity, smoothness and cone data.
    Check { fan: PathBuf },
    /// Ray coordinates of every cone, for external plotting.
    EmitGeometry { fan: PathBuf },
}

struct Fail {
    code: u8,
    message: String,
}

impl From<Failure> for Fail {
    fn from(f: Failure) -> Self {
        Fail {
            code: f.exit_code() as u8,
            message: f.message().to_string(),
        }
    }
}

fn input_error(path: &Path, line: usize, message: impl std::fmt::Display) -> Fail {
    Fail {
        code: 2,
        message: format!("{}:{line}: {message}", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail {
        code: 2,
        message: format!("{}: {e}", path.display()),
    })
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, doc::ParseError>) -> Result<T, Fail> {
    parse(&read(path)?).map_err(|e| input_error(path, e.line, e.message))
}

fn run(cli: &Cli) -> Result<(String, u8), Fail> {
    let outcome: Outcome = match &cli.command {
        Command::Analyze { hom } => commands::analyze(&load(hom, doc::parse_hom)?, cli.bound)?,
        Command::Pushout { hom, along } => {
            commands::pushout(&load(hom, doc::parse_hom)?, &load(along, doc::parse_hom)?)?
        }
        Command::Blowup { monoid, ideal } => {
            let q = load(monoid, doc::parse_monoid)?;
            let k = load(ideal, |t| doc::parse_ideal(t, &q))?;
            commands::blowup(&q, &k)?
        }
        Command::Exactify { job } => {
            let (q, homs) = load(job, doc::parse_job)?;
            commands::exactify(&q, &homs)?
        }
        Command::Integralize { hom } => commands::integralize(&load(hom, doc::parse_hom)?)?,
        Command::Fan(f) => match f {
            FanCommand::Subdivide { fan, coords } => {
                let v = coords
                    .iter()
                    .map(|c| {
                        c.parse::<Int>().map_err(|_| Fail {
                            code: 2,
                            message: format!("`{c}` is not an integer"),
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                commands::fan_subdivide(&load(fan, doc::parse_fan)?, &v)?
            }
            FanCommand::Resolve { fan } => commands::fan_resolve(&load(fan, doc::parse_fan)?)?,
            FanCommand::Check { fan } => commands::fan_check(&load(fan, doc::parse_fan)?)?,
            FanCommand::EmitGeometry { fan } => commands::fan_geometry(&load(fan, doc::parse_fan)?)?,
        },
        Command::Verify { result } => {
            let text = read(result)?;
            let v = tree::parse_any(&text).map_err(|e| input_error(result, e.line, e.message))?;
            verify::verify(&v)?
        }
        Command::Generate { kind } => {
            let text = generate::document(kind, cli.seed).ok_or_else(|| Fail {
                code: 2,
                message: format!("unknown document kind `{kind}`"),
            })?;
            return Ok((text, 0));
        }
    };
    let rendered = match cli.format {
        Format::Text => tree::render_text(&outcome.value),
        Format::Machine => tree::render_machine(&outcome.value),
    };
    Ok((rendered, outcome.exit_code() as u8))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let written = match &cli.output {
                Some(p) => std::fs::write(p, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("logmod: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("logmod: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
