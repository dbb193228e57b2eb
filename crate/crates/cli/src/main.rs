use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use circlenum_core::catalog::{self, CatalogEntry};
use circlenum_core::report::{analyze, AnalyzeOptions};
use circlenum_core::states::DEFAULT_STATE_CAP;
use circlenum_core::verify::{self, CorpusItem, VerifyOptions};
use circlenum_core::{parse_pd, pretzel, Diagram, Error, PretzelSpec};
use clap::{Parser, Subcommand};

mod render;

#[derive(Parser)]
#[command(
    name = "circlenum",
    version,
    about = "Circle numbers, dealternators and Kauffman brackets of PD-coded link diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one diagram.
    Analyze {
        /// PD file, `-` for stdin, or a catalog name. Reads stdin when omitted.
        input: Option<String>,
        #[arg(long)]
        json: bool,
        /// Skip the bracket and span bounds.
        #[arg(long)]
        no_bracket: bool,
        /// Largest crossing count for the full state sum.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Print the PD code of a pretzel diagram, e.g. `4,-3,3`.
    Pretzel {
        #[arg(allow_hyphen_values = true)]
        twists: String,
    },
    /// Run the property suites over the catalog, a corpus and the switch family.
    Verify {
        /// Directory of `.pd` files, one diagram per file.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Largest seed size for the crossing-switch family.
        #[arg(long, default_value_t = 8)]
        max_crossings: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in diagrams.
    Catalog {
        #[arg(long)]
        name: Option<String>,
    },
}

/// Exit codes.
const PARSE: u8 = 1;
const CAP: u8 = 2;
const CHECK: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => CAP,
            _ => PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &Path, e: io::Error) -> Failure {
    Failure {
        code: PARSE,
        message: format!("{}: {e}", what.display()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            input,
            json,
            no_bracket,
            state_cap,
        } => run_analyze(input.as_deref(), json, no_bracket, state_cap),
        Command::Pretzel { twists } => run_pretzel(&twists),
        Command::Verify {
            corpus,
            max_crossings,
            json,
        } => run_verify(corpus.as_deref(), max_crossings, json),
        Command::Catalog { name } => run_catalog(name.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn read_input(input: Option<&str>) -> Result<Diagram, Failure> {
    let text = match input {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| io_failure(Path::new("<stdin>"), e))?;
            s
        }
        Some(p) if Path::new(p).is_file() => {
            fs::read_to_string(p).map_err(|e| io_failure(Path::new(p), e))?
        }
        Some(name) => match catalog::find(name) {
            Some(e) => e.pd,
            None => {
                return Err(Failure {
                    code: PARSE,
                    message: format!("{name}: no such file or catalog entry"),
                })
            }
        },
    };
    Ok(parse_pd(&text)?)
}

fn run_analyze(
    input: Option<&str>,
    json: bool,
    no_bracket: bool,
    state_cap: usize,
) -> Result<(), Failure> {
    let d = read_input(input)?;
    let opts = AnalyzeOptions {
        bracket: !no_bracket,
        state_cap,
        ..AnalyzeOptions::default()
    };
    let report = analyze(&d, opts)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", render::report(&d, &report));
    }
    if report.checks.any_failed() {
        return Err(Failure {
            code: CHECK,
            message: "a theorem check failed".into(),
        });
    }
    Ok(())
}

fn run_pretzel(twists: &str) -> Result<(), Failure> {
    let spec: PretzelSpec = twists.parse()?;
    println!("{}", pretzel(&spec)?);
    Ok(())
}

fn load_corpus(dir: &Path) -> Result<Vec<CorpusItem>, Failure> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| io_failure(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "pd"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).map_err(|e| io_failure(p, e))?;
            let d = parse_pd(&text).map_err(|e| Failure {
                code: PARSE,
                message: format!("{}: {e}", p.display()),
            })?;
            let name = p
                .file_stem()
                .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            Ok(CorpusItem::new(name, d))
        })
        .collect()
}

fn run_verify(corpus: Option<&Path>, max_crossings: usize, json: bool) -> Result<(), Failure> {
    let mut items: Vec<CorpusItem> = catalog::catalog()
        .iter()
        .map(CorpusItem::from_entry)
        .collect::<Result<_, _>>()?;
    if let Some(dir) = corpus {
        items.extend(load_corpus(dir)?);
    }
    items.extend(verify::switch_family(
        &catalog::search_seeds(),
        max_crossings,
    )?);
    let summary = verify::verify(&items, VerifyOptions::default());
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&summary).expect("summary serializes")
        );
    } else {
        print!("{}", render::summary(&summary));
    }
    if summary.all_passed() {
        Ok(())
    } else {
        Err(Failure {
            code: CHECK,
            message: format!("{} check(s) failed", summary.failures.len()),
        })
    }
}

fn run_catalog(name: Option<&str>) -> Result<(), Failure> {
    let mut entries = catalog::catalog();
    if let Some(Ok(e)) = catalog::k11n151_slot(&[Path::new("corpus")]) {
        entries.push(e);
    }
    match name {
        Some(name) => {
            let e: CatalogEntry = entries
                .into_iter()
                .find(|e| e.name.eq_ignore_ascii_case(name))
                .or_else(|| catalog::find(name))
                .ok_or_else(|| Failure {
                    code: PARSE,
                    message: format!("no catalog entry named {name}"),
                })?;
            println!("{}", e.pd.trim());
        }
        None => {
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            for e in entries {
                println!("{:width$}  {}", e.name, e.pd.trim());
            }
        }
    }
    Ok(())
}
