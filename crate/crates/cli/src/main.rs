use std::fmt::{self, Write as _};
use std::io::{self, Write as _};
use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use framestab::autsearch::{self, Progress, SearchConfig, DEFAULT_NODE_BUDGET};
use framestab::catalog::{self, Kind};
use framestab::frames::{frame_report, FrameOptions, Variant};
use framestab::{BinaryCode, Z4Code};

#[derive(Parser)]
#[command(name = "framestab", version, about = "Structure codes and frame stabilizers of framed VOAs from Z4-codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants of a Z4-code.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// The full frame-stabilizer report.
    Frame {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        /// Also compute Aut(C) and check |H| and |Aut(C):K| against it.
        #[arg(long)]
        enumerate_h: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Automorphism group order and strong generators.
    Aut {
        #[command(flatten)]
        input: Input,
        /// Treat the input as a binary code.
        #[arg(long)]
        binary: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        json: bool,
    },
    /// Built-in codes.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List catalog ids.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print the generator matrix of an entry.
    Show { id: String },
}

#[derive(Args)]
struct Input {
    /// A matrix file or a catalog id.
    #[arg(long, short)]
    input: String,
}

#[derive(Args)]
struct SearchArgs {
    /// Node budget for automorphism searches.
    #[arg(long, env = "FRAMESTAB_AUT_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    aut_budget: u64,
    /// Suppress progress output on stderr.
    #[arg(long, short)]
    quiet: bool,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        let mut config = SearchConfig::with_budget(self.aut_budget);
        if !self.quiet {
            config.progress = Some(Arc::new(|p: &Progress| match p.level {
                Some(level) => eprintln!(
                    "search: level {level} done, {} nodes, {} generators",
                    p.nodes, p.generators
                ),
                None => eprintln!("search: {} nodes, depth {}", p.nodes, p.depth),
            }));
        }
        config
    }
}

fn parse_variant(s: &str) -> std::result::Result<Variant, String> {
    s.parse().map_err(|e: framestab::Error| e.to_string())
}

/// Matrix text and a display name for `--input`.
fn load(input: &str, want: Kind) -> Result<(String, String)> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return Ok((text, input.to_string()));
    }
    let entry = match catalog::get(input) {
        Ok(e) => e,
        Err(framestab::Error::UnknownCatalogId(_)) => bail!("`{input}` is neither a file nor a catalog id"),
        Err(e) => return Err(e.into()),
    };
    if entry.kind != want {
        bail!("catalog entry `{input}` is a {} code", entry.kind);
    }
    Ok((entry.matrix, entry.id))
}

fn load_z4(input: &str) -> Result<(Z4Code, String)> {
    let (text, name) = load(input, Kind::Z4)?;
    let code = Z4Code::parse(&text).with_context(|| format!("parsing {name}"))?;
    Ok((code, name))
}

fn load_binary(input: &str) -> Result<(BinaryCode, String)> {
    let (text, name) = load(input, Kind::Binary)?;
    let code = BinaryCode::parse(&text).with_context(|| format!("parsing {name}"))?;
    Ok((code, name))
}

#[derive(Serialize)]
struct Analysis {
    code_id: String,
    n: usize,
    log2_size: usize,
    k1: usize,
    k2: usize,
    shape: String,
    dim_c0: usize,
    dim_c1: usize,
    c0_min_weight: Option<usize>,
    c1_min_weight: Option<usize>,
    min_euclidean_weight: Option<usize>,
    self_orthogonal: bool,
    self_dual: bool,
    type_ii: bool,
    extremal: Option<bool>,
    generator_matrix: String,
}

/// The group shape 4^k1·2^k2 written as the literature does, e.g. "4*2^6".
fn shape(k1: usize, k2: usize) -> String {
    let part = |base: u32, k: usize| match k {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{k}")),
    };
    let parts: Vec<String> = [part(4, k1), part(2, k2)].into_iter().flatten().collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn analyze(code: &Z4Code, name: String) -> Analysis {
    let self_dual = code.is_self_dual();
    let type_ii = code.is_type_ii();
    Analysis {
        code_id: name,
        n: code.len(),
        log2_size: code.log2_size(),
        k1: code.k1(),
        k2: code.k2(),
        shape: shape(code.k1(), code.k2()),
        dim_c0: code.torsion().dim(),
        dim_c1: code.residue().dim(),
        c0_min_weight: code.torsion().min_weight().ok(),
        c1_min_weight: code.residue().min_weight().ok(),
        min_euclidean_weight: code.min_euclidean_weight().ok(),
        self_orthogonal: code.is_self_orthogonal(),
        self_dual,
        type_ii,
        extremal: if type_ii { code.is_extremal().ok() } else { Some(false) },
        generator_matrix: code.to_text(),
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

fn print_analysis(out: &mut String, a: &Analysis) -> fmt::Result {
    writeln!(out, "code: {}", a.code_id)?;
    writeln!(out, "length: {}", a.n)?;
    writeln!(out, "size: 2^{}  shape: {}  (k1 = {}, k2 = {})", a.log2_size, a.shape, a.k1, a.k2)?;
    writeln!(out, "C0: dim {}, min weight {}", a.dim_c0, opt(&a.c0_min_weight))?;
    writeln!(out, "C1: dim {}, min weight {}", a.dim_c1, opt(&a.c1_min_weight))?;
    writeln!(out, "min_euclidean_weight: {}", opt(&a.min_euclidean_weight))?;
    writeln!(out, "self_orthogonal: {}", a.self_orthogonal)?;
    writeln!(out, "self_dual: {}", a.self_dual)?;
    writeln!(out, "type_ii: {}", a.type_ii)?;
    writeln!(out, "extremal: {}", opt(&a.extremal))?;
    Ok(())
}

#[derive(Serialize)]
struct AutOutput {
    code_id: String,
    order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernel_order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image_order: Option<String>,
    /// 1-indexed cycle notation; Z4 generators list negated coordinates
    /// (1-indexed) after the permutation.
    generators: Vec<String>,
}

fn signed(perm: &framestab::Perm, negate: &[bool]) -> String {
    let signs: Vec<String> = negate
        .iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| (i + 1).to_string())
        .collect();
    if signs.is_empty() {
        perm.to_string()
    } else {
        format!("{perm} negate [{}]", signs.join(" "))
    }
}

/// Runs a command and returns what it prints on stdout.
fn run(cli: Cli) -> Result<String> {
    let mut out = String::new();
    match cli.command {
        Command::Analyze { input, json } => {
            let (code, name) = load_z4(&input.input)?;
            let a = analyze(&code, name);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&a)?)?;
            } else {
                print_analysis(&mut out, &a)?;
            }
        }
        Command::Frame {
            input,
            variant,
            enumerate_h,
            search,
            json,
        } => {
            let (code, name) = load_z4(&input.input)?;
            let opts = FrameOptions {
                code_id: name,
                cross_check: enumerate_h,
                search: search.config(),
            };
            let report = frame_report(&code, variant, &opts)?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                write!(out, "{report}")?;
            }
        }
        Command::Aut {
            input,
            binary,
            search,
            json,
        } => {
            let aut = if binary {
                let (code, name) = load_binary(&input.input)?;
                let g = autsearch::aut_binary_with(&code, &search.config())?;
                AutOutput {
                    code_id: name,
                    order: g.order().to_string(),
                    kernel_order: None,
                    image_order: None,
                    generators: g.strong_generators().iter().map(ToString::to_string).collect(),
                }
            } else {
                let (code, name) = load_z4(&input.input)?;
                let a = autsearch::aut_z4_with(&code, &search.config())?;
                let mut generators: Vec<String> = a
                    .kernel_basis
                    .iter()
                    .map(|w| signed(&framestab::Perm::identity(code.len()), &w.to_bits().iter().map(|&b| b == 1).collect::<Vec<_>>()))
                    .collect();
                generators.extend(a.generators.iter().map(|g| signed(&g.perm, &g.negate)));
                AutOutput {
                    code_id: name,
                    order: a.total_order().to_string(),
                    kernel_order: Some(a.kernel_order().to_string()),
                    image_order: Some(a.image.order().to_string()),
                    generators,
                }
            };
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&aut)?)?;
            } else {
                writeln!(out, "code: {}", aut.code_id)?;
                writeln!(out, "order: {}", aut.order)?;
                if let (Some(k), Some(i)) = (&aut.kernel_order, &aut.image_order) {
                    writeln!(out, "sign kernel: {k}  image in Sym_n: {i}")?;
                }
                writeln!(out, "generators:")?;
                for g in &aut.generators {
                    writeln!(out, "  {g}")?;
                }
            }
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List { json } => {
                let entries = catalog::descriptions();
                if json {
                    #[derive(Serialize)]
                    struct Row {
                        id: String,
                        kind: Kind,
                        description: String,
                    }
                    let rows: Vec<Row> = entries
                        .into_iter()
                        .map(|(id, kind, description)| Row { id, kind, description })
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
                } else {
                    for (id, kind, description) in entries {
                        writeln!(out, "{id:<20} {kind:<7} {description}")?;
                    }
                }
            }
            CatalogCommand::Show { id } => write!(out, "{}", catalog::get(&id)?.matrix)?,
        },
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            // A closed pipe (`| head`) is not an error.
            match std::io::stdout().lock().write_all(text.as_bytes()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
