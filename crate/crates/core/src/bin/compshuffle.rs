use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use compshuffle::charfunc::{chi, chi_weighted, chi_zero, d_alpha_bounce, d_alpha_dinv};
use compshuffle::combinat::{Composition, Partition};
use compshuffle::dpa::{d_alpha_operator, n_alpha, Suite};
use compshuffle::dyck::{enumerate_paths, pi_mu, wt_mu, DyckPath};
use compshuffle::macdonald::{macdonald_h, nabla, set_cache_dir};
use compshuffle::symfunc::{Basis, SymFunc};
use compshuffle::verify::{self, VerificationReport};
use compshuffle::Error;

#[derive(Parser)]
#[command(name = "compshuffle", version, about = "Exact Dyck path, symmetric function and Dyck path algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for persisted Macdonald tables (falls back to SHUFFLE_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Weight {
    #[value(name = "1")]
    One,
    #[value(name = "0")]
    Zero,
    Mu,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dinv,
    Bounce,
    Operator,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// area, dinv, bounce and touch of one path, or of every path of size n.
    Stats {
        #[arg(long)]
        path: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The zeta image of a path.
    Zeta {
        #[arg(long)]
        path: String,
    },
    /// Characteristic function of a path, in the Schur basis.
    Chi {
        #[arg(long)]
        path: Option<String>,
        /// Corner weight: 1, 0, or the Macdonald weight of `--mu`.
        #[arg(long, value_enum, default_value_t = Weight::One)]
        weight: Weight,
        #[arg(long, value_parser = parse_partition)]
        mu: Option<Partition>,
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// D_alpha by the dinv sum, the bounce sum, or d_-^l N_alpha.
    Dalpha {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
        #[arg(long, value_enum, default_value_t = Method::Dinv)]
        method: Method,
    },
    /// N_alpha in V_l.
    Nalpha {
        #[arg(long, value_parser = parse_composition)]
        alpha: Composition,
    },
    /// Modified Macdonald polynomial H_mu, in the Schur basis.
    Macdonald {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// nabla applied to a symmetric function given as JSON.
    Nabla {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifySuite {
    Shuffle,
    Examples,
    Words,
    Zeta,
    Relations,
    Involution,
    Appendix,
    Macdonald,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: VerifySuite,
    #[arg(long, default_value_t = 5)]
    n: u32,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, default_value_t = 4)]
    deg: u32,
    /// Maximal d-word length for `relations` (defaults to 2 * deg).
    #[arg(long)]
    words: Option<usize>,
    /// Relation groups for `relations`, comma separated (defaults to all).
    #[arg(long = "suite", value_delimiter = ',')]
    relation_suites: Vec<String>,
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    Composition::parse(s).map_err(|e| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let c = Composition::parse(s).map_err(|e| e.to_string())?;
    Ok(Partition::new(c.parts().to_vec()))
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn parse_path(s: &str) -> Result<DyckPath, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(format!("--path: {e}")))
}

fn sym_out(f: &SymFunc, basis: Basis) -> (Value, String) {
    let f = f.convert(basis);
    (f.to_json(), f.to_string())
}

fn zeta_json(pi: &DyckPath) -> Value {
    let img = pi.zeta();
    let mut image = img.to_json();
    image["bounce_seq"] = json!(img.bounce_seq());
    image["area_seq"] = json!(img.area_seq());
    image["touch_prime"] = img.touch_prime().to_json();
    json!({
        "path": pi.to_string(),
        "area_seq": pi.area_seq(),
        "reading_order": pi.reading_order(),
        "image": image,
    })
}

fn run_verify(a: &VerifyArgs) -> Result<VerificationReport, Failure> {
    let n = a.n as usize;
    let report = match a.suite {
        VerifySuite::Shuffle => verify::verify_shuffle(a.n)?,
        VerifySuite::Examples => verify::verify_examples()?,
        VerifySuite::Words => verify::verify_words(n, n)?,
        VerifySuite::Zeta => verify::verify_zeta(n, n.min(5), n)?,
        VerifySuite::Relations => {
            let suites = if a.relation_suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                a.relation_suites
                    .iter()
                    .map(|s| s.parse::<Suite>().map_err(|e| Failure::Usage(format!("--suite: {e}"))))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let words = a.words.unwrap_or(2 * a.deg as usize);
            verify::verify_relation_suites(&suites, a.k, a.deg, words)?
        }
        VerifySuite::Involution => verify::verify_involution(a.n, a.k, a.deg)?,
        VerifySuite::Appendix => verify::verify_appendix(n, n, a.n)?,
        VerifySuite::Macdonald => verify::verify_macdonald(a.n, a.n, a.n)?,
        VerifySuite::All => verify::verify_all(a.n, a.k, a.deg)?,
    };
    Ok(report)
}

fn dispatch(cli: &Cli) -> Result<(Value, String), Failure> {
    Ok(match &cli.command {
        Command::Stats { path, n } => match (path, n) {
            (Some(p), None) => {
                let pi = parse_path(p)?;
                (pi.to_json(), stats_line(&pi))
            }
            (None, Some(n)) => {
                let paths = enumerate_paths(*n)?;
                let text = paths.iter().map(stats_line).collect::<Vec<_>>().join("\n");
                (Value::Array(paths.iter().map(DyckPath::to_json).collect()), text)
            }
            _ => return Err(Failure::Usage("stats takes exactly one of --path and --n".into())),
        },
        Command::Zeta { path } => {
            let pi = parse_path(path)?;
            let img = pi.zeta();
            let text = format!(
                "{pi} -> {img}\nreading order {:?}\nbounce sequence {:?}",
                pi.reading_order(),
                img.bounce_seq()
            );
            (zeta_json(&pi), text)
        }
        Command::Chi { path, weight, mu, basis } => {
            let basis: Basis = basis.parse()?;
            let f = match weight {
                Weight::One | Weight::Zero => {
                    let Some(p) = path else {
                        return Err(Failure::Usage("--path is required".into()));
                    };
                    let pi = parse_path(p)?;
                    if matches!(weight, Weight::One) {
                        chi(&pi)?
                    } else {
                        chi_zero(&pi)?
                    }
                }
                Weight::Mu => {
                    let Some(mu) = mu else {
                        return Err(Failure::Usage("--weight mu needs --mu".into()));
                    };
                    let pi = pi_mu(mu);
                    if let Some(p) = path {
                        if parse_path(p)? != pi {
                            return Err(Failure::Usage(format!("the weight of {mu} lives on the path {pi}")));
                        }
                    }
                    chi_weighted(&pi, &wt_mu(mu))?
                }
            };
            sym_out(&f, basis)
        }
        Command::Dalpha { alpha, method } => {
            let f = match method {
                Method::Dinv => d_alpha_dinv(alpha)?,
                Method::Bounce => d_alpha_bounce(alpha)?,
                Method::Operator => d_alpha_operator(alpha)?,
                Method::Both => {
                    let (a, b) = (d_alpha_dinv(alpha)?, d_alpha_bounce(alpha)?);
                    if a != b {
                        return Err(Failure::Usage(format!("dinv and bounce forms differ for {alpha}")));
                    }
                    a
                }
            };
            sym_out(&f, Basis::S)
        }
        Command::Nalpha { alpha } => {
            let v = n_alpha(alpha)?;
            (v.to_json(), v.to_string())
        }
        Command::Macdonald { mu } => sym_out(&macdonald_h(mu)?, Basis::S),
        Command::Nabla { input } => {
            let text = std::fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            sym_out(&nabla(&SymFunc::from_json(&v)?)?, Basis::S)
        }
        Command::Verify(a) => {
            let report = run_verify(a)?;
            eprintln!("{} finished in {:.2}s", report.suite, report.wall_time.as_secs_f64());
            let out = (report.to_json(), report.to_text());
            if !report.pass() {
                emit(cli.global.format, &out);
                return Err(Failure::Verification);
            }
            out
        }
    })
}

fn stats_line(pi: &DyckPath) -> String {
    format!("{pi}  area {}  dinv {}  bounce {}  touch {}", pi.area(), pi.dinv(), pi.bounce(), pi.touch())
}

fn emit(format: Format, (json, text): &(Value, String)) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(json).expect("json output"),
        Format::Text => text.trim_end().to_string(),
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    if let Some(dir) = &cli.global.cache_dir {
        set_cache_dir(Some(dir.clone()));
    }
    match dispatch(&cli) {
        Ok(out) => {
            emit(cli.global.format, &out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
