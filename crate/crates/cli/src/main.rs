use std::process::ExitCode;

use cambrian_core::checks::{run_suite, Suite, SuiteParams};
use cambrian_core::coxeter::DEFAULT_ELEMENT_CAP;
use cambrian_core::interval_poset::cambint_poset;
use cambrian_core::io::{
    compare_multichains, format_factorization, format_multichain, OutputFormat, PosetDocument,
    RunConfig,
};
use cambrian_core::tamari::{conjecture_check, m_tamari_poset, ConjectureRow};
use cambrian_core::{Error, MCambrian};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_SUITE: u8 = 4;

/// Cambrian and m-Cambrian lattices of finite Coxeter groups.
#[derive(Parser)]
#[command(name = "cambrian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Coxeter type, e.g. A3, B2, I2(5), A1xA1.
    #[arg(long, default_value = "A2")]
    group: String,
    /// Coxeter word as generator names, e.g. "s t"; defaults to the linear word.
    #[arg(long)]
    c: Option<String>,
    #[arg(long, default_value_t = 1)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Maximum number of group elements or lattice elements to build.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
    cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            group: self.group.clone(),
            coxeter_word: self
                .c
                .as_deref()
                .map(|c| c.split_whitespace().map(String::from).collect())
                .unwrap_or_default(),
            m: self.m,
            k: self.k,
            format: match self.format {
                Format::Dot => OutputFormat::Dot,
                Format::Json => OutputFormat::Json,
                Format::Text => OutputFormat::Text,
            },
            cap: self.cap,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// c-sortable elements under weak order.
    Sort,
    /// Facets of the subword complex under flips.
    Sc,
    /// m-factorizations under increasing rotations.
    Nc,
    /// m-noncrossing partitions under the same order.
    Mcamb,
    /// k-multichains of the Cambrian lattice.
    Cambint,
    /// m-ballot paths under rotation.
    Tamari,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hasse diagram of a poset.
    Poset {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        which: Which,
        /// Path size for the Tamari lattice.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Compare two m-noncrossing partitions, e.g. --a "e, s, s, s".
    Compare {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Run a property suite; exits with 4 when it fails.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        suite: String,
        /// Range of n for the conjecture suite, e.g. 2-4.
        #[arg(long, default_value = "2-4")]
        n: String,
    },
    /// Count elements, intervals and k-multichains of the m-Cambrian lattice.
    Count {
        #[command(flatten)]
        common: Common,
    },
    /// Compare interval counts of m-Tamari and linear type A m-Cambrian lattices.
    Conjecture {
        /// Single value or range, e.g. 3 or 2-4.
        #[arg(long)]
        n: String,
        /// Single value or range, e.g. 1 or 1-3.
        #[arg(long, default_value = "1")]
        m: String,
        #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

enum Failure {
    Core(Error),
    Usage(String),
    Suite,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn parse_range(text: &str) -> Result<Vec<usize>, Failure> {
    let bad = || Failure::Usage(format!("invalid range {text:?}"));
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ),
        None => {
            let v = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn render(doc: &PosetDocument, format: Format) -> String {
    match format {
        Format::Dot => doc.to_dot(),
        Format::Json => doc.to_json() + "\n",
        Format::Text => doc.to_text(),
    }
}

fn poset(common: &Common, which: Which, n: usize) -> Result<String, Failure> {
    if let Which::Tamari = which {
        let t = m_tamari_poset(n, common.m, common.cap)?;
        let doc = PosetDocument::new("tamari", &t.poset, |p| p.to_string());
        return Ok(render(&doc, common.format));
    }
    let cfg = common.config();
    let sys = cfg.system()?;
    let camb = cfg.cambrian(&sys)?;
    let mc = MCambrian::new(&camb, cfg.m).with_cap(cfg.cap);
    let doc = match which {
        Which::Sort => {
            let p = camb.sort_poset();
            PosetDocument::new("sort", &p, |&w| {
                camb.sorting_word(w).display(&sys).to_string()
            })
        }
        Which::Sc => PosetDocument::new("sc", &mc.sc_poset()?, |f| f.to_string()),
        Which::Nc => PosetDocument::new("nc", &mc.nc_poset()?, |f| format_factorization(&mc, f)),
        Which::Mcamb => PosetDocument::new("mcamb", &mc.nc_poset()?, |f| {
            format_multichain(&sys, &mc.to_multichain(f))
        }),
        Which::Cambint => {
            let ci = cambint_poset(&camb, cfg.k)?;
            let red = ci.red.clone();
            let labels: Vec<String> = ci
                .poset
                .labels()
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let text = format_multichain(&sys, x);
                    if red[i] {
                        format!("{text} (red)")
                    } else {
                        text
                    }
                })
                .collect();
            let mut doc = PosetDocument::new("cambint", &ci.poset, |_| String::new());
            doc.elements = labels;
            doc
        }
        Which::Tamari => unreachable!(),
    };
    Ok(render(&doc, common.format))
}

fn compare(common: &Common, a: &str, b: &str) -> Result<String, Failure> {
    let cfg = common.config();
    let sys = cfg.system()?;
    let camb = cfg.cambrian(&sys)?;
    let mc = MCambrian::new(&camb, cfg.m).with_cap(cfg.cap);
    let report = compare_multichains(&mc, a, b)?;
    Ok(match common.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
        _ => report.to_text(),
    })
}

fn check(common: &Common, suite: &str, n: &str) -> Result<String, Failure> {
    let suite: Suite = suite
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    let cfg = common.config();
    let sys = cfg.system()?;
    let words = if cfg.coxeter_word.is_empty() {
        Vec::new()
    } else {
        vec![cfg.word(&sys)?]
    };
    let grid = parse_range(n)?.into_iter().map(|n| (n, cfg.m)).collect();
    let params = SuiteParams {
        group: cfg.group.clone(),
        words,
        m: cfg.m,
        k: cfg.k,
        grid,
        cap: cfg.cap,
    };
    let report = run_suite(suite, &params)?;
    let out = match common.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
        _ => {
            let mut s = format!(
                "{} {} {} ({} checks)\n",
                if report.passed() { "PASS" } else { "FAIL" },
                suite.name(),
                report.instance,
                report.checked
            );
            for f in &report.failures {
                s += &format!("  {f}\n");
            }
            s
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Suite)
    }
}

fn count(common: &Common) -> Result<String, Failure> {
    let cfg = common.config();
    let sys = cfg.system()?;
    let camb = cfg.cambrian(&sys)?;
    let mc = MCambrian::new(&camb, cfg.m).with_cap(cfg.cap);
    let p = mc.nc_poset()?;
    let row = serde_json::json!({
        "schema": 1,
        "group": sys.label(),
        "c": sys.format_word(camb.coxeter_word().letters()),
        "m": cfg.m,
        "k": cfg.k,
        "elements": p.len(),
        "intervals": p.count_intervals().to_string(),
        "multichains": p.count_multichains(cfg.k).to_string(),
    });
    Ok(match common.format {
        Format::Json => serde_json::to_string_pretty(&row).expect("rows serialize") + "\n",
        _ => format!(
            "elements: {}\nintervals: {}\nmultichains(k={}): {}\n",
            p.len(),
            p.count_intervals(),
            cfg.k,
            p.count_multichains(cfg.k)
        ),
    })
}

fn conjecture(n: &str, m: &str, cap: usize, format: Format) -> Result<String, Failure> {
    let ns = parse_range(n)?;
    let ms = parse_range(m)?;
    let rows = ns
        .iter()
        .flat_map(|&n| ms.iter().map(move |&m| (n, m)))
        .map(|(n, m)| conjecture_check(n, m, cap))
        .collect::<Result<Vec<ConjectureRow>, Error>>()?;
    let out = match format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        _ => rows
            .iter()
            .map(|r| {
                format!(
                    "n={} m={}: {} {} {}\n",
                    r.n, r.m, r.tamari_intervals, r.cambrian_intervals, r.equal
                )
            })
            .collect(),
    };
    if rows.iter().all(|r| r.equal) {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Suite)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Poset { common, which, n } => poset(common, *which, *n),
        Command::Compare { common, a, b } => compare(common, a, b),
        Command::Check { common, suite, n } => check(common, suite, n),
        Command::Count { common } => count(common),
        Command::Conjecture { n, m, cap, format } => conjecture(n, m, *cap, *format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Suite) => ExitCode::from(EXIT_SUITE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::CapExceeded { .. } => EXIT_CAP,
                Error::Invariant(_) | Error::NotAPartialOrder(_) => 1,
                _ => EXIT_USAGE,
            })
        }
    }
}
