//! Command-line front end: reports, factorization output, the bundled
//! verification suite, surface comparison, orbit search, and liftability
//! queries. Exit codes: 0 success / all checks pass, 1 a verification
//! failed, 2 invalid input, 3 resource bound exceeded.

use clap::{Args, Parser, Subcommand};
use monodromy::bmf::{build_bmf, counts, BMFactorization};
use monodromy::braid::BraidWord;
use monodromy::error::BraidError;
use monodromy::homology::compare_surfaces;
use monodromy::hurwitz::{orbit_search, Factorization, MoveMenu, SearchOutcome};
use monodromy::layout::{
    half_twist, liftability_class, transported_monodromies, triple_cover_class, ArcId, Layout,
    SurfaceParams,
};
use monodromy::verify::{run_suite, DEFAULT_SEED};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "monodromy",
    about = "Braid monodromy factorizations of perturbed bidouble covers of the quadric",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl ParamArgs {
    fn parse(&self) -> Result<SurfaceParams, String> {
        SurfaceParams::new(self.a, self.b, self.c, self.d).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the counts report as key=value lines.
    Report(ParamArgs),
    /// Print the braid monodromy factorization in the line format.
    Factorization {
        #[command(flatten)]
        params: ParamArgs,
        /// Output format; only `text` is defined.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Run every bundled identity and script check; one PASS/FAIL line each.
    VerifyPaper {
        /// Seed for the randomized property checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Compare the stable-equivalence invariants of two parameter sets.
    Compare {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        a2: i64,
        b2: i64,
        c2: i64,
        d2: i64,
    },
    /// Search for a Hurwitz-move script between two factorization files.
    OrbitSearch {
        file1: String,
        file2: String,
        depth: usize,
        nodes: usize,
        /// Additional ConjAll conjugators (braid words), repeatable.
        #[arg(long)]
        conj: Vec<String>,
        /// Additional Create words, repeatable.
        #[arg(long)]
        create: Vec<String>,
        /// Allow cancellation of inverse pairs.
        #[arg(long)]
        cancel: bool,
    },
    /// Liftability class and triple-cover case of an arc.
    LiftCheck {
        /// Arc in the text syntax, e.g. p1, q3, a[1,4], u'[1,2], s[1,1].
        arc: String,
        /// Power of the half-twist to test.
        power: i32,
        /// Layout parameter b.
        #[arg(long, default_value_t = 3)]
        b: i64,
        /// Layout parameter d.
        #[arg(long, default_value_t = 3)]
        d: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            if msg.contains("budget") {
                EXIT_RESOURCE
            } else {
                EXIT_INVALID
            }
        }
    };
    ExitCode::from(code)
}

/// Write to stdout, treating a closed pipe as a normal end of output.
fn emit(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        std::process::exit(EXIT_OK as i32);
    }
}

fn run(cmd: Command) -> Result<u8, String> {
    match cmd {
        Command::Report(args) => {
            let params = args.parse()?;
            let fact = build_bmf(params).map_err(|e| e.to_string())?;
            let report = counts(&fact).map_err(|e| e.to_string())?;
            emit(&report.to_text());
            Ok(EXIT_OK)
        }
        Command::Factorization { params, format } => {
            if format != "text" {
                return Err(format!("unknown format `{format}`"));
            }
            let params = params.parse()?;
            let fact = build_bmf(params).map_err(|e| e.to_string())?;
            emit(&fact.to_text());
            Ok(EXIT_OK)
        }
        Command::VerifyPaper { seed } => {
            let results = run_suite(seed);
            let mut all_pass = true;
            for r in &results {
                if r.passed {
                    println!("PASS {} ({} ms)", r.name, r.millis);
                } else {
                    all_pass = false;
                    println!("FAIL {}: {}", r.name, r.detail);
                }
            }
            Ok(if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Compare {
            a,
            b,
            c,
            d,
            a2,
            b2,
            c2,
            d2,
        } => {
            let p1 = SurfaceParams::new(a, b, c, d).map_err(|e| e.to_string())?;
            let p2 = SurfaceParams::new(a2, b2, c2, d2).map_err(|e| e.to_string())?;
            let (verdict, i1, i2) = compare_surfaces(p1, p2).map_err(|e| e.to_string())?;
            println!(
                "{verdict} ({},{}) vs ({},{})",
                i1.1 .0, i1.1 .1, i2.1 .0, i2.1 .1
            );
            Ok(EXIT_OK)
        }
        Command::OrbitSearch {
            file1,
            file2,
            depth,
            nodes,
            conj,
            create,
            cancel,
        } => {
            let f1 = read_factorization(&file1)?;
            let f2 = read_factorization(&file2)?;
            if f1.strand_count() != f2.strand_count() {
                return Err("factorizations have different strand counts".into());
            }
            let n = f1.strand_count();
            let parse_words = |texts: &[String]| -> Result<Vec<BraidWord>, String> {
                texts
                    .iter()
                    .map(|t| BraidWord::parse(n, t).map_err(|e| e.to_string()))
                    .collect()
            };
            let menu = MoveMenu {
                slides: true,
                slide_invs: true,
                conj_all: parse_words(&conj)?,
                create: parse_words(&create)?,
                cancel,
            };
            match orbit_search(&f1, &f2, &menu, depth, nodes) {
                Ok(SearchOutcome::Found(script)) => {
                    emit(&script.to_text());
                    Ok(EXIT_OK)
                }
                Ok(SearchOutcome::NoPath) => {
                    println!("NONE (orbit graph exhausted)");
                    Ok(EXIT_VERIFY_FAILED)
                }
                Ok(SearchOutcome::ProductMismatch) => {
                    println!("NONE (products differ; no slide path can exist)");
                    Ok(EXIT_VERIFY_FAILED)
                }
                Ok(SearchOutcome::BoundExceeded) => {
                    println!("NONE (bound exceeded)");
                    Ok(EXIT_RESOURCE)
                }
                Err(e) => match e {
                    monodromy::error::MoveError::Braid(BraidError::LetterBudget { budget }) => {
                        eprintln!("error: free word budget of {budget} letters exceeded");
                        Ok(EXIT_RESOURCE)
                    }
                    other => Err(other.to_string()),
                },
            }
        }
        Command::LiftCheck { arc, power, b, d } => {
            let layout = Layout::new(b, d);
            let arc = ArcId::parse(&arc).map_err(|e| e.to_string())?;
            arc.validate(&layout).map_err(|e| e.to_string())?;
            let class = liftability_class(&layout, arc).map_err(|e| e.to_string())?;
            let case = triple_cover_class(&layout, arc).map_err(|e| e.to_string())?;
            let (t1, t2) = transported_monodromies(&layout, arc).map_err(|e| e.to_string())?;
            println!("arc={arc}");
            println!("power={power}");
            println!("liftability_class={class}");
            println!("power_liftable={}", power.rem_euclid(class as i32) == 0);
            println!("triple_cover_case={case}");
            println!("transported_monodromies=({t1},{t2})");
            println!(
                "half_twist_word={}",
                half_twist(&layout, arc).map_err(|e| e.to_string())?.word()
            );
            Ok(EXIT_OK)
        }
    }
}

/// Read a factorization file: either the `bmf`-headered format or the
/// generic one (`strands <n>` then one braid word per line).
fn read_factorization(path: &str) -> Result<Factorization, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    if text.starts_with("bmf ") {
        let f = BMFactorization::parse(&text).map_err(|e| e.to_string())?;
        return Factorization::new(
            f.params.strand_count(),
            f.factors.into_iter().map(|x| x.word).collect(),
        )
        .map_err(|e| e.to_string());
    }
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| format!("{path}: empty file"))?;
    let n: usize = header
        .strip_prefix("strands ")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| format!("{path}: expected `strands <n>` or `bmf ...` header"))?;
    let mut words = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        words.push(BraidWord::parse(n, line).map_err(|e| e.to_string())?);
    }
    Factorization::new(n, words).map_err(|e| e.to_string())
}
