//! Command-line front end. Exit codes: 0 for success and positive verdicts,
//! 1 for negative verdicts (e.g. a word that is not rich, a failed
//! verification), 2 for usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use richwords::construction::{construction_json, gen_g, gen_h, verify_h};
use richwords::extension::{self, OmegaOutcome};
use richwords::phi_search::{self, PhiRecord};
use richwords::richness;
use richwords::switches;
use richwords::word::{Alphabet, Side, Word};

/// Words longer than this print as a summary unless --raw is given.
const RAW_PRINT_LIMIT: usize = 100_000;

#[derive(Parser)]
#[command(
    name = "richwords",
    version,
    about = "Rich words: richness checks, standard extensions, switches, extremal constructions and phi search"
)]
struct Cli {
    /// Fix the symbol order explicitly; the first character is the
    /// zero-symbol. Default: sorted distinct characters of the input.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide richness of a word.
    Check { word: String },
    /// Count (and optionally list) the distinct palindromic factors.
    Palins {
        word: String,
        #[arg(long)]
        list: bool,
    },
    /// Iterated standard extension.
    Extend {
        word: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Flexed points of a rich word.
    Flexed { word: String },
    /// Forced extension walk: omega, the forced path and the branch pair.
    Omega { word: String },
    /// Switch factors; with --tail U, the switches of WORD·U that are
    /// suffixes of WORD extended by a nonempty prefix of U.
    Switches {
        word: String,
        #[arg(long)]
        tail: Option<String>,
    },
    /// Switch palindromic closures of the given switches, reduced.
    Swc {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Generate construction words.
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
    /// Verify construction properties.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Exhaustive phi(n): max omega over all rich words of length n.
    Phi {
        n: usize,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    n: usize,
    /// Print the full word even when it is large.
    #[arg(long)]
    raw: bool,
    /// Write the generated word to a file instead of inlining it.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenTarget {
    /// The recursive palindrome g_n.
    G(GenArgs),
    /// The uniquely extensible word h_n.
    H(GenArgs),
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// Build h_n and verify richness, the forced walk, the length bound
    /// and the ratio target.
    H { n: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type AnyError = Box<dyn std::error::Error>;

fn resolve_alphabet(over: &Option<String>, inputs: &[&str]) -> Result<Alphabet, AnyError> {
    match over {
        Some(s) => Ok(Alphabet::new(s.chars())?),
        None => Ok(Alphabet::infer(&inputs.concat())),
    }
}

fn sorted_by_len_lex(words: impl IntoIterator<Item = Word>) -> Vec<Word> {
    let mut v: Vec<Word> = words.into_iter().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    v
}

fn print_word(a: &Alphabet, w: &Word, raw: bool, out: &Option<PathBuf>) -> Result<(), AnyError> {
    if let Some(path) = out {
        std::fs::write(path, a.render(w))?;
        println!("length={}", w.len());
        println!("written={}", path.display());
        return Ok(());
    }
    if raw || w.len() <= RAW_PRINT_LIMIT {
        println!("{}", a.render(w));
    } else {
        println!("length={}", w.len());
        println!("head={}", a.render(&Word::from_slice(&w[..32])));
        println!("tail={}", a.render(&Word::from_slice(&w[w.len() - 32..])));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, AnyError> {
    match cli.command {
        Command::Check { word } => {
            let a = resolve_alphabet(&cli.alphabet, &[&word])?;
            let w = a.parse(&word)?;
            let cert = richness::is_rich(&w);
            match cli.output {
                Output::Text => println!("{}", if cert.verdict { "rich" } else { "not rich" }),
                Output::Json => println!("{}", cert.to_json(&a)),
            }
            Ok(if cert.verdict { 0 } else { 1 })
        }
        Command::Palins { word, list } => {
            let a = resolve_alphabet(&cli.alphabet, &[&word])?;
            let w = a.parse(&word)?;
            let ix = richwords::PalIndex::from_word(a.size(), &w)?;
            let pals = sorted_by_len_lex(ix.palindromes().map(Word::from_slice));
            match cli.output {
                Output::Text => {
                    println!("{}", ix.distinct_palindromes());
                    if list {
                        for p in &pals {
                            println!("{}", a.render(p));
                        }
                    }
                }
                Output::Json => {
                    let mut v = serde_json::json!({
                        "word": word,
                        "count": ix.distinct_palindromes(),
                    });
                    if list {
                        v["palindromes"] = pals.iter().map(|p| a.render(p)).collect();
                    }
                    println!("{v}");
                }
            }
            Ok(0)
        }
        Command::Extend { word, side, steps } => {
            let a = resolve_alphabet(&cli.alphabet, &[&word])?;
            let w = a.parse(&word)?;
            let got = extension::std_ext(&w, side.into(), steps)?;
            match cli.output {
                Output::Text => println!("{}", a.render(&got)),
                Output::Json => println!("{}", serde_json::json!({ "word": a.render(&got) })),
            }
            Ok(0)
        }
        Command::Flexed { word } => {
            let a = resolve_alphabet(&cli.alphabet, &[&word])?;
            let w = a.parse(&word)?;
            let points = sorted_by_len_lex(extension::flexed_points(&w)?);
            match cli.output {
                Output::Text => {
                    for p in &points {
                        println!("{}", a.render(p));
                    }
                }
                Output::Json => {
                    let items: Vec<String> = points.iter().map(|p| a.render(p)).collect();
                    println!(
                        "{}",
                        serde_json::json!({ "word": word, "flexed_points": items })
                    );
                }
            }
            Ok(0)
        }
        Command::Omega { word } => {
            let a = resolve_alphabet(&cli.alphabet, &[&word])?;
            let w = a.parse(&word)?;
            let trace = extension::omega(&w, &a, w.len())?;
            match trace.omega {
                OmegaOutcome::Found(value) => {
                    match cli.output {
                        Output::Text => {
                            println!("omega={value}");
                            println!("path={}", a.render(&trace.path()));
                            let (x, y) = trace.branch_witness.expect("branch exists when found");
                            println!(
                                "branch={},{}",
                                a.symbols()[x as usize],
                                a.symbols()[y as usize]
                            );
                        }
                        Output::Json => println!("{}", trace.to_json(&a)),
                    }
                    Ok(0)
                }
                OmegaOutcome::BudgetExhausted => {
                    eprintln!("falsification: forced walk from {word} exceeded the length bound");
                    Ok(1)
                }
            }
        }
        Command::Switches { word, tail } => {
            let mut inputs = vec![word.as_str()];
            if let Some(t) = &tail {
                inputs.push(t.as_str());
            }
            let a = resolve_alphabet(&cli.alphabet, &inputs)?;
            let w = a.parse(&word)?;
            let set = match &tail {
                Some(t) => switches::switch_suf(&w, &a.parse(t)?)?,
                None => switches::switches_of(&w),
            };
            match cli.output {
                Output::Text => {
                    for s in set.words() {
                        println!("{}", a.render(s));
                    }
                }
                Output::Json => {
                    let items: Vec<String> = set.words().map(|s| a.render(s)).collect();
                    println!("{}", serde_json::json!({ "switches": items }));
                }
            }
            Ok(0)
        }
        Command::Swc { words } => {
            let joined = words.concat();
            let a = resolve_alphabet(&cli.alphabet, &[&joined])?;
            let parsed = words
                .iter()
                .map(|s| a.parse(s))
                .collect::<richwords::Result<Vec<Word>>>()?;
            let closures = sorted_by_len_lex(switches::swc_set(parsed.iter())?);
            match cli.output {
                Output::Text => {
                    for c in &closures {
                        println!("{}", a.render(c));
                    }
                }
                Output::Json => {
                    let items: Vec<String> = closures.iter().map(|c| a.render(c)).collect();
                    println!("{}", serde_json::json!({ "closures": items }));
                }
            }
            Ok(0)
        }
        Command::Gen { target } => {
            let a = match &cli.alphabet {
                Some(s) => Alphabet::new(s.chars())?,
                None => Alphabet::canonical(2)?,
            };
            match target {
                GenTarget::G(args) => {
                    let g = gen_g(args.n)?;
                    match cli.output {
                        Output::Text => print_word(&a, &g, args.raw, &args.out)?,
                        Output::Json => {
                            let mut v = serde_json::json!({ "n": args.n, "length": g.len() });
                            if args.raw || g.len() <= RAW_PRINT_LIMIT {
                                v["word"] = a.render(&g).into();
                            }
                            println!("{v}");
                        }
                    }
                }
                GenTarget::H(args) => {
                    let r = gen_h(args.n, &a)?;
                    match cli.output {
                        Output::Text => {
                            if args.out.is_some() {
                                let path = args.out.as_ref().unwrap();
                                std::fs::write(path, a.render(&r.h))?;
                                println!("h_len={}", r.h.len());
                                println!("written={}", path.display());
                            } else if args.raw {
                                println!("{}", a.render(&r.h));
                            } else {
                                println!("n={}", r.n);
                                println!("q={}", a.size());
                                println!("g_len={}", r.g.len());
                                println!("h_len={}", r.h.len());
                                println!("hbar_len={}", r.h_bar.len());
                                println!("bound={}", r.bound_floor());
                                println!("ratio={}", r.ratio);
                            }
                        }
                        Output::Json => {
                            println!(
                                "{}",
                                serde_json::json!({
                                    "n": r.n,
                                    "q": a.size(),
                                    "g_len": r.g.len(),
                                    "h_len": r.h.len(),
                                    "hbar_len": r.h_bar.len(),
                                    "bound": r.bound_floor(),
                                    "ratio": r.ratio,
                                })
                            );
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Verify { target } => {
            let VerifyTarget::H { n } = target;
            let a = match &cli.alphabet {
                Some(s) => Alphabet::new(s.chars())?,
                None => Alphabet::canonical(2)?,
            };
            let r = gen_h(n, &a)?;
            let v = verify_h(&r);
            match cli.output {
                Output::Text => {
                    println!("rich={}", v.rich);
                    println!("unique_extension={}", v.unique_extension);
                    println!("bound_ok={}", v.bound_ok);
                    println!("ratio={}", v.ratio);
                    if let Some(ok) = v.ratio_le_two_ninths {
                        println!("ratio_le_2_9={ok}");
                    }
                }
                Output::Json => println!("{}", construction_json(&r, &v)),
            }
            Ok(if v.all_pass() { 0 } else { 1 })
        }
        Command::Phi { n, q, jobs, cache } => {
            let a = match (&cli.alphabet, q) {
                (Some(s), Some(q)) if s.chars().count() != q => {
                    return Err(format!(
                        "--alphabet has {} symbols but --q is {q}",
                        s.chars().count()
                    )
                    .into());
                }
                (Some(s), _) => Alphabet::new(s.chars())?,
                (None, Some(q)) => Alphabet::canonical(q)?,
                (None, None) => return Err("phi needs --q or --alphabet".into()),
            };
            if jobs == 0 {
                return Err("--jobs must be at least 1".into());
            }
            let record: PhiRecord = match &cache {
                Some(path) => match phi_search::cache_lookup(n, a.size(), path)? {
                    Some(rec) => rec,
                    None => {
                        let rec = phi_search::phi(n, &a, jobs)?.to_record(&a);
                        phi_search::cache_store(&rec, path)?;
                        rec
                    }
                },
                None => phi_search::phi(n, &a, jobs)?.to_record(&a),
            };
            match cli.output {
                Output::Text => {
                    println!("phi={}", record.phi);
                    println!("enumerated={}", record.enumerated);
                    for w in &record.witnesses {
                        println!("witness={w}");
                    }
                }
                Output::Json => println!("{}", serde_json::to_string(&record)?),
            }
            Ok(0)
        }
    }
}
