//! `freebraid`: braid actions on free groups from the command line.
//!
//! Exit status is 0 on success or an affirmative answer, 1 on a negative
//! decision and 2 on malformed input.

use std::cmp::Ordering;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use freebraid::braid::validate_tuple;
use freebraid::ends::{act_on_end, compare_ends, end_is_squarefree, thurston_compare, End};
use freebraid::order::{classify_sigma1, compare, ordering_label, sigma1_nonpositive_form};
use freebraid::phi::wada_action;
use freebraid::planar::{emit_diagram, is_planar, orbit_reduce, tuple_orbit_witness, PlanarEmbedding};
use freebraid::surface::surface_check;
use freebraid::torsion::{tw_apply_braid, tw_recover_braid, TorsionWord};
use freebraid::verify::{run_suite, SuiteConfig, SUITES};
use freebraid::{apply_braid, automorphism_of, recover_braid_word, BraidWord, Error, FreeWord};

#[derive(Parser, Debug)]
#[command(name = "freebraid", version, about = "Braid groups acting on free groups")]
struct Cli {
    /// Emit one JSON record per result, one per line.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Rank {
    /// Rank of the free group; braids act on `n` strands.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Image of a word under a braid: `act --n N WORD -- BRAID`.
    Act {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    /// Braid word inducing the given images of `t_1 .. t_n`.
    Recover {
        #[command(flatten)]
        rank: Rank,
        /// One image per generator; read from stdin lines when omitted.
        #[arg(allow_hyphen_values = true)]
        images: Vec<String>,
    },
    /// NEUTRAL, NEGATIVE or POSITIVE.
    Classify {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        braid: Option<String>,
    },
    /// LT, EQ or GT in the right-invariant order.
    Compare {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Equivalent braid word with no positive occurrence of `σ_1`.
    NegForm {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        braid: Option<String>,
    },
    /// Eventually periodic ends, written `u | v`.
    Ends {
        #[command(subcommand)]
        verb: EndsVerb,
    },
    /// Free products of cyclic groups of order `m`.
    Cm {
        #[command(subcommand)]
        verb: CmVerb,
    },
    /// Braid action on a word in a basis of the even subgroup.
    Wada {
        #[command(flatten)]
        rank: Rank,
        #[arg(long, default_value_t = 1)]
        variant: u32,
        /// Exponent of the first action; ignored by the other variants.
        #[arg(long, default_value_t = 1)]
        m: i64,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    /// Checks the surface identification of genus `n / 2`.
    SurfaceCheck {
        #[command(flatten)]
        rank: Rank,
    },
    /// PLANAR with the point positions, or NOT PLANAR.
    Planar {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// Writes the arc diagram of a planar word as SVG.
    Diagram {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        out: PathBuf,
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// `k` and a braid carrying the word to `t_1 ... t_k`.
    Orbit {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        word: Option<String>,
    },
    /// A braid carrying `(w_1, ..., w_k)` to `(t_1, ..., t_k)`.
    OrbitTuple {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Runs a randomized verification suite.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
}

#[derive(Subcommand, Debug)]
enum EndsVerb {
    Compare {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    Act {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        end: String,
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    Squarefree {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        end: Option<String>,
    },
    /// Compares braids by their action on `(t_1^∞, ..., t_n^∞)`.
    ThurstonCompare {
        #[command(flatten)]
        rank: Rank,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Subcommand, Debug)]
enum CmVerb {
    Act {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        m: u32,
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(allow_hyphen_values = true)]
        braid: String,
    },
    Recover {
        #[command(flatten)]
        rank: Rank,
        #[arg(long)]
        m: u32,
        #[arg(allow_hyphen_values = true)]
        images: Vec<String>,
    },
}

/// Text lines and JSON records for one invocation.
struct Reply {
    code: u8,
    lines: Vec<String>,
    records: Vec<Value>,
}

impl Reply {
    fn ok(line: impl Into<String>, record: Value) -> Reply {
        Reply { code: 0, lines: vec![line.into()], records: vec![record] }
    }

    fn decision(yes: bool, line: impl Into<String>, record: Value) -> Reply {
        Reply { code: u8::from(!yes), ..Reply::ok(line, record) }
    }
}

fn input_error(e: Error) -> String {
    e.to_string()
}

fn payload(arg: Option<String>) -> Result<String, String> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn payload_lines(args: Vec<String>) -> Result<Vec<String>, String> {
    if !args.is_empty() {
        return Ok(args);
    }
    let all = payload(None)?;
    Ok(all.lines().filter(|l| !l.trim().is_empty()).map(str::to_string).collect())
}

fn word(s: &str, n: usize) -> Result<FreeWord, String> {
    FreeWord::parse(s, n).map_err(input_error)
}

fn braid(s: &str, strands: usize) -> Result<BraidWord, String> {
    BraidWord::parse(s, strands).map_err(input_error)
}

fn end(s: &str, n: usize) -> Result<End, String> {
    End::parse(s, n).map_err(input_error)
}

fn torsion(s: &str, m: u32, n: usize) -> Result<TorsionWord, String> {
    TorsionWord::parse(s, m, n).map_err(input_error)
}

fn not_a_braid(e: &Error) -> bool {
    matches!(
        e,
        Error::NotConjugateToGenerator { .. }
            | Error::NotPermutation
            | Error::ProductLawViolated
            | Error::NoReducingGenerator
    )
}

fn recovered(verb: &str, r: freebraid::Result<BraidWord>) -> Result<Reply, String> {
    match r {
        Ok(b) => Ok(Reply::ok(b.to_string(), json!({"verb": verb, "braid": b.to_string()}))),
        Err(e) if not_a_braid(&e) => Ok(Reply::decision(
            false,
            "NOT A BRAID",
            json!({"verb": verb, "braid": null, "reason": e.to_string()}),
        )),
        Err(e) => Err(input_error(e)),
    }
}

fn ordering(verb: &str, o: Ordering) -> Reply {
    Reply::ok(ordering_label(o), json!({"verb": verb, "result": ordering_label(o)}))
}

fn positions(emb: &PlanarEmbedding) -> String {
    emb.perm.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn run(verb: Verb) -> Result<Reply, String> {
    Ok(match verb {
        Verb::Act { rank: Rank { n }, word: w, braid: b } => {
            let img = apply_braid(&word(&w, n)?, &braid(&b, n)?).map_err(input_error)?;
            Reply::ok(img.to_string(), json!({"verb": "act", "word": img.to_string()}))
        }
        Verb::Recover { rank: Rank { n }, images } => {
            let images = payload_lines(images)?.iter().map(|s| word(s, n)).collect::<Result<Vec<_>, _>>()?;
            return recovered("recover", validate_tuple(images).and_then(|a| recover_braid_word(&a)));
        }
        Verb::Classify { rank: Rank { n }, braid: b } => {
            let t = classify_sigma1(&automorphism_of(&braid(&payload(b)?, n)?)).to_string();
            Reply::ok(t.clone(), json!({"verb": "classify", "result": t}))
        }
        Verb::Compare { rank: Rank { n }, x, y } => {
            ordering("compare", compare(&braid(&x, n)?, &braid(&y, n)?).map_err(input_error)?)
        }
        Verb::NegForm { rank: Rank { n }, braid: b } => match sigma1_nonpositive_form(&braid(&payload(b)?, n)?) {
            Ok(f) => Reply::ok(f.to_string(), json!({"verb": "neg-form", "braid": f.to_string()})),
            Err(Error::PositiveInput) => Reply::decision(
                false,
                "POSITIVE",
                json!({"verb": "neg-form", "braid": null, "reason": "sigma1-positive"}),
            ),
            Err(e) => return Err(input_error(e)),
        },
        Verb::Ends { verb } => run_ends(verb)?,
        Verb::Cm { verb } => run_cm(verb)?,
        Verb::Wada { rank: Rank { n }, variant, m, word: w, braid: b } => {
            let strands = if variant == 1 { n } else { n + 1 };
            let img = wada_action(&word(&w, n)?, &braid(&b, strands)?, variant, m).map_err(input_error)?;
            Reply::ok(img.to_string(), json!({"verb": "wada", "variant": variant, "word": img.to_string()}))
        }
        Verb::SurfaceCheck { rank: Rank { n } } => {
            if n == 0 || n % 2 == 1 {
                return Err(format!("surface-check needs an even positive --n, got {n}"));
            }
            let r = surface_check(n / 2).map_err(input_error)?;
            let fails = r.failures();
            let mut lines = vec![format!(
                "{} surface g={}: {} identities, {} failures",
                if fails.is_empty() { "PASS" } else { "FAIL" },
                n / 2,
                r.checks.len(),
                fails.len()
            )];
            lines.extend(fails.iter().map(|f| format!("  {f}")));
            Reply {
                code: u8::from(!fails.is_empty()),
                lines,
                records: vec![json!({
                    "verb": "surface-check",
                    "genus": n / 2,
                    "checks": r.checks.len(),
                    "failures": fails,
                })],
            }
        }
        Verb::Planar { rank: Rank { n }, word: w } => {
            let w = word(&payload(w)?, n)?;
            match is_planar(&w) {
                Some(emb) => Reply {
                    code: 0,
                    lines: vec!["PLANAR".into(), positions(&emb)],
                    records: vec![json!({"verb": "planar", "planar": true, "positions": emb.perm})],
                },
                None => Reply::decision(false, "NOT PLANAR", json!({"verb": "planar", "planar": false})),
            }
        }
        Verb::Diagram { rank: Rank { n }, out, word: w } => {
            let w = word(&payload(w)?, n)?;
            match is_planar(&w) {
                Some(emb) => {
                    std::fs::write(&out, emit_diagram(&emb)).map_err(|e| format!("writing {}: {e}", out.display()))?;
                    let path = out.display().to_string();
                    Reply::ok(path.clone(), json!({"verb": "diagram", "out": path, "positions": emb.perm}))
                }
                None => Reply::decision(false, "NOT PLANAR", json!({"verb": "diagram", "planar": false})),
            }
        }
        Verb::Orbit { rank: Rank { n }, word: w } => {
            let w = word(&payload(w)?, n)?;
            match (orbit_reduce(&w), is_planar(&w)) {
                (Some((k, b)), Some(emb)) => Reply {
                    code: 0,
                    lines: vec![k.to_string(), b.to_string()],
                    records: vec![json!({
                        "verb": "orbit",
                        "k": k,
                        "witness": b.to_string(),
                        "positions": emb.perm,
                    })],
                },
                _ => Reply::decision(false, "NOT PLANAR", json!({"verb": "orbit", "k": null})),
            }
        }
        Verb::OrbitTuple { rank: Rank { n }, words } => {
            let ws = payload_lines(words)?.iter().map(|s| word(s, n)).collect::<Result<Vec<_>, _>>()?;
            match tuple_orbit_witness(&ws).map_err(input_error)? {
                Some(b) => Reply::ok(b.to_string(), json!({"verb": "orbit-tuple", "k": ws.len(), "witness": b.to_string()})),
                None => Reply::decision(false, "NOT IN ORBIT", json!({"verb": "orbit-tuple", "witness": null})),
            }
        }
        Verb::Verify { suite, seed, trials, max_len } => {
            let rep = run_suite(&suite, &SuiteConfig { seed, trials, max_len }).map_err(input_error)?;
            Reply {
                code: u8::from(!rep.passed()),
                lines: vec![rep.to_string()],
                records: vec![json!({
                    "verb": "verify",
                    "suite": rep.suite,
                    "seed": seed,
                    "checks": rep.checks,
                    "failures": rep.failures,
                    "passed": rep.passed(),
                })],
            }
        }
    })
}

fn run_ends(verb: EndsVerb) -> Result<Reply, String> {
    Ok(match verb {
        EndsVerb::Compare { rank: Rank { n }, a, b } => {
            ordering("ends compare", compare_ends(&end(&a, n)?, &end(&b, n)?).map_err(input_error)?)
        }
        EndsVerb::Act { rank: Rank { n }, end: e, braid: b } => {
            let img = act_on_end(&end(&e, n)?, &braid(&b, n)?).map_err(input_error)?;
            Reply::ok(img.to_string(), json!({"verb": "ends act", "end": img.to_string()}))
        }
        EndsVerb::Squarefree { rank: Rank { n }, end: e } => {
            let yes = end_is_squarefree(&end(&payload(e)?, n)?);
            Reply::decision(
                yes,
                if yes { "SQUAREFREE" } else { "NOT SQUAREFREE" },
                json!({"verb": "ends squarefree", "squarefree": yes}),
            )
        }
        EndsVerb::ThurstonCompare { rank: Rank { n }, x, y } => ordering(
            "ends thurston-compare",
            thurston_compare(&braid(&x, n)?, &braid(&y, n)?).map_err(input_error)?,
        ),
    })
}

fn run_cm(verb: CmVerb) -> Result<Reply, String> {
    Ok(match verb {
        CmVerb::Act { rank: Rank { n }, m, word: w, braid: b } => {
            let img = tw_apply_braid(&torsion(&w, m, n)?, &braid(&b, n)?).map_err(input_error)?;
            Reply::ok(img.to_string(), json!({"verb": "cm act", "m": m, "word": img.to_string()}))
        }
        CmVerb::Recover { rank: Rank { n }, m, images } => {
            let images = payload_lines(images)?.iter().map(|s| torsion(s, m, n)).collect::<Result<Vec<_>, _>>()?;
            if images.len() != n {
                return Err(input_error(Error::WrongTupleLength { expected: n, got: images.len() }));
            }
            return recovered("cm recover", tw_recover_braid(&images));
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(reply) => {
            if cli.json {
                for r in &reply.records {
                    println!("{r}");
                }
            } else {
                for l in &reply.lines {
                    println!("{l}");
                }
            }
            ExitCode::from(reply.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
