//! Command-line front end. [`run`] returns the exit code and the report so
//! the binary and the tests share one code path.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::braid::relations::verify_suite;
use crate::braid::{recombine, ArtinOracle, BraidError, BraidWord, Comber, PureRewriter, PureWord};
use crate::homology::{
    betti_bpn, enumerate_simplices, full_braid_khomology_mod_torsion, khomology_bpn, khomology_of_2complex,
    presentation_homology, Presentation,
};
use crate::intlinalg::{cokernel, kernel_rank, smith_normal_form, IntMatrix};
use crate::ktheory::{amalgam_over_z, b3_identities, ktheory_pn, xy_recurrence};
use crate::words::WordError;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Parser)]
#[command(name = "braidkit", version, about = "Exact braid, homology and K-theory computations")]
pub struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Relation suite, action tables and centre identities for B_n / P_n.
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Comb a pure braid (A(i,j) word or pure σ-word) into level words.
    Comb {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Decide equality of two braid words; exit code 1 when they differ.
    BraidEq {
        #[arg(long)]
        n: usize,
        u: String,
        v: String,
    },
    /// Homology and K-homology of a presentation complex.
    Homology {
        /// JSON file, or one of the built-ins X_P4, torus.
        #[arg(long)]
        presentation: String,
    },
    /// Betti numbers of BP_n.
    Betti {
        #[arg(long)]
        n: usize,
    },
    /// List the r-simplices of the model of BP_n.
    Simplices {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// K-theory of reduced group C*-algebras.
    #[command(subcommand)]
    Ktheory(KtheoryCmd),
    /// K-homology of classifying spaces.
    #[command(subcommand)]
    Khomology(KhomologyCmd),
    /// Smith normal form of a JSON matrix.
    Snf { file: String },
    /// Cokernel of a JSON matrix.
    Coker { file: String },
}

#[derive(Debug, Subcommand)]
pub enum KtheoryCmd {
    /// K-theory of C*_r(P_n).
    Pn(PnArgs),
    /// K-theory of C*_r(B_3) from the amalgam Z *_Z Z.
    B3,
}

#[derive(Debug, Args)]
pub struct PnArgs {
    #[arg(long)]
    pub n: usize,
    /// Print every Pimsner-Voiculescu stage and the provenance.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Subcommand)]
pub enum KhomologyCmd {
    /// K-homology of BP_n.
    Bpn {
        #[arg(long)]
        n: usize,
    },
    /// K-homology of BB_n modulo torsion.
    Bbn {
        #[arg(long)]
        n: usize,
    },
}

/// Outcome of one invocation.
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { code: 0, text, json }
    }
    fn status(pass: bool, text: String, json: Value) -> Self {
        Outcome { code: if pass { 0 } else { 1 }, text, json }
    }
}

/// Parse `argv` (including the program name) and run. Returns the exit code
/// and what should be printed.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let json = cli.json;
    match execute(&cli) {
        Ok(out) => {
            let text = if json { serde_json::to_string_pretty(&out.json).expect("json") + "\n" } else { out.text };
            (out.code, text)
        }
        Err(msg) => {
            if json {
                (2, serde_json::to_string_pretty(&json!({ "error": msg })).expect("json") + "\n")
            } else {
                (2, format!("error: {msg}\n"))
            }
        }
    }
}

/// Point at a byte offset of `text`.
fn caret(text: &str, pos: usize) -> String {
    let col = text[..pos.min(text.len())].chars().count();
    format!("  {text}\n  {}^", " ".repeat(col))
}

fn error_pos(e: &BraidError) -> usize {
    match e {
        BraidError::Word(WordError::Parse { pos, .. }) => *pos,
        _ => 0,
    }
}

/// Report whichever parser got further.
fn furthest(text: &str, a: &BraidError, b: &BraidError) -> String {
    word_error(text, if error_pos(b) > error_pos(a) { b } else { a })
}

fn word_error(text: &str, e: &BraidError) -> String {
    match e {
        BraidError::Word(WordError::Parse { pos, msg }) => format!("at byte {pos}: {msg}\n{}", caret(text, *pos)),
        other => other.to_string(),
    }
}

/// A σ-word or an `A(i,j)` word, whichever parses.
fn parse_braid(n: usize, text: &str) -> Result<BraidWord, String> {
    match BraidWord::parse(n, text) {
        Ok(b) => Ok(b),
        Err(sigma_err) => match PureWord::parse(n, text) {
            Ok(p) => p.expand().map_err(|e| e.to_string()),
            Err(pure_err) => Err(furthest(text, &sigma_err, &pure_err)),
        },
    }
}

fn parse_pure(n: usize, text: &str, rewriter: &mut PureRewriter) -> Result<PureWord, String> {
    match PureWord::parse(n, text) {
        Ok(p) => Ok(p),
        Err(pure_err) => match BraidWord::parse(n, text) {
            Ok(b) => rewriter.pure_from_sigma(&b).map_err(|e| e.to_string()),
            Err(sigma_err) => Err(furthest(text, &pure_err, &sigma_err)),
        },
    }
}

fn read_matrix(path: &str) -> Result<IntMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("{path}: line {}, column {}: {e}", e.line(), e.column()))
}

fn execute(cli: &Cli) -> Result<Outcome, String> {
    let oracle = ArtinOracle::default();
    match &cli.command {
        Command::Verify { n } => verify(*n, cli.seed, &oracle),
        Command::Comb { n, word } => {
            let mut rw = PureRewriter::default();
            let w = parse_pure(*n, word, &mut rw)?;
            let comber = Comber::new(*n).map_err(|e| e.to_string())?;
            let form = comber.comb(&w).map_err(|e| e.to_string())?;
            let ok = recombine(&form, &w, &oracle).map_err(|e| e.to_string())?;
            let mut text = String::new();
            writeln!(text, "input: {w}").unwrap();
            write!(text, "{form}").unwrap();
            writeln!(text, "recombination: {}", if ok { "PASS" } else { "FAIL" }).unwrap();
            let mut js = serde_json::to_value(&form).expect("json");
            js["recombination_ok"] = json!(ok);
            Ok(Outcome::status(ok, text, js))
        }
        Command::BraidEq { n, u, v } => {
            let a = parse_braid(*n, u)?;
            let b = parse_braid(*n, v)?;
            let eq = oracle.braid_equal(&a, &b).map_err(|e| e.to_string())?;
            let text = format!("{}\n", if eq { "equal" } else { "not equal" });
            Ok(Outcome::status(eq, text, json!({ "n": n, "u": a.to_string(), "v": b.to_string(), "equal": eq })))
        }
        Command::Homology { presentation } => {
            let p = match Presentation::builtin(presentation) {
                Ok(p) => p,
                Err(_) => {
                    let text = std::fs::read_to_string(presentation).map_err(|e| format!("{presentation}: {e}"))?;
                    Presentation::from_json(&text).map_err(|e| format!("{presentation}: {e}"))?
                }
            };
            let h = presentation_homology(&p);
            let k = khomology_of_2complex(&h.h0, &h.h1, &h.h2);
            let mut text = format!("H0 = {}\nH1 = {}\nH2 = {}\nK-homology: {k}\n", h.h0, h.h1, h.h2);
            for w in &h.warnings {
                writeln!(text, "warning: {w}").unwrap();
            }
            Ok(Outcome::ok(text, json!({ "presentation": p.to_json(), "homology": h, "khomology": k })))
        }
        Command::Betti { n } => {
            let b = betti_bpn(*n).map_err(|e| e.to_string())?;
            let text = format!(
                "betti(BP_{n}) = {:?}\nsum = {}, even = {}, odd = {}\n",
                b.betti,
                b.betti.iter().sum::<u64>(),
                b.even_sum(),
                b.odd_sum()
            );
            Ok(Outcome::ok(text, serde_json::to_value(&b).expect("json")))
        }
        Command::Simplices { n, r } => {
            let s = enumerate_simplices(*n, *r).map_err(|e| e.to_string())?;
            let mut text = format!("{} {r}-simplices of BP_{n}\n", s.len());
            for l in &s {
                writeln!(text, "{l}").unwrap();
            }
            Ok(Outcome::ok(text, json!({ "n": n, "r": r, "count": s.len(), "simplices": s })))
        }
        Command::Ktheory(KtheoryCmd::Pn(args)) => {
            let rep = ktheory_pn(args.n).map_err(|e| e.to_string())?;
            let xy = xy_recurrence(args.n);
            let mut trail = vec![rep.start.ranks()];
            trail.extend(rep.stages.iter().map(|s| s.output));
            let agree = args.n < 3 || trail == xy;
            let (k0, k1) = rep.result.ranks();
            let mut text = format!("K_*(C*_r(P_{})): K0 = Z^{k0}, K1 = Z^{k1} (n!/2 = {})\n", args.n, rep.expected);
            if args.trace {
                writeln!(text, "start: {:?}", rep.start.ranks()).unwrap();
                for s in &rep.stages {
                    writeln!(
                        text,
                        "stage {}: {:?} x F_{} -> {:?} [{}]",
                        s.stage, s.input, s.free_rank, s.output, s.certificate
                    )
                    .unwrap();
                }
                writeln!(text, "circle factor -> ({k0}, {k1})").unwrap();
                for p in &rep.result.provenance {
                    writeln!(text, "  {}: {}", p.rule, p.detail).unwrap();
                }
            }
            writeln!(text, "recurrence (x_i, y_i): {xy:?} {}", if agree { "agrees" } else { "DISAGREES" }).unwrap();
            if let Some(l) = &rep.ledger {
                writeln!(
                    text,
                    "ledger {}:\n  K0: {}\n  K1: {}",
                    l.group,
                    l.k0_generators.join(", "),
                    l.k1_generators.join(", ")
                )
                .unwrap();
            }
            let js = json!({ "report": rep, "xy_recurrence": xy, "recurrence_agrees": agree });
            Ok(Outcome::status(agree, text, js))
        }
        Command::Ktheory(KtheoryCmd::B3) => {
            let rep = amalgam_over_z(2, 3).map_err(|e| e.to_string())?;
            let ids = b3_identities(&oracle).map_err(|e| e.to_string())?;
            let ok = rep.a_injective && rep.b_injective && ids.iter().all(|c| c.1);
            let mut text = format!(
                "K0(C*_r(B_3)) = {} generated by {}\nK1(C*_r(B_3)) = {} generated by {}\n",
                rep.k.k0,
                rep.ledger.k0_generators.join(", "),
                rep.k.k1,
                rep.ledger.k1_generators.join(", ")
            );
            for (name, holds) in &ids {
                writeln!(text, "{name}: {}", if *holds { "PASS" } else { "FAIL" }).unwrap();
            }
            Ok(Outcome::status(ok, text, json!({ "amalgam": rep, "identities": ids })))
        }
        Command::Khomology(KhomologyCmd::Bpn { n }) => {
            let k = khomology_bpn(*n).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(format!("K_*(BP_{n}): {k}\n"), serde_json::to_value(&k).expect("json")))
        }
        Command::Khomology(KhomologyCmd::Bbn { n }) => {
            let k = full_braid_khomology_mod_torsion(*n).map_err(|e| e.to_string())?;
            let mut text = format!("K_*(BB_{n}): {k}\n");
            for note in &k.notes {
                writeln!(text, "note: {note}").unwrap();
            }
            Ok(Outcome::ok(text, serde_json::to_value(&k).expect("json")))
        }
        Command::Snf { file } => {
            let a = read_matrix(file)?;
            let s = smith_normal_form(&a);
            let ok = s.u.mul(&a).and_then(|m| m.mul(&s.v)).map(|m| m == s.d).unwrap_or(false);
            let text = format!("D =\n{}U =\n{}V =\n{}D = U*A*V: {}\n", s.d, s.u, s.v, if ok { "PASS" } else { "FAIL" });
            Ok(Outcome::status(ok, text, serde_json::to_value(&s).expect("json")))
        }
        Command::Coker { file } => {
            let a = read_matrix(file)?;
            let g = cokernel(&a);
            let k = kernel_rank(&a);
            Ok(Outcome::ok(format!("coker = {g}\nkernel rank = {k}\n"), json!({ "cokernel": g, "kernel_rank": k })))
        }
    }
}

/// Relator insertion in random words must never change the oracle's answer.
fn random_soundness(n: usize, seed: u64, oracle: &ArtinOracle, trials: usize) -> Result<(usize, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut relators: Vec<BraidWord> = Vec::new();
    for i in 1..n.saturating_sub(1) {
        relators.push(BraidWord::new(n, [(i, 1), (i + 1, 1), (i, 1), (i + 1, -1), (i, -1), (i + 1, -1)]).unwrap());
    }
    for i in 1..n {
        for j in (i + 2)..n {
            relators.push(BraidWord::new(n, [(i, 1), (j, 1), (i, -1), (j, -1)]).unwrap());
        }
    }
    relators.push(BraidWord::new(n, [(1, 1), (1, -1)]).unwrap());
    let mut passed = 0;
    for _ in 0..trials {
        let len = rng.gen_range(0..=12);
        let letters: Vec<(usize, i64)> =
            (0..len).map(|_| (rng.gen_range(1..n), if rng.gen_bool(0.5) { 1 } else { -1 })).collect();
        let cut = rng.gen_range(0..=letters.len());
        let r = &relators[rng.gen_range(0..relators.len())];
        let w = BraidWord::new(n, letters.clone()).unwrap();
        let mut with = letters[..cut].to_vec();
        with.extend(r.letters().iter().map(|s| (s.gen, s.exp)));
        with.extend_from_slice(&letters[cut..]);
        let w2 = BraidWord::new(n, with).unwrap();
        if oracle.braid_equal(&w, &w2).map_err(|e| e.to_string())? {
            passed += 1;
        }
    }
    Ok((passed, trials))
}

fn verify(n: usize, seed: u64, oracle: &ArtinOracle) -> Result<Outcome, String> {
    let report = verify_suite(n, oracle).map_err(|e| e.to_string())?;
    let (sound, trials) = if n >= 3 { random_soundness(n, seed, oracle, 100)? } else { (0, 0) };
    let pass = report.all_pass() && sound == trials;
    let mut text = String::new();
    writeln!(text, "seed: {seed}").unwrap();
    for g in &report.groups {
        writeln!(text, "{}: {}/{}", g.label, g.passed(), g.checks.len()).unwrap();
        for c in g.checks.iter().filter(|c| !c.certificate.holds) {
            writeln!(text, "  FAILED {}: {} = {}", c.name, c.lhs, c.rhs).unwrap();
        }
    }
    for v in &report.variants {
        let cands: Vec<String> = v.candidates.iter().map(|(c, h)| format!("{c} -> {h}")).collect();
        writeln!(text, "variant [{}]: {}; chosen {}", v.question, cands.join("; "), v.chosen).unwrap();
    }
    if trials > 0 {
        writeln!(text, "relator insertion: {sound}/{trials} preserved").unwrap();
    }
    writeln!(text, "{}", report.summary()).unwrap();
    Ok(Outcome::status(
        pass,
        text,
        json!({ "seed": seed, "suite": report, "relator_insertion": [sound, trials], "pass": pass }),
    ))
}
