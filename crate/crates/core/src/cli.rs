//! The `grpf` command line. Everything goes through [`run`], which returns
//! the exit code and the text destined for stdout and stderr, so the binary
//! is a thin wrapper and tests need no subprocesses.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::PrimeField;
use crate::bwb::{bwb_cohomology, BwbResult};
use crate::error::{Error, Result};
use crate::geometry::{classify, orthogonal_rectangle, window_s, window_sets, window_t, ModelParams, WindowSet};
use crate::pfaffian::{
    build_skew_matrix, build_skew_matrix_mod, hypersurface_hodge, sample_y2, AMap, Scalars, DEFAULT_PRIME,
};
use crate::sections::{
    decide_pair_all_t, h1_tangent_y1, hodge_diamond_y1, lemma_vanishing_all_t, verify_strong_exceptional, DegreeValue,
    HodgeDiamond, Label, Verdict,
};
use crate::verify::{verify_all, Fault, Profile, Status, VerifyOptions};
use crate::weights::GLWeight;

#[derive(Parser, Debug)]
#[command(name = "grpf", version, about = "Linear sections of Gr(2,n) and their Pfaffian duals")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Prime for finite-field computations [default: 10007, or the prime of an input family].
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall-clock time in the output. Off by default so that JSON is reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology of one irreducible homogeneous bundle.
    Bwb {
        #[arg(long)]
        n: usize,
        /// S^v-block (a1,a2), e.g. --s=-1,-3
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        s: Vec<i64>,
        /// Q-block of length n-2; zeros when omitted.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        q: Option<Vec<i64>>,
    },
    /// Dimensions and canonical classes of Y1 and Y2.
    Classify(NK),
    /// The window sets S and T, the inclusion test and the orthogonal rectangle.
    Windows(NK),
    /// Exceptional collection checks on window sets.
    #[command(subcommand)]
    Collection(CollectionCmd),
    /// Ext vanishing between window bundles for every twist.
    #[command(subcommand)]
    Lemma(LemmaCmd),
    /// Hodge numbers of linear sections and hypersurfaces.
    #[command(subcommand)]
    Hodge(HodgeCmd),
    /// Families of skew forms: build, sample, generate.
    #[command(subcommand)]
    Pfaffian(PfaffianCmd),
    /// Reproduce every headline number and run the property suites.
    VerifyAll {
        #[arg(long, value_enum, default_value = "fast")]
        profile: Profile,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

#[derive(Args, Debug)]
struct NK {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Subcommand, Debug)]
enum CollectionCmd {
    /// Check that a window set is a strong exceptional collection.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, ignore_case = true, default_value = "S")]
        set: WindowChoice,
        /// Required for --set T.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum WindowChoice {
    #[value(name = "S")]
    S,
    #[value(name = "T")]
    T,
}

#[derive(Subcommand, Debug)]
enum LemmaCmd {
    /// Decide Ext vanishing against every twist O(t), t >= 0.
    Check {
        #[arg(long)]
        n: usize,
        /// Test every label of S against this one label `l,m` instead.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        target: Option<Vec<i64>>,
    },
}

#[derive(Subcommand, Debug)]
enum HodgeCmd {
    /// Hodge diamond and h^1(T) of Y1 = Gr(2,n) cut by k hyperplanes.
    GrassSection(NK),
    /// Hodge diamond of a smooth hypersurface of degree d in P^dim.
    Hypersurface {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PfaffianCmd {
    /// Pfaffian (even n) or submaximal Pfaffians (odd n) of a family file.
    Build {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Sample points of Y2 over F_p.
    Sample {
        /// Family file; otherwise a random family from --n, --k and --seed.
        #[arg(long = "in", conflicts_with_all = ["n", "k"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "k")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
        #[arg(long, default_value_t = 100)]
        points: usize,
    },
    /// A random family over F_p, in the input file format.
    Random(NK),
}

#[derive(Serialize)]
struct Report {
    command: String,
    params: Value,
    result: Value,
    provenance: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing: Option<Value>,
}

struct Done {
    report: Report,
    text: String,
    /// A verification claim turned out false.
    failed: bool,
    /// Per-item timings for verify-all, shown only with `--timing`.
    item_timings: Vec<(String, u128)>,
}

/// Exit status with captured output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI without colour.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, false)
}

/// Runs the CLI; `color` marks pass/fail words with ANSI codes in text output.
pub fn run_with<I, T>(argv: I, color: bool) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let msg = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: msg }
            } else {
                Outcome { code: 0, stdout: msg, stderr: String::new() }
            };
        }
    };
    let start = Instant::now();
    let done = match dispatch(&cli) {
        Ok(d) => d,
        Err(e) => {
            let code = if matches!(e, Error::Integrity(_)) { 1 } else { 2 };
            return Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    let elapsed = start.elapsed().as_millis();
    let Done { mut report, mut text, failed, item_timings } = done;

    let body = if cli.json {
        if cli.timing {
            let items: serde_json::Map<String, Value> =
                item_timings.iter().map(|(id, ms)| (id.clone(), json!(ms))).collect();
            report.timing = Some(if items.is_empty() {
                json!({ "total_ms": elapsed })
            } else {
                json!({ "total_ms": elapsed, "items_ms": items })
            });
        }
        // Value maps are ordered by key, which gives sorted output.
        let v = serde_json::to_value(&report).expect("reports serialize");
        serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
    } else {
        if cli.timing {
            for (id, ms) in &item_timings {
                let _ = writeln!(text, "time[{id}]: {ms} ms");
            }
            let _ = writeln!(text, "time: {elapsed} ms");
        }
        if color {
            text = text.replace("PASS", "\x1b[32mPASS\x1b[0m").replace("FAIL", "\x1b[31mFAIL\x1b[0m");
        }
        text
    };
    let code = if failed { 1 } else { 0 };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn done(command: &str, params: Value, result: Value, provenance: Vec<&'static str>, text: String) -> Done {
    Done {
        report: Report { command: command.into(), params, result, provenance, timing: None },
        text,
        failed: false,
        item_timings: Vec::new(),
    }
}

fn dispatch(cli: &Cli) -> Result<Done> {
    match &cli.command {
        Command::Bwb { n, s, q } => cmd_bwb(*n, s, q.as_deref()),
        Command::Classify(nk) => cmd_classify(nk),
        Command::Windows(nk) => cmd_windows(nk),
        Command::Collection(CollectionCmd::Verify { n, set, k }) => cmd_collection(*n, *set, *k),
        Command::Lemma(LemmaCmd::Check { n, target }) => cmd_lemma(*n, target.as_deref()),
        Command::Hodge(HodgeCmd::GrassSection(nk)) => cmd_grass_section(nk),
        Command::Hodge(HodgeCmd::Hypersurface { dim, degree }) => cmd_hypersurface(*dim, *degree),
        Command::Pfaffian(PfaffianCmd::Build { input }) => cmd_pfaffian_build(input),
        Command::Pfaffian(PfaffianCmd::Sample { input, n, k, points }) => {
            cmd_pfaffian_sample(cli, input.as_ref(), n.zip(*k), *points)
        }
        Command::Pfaffian(PfaffianCmd::Random(nk)) => cmd_pfaffian_random(cli, nk),
        Command::VerifyAll { profile, inject_fault } => cmd_verify_all(cli, *profile, *inject_fault),
    }
}

fn cmd_bwb(n: usize, s: &[i64], q: Option<&[i64]>) -> Result<Done> {
    let [a1, a2] = <[i64; 2]>::try_from(s).map_err(|_| Error::InvalidParams {
        bound: "--s has exactly two entries".into(),
        detail: format!("got {} entries", s.len()),
    })?;
    let q = q.map(<[i64]>::to_vec).unwrap_or_else(|| vec![0; n.saturating_sub(2)]);
    let w = GLWeight::new(n, [a1, a2], q)?;
    let r = bwb_cohomology(&w)?;
    let text = match &r {
        BwbResult::Vanishes => format!("{w} on Gr(2,{n}): all cohomology vanishes\n"),
        BwbResult::Cohomology { degree, weight, dimension } => {
            format!("{w} on Gr(2,{n}): H^{degree} = V{weight:?}, dimension {dimension}\n")
        }
    };
    Ok(done(
        "bwb",
        json!({ "n": n, "weight": w.to_vec() }),
        to_value(&r),
        vec!["Borel-Weil-Bott theorem", "Weyl dimension formula"],
        text,
    ))
}

fn cmd_classify(nk: &NK) -> Result<Done> {
    let c = classify(&ModelParams::new(nk.n, nk.k)?);
    let mut text = String::new();
    let _ = writeln!(text, "Y1 in Gr(2,{}) cut by {} hyperplanes", c.n, c.k);
    let _ = writeln!(text, "  dim Y1 = {}, {}{}", c.dim_y1, c.y1_type, if c.y1_empty { " (empty)" } else { "" });
    let _ = writeln!(text, "  dim Y2 = {}, {}{}", c.dim_y2, c.y2_type, if c.y2_empty { " (empty)" } else { "" });
    let _ = writeln!(text, "  Y2 smooth for generic A: {}", c.y2_smoothable);
    let _ = writeln!(text, "  window inclusion T in S: {}", c.window_inclusion);
    let _ = writeln!(text, "  embedding theorem applies: {}", c.theorem_applies);
    Ok(done(
        "classify",
        json!({ "n": nk.n, "k": nk.k }),
        to_value(&c),
        vec!["adjunction formula", "codimension of the rank strata of skew forms"],
        text,
    ))
}

fn grid(set: &WindowSet) -> String {
    let labels = set.labels();
    let (Some(lmax), Some(mmax)) = (labels.iter().map(|x| x.0).max(), labels.iter().map(|x| x.1).max()) else {
        return "  (empty)\n".into();
    };
    let mmin = labels.iter().map(|x| x.1).min().unwrap_or(0);
    let mut out = String::new();
    for l in (0..=lmax).rev() {
        let _ = write!(out, "  l={l:<3}");
        for m in mmin..=mmax {
            out.push_str(if set.contains(l, m) { " #" } else { " ." });
        }
        out.push('\n');
    }
    let _ = writeln!(out, "        m = {mmin}..{mmax}");
    out
}

fn cmd_windows(nk: &NK) -> Result<Done> {
    let p = ModelParams::new(nk.n, nk.k)?;
    let w = window_sets(&p)?;
    let rect = orthogonal_rectangle(&p);
    let mut text = String::new();
    let _ = writeln!(text, "S: {} labels", w.s.len());
    text.push_str(&grid(&w.s));
    let _ = writeln!(text, "T: {} labels", w.t.len());
    text.push_str(&grid(&w.t));
    let _ =
        writeln!(text, "T subset of S: {} (closed form agrees: {})", w.inclusion, w.inclusion == w.inclusion_formula);
    let _ = writeln!(text, "orthogonal rectangle: {} labels", rect.len());
    text.push_str(&grid(&rect));
    Ok(done(
        "windows",
        json!({ "n": nk.n, "k": nk.k }),
        json!({
            "s": w.s.labels(),
            "t": w.t.labels(),
            "inclusion": w.inclusion,
            "inclusion_formula": w.inclusion_formula,
            "orthogonal_rectangle": rect.labels(),
        }),
        vec!["window sets of the Grassmannian and Pfaffian sides", "inclusion criterion on (n, k)"],
        text,
    ))
}

fn cmd_collection(n: usize, set: WindowChoice, k: Option<usize>) -> Result<Done> {
    let (labels, name) = match (set, k) {
        (WindowChoice::S, _) => (window_s(n), "S"),
        (WindowChoice::T, Some(k)) => (window_t(&ModelParams::new(n, k)?), "T"),
        (WindowChoice::T, None) => {
            return Err(Error::InvalidParams { bound: "--set T needs --k".into(), detail: "k missing".into() })
        }
    };
    if n < 3 {
        return Err(Error::InvalidRank { n: n as i64, min: 3 });
    }
    let r = verify_strong_exceptional(n, &labels)?;
    let mut text = String::new();
    let verdict = if r.passed { "PASS" } else { "FAIL" };
    let _ = writeln!(
        text,
        "{verdict}: {} on Gr(2,{n}), {} labels, {} ordered pairs",
        name,
        r.labels.len(),
        r.pairs_checked
    );
    let _ = writeln!(text, "  higher Ext failures: {}", r.failures.len());
    for f in r.failures.iter().take(10) {
        let _ = writeln!(
            text,
            "    Ext^{}({:?}, {:?}) has dimension {} (summand {}, weight {})",
            f.degree, f.source, f.target, f.dimension, f.summand, f.weight
        );
    }
    let _ = writeln!(text, "  non-simple objects: {}", r.non_simple.len());
    let _ = writeln!(text, "  compatible order: {}", if r.order.is_some() { "found" } else { "none" });
    let failed = !r.passed;
    let mut d = done(
        "collection verify",
        json!({ "n": n, "set": name, "k": k }),
        to_value(&r),
        vec!["Borel-Weil-Bott theorem", "Clebsch-Gordan decomposition", "strong exceptional collections"],
        text,
    );
    d.failed = failed;
    Ok(d)
}

fn parse_label(v: &[i64]) -> Result<Label> {
    match v {
        [l, m] if *l >= 0 => Ok((*l as u32, *m)),
        _ => Err(Error::InvalidParams { bound: "--target is l,m with l >= 0".into(), detail: format!("got {v:?}") }),
    }
}

fn cmd_lemma(n: usize, target: Option<&[i64]>) -> Result<Done> {
    let provenance = vec!["Borel-Weil-Bott theorem", "Clebsch-Gordan decomposition", "Ext vanishing for all twists"];
    let mut text = String::new();
    let (result, failed) = match target {
        None => {
            let r = lemma_vanishing_all_t(n)?;
            let ok = r.verdict == Verdict::VanishesForAllT;
            let _ = writeln!(
                text,
                "{}: n = {n}, {} pairs, {} summands, {} t-values evaluated directly",
                if ok { "PASS" } else { "FAIL" },
                r.pairs,
                r.summands,
                r.direct_evaluations
            );
            for c in r.counterexamples.iter().take(10) {
                let _ = writeln!(
                    text,
                    "  Ext^{}({:?}, {:?}(t)) != 0 at t = {}",
                    c.result.degree().unwrap_or(0),
                    c.source,
                    c.target,
                    c.t
                );
            }
            (to_value(&r), !ok)
        }
        Some(v) => {
            let f = parse_label(v)?;
            if n < 4 || n % 2 == 1 {
                return Err(Error::InvalidParams { bound: "n even, n >= 4".into(), detail: format!("n = {n}") });
            }
            let decisions: Vec<_> =
                window_s(n).labels().into_iter().map(|e| decide_pair_all_t(n, e, f)).collect::<Result<_>>()?;
            let bad: Vec<_> = decisions.iter().filter_map(|d| d.first_counterexample().cloned()).collect();
            let ok = bad.is_empty();
            let _ = writeln!(text, "{}: every label of S against {f:?}, n = {n}", if ok { "PASS" } else { "FAIL" });
            for c in bad.iter().take(10) {
                let _ = writeln!(
                    text,
                    "  Ext^{}({:?}, {:?}(t)) != 0 at t = {}",
                    c.result.degree().unwrap_or(0),
                    c.source,
                    c.target,
                    c.t
                );
            }
            let verdict = if ok { Verdict::VanishesForAllT } else { Verdict::Counterexample };
            (json!({ "n": n, "target": f, "verdict": verdict, "counterexamples": bad, "pairs": decisions }), !ok)
        }
    };
    let mut d = done("lemma check", json!({ "n": n, "target": target }), result, provenance, text);
    d.failed = failed;
    Ok(d)
}

/// The diamond drawn with `h^{d,0}` .. `h^{0,d}` on the middle line.
fn draw_diamond(h: &HodgeDiamond) -> String {
    let d = h.dim();
    let rows: Vec<Vec<String>> = (0..=2 * d)
        .map(|j| {
            let lo = j.saturating_sub(d);
            let hi = j.min(d);
            (lo..=hi).rev().map(|p| h.get(p, j - p).to_string()).collect()
        })
        .collect();
    let cell = rows.iter().flatten().map(String::len).max().unwrap_or(1) + 1;
    let width = (d + 1) * 2 * cell;
    let mut out = String::new();
    for row in rows.iter().rev() {
        let line: String = row.iter().map(|x| format!("{x:^w$}", w = 2 * cell)).collect();
        let pad = (width - line.len()) / 2;
        let _ = writeln!(out, "{}{}", " ".repeat(pad), line.trim_end());
    }
    out
}

fn fmt_row(row: &[num_bigint::BigUint]) -> String {
    row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_grass_section(nk: &NK) -> Result<Done> {
    let p = ModelParams::new(nk.n, nk.k)?;
    let y = hodge_diamond_y1(&p)?;
    let mut text = String::new();
    let d = y.diamond.dim();
    let _ = writeln!(text, "Y1 = Gr(2,{}) cut by {} hyperplanes, dimension {d}", nk.n, nk.k);
    if y.heuristic {
        let _ = writeln!(text, "  note: parameters outside the range where the diamond is claimed");
    }
    text.push_str(&draw_diamond(&y.diamond));
    let _ = writeln!(text, "middle row: {}", fmt_row(&y.diamond.middle_row()));
    let _ = writeln!(text, "Euler number: {}", y.diamond.euler_number());
    let tangent = h1_tangent_y1(&p);
    let tangent_json = match &tangent {
        Ok(t) => {
            let h1 = match t.h(1) {
                DegreeValue::Exact { value } => value.to_string(),
                DegreeValue::Bounds { lower, upper } => format!("in [{lower}, {upper}]"),
            };
            let _ = writeln!(text, "h^1(T_Y1) = {h1} ({:?})", t.mode);
            to_value(t)
        }
        Err(e) => {
            let _ = writeln!(text, "h^1(T_Y1): not computed ({e})");
            json!({ "error": e.to_string() })
        }
    };
    let result = json!({
        "hodge": to_value(&y),
        "middle_row": y.diamond.middle_row().iter().map(crate::json::number).collect::<Vec<_>>(),
        "euler_number": crate::json::number(&y.diamond.euler_number()),
        "h1_tangent": tangent_json,
    });
    Ok(done(
        "hodge grass-section",
        json!({ "n": nk.n, "k": nk.k }),
        result,
        vec![
            "Koszul resolution of a complete intersection",
            "Borel-Weil-Bott theorem",
            "Lefschetz hyperplane theorem",
            "tangent-normal sequence",
        ],
        text,
    ))
}

fn cmd_hypersurface(dim: usize, degree: usize) -> Result<Done> {
    let h = hypersurface_hodge(dim, degree)?;
    let mut text = String::new();
    let _ = writeln!(text, "smooth hypersurface of degree {degree} in P^{dim}");
    text.push_str(&draw_diamond(&h));
    let _ = writeln!(text, "middle row: {}", fmt_row(&h.middle_row_nonzero()));
    let result = json!({
        "diamond": to_value(&h),
        "middle_row": h.middle_row_nonzero().iter().map(crate::json::number).collect::<Vec<_>>(),
        "euler_number": crate::json::number(&h.euler_number()),
    });
    Ok(done(
        "hodge hypersurface",
        json!({ "dim": dim, "degree": degree }),
        result,
        vec!["Griffiths residues and the Jacobian ring", "Lefschetz hyperplane theorem"],
        text,
    ))
}

fn load_amap(path: &PathBuf) -> Result<AMap> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    AMap::from_json_str(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn field_json(a: &AMap) -> Value {
    match a.field() {
        Scalars::Rational => json!("Q"),
        Scalars::Prime(p) => json!({ "p": p }),
    }
}

fn cmd_pfaffian_build(path: &PathBuf) -> Result<Done> {
    let a = load_amap(path)?;
    let n = a.n();
    let (kind, polys, degree, terms): (&str, Vec<String>, Option<u32>, usize) = match a.field() {
        Scalars::Rational => {
            let m = build_skew_matrix(&a)?;
            let fs = if n % 2 == 0 { vec![m.pfaffian_polynomial()?] } else { m.submaximal_pfaffians()? };
            let deg = fs.iter().filter_map(|f| f.total_degree()).max();
            let terms = fs.iter().map(|f| f.num_terms()).sum();
            let s = fs.iter().map(|f| m.ring().format(f, "u", |c| c.to_string())).collect();
            (if n % 2 == 0 { "pfaffian" } else { "submaximal" }, s, deg, terms)
        }
        Scalars::Prime(p) => {
            let field = PrimeField::new(p).expect("validated prime");
            let m = build_skew_matrix_mod(&a, &field)?;
            let fs = if n % 2 == 0 { vec![m.pfaffian_polynomial()?] } else { m.submaximal_pfaffians()? };
            let deg = fs.iter().filter_map(|f| f.total_degree()).max();
            let terms = fs.iter().map(|f| f.num_terms()).sum();
            let s = fs.iter().map(|f| m.ring().format(f, "u", |c| field.signed(*c).to_string())).collect();
            (if n % 2 == 0 { "pfaffian" } else { "submaximal" }, s, deg, terms)
        }
    };
    let mut text = String::new();
    let what = if kind == "pfaffian" { "Pfaffian" } else { "submaximal Pfaffians" };
    let _ = writeln!(text, "{what} of the {n} x {n} skew matrix in u1..u{}", a.k());
    let _ = writeln!(text, "degree {}, {terms} terms", degree.map_or("-".into(), |d| d.to_string()));
    for (i, f) in polys.iter().enumerate() {
        if polys.len() > 1 {
            let _ = writeln!(text, "[{i}] {f}");
        } else {
            let _ = writeln!(text, "{f}");
        }
    }
    Ok(done(
        "pfaffian build",
        json!({ "input": path.display().to_string(), "n": n, "k": a.k(), "field": field_json(&a) }),
        json!({ "kind": kind, "degree": degree, "terms": terms, "polynomials": polys }),
        vec!["Pfaffian of a skew matrix of linear forms"],
        text,
    ))
}

fn resolve_prime(cli: &Cli, family: Option<&AMap>) -> u64 {
    match (cli.prime, family.map(AMap::field)) {
        (Some(p), _) => p,
        (None, Some(Scalars::Prime(q))) => q,
        _ => DEFAULT_PRIME,
    }
}

fn cmd_pfaffian_sample(cli: &Cli, input: Option<&PathBuf>, nk: Option<(usize, usize)>, points: usize) -> Result<Done> {
    let (a, source) = match (input, nk) {
        (Some(path), _) => (load_amap(path)?, json!(path.display().to_string())),
        (None, Some((n, k))) => (AMap::random(n, k, resolve_prime(cli, None), cli.seed)?, json!("random")),
        (None, None) => {
            return Err(Error::InvalidParams {
                bound: "--in or both --n and --k".into(),
                detail: "no family given".into(),
            })
        }
    };
    let p = resolve_prime(cli, Some(&a));
    let r = sample_y2(&a, p, points, cli.seed)?;
    let mut text = String::new();
    let _ = writeln!(text, "Y2 for n = {}, k = {} over F_{p}, seed {}", r.n, r.k, r.seed);
    let _ = writeln!(text, "  method: {}", r.method);
    let _ = writeln!(text, "  points: {} of {} requested ({} lines)", r.points.len(), r.requested, r.lines_tried);
    let _ = writeln!(text, "  smooth: {} ({:.1}%)", r.smooth_points, 100.0 * r.smooth_fraction());
    for (dim, count) in &r.kernel_dims_at_smooth {
        let _ = writeln!(text, "  kernel dimension {dim} at {count} smooth points");
    }
    if let Some(note) = &r.note {
        let _ = writeln!(text, "  note: {note}");
    }
    Ok(done(
        "pfaffian sample",
        json!({ "source": source, "n": a.n(), "k": a.k(), "prime": p, "seed": cli.seed, "points": points }),
        to_value(&r),
        vec!["rank stratification of skew forms", "Jacobian criterion for smoothness"],
        text,
    ))
}

fn cmd_pfaffian_random(cli: &Cli, nk: &NK) -> Result<Done> {
    let p = resolve_prime(cli, None);
    let a = AMap::random(nk.n, nk.k, p, cli.seed)?;
    let v = a.to_json();
    // The text form is the file format itself so that `--out` produces an input file.
    let text = serde_json::to_string_pretty(&v).expect("values serialize") + "\n";
    Ok(done(
        "pfaffian random",
        json!({ "n": nk.n, "k": nk.k, "prime": p, "seed": cli.seed }),
        v,
        vec!["generic linear family of skew forms"],
        text,
    ))
}

fn cmd_verify_all(cli: &Cli, profile: Profile, fault: Option<Fault>) -> Result<Done> {
    let prime = resolve_prime(cli, None);
    let r = verify_all(&VerifyOptions { profile, seed: cli.seed, prime, fault });
    let mut text = String::new();
    for c in &r.checks {
        let status = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let _ = writeln!(text, "{status} {:>4}  {:<52} {:>7} ms  {}", c.id, c.name, c.elapsed_ms, c.detail);
    }
    let failures = r.checks.iter().filter(|c| c.status == Status::Fail).count();
    let _ = writeln!(text, "{}: {failures} failing, profile {profile:?}", if r.passed { "PASS" } else { "FAIL" });
    let item_timings = r.checks.iter().map(|c| (c.id.clone(), c.elapsed_ms)).collect();
    let mut d = done(
        "verify-all",
        json!({ "profile": profile, "seed": cli.seed, "prime": prime, "inject_fault": fault }),
        to_value(&r),
        vec![
            "Griffiths residues and the Jacobian ring",
            "Koszul resolution of a complete intersection",
            "Borel-Weil-Bott theorem",
            "strong exceptional collections",
            "Ext vanishing for all twists",
            "inclusion criterion on (n, k)",
            "orthogonal rectangle",
            "rank stratification of skew forms",
            "Pfaffian of a skew matrix of linear forms",
            "Serre duality",
            "Cauchy formula for exterior powers",
            "Littlewood-Richardson rule",
        ],
        text,
    );
    d.failed = !r.passed;
    d.item_timings = item_timings;
    Ok(d)
}
