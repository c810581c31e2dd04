//! The acceptance suite: one line per criterion, exit status 1 if any fails.
//! Run with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use grpf::cli::run;
use grpf::geometry::{orthogonal_rectangle, window_sets, ModelParams, WindowSet};
use grpf::pfaffian::{build_skew_matrix, AMap};
use grpf::sections::{h1_tangent_y1, Mode};
use num_bigint::BigUint;
use serde_json::{json, Value};

type Outcome = Result<String, String>;

/// Number, name, time limit in seconds, check.
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn cli(args: &[&str]) -> Result<Value, String> {
    let argv = std::iter::once("grpf").chain(args.iter().copied()).chain(["--json"]);
    let out = run(argv);
    if out.code != 0 {
        return Err(format!("exit {} for {args:?}: {}", out.code, out.stderr.trim()));
    }
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

fn ensure(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn quintic() -> Outcome {
    let v = cli(&["hodge", "hypersurface", "--dim", "4", "--degree", "5"])?;
    let row = &v["result"]["middle_row"];
    ensure(*row == json!([1, 101, 101, 1]), format!("middle row {row}"))
}

fn elevenfold() -> Outcome {
    let v = cli(&["hodge", "grass-section", "--n", "10", "--k", "5"])?;
    let row = &v["result"]["middle_row"];
    // row lists h^{11,0}, h^{10,1}, ..., h^{0,11}
    let expected: Vec<u32> = (0..=11)
        .map(|i| match 11 - i {
            7 | 4 => 1,
            6 | 5 => 101,
            _ => 0,
        })
        .collect();
    ensure(*row == json!(expected), format!("middle row {row}"))
}

fn deformations() -> Outcome {
    let r = h1_tangent_y1(&ModelParams::new(10, 5).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let h1 = r.exact(1);
    ensure(
        r.mode == Mode::ExactGeneric && h1 == Some(BigUint::from(101u32)),
        format!("h^1(T) = {h1:?} in mode {:?}", r.mode),
    )
}

fn collection() -> Outcome {
    let mut details = Vec::new();
    for (n, pairs) in [(10, 45 * 45), (7, 21 * 21)] {
        let v = cli(&["collection", "verify", "--n", &n.to_string(), "--set", "S"])?;
        let r = &v["result"];
        let ok = r["passed"] == true && r["pairs_checked"] == pairs && r["failures"] == json!([]);
        details.push(format!("n = {n}: {} pairs", r["pairs_checked"]));
        if !ok {
            return Err(details.join("; "));
        }
    }
    Ok(details.join("; "))
}

fn lemma() -> Outcome {
    let mut details = Vec::new();
    for n in [8usize, 10, 12] {
        let start = Instant::now();
        let v = cli(&["lemma", "check", "--n", &n.to_string()])?;
        let elapsed = start.elapsed();
        let r = &v["result"];
        let size = n * n / 2 - n / 2;
        let ok = r["verdict"] == "VanishesForAllT" && r["pairs"] == size * size && elapsed < Duration::from_secs(120);
        details.push(format!("n = {n}: {} over {} pairs", r["verdict"], r["pairs"]));
        if !ok {
            return Err(details.join("; "));
        }
    }
    Ok(details.join("; "))
}

fn inclusion() -> Outcome {
    let mut cases = 0;
    for n in 3..=14usize {
        for k in 1..=n * (n - 1) / 2 {
            let p = ModelParams::new(n, k).map_err(|e| e.to_string())?;
            let w = window_sets(&p).map_err(|e| e.to_string())?;
            // the closed form, restated here
            let formula = if n % 2 == 0 { k <= n / 2 } else { k <= n };
            if w.inclusion != w.inclusion_formula || w.inclusion != formula {
                return Err(format!("disagreement at n = {n}, k = {k}"));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} pairs (n, k)"))
}

fn rectangle() -> Outcome {
    let r = orthogonal_rectangle(&ModelParams::new(10, 5).map_err(|e| e.to_string())?);
    let expected = WindowSet::from_labels((0..=3).flat_map(|l| (0..=4).map(move |m| (l, m))));
    ensure(r == expected && r.len() == 20, format!("{} labels", r.len()))
}

fn sampling() -> Outcome {
    let mut details = Vec::new();
    for (n, k) in [(10usize, 5usize), (7, 7), (8, 4)] {
        let start = Instant::now();
        let v = cli(&[
            "pfaffian",
            "sample",
            "--n",
            &n.to_string(),
            "--k",
            &k.to_string(),
            "--points",
            "100",
            "--seed",
            "42",
            "--prime",
            "10007",
        ])?;
        let elapsed = start.elapsed();
        let r = &v["result"];
        let points = r["points"].as_array().map_or(0, Vec::len);
        let kernel = if n % 2 == 0 { 2 } else { 3 };
        let smooth: Vec<&Value> = r["points"].as_array().unwrap().iter().filter(|p| p["smooth_at"] == true).collect();
        let kernels_ok = smooth.iter().all(|p| p["kernel_dim"] == kernel);
        let fraction = smooth.len() as f64 / points.max(1) as f64;
        details.push(format!(
            "({n}, {k}): {points} points, {:.0}% smooth, {:.1} s",
            100.0 * fraction,
            elapsed.as_secs_f64()
        ));
        if points < 100 || !kernels_ok || fraction < 0.95 || elapsed > Duration::from_secs(120) {
            return Err(details.join("; "));
        }
    }
    Ok(details.join("; "))
}

fn pfaffian_degree() -> Outcome {
    let a = AMap::universal(10).map_err(|e| e.to_string())?;
    let pf = build_skew_matrix(&a).and_then(|m| m.pfaffian_polynomial()).map_err(|e| e.to_string())?;
    ensure(
        pf.total_degree() == Some(5) && pf.is_homogeneous(),
        format!("degree {:?}, {} terms in 45 variables", pf.total_degree(), pf.num_terms()),
    )
}

fn properties() -> Outcome {
    let v = cli(&["verify-all", "--profile", "fast"])?;
    let checks = v["result"]["checks"].as_array().ok_or("no checks")?;
    let suites: Vec<&Value> =
        checks.iter().filter(|c| c["id"].as_str().is_some_and(|id| id.starts_with("10"))).collect();
    let failing: Vec<String> = suites.iter().filter(|c| c["status"] != "pass").map(|c| c["id"].to_string()).collect();
    ensure(
        suites.len() == 5 && failing.is_empty(),
        suites
            .iter()
            .map(|c| format!("{}: {}", c["name"].as_str().unwrap_or(""), c["detail"].as_str().unwrap_or("")))
            .collect::<Vec<_>>()
            .join("; ")
            .to_string(),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "quintic threefold Hodge numbers", 1, quintic),
        (2, "elevenfold middle cohomology", 60, elevenfold),
        (3, "deformations of the elevenfold", 60, deformations),
        (4, "strong exceptionality, n = 10 and 7", 300, collection),
        (5, "Ext vanishing for all t, n = 8, 10, 12", 360, lemma),
        (6, "window inclusion criterion", 5, inclusion),
        (7, "orthogonal rectangle", 1, rectangle),
        (8, "Pfaffian-side sampling", 360, sampling),
        (9, "degree of the 10 x 10 Pfaffian", 30, pfaffian_degree),
        (10, "property suites", 300, properties),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; took {:.1} s, limit {limit} s", elapsed.as_secs_f64())),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2} {status} [{:>7.2} s] {name}: {detail}", elapsed.as_secs_f64());
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
