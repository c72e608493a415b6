//! WebAssembly bindings for a static demo page: check a bundled family at
//! chosen parameters, check the Fundamental Identity of an entered bracket,
//! and apply a gauge transform to a bundled extension.
//!
//! Each operation returns a JSON string; failures are reported as
//! `{"error": "..."}` so the page never has to catch exceptions.

use serde::Serialize;
use serde_json::json;
use trilie::random::gauge_datum;
use trilie::{
    corpus, datum_to_cochain, is_extension_isomorphism, mc_defect, parse_assignment, ExtensionDatum, LinearMap,
    ProblemFile, RunConfig, Scalar, Task,
};
use wasm_bindgen::prelude::wasm_bindgen;

#[derive(Serialize)]
struct Line {
    task: String,
    target: String,
    status: String,
    passed: bool,
    detail: String,
}

fn to_json(r: Result<serde_json::Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn err(e: trilie::Error) -> String {
    e.to_string()
}

/// Names of the bundled problem files.
#[wasm_bindgen]
pub fn corpus_names() -> String {
    serde_json::to_string(&corpus::CORPUS.iter().map(|(n, _)| *n).collect::<Vec<_>>()).expect("strings serialize")
}

/// Source text of a bundled file (for display next to the results).
#[wasm_bindgen]
pub fn corpus_source(name: &str) -> String {
    to_json(corpus::source(name).map(|s| json!({ "source": s })).map_err(err))
}

/// Runs `tasks` (comma-separated; empty for the extension checks) on a
/// bundled file. Parameters missing from `params` are sampled `samples` times.
#[wasm_bindgen]
pub fn check_family(name: &str, params: &str, tasks: &str, samples: usize, seed: u32) -> String {
    to_json(check_family_impl(name, params, tasks, samples, seed))
}

fn check_family_impl(name: &str, params: &str, tasks: &str, samples: usize, seed: u32) -> Result<serde_json::Value, String> {
    let problem = corpus::load(name).map_err(err)?;
    let tasks = if tasks.trim().is_empty() {
        vec![Task::CheckExtension, Task::CheckMc, Task::CheckFundamentalExt]
    } else {
        Task::parse_list(tasks).map_err(err)?
    };
    let cfg = RunConfig { seed: u64::from(seed), samples, fixed: parse_assignment(params).map_err(err)?, tasks: Some(tasks) };
    let report = trilie::run(&problem, name, &cfg).map_err(err)?;
    let lines: Vec<Line> = report
        .lines
        .iter()
        .map(|l| Line {
            task: l.task.to_string(),
            target: l.target.clone(),
            status: l.status.to_string(),
            passed: l.status.passed(),
            detail: l.detail.clone(),
        })
        .collect();
    let points: Vec<String> =
        report.points.iter().map(|p| p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", ")).collect();
    Ok(json!({ "passed": report.passed(), "family": report.family, "points": points, "lines": lines }))
}

/// Checks the Fundamental Identity of a ternary bracket given as the body of
/// an `algebra` block (`basis ...` followed by `[a,b,c] = ...` lines), and
/// the Leibniz identity of its algebra of fundamental objects.
#[wasm_bindgen]
pub fn check_algebra(body: &str) -> String {
    to_json(check_algebra_impl(body))
}

fn check_algebra_impl(body: &str) -> Result<serde_json::Value, String> {
    let text = format!("tlx 1\nalgebra user ternary\n{body}\nend\n");
    let inst = ProblemFile::parse(&text).map_err(|e| match e {
        // line numbers refer to `body`, which starts on line 3 of the wrapper
        trilie::Error::Syntax { line, msg } => format!("line {}: {msg}", line.saturating_sub(2)),
        other => other.to_string(),
    })?;
    let inst = inst.instantiate(&trilie::Assignment::new()).map_err(err)?;
    let alg = &inst.ternary[0].1;
    let fi = alg.is_three_lie();
    let leibniz = alg.fundamental_leibniz().is_leibniz();
    Ok(json!({
        "dim": alg.dim(),
        "three_lie": fi.passed(),
        "fi": fi.to_string(),
        "leibniz": leibniz.passed(),
        "fundamental": leibniz.to_string(),
    }))
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn combo(v: &[Scalar], names: &[String]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(names)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, n)| if c.is_one() { n.clone() } else { format!("({c}){n}") })
        .collect();
    terms.join(" + ")
}

/// Nonzero entries of `ρ`, `ν`, `ω` on canonical arguments, as display strings.
fn entries(d: &ExtensionDatum) -> Vec<String> {
    let (g, h) = (d.g(), d.h());
    let (n, m) = (g.dim(), h.dim());
    let (gn, hn) = (g.basis_names(), h.basis_names());
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..m {
                let v = d.rho_apply(&unit(n, i), &unit(n, j), &unit(m, k));
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(format!("rho({},{})({}) = {}", gn[i], gn[j], hn[k], combo(&v, hn)));
                }
            }
        }
    }
    for (i, gi) in gn.iter().enumerate() {
        for a in 0..m {
            for b in a + 1..m {
                let v = d.nu_apply(&unit(n, i), &unit(m, a), &unit(m, b));
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(format!("nu({})({},{}) = {}", gi, hn[a], hn[b], combo(&v, hn)));
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = d.omega_apply(&unit(n, i), &unit(n, j), &unit(n, k));
                if v.iter().any(|c| !c.is_zero()) {
                    out.push(format!("omega({},{},{}) = {}", gn[i], gn[j], gn[k], combo(&v, hn)));
                }
            }
        }
    }
    out
}

/// Applies the gauge action of `ξ: g → h` to a bundled extension at fixed
/// parameters. `xi` lists the images of the `g` basis vectors, one per line,
/// as whitespace-separated rationals (e.g. `1 0 -1/2`).
#[wasm_bindgen]
pub fn gauge(name: &str, params: &str, xi: &str) -> String {
    to_json(gauge_impl(name, params, xi))
}

fn gauge_impl(name: &str, params: &str, xi: &str) -> Result<serde_json::Value, String> {
    let problem = corpus::load(name).map_err(err)?;
    let inst = problem.instantiate(&parse_assignment(params).map_err(err)?).map_err(err)?;
    let d = &inst.extensions.first().ok_or("the file declares no extension")?.1;
    let (n, m) = (d.g().dim(), d.h().dim());
    let rows: Vec<&str> = xi.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if rows.len() != n {
        return Err(format!("expected {n} rows (one per basis vector of g), found {}", rows.len()));
    }
    let mut cols = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let col: Vec<Scalar> = row.split_whitespace().map(|t| t.parse::<Scalar>().map_err(err)).collect::<Result<_, _>>()?;
        if col.len() != m {
            return Err(format!("row {} has {} entries, expected {m}", i + 1, col.len()));
        }
        cols.push(col);
    }
    let map = LinearMap::from_columns(d.g().space().clone(), d.h().space().clone(), m, cols).map_err(err)?;
    let certified = d.extension_defects();
    if !certified.passed() {
        return Err(format!("the datum is not an extension at these parameters (fails {})", certified.failing().join(",")));
    }
    let d2 = gauge_datum(&map, d).map_err(err)?;
    let iso = is_extension_isomorphism(&map, d, &d2).map_err(err)?;
    let mc = mc_defect(&datum_to_cochain(&d2)).map_err(err)?.is_zero();
    Ok(json!({
        "before": entries(d),
        "after": entries(&d2),
        "maurer_cartan": mc,
        "extension": d2.extension_defects().passed(),
        "isomorphism": iso.passed(),
        "iso": iso.to_string(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn lists_corpus() {
        let v = parse(&corpus_names());
        assert_eq!(v.as_array().unwrap().len(), 12);
        assert!(parse(&corpus_source("example1.tlx"))["source"].as_str().unwrap().starts_with("tlx 1"));
    }

    #[test]
    fn family_at_fixed_parameters() {
        let v = parse(&check_family("example2_family9.tlx", "r1=1,r2=-2,r3=1/3", "", 5, 7));
        assert_eq!(v["passed"], true, "{v}");
        assert_eq!(v["family"], false);
        assert_eq!(v["lines"].as_array().unwrap().len(), 3);
        let v = parse(&check_family("example2_family2.tlx", "", "check-extension", 3, 7));
        assert_eq!(v["lines"][0]["status"], "corpus-discrepancy");
        assert_eq!(v["points"].as_array().unwrap().len(), 3);
        assert!(parse(&check_family("example1.tlx", "r2=0", "", 1, 0))["error"].as_str().unwrap().contains("r2"));
    }

    #[test]
    fn algebra_checks() {
        let simple = "basis x1 x2 x3 x4\n[x1,x2,x3] = x4\n[x1,x2,x4] = x3\n[x1,x3,x4] = x2\n[x2,x3,x4] = x1";
        let v = parse(&check_algebra(simple));
        assert_eq!(v["three_lie"], true);
        assert_eq!(v["leibniz"], true);
        let altered = simple.replace("[x2,x3,x4] = x1", "[x2,x3,x4] = {x1: 2, x2: 1}");
        let v = parse(&check_algebra(&altered));
        assert_eq!(v["three_lie"], false);
        assert!(v["fi"].as_str().unwrap().starts_with("fail ("));
        let v = parse(&check_algebra("basis a b\n[a,b] = a"));
        assert!(v["error"].as_str().unwrap().starts_with("line 2"), "{v}");
    }

    #[test]
    fn gauge_transform_is_isomorphism() {
        let v = parse(&gauge("example2_family9.tlx", "r1=1,r2=2,r3=3", "1 0 0\n0 1/2 0\n0 0 -1"));
        assert_eq!(v["maurer_cartan"], true, "{v}");
        assert_eq!(v["isomorphism"], true);
        assert_eq!(v["extension"], true);
        assert_ne!(v["before"], v["after"]);
        assert!(parse(&gauge("example2_family9.tlx", "r1=1,r2=2,r3=3", "1 0"))["error"].is_string());
        assert!(parse(&gauge("example2_family2.tlx", "r1=1,r2=1,r3=1,r4=1,r5=1", "0 0 0\n0 0 0\n0 0 0"))["error"]
            .as_str()
            .unwrap()
            .contains("not an extension"));
    }
}
