//! Task execution over a problem file and deterministic report rendering.
//!
//! When every declared parameter is fixed the tasks run once and report
//! `ok`/`fail`. Otherwise the free parameters are sampled from `-5..=5`
//! (rejecting assignments that zero a guard) and each task is summarised
//! over all samples as `family-pass(n)`, `family-fail`, `corpus-discrepancy`
//! (the verifier and its independent oracle agree that the data fail) or
//! `precondition-failed`.

use std::fmt::{self, Write as _};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{LeibnizAlgebra, ThreeLieAlgebra, Verdict};
use crate::dgla::{cochain_to_datum, datum_to_cochain, dgla_differential, gauge_transform, mc_defect, nr_bracket, GradedCochain};
use crate::error::{Error, Result};
use crate::expr::Assignment;
use crate::extension::{is_extension_isomorphism, theta_morphism_check, ExtensionDatum, ExtensionVerdict};
use crate::leibniz_ext::{build_l_r_varpi, fundamental_oracle_check, leibniz_extension_defects, w_bracket};
use crate::problem::{Instance, ProblemFile};
use crate::representation::Representation;
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 0x3117;
pub const DEFAULT_SAMPLES: usize = 20;
/// Parameter values are drawn from `-SAMPLE_RANGE..=SAMPLE_RANGE`.
pub const SAMPLE_RANGE: i64 = 5;
/// Gauge transforms tried per datum by `check-gauge`.
pub const GAUGE_TRIALS: usize = 3;
const MAX_SAMPLE_ATTEMPTS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Task {
    Check3Lie,
    CheckLeibniz,
    CheckRep,
    CheckExtension,
    CheckMc,
    CheckGauge,
    CheckFundamentalExt,
    RoundtripMcExtension,
}

impl Task {
    pub const ALL: [Task; 8] = [
        Task::Check3Lie,
        Task::CheckLeibniz,
        Task::CheckRep,
        Task::CheckExtension,
        Task::CheckMc,
        Task::CheckGauge,
        Task::CheckFundamentalExt,
        Task::RoundtripMcExtension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::Check3Lie => "check-3lie",
            Task::CheckLeibniz => "check-leibniz",
            Task::CheckRep => "check-rep",
            Task::CheckExtension => "check-extension",
            Task::CheckMc => "check-mc",
            Task::CheckGauge => "check-gauge",
            Task::CheckFundamentalExt => "check-fundamental-ext",
            Task::RoundtripMcExtension => "roundtrip-mc-extension",
        }
    }

    pub fn from_name(name: &str) -> Option<Task> {
        Task::ALL.into_iter().find(|t| t.name() == name)
    }

    pub fn parse_list(text: &str) -> Result<Vec<Task>> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Task::from_name(s).ok_or_else(|| Error::UnknownTask(s.to_string())))
            .collect()
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    FamilyPass(usize),
    FamilyFail,
    CorpusDiscrepancy,
    PreconditionFailed,
}

impl Status {
    pub fn passed(&self) -> bool {
        matches!(self, Status::Ok | Status::FamilyPass(_))
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Ok => f.write_str("ok"),
            Status::Fail => f.write_str("fail"),
            Status::FamilyPass(n) => write!(f, "family-pass({n})"),
            Status::FamilyFail => f.write_str("family-fail"),
            Status::CorpusDiscrepancy => f.write_str("corpus-discrepancy"),
            Status::PreconditionFailed => f.write_str("precondition-failed"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Machine,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub fixed: Assignment,
    /// Overrides the file's task list when set.
    pub tasks: Option<Vec<Task>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { seed: DEFAULT_SEED, samples: DEFAULT_SAMPLES, fixed: Assignment::new(), tasks: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportLine {
    pub task: Task,
    pub target: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub file: String,
    pub seed: u64,
    /// The fixed assignment (single-point mode) or every sampled one.
    pub points: Vec<Assignment>,
    pub family: bool,
    pub lines: Vec<ReportLine>,
}

fn fmt_assignment(a: &Assignment) -> String {
    a.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status.passed())
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Machine => self.machine(),
            ReportFormat::Text => self.text(),
        }
    }

    /// Line-oriented `TASK<TAB>STATUS<TAB>DETAIL`, preceded by `#` header lines.
    pub fn machine(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# tlx report").unwrap();
        writeln!(s, "# file\t{}", self.file).unwrap();
        writeln!(s, "# seed\t{:#x}", self.seed).unwrap();
        if self.family {
            writeln!(s, "# samples\t{}", self.points.len()).unwrap();
            for (i, p) in self.points.iter().enumerate() {
                writeln!(s, "# sample {}\t{}", i + 1, fmt_assignment(p)).unwrap();
            }
        } else {
            writeln!(s, "# params\t{}", self.points.first().map(fmt_assignment).unwrap_or_default()).unwrap();
        }
        for l in &self.lines {
            writeln!(s, "{}[{}]\t{}\t{}", l.task, l.target, l.status, l.detail).unwrap();
        }
        s
    }

    pub fn text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "tlx report for {} (seed {:#x})", self.file, self.seed).unwrap();
        if self.family {
            writeln!(s, "parameters sampled at {} rational points:", self.points.len()).unwrap();
            for (i, p) in self.points.iter().enumerate() {
                writeln!(s, "  sample {:>2}: {}", i + 1, fmt_assignment(p).replace(',', ", ")).unwrap();
            }
        } else if let Some(p) = self.points.first().filter(|p| !p.is_empty()) {
            writeln!(s, "parameters: {}", fmt_assignment(p).replace(',', ", ")).unwrap();
        }
        for l in &self.lines {
            writeln!(s, "{} {}: {}", l.task, l.target, l.status).unwrap();
            for part in l.detail.split("; ") {
                writeln!(s, "    {part}").unwrap();
            }
        }
        let failed = self.lines.iter().filter(|l| !l.status.passed()).count();
        writeln!(s, "{} of {} checks passed", self.lines.len() - failed, self.lines.len()).unwrap();
        s
    }
}

/// Result of one task on one object at one parameter point.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Outcome {
    Pass(String),
    Fail(String),
    /// The check and its independent oracle agree that the data fail.
    JointFail(String),
    Precondition(String),
}

fn verdict_word(v: &Verdict) -> &'static str {
    if v.passed() {
        "ok"
    } else {
        "fail"
    }
}

fn first_witness<'a>(labelled: impl IntoIterator<Item = (String, &'a Verdict)>) -> Option<String> {
    labelled.into_iter().find_map(|(l, v)| v.witness().map(|w| format!("witness {l} {w}")))
}

fn extension_summary(v: &ExtensionVerdict) -> String {
    v.labelled().into_iter().map(|(l, x)| format!("{l}={}", verdict_word(x))).collect::<Vec<_>>().join(" ")
}

fn oracle_paired(check: bool, oracle: bool, summary: String, witness: Option<String>) -> Outcome {
    let detail = match witness {
        Some(w) => format!("{summary}; {w}"),
        None => summary,
    };
    match (check, oracle) {
        (true, true) => Outcome::Pass(detail),
        (false, false) => Outcome::JointFail(detail),
        _ => Outcome::Fail(format!("check and oracle disagree; {detail}")),
    }
}

fn check_3lie(a: &ThreeLieAlgebra) -> Outcome {
    let n = a.dim();
    match a.is_three_lie() {
        Verdict::Pass => Outcome::Pass(format!("fundamental identity exact on all basis tuples (dim {n})")),
        Verdict::Fail(w) => Outcome::Fail(format!("fundamental identity fails; witness {w}")),
    }
}

fn check_leibniz(a: &LeibnizAlgebra) -> Outcome {
    match a.is_leibniz() {
        Verdict::Pass => Outcome::Pass(format!("left Leibniz identity exact on all basis triples (dim {})", a.dim())),
        Verdict::Fail(w) => Outcome::Fail(format!("left Leibniz identity fails; witness {w}")),
    }
}

fn check_rep(r: &Representation) -> Outcome {
    let v = r.rep_defects();
    let oracle = r.semidirect_product().is_three_lie();
    let summary = format!(
        "first={} second={} oracle(semidirect FI)={}",
        verdict_word(&v.first),
        verdict_word(&v.second),
        verdict_word(&oracle)
    );
    let w = first_witness([("first".to_string(), &v.first), ("second".to_string(), &v.second), ("oracle".to_string(), &oracle)]);
    oracle_paired(v.passed(), oracle.passed(), summary, w)
}

fn check_extension(d: &ExtensionDatum) -> Outcome {
    let v = d.extension_defects();
    let oracle = d.extension_bracket().is_three_lie();
    let summary = format!("{} oracle={}", extension_summary(&v), verdict_word(&oracle));
    let mut labelled = v.labelled();
    labelled.push(("oracle".to_string(), &oracle));
    oracle_paired(v.passed(), oracle.passed(), summary, first_witness(labelled))
}

fn guarded(f: impl FnOnce() -> Result<Outcome>) -> Outcome {
    f().unwrap_or_else(|e| match e {
        Error::Precondition(m) => Outcome::Precondition(m),
        other => Outcome::Fail(format!("error: {other}")),
    })
}

fn check_mc(d: &ExtensionDatum) -> Outcome {
    guarded(|| {
        let c = datum_to_cochain(d);
        let m = mc_defect(&c)?;
        let v = d.extension_defects();
        let summary = format!(
            "mc-defect={} extension={}",
            if m.is_zero() { "zero" } else { "nonzero" },
            if v.passed() { "ok".to_string() } else { format!("fails {}", v.failing().join(",")) }
        );
        Ok(oracle_paired(m.is_zero(), v.passed(), summary, None))
    })
}

fn require_certified(d: &ExtensionDatum) -> Result<()> {
    let v = d.extension_defects();
    if v.passed() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("datum is not an extension (fails {})", v.failing().join(","))))
    }
}

fn ad3(xi: &GradedCochain, c: &GradedCochain) -> Result<bool> {
    Ok(nr_bracket(xi, &nr_bracket(xi, &nr_bracket(xi, c)?)?)?.is_zero())
}

fn check_gauge(d: &ExtensionDatum, rng: &mut ChaCha8Rng) -> Outcome {
    guarded(|| {
        require_certified(d)?;
        let c = datum_to_cochain(d);
        for t in 0..GAUGE_TRIALS {
            let xi = GradedCochain::random_restricted(c.ambient().clone(), 0, -2, 2, rng);
            let c2 = gauge_transform(&xi, &c)?;
            let map = xi.to_map()?;
            let d2 = cochain_to_datum(&c2)?;
            let mc = mc_defect(&c2)?.is_zero();
            let iso = is_extension_isomorphism(&map, d, &d2)?;
            let theta = theta_morphism_check(&map, d, &d2)?;
            let nil = ad3(&xi, &c)? && ad3(&xi, &dgla_differential(&xi)?)?;
            if !(mc && iso.passed() && theta.passed() && nil) {
                return Ok(Outcome::Fail(format!(
                    "trial {}: mc={} {iso} theta={} nilpotent={}",
                    t + 1,
                    if mc { "ok" } else { "fail" },
                    verdict_word(&theta),
                    if nil { "ok" } else { "fail" }
                )));
            }
        }
        Ok(Outcome::Pass(format!("{GAUGE_TRIALS} gauge transforms: mc=ok iso1-3=ok theta=ok nilpotent=ok")))
    })
}

fn check_fundamental_ext(d: &ExtensionDatum) -> Outcome {
    guarded(|| {
        let oracle = fundamental_oracle_check(d)?;
        let w = w_bracket(d)?.is_leibniz();
        let v = leibniz_extension_defects(&build_l_r_varpi(d)?);
        let summary = format!(
            "oracle(table-exact)={} W-leibniz={} {}",
            verdict_word(&oracle),
            verdict_word(&w),
            v.labelled().into_iter().map(|(l, x)| format!("{l}={}", verdict_word(x))).collect::<Vec<_>>().join(" ")
        );
        let mut all = vec![("oracle".to_string(), &oracle), ("W".to_string(), &w)];
        all.extend(v.labelled());
        let witness = first_witness(all);
        Ok(match witness {
            None => Outcome::Pass(summary),
            Some(w) => Outcome::Fail(format!("{summary}; {w}")),
        })
    })
}

fn roundtrip(d: &ExtensionDatum) -> Outcome {
    guarded(|| {
        let c = datum_to_cochain(d);
        let back = cochain_to_datum(&c)?;
        let same = &back == d;
        let mc = mc_defect(&c)?.is_zero();
        let ext = d.extension_defects().passed();
        let detail = format!(
            "datum->cochain->datum {}; mc-defect {} iff extension {}",
            if same { "identical" } else { "differs" },
            if mc { "zero" } else { "nonzero" },
            if ext { "ok" } else { "fails" }
        );
        Ok(if same && mc == ext { Outcome::Pass(detail) } else { Outcome::Fail(detail) })
    })
}

fn gauge_rng(seed: u64, point: usize, target: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((point as u64) << 16) | (target as u64 + 1));
    rng
}

/// All `(task, target, outcome)` at one instance, in report order.
fn run_point(inst: &Instance, tasks: &[Task], seed: u64, point: usize) -> Vec<(Task, String, Outcome)> {
    let mut out = Vec::new();
    for &task in tasks {
        match task {
            Task::Check3Lie => {
                for (name, a) in &inst.ternary {
                    out.push((task, name.clone(), check_3lie(a)));
                }
            }
            Task::CheckLeibniz => {
                for (name, a) in &inst.binary {
                    out.push((task, name.clone(), check_leibniz(a)));
                }
                for (name, a) in &inst.ternary {
                    out.push((task, format!("fundamental({name})"), check_leibniz(&a.fundamental_leibniz())));
                }
            }
            Task::CheckRep => {
                for (name, r) in &inst.representations {
                    out.push((task, name.clone(), check_rep(r)));
                }
            }
            _ => {
                for (k, (name, d)) in inst.extensions.iter().enumerate() {
                    let o = match task {
                        Task::CheckExtension => check_extension(d),
                        Task::CheckMc => check_mc(d),
                        Task::CheckGauge => check_gauge(d, &mut gauge_rng(seed, point, k)),
                        Task::CheckFundamentalExt => check_fundamental_ext(d),
                        _ => roundtrip(d),
                    };
                    out.push((task, name.clone(), o));
                }
            }
        }
    }
    out
}

/// Draws `n` assignments of the free parameters (values in `-5..=5`)
/// at which every guard is nonzero and every entry evaluates.
pub fn sample_points(problem: &ProblemFile, cfg: &RunConfig) -> Result<Vec<Assignment>> {
    let free = problem.free_params(&cfg.fixed);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.samples);
    let mut last_err = None;
    let mut attempts = 0;
    while out.len() < cfg.samples {
        attempts += 1;
        if attempts > MAX_SAMPLE_ATTEMPTS {
            return Err(last_err.unwrap_or_else(|| Error::Precondition("no admissible parameter sample".into())));
        }
        let mut a = cfg.fixed.clone();
        for p in &free {
            a.insert(p.clone(), Scalar::from_int(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)));
        }
        match problem.instantiate(&a) {
            Ok(_) => out.push(a),
            Err(e @ (Error::Constraint { .. } | Error::DivisionByZero)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

fn summarize(outcomes: &[Outcome], family: bool) -> (Status, String) {
    if !family {
        return match &outcomes[0] {
            Outcome::Pass(d) => (Status::Ok, d.clone()),
            Outcome::Fail(d) | Outcome::JointFail(d) => (Status::Fail, d.clone()),
            Outcome::Precondition(d) => (Status::PreconditionFailed, d.clone()),
        };
    }
    let n = outcomes.len();
    let at = |pred: &dyn Fn(&Outcome) -> bool| -> Vec<usize> {
        outcomes.iter().enumerate().filter(|(_, o)| pred(o)).map(|(i, _)| i + 1).collect()
    };
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let fails = at(&|o| matches!(o, Outcome::Fail(_)));
    let joint = at(&|o| matches!(o, Outcome::JointFail(_)));
    let pre = at(&|o| matches!(o, Outcome::Precondition(_)));
    let detail_of = |i: usize| match &outcomes[i - 1] {
        Outcome::Pass(d) | Outcome::Fail(d) | Outcome::JointFail(d) | Outcome::Precondition(d) => d.clone(),
    };
    if let Some(&first) = fails.first() {
        (Status::FamilyFail, format!("fails at samples {}; sample {first}: {}", list(&fails), detail_of(first)))
    } else if let Some(&first) = joint.first() {
        (
            Status::CorpusDiscrepancy,
            format!(
                "check and oracle agree the data fail at samples {}; sample {first}: {}",
                list(&joint),
                detail_of(first)
            ),
        )
    } else if let Some(&first) = pre.first() {
        (Status::PreconditionFailed, format!("at samples {}; sample {first}: {}", list(&pre), detail_of(first)))
    } else {
        (Status::FamilyPass(n), format!("verified at {n} rational points; {}", detail_of(1)))
    }
}

/// Runs the problem's tasks (or `cfg.tasks`) and assembles the report.
/// Input errors (bad assignment, violated guards, no admissible samples)
/// are returned as `Err`; verification failures are part of the report.
pub fn run(problem: &ProblemFile, file: &str, cfg: &RunConfig) -> Result<Report> {
    let tasks: Vec<Task> = match &cfg.tasks {
        Some(t) => t.clone(),
        None if problem.tasks.is_empty() => Task::ALL.to_vec(),
        None => problem.tasks.iter().map(|t| Task::from_name(t).ok_or_else(|| Error::UnknownTask(t.clone()))).collect::<Result<_>>()?,
    };
    let family = !problem.free_params(&cfg.fixed).is_empty();
    let points = if family {
        if cfg.samples == 0 {
            return Err(Error::Precondition("at least one sample is required".into()));
        }
        sample_points(problem, cfg)?
    } else {
        vec![cfg.fixed.clone()]
    };
    let mut per_point = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        per_point.push(run_point(&problem.instantiate(p)?, &tasks, cfg.seed, i));
    }
    let mut lines = Vec::new();
    for (k, (task, target, _)) in per_point[0].iter().enumerate() {
        let outcomes: Vec<Outcome> = per_point.iter().map(|pt| pt[k].2.clone()).collect();
        let (status, detail) = summarize(&outcomes, family);
        lines.push(ReportLine { task: *task, target: target.clone(), status, detail });
    }
    for &task in &tasks {
        if !lines.iter().any(|l| l.task == task) {
            lines.push(ReportLine {
                task,
                target: "-".into(),
                status: Status::Ok,
                detail: "vacuous: no objects of the required kind are declared".into(),
            });
        }
    }
    lines.sort_by_key(|l| tasks.iter().position(|t| *t == l.task));
    Ok(Report { file: file.to_string(), seed: cfg.seed, points, family, lines })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FAMILY: &str = "\
tlx 1
params r1 r2 r3
algebra g ternary
  basis x1 x2 x3
  [x1,x2,x3] = x1
end
algebra h ternary
  basis v1 v2 v3
  [v1,v2,v3] = v1
end
extension E of g by h
  nu[x1](v2,v3) = {v1: r1}
  nu[x2](v2,v3) = {v1: r2}
  nu[x3](v2,v3) = {v1: r3}
  omega[x1,x2,x3] = {v1: -r1}
end
";

    fn fixed(pairs: &[(&str, i64)]) -> Assignment {
        pairs.iter().map(|(n, v)| (n.to_string(), Scalar::from_int(*v))).collect()
    }

    #[test]
    fn task_names_round_trip() {
        for t in Task::ALL {
            assert_eq!(Task::from_name(t.name()), Some(t));
        }
        assert_eq!(Task::parse_list("check-mc, check-3lie").unwrap(), [Task::CheckMc, Task::Check3Lie]);
        assert_eq!(Task::parse_list("nope").unwrap_err(), Error::UnknownTask("nope".into()));
    }

    #[test]
    fn family_passes_every_task() {
        let pf = ProblemFile::parse(FAMILY).unwrap();
        let cfg = RunConfig { samples: 4, ..RunConfig::default() };
        let r = run(&pf, "family.tlx", &cfg).unwrap();
        assert!(r.passed(), "{}", r.text());
        assert!(r.lines.iter().all(|l| l.status == Status::FamilyPass(4) || l.task == Task::CheckRep));
        assert_eq!(r.points.len(), 4);
        assert_eq!(r.machine(), run(&pf, "family.tlx", &cfg).unwrap().machine());
    }

    #[test]
    fn dropping_omega_is_reported_with_a_witness() {
        let pf = ProblemFile::parse(&FAMILY.replace("  omega[x1,x2,x3] = {v1: -r1}\n", "")).unwrap();
        let cfg = RunConfig {
            fixed: fixed(&[("r1", 1), ("r2", 2), ("r3", 3)]),
            tasks: Some(vec![Task::CheckExtension, Task::CheckMc, Task::CheckGauge]),
            ..RunConfig::default()
        };
        let r = run(&pf, "f.tlx", &cfg).unwrap();
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.lines[0].status, Status::Fail);
        assert!(r.lines[0].detail.contains("witness p"), "{}", r.lines[0].detail);
        assert_eq!(r.lines[1].status, Status::Fail);
        assert!(r.lines[1].detail.contains("mc-defect=nonzero"));
        assert_eq!(r.lines[2].status, Status::PreconditionFailed);
        let sampled = run(&pf, "f.tlx", &RunConfig { samples: 3, fixed: Assignment::new(), ..cfg }).unwrap();
        assert_eq!(sampled.lines[0].status, Status::CorpusDiscrepancy);
    }

    #[test]
    fn vacuous_tasks_and_bad_assignments() {
        let pf = ProblemFile::parse("tlx 1\nalgebra z ternary\n basis\nend\n").unwrap();
        let r = run(&pf, "z.tlx", &RunConfig::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.lines.len(), 8);
        let pf = ProblemFile::parse(FAMILY).unwrap();
        let cfg = RunConfig { fixed: fixed(&[("r9", 1)]), ..RunConfig::default() };
        assert_eq!(run(&pf, "f.tlx", &cfg).unwrap_err(), Error::Undeclared("r9".into()));
    }
}
