use std::process::{Command, Output};

fn tlx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tlx")).args(args).output().expect("run tlx")
}

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const ONES: &str = "r1=1,r2=1,r3=1,r4=1,r5=1,r6=1";

#[test]
fn example1_extension_report_lists_every_equation() {
    let o = tlx(&["corpus:example1.tlx", "--param", ONES, "--task", "check-extension", "--report", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("check-extension[E]")).unwrap();
    let fields: Vec<&str> = line.split('\t').collect();
    assert_eq!(fields[1], "ok");
    for k in 1..=11 {
        assert!(fields[2].split(' ').any(|w| w == format!("p{k}=ok")), "p{k} missing in {line}");
    }
}

#[test]
fn dropping_omega_names_the_equation_and_a_witness() {
    let file = fixture("family9_without_omega.tlx");
    let o = tlx(&[&file, "--param", "r1=1,r2=2,r3=3", "--task", "check-extension,check-mc", "--report", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let ext = out.lines().find(|l| l.starts_with("check-extension[E]")).unwrap();
    assert!(ext.contains("\tfail\t") && ext.contains("p4=fail") && ext.contains("witness p4 ("), "{ext}");
    let mc = out.lines().find(|l| l.starts_with("check-mc[E]")).unwrap();
    assert!(mc.contains("\tfail\t") && mc.contains("mc-defect=nonzero") && mc.contains("fails p4,p6"), "{mc}");
}

#[test]
fn mc_and_extension_verdicts_agree_on_the_corpus() {
    for name in ["example1.tlx", "example2_family2.tlx", "example2_family9.tlx"] {
        let o = tlx(&[&format!("corpus:{name}"), "--task", "check-extension,check-mc", "--samples", "4", "--report", "machine"]);
        let out = stdout(&o);
        let status = |prefix: &str| out.lines().find(|l| l.starts_with(prefix)).unwrap().split('\t').nth(1).unwrap().to_string();
        assert_eq!(status("check-extension[E]"), status("check-mc[E]"), "{name}");
    }
}

#[test]
fn family_report_prints_samples_and_seed() {
    let o = tlx(&["corpus:example2_family9.tlx", "--task", "check-extension", "--samples", "3", "--seed", "42", "--report", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("# seed\t0x2a\n"));
    assert!(out.contains("# samples\t3\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("# sample ")).count(), 3);
    assert!(out.contains("family-pass(3)\tverified at 3 rational points"));
    let text = stdout(&tlx(&["corpus:example2_family9.tlx", "--task", "check-extension", "--samples", "3"]));
    assert!(text.contains("check-extension E: family-pass(3)"));
}

#[test]
fn input_errors_exit_with_two() {
    let guard = tlx(&["corpus:example1.tlx", "--param", "r2=0"]);
    assert_eq!(guard.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&guard.stderr).contains("guard `r2`"));
    assert_eq!(tlx(&["corpus:example1.tlx", "--task", "check-all"]).status.code(), Some(2));
    assert_eq!(tlx(&["corpus:example1.tlx", "--param", "q=1"]).status.code(), Some(2));
    assert_eq!(tlx(&["corpus:nothing.tlx"]).status.code(), Some(2));
    assert_eq!(tlx(&[&fixture("missing.tlx")]).status.code(), Some(2));
}

#[test]
fn empty_algebra_passes_vacuously() {
    let o = tlx(&[&fixture("empty.tlx"), "--report", "machine"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn lists_the_corpus() {
    let out = stdout(&tlx(&["--list-corpus"]));
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().any(|l| l == "direct_sum.tlx"));
}
