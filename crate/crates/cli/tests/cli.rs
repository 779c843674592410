use std::process::{Command, Output};

fn coset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coset")).args(args).output().expect("run coset")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = coset(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn mindet_prints_one_fifth() {
    let out = ok(&["mindet", "--box", "1"]);
    assert!(out.starts_with("1/5\t"), "{out}");
    let out = ok(&["mindet", "--box", "1", "--float"]);
    assert!(out.starts_with("0.2\t"), "{out}");
}

#[test]
fn mindet_on_zero_coset() {
    let out = ok(&["mindet", "--box", "1", "--coset", "[[0,0],[0,0]]", "--ideal", "1pi"]);
    assert!(out.starts_with("4/5\t"), "{out}");
    let out = ok(&["mindet", "--box", "2", "--coset", "[[0,0],[0,0]]", "--ideal", "2", "--jobs", "0"]);
    assert!(out.starts_with("16/5\t"), "{out}");
    assert_eq!(ok(&["mindet", "--box", "1", "--coset", "[[0,0],[0,0]]", "--ideal", "2"]), "none\n");
}

#[test]
fn bounds_examples() {
    assert_eq!(ok(&["bounds", "--which", "hamming", "--n", "2", "--delta", "1/5", "--d", "2"]), "4/5\n");
    assert_eq!(ok(&["bounds", "--which", "bachoc", "--delta", "1/5", "--d", "2"]), "2/5\n");
    assert_eq!(ok(&["bounds", "--which", "multilevel-m4", "--d", "4,3,2,2", "--delta", "1/1125"]), "16/1125\n");
    assert_eq!(ok(&["bounds", "--which", "rho-m4"]), "7/16\n");
    assert_eq!(ok(&["bounds", "--which", "rho-parity-i", "--length", "4"]), "7/8\n");
    assert_eq!(ok(&["bounds", "--which", "rate-m4"]), "57/64\n");
    let plain = ok(&["bounds", "--which", "bachoc", "--d", "2", "--format", "plain"]);
    assert_eq!(plain, "bachoc(delta=1/5, d=2) = 2/5\n");
}

#[test]
fn bounds_usage_errors() {
    assert_eq!(coset(&["bounds", "--which", "hamming"]).status.code(), Some(2));
    assert_eq!(coset(&["bounds", "--which", "gv", "--d", "2"]).status.code(), Some(2));
    assert_eq!(coset(&["bounds", "--which", "bachoc", "--d", "2", "--delta", "x"]).status.code(), Some(2));
    assert_eq!(coset(&["bounds", "--which", "multilevel-m4", "--d", "4,3,0,2"]).status.code(), Some(2));
    assert_eq!(coset(&["bounds", "--which", "rate-m2f2i", "--length", "4", "--k", "0"]).status.code(), Some(2));
    assert_eq!(ok(&["bounds", "--which", "rate-m2f2i", "--length", "4", "--k", "2"]), "1/2\n");
}

#[test]
fn codes() {
    assert_eq!(ok(&["mindist", "--code", "hexacode", "--weight", "hamming"]), "4\t(0,0,1,w,w,1)\n");
    assert!(ok(&["mindist", "--code", "dualrep-phi", "--weight", "bachoc"]).starts_with("2\t"));
    assert!(ok(&["mindist", "--code", "dualrep-phi"]).starts_with("1\t"));
    assert_eq!(ok(&["encode", "--code", "dualrep", "--msg", "1,w,0"]), "(w+1,1,w,0)\n");
    assert_eq!(coset(&["mindist", "--code", "hexacode", "--weight", "bachoc"]).status.code(), Some(2));
    assert_eq!(coset(&["encode", "--code", "dualrep", "--msg", "1,w"]).status.code(), Some(2));
}

#[test]
fn code_file() {
    let dir = std::env::temp_dir().join(format!("coset-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rep3.txt");
    std::fs::write(&path, "# binary repetition\nf2 3 1\n1,1,1\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["mindist", "--code-file", p]), "3\t(1,1,1)\n");
    assert_eq!(ok(&["encode", "--code-file", p, "--msg", "1"]), "(1,1,1)\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn weights() {
    assert_eq!(
        ok(&["weights", "--alphabet", "m2f2", "--word", "[[1,1],[1,1]],[[1,0],[0,1]]", "--weight", "bachoc"]),
        "3\n"
    );
    assert_eq!(ok(&["weights", "--alphabet", "f4i", "--word", "1,1", "--weight", "lee"]), "4\n");
    assert_eq!(ok(&["weights", "--alphabet", "f4", "--word", "0,w,1"]), "2\n");
}

#[test]
fn enumerate_counts() {
    assert_eq!(ok(&["enumerate", "--ring", "f2", "--n", "2", "--invertible", "--count"]), "6\n");
    assert_eq!(ok(&["enumerate", "--ring", "f2i", "--n", "2", "--invertible", "--count"]), "96\n");
    let listed = ok(&["enumerate", "--ring", "f2i", "--n", "2", "--invertible"]);
    assert_eq!(listed.lines().count(), 96);
    assert_eq!(ok(&["enumerate", "--ring", "f2", "--n", "1"]), "[[0]]\n[[1]]\n");
    assert_eq!(coset(&["enumerate", "--ring", "f4i", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn iso_image_and_check() {
    assert_eq!(ok(&["iso", "--which", "m2f2_f4j", "--element", "1,0"]), "[[1,0],[0,1]]\n");
    assert_eq!(ok(&["iso", "--which", "f8m3", "--element", "1"]), "[[1,0,0],[0,1,0],[0,0,1]]\n");
    let check = ok(&["iso", "--check", "m2f2_f4j"]);
    assert_eq!(check.lines().count(), 4);
    assert!(check.lines().all(|l| l.split('\t').nth(1) == Some("pass")), "{check}");
    // advisory lines do not change the exit code
    let out = coset(&["iso", "--check", "f16m4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("iso.f16m4.w4+w2+1\tfail\t[advisory]"));
}

#[test]
fn verify_claims() {
    let out = ok(&["verify", "--claim", "counts", "--claim", "isometry"]);
    for line in out.lines() {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 3, "{line}");
        assert_eq!(fields[1], "pass", "{line}");
    }
    let failing = coset(&["verify", "--claim", "lee-floor"]);
    assert_eq!(failing.status.code(), Some(1));
    assert!(stdout(&failing).starts_with("weights.lee-floor\tfail\t"));
    assert_eq!(coset(&["verify", "--claim", "nope"]).status.code(), Some(2));
    assert_eq!(coset(&["verify"]).status.code(), Some(2));
}

#[test]
fn output_is_stable_across_jobs() {
    let a = ok(&["verify", "--claim", "det-floor-2", "--jobs", "1"]);
    let b = ok(&["verify", "--claim", "det-floor-2", "--jobs", "3"]);
    assert_eq!(a, b);
    let a = ok(&["mindet", "--box", "1", "--jobs", "4"]);
    let b = ok(&["mindet", "--box", "1"]);
    assert_eq!(a, b);
}

#[test]
fn unknown_flag_is_usage_error() {
    assert_eq!(coset(&["mindet", "--bogus"]).status.code(), Some(2));
    assert_eq!(coset(&["--help"]).status.code(), Some(0));
}
