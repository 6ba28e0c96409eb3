use std::process::Command;

fn torelli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_torelli")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = torelli(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn trees() {
    assert_eq!(ok(&["trees", "count", "--partition", "2,2"]), "9\n");
    assert_eq!(ok(&["trees", "count", "--partition", "3,3"]), "210\n");
    let text = ok(&["trees", "enumerate", "--partition", "2,4"]);
    assert_eq!(text.lines().count(), 153);
    assert!(text.contains("0[1c1,1c1,4c2]"));
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["trees", "enumerate", "--partition", "2,2", "--format", "json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 9);
    let short = ok(&["trees", "enumerate", "--partition", "2,2", "--max-edges", "2"]);
    assert_eq!(short.lines().count(), 3);
}

#[test]
fn excess() {
    let c = ok(&["excess", "cont", "--partition", "2,4", "--tree", "0[1c1,1c1,4c2]", "--chern-form"]);
    assert!(c.starts_with("-3*c5(N) + (4*z1 + 4*z2 + 6*z3)*c4(N)"));
    assert!(c.trim_end().ends_with("28*z3^5)"));
    assert_eq!(ok(&["excess", "cont", "--partition", "1,1", "--tree", "0"]), "1\n");
    let dir = std::env::temp_dir().join(format!("torelli-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p11.py");
    let msg = ok(&["excess", "pullback", "--partition", "1,1", "--emit", path.to_str().unwrap(), "--dialect", "v1"]);
    assert!(msg.starts_with("1 trees, 1 terms"));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), include_str!("golden/pullback_11.py"));
    let (code, _, err) = torelli(&["excess", "pullback", "--partition", "1,1", "--dialect", "v2"]);
    assert_eq!(code, 1);
    assert!(err.contains("unsupported dialect"));
}

#[test]
fn lambda() {
    assert_eq!(ok(&["lambda", "dims", "--g", "4"]), "1 1 1 2 1 1 1\n");
    let m = ok(&["lambda", "pairing", "--g", "3", "--k", "1"]);
    assert!(!m.contains("det 0\n"));
    assert_eq!(ok(&["lambda", "eval", "--g", "3", "--expr", "l1*l2"]), "1\n");
    assert_eq!(ok(&["lambda", "eval", "--g", "2", "--expr", "l1", "--ab"]), "1/5760\n");
}

#[test]
fn inv() {
    assert_eq!(ok(&["inv", "capelli", "--g", "2", "--s", "2"]), "ok \u{3ba}=5\n");
    assert_eq!(ok(&["inv", "integrate", "--g", "1", "--s", "2", "--monomial", "e12^2"]), "-2\n");
    assert_eq!(ok(&["inv", "integrate", "--g", "3", "--s", "1", "--monomial", "t1^3"]), "6\n");
    let a = ok(&["inv", "project-pr", "--g", "2", "--s", "2"]);
    assert_eq!(a, ok(&["inv", "project-pr", "--g", "2", "--s", "2", "--solve"]));
    assert_eq!(ok(&["inv", "pairing", "--g", "2", "--s", "1", "--k", "1"]), "2\ndet 2\n");
    let (code, _, err) = torelli(&["inv", "integrate", "--g", "1", "--s", "2", "--monomial", "t1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error: wrong degree"));
}

#[test]
fn stars() {
    let s = ok(&["stars", "enumerate", "--g", "4", "--r", "2"]);
    assert_eq!(s.lines().count(), 4);
    assert!(s.starts_with("[g0=2; (2,(1))] aut=1\n"));
    let j: serde_json::Value = serde_json::from_str(&ok(&["stars", "enumerate", "--g", "2", "--r", "1", "--format", "json"])).unwrap();
    assert_eq!(j, serde_json::json!([{"r": 1, "g0": 1, "legs": [{"g": 1, "mu": [1]}]}]));
    let f = ok(&["stars", "ifun", "--h", "2", "--mu", "1", "--r", "2"]);
    assert_eq!(f.lines().next().unwrap(), "z^3: 1");
    assert_eq!(ok(&["stars", "ifun", "--h", "1", "--mu", "1,1", "--r", "2"]), "z^0: 1/2\n");
    let a = ok(&["stars", "assemble", "--g", "5", "--r", "2"]);
    assert_eq!(a.lines().filter(|l| l.contains("exceptional=true")).count(), 3);
    let (code, _, err) = torelli(&["stars", "assemble", "--g", "6", "--r", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("no exceptional table"));
}

#[test]
fn checks_and_constants() {
    assert_eq!(ok(&["check", "vanishing", "--partition", "3,4"]), "vanishes (cod 12 > 2g\u{2212}3 = 11)\n");
    assert_eq!(ok(&["check", "vanishing", "--partition", "3,3"]), "nontrivial (cod 9 \u{2264} 2g\u{2212}3 = 9)\n");
    assert_eq!(ok(&["check", "eisenstein", "--g", "4", "--dmax", "30"]), "ok\n");
    assert_eq!(ok(&["check", "capelli", "--g", "3", "--s", "3"]), "ok \u{3ba}=42\n");
    assert_eq!(ok(&["const", "bernoulli", "12"]), "-691/2730\n");
    assert_eq!(ok(&["const", "gamma", "2"]), "1/5760\n");
    assert_eq!(ok(&["const", "taut-product", "6", "1", "5"]), "2730/691 * (l5)\n");
    assert!(ok(&["const", "jg", "6"]).contains("948096/691"));
    let (code, _, _) = torelli(&["const", "zeta", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn emit_delta() {
    assert_eq!(ok(&["emit", "delta", "--g", "2"]), include_str!("golden/delta_g2.py"));
    assert_eq!(ok(&["--threads", "1", "emit", "delta", "--g", "3"]), include_str!("golden/delta_g3.py"));
    assert_eq!(torelli(&["emit", "delta", "--g", "3", "--s", "2"]).0, 1);
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = torelli(&["trees", "count"]);
    assert_eq!(code, 2);
    assert!(err.contains("Usage"));
    assert_eq!(torelli(&["nope"]).0, 2);
    assert_eq!(torelli(&["--version"]).0, 0);
}

#[test]
fn thread_count_does_not_change_output() {
    let a = ok(&["--threads", "1", "excess", "pullback", "--partition", "2,3"]);
    let b = ok(&["--threads", "4", "excess", "pullback", "--partition", "2,3"]);
    assert_eq!(a, b);
}
