use std::path::Path;
use std::process::{Command, Output};

fn pseudocone(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pseudocone"))
        .args(args)
        .current_dir(dir)
        .env_remove("PSEUDOCONE_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_then_certify_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = pseudocone(&["construct", "circulant", "1101000", "-o", "ex1.alist"], dir.path());
    assert!(o.status.success());
    let alist = std::fs::read_to_string(dir.path().join("ex1.alist")).unwrap();
    assert!(alist.starts_with("7 7\n3 3\n"));

    let o = pseudocone(&["certify", "ex1.alist"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["d_P"], "4/1");
    assert_eq!(v["B_P"], 7);
    assert_eq!(v["verdict"], "asymptotically-optimal");
    assert_eq!(v["rays"].as_array().unwrap().len(), 14);

    let again = pseudocone(&["certify", "ex1.alist"], dir.path());
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn caps_give_exit_code_two_with_partial_report() {
    let dir = tempfile::tempdir().unwrap();
    assert!(pseudocone(&["construct", "eg", "3", "2", "-o", "eg.alist"], dir.path()).status.success());
    let o = pseudocone(&["analyze", "eg.alist", "--rays", "--witness", "1,24,34,37,38"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["d"], 5);
    assert_eq!(v["d_source"], "bound-plus-witness");
    assert_eq!(v["kv_bound"], 5);
    assert_eq!(v["girth"], 4);
    assert!(v["d_P"].as_str().unwrap().contains("ray_n"));

    let o = pseudocone(&["analyze", "eg.alist"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn cap_flags_override_defaults() {
    let dir = tempfile::tempdir().unwrap();
    assert!(pseudocone(&["construct", "hamming-simplex", "3", "-o", "h.alist"], dir.path()).status.success());
    let o = pseudocone(&["rays", "h.alist", "--cap-ray-n", "5"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = pseudocone(&["rays", "h.alist", "--format", "text"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("d_P                      3/1"));
}

#[test]
fn simulate_writes_reproducible_csv() {
    let dir = tempfile::tempdir().unwrap();
    assert!(pseudocone(&["construct", "cyclic", "7", "0,1,3", "-o", "c.alist"], dir.path()).status.success());
    let args = ["simulate", "c.alist", "--snr", "1,2", "--trials", "300", "--seed", "11", "--threads", "1"];
    let a = pseudocone(&args, dir.path());
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("snr_db,trials,errors_lp,errors_ml,wer_lp,wer_ml,ratio"));
    assert_eq!(lines.filter(|l| l.starts_with(|c: char| c.is_ascii_digit())).count(), 2);
    let b = pseudocone(&args, dir.path());
    assert_eq!(a.stdout, b.stdout);

    let o = pseudocone(&["simulate", "c.alist", "--snr", "1", "--trials", "10", "-o", "out.csv"], dir.path());
    assert!(o.status.success());
    assert!(std::fs::read_to_string(dir.path().join("out.csv")).unwrap().starts_with("snr_db,"));
}

#[test]
fn bad_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.alist"), "7 7\n3 3\n3 3 3\n").unwrap();
    let o = pseudocone(&["analyze", "bad.alist"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = pseudocone(&["analyze", "missing.alist"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dense_matrices_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("h.txt"), "1101000\n0110100\n0011010\n0001101\n1000110\n0100011\n1010001\n").unwrap();
    let o = pseudocone(&["analyze", "h.txt", "--min-distance", "--stopping"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["d"].clone(), v["s_H"].clone(), v["T_s_H"].clone()), (4.into(), 4.into(), 7.into()));
}
