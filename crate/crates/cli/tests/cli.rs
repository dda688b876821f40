use std::path::PathBuf;
use std::process::{Command, Output};

fn data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_platknot"))
        .current_dir(data())
        .args(args)
        .env_remove("PLATKNOT_BUDGET_STATES")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{out}"))
}

#[test]
fn trefoil_and_unknot_counts() {
    let o = run(&["count", "--knot", "trefoil.pd", "--group", "s3.grp", "--class", "t"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "9\n");
    let o = run(&["count", "--knot", "unknot.pd", "--group", "a5.grp", "--class", "5c"]);
    assert_eq!(stdout(&o), "12\n");
}

#[test]
fn q_on_trefoil() {
    let o = run(&["q", "--knot", "trefoil.pd", "--group", "s3.grp", "--class", "(1 2)"]);
    let out = stdout(&o);
    assert_eq!(field(&out, "q"), "1");
    assert_eq!(field(&out, "surjective_total"), "6");
    assert_eq!(field(&out, "aut_class"), "6");
}

#[test]
fn breakdown_is_tab_separated() {
    let o = run(&["breakdown", "--knot", "trefoil.pd", "--group", "s3.grp", "--class", "t", "--format", "tsv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("order\tcyclic\timage\tpinned\tq\tcontribution"));
    let rows: Vec<Vec<&str>> = lines.take(2).map(|l| l.split('\t').collect()).collect();
    assert_eq!((rows[0][0], rows[0][5]), ("2", "3"));
    assert_eq!((rows[1][0], rows[1][5]), ("6", "6"));
    assert!(out.contains("total\t9\n") && out.contains("reconstructed\t9\n"));
}

#[test]
fn plat_count_matches_wirtinger() {
    let o = run(&["plat-count", "--braid", "braid 4: 2 2 2", "--group", "s3.grp", "--class", "t"]);
    assert_eq!(stdout(&o), "9\n");
    let o = run(&["plat-count", "--braid", "braid 4: 2 2 2", "--group", "s3.grp", "--class", "t", "--pin", "1:t"]);
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn pd_code_input() {
    let o = run(&["count", "--knot", "figure8.pd", "--group", "a5.grp", "--class", "5c"]);
    assert!(o.status.success());
    let native: u64 = stdout(&o).trim().parse().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f8.pd");
    std::fs::write(&f, "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]").unwrap();
    let o = run(&["count", "--knot", f.to_str().unwrap(), "--group", "a5.grp", "--class", "5c"]);
    assert_eq!(stdout(&o).trim().parse::<u64>().unwrap(), native);
}

#[test]
fn exit_codes() {
    let o = run(&["count", "--knot", "missing.pd", "--group", "s3.grp", "--class", "t"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error[usage]"));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--knot", "trefoil.pd"]).status.code(), Some(2));

    // A tuple whose product is not the identity is a domain error.
    let o = run(&["schur", "--group", "a5.grp", "--class", "5c", "--cover", "sl25_a5.ext", "--tuple", "[+1 -1]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error[hurwitz."), "{}", stderr(&o));
}

#[test]
fn env_budget_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_platknot"))
        .current_dir(data())
        .args(["density", "--group", "a5.grp", "--class", "2a", "--k-max", "4"])
        .env("PLATKNOT_BUDGET_STATES", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"), "{}", stderr(&o));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let args = ["orbits", "--group", "a5.grp", "--class", "5c", "--k", "2", "--cover", "sl25_a5.ext", "--format", "tsv"];
    let a = run(&[&args[..], &["--seed", "7"]].concat());
    let b = run(&[&args[..], &["--seed", "7", "--threads", "2"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("orbits\t19\n") && out.contains("sch_constant\ttrue\n"));
}

#[test]
fn group_info_lists_classes() {
    let o = run(&["group-info", "--group", "a5.grp", "--cover", "sl25_a5.ext", "--format", "tsv"]);
    let out = stdout(&o);
    assert!(out.contains("order\t60\n"));
    assert!(out.contains("5c\t"));
    let sizes: Vec<&str> = out.lines().skip_while(|l| !l.starts_with("class\t")).skip(1).map(|l| l.split('\t').nth(2).unwrap()).collect();
    assert_eq!(sizes.iter().map(|s| s.parse::<usize>().unwrap()).sum::<usize>(), 60);
}

#[test]
fn identity_circuit_verifies() {
    let o = run(&["verify", "--circuit", "id.zsat", "--registry", "gadgets", "--smaller-group", "s3.grp", "--smaller-class", "t"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(field(&out, "zsat"), "1");
    assert_eq!(field(&out, "three_way_equal"), "true");
    assert_eq!(field(&out, "knot"), "true");
}

#[test]
fn compile_emits_meridian_footer() {
    let o = run(&["compile", "--circuit", "id.zsat"]);
    let out = stdout(&o);
    assert!(out.trim_end().lines().last().unwrap().starts_with("meridian "), "{out}");
}

#[test]
fn alphabet_smallest_k() {
    let o = run(&["alphabet", "--group", "a5.grp", "--class", "5c", "--cover", "sl25_a5.ext"]);
    let out = stdout(&o);
    assert_eq!(field(&out, "k"), "3");
    assert_eq!(field(&out, "symbols"), "631");
    assert_eq!(field(&out, "nondegenerate"), "true");
}

#[test]
fn gadget_validation_is_reported_not_enforced() {
    let o = run(&["verify", "--circuit", "planted.zsat", "--registry", "gadgets", "--smaller-group", "s3.grp", "--smaller-class", "t", "--validate"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(field(&out, "zsat"), "6");
    assert_eq!(field(&out, "gadget[planted].pure"), "true");
    assert_eq!(field(&out, "gadget[planted].rubik"), "true");
    assert!(field(&out, "gadget[planted].smaller[S3 / class of (1 2)]").starts_with("pass (exhaustive"));
}
