use preproj::io;
use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

/// Runs the CLI with `{name}` placeholders expanded to fixture paths.
fn run(args: &str) -> (i32, String, String) {
    let mut argv = vec!["preproj".to_string()];
    for a in args.split_whitespace() {
        match a.strip_prefix('{').and_then(|a| a.strip_suffix('}')) {
            Some(name) => argv.push(fixture(name)),
            None => argv.push(a.to_string()),
        }
    }
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = preproj_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &str) -> (i32, Value) {
    let (code, out, err) = run(&format!("{args} --format json"));
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn canonical_form_literal() {
    let (code, out, _) = run("canon -q {q3.json} -s 3,2,1,3");
    assert_eq!((code, out.trim()), (0, "3,2,1 | 3"));
}

#[test]
fn reduced_word_on_a4() {
    let (code, out, _) = run("reduced --cartan {a4.json} -w 2,3,2");
    assert_eq!((code, out.trim()), (0, "reduced (length 3)"));
    let (code, out, _) = run("reduced --cartan {a4.json} -w 2,2");
    assert_eq!((code, out.trim()), (1, "not reduced (length 0)"));
}

#[test]
fn preceq_false_exits_one() {
    let (code, out, _) = run("preceq -q {q3.json} -s 3,2,3 -t 3,2,1");
    assert_eq!((code, out.trim()), (1, "false"));
    let (code, _, _) = run("preceq -q {q3.json} -s 3 -t 3,2,1");
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run("frobnicate -q {q3.json}").0, 2);
    assert_eq!(run("canon -q {missing.json} -s 3").0, 2);
    assert_eq!(run("canon -q {bad.json} -s 3").0, 2);
    assert_eq!(run("canon -q {q3.json} -s 1").0, 2);
    assert_eq!(run("canon -q {q3.json}").0, 2);
    assert_eq!(run("mult -q {q3.json} -s 3 --format dot").0, 2);
    let (code, _, err) = run("apply -q {qk.json} --module {l1_q3.json} -s 3");
    assert_eq!(code, 2);
    assert!(err.contains("different base quivers"), "{err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run("--help");
    assert_eq!(code, 0);
    assert!(out.contains("first\nletter acts first") || out.contains("first letter acts first"));
    assert!(out.contains("0-based index"));
}

#[test]
fn check_seq() {
    assert_eq!(run("check-seq -q {q3.json} -s 3,2,1").0, 0);
    let (code, out, _) = run("check-seq -q {q3.json} -s 2");
    assert_eq!(code, 1);
    assert!(out.starts_with("not admissible"));
    let (code, v) = run_json("check-seq -q {q3.json} -s 3");
    assert_eq!(code, 0);
    let fin = io::parse_quiver(&v["final_quiver"].to_string()).unwrap();
    assert_eq!(fin.arrows(), &[(1, 2), (3, 2)]);
}

#[test]
fn lattice_verbs() {
    assert_eq!(run("mult -q {q3.json} -s 3,2,1,3").1.trim(), "(1,1,2)");
    assert_eq!(run("equiv -q {q3.json} -s 3,2,1,3 -t 3,2,3,1").0, 0);
    assert_eq!(run("meet -q {q3.json} -s 3,2,3 -t 3,2,1").1.trim(), "3,2");
    assert_eq!(run("join -q {q3.json} -s 3,2,3 -t 3,2,1").1.trim(), "3,2,1,3");
    assert_eq!(run("meet -q {q3.json} -s 3 -t -").1.trim(), "-");
    let (_, v) = run_json("complement -q {q3.json} -s 3,2,3 -t 3,2,1");
    assert_eq!(v["meet"], serde_json::json!([3, 2]));
    assert_eq!(v["u"], serde_json::json!([3]));
    assert_eq!(v["v"], serde_json::json!([1]));
    let base = io::parse_quiver(&v["base"].to_string()).unwrap();
    assert_eq!(base.arrows(), &[(2, 1), (2, 3)]);
}

#[test]
fn principal_verbs() {
    assert_eq!(run("principal -q {q3.json} -r 2 -x 3").1.trim(), "3,2,3");
    assert_eq!(run("decompose -q {q3.json} -s 3,2,1,3").1.trim(), "S(1,1) = 3,2,1\nS(2,3) = 3,2,3");
    let (_, v) = run_json("tail -q {q3.json} -s 3,2,3");
    assert_eq!(v["tail"], serde_json::json!([2, 3]));
    assert_eq!((v["r"].as_u64(), v["x"].as_u64()), (Some(1), Some(3)));
    assert_eq!(run("tail -q {q3.json} -s 3,2,1,3").0, 2);
    assert_eq!(run("psi -q {q3.json} -s 3,2,3").1.trim(), "(1,3)");
}

#[test]
fn weyl_verbs() {
    let (code, out, _) = run("word -q {q3.json} -s 3,2");
    assert_eq!(code, 0);
    assert!(out.starts_with("s2 s3"), "{out}");
    assert_eq!(run("principal-reduced -q {q3.json} -r 3 -x 3").0, 0);
    assert_eq!(run("principal-reduced -q {q3.json} -r 4 -x 3").0, 1);
    assert_eq!(run("finite --cartan {a4.json}").0, 0);
    assert_eq!(run("finite -q {qk.json}").0, 1);
    assert_eq!(run("coxeter-check -q {qk.json} -s 2,1 -m 10").0, 0);
    assert_eq!(run("coxeter-check -q {q3.json} -s 3,2,1 -m 4").0, 1);
    let (_, v) = run_json("coxeter-check -q {triangle.json} -s 3,2,1 -m 3");
    assert_eq!(v["powers"][3]["length"], 9);
    assert_eq!(run("sorting-word -q {q3.json} -s 1,2,3 -w 3,2,3").1.trim(), "3,2 | 3");
    assert_eq!(run("sortable -q {q3.json} -s 1,2,3 -w 3,2,3").0, 0);
    assert_eq!(run("sorting-word -q {q3.json} -s 1,2,3 -w -").1.trim(), "-");
}

#[test]
fn module_verbs() {
    let (code, v) = run_json("module -q {q3.json} -s 3,2,1,3,2,3");
    assert_eq!(code, 0);
    let m = io::parse_representation(&v["representation"].to_string()).unwrap();
    assert_eq!(m.dims(), &[1, 0, 0]);
    assert_eq!(run("module -q {q3.json} -s 3,2,1,3,2,3,1").0, 2);

    let (code, out, _) = run("apply --module {l1_q3.json} -s 3,2,1,3,2,3");
    assert_eq!(code, 0);
    assert_eq!(
        out.lines().next().unwrap(),
        "(1,0,0) -> (1,0,0) -> (1,1,0) -> (0,1,0) -> (0,1,1) -> (0,0,1) -> (0,0,0)"
    );
    let (_, v) = run_json("phi-plus --module {qk_regular.json} -m 3");
    let m = io::parse_representation(&v["representation"].to_string()).unwrap();
    assert_eq!(m.dims(), &[1, 1]);

    assert_eq!(run("preproj --module {l1_q3.json}").1.trim(), "preprojective (3 Coxeter steps to zero)");
    assert_eq!(run("preproj --module {qk_regular.json} -m 8").0, 1);
    assert_eq!(run("sm --module {l1_q3.json}").1.trim(), "3,2,1,3,2,3");
    assert_eq!(run("sm-brute --module {l1_q3.json}").1.trim(), "3,2,1,3,2,3");
    assert_eq!(run("sm-brute --module {l1_q3.json} -t 3,2,1").0, 2);
    assert_eq!(run("sm --module {qk_regular.json} -m 8").0, 2);
}

#[test]
fn component_q3_one_level() {
    let (code, out, _) = run("component -q {q3.json} --levels 1 --format dot");
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(out.matches("[label=").count(), 3);
    let arrows: Vec<&str> = out.lines().filter(|l| l.contains("->")).map(str::trim).collect();
    assert_eq!(arrows, ["n0_2 -> n0_1;", "n0_3 -> n0_2;"]);
}

#[test]
fn component_qk_two_levels() {
    let (_, out, _) = run("component -q {qk.json} --levels 2 --format dot");
    assert_eq!(out.matches("[label=").count(), 4);
    assert_eq!(out.matches("n0_2 -> n0_1;").count(), 2);
    assert_eq!(out.matches("n0_1 -> n1_2;").count(), 2);
    assert!(!out.contains("-> n2_"));
}

#[test]
fn component_labels() {
    let (_, v) = run_json("component -q {triangle.json} --levels 3");
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 9);
    assert!(nodes.iter().all(|n| n["reduced"] == true && n["dims"].is_array()));

    let (_, v) = run_json("component -q {q3.json} --levels 4");
    for n in v["nodes"].as_array().unwrap() {
        assert_eq!(n["reduced"].as_bool().unwrap(), n["dims"].is_array());
    }
    assert!(v["nodes"].as_array().unwrap().iter().any(|n| n["reduced"] == false));
    assert_eq!(run("component -q {q3.json} --levels 0").0, 2);
}
