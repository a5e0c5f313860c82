use std::path::PathBuf;

use serde_json::Value;
use tempfile::TempDir;

use octa_cli::{run, Output};

const HALVES: &str = r#"{"alpha":[{"value":"1/2","sigma":0},{"value":"1/2","sigma":0}],"beta":[],"gamma0":"0","gamma1":"0"}"#;
const QUARTERS: &str = r#"{"alpha":[{"value":"1/2","sigma":1}],"beta":[],"gamma0":"1/4","gamma1":"1/4"}"#;

fn octa(args: &[&str]) -> Output {
    run(std::iter::once("octa").chain(args.iter().copied()))
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("bad json {:?}: {e}", out.stdout))
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Self(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path: PathBuf = self.0.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }
}

fn rep_spec(n: usize, l0: &str, l1: &str, thoma: &str) -> String {
    format!(r#"{{"n":{n},"lambda0":{l0},"lambda1":{l1},"thoma":{thoma}}}"#)
}

#[test]
fn char_eval() {
    let f = Files::new();
    let spec = f.write("s.json", HALVES);
    let out = octa(&["char-eval", "--spec", &spec, "--element", "(1 2);signs="]);
    assert_eq!(out.code, 0, "{out:?}");
    assert_eq!(out.stdout, "{\"value\":\"1/2\"}\n");
    let out = octa(&["char-eval", "--spec", &spec, "--element", "(1 2)(4 5)"]);
    assert_eq!(json(&out)["value"], "1/4");
}

#[test]
fn bn_table_formats() {
    let out = octa(&["bn-table", "--n", "2", "--format", "json"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["dims_squared_sum"], 8);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["values"].as_array().unwrap().len() == 5));

    let csv = octa(&["bn-table", "--n", "2", "--format", "csv"]).stdout;
    assert_eq!(csv.lines().count(), 6);
    for row in csv.lines().skip(1) {
        // the quoted bipartition label may itself contain commas
        let values: Vec<&str> = row.rsplitn(6, ',').take(5).collect();
        assert!(values.iter().all(|v| v.parse::<i64>().is_ok()), "{row}");
        assert!(row.starts_with("\"[["));
    }

    let verified = json(&octa(&["bn-table", "--n", "3", "--verify"]));
    assert_eq!(verified["verified"], true);
}

#[test]
fn slow_verification_is_gated() {
    if std::env::var("OCTA_SLOW_TESTS").as_deref() == Ok("1") {
        for n in ["5", "6"] {
            let out = octa(&["bn-table", "--n", n, "--verify"]);
            assert_eq!(out.code, 0, "{out:?}");
            assert_eq!(json(&out)["verified"], true);
        }
    } else {
        let out = octa(&["bn-table", "--n", "5", "--verify"]);
        assert_eq!(out.code, 1);
        assert_eq!(json(&out)["error"]["field"], "n");
    }
}

#[test]
fn output_is_deterministic() {
    let a = octa(&["bn-table", "--n", "3"]);
    let b = octa(&["bn-table", "--n", "3"]);
    assert_eq!(a, b);
    let keys: Vec<String> = json(&a).as_object().unwrap().keys().cloned().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(a.stdout.find("\"classes\"").unwrap() < a.stdout.find("\"n\"").unwrap());
}

#[test]
fn coset_rep() {
    let v = json(&octa(&["coset-rep", "--element", "(1 3 2)", "--k", "2"]));
    assert_eq!(v["pairs"], serde_json::json!([[2, 3]]));
    assert_eq!(v["representative"], "(2 3)");
    let v = json(&octa(&["coset-rep", "--element", "(1 2)(4 5);signs=3", "--k", "2"]));
    assert_eq!(v["representative"], "e");
}

#[test]
fn state_eval() {
    let f = Files::new();
    let spec = f.write("r.json", &rep_spec(1, "[1]", "[]", HALVES));
    let v = json(&octa(&["state-eval", "--spec", &spec, "--element", "(2 3)"]));
    assert_eq!(v["value"], "1/2");
    let v = json(&octa(&["state-eval", "--spec", &spec, "--element", "(1 3)"]));
    assert_eq!(v["value"], "0/1");
    let spec2 = f.write("r2.json", &rep_spec(2, "[2]", "[]", HALVES));
    let v = json(&octa(&["state-eval", "--spec", &spec2, "--element", "(1 2)"]));
    assert_eq!(v["value"], "1/1");
    let v = json(&octa(&["state-eval", "--spec", &spec2, "--element", "(1 2)", "--asymptotic"]));
    assert_eq!(v["value"], "1/2");
}

#[test]
fn classify_verdicts() {
    let f = Files::new();
    let a = f.write("a.json", &rep_spec(3, "[2]", "[1]", HALVES));
    let out = octa(&["classify", "--a", &a, "--b", &a]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["quasi_equivalent"], true);
    assert_eq!(v["central_depth"], serde_json::json!([3, 3]));
    assert_eq!(v["factor_type"], serde_json::json!(["II_inf", "II_inf"]));

    let b = f.write("b.json", &rep_spec(3, "[1,1]", "[1]", HALVES));
    assert_eq!(json(&octa(&["classify", "--a", &a, "--b", &b]))["quasi_equivalent"], false);

    let c = f.write("c.json", &rep_spec(1, "[1]", "[]", QUARTERS));
    let d = f.write("d.json", &rep_spec(0, "[]", "[]", QUARTERS));
    let v = json(&octa(&["classify", "--a", &c, "--b", &d]));
    assert_eq!(
        v,
        serde_json::json!({"quasi_equivalent":true,"reason":"II1-character-determined","central_depth":[0,0],"factor_type":["II_1","II_1"]})
    );
}

#[test]
fn gram_check() {
    let f = Files::new();
    let thoma = f.write("t.json", QUARTERS);
    let v = json(&octa(&["gram-check", "--spec", &thoma, "--elements", "e", "(1 2)", "e;signs=1"]));
    assert_eq!(v["psd"], true);
    assert_eq!(v["approximate"], false);
    let rep = f.write("r.json", &rep_spec(2, "[1]", "[1]", HALVES));
    let v = json(&octa(&["gram-check", "--spec", &rep, "--random", "10", "--seed", "4"]));
    assert_eq!(v["psd"], true);
    assert_eq!(v["size"], 10);
    let v = json(&octa(&["gram-check", "--spec", &rep, "--random", "20"]));
    assert_eq!(v["approximate"], true);
    let out = octa(&["gram-check", "--spec", &rep, "--random", "20", "--mode", "exact"]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["error"]["field"], "elements");
}

#[test]
fn lab_series() {
    let out = octa(&["lab", "example3", "--p", "9/10", "--max-n", "3"]);
    assert_eq!(out.stdout, "n,value\n1,-9/25\n2,-9/25\n3,-9/25\n");
    let out = octa(&["lab", "example1", "--f-index", "2", "--max-m", "3"]);
    assert_eq!(out.stdout, "m,value\n0,1/1\n1,1/1\n2,-1/1\n3,-1/1\n");
    let v = json(&octa(&["lab", "example1", "--f-index", "1", "--max-m", "1", "--format", "json"]));
    assert_eq!(v, serde_json::json!([{"m":0,"value":"1/1"},{"m":1,"value":"-1/1"}]));
    let v = json(&octa(&["lab", "example3-state", "--p", "3/4", "--element", "e;signs=2", "--m", "3"]));
    assert_eq!(v["value"], "1/2");
}

#[test]
fn domain_errors_name_the_field() {
    let f = Files::new();
    let spec = f.write("s.json", HALVES);
    let out = octa(&["char-eval", "--spec", &spec, "--element", "(1 1)"]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["error"]["field"], "element");

    let bad = f.write("bad.json", r#"{"alpha":[{"value":"3/4","sigma":0}],"beta":[],"gamma0":"1/2","gamma1":"0"}"#);
    let out = octa(&["char-eval", "--spec", &bad, "--element", "e"]);
    assert_eq!(out.code, 1);
    assert_eq!(json(&out)["error"]["field"], "spec");

    let wrong_k = f.write("k.json", &rep_spec(2, "[1]", "[1]", HALVES).replace("\"n\":2", "\"n\":2,\"k\":2"));
    let out = octa(&["state-eval", "--spec", &wrong_k, "--element", "e"]);
    assert_eq!(out.code, 1);

    let out = octa(&["bn-table", "--n", "7"]);
    assert_eq!(out.code, 1);
    assert!(json(&out)["error"]["message"].as_str().unwrap().contains("guard"));

    let out = octa(&["lab", "example3", "--p", "1", "--max-n", "2"]);
    assert_eq!(json(&out)["error"]["field"], "p");
    let out = octa(&["lab", "example3-state", "--p", "1/2", "--element", "e", "--m", "21"]);
    assert_eq!(json(&out)["error"]["field"], "m");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(octa(&["bn-table"]).code, 2);
    assert_eq!(octa(&["bn-table", "--n", "x"]).code, 2);
    assert_eq!(octa(&["frobnicate"]).code, 2);
    assert_eq!(octa(&["bn-table", "--n", "2", "--format", "xml"]).code, 2);
    let help = octa(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("char-eval"));
}
