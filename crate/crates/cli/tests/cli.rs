use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn symstoch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symstoch"))
        .args(args)
        .env_remove("SYMSTOCH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn json_err(o: &Output) -> Value {
    serde_json::from_slice(&o.stderr).expect("stderr is JSON")
}

#[test]
fn hstar_s3() {
    let o = symstoch(&["hstar", "--family", "S", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["hstar"], serde_json::json!([1, 7, 4]));
    assert_eq!(v["degree"], 2);
    assert_eq!(v["palindromic"], false);
}

#[test]
fn gorenstein_odd_and_even() {
    let o = symstoch(&["gorenstein", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["gorenstein"], false);
    assert!(v["witness"].is_null());

    let v = json_out(&symstoch(&["gorenstein", "--n", "4"]));
    assert_eq!(v["gorenstein"], true);
    assert_eq!(v["witness"]["r"], 2);
}

#[test]
fn count_table_csv() {
    let o = symstoch(&["points", "--n", "3", "--m", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "m,count\n0,1\n1,11\n2,42\n3,106\n");
}

#[test]
fn csv_rejected_outside_count_tables() {
    let o = symstoch(&["gorenstein", "--n", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json_err(&o)["error"], "usage");
}

#[test]
fn decompose_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    fs::write(&path, r#"{"n":3,"rows":[[2,1,1],[1,0,3],[1,3,0]]}"#).unwrap();
    let o = symstoch(&["decompose", "--m", "2", "--in", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["m"], 2);
    let summands = v["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    let mut total = [[0u64; 3]; 3];
    for s in summands {
        for (i, row) in s["rows"].as_array().unwrap().iter().enumerate() {
            let row: Vec<u64> = row.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
            assert_eq!(row.iter().sum::<u64>(), 2);
            for (j, x) in row.iter().enumerate() {
                total[i][j] += x;
            }
        }
    }
    assert_eq!(total, [[2, 1, 1], [1, 0, 3], [1, 3, 0]]);
}

#[test]
fn malformed_matrices_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("syntax.json", "{\"n\": 2, \"rows\": [[1, 1], [1"),
        ("asym.json", r#"{"n":2,"rows":[[2,2],[0,4]]}"#),
        ("ragged.json", r#"[[2,2],[2]]"#),
        ("wrongsum.json", r#"[[1,1],[1,2]]"#),
    ] {
        let path = dir.path().join(name);
        fs::write(&path, body).unwrap();
        let o = symstoch(&["decompose", "--m", "2", "--in", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(json_err(&o)["message"].is_string(), "{name}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["--bogus"],
        vec!["hstar"],
        vec!["hstar", "--n", "3", "--family", "Q"],
        vec!["points", "--n", "3", "--max-points", "0"],
        vec!["groebner", "full", "--n", "4"],
        vec!["conjecture", "9.9", "--n", "3"],
    ] {
        let o = symstoch(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(json_err(&o)["error"], "usage", "{args:?}");
    }
}

#[test]
fn counterexample_exits_1() {
    let o = symstoch(&["conjecture", "4.2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json_out(&o)["verdict"], "counterexample");
}

#[test]
fn resource_limit_exits_3() {
    let o = symstoch(&["points", "--n", "4", "--m", "3", "--list", "--max-points", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_err(&o)["error"], "resource-limit");
}

#[test]
fn thm13_exit_codes_by_convention() {
    let o = symstoch(&["verify-thm13", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["p3"]["holds"], true);
    let o = symstoch(&["verify-thm13", "--n", "3", "--convention", "literal-def32"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_out(&o)["p3"]["holds"], false);
}

#[test]
fn groebner_vertices_n3_is_principal() {
    let v = json_out(&symstoch(&["groebner", "vertices", "--n", "3"]));
    assert_eq!(v["size"], 1);
    assert_eq!(v["max_degree"], 3);
}

#[test]
fn output_is_byte_identical_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["groebner", "full", "--n", "3"];
    let plain = symstoch(&args).stdout;
    assert_eq!(plain, symstoch(&args).stdout);

    let mut cached_args = args.to_vec();
    cached_args.extend(["--cache-dir", cache]);
    let miss = symstoch(&cached_args);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    let hit = symstoch(&cached_args);
    assert_eq!(miss.stdout, plain);
    assert_eq!(hit.stdout, plain);

    let via_env = Command::new(env!("CARGO_BIN_EXE_symstoch"))
        .args(args)
        .env("SYMSTOCH_CACHE_DIR", cache)
        .output()
        .unwrap();
    assert_eq!(via_env.stdout, plain);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn cached_exit_code_is_replayed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["conjecture", "4.2", "--n", "2", "--cache-dir", dir.path().to_str().unwrap()];
    assert_eq!(symstoch(&args).status.code(), Some(1));
    assert_eq!(symstoch(&args).status.code(), Some(1));
}

#[test]
fn simplex_and_vertices() {
    let v = json_out(&symstoch(&["simplex", "--n", "4"]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    let v = json_out(&symstoch(&["vertices", "--n", "3"]));
    assert_eq!(v["vertex_count"], 5);
    assert_eq!(v["non_vertices"].as_array().unwrap().len(), 6);
    assert_eq!(symstoch(&["simplex", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn quasi_sigma3() {
    let v = json_out(&symstoch(&["quasi", "--n", "3"]));
    assert_eq!(v["deg_f"], 3);
    assert_eq!(v["deg_g"], 0);
}

#[test]
fn exhaustive_rankings_refused_at_n4() {
    let o = symstoch(&["conjecture", "4.4", "--n", "4", "--allow-large"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_out(&o)["verdict"], "resource-limit");
}

#[test]
fn sampled_vertex_ideal_n3() {
    let o = symstoch(&["conjecture", "4.4", "--n", "3", "--sample-rankings", "5", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_out(&o);
    assert_eq!(v["details"]["rankings"], 5);
    assert_eq!(v["details"]["holds_with_degree_at_most"], true);
}
