use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_semihopf"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = run(args);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}\n{stderr}"));
    (code, v)
}

#[test]
fn census_reports_survivors_and_eliminations() {
    let (code, v) = json(&["census", "--dim", "30", "--rules", "R1..R8"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"]["name"], "census");
    assert_eq!(v["dim"], 30);
    let survivors: Vec<&str> = v["survivors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert_eq!(survivors, ["1,2;2,7", "1,3;3,3", "1,5;5,1", "1,6;2,6", "1,10;2,5"]);
    let elim = v["eliminated"].as_array().unwrap();
    assert!(elim.iter().any(|e| e["type"] == "1,2;2,3;4,1" && e["rule"] == "R7"));
    assert!(elim.iter().all(|e| e["detail"].is_string()));
    let cited: Vec<&str> = v["citations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["item"].as_str().unwrap())
        .collect();
    for e in elim {
        assert!(
            cited.contains(&e["rule"].as_str().unwrap()),
            "{} has no citation",
            e["rule"]
        );
    }
}

#[test]
fn census_oracle_refutes_delegated_types() {
    let (code, v) = json(&["census", "--dim", "36", "--oracle", "1,2;3,2;4,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["oracle"][0]["type"], "1,2;3,2;4,1");
    assert_eq!(v["oracle"][0]["verdict"], "infeasible");
    assert_eq!(v["final"].as_array().unwrap().len(), 9);
}

#[test]
fn census_with_fixed_group_like_count() {
    let (_, v) = json(&["census", "--dim", "60", "--rules", "R1,R4,R5", "--n", "1"]);
    assert_eq!(v["survivors"].as_array().unwrap().len(), 3);
}

#[test]
fn fusion_search_exit_codes() {
    let (code, v) = json(&["fusion-search", "--type", "1,2;2,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "feasible");
    assert!(v["witness"].is_object());

    let (code, v) = json(&["fusion-search", "--type", "1,2;2,1;4,2"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "infeasible");

    let (code, v) = json(&["--budget", "3", "fusion-search", "--type", "1,2;2,7;3,2"]);
    assert_eq!(code, 3);
    assert_eq!(v["verdict"], "inconclusive");
}

#[test]
fn fusion_verify_group_and_datum() {
    let (code, v) = json(&["fusion-verify", "--group", "Q8"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);

    let (_, found) = json(&["fusion-search", "--type", "1,3;3,1"]);
    let datum = found["witness"].to_string();
    let (code, v) = json(&["fusion-verify", "--datum", &datum]);
    assert_eq!(code, 0, "{v}");

    let dir = std::env::temp_dir().join(format!("semihopf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("datum.json");
    std::fs::write(&path, &datum).unwrap();
    let (code, _) = json(&["fusion-verify", "--datum", &format!("@{}", path.display())]);
    assert_eq!(code, 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn double_types() {
    for (g, want) in [("D4", "1,8;2,14"), ("Q8", "1,8;2,14"), ("S3", "1,2;2,4;3,2")] {
        let (code, v) = json(&["double", "--group", g]);
        assert_eq!(code, 0);
        assert_eq!(v["type"], want, "{g}");
    }
}

#[test]
fn h8_report_and_alias_agree() {
    let (code, a) = json(&["h8-report"]);
    assert_eq!(code, 0);
    let (_, b) = json(&["h8", "report"]);
    assert_eq!(a, b);
    assert_eq!(a["axioms"]["passed"], true);
    assert_eq!(a["yd_pairs"]["count"], 8);
    assert_eq!(a["yd_pairs"]["generators_check"]["generated_order"], 8);
    assert_eq!(a["characters"].as_array().unwrap().len(), 4);
}

#[test]
fn twist_reports() {
    let (code, v) = json(&[
        "twist",
        "--group",
        "G12",
        "--subgroup",
        "Gamma",
        "--bicharacter",
        r#"[["0","1/2"],["1/2","0"]]"#,
        "--check-cocommutative",
        "--group-likes",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["cocommutative"], false);
    assert_eq!(v["surviving_group_likes"]["count"], 4);

    let (_, v) = json(&[
        "twist",
        "--group",
        "G18",
        "--subgroup",
        "Gamma",
        "--bicharacter",
        r#"[["0","1/3"],["2/3","0"]]"#,
        "--check-cocommutative",
    ]);
    assert_eq!(v["criterion"], false);
    assert_eq!(v["criterion_agrees"], true);

    let (_, v) = json(&[
        "twist",
        "--group",
        "G12",
        "--subgroup",
        "[0,3,6,9]",
        "--bicharacter",
        "[[1,1],[1,1]]",
        "--check-cocommutative",
    ]);
    assert_eq!(v["cocommutative"], true);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        vec!["census"],
        vec!["census", "--dim", "30", "--rules", "R12"],
        vec!["fusion-search", "--type", "2,1"],
        vec!["double", "--group", "Nope"],
        vec![
            "twist",
            "--group",
            "G12",
            "--subgroup",
            "Gamma",
            "--bicharacter",
            r#"[["0","1/3"],["2/3","0"]]"#,
        ],
        vec!["fusion-verify", "--datum", "{not json"],
        vec!["frobnicate"],
    ] {
        let (code, stdout, stderr) = run(&args);
        assert_eq!(code, 2, "{args:?}: {stdout}");
        assert!(!stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn tables_render_every_command() {
    for args in [
        vec!["census", "--dim", "24", "--rules", "R1..R5"],
        vec!["fusion-search", "--type", "1,4;2,1"],
        vec!["double", "--group", "D4"],
        vec!["h8-report"],
    ] {
        let mut full = vec!["--format", "table"];
        full.extend(args.iter().copied());
        let (code, stdout, _) = run(&full);
        assert!(code == 0 || code == 1, "{args:?}");
        assert!(serde_json::from_str::<Value>(&stdout).is_err());
        assert!(stdout.contains("citations"), "{args:?}");
    }
    let (_, stdout, _) = run(&["--format", "table", "h8-report"]);
    assert!(stdout.contains("E(4)"));
    assert!(!stdout.contains("\"conductor\""));
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}
