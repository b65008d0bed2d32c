//! CLI behaviour: exit codes, algorithm agreement, generator outputs.

use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_tardis")
}

fn tmpfile(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("tardis-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, content).unwrap();
    p
}

#[test]
fn exit_codes() {
    // 1: usage
    let out = Command::new(bin()).args(["solve"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // 2: parse error
    let bad = tmpfile("bad.tg", "p tg 2 1\n1 1 1\n");
    let out = Command::new(bin())
        .args(["solve", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    // 3: infeasible (K3 admits no happy assignment with lifetime 2)
    let k3 = tmpfile("k3.gr", "p tw 3 3\n1 2\n2 3\n1 3\n");
    let out = Command::new(bin())
        .args(["maxmin", "--variant", "happy", "--tau", "2", k3.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // 4: budget exceeded
    let p5 = tmpfile("p5.gr", "p tw 5 4\n1 2\n2 3\n3 4\n4 5\n");
    let out = Command::new(bin())
        .args([
            "maxmin",
            "--variant",
            "nonstrict",
            "--tau",
            "3",
            "--algo",
            "enum",
            "--budget",
            "2",
            p5.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn solve_algorithms_agree() {
    let cases = [
        "p tg 4 3\n1 2 1\n2 3 1\n3 4 1\n",
        "p tg 5 6\n1 2 1\n2 3 2\n3 4 1\n4 5 3\n1 5 2\n2 4 2\n",
        "p tg 6 7\n1 2 2\n2 3 1\n3 4 3\n4 5 1\n5 6 2\n1 6 1\n2 5 3\n",
    ];
    for (i, tg) in cases.iter().enumerate() {
        let f = tmpfile(&format!("agree{i}.tg"), tg);
        for semantics in ["strict", "nonstrict"] {
            let mut sizes = Vec::new();
            for algo in ["auto", "bruteforce", "setcover", "treewidth"] {
                let out = Command::new(bin())
                    .args([
                        "solve",
                        "--semantics",
                        semantics,
                        "--algo",
                        algo,
                        f.to_str().unwrap(),
                    ])
                    .output()
                    .unwrap();
                assert!(out.status.success(), "{algo} failed on case {i}");
                let v: serde_json::Value =
                    serde_json::from_slice(&out.stdout).expect("valid JSON");
                sizes.push(v["result"]["size"].as_u64().unwrap());
                assert_eq!(v["command"], "solve");
                assert!(v["instance_summary"]["n"].is_u64());
                assert!(v["algorithm"].is_string());
            }
            assert!(
                sizes.windows(2).all(|w| w[0] == w[1]),
                "algorithms disagree on case {i} {semantics}: {sizes:?}"
            );
        }
    }
}

#[test]
fn decision_answers() {
    let f = tmpfile("path3b.tg", "p tg 4 3\n1 2 1\n2 3 1\n3 4 1\n");
    let out = Command::new(bin())
        .args(["solve", "--semantics", "strict", "--k", "2", f.to_str().unwrap()])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["answer"], "yes");
    let out = Command::new(bin())
        .args(["solve", "--semantics", "strict", "--k", "1", f.to_str().unwrap()])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["answer"], "no");
}

#[test]
fn gen_writes_sidecar_files() {
    let dir = std::env::temp_dir().join("tardis-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let prefix = dir.join("sc_instance");
    let out = Command::new(bin())
        .args([
            "gen",
            "setcover",
            "--universe",
            "4",
            "--sets",
            "3",
            "--k",
            "2",
            "--seed",
            "9",
            "--out",
            prefix.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let tg_text = std::fs::read_to_string(format!("{}.tg", prefix.display())).unwrap();
    let sidecar: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(format!("{}.json", prefix.display())).unwrap(),
    )
    .unwrap();
    // the generated instance parses and the sidecar's expected answer
    // matches the solver
    let f = tmpfile("sc_roundtrip.tg", &tg_text);
    let k = sidecar["k"].as_u64().unwrap();
    let out = Command::new(bin())
        .args([
            "solve",
            "--semantics",
            "nonstrict",
            "--k",
            &k.to_string(),
            f.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let expected = sidecar["expected_yes"].as_bool().unwrap();
    assert_eq!(v["answer"] == "yes", expected);
}

#[test]
fn reach_reports_arrivals() {
    let f = tmpfile("reach.tg", "p tg 3 2\n1 2 1\n2 3 1\n");
    for (semantics, c_arrival) in [("strict", serde_json::Value::Null), ("nonstrict", 1.into())] {
        let out = Command::new(bin())
            .args(["reach", "--source", "1", "--semantics", semantics, f.to_str().unwrap()])
            .output()
            .unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let arrivals = v["result"]["arrivals"].as_array().unwrap();
        assert_eq!(arrivals[0]["arrival"], 0);
        assert_eq!(arrivals[2]["arrival"], c_arrival, "{semantics}");
    }
}

#[test]
fn solve_with_td_file() {
    let tgf = tmpfile("tdpath.tg", "p tg 3 2\n1 2 1\n2 3 1\n");
    let tdf = tmpfile("tdpath.td", "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
    let out = Command::new(bin())
        .args([
            "solve",
            "--semantics",
            "strict",
            "--algo",
            "treewidth",
            "--td-file",
            tdf.to_str().unwrap(),
            tgf.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // the centre vertex reaches both leaves by single edges
    assert_eq!(v["result"]["size"], 1);
}
