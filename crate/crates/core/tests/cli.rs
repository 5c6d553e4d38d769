// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! End-to-end runs of the command-line tool.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubecrux")).args(args).env_remove("CUBECRUX_SEED").output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn generate(name: &str, args: &[&str]) -> String {
    let out = run(args);
    let path = scratch(name);
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn generated_charts_validate_and_answer_queries() {
    let grid = generate("grid.json", &["gen", "grid", "2,2"]);
    let v = json(&run(&["validate", &grid]));
    assert_eq!((v["vertices"].as_u64(), v["hyperplanes"].as_u64()), (Some(9), Some(4)));
    assert_eq!(json(&run(&["median", &grid, "0,0", "2,2", "2,0"]))["median"], "2,0");
    let canon = run(&["validate", &grid, "--canonical"]);
    let again = generate("canon.json", &["validate", &grid, "--canonical"]);
    assert_eq!(json(&run(&["validate", &again, "--canonical"])), json(&canon));
    let faces = json(&run(&["freefaces", &grid]));
    assert!(faces["count"].as_u64().unwrap() > 0);
}

#[test]
fn errors_are_json_on_stderr() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"hyperplanes":[{"id":"e","weight":1.5}],"vertices":[{"id":"a","signs":{"e":"-"}},{"id":"b","signs":{"e":"+"}}]}"#).unwrap();
    let out = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], 10);

    let grid = generate("grid2.json", &["gen", "grid", "1,1"]);
    let out = run(&["median", &grid, "0,0", "1,1", "9,9"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], 18);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["median"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn manifests_are_reproducible() {
    let chart = generate("random.json", &["gen", "random", "8", "5", "--seed", "3"]);
    let (m1, m2) = (scratch("m1.json"), scratch("m2.json"));
    let a = run(&["--manifest", m1.to_str().unwrap(), "validate", &chart]);
    let b = run(&["validate", &chart, "--manifest", m2.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let (r1, r2) = (std::fs::read(&m1).unwrap(), std::fs::read(&m2).unwrap());
    assert_eq!(r1, r2);
    let manifest: Value = serde_json::from_slice(&r1).unwrap();
    assert_eq!(manifest["subcommand"], "validate");
    assert_eq!(manifest["inputs"].as_array().unwrap().len(), 1);
}

#[test]
fn random_generation_is_seeded() {
    let a = run(&["gen", "random", "8", "6", "--seed", "42"]);
    let b = run(&["gen", "random", "8", "6", "--seed", "42"]);
    assert_eq!(json(&a), json(&b));
}

#[test]
fn tree_lengths_from_words() {
    let ball = generate("tree.json", &["gen", "racg", "--rank", "3", "--radius", "6"]);
    let out = json(&run(&["length", &ball, "--word", "ab"]));
    assert_eq!(out["length"], "2");
}

#[test]
fn failing_suite_names_are_rejected() {
    let out = run(&["accept", "nonexistent"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], 60);
}
