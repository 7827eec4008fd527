use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use mcgame::axioms::AnyGame;
use mcgame::rational::{format_rational, int, rat, Rational};
use mcgame::transforms::product_game;
use mcgame_cli::parse_game_str;
use serde_json::{json, Value};

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn mcgame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcgame")).args(args).output().expect("binary runs")
}

fn structured(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let out = mcgame(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("structured output is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

fn strings(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect())
}

#[test]
fn value_of_half_amalgam_is_one() {
    let doc = structured(&["value", path(&example("ex2-amalgam-half.json"))]);
    assert_eq!(doc["result"]["value"], json!("1"));
    let text = mcgame(&["value", path(&example("ex2-amalgam-half.json"))]);
    assert!(String::from_utf8_lossy(&text.stdout).starts_with("value 1\n"));
}

#[test]
fn amalgamate_then_value_on_segment() {
    let dir = tempfile::tempdir().unwrap();
    for alpha in [rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3)] {
        let beta = int(1) - &alpha;
        let weights = format!("{alpha},{beta}");
        let doc = structured(&["amalgamate", path(&example("ex2.json")), "--weights", &weights]);
        let game = &doc["result"]["game"];
        assert_eq!(game["matrices"], json!([[strings(&[alpha.clone(), int(1), int(0), beta.clone()])]]));
        let file = dir.path().join("amalgam.json");
        std::fs::write(&file, serde_json::to_string(game).unwrap()).unwrap();
        assert_eq!(structured(&["value", path(&file)])["result"]["value"], json!("1"), "alpha {alpha}");
    }
}

#[test]
fn poss_on_segment_is_one_one() {
    for r in ["4", "8", "16"] {
        let doc = structured(&["poss", path(&example("ex3.json")), "--grid", r]);
        let payoffs: Vec<&Value> = doc["result"]["points"].as_array().unwrap().iter().map(|p| &p["payoff"]).collect();
        assert_eq!(payoffs, vec![&json!(["1", "1"])], "grid {r}");
    }
}

#[test]
fn oracle_compare_duopoly_is_sound() {
    let doc = structured(&["oracle-compare", path(&example("duopoly.json")), "--x-grid", "50", "--grid", "16"]);
    assert_eq!(doc["result"]["mode"], json!("security"));
    assert_eq!(doc["result"]["violation_count"], json!(0));
    assert_eq!(doc["settings"]["x_grid"], json!(50));
}

#[test]
fn minimax_segment_contains_both_ends() {
    let doc = structured(&["minimax", path(&example("ex2.json")), "--grid", "2"]);
    let payoffs: Vec<&Value> = doc["result"]["points"].as_array().unwrap().iter().map(|p| &p["payoff"]).collect();
    assert!(payoffs.contains(&&json!(["1", "0"])));
    assert!(payoffs.contains(&&json!(["0", "1"])));
}

#[test]
fn security_levels_of_duopoly() {
    let doc = structured(&["security", path(&example("duopoly.json")), "--strategy", "0.5,1/2"]);
    assert_eq!(doc["result"]["levels"], json!(["1/2", "3/4"]));
    assert_eq!(doc["settings"]["strategy"], json!(["1/2", "1/2"]));
}

#[test]
fn em_matrices_are_golden() {
    let doc = structured(&["em", path(&example("duopoly.json"))]);
    let expected = json!([
        [["0", "-2"], ["1", "-1"]],
        [["0", "0"], ["1", "0"]],
        [["0", "1/2"], ["1", "1"]],
        [["-1", "-2"], ["0", "-1"]],
        [["-1", "0"], ["0", "0"]],
        [["-1", "1/2"], ["0", "1"]],
    ]);
    assert_eq!(doc["result"]["game"]["matrices"], expected);
    assert_eq!(doc["result"]["game"]["class"], json!("d1"));
    assert_eq!(doc["result"]["game"]["k"], json!(6));
}

#[test]
fn product_matrices_are_golden_and_parse_back() {
    let doc = structured(&["product-game", path(&example("duopoly.json"))]);
    let expected = json!([
        [["0", "0", "0", "-1", "-1", "-1"], ["1", "1", "1", "0", "0", "0"]],
        [["-2", "0", "1/2", "-2", "0", "1/2"], ["-1", "0", "1", "-1", "0", "1"]],
    ]);
    assert_eq!(doc["result"]["game"]["matrices"], expected);
    let back = parse_game_str(&doc["result"]["game"].to_string(), "output").unwrap();
    let input = parse_game_str(&std::fs::read_to_string(example("duopoly.json")).unwrap(), "duopoly").unwrap();
    let AnyGame::D2(g) = input.game else { panic!("duopoly is a d2 game") };
    assert_eq!(back.game, AnyGame::D1(product_game(&g).unwrap()));
}

#[test]
fn duopoly_file_shape() {
    let f = parse_game_str(&std::fs::read_to_string(example("duopoly.json")).unwrap(), "duopoly").unwrap();
    let AnyGame::D2(g) = f.game else { panic!("duopoly is a d2 game") };
    assert_eq!((g.rows(), g.criteria(), g.column_counts()), (2, 2, vec![2, 3]));
    assert_eq!(g.matrix(1).get(0, 2), &rat(1, 2));
}

#[test]
fn structured_output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["poss", "duopoly.json"],
        &["em", "duopoly.json"],
        &["check-axiom", "ex2.json", "--axiom", "A6", "--subject", "v-minmax"],
        &["oracle-compare", "ex2.json", "--x-grid", "10"],
    ];
    for case in cases {
        let file = example(case[1]);
        let mut args: Vec<&str> = vec![case[0], path(&file)];
        args.extend(&case[2..]);
        args.extend(["--format", "structured", "--decimals", "4"]);
        let a = mcgame(&args);
        let b = mcgame(&args);
        assert!(a.status.success(), "{case:?}");
        assert_eq!(a.stdout, b.stdout, "{case:?}");
    }
}

#[test]
fn decimals_sit_beside_exact_values() {
    let doc = structured(&["security", path(&example("duopoly.json")), "--strategy", "1/3,2/3", "--decimals", "3"]);
    assert_eq!(doc["result"]["levels"][0], json!({"exact": "2/3", "decimal": "0.667"}));
}

#[test]
fn axiom_counterexamples_fail_with_replayable_witnesses() {
    let doc = structured(&["check-axiom", path(&example("ex2.json")), "--axiom", "A6", "--subject", "v-minmax"]);
    assert_eq!(doc["result"]["verdict"], json!("fails"));
    assert_eq!(doc["result"]["witness"]["kind"], json!("no_merge_weight"));
    assert_eq!(doc["result"]["witness_replays"], json!(true));
    let doc = structured(&["check-axiom", path(&example("ex3.json")), "--axiom", "A7", "--subject", "vposs", "--focus", "3/4"]);
    assert_eq!(doc["result"]["verdict"], json!("fails"));
    assert_eq!(doc["result"]["witness_replays"], json!(true));
}

#[test]
fn scalar_axiom_instances_from_flags() {
    let b = example("b.json");
    let lowered = example("b-lowered.json");
    let verdict = |args: &[&str]| structured(args)["result"]["verdict"].clone();
    assert_eq!(verdict(&["check-axiom", path(&b), "--axiom", "A1", "--subject", "h1", "--lower", path(&lowered)]), json!("holds"));
    assert_eq!(verdict(&["check-axiom", path(&b), "--axiom", "A2", "--subject", "val", "--add-column", "1:3,4"]), json!("holds"));
    assert_eq!(verdict(&["check-axiom", path(&b), "--axiom", "A3", "--subject", "h1", "--column", "1"]), json!("fails"));
    assert_eq!(verdict(&["check-axiom", path(&b), "--axiom", "A4", "--subject", "h1", "--add-row", "4,8"]), json!("holds"));
    assert_eq!(verdict(&["check-axiom", path(&b), "--axiom", "A5", "--subject", "h2", "--row", "1"]), json!("holds"));
}

#[test]
fn independence_table_lists_every_pair() {
    let doc = structured(&["independence-table"]);
    let cells = doc["result"]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 28);
    assert_eq!(cells.iter().filter(|c| c["separation"] == json!("external")).count(), 6);
    assert!(cells.iter().filter(|c| c["separation"] == json!("checked")).all(|c| c["verified"] == json!(true)));
    assert_eq!(doc["input"], Value::Null);
}

fn code(args: &[&str]) -> i32 {
    mcgame(args).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    let ex2 = example("ex2.json");
    let ex3 = example("ex3.json");
    let b = example("b.json");
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["solve", path(&ex2)]), 1);
    assert_eq!(code(&["poss", path(&ex3), "--bogus"]), 1);
    assert_eq!(code(&["poss"]), 1);
    assert_eq!(code(&["poss", path(&ex3), "--grid", "0"]), 1);
    assert_eq!(code(&["check-axiom", path(&b), "--axiom", "A1", "--subject", "val"]), 1);
    assert_eq!(code(&["check-axiom", path(&b), "--axiom", "A9", "--subject", "val"]), 1);
    assert_eq!(code(&["poss", path(&example("missing.json"))]), 2);
    assert_eq!(code(&["value", path(&ex2)]), 2);
    assert_eq!(code(&["check-axiom", path(&b), "--axiom", "A2", "--subject", "val", "--add-column", "1:9,9"]), 2);
    let args = ["check-axiom", path(&ex3), "--axiom", "A7", "--subject", "vposs"];
    assert_eq!(code(&args), 0);
    let mut strict = args.to_vec();
    strict.push("--fail-on-axiom-violation");
    assert_eq!(code(&strict), 4);
}

#[test]
fn input_errors_exit_two_with_context() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    };
    let half = write("half.json", r#"{"class": "scalar", "matrices": [[["0.5"]]]}"#);
    assert_eq!(structured(&["value", path(&half)])["result"]["value"], json!("1/2"));
    let rows = write("rows.json", r#"{"class": "d1", "m": 2, "matrices": [[["1", "0"]], [["0", "1"]]]}"#);
    let out = mcgame(&["minimax", path(&rows)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension error"));
    let float = write("float.json", "{\"class\": \"scalar\",\n\"matrices\": [[[1.5]]]}");
    let out = mcgame(&["value", path(&float)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("matrices[0][0][0]") && err.contains("line 2"), "{err}");
}

#[test]
fn text_matrix_layout() {
    let out = mcgame(&["amalgamate", path(&example("b.json"))]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "amalgamated game (2x2):\n  [3 5]\n  [2 7]\n");
}

#[test]
fn construction_fixtures_match_output() {
    for (cmd, fixture) in [("em", "duopoly-em.json"), ("product-game", "duopoly-product.json")] {
        let doc = structured(&[cmd, path(&example("duopoly.json"))]);
        let built = parse_game_str(&doc["result"]["game"].to_string(), "output").unwrap();
        let pinned = parse_game_str(&std::fs::read_to_string(example(fixture)).unwrap(), fixture).unwrap();
        assert_eq!(built.game, pinned.game, "{fixture}");
    }
}
