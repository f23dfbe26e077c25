use std::io::Write as _;
use std::process::{Command, Output};

use clap::Parser;
use golod::session::parse_session;
use golod::{run, Cli, Flags};
use proptest::prelude::*;

const SESSION: &str = "ring x,y,z; ideal P = x*z, y*z; ideal M2 = x^2, x*y, y^2, x*z, y*z, z^2; ideal M = x, y, z; ideal C = x^2, y^2";

fn golod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golod"))
        .args(args)
        .output()
        .unwrap()
}

fn with_session<'a>(args: &[&'a str]) -> Vec<&'a str> {
    let mut v = args.to_vec();
    v.extend(["--inline", SESSION]);
    v
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn counterexample_exits_one_with_witness() {
    let o = golod(&with_session(&["check-strongly-golod", "P", "--json"]));
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["witness"]["normal_form"], "z^2");
    let o = golod(&with_session(&["check-strongly-golod", "M2"]));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("strongly Golod: yes"));
}

#[test]
fn errors_exit_two() {
    assert_eq!(
        golod(&with_session(&["betti", "Nope"])).status.code(),
        Some(2)
    );
    assert_eq!(golod(&with_session(&["power", "P"])).status.code(), Some(2));
    assert_eq!(
        golod(&["betti", "I", "--inline", "ring x,y; ideal I = x + y^2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(golod(&["no-such-command"]).status.code(), Some(2));
    let o = golod(&with_session(&["betti", "P", "--order", "lex"]));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--order"));
}

#[test]
fn every_command_follows_the_exit_contract() {
    let cases: &[(&[&str], i32)] = &[
        (&["derivative-ideal", "P"], 0),
        (&["power", "P", "--k", "2"], 0),
        (&["symbolic-power", "P", "--k", "2"], 0),
        (&["symbolic-power", "M2", "--k", "2", "--L", "M"], 0),
        (&["saturated-power", "P", "--k", "2"], 0),
        (&["colon", "M2", "M"], 0),
        (&["intersect", "P", "C"], 0),
        (&["sum", "P", "C"], 0),
        (&["product", "P", "M"], 0),
        (&["add-prime-power", "M2", "M", "--k", "2"], 0),
        (&["squarefree-symbolic", "P", "--k", "2"], 0),
        (&["integral-closure", "C"], 0),
        (&["primary-components", "P"], 0),
        (&["betti", "M2"], 0),
        (&["koszul-homology", "M2"], 0),
        (&["trivial-multiplication", "M2"], 0),
        (&["trivial-multiplication", "C"], 1),
        (&["poincare", "M2"], 0),
        (&["golod-verdict", "C"], 1),
        (&["odd-cycle-suite", "3", "5"], 0),
        (&["graph-search", "4"], 0),
        (
            &["product-search", "2", "--seed", "7", "--homological", "3"],
            0,
        ),
    ];
    for (args, code) in cases {
        let o = golod(&with_session(args));
        assert_eq!(
            o.status.code(),
            Some(*code),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let j = golod(&with_session(&[args, &["--json"][..]].concat()));
        assert_eq!(j.status.code(), Some(*code), "{args:?} --json");
        serde_json::from_slice::<serde_json::Value>(&j.stdout).unwrap();
    }
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["betti", "M2", "--json"][..],
        &["golod-verdict", "C", "--json"][..],
        &["integral-closure", "C", "--json"][..],
    ] {
        let a = golod(&with_session(args));
        let b = golod(&with_session(args));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn poincare_reports_golod_for_the_square_of_the_maximal_ideal() {
    let o = golod(&[
        "poincare",
        "I",
        "--homological",
        "4",
        "--inline",
        "ring x,y; ideal I = x^2, x*y, y^2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("GOLOD-up-to-truncation"), "{text}");
    assert!(text.contains("16*t^4*u^4"), "{text}");
}

#[test]
fn betti_grid() {
    let o = golod(&[
        "betti",
        "I",
        "--inline",
        "ring x,y; ideal I = x^2, x*y, y^2",
    ]);
    assert_eq!(stdout(&o), "          0    1    2\ntotal:    1    3    2\n    0:    1    .    .\n    1:    .    3    2\n");
}

#[test]
fn session_and_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("c5.graph"),
        "n 5\n1 2\n2 3\n3 4\n4 5\n5 1\n",
    )
    .unwrap();
    let path = dir.path().join("s.golod");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# pentagon\nring a,b,c,d,e\ngraph G = \"c5.graph\"").unwrap();
    let o = golod(&[
        "vertex-cover-ideal",
        "G",
        "--session",
        path.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["minimal_covers"], 5);
    assert_eq!(v["result"]["ring"]["variables"][0], "a");
    // Inline statements extend the file's ring.
    let o = golod(&[
        "check-strongly-golod",
        "J",
        "--session",
        path.to_str().unwrap(),
        "--inline",
        "ideal J = a*b, c*d",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn order_flag_prints_an_elimination_basis() {
    let o = golod(&[
        "intersect",
        "I",
        "J",
        "--order",
        "elim:1",
        "--inline",
        "ring x,y; ideal I = x; ideal J = y",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("x*y"));
}

#[test]
fn example_suite_passes() {
    let o = golod(&["examples"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    for anchor in [
        "Thm2d-power",
        "C5-symbolic-square",
        "product-counterexample",
        "Golod-series",
    ] {
        assert!(text.contains(anchor), "{anchor} missing");
    }
    assert!(!text.contains("FAIL"));
}

#[test]
fn flags_parse_globally() {
    let cli =
        Cli::try_parse_from(["golod", "--json", "power", "I", "--k", "3", "--L", "J"]).unwrap();
    assert!(cli.flags.json);
    assert_eq!(cli.flags.k, Some(3));
    assert_eq!(cli.flags.l.as_deref(), Some("J"));
}

fn ideal_text() -> impl Strategy<Value = Vec<String>> {
    // Cubic terms x^a*y^b*z^(3-a-b).
    let term = (1i64..=5, 0u32..=3, 0u32..=3)
        .prop_filter("degree 3", |t| t.1 + t.2 <= 3)
        .prop_map(|(c, a, b)| format!("{c}*x^{a}*y^{b}*z^{}", 3 - a - b));
    prop::collection::vec(
        prop::collection::vec(term, 1..=3).prop_map(|ts| ts.join(" + ")),
        1..=3,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn results_round_trip_through_the_session_grammar(gens in ideal_text()) {
        let text = format!("ring x,y,z\nideal I = {}\n", gens.join(", "));
        let session = parse_session(&text, None).unwrap();
        let flags = Flags { k: Some(2), ..Flags::default() };
        let report = run(&session, &golod::Command::Power { ideal: "I".into() }, &flags).unwrap();
        let shown: Vec<String> = report.json["result"]["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap().to_string()).collect();
        let back = parse_session(&format!("ring x,y,z\nideal Q = {}\n", shown.join(", ")), None).unwrap();
        let expected = golod_core::calculus::power(&session.ideals["I"], 2).unwrap();
        prop_assert_eq!(&back.ideals["Q"], &expected);
    }
}
