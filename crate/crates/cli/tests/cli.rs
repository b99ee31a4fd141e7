//! The installed binary: exit codes, stream usage and JSON stability.

use std::process::{Command, Output};

fn sprout(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sprout")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_row_and_exit_codes() {
    let o = sprout(&["expand", "--seed", "secsqrt", "--n", "3", "--basis", "h", "--scale", "fact2n"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "h[1,1,1] + 12·h[2,1] + 48·h[3]\n");

    let o = sprout(&["expand", "--seed", "secsqrt", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let o = sprout(&["oracle", "--op", "rp-hist", "--n", "7"]);
    assert_eq!(o.status.code(), Some(3));

    let o = sprout(&["positivity", "--seed", "one_plus_t", "--degree", "4", "--basis", "h", "--nmax", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["rp", "m-expansion", "schur-skew", "uio", "h-specials", "omega", "routes", "kronecker"] {
        let o = sprout(&["verify", "--suite", suite, "--nmax", "4"]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
    }
}

#[test]
fn json_round_trips_through_a_seed_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sec.json");
    std::fs::write(&path, r#"["1", "1/2", "5/24", "61/720", "277/8064"]"#).unwrap();
    let file_arg = format!("file:{}", path.display());
    let from_file = sprout(&["expand", "--seed", &file_arg, "--n", "4", "--basis", "s", "--format", "json"]);
    let from_catalog = sprout(&["expand", "--seed", "secsqrt", "--n", "4", "--basis", "s", "--format", "json"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&from_catalog));

    let text = stdout(&from_file);
    let f = sprout::json::symfunc_from_json(&text).unwrap();
    assert_eq!(sprout::json::symfunc_to_json(&f) + "\n", text);

    let short = sprout(&["expand", "--seed", &file_arg, "--n", "5", "--basis", "s"]);
    assert_eq!(short.status.code(), Some(3));
}

#[test]
fn seeds_list_names_the_catalog() {
    let o = sprout(&["seeds", "list"]);
    let text = stdout(&o);
    for name in ["one_plus_t", "geom", "qfn", "exp", "subset_exp", "secsqrt", "l_genus", "ahat", "decimate"] {
        assert!(text.contains(name), "{name}");
    }
}
