use std::fs;
use std::process::{Command, Output};

fn smotzkin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smotzkin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(
        smotzkin(&["validate", "path", "FUFUFUDDD"]).status.code(),
        Some(0)
    );
    assert_eq!(
        smotzkin(&["validate", "path", "UFD"]).status.code(),
        Some(1)
    );
    assert_eq!(
        smotzkin(&["validate", "path", "FXD"]).status.code(),
        Some(1)
    );
    assert_eq!(
        smotzkin(&["validate", "cube", "FUD"]).status.code(),
        Some(2)
    );
    assert_eq!(smotzkin(&["validate", "path"]).status.code(), Some(2));
    assert_eq!(
        smotzkin(&["enumerate", "tree", "--n", "13"]).status.code(),
        Some(2)
    );
    assert_eq!(
        smotzkin(&["convert", "--from", "tree", "--to", "path", "--t", "2", "(..)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(smotzkin(&["render", "tree", "(..)"]).status.code(), Some(1));
    assert_eq!(
        smotzkin(&["count", "--n", "4", "--brute"]).status.code(),
        Some(0)
    );
}

#[test]
fn convert_table_row() {
    let o = smotzkin(&["convert", "--from", "path", "--to", "tree", "FUDFUDFUD"]);
    assert_eq!(stdout(&o), "(((...)..)..)\n");
    let o = smotzkin(&["convert", "--from", "tree", "--to", "path", "(..(..(...)))"]);
    assert_eq!(stdout(&o), "FUFUFUDDD\n");
}

#[test]
fn batch_mode_keeps_line_alignment() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("paths.txt");
    fs::write(&file, "FUD\nUFD\nFUFUFUDDD\n\n").unwrap();
    let file = file.to_str().unwrap();

    let o = smotzkin(&["convert", "--from", "path", "--to", "tree", "--file", file]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "(...)\nBadFlatUpAlternation\n(..(..(...)))\n.\n"
    );

    let o = smotzkin(&["validate", "path", "--file", file]);
    assert_eq!(stdout(&o), "valid\nBadFlatUpAlternation\nvalid\nvalid\n");

    fs::write(dir.path().join("ok.txt"), "FUD\nFUFDUD\n").unwrap();
    let ok = dir.path().join("ok.txt");
    let o = smotzkin(&["validate", "path", "--file", ok.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));

    let o = smotzkin(&["validate", "path", "--file", "/nonexistent/input.txt"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        smotzkin(&["validate", "path", "FUD", "--file", file])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic_ascii() {
    let runs = [
        vec!["enumerate", "tree", "--n", "4"],
        vec!["enumerate", "path", "--n", "3", "--t", "4"],
        vec!["render", "path", "FUFUFDUDFUDDFUFUDFDUD"],
        vec!["check", "--max-n", "2", "--t", "2,3"],
    ];
    for args in &runs {
        let a = smotzkin(args);
        let b = smotzkin(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.stdout.is_ascii());
        assert_eq!(a.status.code(), Some(0), "{args:?}");
    }
}
