use std::path::Path;

use proptest::prelude::*;
use sqfree_lab::workbench::{run, run_corpus, Command, CorpusError, JobSpec, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION};
use sqfree_lab::FieldSpec;

fn corpus_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus"))
}

fn copy_input(dir: &Path, name: &str) {
    std::fs::copy(corpus_dir().join(name), dir.join(name)).unwrap();
}

#[test]
fn corrupted_expectation_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    copy_input(dir.path(), "simply.complex");
    std::fs::write(
        dir.path().join("cases.toml"),
        r#"
[[case]]
name = "right"
criterion = 4
command = "ccm"
input = "simply.complex"
expect = [{ pointer = "/result", value = true }]

[[case]]
name = "wrong"
criterion = 4
command = "ccm"
input = "simply.complex"
expect = [{ pointer = "/result", value = false }]
"#,
    )
    .unwrap();
    let summary = run_corpus(dir.path()).unwrap();
    assert!(!summary.all_passed());
    assert_eq!(summary.failures(), 1);
    let failures: Vec<_> = summary.results.iter().filter(|r| !r.passed).map(|r| r.name.clone()).collect();
    assert_eq!(failures, vec!["wrong".to_string()]);
    let text = summary.to_text();
    assert!(text.contains("1 passed, 1 failed"), "{text}");
}

#[test]
fn missing_input_and_empty_directory_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert!(matches!(run_corpus(dir.path()), Err(CorpusError::Empty(_))));
    assert!(matches!(run_corpus(&dir.path().join("absent")), Err(CorpusError::MissingDir(_))));
    std::fs::write(
        dir.path().join("cases.toml"),
        "[[case]]\nname = \"x\"\ncriterion = 1\ncommand = \"ccm\"\ninput = \"gone.complex\"\nexpect = []\n",
    )
    .unwrap();
    assert!(matches!(run_corpus(dir.path()), Err(CorpusError::MissingInput { .. })));
    std::fs::write(dir.path().join("cases.toml"), "[[case]]\nname = 3\n").unwrap();
    assert!(matches!(run_corpus(dir.path()), Err(CorpusError::Manifest { .. })));
}

#[test]
fn field_override_takes_precedence_over_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("pencil.ideal");
    std::fs::write(&p, "vars: 2\nchar: 3\nx1 + x2\nx1 + 4*x2\n").unwrap();
    let spec = JobSpec::new(Command::InitialIdeal, &p).json();
    let from_file: serde_json::Value = serde_json::from_str(&run(&spec).stdout).unwrap();
    assert_eq!(from_file["field"], 3);
    assert_eq!(from_file["result"], serde_json::json!(["x1"]));
    let over_q: serde_json::Value = serde_json::from_str(&run(&spec.with_field(FieldSpec::RATIONALS)).stdout).unwrap();
    assert_eq!(over_q["field"], 0);
    assert_eq!(over_q["result"], serde_json::json!(["x1", "x2"]));
}

#[test]
fn void_complex_is_a_precondition_failure() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("void.complex");
    std::fs::write(&p, "vertices: 4\n").unwrap();
    for command in [Command::Cm, Command::Buchsbaum, Command::Ccm, Command::Lyubeznik] {
        let o = run(&JobSpec::new(command, &p));
        assert_eq!(o.code, EXIT_PRECONDITION, "{command}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(run(&JobSpec::new(Command::DualGraph, &p)).code, EXIT_OK);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn arbitrary_bytes_give_an_exit_code(
        bytes in prop::collection::vec(any::<u8>(), 0..120),
        header in prop::sample::select(vec!["", "vertices: 4\n", "vars: 3\n", "vars: 2\nchar: 3\n"]),
        command in prop::sample::select(Command::ALL.to_vec()),
    ) {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("input");
        let mut content = header.as_bytes().to_vec();
        content.extend(bytes);
        std::fs::write(&p, content).unwrap();
        let outcome = std::panic::catch_unwind(|| run(&JobSpec::new(command, &p)));
        prop_assert!(outcome.is_ok(), "panic");
        let outcome = outcome.unwrap();
        prop_assert!((EXIT_OK..=EXIT_PRECONDITION).contains(&outcome.code));
        if outcome.code == EXIT_PARSE || outcome.code == EXIT_PRECONDITION {
            prop_assert!(!outcome.stderr.is_empty());
        }
    }

    #[test]
    fn line_noise_in_complex_files_is_rejected_cleanly(
        lines in prop::collection::vec("[0-9 {},a-z-]{0,12}", 0..6),
    ) {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("input.complex");
        std::fs::write(&p, format!("vertices: 5\n{}\n", lines.join("\n"))).unwrap();
        let o = run(&JobSpec::new(Command::Homology, &p));
        prop_assert!(o.code == EXIT_OK || o.code == EXIT_PARSE || o.code == EXIT_PRECONDITION);
    }
}
