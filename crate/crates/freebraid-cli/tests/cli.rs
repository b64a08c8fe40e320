use std::io::Write;
use std::process::{Command, Output, Stdio};

fn freebraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_freebraid")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_freebraid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn act_sends_t1_to_t2() {
    let o = freebraid(&["act", "--n", "2", "1", "--", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn act_by_inverse_generator() {
    let o = freebraid(&["act", "--n", "2", "1", "--", "-1"]);
    assert_eq!(stdout(&o), "1 2 -1\n");
}

#[test]
fn not_planar_exits_one() {
    let o = freebraid(&["planar", "--n", "2", "1 -2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "NOT PLANAR\n");
}

#[test]
fn planar_prints_positions() {
    let o = freebraid(&["planar", "--n", "2", "1 2 -1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "PLANAR\n1 2 5 6 7 4 3 8\n");
}

#[test]
fn inverse_generator_is_below_identity() {
    let o = freebraid(&["compare", "--n", "2", "-1", ""]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "LT\n");
    assert_eq!(stdout(&freebraid(&["compare", "--n", "3", "2", "2"])), "EQ\n");
}

#[test]
fn classify_and_neg_form() {
    assert_eq!(stdout(&freebraid(&["classify", "--n", "3", "2 -1"])), "NEGATIVE\n");
    assert_eq!(stdout(&freebraid(&["classify", "--n", "3", "2"])), "NEUTRAL\n");
    let o = freebraid(&["neg-form", "--n", "3", "1"]);
    assert_eq!((code(&o), stdout(&o)), (1, "POSITIVE\n".to_string()));
}

#[test]
fn recover_round_trips_through_act() {
    let b = "1 -2 1 2";
    let images: Vec<String> = (1..=3)
        .map(|i| stdout(&freebraid(&["act", "--n", "3", &i.to_string(), "--", b])).trim().to_string())
        .collect();
    let args: Vec<&str> = ["recover", "--n", "3"].into_iter().chain(images.iter().map(String::as_str)).collect();
    let recovered = stdout(&freebraid(&args)).trim().to_string();
    for i in 1..=3 {
        let w = i.to_string();
        assert_eq!(
            stdout(&freebraid(&["act", "--n", "3", &w, "--", &recovered])),
            stdout(&freebraid(&["act", "--n", "3", &w, "--", b]))
        );
    }
}

#[test]
fn recover_reads_stdin() {
    let o = with_stdin(&["recover", "--n", "2"], "2\n-2 1 2\n");
    assert_eq!((code(&o), stdout(&o)), (0, "1\n".to_string()));
}

#[test]
fn non_braid_tuple_is_a_negative_decision() {
    let o = freebraid(&["recover", "--n", "2", "1", "1"]);
    assert_eq!((code(&o), stdout(&o)), (1, "NOT A BRAID\n".to_string()));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&freebraid(&["planar", "--n", "2", "1 x"])), 2);
    assert_eq!(code(&freebraid(&["planar", "--n", "2", "3"])), 2);
    assert_eq!(code(&freebraid(&["frobnicate"])), 2);
    assert_eq!(code(&freebraid(&["act", "1", "--", "1"])), 2);
    assert_eq!(code(&freebraid(&["cm", "act", "--n", "2", "1", "--", "1"])), 2);
    assert_eq!(code(&freebraid(&["verify", "no-such-suite"])), 2);
    assert_eq!(code(&freebraid(&["surface-check", "--n", "3"])), 2);
}

#[test]
fn ends_verbs() {
    assert_eq!(stdout(&freebraid(&["ends", "act", "--n", "2", "e | 1", "--", "1"])), "e | 2\n");
    assert_eq!(stdout(&freebraid(&["ends", "compare", "--n", "2", "e | 1", "e | -1"])), "LT\n");
    let o = freebraid(&["ends", "squarefree", "--n", "2", "e | 1"]);
    assert_eq!((code(&o), stdout(&o)), (1, "NOT SQUAREFREE\n".to_string()));
    assert_eq!(stdout(&freebraid(&["ends", "thurston-compare", "--n", "2", "-1", ""])), "LT\n");
}

#[test]
fn cyclic_product_verbs() {
    assert_eq!(stdout(&freebraid(&["cm", "act", "--n", "2", "--m", "3", "1^2", "--", "1"])), "2^2\n");
    let o = freebraid(&["cm", "recover", "--n", "2", "--m", "3", "2", "2^-1 1 2"]);
    assert_eq!((code(&o), stdout(&o)), (0, "1\n".to_string()));
}

#[test]
fn wada_and_surface() {
    assert_eq!(stdout(&freebraid(&["wada", "--n", "2", "--variant", "1", "1", "--", "1"])), "2\n");
    assert_eq!(code(&freebraid(&["wada", "--n", "2", "--variant", "7", "1", "--", "1"])), 2);
    let o = freebraid(&["surface-check", "--n", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn orbit_verbs() {
    assert_eq!(stdout(&freebraid(&["orbit", "--n", "3", "1 2 -1"])), "1\n1\n");
    assert_eq!(stdout(&freebraid(&["orbit", "--n", "3", "1 2"])), "2\ne\n");
    assert_eq!(stdout(&freebraid(&["orbit-tuple", "--n", "3", "1 2 -1", "1"])), "1\n");
    let o = freebraid(&["orbit-tuple", "--n", "3", "1", "1"]);
    assert_eq!((code(&o), stdout(&o)), (1, "NOT IN ORBIT\n".to_string()));
}

#[test]
fn diagram_writes_svg() {
    let path = std::env::temp_dir().join(format!("freebraid-{}.svg", std::process::id()));
    let o = freebraid(&["diagram", "--n", "2", "--out", path.to_str().unwrap(), "1 2 -1"]);
    assert_eq!(code(&o), 0);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code(&freebraid(&["diagram", "--n", "2", "--out", "unused.svg", "1 -2"])), 1);
}

#[test]
fn json_records_are_line_delimited() {
    let o = freebraid(&["--json", "orbit", "--n", "3", "1 2 -1"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("\"k\":1") && text.contains("\"witness\":\"1\"") && text.contains("\"positions\""));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "trichotomy", "--seed", "9", "--trials", "30", "--max-len", "6"];
    let a = freebraid(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, freebraid(&args).stdout);
}
