mod common;

use common::{check_transcript, esym, transcripts};

#[test]
fn transcripts_replay_byte_for_byte() {
    let all = transcripts();
    assert!(all.len() >= 5, "only {} transcripts", all.len());
    for t in &all {
        check_transcript(t).unwrap();
    }
}

#[test]
fn corpus_contains_the_required_cases() {
    let outputs: Vec<String> = transcripts()
        .iter()
        .map(|t| String::from_utf8_lossy(&t.stdout).into_owned())
        .collect();
    assert!(outputs.iter().any(|o| o.ends_with("epsilon[2][2] = (-5,10)\n")));
    assert!(transcripts().iter().any(|t| t.name.starts_with("wrap")));
}

#[test]
fn wrap_transcript_matches_reduced_exact_value() {
    // Exact ε_3 of the three inputs, reduced modulo 2^64 by hand:
    // re = -19807040610119340331118886911 ≡ -6442450943
    // im =  19807040610119340331118886911 ≡  6442450943
    use esym_core::{direct_eps, ExactComplex, Wrap64Complex};
    let a = i32::MAX as i64;
    let b = i32::MIN as i64;
    let xs = [ExactComplex::new(a, a), ExactComplex::new(a, b), ExactComplex::new(b, a)];
    let exact = direct_eps(&xs, 3);
    assert_eq!(exact.re.to_string(), "-19807040610119340331118886911");
    assert_eq!(exact.wrapped(), Wrap64Complex::new(-6442450943, 6442450943));
}

#[test]
fn exception_goes_to_stderr() {
    let run = esym(&["java-compat"], b"2\n1 2 3 4\n3 1\n");
    assert_eq!(run.status, 1);
    assert!(run.stderr.contains("java.lang.ArrayIndexOutOfBoundsException: 2"), "{}", run.stderr);
    let run = esym(&["java-compat"], b"1\n1 x\n");
    assert!(run.stderr.contains("java.util.InputMismatchException"), "{}", run.stderr);
}

#[test]
fn unwrapped_inputs_agree_with_exact_eps() {
    let run = esym(&["--json", "eps", "3-7i", "-9+2i", "5i", "8+8i"], b"");
    let v: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(v["rows"][3][2], serde_json::json!(["-561", "343"]));
    let compat = esym(&["java-compat"], b"4\n3 -7 -9 2 0 5 8 8\n4 3\n");
    assert!(String::from_utf8_lossy(&compat.stdout).ends_with("epsilon[4][3] = (-561,343)\n"));
}
