use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::{Command, Output};

fn oddprime(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddprime")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = oddprime(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["divisor-sum", "10"]), "27\n");
    assert_eq!(stdout(&["pi-parity", "2", "10"]), "0\n");
    assert_eq!(stdout(&["pi-parity", "2", "11"]), "1\n");
    assert_eq!(stdout(&["two-omega", "2", "10"]), "22\n");
    assert_eq!(stdout(&["residue-parity", "10", "30", "4"]), "0101\n");
    assert_eq!(stdout(&["prime-poly", "10", "30", "--modulus", "t^4-1"]), "a\n");
    assert_eq!(stdout(&["prime-poly", "2", "5", "--modulus", "t-1"]), "1\n");
    assert_eq!(stdout(&["find-prime", "2"]), "3\n");
}

#[test]
fn exit_codes() {
    assert_eq!(oddprime(&["prime-poly", "2", "5", "--modulus", "t^x-1"]).status.code(), Some(2));
    assert_eq!(oddprime(&["prime-poly", "2", "5", "--modulus", "1"]).status.code(), Some(2));
    assert_eq!(oddprime(&["divisor-sum"]).status.code(), Some(2));
    assert_eq!(oddprime(&["no-such-command"]).status.code(), Some(2));
    let big = oddprime(&["divisor-sum", &((1u64 << 50) + 1).to_string()]);
    assert_eq!(big.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&big.stderr).contains("2^50"));
    assert_eq!(oddprime(&["pi-parity", "1", "10"]).status.code(), Some(1));
    assert_eq!(oddprime(&["residue-parity", "10", "30", "0"]).status.code(), Some(1));
}

fn random_args(rng: &mut ChaCha8Rng, round: usize) -> Vec<String> {
    let a = rng.gen_range(2..2_000_000u64);
    let b = a + rng.gen_range(0..3000u64);
    let mut args: Vec<String> = match round % 6 {
        0 => vec!["divisor-sum".into(), rng.gen_range(1..10_000_000u64).to_string()],
        1 => vec!["pi-parity".into(), a.to_string(), b.to_string()],
        2 => vec!["two-omega".into(), a.to_string(), b.to_string()],
        3 => vec!["find-prime".into(), rng.gen_range(2..1_000_000u64).to_string()],
        4 => {
            let g: u64 = rng.gen_range(2..u32::MAX as u64);
            vec![
                "prime-poly".into(),
                a.to_string(),
                b.to_string(),
                "--modulus".into(),
                format!("{g:x}").chars().rev().collect(),
            ]
        }
        _ => vec!["residue-parity".into(), a.to_string(), b.to_string(), rng.gen_range(1..13u64).to_string()],
    };
    if round.is_multiple_of(4) {
        args.extend(["--large-d-mode".into(), "sieve".into()]);
    }
    args
}

#[test]
fn oracle_twins_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..300 {
        let args = random_args(&mut rng, round);
        let fast: Vec<&str> = args.iter().map(String::as_str).collect();
        let mut slow = vec!["oracle"];
        slow.extend(&fast);
        assert_eq!(stdout(&fast), stdout(&slow), "{args:?}");
    }
}

#[test]
fn json_reproduces_plain_output() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for round in 0..24 {
        let args = random_args(&mut rng, round);
        let plain: Vec<&str> = args.iter().map(String::as_str).collect();
        let mut with_json = plain.clone();
        with_json.push("--json");
        let line = stdout(&with_json);
        assert_eq!(line.lines().count(), 1);
        let v: serde_json::Value = serde_json::from_str(&line).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["command", "inputs", "output", "work", "elapsed_ns"]);
        let out = match &v["output"] {
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        assert_eq!(out + "\n", stdout(&plain), "{args:?}");
    }
}

#[test]
fn bench_emits_one_line_per_point() {
    let out = stdout(&["bench", "divisor-sum", "--points", "1000000000,8000000000"]);
    let blocks: Vec<u64> = out
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["work"]["blocks"].as_u64().unwrap())
        .collect();
    assert_eq!(blocks.len(), 2);
    assert!(blocks[1] as f64 / blocks[0] as f64 <= 2.8);
    let out = stdout(&["bench", "residue-parity", "--points", "100000,1000000", "--q", "5"]);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["output"].as_str().unwrap().len(), 5);
    }
}
