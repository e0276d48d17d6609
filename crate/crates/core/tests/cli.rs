//! Runs the built binary end to end.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diatomic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn fails(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(2), "{args:?} should exit 2");
    assert!(out.stdout.is_empty(), "{args:?} wrote to stdout");
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn documented_examples() {
    let cases: &[(&[&str], &str)] = &[
        (&["stern", "5"], "3"),
        (&["stern", "--sdi", "6", "51"], "12"),
        (&["design", "from-ratio", "7/3"], "11001"),
        (&["design", "of-theta", "2/3"], "(10)"),
        (&["design", "compose", "10", "101"], "10101"),
        (&["matrix", "of-design", "10101"], "5,8;3,5"),
        (&["matrix", "to-design", "5,7;2,3"], "11001"),
        (&["assembly", "eval", "1/2"], "1"),
        (&["assembly", "inverse", "7/3"], "11001 theta=25/32"),
        (&["quad", "sqrt", "2"], "period=(1001) equation: x^2 - 2 = 0"),
        (&["quad", "from-period", "10"], "x^2 - x - 1 = 0"),
        (&["quad", "purity", "5/6"], "non-pure"),
        (&["deriv", "classify", "1/2"], "diverges-to-infinity"),
        (&["deriv", "classify", "2/3"], "zero-if-differentiable"),
    ];
    for (args, want) in cases {
        assert_eq!(stdout_of(args), *want, "{args:?}");
    }
}

#[test]
fn sample_grid_is_strictly_increasing() {
    let csv = stdout_of(&["assembly", "sample", "--grid", "3", "--csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("theta_num,theta_den,val_num,val_den"));
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    assert!(rows.len() >= 8);
    for w in rows.windows(2) {
        // val_a/den_a < val_b/den_b, with 1/0 as the top value
        let (a, b) = (&w[0], &w[1]);
        assert!(a[2] * b[3] < b[2] * a[3] || (b[3] == 0 && a[3] != 0), "{a:?} {b:?}");
    }
}

#[test]
fn scan_at_one_half_follows_the_closed_form() {
    let csv = stdout_of(&["deriv", "scan", "1/2", "--side", "right", "--jmax", "6", "--csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("j,quotient"));
    let rows: Vec<String> = lines.map(str::to_string).collect();
    // h = 1/2 lands on the endpoint, so j starts at 2; the quotient is 2^j/(j-1)
    let want: Vec<String> = (2..=6u32)
        .map(|j| {
            let (p, q) = (1u64 << j, u64::from(j - 1));
            let g = gcd(p, q);
            if q / g == 1 { format!("{j},{}", p / g) } else { format!("{j},{}/{}", p / g, q / g) }
        })
        .collect();
    assert_eq!(rows, want);
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

#[test]
fn json_is_a_single_object() {
    let out = stdout_of(&["--json", "assembly", "inverse", "7/3"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.is_object(), "{out}");
    assert_eq!(out.lines().count(), 1);
}

#[test]
fn errors_exit_two_without_panicking() {
    fails(&["stern", "x"]);
    fails(&["stern", "--sdi", "2", "5"]);
    fails(&["design", "theta", "1021"]);
    fails(&["design", "from-ratio", "2/4"]);
    let msg = fails(&["matrix", "to-design", "2,2;1,1"]);
    assert!(msg.to_lowercase().contains("unimodular"), "{msg}");
    let msg = fails(&["quad", "sqrt", "4"]);
    assert!(msg.to_lowercase().contains("square"), "{msg}");
    fails(&["deriv", "classify", "3/2"]);
    fails(&["assembly", "eval", "3/2"]);
    fails(&["no-such-command"]);
    fails(&[]);
}

#[test]
fn output_is_deterministic() {
    let args = ["deriv", "scan", "2/3", "--jmax", "8", "--csv"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}
