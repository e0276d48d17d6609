//! Command-line front end. `run` is pure over its arguments so it can be
//! tested without spawning a process.

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::assembly::{
    assembly_enclose, assembly_inverse, assembly_of_rational_theta, question_mark_inverse,
    sample_grid, AssemblyValue,
};
use crate::derivative::{derivative_at_rational, quotient_scan, Side};
use crate::design::{
    compose, design_of_theta, euclidean_design, parse_design, Design, FiniteDesign, ThetaValue,
};
use crate::error::{Error, Result};
use crate::matrix::{apply_mobius, design_of_matrix, sdm, UniModMatrix};
use crate::quadratic::{
    classify_type, periodic_design_of_sqrt, purity_test, quad_from_period, quad_of_periodic,
};
use crate::rational::{parse_fraction, ExtRational};
use crate::sdi::{sdi, stern, SdiAddress};

#[derive(Parser, Debug)]
#[command(name = "diatomic", version, about = "Exact Stern diatomic arithmetic")]
struct Cli {
    /// Print one JSON object instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stern's sequence a_m, or [2^n:m] with --sdi n
    Stern {
        #[arg(long, value_name = "N")]
        sdi: Option<u64>,
        m: String,
    },
    /// Design words
    #[command(subcommand)]
    Design(DesignCmd),
    /// Unimodular matrices
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// The assembly function
    #[command(subcommand)]
    Assembly(AssemblyCmd),
    /// Periodic designs and quadratic irrationals
    #[command(subcommand)]
    Quad(QuadCmd),
    /// Difference quotients at rational points
    #[command(subcommand)]
    Deriv(DerivCmd),
}

#[derive(Subcommand, Debug)]
enum DesignCmd {
    /// Euclidean design of a coprime pair a/b
    FromRatio { ratio: String },
    /// Binary decimal of a design
    Theta { design: String },
    /// Design of a rational decimal in [0, 1]
    OfTheta { theta: String },
    /// Conjugate design
    Conj { design: String },
    /// Inverse design (reversed runs)
    Inv { design: String },
    /// Strip trailing zeros
    Reduce { design: String },
    /// Concatenate a finite design with any design
    Compose { first: String, second: String },
    /// Run lengths
    Runs { design: String },
    /// Design number m and length n
    Number { design: String },
    /// Reduced and primitive predicates
    Props { design: String },
}

#[derive(Subcommand, Debug)]
enum MatrixCmd {
    /// U(D) as a,b;c,d
    OfDesign { design: String },
    /// The design of a nonnegative unimodular matrix
    ToDesign { matrix: String },
    /// Möbius action on a nonnegative rational or inf
    Apply { matrix: String, x: String },
}

#[derive(Args, Debug)]
struct GridArgs {
    /// Sample at m/2^k for m = 0..2^k
    #[arg(long)]
    grid: usize,
    /// Emit CSV rows theta_num,theta_den,val_num,val_den
    #[arg(long)]
    csv: bool,
}

#[derive(Subcommand, Debug)]
enum AssemblyCmd {
    /// Value at a rational decimal
    Eval { theta: String },
    /// Reduced design with the given value
    Inverse { value: String },
    /// Enclosure from the first n bits
    Enclose {
        bits: String,
        #[arg(long)]
        n: usize,
    },
    /// Inverse Minkowski question mark at a dyadic decimal
    QmInverse { theta: String },
    /// Grid samples
    Sample(GridArgs),
}

#[derive(Subcommand, Debug)]
enum QuadCmd {
    /// Fixed-point equation of a period
    FromPeriod { period: String },
    /// Periodic design of a square root
    Sqrt { value: String },
    /// Type 1-4 of a period
    Classify { period: String },
    /// Purity of the value at a rational decimal
    Purity { theta: String },
    /// Equation of an eventually periodic design
    OfPeriodic { design: String },
}

#[derive(Subcommand, Debug)]
enum DerivCmd {
    /// One-sided difference quotients at h = 2^-j
    Scan {
        eta: String,
        #[arg(long, default_value = "right")]
        side: String,
        #[arg(long, default_value_t = 10)]
        jmax: u32,
        #[arg(long)]
        csv: bool,
    },
    /// Derivative verdict at a rational point
    Classify { eta: String },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Human text and the JSON object for one result.
struct Report {
    text: String,
    json: Value,
}

impl Report {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Report {
            text: text.into(),
            json,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(r) => {
            let mut stdout = if cli.json { r.json.to_string() } else { r.text };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn nat(s: &str) -> Result<BigUint> {
    let (n, d) = parse_fraction(s)?;
    if d != BigUint::from(1u32) {
        return Err(Error::Syntax(format!("expected a natural number, got {s:?}")));
    }
    Ok(n)
}

fn finite(s: &str) -> Result<FiniteDesign> {
    match parse_design(s)? {
        Design::Finite(d) => Ok(d),
        Design::Periodic(p) => Err(Error::Syntax(format!("{p} is not a finite design"))),
    }
}

fn theta(s: &str) -> Result<ThetaValue> {
    s.parse()
}

fn dispatch(cmd: Command) -> Result<Report> {
    match cmd {
        Command::Stern { sdi: depth, m } => {
            let m = nat(&m)?;
            let v = match depth {
                Some(n) => sdi(&SdiAddress::new(n, m))?,
                None => stern(&m),
            };
            Ok(Report::new(v.to_string(), json!({ "value": v.to_string() })))
        }
        Command::Design(c) => design_cmd(c),
        Command::Matrix(c) => matrix_cmd(c),
        Command::Assembly(c) => assembly_cmd(c),
        Command::Quad(c) => quad_cmd(c),
        Command::Deriv(c) => deriv_cmd(c),
    }
}

fn design_report(d: &Design) -> Report {
    Report::new(d.to_string(), json!({ "design": d.to_string() }))
}

fn design_cmd(cmd: DesignCmd) -> Result<Report> {
    match cmd {
        DesignCmd::FromRatio { ratio } => {
            let (a, b) = parse_fraction(&ratio)?;
            Ok(design_report(&euclidean_design(&a, &b)?.into()))
        }
        DesignCmd::Theta { design } => {
            let t = parse_design(&design)?.theta();
            Ok(Report::new(t.to_string(), json!({ "theta": t.to_string() })))
        }
        DesignCmd::OfTheta { theta: t } => Ok(design_report(&design_of_theta(&theta(&t)?))),
        DesignCmd::Conj { design } => Ok(design_report(&parse_design(&design)?.conjugate())),
        DesignCmd::Inv { design } => Ok(design_report(&finite(&design)?.inverse()?.into())),
        DesignCmd::Reduce { design } => Ok(design_report(&finite(&design)?.reduce().into())),
        DesignCmd::Compose { first, second } => {
            Ok(design_report(&compose(&finite(&first)?, &parse_design(&second)?)?))
        }
        DesignCmd::Runs { design } => {
            let r = finite(&design)?.runs()?;
            Ok(Report::new(r.to_string(), json!({ "runs": r.as_slice() })))
        }
        DesignCmd::Number { design } => {
            let (m, n) = finite(&design)?.design_number();
            Ok(Report::new(
                format!("{m} {n}"),
                json!({ "m": m.to_string(), "n": n }),
            ))
        }
        DesignCmd::Props { design } => {
            let d = finite(&design)?;
            let (r, p) = (d.is_reduced(), d.is_primitive());
            Ok(Report::new(
                format!("reduced={r} primitive={p}"),
                json!({ "reduced": r, "primitive": p }),
            ))
        }
    }
}

fn matrix_cmd(cmd: MatrixCmd) -> Result<Report> {
    match cmd {
        MatrixCmd::OfDesign { design } => {
            let u = sdm(&finite(&design)?)?;
            Ok(Report::new(u.to_string(), json!({ "matrix": u.to_string() })))
        }
        MatrixCmd::ToDesign { matrix } => {
            let u: UniModMatrix = matrix.parse()?;
            Ok(design_report(&design_of_matrix(&u).into()))
        }
        MatrixCmd::Apply { matrix, x } => {
            let u: UniModMatrix = matrix.parse()?;
            let x: ExtRational = x.parse()?;
            let v = apply_mobius(&u, &x);
            Ok(Report::new(v.to_string(), json!({ "value": v.to_string() })))
        }
    }
}

fn assembly_cmd(cmd: AssemblyCmd) -> Result<Report> {
    match cmd {
        AssemblyCmd::Eval { theta: t } => match assembly_of_rational_theta(&theta(&t)?)? {
            AssemblyValue::Rational(v) => {
                Ok(Report::new(v.to_string(), json!({ "value": v.to_string() })))
            }
            AssemblyValue::Quadratic(q) => Ok(Report::new(
                format!("{} root={}", q, q.value()),
                json!({ "equation": q.to_string(), "root": q.value().to_string() }),
            )),
        },
        AssemblyCmd::Inverse { value } => {
            let v: ExtRational = value.parse()?;
            let d = assembly_inverse(&v);
            let t = d.theta();
            Ok(Report::new(
                format!("{d} theta={t}"),
                json!({ "design": d.to_string(), "theta": t.to_string() }),
            ))
        }
        AssemblyCmd::Enclose { bits, n } => {
            let d = finite(&bits)?;
            if d.is_terminal() {
                return Err(Error::TerminalDesign);
            }
            let e = assembly_enclose(d.bits(), n)?;
            Ok(Report::new(
                format!("{} {}", e.lo, e.hi),
                json!({ "lo": e.lo.to_string(), "hi": e.hi.to_string(), "bits_used": e.bits_used }),
            ))
        }
        AssemblyCmd::QmInverse { theta: t } => {
            let v = question_mark_inverse(&theta(&t)?)?;
            Ok(Report::new(v.to_string(), json!({ "value": v.to_string() })))
        }
        AssemblyCmd::Sample(g) => {
            let rows = sample_grid(g.grid);
            let text = if g.csv {
                let mut s = String::from("theta_num,theta_den,val_num,val_den\n");
                for (t, v) in &rows {
                    s += &format!("{},{},{},{}\n", t.numer(), t.denom(), v.numer(), v.denom());
                }
                s
            } else {
                rows.iter().map(|(t, v)| format!("{t} {v}\n")).collect()
            };
            let json_rows: Vec<Value> = rows
                .iter()
                .map(|(t, v)| json!({ "theta": t.to_string(), "value": v.to_string() }))
                .collect();
            Ok(Report::new(text, json!({ "samples": json_rows })))
        }
    }
}

fn quad_cmd(cmd: QuadCmd) -> Result<Report> {
    match cmd {
        QuadCmd::FromPeriod { period } => {
            let q = quad_from_period(&finite(&period)?)?;
            Ok(Report::new(
                q.to_string(),
                json!({ "equation": q.to_string(), "root": q.value().to_string() }),
            ))
        }
        QuadCmd::Sqrt { value } => {
            let v: ExtRational = value.parse()?;
            let p = periodic_design_of_sqrt(&v)?;
            let q = quad_of_periodic(&p)?;
            Ok(Report::new(
                format!("period={p} equation: {q}"),
                json!({ "design": p.to_string(), "equation": q.to_string() }),
            ))
        }
        QuadCmd::Classify { period } => {
            let t = classify_type(&finite(&period)?)?;
            Ok(Report::new(format!("type {t}"), json!({ "type": t })))
        }
        QuadCmd::Purity { theta: t } => {
            let p = purity_test(&theta(&t)?);
            Ok(Report::new(p.to_string(), json!({ "purity": p.to_string() })))
        }
        QuadCmd::OfPeriodic { design } => {
            let Design::Periodic(p) = parse_design(&design)? else {
                return Err(Error::Syntax(format!("{design} is not periodic")));
            };
            let q = quad_of_periodic(&p)?;
            Ok(Report::new(
                format!("{} root={}", q, q.value()),
                json!({ "equation": q.to_string(), "root": q.value().to_string() }),
            ))
        }
    }
}

fn deriv_cmd(cmd: DerivCmd) -> Result<Report> {
    match cmd {
        DerivCmd::Scan { eta, side, jmax, csv } => {
            let side: Side = side.parse()?;
            let scan = quotient_scan(&theta(&eta)?, side, jmax)?;
            let text = if csv {
                let mut s = String::from("j,quotient\n");
                for (j, q) in &scan.samples {
                    s += &format!("{j},{q}\n");
                }
                s
            } else {
                scan.samples.iter().map(|(j, q)| format!("j={j} {q}\n")).collect()
            };
            let rows: Vec<Value> = scan
                .samples
                .iter()
                .map(|(j, q)| json!({ "j": j, "quotient": q.to_string() }))
                .collect();
            Ok(Report::new(text, json!({ "samples": rows })))
        }
        DerivCmd::Classify { eta } => {
            let v = derivative_at_rational(&theta(&eta)?)?;
            Ok(Report::new(v.to_string(), json!({ "verdict": v.to_string() })))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &str) -> Outcome {
        run(std::iter::once("diatomic").chain(args.split_whitespace()))
    }

    fn line(args: &str) -> String {
        let o = out(args);
        assert_eq!(o.code, 0, "{args}: {}", o.stderr);
        o.stdout.trim_end().to_string()
    }

    #[test]
    fn stern_commands() {
        assert_eq!(line("stern 5"), "3");
        assert_eq!(line("stern --sdi 6 51"), "12");
        assert_eq!(out("stern x").code, 2);
        assert_eq!(out("stern --sdi 2 5").code, 2);
    }

    #[test]
    fn design_commands() {
        assert_eq!(line("design from-ratio 7/3"), "11001");
        assert_eq!(line("design of-theta 2/3"), "(10)");
        assert_eq!(line("design compose 10 101"), "10101");
        assert_eq!(line("design compose 1 (01)"), "(10)");
        assert_eq!(line("design theta (1001)"), "3/5");
        assert_eq!(line("design conj 11001"), "00111");
        assert_eq!(line("design inv 11001"), "10011");
        assert_eq!(line("design reduce 10100"), "101");
        assert_eq!(line("design runs 0110"), "0,1,2,1,0");
        assert_eq!(line("design number 100t"), "4 2");
        assert_eq!(line("design props 0101"), "reduced=true primitive=false");
        assert_eq!(out("design from-ratio 4/6").code, 2);
    }

    #[test]
    fn matrix_commands() {
        assert_eq!(line("matrix of-design 10101"), "5,8;3,5");
        assert_eq!(line("matrix to-design 5,7;2,3"), "11001");
        assert_eq!(line("matrix apply 2,3;1,2 3"), "9/5");
        let o = out("matrix to-design 2,2;1,1");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("not unimodular"));
    }

    #[test]
    fn assembly_commands() {
        assert_eq!(line("assembly eval 1/2"), "1");
        assert_eq!(line("assembly inverse 7/3"), "11001 theta=25/32");
        assert_eq!(line("assembly enclose 1010101010 --n 4"), "3/2 5/3");
        assert_eq!(line("assembly qm-inverse 3/4"), "2/3");
        let csv = line("assembly sample --grid 3 --csv");
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 8);
        assert!(line("assembly eval 2/3").starts_with("x^2 - x - 1 = 0"));
    }

    #[test]
    fn quad_commands() {
        assert_eq!(line("quad sqrt 2"), "period=(1001) equation: x^2 - 2 = 0");
        assert_eq!(line("quad from-period 10"), "x^2 - x - 1 = 0");
        assert_eq!(line("quad purity 5/6"), "non-pure");
        assert_eq!(line("quad classify 1001"), "type 2");
        let o = out("quad sqrt 9");
        assert_eq!(o.code, 2);
        assert!(o.stderr.contains("perfect square"));
    }

    #[test]
    fn deriv_commands() {
        assert_eq!(line("deriv classify 1/2"), "diverges-to-infinity");
        assert_eq!(line("deriv classify 2/3"), "zero-if-differentiable");
        let csv = line("deriv scan 1/2 --side right --jmax 4 --csv");
        assert_eq!(csv, "j,quotient\n2,4\n3,4\n4,16/3");
    }

    #[test]
    fn json_output_is_one_object() {
        let o = out("--json design from-ratio 7/3");
        let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
        assert_eq!(v["design"], "11001");
        let o = out("assembly inverse 7/3 --json");
        let v: Value = serde_json::from_str(o.stdout.trim()).unwrap();
        assert_eq!(v["theta"], "25/32");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(out("").code, 2);
        assert_eq!(out("bogus").code, 2);
        assert_eq!(out("design").code, 2);
        assert_eq!(out("--help").code, 0);
    }
}
