//! Command-line front end; the `cfkl` binary is a thin wrapper around [`run`].
//!
//! Exit status: 0 on success, 1 when an identity or numeric check fails,
//! 2 on a usage error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::exact::Poly;
use crate::identities::{reports_json, run_suite, select, IdentityReport};
use crate::kl::{
    family, family_row_json, kl_forward, kl_inverse, table1_csv, table1_json, table1_text,
    table_style, Family, KLKind,
};
use crate::numbers::{NumberSeq, SeqKind, Triangle, TriangleKind};
use crate::numeric::{
    verify_euler_integral, verify_genocchi_integral, verify_kl_monomial, verify_moments_k0,
    NumericCheck,
};

#[derive(Parser, Debug)]
#[command(name = "cfkl", version, about = "Central factorials and the KL transform on polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Opts {
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true)]
    pub suite: Option<String>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub family: Option<FamilyArg>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "P")]
    P,
    #[value(name = "Ptilde")]
    Ptilde,
    #[value(name = "Phat")]
    Phat,
    #[value(name = "euler")]
    Euler,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqArg {
    Bernoulli,
    Genocchi,
    Euler,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TriangleArg {
    #[value(name = "t")]
    First,
    #[value(name = "T")]
    Second,
    #[value(name = "stirling2")]
    Stirling2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    S,
    C,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bernoulli, Genocchi or Euler numbers 0..=max-n.
    Numbers { seq: SeqArg },
    /// A triangle of rows 0..=max-n.
    Triangle { kind: TriangleArg },
    /// Family members: one with --n, else 0..=max-n.
    Poly,
    /// P_0..P_max and Phat_0..Phat_max (default max-n 9).
    Table1,
    /// Forward (or --inverse) transform of a JSON coefficient array, of x^n
    /// with --n, or of a family member with --family and --n.
    Kl {
        kind: KindArg,
        poly: Option<String>,
        #[arg(long)]
        inverse: bool,
    },
    /// Identity checks for orders 0..=max-n (default 12).
    Verify,
    /// Quadrature checks; --suite moments|genocchi|euler|kl|all.
    Quad,
}

struct Usage(String);

fn usage(msg: impl Into<String>) -> Usage {
    Usage(msg.into())
}

/// Parses `argv` (program name first), writes the artifact to `out` and
/// diagnostics to `err`, and returns the exit status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) {
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Usage> {
    let o = &cli.opts;
    if let Some(t) = o.tol {
        if !(t > 0.0) {
            return Err(usage("--tol must be positive"));
        }
    }
    match &cli.command {
        Command::Numbers { seq } => {
            let kind = match seq {
                SeqArg::Bernoulli => SeqKind::Bernoulli,
                SeqArg::Genocchi => SeqKind::Genocchi,
                SeqArg::Euler => SeqKind::EulerNumber,
            };
            let s = NumberSeq::new(kind, o.max_n.unwrap_or(10));
            let text = match o.format {
                Format::Json => serde_json::to_string(&s.values).expect("serializes"),
                Format::Csv => s.to_csv(),
                Format::Text => s
                    .values
                    .iter()
                    .enumerate()
                    .map(|(n, v)| format!("{n} {v}\n"))
                    .collect(),
            };
            emit(out, &text);
            Ok(0)
        }
        Command::Triangle { kind } => {
            let kind = match kind {
                TriangleArg::First => TriangleKind::CentralFirst,
                TriangleArg::Second => TriangleKind::CentralSecond,
                TriangleArg::Stirling2 => TriangleKind::Stirling2,
            };
            let tri = Triangle::build(kind, o.max_n.unwrap_or(10));
            let text = match o.format {
                Format::Json => tri.to_json(),
                Format::Csv => tri.to_csv(),
                Format::Text => tri.to_csv().replace(',', " "),
            };
            emit(out, &text);
            Ok(0)
        }
        Command::Poly => {
            let fam = o.family.unwrap_or(FamilyArg::P);
            let range = match (o.n, o.max_n) {
                (Some(n), _) => n..=n,
                (None, max) => 0..=max.unwrap_or(9),
            };
            let rows: Vec<(usize, Poly)> = range.map(|n| (n, member(fam, n))).collect();
            let text = match o.format {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(n, p)| match to_family(fam) {
                            Some(f) => family_row_json(f, *n),
                            None => serde_json::json!({"family": "euler", "n": n, "coeffs": p}),
                        })
                        .collect();
                    serde_json::to_string(&v).expect("serializes")
                }
                Format::Csv => {
                    let mut s = String::from("family,n,polynomial\n");
                    for (n, p) in &rows {
                        s.push_str(&format!("{},{n},{}\n", label(fam), table_style(p)));
                    }
                    s
                }
                Format::Text => rows
                    .iter()
                    .map(|(n, p)| format!("{}_{n}(x) = {}\n", label(fam), table_style(p)))
                    .collect(),
            };
            emit(out, &text);
            Ok(0)
        }
        Command::Table1 => {
            let m = o.max_n.unwrap_or(9);
            let text = match o.format {
                Format::Json => table1_json(m),
                Format::Csv => table1_csv(m),
                Format::Text => table1_text(m),
            };
            emit(out, &text);
            Ok(0)
        }
        Command::Kl { kind, poly, inverse } => {
            let kind = match kind {
                KindArg::S => KLKind::S,
                KindArg::C => KLKind::C,
            };
            let input = match (poly, o.family, o.n) {
                (Some(src), _, _) => serde_json::from_str::<Poly>(src)
                    .map_err(|e| usage(format!("polynomial must be a JSON array of \"p/q\" strings: {e}")))?,
                (None, Some(f), Some(n)) => member(f, n),
                (None, None, Some(n)) => Poly::monomial(crate::exact::Rational::one(), n),
                _ => return Err(usage("kl needs a JSON polynomial, --n, or --family with --n")),
            };
            let image = if *inverse {
                kl_inverse(kind, &input)
            } else {
                kl_forward(kind, &input)
            };
            let text = match o.format {
                Format::Json => serde_json::to_string(&image).expect("serializes"),
                _ => {
                    let var = if *inverse { "x" } else { "tau" };
                    image.display_var(var).to_string()
                }
            };
            emit(out, &text);
            Ok(0)
        }
        Command::Verify => {
            let suite = o.suite.as_deref().unwrap_or("all");
            if select(suite).is_empty() {
                return Err(usage(format!("no identity matches suite {suite:?}")));
            }
            let reports = run_suite(suite, o.max_n.unwrap_or(12));
            let text = match o.format {
                Format::Json => reports_json(&reports),
                Format::Csv => {
                    let mut s = String::from("identity_id,n_min,n_max,status\n");
                    for r in &reports {
                        s.push_str(&format!(
                            "{},{},{},{}\n",
                            r.identity_id,
                            r.n_range.0,
                            r.n_range.1,
                            status_word(r)
                        ));
                    }
                    s
                }
                Format::Text => reports.iter().map(report_line).collect(),
            };
            emit(out, &text);
            Ok(if reports.iter().all(IdentityReport::passed) { 0 } else { 1 })
        }
        Command::Quad => {
            let suite = o.suite.as_deref().unwrap_or("all");
            let want = |name: &str| suite == "all" || suite == name;
            if !["all", "moments", "genocchi", "euler", "kl"].contains(&suite) {
                return Err(usage(format!("unknown quad suite {suite:?}")));
            }
            let mut checks: Vec<NumericCheck> = Vec::new();
            if want("moments") {
                checks.extend(verify_moments_k0(o.max_n.unwrap_or(8), o.tol.unwrap_or(1e-8)));
            }
            if want("genocchi") {
                checks.extend(verify_genocchi_integral(o.max_n.unwrap_or(6), o.tol.unwrap_or(1e-8)));
            }
            if want("euler") {
                checks.extend(verify_euler_integral(o.max_n.unwrap_or(6), o.tol.unwrap_or(1e-8)));
            }
            if want("kl") {
                for n in 0..=o.max_n.unwrap_or(4).min(6) {
                    checks.extend(verify_kl_monomial(n, &[0.25, 1.0, 2.5], o.tol.unwrap_or(1e-6)));
                }
            }
            let text = match o.format {
                Format::Json => serde_json::to_string_pretty(&checks).expect("serializes"),
                Format::Csv => {
                    let mut s = String::from("name,computed,expected,rel_error,passed\n");
                    for c in &checks {
                        s.push_str(&format!(
                            "{},{:e},{:e},{:e},{}\n",
                            c.name, c.computed, c.expected, c.rel_error, c.passed
                        ));
                    }
                    s
                }
                Format::Text => checks
                    .iter()
                    .map(|c| {
                        format!(
                            "{} {} computed={:.12e} expected={:.12e} rel_error={:.2e}\n",
                            if c.passed { "PASS" } else { "FAIL" },
                            c.name,
                            c.computed,
                            c.expected,
                            c.rel_error
                        )
                    })
                    .collect(),
            };
            emit(out, &text);
            Ok(if checks.iter().all(|c| c.passed) { 0 } else { 1 })
        }
    }
}

fn to_family(f: FamilyArg) -> Option<Family> {
    match f {
        FamilyArg::P => Some(Family::P),
        FamilyArg::Ptilde => Some(Family::PTilde),
        FamilyArg::Phat => Some(Family::PHat),
        FamilyArg::Euler => None,
    }
}

fn member(f: FamilyArg, n: usize) -> Poly {
    match to_family(f) {
        Some(fam) => family(fam, n).as_ref().clone(),
        None => crate::euler::euler_poly(n).poly,
    }
}

fn label(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::P => "P",
        FamilyArg::Ptilde => "Ptilde",
        FamilyArg::Phat => "Phat",
        FamilyArg::Euler => "E",
    }
}

fn status_word(r: &IdentityReport) -> &'static str {
    if r.passed() {
        "pass"
    } else {
        "fail"
    }
}

fn report_line(r: &IdentityReport) -> String {
    let mut s = format!(
        "{} {} n={}..={}",
        status_word(r).to_uppercase(),
        r.identity_id,
        r.n_range.0,
        r.n_range.1
    );
    if let Some(w) = &r.first_failure {
        s.push_str(&format!(" first failure at n={} {}: {} != {}", w.n, w.detail, w.lhs, w.rhs));
    }
    s.push('\n');
    s
}
