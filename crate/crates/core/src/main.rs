//! Command-line front end: exact evaluation of the sums and counts, the
//! verification sweeps with their errata reports, and naive-vs-fast
//! benchmarks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use hardy_sums::dedekind::{dedekind_fast, dedekind_naive, dedekind_symbol, rademacher_cocycle};
use hardy_sums::error::{Error, Result};
use hardy_sums::exact::{gcd, parse_boundary_point, BoundaryPoint};
use hardy_sums::hardy::{s4_naive, s_matrix, s_naive};
use hardy_sums::lattice::{
    count_tetra_brute, count_tetra_mordell, count_tetra_mordell2, count_triangle_2z2_closed,
    count_triangle_z2_closed, BruteForceBudget,
};
use hardy_sums::modgroup::{decompose_theta, UniModMatrix};
use hardy_sums::net::{
    crossing_bound, enumerate_crossings, intersection_number, phi_intersect, scan_size_estimate,
    vertical_geodesic,
};
use hardy_sums::verify::{run_suite, VerifyReport};

#[derive(Parser)]
#[command(
    name = "hardy-sums",
    version,
    about = "Exact Dedekind/Hardy sums, lattice counts, and geodesic crossing numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cap on brute-force loop iterations (also HARDY_SUMS_MAX_ITERATIONS).
    #[arg(long, global = true)]
    max_iterations: Option<u64>,

    /// Emit machine-readable JSON where the default output is human-readable.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Dedekind sum s(d, c) by direct summation.
    Dedekind {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Dedekind sum s(d, c) via the reciprocity recursion.
    DedekindFast {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Hardy sum S4(d, c) (alternating sum, d odd).
    S4 {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Hardy sum S(d, c) (alternating sum, c + d odd).
    S {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// The Hardy sum of a matrix [[a, b], [c, d]] in gamma_theta.
    FrakS {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Dedekind symbol of a matrix [[a, b], [c, d]].
    Phi {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Rademacher cocycle -sign(cA cB cAB) for two matrices.
    Cocycle {
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        b1: String,
        #[arg(allow_hyphen_values = true)]
        c1: String,
        #[arg(allow_hyphen_values = true)]
        d1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        b2: String,
        #[arg(allow_hyphen_values = true)]
        c2: String,
        #[arg(allow_hyphen_values = true)]
        d2: String,
    },
    /// Lattice points of the triangle with legs d, c over Z^2 (closed form).
    CountTriangle {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Lattice points of the same triangle over (2Z)^2 (corrected closed form).
    CountTriangleEven {
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Lattice points of the tetrahedron D(u, v, w) over Z^3 (closed form).
    CountTetra {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Signed crossing number of the vertical geodesic at x ("a/c" or "inf").
    Intersect {
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Also dump each crossed edge with its sign, one JSON line each.
        #[arg(long)]
        crossings: bool,
    },
    /// Generator-word decomposition of a gamma_theta matrix.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Run a verification suite: dedekind, hardy, mordell, mainthm, geomchar, cocycle, all.
    Verify { suite: String, bound: Option<u64> },
    /// Time a naive enumeration against its closed form.
    Bench { target: String, size: u64 },
}

#[derive(Serialize)]
struct CommandResult {
    command: String,
    inputs: BTreeMap<String, String>,
    value: String,
    elapsed_ns: u128,
}

fn int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("invalid integer {s:?}")))
}

fn matrix(a: &str, b: &str, c: &str, d: &str) -> Result<UniModMatrix> {
    UniModMatrix::new(int(a)?, int(b)?, int(c)?, int(d)?)
}

fn inputs(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn emit(command: &str, inputs: BTreeMap<String, String>, value: String, started: Instant) {
    let result = CommandResult {
        command: command.to_string(),
        inputs,
        value,
        elapsed_ns: started.elapsed().as_nanos(),
    };
    println!(
        "{}",
        serde_json::to_string(&result).expect("result serializes")
    );
}

/// Closed-form tetrahedron count, dispatching between the pairwise-coprime
/// form and the (d, c, 2) form with d even.
fn tetra_closed(u: &BigInt, v: &BigInt, w: &BigInt, budget: &BruteForceBudget) -> Result<BigInt> {
    let coprime = gcd(u, v).is_one() && gcd(u, w).is_one() && gcd(v, w).is_one();
    if coprime {
        return count_tetra_mordell(u, v, w);
    }
    let two = BigInt::from(2);
    let sides = [u, v, w];
    for i in 0..3 {
        if *sides[i] == two {
            let (p, q) = (sides[(i + 1) % 3], sides[(i + 2) % 3]);
            let (d, c) = if p.is_even() { (p, q) } else { (q, p) };
            if d.is_even() && c.is_odd() && gcd(d, c).is_one() {
                let d = u64::try_from(d.clone())
                    .map_err(|_| Error::domain("even side too large for the reconciled form"))?;
                let c = u64::try_from(c.clone())
                    .map_err(|_| Error::domain("odd side too large for the reconciled form"))?;
                let report = count_tetra_mordell2(d, c, budget)?;
                if !report.closed_corrected.is_integer() {
                    return Err(Error::NonIntegralCount {
                        formula: "even tetrahedron closed form".into(),
                        value: report.closed_corrected.to_string(),
                    });
                }
                return Ok(report.closed_corrected.to_integer());
            }
        }
    }
    Err(Error::domain(
        "tetrahedron sides must be pairwise coprime, or (d, c, 2) with d even and gcd(d, c) = 1",
    ))
}

fn print_verify_reports(reports: &[VerifyReport], json: bool) -> bool {
    let mut all_passed = true;
    for report in reports {
        if json {
            println!(
                "{}",
                serde_json::to_string(report).expect("report serializes")
            );
        } else {
            println!(
                "suite {:<42} {:>8} cases  {}",
                report.suite,
                report.cases,
                if report.passed() { "ok" } else { "FAILED" }
            );
            for failure in report.failures.iter().take(5) {
                println!(
                    "  failure: {} expected {} got {}",
                    failure.input, failure.expected, failure.got
                );
            }
            for erratum in &report.errata {
                println!("  erratum: {} | {}", erratum.formula, erratum.delta);
            }
        }
        all_passed &= report.passed();
    }
    all_passed
}

fn run_bench(target: &str, size: u64, budget: &BruteForceBudget, started: Instant) -> Result<()> {
    match target {
        "dedekind-naive-vs-fast" => {
            if size < 2 {
                return Err(Error::domain("size must be >= 2"));
            }
            let c = BigInt::from(size);
            let d = BigInt::from(size - 1); // always coprime with size
            let t = Instant::now();
            let naive = dedekind_naive(&d, &c)?;
            let naive_ns = t.elapsed().as_nanos();
            let t = Instant::now();
            let fast = dedekind_fast(&d, &c)?;
            let fast_ns = t.elapsed().as_nanos();
            if naive != fast {
                return Err(Error::domain(format!(
                    "routes disagree: naive {naive}, fast {fast}"
                )));
            }
            let ratio = naive_ns / fast_ns.max(1);
            let out = serde_json::json!({
                "command": "bench",
                "inputs": {"target": target, "size": size.to_string()},
                "value": ratio.to_string(),
                "elapsed_ns": started.elapsed().as_nanos() as u64,
                "naive_ns": naive_ns as u64,
                "fast_ns": fast_ns as u64,
            });
            println!("{out}");
            Ok(())
        }
        "tetra-brute-vs-mordell" => {
            if size < 1 {
                return Err(Error::domain("size must be >= 1"));
            }
            let (u, v, w) = (size, size + 1, 2 * size + 1); // pairwise coprime
            let t = Instant::now();
            let brute = count_tetra_brute(u, v, w, budget)?;
            let brute_ns = t.elapsed().as_nanos();
            let t = Instant::now();
            let closed =
                count_tetra_mordell(&BigInt::from(u), &BigInt::from(v), &BigInt::from(w))?;
            let closed_ns = t.elapsed().as_nanos();
            if brute != closed {
                return Err(Error::domain(format!(
                    "routes disagree: brute {brute}, closed {closed}"
                )));
            }
            let ratio = brute_ns / closed_ns.max(1);
            let out = serde_json::json!({
                "command": "bench",
                "inputs": {"target": target, "size": size.to_string()},
                "value": ratio.to_string(),
                "elapsed_ns": started.elapsed().as_nanos() as u64,
                "brute_ns": brute_ns as u64,
                "closed_ns": closed_ns as u64,
            });
            println!("{out}");
            Ok(())
        }
        other => Err(Error::domain(format!(
            "unknown bench target {other:?}; expected dedekind-naive-vs-fast or tetra-brute-vs-mordell"
        ))),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let max_iterations = cli.max_iterations.or_else(|| {
        std::env::var("HARDY_SUMS_MAX_ITERATIONS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let budget = max_iterations
        .map(BruteForceBudget::new)
        .unwrap_or_default();
    let started = Instant::now();

    match &cli.command {
        Command::Dedekind { d, c } => {
            let value = dedekind_naive(&int(d)?, &int(c)?)?;
            emit(
                "dedekind",
                inputs(&[("d", d), ("c", c)]),
                value.to_string(),
                started,
            );
        }
        Command::DedekindFast { d, c } => {
            let value = dedekind_fast(&int(d)?, &int(c)?)?;
            emit(
                "dedekind-fast",
                inputs(&[("d", d), ("c", c)]),
                value.to_string(),
                started,
            );
        }
        Command::S4 { d, c } => {
            let value = s4_naive(&int(d)?, &int(c)?)?;
            emit(
                "s4",
                inputs(&[("d", d), ("c", c)]),
                value.to_string(),
                started,
            );
        }
        Command::S { d, c } => {
            let value = s_naive(&int(d)?, &int(c)?)?;
            emit(
                "s",
                inputs(&[("d", d), ("c", c)]),
                value.to_string(),
                started,
            );
        }
        Command::FrakS { a, b, c, d } => {
            let value = s_matrix(&matrix(a, b, c, d)?)?;
            emit(
                "frak-s",
                inputs(&[("a", a), ("b", b), ("c", c), ("d", d)]),
                value.to_string(),
                started,
            );
        }
        Command::Phi { a, b, c, d } => {
            let value = dedekind_symbol(&matrix(a, b, c, d)?)?;
            emit(
                "phi",
                inputs(&[("a", a), ("b", b), ("c", c), ("d", d)]),
                value.to_string(),
                started,
            );
        }
        Command::Cocycle {
            a1,
            b1,
            c1,
            d1,
            a2,
            b2,
            c2,
            d2,
        } => {
            let value = rademacher_cocycle(&matrix(a1, b1, c1, d1)?, &matrix(a2, b2, c2, d2)?);
            emit(
                "cocycle",
                inputs(&[
                    ("a1", a1),
                    ("b1", b1),
                    ("c1", c1),
                    ("d1", d1),
                    ("a2", a2),
                    ("b2", b2),
                    ("c2", c2),
                    ("d2", d2),
                ]),
                value.to_string(),
                started,
            );
        }
        Command::CountTriangle { d, c } => {
            let value = count_triangle_z2_closed(&int(d)?, &int(c)?)?;
            emit(
                "count-triangle",
                inputs(&[("d", d), ("c", c)]),
                value.to_string(),
                started,
            );
        }
        Command::CountTriangleEven { d, c } => {
            let value = count_triangle_2z2_closed(&int(d)?, &int(c)?)?;
            emit(
                "count-triangle-even",
                inputs(&[("d", d), ("c", c)]),
                value.to_string(),
                started,
            );
        }
        Command::CountTetra { u, v, w } => {
            let value = tetra_closed(&int(u)?, &int(v)?, &int(w)?, &budget)?;
            emit(
                "count-tetra",
                inputs(&[("u", u), ("v", v), ("w", w)]),
                value.to_string(),
                started,
            );
        }
        Command::Intersect { x, crossings } => {
            let point = parse_boundary_point(x)?;
            if let BoundaryPoint::Finite(x) = &point {
                let bound = crossing_bound(x)?;
                let estimate = scan_size_estimate(&bound);
                if estimate > BigInt::from(budget.max_iterations) {
                    return Err(Error::Resource(format!(
                        "crossing scan at {x} needs ~{estimate} steps, budget is {}; raise --max-iterations",
                        budget.max_iterations
                    )));
                }
                if *crossings {
                    let h = vertical_geodesic(x);
                    for edge in enumerate_crossings(x)? {
                        let phi = phi_intersect(&edge.as_geodesic(), &h)?;
                        let line = serde_json::json!({
                            "edge": [edge.lo().to_string(), edge.hi().to_string()],
                            "phi": phi,
                        });
                        println!("{line}");
                    }
                }
            }
            let value = intersection_number(&point)?;
            emit("intersect", inputs(&[("x", x)]), value.to_string(), started);
        }
        Command::Decompose { a, b, c, d } => {
            let word = decompose_theta(&matrix(a, b, c, d)?)?;
            emit(
                "decompose",
                inputs(&[("a", a), ("b", b), ("c", c), ("d", d)]),
                word.to_string(),
                started,
            );
        }
        Command::Verify { suite, bound } => {
            let reports = run_suite(suite, *bound, &budget)?;
            let passed = print_verify_reports(&reports, cli.json);
            if !cli.json {
                println!("verify {suite}: {}", if passed { "PASS" } else { "FAIL" });
            }
            return Ok(if passed { 0 } else { 1 });
        }
        Command::Bench { target, size } => {
            run_bench(target, *size, &budget, started)?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
