//! Command-line entry point.
//!
//! Exit codes: 0 = all asserted checks pass and no findings; 2 = run
//! succeeded and recorded at least one conjecture violation (a finding);
//! 1 = error or theorem-check failure.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use crate::error::Result;
use crate::explore::{
    builtin_example, fmt_sig, persist_witness, search_counterexample, sweep_strip, sweep_t,
    write_csv_file, ExampleId, SearchConfig, SearchStyle, SearchTarget,
};
use crate::matcore::{
    matrix_power, read_matrix_file, singular_values, write_matrix_file, HermitianMatrix,
};
use crate::means::{bourin_mean, heinz_sum, MeanPair};
use crate::norms::{norm, tau, NormKind};
use crate::verify::{lookup, registry, CheckClass, CheckParams, GridSpec, InequalityCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FINDING: i32 = 2;

#[derive(Parser)]
#[command(name = "mmv", version, about = "Matrix-mean inequality verifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run inequality checkers on a matrix pair
    Verify {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// single parameter value
        #[arg(long, conflicts_with = "t_grid")]
        t: Option<f64>,
        /// inclusive grid a:b:n
        #[arg(long = "t-grid")]
        t_grid: Option<String>,
        /// op | fro | s:<p> | kf:<k>
        #[arg(long, default_value = "fro")]
        norm: NormKind,
        /// alt | strip | heinz | bvh | bourin | sj | remark | chain | all
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// Sweep t and emit a CSV of norms of b_t, h_t and the trace gap
    Sweep {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value = "fro")]
        norm: NormKind,
        /// inclusive grid a:b:n
        #[arg(long)]
        t: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep the complex strip and emit a CSV of f(z) against tau(AB)
    Strip {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// re:<a>:<b>:<n>,im:<max>:<k>
        #[arg(long, default_value = "re:0.25:0.75:11,im:5:21")]
        grid: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-run a built-in counterexample and compare to the published values
    Reproduce {
        /// example1 | example2
        id: String,
    },
    /// Seeded random search for inequality violations
    Search {
        /// bourin_vs_heinz | bourin_bound | singular_dominance
        #[arg(long)]
        target: SearchTarget,
        /// dense | diagonal-vs-dense | perturb-example1 | perturb-example2
        #[arg(long)]
        style: SearchStyle,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value = "op")]
        norm: NormKind,
        /// inclusive grid a:b:n
        #[arg(long = "t-grid")]
        t_grid: String,
        #[arg(long = "out-dir")]
        out_dir: Option<PathBuf>,
    },
    /// Compute A^z and write it in the matrix file format
    Power {
        #[arg(long)]
        a: PathBuf,
        /// complex exponent <re>[+<im>i], e.g. 0.5, 0.5+3i, 0.25-1.5i
        #[arg(long)]
        z: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses "a:b:n" into n equally spaced points from a to b inclusive.
pub fn parse_t_grid(s: &str) -> std::result::Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected a:b:n, got {s}"));
    }
    let a: f64 = parts[0].parse().map_err(|_| format!("bad grid start: {}", parts[0]))?;
    let b: f64 = parts[1].parse().map_err(|_| format!("bad grid end: {}", parts[1]))?;
    let n: usize = parts[2].parse().map_err(|_| format!("bad grid count: {}", parts[2]))?;
    if n == 0 {
        return Err("grid count must be >= 1".into());
    }
    Ok((0..n).map(|i| crate::verify::lin(a, b, i, n)).collect())
}

/// Parses "re:<a>:<b>:<n>,im:<max>:<k>".
pub fn parse_grid(s: &str) -> std::result::Result<GridSpec, String> {
    let (re_part, im_part) = s
        .split_once(',')
        .ok_or_else(|| format!("expected re:a:b:n,im:m:k, got {s}"))?;
    let re: Vec<&str> = re_part.split(':').collect();
    let im: Vec<&str> = im_part.split(':').collect();
    if re.len() != 4 || re[0] != "re" || im.len() != 3 || im[0] != "im" {
        return Err(format!("expected re:a:b:n,im:m:k, got {s}"));
    }
    let bad = |what: &str, v: &str| format!("bad {what}: {v}");
    Ok(GridSpec {
        re_min: re[1].parse().map_err(|_| bad("re min", re[1]))?,
        re_max: re[2].parse().map_err(|_| bad("re max", re[2]))?,
        re_steps: re[3].parse().map_err(|_| bad("re steps", re[3]))?,
        im_max: im[1].parse().map_err(|_| bad("im max", im[1]))?,
        im_steps: im[2].parse().map_err(|_| bad("im steps", im[2]))?,
    })
}

/// Parses "<re>[<+|-><im>i]" (e.g. "0.5", "0.5+3i", "-1+0.5i", "2i").
pub fn parse_z(s: &str) -> std::result::Result<Complex64, String> {
    let s = s.trim();
    let err = || format!("bad complex exponent: {s} (expected <re>[+<im>i])");
    if let Some(body) = s.strip_suffix('i') {
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        match split {
            Some(i) => {
                let re: f64 = body[..i].parse().map_err(|_| err())?;
                let im_str = &body[i..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().map_err(|_| err())?
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = if body.is_empty() {
                    1.0
                } else {
                    body.parse().map_err(|_| err())?
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|_| err())?;
        Ok(Complex64::new(re, 0.0))
    }
}

fn load_pair(a: &Path, b: &Path) -> Result<MeanPair> {
    let a = HermitianMatrix::psd(read_matrix_file(a)?)?;
    let b = HermitianMatrix::psd(read_matrix_file(b)?)?;
    MeanPair::new(a, b)
}

fn check_threads_env() {
    if let Ok(v) = std::env::var("MMV_THREADS") {
        if v.parse::<usize>().map(|n| n >= 1) != Ok(true) {
            eprintln!("warning: ignoring invalid MMV_THREADS={v}");
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version through this path with code 0
            let code = if e.exit_code() == 0 { 0 } else { EXIT_ERROR };
            let _ = e.print();
            return code;
        }
    };
    check_threads_env();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Verify {
            a,
            b,
            t,
            t_grid,
            norm,
            check,
        } => {
            let pair = load_pair(&a, &b)?;
            let t_grid = match t_grid {
                Some(spec) => parse_t_grid(&spec).map_err(invalid)?,
                None => vec![t.unwrap_or(0.5)],
            };
            let checks: Vec<Box<dyn InequalityCheck>> = if check == "all" {
                registry()
            } else {
                match lookup(&check) {
                    Some(c) => vec![c],
                    None => return Err(invalid(format!("unknown check: {check}"))),
                }
            };
            let params = CheckParams {
                t_grid,
                norm,
                ..Default::default()
            };
            let mut failure = false;
            let mut finding = false;
            for checker in checks {
                let class = match checker.class() {
                    CheckClass::Theorem => "theorem",
                    CheckClass::Conjecture => "conjecture",
                };
                for cr in checker.run(&pair, &params)? {
                    let r = &cr.report;
                    println!(
                        "check={} class={} asserted={} label={} context={} lhs={} rhs={} margin={} holds={}",
                        checker.name(),
                        class,
                        cr.asserted,
                        r.label,
                        r.context,
                        fmt_sig(r.lhs),
                        fmt_sig(r.rhs),
                        fmt_sig(r.margin),
                        r.holds
                    );
                    if !r.holds {
                        if cr.asserted && checker.class() == CheckClass::Theorem {
                            failure = true;
                        } else {
                            finding = true;
                        }
                    }
                }
            }
            Ok(if failure {
                EXIT_ERROR
            } else if finding {
                EXIT_FINDING
            } else {
                EXIT_OK
            })
        }
        Command::Sweep { a, b, norm, t, out } => {
            let pair = load_pair(&a, &b)?;
            let grid = parse_t_grid(&t).map_err(invalid)?;
            if grid.len() < 2 {
                return Err(invalid("sweep needs at least 2 grid points"));
            }
            let table = sweep_t(
                &pair,
                norm,
                grid[0],
                *grid.last().unwrap(),
                grid.len(),
            )?;
            write_csv_file(&table, &out)?;
            println!("rows={} out={}", table.rows.len(), out.display());
            Ok(EXIT_OK)
        }
        Command::Strip { a, b, grid, out } => {
            let pair = load_pair(&a, &b)?;
            let grid = parse_grid(&grid).map_err(invalid)?;
            let table = sweep_strip(&pair, &grid)?;
            write_csv_file(&table, &out)?;
            println!("rows={} out={}", table.rows.len(), out.display());
            Ok(EXIT_OK)
        }
        Command::Reproduce { id } => reproduce(&id.parse::<ExampleId>()?),
        Command::Search {
            target,
            style,
            dim,
            trials,
            seed,
            norm,
            t_grid,
            out_dir,
        } => {
            let config = SearchConfig {
                dim,
                trials,
                seed,
                style,
                norm,
                t_grid: parse_t_grid(&t_grid).map_err(invalid)?,
                target,
            };
            let result = search_counterexample(&config)?;
            println!("found={} trials_used={}", result.found, result.trials_used);
            if let Some(witness) = &result.witness {
                println!(
                    "witness_trial={} witness_t={} witness_margin={}",
                    witness.trial,
                    fmt_sig(witness.t),
                    fmt_sig(witness.report.margin)
                );
                if let Some(dir) = &out_dir {
                    persist_witness(dir, &config, witness)?;
                    println!("witness_dir={}", dir.display());
                }
            }
            Ok(if result.found { EXIT_FINDING } else { EXIT_OK })
        }
        Command::Power { a, z, out } => {
            let a = HermitianMatrix::psd(read_matrix_file(&a)?)?;
            let z = parse_z(&z).map_err(invalid)?;
            let p = matrix_power(&a, z)?;
            write_matrix_file(&out, &p)?;
            println!("n={} out={}", p.dim(), out.display());
            Ok(EXIT_OK)
        }
    }
}

fn invalid(msg: impl std::fmt::Display) -> crate::error::Error {
    crate::error::Error::InvalidMatrixFile(msg.to_string())
}

/// Published values of the two counterexamples, asserted at 0.1% relative.
fn reproduce(id: &ExampleId) -> Result<i32> {
    let pair = builtin_example(*id)?;
    match id {
        ExampleId::Example1 => {
            let t = 0.15;
            let nb = norm(&bourin_mean(&pair, t)?, NormKind::Operator)?;
            let nh = norm(&heinz_sum(&pair, t)?, NormKind::Operator)?;
            let f = nh - nb;
            let ok = (-2.4..=-2.2).contains(&f);
            println!(
                "quantity=f_uniform t={} published=-2.3 computed={} status={}",
                t,
                fmt_sig(f),
                if ok { "ok" } else { "mismatch" }
            );
            // a reproduced negative f is the counterexample finding
            Ok(if ok { EXIT_FINDING } else { EXIT_ERROR })
        }
        ExampleId::Example2 => {
            let published_b = [6826.57, 878.499, 591.716];
            let published_sum = [10561.4, 3629.62, 443.017];
            let sb = singular_values(&bourin_mean(&pair, 0.5)?)?;
            let ss = singular_values(&pair.sum())?;
            let print_row = |name: &str, j: usize, published: f64, computed: f64| {
                let ok = (computed - published).abs() <= 1e-3 * published.abs();
                println!(
                    "quantity={name} j={} published={} computed={} status={}",
                    j + 1,
                    fmt_sig(published),
                    fmt_sig(computed),
                    if ok { "ok" } else { "mismatch" }
                );
            };
            for j in 0..3 {
                print_row("s_b_half", j, published_b[j], sb.get(j));
            }
            for j in 0..3 {
                print_row("s_sum", j, published_sum[j], ss.get(j));
            }
            let trace = tau(&pair.sum());
            println!(
                "quantity=trace_sum published=14634 computed={} status={}",
                fmt_sig(trace),
                if (trace - 14634.0).abs() <= 0.05 { "ok" } else { "mismatch" }
            );
            let violated = sb.get(2) > ss.get(2);
            println!(
                "quantity=s3_dominance lhs={} rhs={} violated={}",
                fmt_sig(sb.get(2)),
                fmt_sig(ss.get(2)),
                violated
            );
            Ok(if violated { EXIT_FINDING } else { EXIT_ERROR })
        }
    }
}
