//! Parameter sweeps, the built-in counterexample matrices, random matrix
//! generation, seeded counterexample search, and CSV emission.

use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::matcore::{matrix_to_json, ComplexMatrix, HermitianMatrix};
use crate::means::{bourin_mean, heinz_sum, trace_functional, MeanPair};
use crate::norms::{norm, NormKind};
use crate::verify::{
    check_bourin_bound, check_bourin_vs_heinz, check_singular_dominance, lin, GridSpec,
    InequalityReport,
};

/// Ordered columns of real-valued rows, CSV-serializable.
#[derive(Debug, Clone)]
pub struct SweepTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SweepTable {
    pub fn new(columns: &[&str]) -> Self {
        SweepTable {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }
}

/// Decimal formatting with 17 significant digits; round-trips f64 exactly.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..17).contains(&exp) {
        format!("{:.*}", (16 - exp).max(0) as usize, x)
    } else {
        format!("{:.16e}", x)
    }
}

/// Header of column names, then one row per grid point, newline-terminated.
pub fn write_csv(table: &SweepTable, dest: &mut dyn Write) -> Result<()> {
    writeln!(dest, "{}", table.columns.join(","))?;
    for row in &table.rows {
        let cells: Vec<String> = row.iter().map(|&x| fmt_sig(x)).collect();
        writeln!(dest, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn write_csv_file(table: &SweepTable, path: &Path) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    write_csv(table, &mut f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    Example1,
    Example2,
}

impl FromStr for ExampleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "example1" => Ok(ExampleId::Example1),
            "example2" => Ok(ExampleId::Example2),
            other => Err(Error::UnknownId(other.to_string())),
        }
    }
}

/// The two counterexample pairs, entry-for-entry.
pub fn builtin_example(id: ExampleId) -> Result<MeanPair> {
    let (a, b) = match id {
        ExampleId::Example1 => (
            ComplexMatrix::diagonal(&[1141.0, 204.0, 0.125]),
            ComplexMatrix::from_real_rows(&[
                vec![39.0, 90.0, 43.0],
                vec![90.0, 418.0, 370.0],
                vec![43.0, 370.0, 426.0],
            ])?,
        ),
        ExampleId::Example2 => (
            ComplexMatrix::diagonal(&[6317.0, 474.0, 6.0]),
            ComplexMatrix::from_real_rows(&[
                vec![2078.0, 2362.0, 2199.0],
                vec![2362.0, 3267.0, 2585.0],
                vec![2199.0, 2585.0, 2492.0],
            ])?,
        ),
    };
    MeanPair::new(HermitianMatrix::psd(a)?, HermitianMatrix::psd(b)?)
}

/// Columns (t, norm_b, norm_h, f, tau_ab_minus_ftrace) over an inclusive
/// t grid. The pair's decompositions are computed once and reused.
pub fn sweep_t(
    pair: &MeanPair,
    kind: NormKind,
    t_min: f64,
    t_max: f64,
    steps: usize,
) -> Result<SweepTable> {
    if !(0.0..=1.0).contains(&t_min) || !(0.0..=1.0).contains(&t_max) {
        return Err(Error::TOutOfUnit(t_min.min(t_max)));
    }
    let mut table = SweepTable::new(&["t", "norm_b", "norm_h", "f", "tau_ab_minus_ftrace"]);
    let tau_ab = pair.tau_ab();
    for i in 0..steps.max(2) {
        let t = lin(t_min, t_max, i, steps.max(2));
        let nb = norm(&bourin_mean(pair, t)?, kind)?;
        let nh = norm(&heinz_sum(pair, t)?, kind)?;
        let g = tau_ab - trace_functional(pair, Complex64::new(t, 0.0))?;
        table.push(vec![t, nb, nh, nh - nb, g]);
    }
    Ok(table)
}

/// Columns (re_z, im_z, f_value, bound, margin), rows in row-major grid order.
pub fn sweep_strip(pair: &MeanPair, grid: &GridSpec) -> Result<SweepTable> {
    let mut table = SweepTable::new(&["re_z", "im_z", "f_value", "bound", "margin"]);
    let bound = pair.tau_ab();
    for z in grid.points() {
        let f = trace_functional(pair, z)?;
        table.push(vec![z.re, z.im, f, bound, bound - f]);
    }
    Ok(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsdStyle {
    /// G*G + 1e-6 I with standard normal complex G; always pd
    Dense,
    /// diagonal with entries exp(u), u uniform in [ln 1e-2, ln 1e4]
    Diagonal,
}

/// Seeded substream so trials are order-independent.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_psd(dim: usize, rng: &mut ChaCha8Rng, style: PsdStyle) -> HermitianMatrix {
    match style {
        PsdStyle::Dense => {
            let mut g = ComplexMatrix::zeros(dim);
            for i in 0..dim {
                for j in 0..dim {
                    let re: f64 = rng.sample(StandardNormal);
                    let im: f64 = rng.sample(StandardNormal);
                    g.set(i, j, Complex64::new(re, im));
                }
            }
            let mut m = g.adjoint().mul(&g);
            for i in 0..dim {
                m.set(i, i, m.get(i, i) + Complex64::new(1e-6, 0.0));
            }
            HermitianMatrix::psd(m).expect("G*G + 1e-6 I is pd by construction")
        }
        PsdStyle::Diagonal => {
            let lo = (1e-2f64).ln();
            let hi = (1e4f64).ln();
            let entries: Vec<f64> = (0..dim)
                .map(|_| (lo + (hi - lo) * rng.random::<f64>()).exp())
                .collect();
            HermitianMatrix::psd(ComplexMatrix::diagonal(&entries))
                .expect("positive diagonal is pd")
        }
    }
}

/// Random Hermitian (not necessarily positive) matrix, for solver tests.
pub fn random_hermitian(dim: usize, rng: &mut ChaCha8Rng) -> HermitianMatrix {
    let mut g = ComplexMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            g.set(i, j, Complex64::new(re, im));
        }
    }
    let h = g.add(&g.adjoint()).scale(Complex64::new(0.5, 0.0));
    HermitianMatrix::new(h).expect("symmetrized matrix is Hermitian")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStyle {
    Dense,
    DiagonalVsDense,
    PerturbExample(ExampleId),
}

impl FromStr for SearchStyle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dense" => Ok(SearchStyle::Dense),
            "diagonal-vs-dense" => Ok(SearchStyle::DiagonalVsDense),
            "perturb-example1" => Ok(SearchStyle::PerturbExample(ExampleId::Example1)),
            "perturb-example2" => Ok(SearchStyle::PerturbExample(ExampleId::Example2)),
            other => Err(Error::UnknownId(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchTarget {
    BourinVsHeinz,
    BourinBound,
    SingularDominance,
}

impl FromStr for SearchTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bourin_vs_heinz" => Ok(SearchTarget::BourinVsHeinz),
            "bourin_bound" => Ok(SearchTarget::BourinBound),
            "singular_dominance" => Ok(SearchTarget::SingularDominance),
            other => Err(Error::UnknownId(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub style: SearchStyle,
    pub norm: NormKind,
    pub t_grid: Vec<f64>,
    pub target: SearchTarget,
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub a: ComplexMatrix,
    pub b: ComplexMatrix,
    pub t: f64,
    pub trial: usize,
    pub report: InequalityReport,
}

#[derive(Debug, Clone)]
pub struct CounterexampleResult {
    pub found: bool,
    pub witness: Option<Witness>,
    pub trials_used: usize,
}

/// Relative entrywise jitter magnitude for the perturb styles.
const PERTURB_REL: f64 = 0.01;

fn draw_pair(config: &SearchConfig, rng: &mut ChaCha8Rng) -> Result<Option<MeanPair>> {
    match config.style {
        SearchStyle::Dense => {
            let a = random_psd(config.dim, rng, PsdStyle::Dense);
            let b = random_psd(config.dim, rng, PsdStyle::Dense);
            Ok(Some(MeanPair::new(a, b)?))
        }
        SearchStyle::DiagonalVsDense => {
            let a = random_psd(config.dim, rng, PsdStyle::Diagonal);
            let b = random_psd(config.dim, rng, PsdStyle::Dense);
            Ok(Some(MeanPair::new(a, b)?))
        }
        SearchStyle::PerturbExample(id) => {
            let base = builtin_example(id)?;
            let a = perturb_hermitian(base.a().matrix(), rng);
            let b = perturb_hermitian(base.b().matrix(), rng);
            // jitter can in principle break positivity; a failed pd check
            // consumes the trial without evaluating
            match (HermitianMatrix::psd(a), HermitianMatrix::psd(b)) {
                (Ok(a), Ok(b)) => Ok(Some(MeanPair::new(a, b)?)),
                _ => Ok(None),
            }
        }
    }
}

/// Entrywise relative jitter, mirrored across the diagonal so the result
/// stays exactly Hermitian.
fn perturb_hermitian(m: &ComplexMatrix, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let n = m.dim();
    let mut out = ComplexMatrix::zeros(n);
    let jitter = |rng: &mut ChaCha8Rng| 1.0 + PERTURB_REL * (2.0 * rng.random::<f64>() - 1.0);
    for i in 0..n {
        let d = m.get(i, i);
        out.set(i, i, Complex64::new(d.re * jitter(rng), 0.0));
        for j in (i + 1)..n {
            let v = m.get(i, j).scale(jitter(rng));
            out.set(i, j, v);
            out.set(j, i, v.conj());
        }
    }
    out
}

/// Iterates seeded trials, evaluating the target checker over the t grid;
/// returns the first violation as witness. Deterministic given the seed.
pub fn search_counterexample(config: &SearchConfig) -> Result<CounterexampleResult> {
    for trial in 0..config.trials {
        let mut rng = trial_rng(config.seed, trial as u64);
        let pair = match draw_pair(config, &mut rng)? {
            Some(p) => p,
            None => continue,
        };
        for &t in &config.t_grid {
            let violation = match config.target {
                SearchTarget::BourinVsHeinz => {
                    let r = check_bourin_vs_heinz(&pair, t, config.norm)?;
                    (!r.holds).then_some(r)
                }
                SearchTarget::BourinBound => {
                    let r = check_bourin_bound(&pair, t, config.norm)?;
                    (!r.holds).then_some(r)
                }
                SearchTarget::SingularDominance => check_singular_dominance(&pair, t)?
                    .into_iter()
                    .find(|r| !r.holds),
            };
            if let Some(report) = violation {
                return Ok(CounterexampleResult {
                    found: true,
                    witness: Some(Witness {
                        a: pair.a().matrix().clone(),
                        b: pair.b().matrix().clone(),
                        t,
                        trial,
                        report,
                    }),
                    trials_used: trial + 1,
                });
            }
        }
    }
    Ok(CounterexampleResult {
        found: false,
        witness: None,
        trials_used: config.trials,
    })
}

/// Writes witness_a.json / witness_b.json in the matrix file format plus a
/// metadata record (seed, trial, t, norm kind, margin).
pub fn persist_witness(dir: &Path, config: &SearchConfig, witness: &Witness) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("witness_a.json"), matrix_to_json(&witness.a) + "\n")?;
    std::fs::write(dir.join("witness_b.json"), matrix_to_json(&witness.b) + "\n")?;
    let meta = format!(
        "{{\"seed\": {}, \"trial\": {}, \"t\": {}, \"norm\": \"{}\", \"label\": \"{}\", \"lhs\": {}, \"rhs\": {}, \"margin\": {}}}\n",
        config.seed,
        witness.trial,
        fmt_sig(witness.t),
        config.norm,
        witness.report.label,
        fmt_sig(witness.report.lhs),
        fmt_sig(witness.report.rhs),
        fmt_sig(witness.report.margin),
    );
    std::fs::write(dir.join("witness_meta.json"), meta)?;
    Ok(())
}
