//! One checker per inequality, each returning a uniform report.
//!
//! Theorem checkers (Araki-Lieb-Thirring consequence, strip inequality,
//! Heinz, Frobenius chain, the remark quantity) must hold: a violation
//! beyond tolerance is a bug. Conjecture checkers (Bourin vs Heinz, the
//! Bourin bound, singular-value dominance) report violations as findings.

mod registry;

pub use registry::{lookup, registry, CheckClass, CheckParams, CheckedReport, InequalityCheck};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matcore::{modulus, singular_values};
use crate::means::{
    bourin_mean, commutator_defect, heinz_sum, trace_functional, MeanPair, COMMUTING_DEFECT_TOL,
};
use crate::norms::{norm, tau, NormKind};

pub const REPORT_TOL: f64 = 1e-9;
pub const REPORT_TOL_ABS: f64 = 1e-12;

/// Uniform result record of every checker.
#[derive(Debug, Clone)]
pub struct InequalityReport {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
    pub context: String,
}

impl InequalityReport {
    pub fn new(label: impl Into<String>, lhs: f64, rhs: f64, context: impl Into<String>) -> Self {
        let margin = rhs - lhs;
        let holds = margin >= -(REPORT_TOL * rhs.abs() + REPORT_TOL_ABS);
        InequalityReport {
            label: label.into(),
            lhs,
            rhs,
            margin,
            holds,
            context: context.into(),
        }
    }

    pub fn csv_header() -> &'static str {
        "label,context,lhs,rhs,margin,holds"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.label,
            self.context,
            crate::explore::fmt_sig(self.lhs),
            crate::explore::fmt_sig(self.rhs),
            crate::explore::fmt_sig(self.margin),
            self.holds
        )
    }
}

/// Discretization of a vertical strip: re_steps points across the real
/// range, im_steps points symmetric in [-im_max, im_max].
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub re_steps: usize,
    pub im_max: f64,
    pub im_steps: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.re_steps * self.im_steps);
        for i in 0..self.re_steps {
            let re = lin(self.re_min, self.re_max, i, self.re_steps);
            for j in 0..self.im_steps {
                let im = lin(-self.im_max, self.im_max, j, self.im_steps);
                out.push(Complex64::new(re, im));
            }
        }
        out
    }

    pub fn in_strip(&self) -> bool {
        self.re_min >= 0.25 - 1e-12 && self.re_max <= 0.75 + 1e-12 && self.re_min <= self.re_max
    }
}

impl Default for GridSpec {
    /// Default discretization of the quarter strip: 11 x 21, im_max 5.
    fn default() -> Self {
        GridSpec {
            re_min: 0.25,
            re_max: 0.75,
            re_steps: 11,
            im_max: 5.0,
            im_steps: 21,
        }
    }
}

pub(crate) fn lin(a: f64, b: f64, i: usize, steps: usize) -> f64 {
    if steps <= 1 {
        a
    } else {
        a + (b - a) * (i as f64) / ((steps - 1) as f64)
    }
}

/// ||A^{1/r} B^{1/r}||_r <= tau(AB)^{1/r}, r >= 2.
pub fn check_alt_lemma(pair: &MeanPair, r: f64) -> Result<InequalityReport> {
    if r < 2.0 {
        return Err(Error::InvalidR(r));
    }
    let inv = Complex64::new(1.0 / r, 0.0);
    let prod = pair.a_power(inv)?.mul(&pair.b_power(inv)?);
    let lhs = norm(&prod, NormKind::Schatten(r))?;
    let rhs = pair.tau_ab().powf(1.0 / r);
    Ok(InequalityReport::new("alt", lhs, rhs, format!("r={r}")))
}

/// f(z) <= tau(AB) over the grid, one report per point. The grid must stay
/// inside the quarter strip; use the exploratory variant outside it.
pub fn check_strip_inequality(pair: &MeanPair, grid: &GridSpec) -> Result<Vec<InequalityReport>> {
    if !grid.in_strip() {
        return Err(Error::GridOutOfStrip {
            re_min: grid.re_min,
            re_max: grid.re_max,
        });
    }
    check_strip_inequality_exploratory(pair, grid)
}

/// Same evaluation without the strip membership requirement; callers must
/// not treat out-of-strip violations as bugs.
pub fn check_strip_inequality_exploratory(
    pair: &MeanPair,
    grid: &GridSpec,
) -> Result<Vec<InequalityReport>> {
    let bound = pair.tau_ab();
    grid.points()
        .into_iter()
        .map(|z| {
            let f = trace_functional(pair, z)?;
            Ok(InequalityReport::new(
                "strip",
                f,
                bound,
                format!("re={};im={}", z.re, z.im),
            ))
        })
        .collect()
}

/// ||b_t||_2 <= ||h_t||_2 <= ||A+B||_2 for t in [1/4, 3/4].
pub fn check_frobenius_chain(pair: &MeanPair, t: f64) -> Result<Vec<InequalityReport>> {
    if !(0.25..=0.75).contains(&t) {
        return Err(Error::TOutOfRange(t));
    }
    check_frobenius_chain_exploratory(pair, t)
}

pub fn check_frobenius_chain_exploratory(pair: &MeanPair, t: f64) -> Result<Vec<InequalityReport>> {
    let bn = norm(&bourin_mean(pair, t)?, NormKind::Frobenius)?;
    let hn = norm(&heinz_sum(pair, t)?, NormKind::Frobenius)?;
    let sn = norm(&pair.sum(), NormKind::Frobenius)?;
    Ok(vec![
        InequalityReport::new("chain:b<=h", bn, hn, format!("t={t};norm=fro")),
        InequalityReport::new("chain:h<=sum", hn, sn, format!("t={t};norm=fro")),
    ])
}

/// Heinz: |||h_t(A,B)||| <= |||A+B|||.
pub fn check_heinz(pair: &MeanPair, t: f64, kind: NormKind) -> Result<InequalityReport> {
    let lhs = norm(&heinz_sum(pair, t)?, kind)?;
    let rhs = norm(&pair.sum(), kind)?;
    Ok(InequalityReport::new(
        "heinz",
        lhs,
        rhs,
        format!("t={t};norm={kind}"),
    ))
}

/// Conjectured |||b_t||| <= |||h_t|||. `holds = false` is a counterexample
/// finding, never an error.
pub fn check_bourin_vs_heinz(pair: &MeanPair, t: f64, kind: NormKind) -> Result<InequalityReport> {
    let lhs = norm(&bourin_mean(pair, t)?, kind)?;
    let rhs = norm(&heinz_sum(pair, t)?, kind)?;
    Ok(InequalityReport::new(
        "bvh",
        lhs,
        rhs,
        format!("t={t};norm={kind}"),
    ))
}

/// Conjectured |||b_t||| <= |||A+B|||. `holds = false` is a finding.
pub fn check_bourin_bound(pair: &MeanPair, t: f64, kind: NormKind) -> Result<InequalityReport> {
    let lhs = norm(&bourin_mean(pair, t)?, kind)?;
    let rhs = norm(&pair.sum(), kind)?;
    Ok(InequalityReport::new(
        "bourin",
        lhs,
        rhs,
        format!("t={t};norm={kind}"),
    ))
}

/// s_j(b_t) <= s_j(A+B) for every j, 0 < t < 1. One report per index.
pub fn check_singular_dominance(pair: &MeanPair, t: f64) -> Result<Vec<InequalityReport>> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::TOutOfUnit(t));
    }
    let sb = singular_values(&bourin_mean(pair, t)?)?;
    let ss = singular_values(&pair.sum())?;
    Ok((0..pair.dim())
        .map(|j| {
            InequalityReport::new(
                format!("sj:{}", j + 1),
                sb.get(j),
                ss.get(j),
                format!("t={t}"),
            )
        })
        .collect())
}

/// tau(|B^{1/4} A^t B^t A^{1-t} B^{3/4-t}|) <= Tr(AB), t in [1/4, 3/4].
pub fn check_remark_quantity(pair: &MeanPair, t: f64) -> Result<InequalityReport> {
    if !(0.25..=0.75).contains(&t) {
        return Err(Error::TOutOfRange(t));
    }
    check_remark_quantity_exploratory(pair, t)
}

pub fn check_remark_quantity_exploratory(pair: &MeanPair, t: f64) -> Result<InequalityReport> {
    let r = |x: f64| Complex64::new(x, 0.0);
    let chain = pair
        .b_power(r(0.25))?
        .mul(&pair.a_power(r(t))?)
        .mul(&pair.b_power(r(t))?)
        .mul(&pair.a_power(r(1.0 - t))?)
        .mul(&pair.b_power(r(0.75 - t))?);
    let lhs = tau(modulus(&chain)?.matrix());
    let rhs = pair.tau_ab();
    Ok(InequalityReport::new("remark", lhs, rhs, format!("t={t}")))
}

/// Scan of g(t) = tau(AB) - f(t) over a t grid, with the equality
/// dichotomy verdict: commuting pairs must give g identically zero, and
/// non-commuting pairs must give strictly positive g on [1/4, 3/4].
#[derive(Debug, Clone)]
pub struct ScanReport {
    /// (t, margin) rows in grid order
    pub points: Vec<(f64, f64)>,
    pub min_margin: f64,
    pub argmin: f64,
    pub defect: f64,
    pub commuting: bool,
    pub dichotomy_holds: bool,
}

pub fn equality_interval_scan(
    pair: &MeanPair,
    t_min: f64,
    t_max: f64,
    steps: usize,
) -> Result<ScanReport> {
    if !(0.0..=1.0).contains(&t_min) || !(0.0..=1.0).contains(&t_max) || t_min > t_max {
        return Err(Error::TOutOfUnit(if t_min > t_max { t_max } else { t_min }));
    }
    let tau_ab = pair.tau_ab();
    let mut points = Vec::with_capacity(steps);
    for i in 0..steps.max(1) {
        let t = lin(t_min, t_max, i, steps.max(1));
        let f = trace_functional(pair, Complex64::new(t, 0.0))?;
        points.push((t, tau_ab - f));
    }
    let (argmin, min_margin) = points
        .iter()
        .copied()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();

    let defect = commutator_defect(pair);
    let commuting = defect <= COMMUTING_DEFECT_TOL;
    let dichotomy_holds = if commuting {
        points.iter().all(|&(_, m)| m.abs() <= 1e-8 * tau_ab.abs())
    } else {
        points
            .iter()
            .filter(|&&(t, _)| (0.25..=0.75).contains(&t))
            .all(|&(_, m)| m > COMMUTING_DEFECT_TOL * tau_ab.abs())
    };
    Ok(ScanReport {
        points,
        min_margin,
        argmin,
        defect,
        commuting,
        dichotomy_holds,
    })
}
