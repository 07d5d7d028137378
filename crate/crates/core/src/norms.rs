//! Trace functional, Schatten-p / operator / Ky Fan norms, and the
//! generalized Hoelder checker.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matcore::{singular_values, ComplexMatrix};
use crate::verify::InequalityReport;

/// A unitarily invariant norm, identified by its singular-value formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NormKind {
    /// (sum s_j^p)^{1/p}, p >= 1
    Schatten(f64),
    /// largest singular value (Schatten-infinity, Ky Fan 1)
    Operator,
    /// sum of the k largest singular values
    KyFan(usize),
    /// Schatten-2
    Frobenius,
}

impl NormKind {
    fn validate(&self) -> Result<()> {
        match *self {
            NormKind::Schatten(p) if !(p >= 1.0) => Err(Error::InvalidP(p)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormKind::Schatten(p) => write!(f, "s:{}", p),
            NormKind::Operator => write!(f, "op"),
            NormKind::KyFan(k) => write!(f, "kf:{}", k),
            NormKind::Frobenius => write!(f, "fro"),
        }
    }
}

impl FromStr for NormKind {
    type Err = String;

    /// CLI syntax: "op", "fro", "s:<p>", "kf:<k>".
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "op" => Ok(NormKind::Operator),
            "fro" => Ok(NormKind::Frobenius),
            _ => {
                if let Some(p) = s.strip_prefix("s:") {
                    let p: f64 = p.parse().map_err(|_| format!("bad Schatten exponent: {s}"))?;
                    if p < 1.0 {
                        return Err(format!("Schatten exponent must be >= 1, got {p}"));
                    }
                    Ok(NormKind::Schatten(p))
                } else if let Some(k) = s.strip_prefix("kf:") {
                    let k: usize = k.parse().map_err(|_| format!("bad Ky Fan index: {s}"))?;
                    if k == 0 {
                        return Err("Ky Fan index must be >= 1".into());
                    }
                    Ok(NormKind::KyFan(k))
                } else {
                    Err(format!("unknown norm kind: {s} (expected op, fro, s:<p>, kf:<k>)"))
                }
            }
        }
    }
}

/// tau(X) = Re Tr(X).
pub fn tau(x: &ComplexMatrix) -> f64 {
    x.trace().re
}

/// Evaluates the norm from the singular values of X.
pub fn norm(x: &ComplexMatrix, kind: NormKind) -> Result<f64> {
    kind.validate()?;
    let sv = singular_values(x)?;
    norm_from_singular_values(&sv.values, kind, x.dim())
}

pub(crate) fn norm_from_singular_values(sv: &[f64], kind: NormKind, n: usize) -> Result<f64> {
    match kind {
        NormKind::Operator => Ok(sv.first().copied().unwrap_or(0.0)),
        NormKind::Frobenius => Ok(sv.iter().map(|s| s * s).sum::<f64>().sqrt()),
        NormKind::Schatten(p) => {
            if p < 1.0 {
                return Err(Error::InvalidP(p));
            }
            // scale out the largest singular value to dodge overflow at large p
            let s1 = sv.first().copied().unwrap_or(0.0);
            if s1 == 0.0 {
                return Ok(0.0);
            }
            let sum: f64 = sv.iter().map(|s| (s / s1).powf(p)).sum();
            Ok(s1 * sum.powf(1.0 / p))
        }
        NormKind::KyFan(k) => {
            if k == 0 || k > n {
                return Err(Error::InvalidKyFanIndex { k, n });
            }
            Ok(sv.iter().take(k).sum())
        }
    }
}

const HOELDER_EXPONENT_TOL: f64 = 1e-12;

/// ||XY||_s <= ||X||_p ||Y||_q for 1/p + 1/q = 1/s.
pub fn check_hoelder(
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    p: f64,
    q: f64,
    s: f64,
) -> Result<InequalityReport> {
    for e in [p, q, s] {
        if e < 1.0 {
            return Err(Error::InvalidP(e));
        }
    }
    let residual = 1.0 / p + 1.0 / q - 1.0 / s;
    if residual.abs() > HOELDER_EXPONENT_TOL {
        return Err(Error::ExponentMismatch(residual));
    }
    let lhs = norm(&x.mul(y), NormKind::Schatten(s))?;
    let rhs = norm(x, NormKind::Schatten(p))? * norm(y, NormKind::Schatten(q))?;
    Ok(InequalityReport::new(
        "hoelder",
        lhs,
        rhs,
        format!("p={p} q={q} s={s}"),
    ))
}
