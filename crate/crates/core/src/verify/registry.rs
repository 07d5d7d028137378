//! Named checker registry: every inequality checker sits behind a common
//! trait and is selected at runtime by name (the CLI `--check` flag).

use crate::error::Result;
use crate::means::MeanPair;
use crate::norms::NormKind;
use crate::verify::{
    check_alt_lemma, check_bourin_bound, check_bourin_vs_heinz, check_frobenius_chain_exploratory,
    check_heinz, check_remark_quantity_exploratory, check_singular_dominance,
    check_strip_inequality_exploratory, GridSpec, InequalityReport,
};

/// Whether a failed report indicates a software bug (proved statement) or a
/// recorded counterexample finding (conjectured statement).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckClass {
    Theorem,
    Conjecture,
}

/// Shared parameter set handed to every registered checker.
#[derive(Debug, Clone)]
pub struct CheckParams {
    pub t_grid: Vec<f64>,
    pub norm: NormKind,
    pub r_values: Vec<f64>,
    pub grid: GridSpec,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            t_grid: vec![0.5],
            norm: NormKind::Frobenius,
            r_values: vec![2.0, 4.0],
            grid: GridSpec::default(),
        }
    }
}

/// A report together with its enforcement status. `asserted` is true when
/// the statement is proved for these parameters, so `holds = false` there
/// is a failure; otherwise a violation is a finding (or an exploratory
/// data point outside the proved range).
#[derive(Debug, Clone)]
pub struct CheckedReport {
    pub report: InequalityReport,
    pub asserted: bool,
}

pub trait InequalityCheck {
    fn name(&self) -> &'static str;
    fn class(&self) -> CheckClass;
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>>;
}

struct AltLemma;
impl InequalityCheck for AltLemma {
    fn name(&self) -> &'static str {
        "alt"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Theorem
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        params
            .r_values
            .iter()
            .map(|&r| {
                Ok(CheckedReport {
                    report: check_alt_lemma(pair, r)?,
                    asserted: true,
                })
            })
            .collect()
    }
}

struct Strip;
impl InequalityCheck for Strip {
    fn name(&self) -> &'static str {
        "strip"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Theorem
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        let asserted = params.grid.in_strip();
        Ok(check_strip_inequality_exploratory(pair, &params.grid)?
            .into_iter()
            .map(|report| CheckedReport { report, asserted })
            .collect())
    }
}

struct Heinz;
impl InequalityCheck for Heinz {
    fn name(&self) -> &'static str {
        "heinz"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Theorem
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        params
            .t_grid
            .iter()
            .map(|&t| {
                Ok(CheckedReport {
                    report: check_heinz(pair, t, params.norm)?,
                    asserted: true,
                })
            })
            .collect()
    }
}

struct BourinVsHeinz;
impl InequalityCheck for BourinVsHeinz {
    fn name(&self) -> &'static str {
        "bvh"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Conjecture
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        params
            .t_grid
            .iter()
            .map(|&t| {
                let report = check_bourin_vs_heinz(pair, t, params.norm)?;
                // proved for the Frobenius norm on [1/4, 3/4]
                let asserted =
                    params.norm == NormKind::Frobenius && (0.25..=0.75).contains(&t);
                Ok(CheckedReport { report, asserted })
            })
            .collect()
    }
}

struct BourinBound;
impl InequalityCheck for BourinBound {
    fn name(&self) -> &'static str {
        "bourin"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Conjecture
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        params
            .t_grid
            .iter()
            .map(|&t| {
                Ok(CheckedReport {
                    report: check_bourin_bound(pair, t, params.norm)?,
                    asserted: false,
                })
            })
            .collect()
    }
}

struct SingularDominance;
impl InequalityCheck for SingularDominance {
    fn name(&self) -> &'static str {
        "sj"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Conjecture
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        let mut out = Vec::new();
        for &t in &params.t_grid {
            if !(t > 0.0 && t < 1.0) {
                continue;
            }
            for report in check_singular_dominance(pair, t)? {
                out.push(CheckedReport {
                    report,
                    asserted: false,
                });
            }
        }
        Ok(out)
    }
}

struct RemarkQuantity;
impl InequalityCheck for RemarkQuantity {
    fn name(&self) -> &'static str {
        "remark"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Theorem
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        params
            .t_grid
            .iter()
            .map(|&t| {
                Ok(CheckedReport {
                    report: check_remark_quantity_exploratory(pair, t)?,
                    asserted: (0.25..=0.75).contains(&t),
                })
            })
            .collect()
    }
}

struct FrobeniusChain;
impl InequalityCheck for FrobeniusChain {
    fn name(&self) -> &'static str {
        "chain"
    }
    fn class(&self) -> CheckClass {
        CheckClass::Theorem
    }
    fn run(&self, pair: &MeanPair, params: &CheckParams) -> Result<Vec<CheckedReport>> {
        let mut out = Vec::new();
        for &t in &params.t_grid {
            let asserted = (0.25..=0.75).contains(&t);
            for report in check_frobenius_chain_exploratory(pair, t)? {
                out.push(CheckedReport { report, asserted });
            }
        }
        Ok(out)
    }
}

/// All registered checkers, in CLI presentation order.
pub fn registry() -> Vec<Box<dyn InequalityCheck>> {
    vec![
        Box::new(AltLemma),
        Box::new(Strip),
        Box::new(Heinz),
        Box::new(BourinVsHeinz),
        Box::new(BourinBound),
        Box::new(SingularDominance),
        Box::new(RemarkQuantity),
        Box::new(FrobeniusChain),
    ]
}

pub fn lookup(name: &str) -> Option<Box<dyn InequalityCheck>> {
    registry().into_iter().find(|c| c.name() == name)
}
