//! The continuity equation on the Q-category `([0,1], d_L)` with
//! `d_L(x, y) = x → y`, evaluated exactly for the ideal weights
//! `φ_c = ⋁_{r<c} y(r)`.
//!
//! For a continuous `([0,1], d_L)` every forward Cauchy weight `φ` and every
//! `x` satisfy `x → sup φ = ⋀_{y≪x} φ(y)`. The left side always dominates the
//! right; a strict gap is a certificate of non-continuity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tnorm::{classify, Component, OrdinalSumTNorm};

/// The weight `⋁_{r<c} y(r)` of `([0,1], d_L)`, for `c ∈ (0,1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealWeightBelow {
    threshold: Rational,
}

impl IdealWeightBelow {
    pub fn new(threshold: Rational) -> Result<Self> {
        if !threshold.is_positive() || threshold > 1 {
            return Err(Error::OutOfRange {
                what: "c",
                value: threshold,
            });
        }
        Ok(IdealWeightBelow { threshold })
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    /// `φ_c(x) = ⋁_{r<c} (x → r)`.
    pub fn eval(&self, t: &OrdinalSumTNorm, x: &Rational) -> Result<Rational> {
        t.left_limit_residuum(x, &self.threshold)
    }

    /// The supremum of `φ_c` in `([0,1], d_L)`: the join of its `1`-cut `[0, c)`.
    pub fn supremum(&self) -> Rational {
        self.threshold.clone()
    }

    /// `⋀_{y≪x} φ_c(y)`. For `x = 0` the only element way below is `0` itself;
    /// otherwise it is `[0, x)` and, `φ_c` being antitone, the meet is the left
    /// limit of `φ_c` at `x`.
    pub fn meet_way_below(&self, t: &OrdinalSumTNorm, x: &Rational) -> Result<Rational> {
        if !x.in_unit_interval() {
            return Err(Error::OutOfRange {
                what: "x",
                value: x.clone(),
            });
        }
        let c = &self.threshold;
        if x.is_zero() {
            return Ok(t.left_limit_residuum_unchecked(x, c));
        }
        if x <= c {
            // every y < x is below c
            return Ok(Rational::one());
        }
        // c < x: for y ↑ x, y eventually lies in (c, x) where φ_c is continuous
        // from the left, so the limit is φ_c(x)
        Ok(t.left_limit_residuum_unchecked(x, c))
    }
}

pub fn eval_ideal_weight(t: &OrdinalSumTNorm, c: &Rational, x: &Rational) -> Result<Rational> {
    IdealWeightBelow::new(c.clone())?.eval(t, x)
}

pub fn sup_of_ideal_weight(c: &Rational) -> Result<Rational> {
    Ok(IdealWeightBelow::new(c.clone())?.supremum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuityCheckReport {
    pub c: Rational,
    pub x: Rational,
    /// `x → sup φ_c`
    pub lhs: Rational,
    /// `⋀_{y≪x} φ_c(y)`
    pub rhs: Rational,
    pub equal: bool,
    pub gap: Rational,
}

pub fn continuity_equation_check(
    t: &OrdinalSumTNorm,
    c: &Rational,
    x: &Rational,
) -> Result<ContinuityCheckReport> {
    let phi = IdealWeightBelow::new(c.clone())?;
    let lhs = t.residuum(x, &phi.supremum())?;
    let rhs = phi.meet_way_below(t, x)?;
    let gap = &lhs - &rhs;
    debug_assert!(!gap.is_negative(), "lhs < rhs at c={c}, x={x}");
    Ok(ContinuityCheckReport {
        c: c.clone(),
        x: x.clone(),
        equal: lhs == rhs,
        lhs,
        rhs,
        gap,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentChecks {
    pub component: Component,
    pub checks: Vec<ContinuityCheckReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    /// Every summand with a positive lower bound, with the equation evaluated
    /// at `c = lo` and the sample points.
    pub examined: Vec<ComponentChecks>,
    /// The checks with a strict gap.
    pub gaps: Vec<ContinuityCheckReport>,
}

impl CounterexampleReport {
    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }
}

/// Evaluates the continuity equation at `c = lo` for each summand `[lo, hi]`
/// with `lo > 0`, at `samples` evenly spaced interior points
/// `lo + (hi - lo)·i/(samples + 1)`. Only Łukasiewicz summands can produce a
/// gap; product summands are examined as a control.
pub fn counterexample_report(t: &OrdinalSumTNorm, samples: usize) -> Result<CounterexampleReport> {
    if samples == 0 {
        return Err(Error::OutOfRange {
            what: "samples",
            value: Rational::zero(),
        });
    }
    let mut examined = Vec::new();
    let mut gaps = Vec::new();
    let denom = Rational::from_integer(samples as i64 + 1);
    for comp in t.components().iter().filter(|c| c.lo.is_positive()) {
        let mut checks = Vec::with_capacity(samples);
        for i in 1..=samples {
            let u = Rational::from_integer(i as i64) / &denom;
            let x = comp.from_local(&u);
            let report = continuity_equation_check(t, &comp.lo, &x)?;
            if !report.equal {
                gaps.push(report.clone());
            }
            checks.push(report);
        }
        examined.push(ComponentChecks {
            component: comp.clone(),
            checks,
        });
    }
    debug_assert_eq!(gaps.is_empty(), classify(t).verdict.passes());
    Ok(CounterexampleReport { examined, gaps })
}
