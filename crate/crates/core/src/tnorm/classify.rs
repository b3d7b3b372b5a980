//! Structural classification of ordinal sums and the numeric off-diagonal scan
//! used to cross-check it.

use serde::{Deserialize, Serialize};

use super::{Component, ComponentKind, OrdinalSumTNorm};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Number of bisection rounds used to confirm a coarse jump in
/// [`scan_offdiagonal`]. A jump that survives this many halvings of the cell
/// is a genuine discontinuity, not a steep continuous slope.
const REFINE_ROUNDS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    AllCompletelyDistributiveAreContinuous,
    Fails,
}

impl Verdict {
    pub fn passes(self) -> bool {
        self == Verdict::AllCompletelyDistributiveAreContinuous
    }
}

/// The point `(x, y)` where the residuum jumps: its left limit in `y` differs
/// from its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscontinuityWitness {
    pub x: Rational,
    pub y: Rational,
    pub left_limit: Rational,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub offending: Vec<Component>,
    pub witness: Option<DiscontinuityWitness>,
}

/// Every summand whose bottom idempotent is positive must be a product
/// summand; each positive-bottom Łukasiewicz summand is reported.
pub fn classify(t: &OrdinalSumTNorm) -> ClassificationResult {
    let offending: Vec<Component> = t
        .components()
        .iter()
        .filter(|c| is_offending(c))
        .cloned()
        .collect();
    let witness = offending
        .first()
        .map(|c| discontinuity_witness(t, c).expect("offending summand has a witness"));
    let verdict = if offending.is_empty() {
        Verdict::AllCompletelyDistributiveAreContinuous
    } else {
        Verdict::Fails
    };
    ClassificationResult {
        verdict,
        offending,
        witness,
    }
}

fn is_offending(c: &Component) -> bool {
    c.kind == ComponentKind::Lukasiewicz && c.lo.is_positive()
}

/// For an offending summand `[lo, hi]`, the residuum is discontinuous at
/// `(x, lo)` with `x` the midpoint: approaching `lo` from below gives `lo`,
/// while the value at `lo` is `lo + (hi - lo)(1 - x')`.
pub fn discontinuity_witness(t: &OrdinalSumTNorm, c: &Component) -> Result<DiscontinuityWitness> {
    if !t.components().contains(c) {
        return Err(Error::NotApplicable(format!("{c} is not a summand of {t}")));
    }
    if !is_offending(c) {
        return Err(Error::NotApplicable(format!(
            "{c} is not a Łukasiewicz summand with positive lower bound"
        )));
    }
    let x = c.midpoint();
    let y = c.lo.clone();
    let left_limit = t.left_limit_residuum_unchecked(&x, &y);
    let value = t.residuum_unchecked(&x, &y);
    debug_assert_eq!(left_limit, c.lo);
    debug_assert_eq!(value, c.from_local(&(Rational::one() - c.to_local(&x))));
    Ok(DiscontinuityWitness {
        x,
        y,
        left_limit,
        value,
    })
}

/// A grid cell edge `(x0, y0) - (x1, y1)` across which the residuum jumps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanPoint {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
    pub jump: Rational,
}

/// Samples `x → y` on the grid `{0, step, 2·step, …, 1}²` and reports the
/// adjacent grid pairs whose values differ by more than `jump_tol`, after
/// confirming each jump by bisection and discarding those located within
/// `2·step` of the diagonal.
pub fn scan_offdiagonal(
    t: &OrdinalSumTNorm,
    grid_step: &Rational,
    jump_tol: &Rational,
) -> Result<Vec<ScanPoint>> {
    if !grid_step.is_positive() || *grid_step > 1 {
        return Err(Error::OutOfRange {
            what: "grid_step",
            value: grid_step.clone(),
        });
    }
    if jump_tol.is_negative() {
        return Err(Error::OutOfRange {
            what: "jump_tol",
            value: jump_tol.clone(),
        });
    }
    let mut grid: Vec<Rational> = Vec::new();
    let mut v = Rational::zero();
    while v < Rational::one() {
        grid.push(v.clone());
        v = v + grid_step;
    }
    grid.push(Rational::one());

    let n = grid.len();
    let table: Vec<Vec<Rational>> = grid
        .iter()
        .map(|x| grid.iter().map(|y| t.residuum_unchecked(x, y)).collect())
        .collect();
    let band = grid_step * Rational::from_integer(2);

    let mut found = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut neighbours = Vec::with_capacity(2);
            if i + 1 < n {
                neighbours.push((i + 1, j));
            }
            if j + 1 < n {
                neighbours.push((i, j + 1));
            }
            for (i1, j1) in neighbours {
                let jump = (&table[i][j] - &table[i1][j1]).abs();
                if jump <= *jump_tol {
                    continue;
                }
                let a = (grid[i].clone(), grid[j].clone());
                let b = (grid[i1].clone(), grid[j1].clone());
                let Some((lx, ly)) = confirm_jump(t, a, b, jump_tol) else {
                    continue;
                };
                if (&lx - &ly).abs() > band {
                    found.push(ScanPoint {
                        x0: grid[i].clone(),
                        y0: grid[j].clone(),
                        x1: grid[i1].clone(),
                        y1: grid[j1].clone(),
                        jump,
                    });
                }
            }
        }
    }
    Ok(found)
}

/// Repeatedly halves the segment `a - b`, keeping the half with the larger
/// jump. Returns the final location if the jump stays above `tol` throughout.
fn confirm_jump(
    t: &OrdinalSumTNorm,
    mut a: (Rational, Rational),
    mut b: (Rational, Rational),
    tol: &Rational,
) -> Option<(Rational, Rational)> {
    let two = Rational::from_integer(2);
    let mut va = t.residuum_unchecked(&a.0, &a.1);
    let mut vb = t.residuum_unchecked(&b.0, &b.1);
    for _ in 0..REFINE_ROUNDS {
        let m = ((&a.0 + &b.0) / &two, (&a.1 + &b.1) / &two);
        let vm = t.residuum_unchecked(&m.0, &m.1);
        let left = (&va - &vm).abs();
        let right = (&vm - &vb).abs();
        if left <= *tol && right <= *tol {
            return None;
        }
        if left >= right {
            b = m;
            vb = vm;
        } else {
            a = m;
            va = vm;
        }
    }
    Some(a)
}

/// Way-below on `[0,1]`: `x ≪ y` iff `x = 0` or `x < y`.
pub fn way_below_unit(x: &Rational, y: &Rational) -> bool {
    x.is_zero() || x < y
}
