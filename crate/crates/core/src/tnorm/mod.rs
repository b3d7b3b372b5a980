//! Continuous t-norms on `[0,1]` given as finite ordinal sums of Łukasiewicz and
//! product summands glued over `min`.
//!
//! Everything here is exact: a summand `[lo, hi]` rescales its basic t-norm
//! affinely onto the square `[lo, hi]²`, and outside every such square the
//! operation is `min`. Residua are evaluated in closed form.

mod classify;

pub use classify::{
    classify, discontinuity_witness, scan_offdiagonal, way_below_unit, ClassificationResult,
    DiscontinuityWitness, ScanPoint, Verdict,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The basic Archimedean t-norm a summand is isomorphic to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Lukasiewicz,
    Product,
}

impl ComponentKind {
    /// The basic t-norm on `[0,1]`.
    pub fn tensor(self, u: &Rational, v: &Rational) -> Rational {
        match self {
            ComponentKind::Lukasiewicz => {
                let s = u + v - Rational::one();
                Rational::max_of(&s, &Rational::zero())
            }
            ComponentKind::Product => u * v,
        }
    }

    /// The residuum of the basic t-norm on `[0,1]`.
    pub fn implies(self, u: &Rational, v: &Rational) -> Rational {
        if u <= v {
            return Rational::one();
        }
        match self {
            ComponentKind::Lukasiewicz => Rational::one() - u + v,
            // u > v >= 0, so u is nonzero
            ComponentKind::Product => v / u,
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentKind::Lukasiewicz => f.write_str("lukasiewicz"),
            ComponentKind::Product => f.write_str("product"),
        }
    }
}

/// One summand `[lo, hi]` of an ordinal sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub lo: Rational,
    pub hi: Rational,
    pub kind: ComponentKind,
}

impl Component {
    pub fn new(lo: Rational, hi: Rational, kind: ComponentKind) -> Result<Self> {
        let c = Component { lo, hi, kind };
        c.check()?;
        Ok(c)
    }

    fn check(&self) -> Result<()> {
        if self.lo.is_negative() || self.hi > 1 || self.lo >= self.hi {
            return Err(Error::InvalidTNorm(format!(
                "component [{}, {}] must satisfy 0 <= lo < hi <= 1",
                self.lo, self.hi
            )));
        }
        Ok(())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_open(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Affine map `[lo, hi] -> [0, 1]`.
    pub fn to_local(&self, x: &Rational) -> Rational {
        (x - &self.lo) / self.width()
    }

    /// Affine map `[0, 1] -> [lo, hi]`.
    pub fn from_local(&self, u: &Rational) -> Rational {
        &self.lo + self.width() * u
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}, {}]", self.kind, self.lo, self.hi)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTNorm {
    #[serde(default)]
    components: Vec<Component>,
}

/// A continuous t-norm as a finite ordinal sum. The empty sum is the Gödel
/// t-norm `min`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTNorm")]
pub struct OrdinalSumTNorm {
    components: Vec<Component>,
}

impl TryFrom<RawTNorm> for OrdinalSumTNorm {
    type Error = Error;

    fn try_from(raw: RawTNorm) -> Result<Self> {
        OrdinalSumTNorm::new(raw.components)
    }
}

impl OrdinalSumTNorm {
    /// Sorts the summands by `lo` and checks that their interiors are disjoint.
    /// Adjacent summands may share an endpoint.
    pub fn new(mut components: Vec<Component>) -> Result<Self> {
        for c in &components {
            c.check()?;
        }
        components.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        for pair in components.windows(2) {
            if pair[1].lo < pair[0].hi {
                return Err(Error::InvalidTNorm(format!(
                    "components {} and {} overlap",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(OrdinalSumTNorm { components })
    }

    pub fn godel() -> Self {
        OrdinalSumTNorm {
            components: Vec::new(),
        }
    }

    pub fn lukasiewicz() -> Self {
        Self::single(
            ComponentKind::Lukasiewicz,
            Rational::zero(),
            Rational::one(),
        )
    }

    pub fn product() -> Self {
        Self::single(ComponentKind::Product, Rational::zero(), Rational::one())
    }

    /// A single summand on `[lo, hi]`, `min` elsewhere. Panics on bad bounds.
    pub fn single(kind: ComponentKind, lo: Rational, hi: Rational) -> Self {
        let c = Component::new(lo, hi, kind).expect("valid component bounds");
        OrdinalSumTNorm {
            components: vec![c],
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// No idempotents besides 0 and 1: a single summand spanning `[0,1]`.
    pub fn is_archimedean(&self) -> bool {
        matches!(self.components.as_slice(), [c] if c.lo.is_zero() && c.hi.is_one())
    }

    /// The summand whose square contains `(x, y)`, if any.
    fn square_of(&self, x: &Rational, y: &Rational) -> Option<&Component> {
        self.components
            .iter()
            .find(|c| c.contains(x) && c.contains(y))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        check_unit("x", x)?;
        check_unit("y", y)?;
        Ok(self.eval_unchecked(x, y))
    }

    pub(crate) fn eval_unchecked(&self, x: &Rational, y: &Rational) -> Rational {
        match self.square_of(x, y) {
            Some(c) => c.from_local(&c.kind.tensor(&c.to_local(x), &c.to_local(y))),
            None => Rational::min_of(x, y),
        }
    }

    /// `x → y = max{z : x & z <= y}`.
    pub fn residuum(&self, x: &Rational, y: &Rational) -> Result<Rational> {
        check_unit("x", x)?;
        check_unit("y", y)?;
        Ok(self.residuum_unchecked(x, y))
    }

    pub(crate) fn residuum_unchecked(&self, x: &Rational, y: &Rational) -> Rational {
        if x <= y {
            return Rational::one();
        }
        // y < x; same summand with y >= lo
        if let Some(c) = self.square_of(x, y) {
            return c.from_local(&c.kind.implies(&c.to_local(x), &c.to_local(y)));
        }
        // an idempotent p with y < p <= x separates them
        y.clone()
    }

    /// `sup_{r < c} (x → r)`, the left limit at `c` of the monotone map
    /// `r ↦ x → r`.
    pub fn left_limit_residuum(&self, x: &Rational, c: &Rational) -> Result<Rational> {
        check_unit("x", x)?;
        check_unit("c", c)?;
        if c.is_zero() {
            return Err(Error::Undefined(
                "sup over r < 0 is over the empty set".to_string(),
            ));
        }
        Ok(self.left_limit_residuum_unchecked(x, c))
    }

    pub(crate) fn left_limit_residuum_unchecked(&self, x: &Rational, c: &Rational) -> Rational {
        if x < c {
            return Rational::one();
        }
        // c <= x. Points just below c lie in the summand with lo < c <= hi, if any.
        match self.left_neighbourhood(c) {
            Some(k) if x <= &k.hi => {
                let u = k.to_local(x);
                let v = k.to_local(c);
                let local = match k.kind {
                    ComponentKind::Lukasiewicz => Rational::one() - &u + &v,
                    // u >= v > 0
                    ComponentKind::Product => &v / &u,
                };
                k.from_local(&local)
            }
            _ => c.clone(),
        }
    }

    /// The summand containing a left neighbourhood `(c - ε, c]` of `c`.
    pub(crate) fn left_neighbourhood(&self, c: &Rational) -> Option<&Component> {
        self.components.iter().find(|k| &k.lo < c && c <= &k.hi)
    }

    /// The idempotent elements: `[0,1]` minus the open summand intervals.
    pub fn idempotents(&self) -> IntervalSet {
        let mut pieces = Vec::new();
        let mut cursor = Rational::zero();
        for c in &self.components {
            pieces.push(ClosedInterval {
                lo: cursor.clone(),
                hi: c.lo.clone(),
            });
            cursor = c.hi.clone();
        }
        pieces.push(ClosedInterval {
            lo: cursor,
            hi: Rational::one(),
        });
        IntervalSet { pieces }
    }
}

impl fmt::Display for OrdinalSumTNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("min");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{} over min", parts.join(" ⊕ "))
    }
}

fn check_unit(what: &'static str, value: &Rational) -> Result<()> {
    if value.in_unit_interval() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value: value.clone(),
        })
    }
}

/// A closed interval `[lo, hi]`; a single point when `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl ClosedInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Display for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// A finite union of closed intervals, sorted and pairwise disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalSet {
    pub pieces: Vec<ClosedInterval>,
}

impl IntervalSet {
    pub fn contains(&self, x: &Rational) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(" ∪ "))
    }
}
