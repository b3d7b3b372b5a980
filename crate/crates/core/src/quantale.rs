//! Finite commutative unital quantales.
//!
//! A [`QuantaleTable`] is raw input: element labels, an order matrix, a tensor
//! table and a unit. [`validate`] lists every violated axiom with a witness.
//! A [`FiniteQuantale`] is a validated table with joins, meets and the
//! residuum precomputed; the residuum is always derived from the tensor.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tnorm::OrdinalSumTNorm;

/// Default cap on the number of elements produced by [`FiniteQuantale::from_tnorm`].
pub const DEFAULT_CLOSURE_CAP: usize = 64;

/// Elements are referred to by their index in the label list.
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantaleTable {
    pub elements: Vec<String>,
    pub le: Vec<Vec<bool>>,
    pub tensor: Vec<Vec<Elem>>,
    pub unit: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    Bottom,
    BinaryJoin,
    Commutativity,
    Associativity,
    UnitLaw,
    Monotonicity,
    JoinDistributivity,
    BottomAnnihilation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} fails at ({})", self.axiom, self.witness.join(", "))
    }
}

fn check_shape(t: &QuantaleTable) -> Result<()> {
    let n = t.elements.len();
    if n == 0 {
        return Err(Error::Shape("a quantale needs at least one element".into()));
    }
    let mut seen = BTreeSet::new();
    for l in &t.elements {
        if !seen.insert(l) {
            return Err(Error::Shape(format!("duplicate element label `{l}`")));
        }
    }
    if t.le.len() != n || t.le.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("order matrix must be {n}×{n}")));
    }
    if t.tensor.len() != n || t.tensor.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("tensor table must be {n}×{n}")));
    }
    if t.tensor.iter().flatten().any(|&e| e >= n) || t.unit >= n {
        return Err(Error::Shape(
            "tensor table or unit refers to a missing element".into(),
        ));
    }
    Ok(())
}

/// Checks every quantale axiom. `Ok(vec![])` means the table is a finite
/// commutative unital quantale.
///
/// In a finite lattice, preserving binary joins and the bottom element is
/// the same as preserving all joins, so only those are checked.
pub fn validate(t: &QuantaleTable) -> Result<Vec<Violation>> {
    check_shape(t)?;
    let n = t.elements.len();
    let mut out = Vec::new();
    let mut push = |axiom: Axiom, w: &[Elem]| record(&mut out, t, axiom, w);

    let le = &t.le;
    for a in 0..n {
        if !le[a][a] {
            push(Axiom::Reflexivity, &[a]);
        }
        for b in 0..n {
            if a != b && le[a][b] && le[b][a] {
                push(Axiom::Antisymmetry, &[a, b]);
            }
            for c in 0..n {
                if le[a][b] && le[b][c] && !le[a][c] {
                    push(Axiom::Transitivity, &[a, b, c]);
                }
            }
        }
    }
    let order_ok = !le.iter().enumerate().any(|(a, row)| !row[a])
        && (0..n).all(|a| (0..n).all(|b| a == b || !(le[a][b] && le[b][a])))
        && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(le[a][b] && le[b][c]) || le[a][c])));

    let bottom = (0..n).find(|&b| (0..n).all(|x| le[b][x]));
    if bottom.is_none() {
        push(Axiom::Bottom, &[]);
    }
    let mut joins = vec![vec![None; n]; n];
    for a in 0..n {
        for b in 0..n {
            joins[a][b] = least_upper_bound(le, &[a, b]);
            if joins[a][b].is_none() {
                push(Axiom::BinaryJoin, &[a, b]);
            }
        }
    }

    let m = &t.tensor;
    for a in 0..n {
        if m[t.unit][a] != a || m[a][t.unit] != a {
            push(Axiom::UnitLaw, &[a]);
        }
        for b in 0..n {
            if m[a][b] != m[b][a] {
                push(Axiom::Commutativity, &[a, b]);
            }
            for c in 0..n {
                if m[m[a][b]][c] != m[a][m[b][c]] {
                    push(Axiom::Associativity, &[a, b, c]);
                }
                if order_ok && le[b][c] && !le[m[a][b]][m[a][c]] {
                    push(Axiom::Monotonicity, &[a, b, c]);
                }
                if let Some(j) = joins[b][c] {
                    let lhs = m[a][j];
                    if let Some(rhs) = joins[m[a][b]][m[a][c]] {
                        if lhs != rhs {
                            push(Axiom::JoinDistributivity, &[a, b, c]);
                        }
                    }
                }
            }
        }
        if let Some(bot) = bottom {
            if m[a][bot] != bot {
                push(Axiom::BottomAnnihilation, &[a]);
            }
        }
    }
    Ok(out)
}

/// Keeps the first witness per axiom.
fn record(out: &mut Vec<Violation>, t: &QuantaleTable, axiom: Axiom, w: &[Elem]) {
    if !out.iter().any(|v| v.axiom == axiom) {
        out.push(Violation {
            axiom,
            witness: w.iter().map(|&i| t.elements[i].clone()).collect(),
        });
    }
}

/// The least upper bound of `set` in the order `le`, if one exists.
fn least_upper_bound(le: &[Vec<bool>], set: &[Elem]) -> Option<Elem> {
    let n = le.len();
    let uppers: Vec<Elem> = (0..n).filter(|&u| set.iter().all(|&s| le[s][u])).collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&v| le[u][v]))
}

/// A validated finite commutative unital quantale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuantale {
    labels: Vec<String>,
    le: Vec<Vec<bool>>,
    tensor: Vec<Vec<Elem>>,
    unit: Elem,
    join: Vec<Vec<Elem>>,
    meet: Vec<Vec<Elem>>,
    implies: Vec<Vec<Elem>>,
    bottom: Elem,
    top: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "n")]
pub enum Standard {
    Boolean,
    GodelChain(usize),
    LukasiewiczChain(usize),
}

impl FiniteQuantale {
    pub fn new(table: QuantaleTable) -> Result<Self> {
        let violations = validate(&table)?;
        if !violations.is_empty() {
            let msg: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
            return Err(Error::InvalidQuantale(msg.join("; ")));
        }
        let QuantaleTable {
            elements: labels,
            le,
            tensor,
            unit,
        } = table;
        let n = labels.len();
        let lub = |set: &[Elem]| least_upper_bound(&le, set).expect("finite lattice");
        let bottom = lub(&[]);
        let top = lub(&(0..n).collect::<Vec<_>>());
        let join: Vec<Vec<Elem>> = (0..n)
            .map(|a| (0..n).map(|b| lub(&[a, b])).collect())
            .collect();
        let meet: Vec<Vec<Elem>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let lowers: Vec<Elem> = (0..n).filter(|&z| le[z][a] && le[z][b]).collect();
                        lub(&lowers)
                    })
                    .collect()
            })
            .collect();
        let implies: Vec<Vec<Elem>> = (0..n)
            .map(|p| {
                (0..n)
                    .map(|r| {
                        let below: Vec<Elem> = (0..n).filter(|&z| le[tensor[p][z]][r]).collect();
                        lub(&below)
                    })
                    .collect()
            })
            .collect();
        Ok(FiniteQuantale {
            labels,
            le,
            tensor,
            unit,
            join,
            meet,
            implies,
            bottom,
            top,
        })
    }

    /// The chain `values` (sorted ascending, duplicates removed) with tensor
    /// `op` and unit the largest value.
    pub fn chain<F>(values: &[Rational], op: F) -> Result<Self>
    where
        F: Fn(&Rational, &Rational) -> Rational,
    {
        let mut vals: Vec<Rational> = values.to_vec();
        vals.sort();
        vals.dedup();
        let n = vals.len();
        let index = |v: &Rational| {
            vals.binary_search(v).map_err(|_| {
                Error::InvalidQuantale(format!("tensor value {v} is not an element of the chain"))
            })
        };
        let mut tensor = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                tensor[i][j] = index(&op(&vals[i], &vals[j]))?;
            }
        }
        let le = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        FiniteQuantale::new(QuantaleTable {
            elements: vals.iter().map(|v| v.to_string()).collect(),
            le,
            tensor,
            unit: n - 1,
        })
    }

    pub fn standard(kind: Standard) -> Result<Self> {
        let grid = |n: usize| -> Result<Vec<Rational>> {
            if n < 2 {
                return Err(Error::Shape(format!(
                    "a chain needs n >= 2 points, got {n}"
                )));
            }
            Ok((0..n)
                .map(|i| Rational::new(i as i64, n as i64 - 1))
                .collect())
        };
        match kind {
            Standard::Boolean => Self::chain(&grid(2)?, Rational::min_of),
            Standard::GodelChain(n) => Self::chain(&grid(n)?, Rational::min_of),
            Standard::LukasiewiczChain(n) => Self::chain(&grid(n)?, |x, y| {
                Rational::max_of(&(x + y - Rational::one()), &Rational::zero())
            }),
        }
    }

    pub fn boolean() -> Self {
        Self::standard(Standard::Boolean).expect("boolean quantale")
    }

    pub fn godel_chain(n: usize) -> Self {
        Self::standard(Standard::GodelChain(n)).expect("godel chain")
    }

    pub fn lukasiewicz_chain(n: usize) -> Self {
        Self::standard(Standard::LukasiewiczChain(n)).expect("lukasiewicz chain")
    }

    /// Closes `points` under the t-norm and restricts the t-norm to the
    /// resulting finite chain. Fails with `ClosureOverflow` once more than
    /// `cap` elements are generated.
    pub fn from_tnorm(t: &OrdinalSumTNorm, points: &[Rational], cap: usize) -> Result<Self> {
        for p in points {
            if !p.in_unit_interval() {
                return Err(Error::OutOfRange {
                    what: "point",
                    value: p.clone(),
                });
            }
        }
        let mut set: BTreeSet<Rational> = points.iter().cloned().collect();
        if !set.contains(&Rational::zero()) || !set.contains(&Rational::one()) {
            return Err(Error::Shape("points must contain 0 and 1".into()));
        }
        loop {
            if set.len() > cap {
                return Err(Error::ClosureOverflow { cap });
            }
            let current: Vec<Rational> = set.iter().cloned().collect();
            let mut grew = false;
            for (i, a) in current.iter().enumerate() {
                for b in &current[i..] {
                    if set.insert(t.eval_unchecked(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let values: Vec<Rational> = set.into_iter().collect();
        Self::chain(&values, |a, b| t.eval_unchecked(a, b))
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Result<Elem> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.le[a][b]
    }

    pub fn tensor(&self, a: Elem, b: Elem) -> Elem {
        self.tensor[a][b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a][b]
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a][b]
    }

    /// `p → r = ⋁{z : p & z <= r}`.
    pub fn implies(&self, p: Elem, r: Elem) -> Elem {
        self.implies[p][r]
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items
            .into_iter()
            .fold(self.bottom, |acc, e| self.join(acc, e))
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    /// `k <= a`.
    pub fn above_unit(&self, a: Elem) -> bool {
        self.le(self.unit, a)
    }

    pub fn is_integral(&self) -> bool {
        self.unit == self.top
    }

    pub fn residuum(&self, p: &str, r: &str) -> Result<&str> {
        let p = self.index_of(p)?;
        let r = self.index_of(r)?;
        Ok(self.label(self.implies(p, r)))
    }

    pub fn table(&self) -> QuantaleTable {
        QuantaleTable {
            elements: self.labels.clone(),
            le: self.le.clone(),
            tensor: self.tensor.clone(),
            unit: self.unit,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::tnorm::ComponentKind;

    fn chain3_table(tensor: [[usize; 3]; 3], unit: usize) -> QuantaleTable {
        QuantaleTable {
            elements: vec!["0".into(), "1/2".into(), "1".into()],
            le: (0..3).map(|i| (0..3).map(|j| i <= j).collect()).collect(),
            tensor: tensor.iter().map(|r| r.to_vec()).collect(),
            unit,
        }
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&FiniteQuantale::boolean().table())
            .unwrap()
            .is_empty());
        let godel = chain3_table([[0, 0, 0], [0, 1, 1], [0, 1, 2]], 2);
        assert!(validate(&godel).unwrap().is_empty());
        let corrupted = chain3_table([[0, 0, 0], [0, 2, 1], [0, 1, 2]], 2);
        let v = validate(&corrupted).unwrap();
        let axioms: Vec<Axiom> = v.iter().map(|v| v.axiom).collect();
        assert!(axioms.contains(&Axiom::Monotonicity), "{v:?}");
        assert!(!axioms.contains(&Axiom::Commutativity));
        let mono = v.iter().find(|v| v.axiom == Axiom::Monotonicity).unwrap();
        assert_eq!(mono.witness, vec!["1/2", "1/2", "1"]);
    }

    #[test]
    fn validate_rejects_ragged_tables() {
        let mut t = FiniteQuantale::boolean().table();
        t.tensor[1].pop();
        assert!(matches!(validate(&t), Err(Error::Shape(_))));
        let mut t = FiniteQuantale::boolean().table();
        t.le.pop();
        assert!(matches!(validate(&t), Err(Error::Shape(_))));
    }

    #[test]
    fn validate_detects_non_lattice() {
        // a ≤ c, b ≤ c, no bottom
        let t = QuantaleTable {
            elements: vec!["a".into(), "b".into(), "c".into()],
            le: vec![
                vec![true, false, true],
                vec![false, true, true],
                vec![false, false, true],
            ],
            tensor: vec![vec![0, 2, 0], vec![2, 1, 1], vec![0, 1, 2]],
            unit: 2,
        };
        let axioms: Vec<Axiom> = validate(&t).unwrap().iter().map(|v| v.axiom).collect();
        assert!(axioms.contains(&Axiom::Bottom));
        assert!(FiniteQuantale::new(t).is_err());
    }

    #[test]
    fn residuum_examples() {
        let b = FiniteQuantale::boolean();
        assert_eq!(b.residuum("1", "0").unwrap(), "0");
        let l = FiniteQuantale::lukasiewicz_chain(3);
        assert_eq!(l.residuum("1/2", "0").unwrap(), "1/2");
        for q in [b, l, FiniteQuantale::godel_chain(4)] {
            for r in q.elements() {
                assert_eq!(q.implies(q.unit(), r), r);
            }
        }
        assert!(matches!(
            FiniteQuantale::boolean().residuum("2", "0"),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn residuation_is_exhaustively_adjoint() {
        let qs = [
            FiniteQuantale::boolean(),
            FiniteQuantale::godel_chain(5),
            FiniteQuantale::lukasiewicz_chain(5),
            non_integral_chain(),
        ];
        for q in &qs {
            for p in q.elements() {
                for z in q.elements() {
                    for r in q.elements() {
                        assert_eq!(q.le(q.tensor(p, z), r), q.le(z, q.implies(p, r)));
                    }
                }
            }
        }
    }

    /// 0 absorbing, otherwise max; unit is the middle element.
    fn non_integral_chain() -> FiniteQuantale {
        FiniteQuantale::new(chain3_table([[0, 0, 0], [0, 1, 2], [0, 2, 2]], 1)).unwrap()
    }

    #[test]
    fn integrality() {
        assert!(FiniteQuantale::boolean().is_integral());
        assert!(FiniteQuantale::godel_chain(3).is_integral());
        let q = non_integral_chain();
        assert!(!q.is_integral());
        assert_eq!(q.label(q.unit()), "1/2");
        assert_eq!(q.label(q.top()), "1");
    }

    #[test]
    fn standard_chains() {
        let g = FiniteQuantale::godel_chain(3);
        assert_eq!(g.labels(), ["0", "1/2", "1"]);
        assert_eq!(g.tensor(1, 2), 1);
        assert_eq!(g.tensor(1, 1), 1);
        let l = FiniteQuantale::lukasiewicz_chain(3);
        assert_eq!(l.tensor(1, 1), 0);
        assert_eq!(l.tensor(1, 2), 1);
        assert!(FiniteQuantale::standard(Standard::GodelChain(1)).is_err());
    }

    #[test]
    fn from_tnorm_examples() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| rat(a, b)).collect::<Vec<_>>();
        let g = FiniteQuantale::from_tnorm(
            &OrdinalSumTNorm::godel(),
            &pts(&[(0, 1), (1, 2), (1, 1)]),
            64,
        )
        .unwrap();
        assert_eq!(g, FiniteQuantale::godel_chain(3));
        let l = FiniteQuantale::from_tnorm(
            &OrdinalSumTNorm::lukasiewicz(),
            &pts(&[(0, 1), (1, 2), (1, 1)]),
            64,
        )
        .unwrap();
        assert_eq!(l, FiniteQuantale::lukasiewicz_chain(3));
        let t = OrdinalSumTNorm::single(ComponentKind::Lukasiewicz, rat(1, 2), rat(1, 1));
        let q = FiniteQuantale::from_tnorm(&t, &pts(&[(0, 1), (1, 4), (1, 2), (3, 4), (1, 1)]), 64)
            .unwrap();
        assert_eq!(q.size(), 5);
        let i = q.index_of("3/4").unwrap();
        assert_eq!(q.label(q.tensor(i, i)), "1/2");

        let overflow = FiniteQuantale::from_tnorm(
            &OrdinalSumTNorm::product(),
            &pts(&[(0, 1), (1, 2), (1, 1)]),
            16,
        );
        assert_eq!(overflow, Err(Error::ClosureOverflow { cap: 16 }));
        assert!(
            FiniteQuantale::from_tnorm(&OrdinalSumTNorm::godel(), &pts(&[(1, 2), (1, 1)]), 64)
                .is_err()
        );
    }
}
