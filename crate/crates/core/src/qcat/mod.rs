//! Finite Q-categories, Q-functors and distributors.

mod adjoint;
mod limits;
mod presheaf;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantale::{Elem, FiniteQuantale};

pub use adjoint::{find_left_adjoint, find_left_adjoint_naive};
pub use limits::{cotensor, inf_coweight, join_of, meet_of, sup_via_tensors, sup_weight, tensor};
pub use presheaf::{
    apply_copresheaf, apply_presheaf, copresheaf_action, copresheaf_hom, coyoneda,
    enumerate_coweights, enumerate_weights, is_coweight, is_weight, mult_apply, presheaf_action,
    presheaf_hom, presheaf_mult, weight_label, yoneda, PresheafCategory, PresheafKind,
    DEFAULT_ENUMERATION_CAP,
};

/// Objects are referred to by their index in the label list.
pub type Obj = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CategoryLaw {
    Reflexivity,
    Transitivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryViolation {
    pub law: CategoryLaw,
    pub witness: Vec<String>,
}

impl fmt::Display for CategoryViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = &self.witness;
        match self.law {
            CategoryLaw::Reflexivity => write!(f, "k ≤ A({0},{0}) fails", w[0]),
            CategoryLaw::Transitivity => write!(
                f,
                "A({1},{2}) & A({0},{1}) ≤ A({0},{2}) fails",
                w[0], w[1], w[2]
            ),
        }
    }
}

/// Checks reflexivity and transitivity of a hom matrix over `q`.
pub fn validate_category(
    q: &FiniteQuantale,
    labels: &[String],
    hom: &[Vec<Elem>],
) -> Result<Vec<CategoryViolation>> {
    let n = labels.len();
    if hom.len() != n || hom.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("hom matrix must be {n}×{n}")));
    }
    if hom.iter().flatten().any(|&e| e >= q.size()) {
        return Err(Error::Shape(
            "hom matrix refers to a missing quantale element".into(),
        ));
    }
    let mut out = Vec::new();
    for x in 0..n {
        if !q.above_unit(hom[x][x]) {
            out.push(CategoryViolation {
                law: CategoryLaw::Reflexivity,
                witness: vec![labels[x].clone()],
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !q.le(q.tensor(hom[y][z], hom[x][y]), hom[x][z]) {
                    out.push(CategoryViolation {
                        law: CategoryLaw::Transitivity,
                        witness: vec![labels[x].clone(), labels[y].clone(), labels[z].clone()],
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCategory {
    quantale: Arc<FiniteQuantale>,
    labels: Vec<String>,
    hom: Vec<Vec<Elem>>,
}

impl QCategory {
    pub fn new(
        quantale: Arc<FiniteQuantale>,
        labels: Vec<String>,
        hom: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(*l)) {
            return Err(Error::Shape(format!("duplicate object label `{dup}`")));
        }
        let violations = validate_category(&quantale, &labels, &hom)?;
        if let Some(v) = violations.first() {
            return Err(Error::InvalidCategory(v.to_string()));
        }
        Ok(QCategory {
            quantale,
            labels,
            hom,
        })
    }

    /// `(Q, d_L)` with `d_L(x, y) = x → y`.
    pub fn d_l(q: Arc<FiniteQuantale>) -> Self {
        let labels = q.labels().to_vec();
        let hom = q
            .elements()
            .map(|x| q.elements().map(|y| q.implies(x, y)).collect())
            .collect();
        QCategory {
            quantale: q,
            labels,
            hom,
        }
    }

    /// Hom `k` where `le` holds and bottom elsewhere. `le` must be a preorder.
    pub fn from_preorder(
        q: Arc<FiniteQuantale>,
        labels: Vec<String>,
        le: &[Vec<bool>],
    ) -> Result<Self> {
        let hom = le
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&b| if b { q.unit() } else { q.bottom() })
                    .collect()
            })
            .collect();
        QCategory::new(q, labels, hom)
    }

    /// The least Q-category whose hom dominates `gen`: `k` is joined onto the
    /// diagonal and composites are joined in until nothing changes.
    pub fn generated(
        q: Arc<FiniteQuantale>,
        labels: Vec<String>,
        gen: &[Vec<Elem>],
    ) -> Result<Self> {
        let n = labels.len();
        if gen.len() != n || gen.iter().any(|row| row.len() != n) {
            return Err(Error::Shape(format!("hom must be {n}×{n}")));
        }
        if let Some(&e) = gen.iter().flatten().find(|&&e| e >= q.size()) {
            return Err(Error::Shape(format!("hom entry {e} out of range")));
        }
        let mut hom = gen.to_vec();
        for (x, row) in hom.iter_mut().enumerate() {
            row[x] = q.join(row[x], q.unit());
        }
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let via = q.tensor(hom[y][z], hom[x][y]);
                        let joined = q.join(hom[x][z], via);
                        if joined != hom[x][z] {
                            hom[x][z] = joined;
                            changed = true;
                        }
                    }
                }
            }
        }
        QCategory::new(q, labels, hom)
    }

    pub fn discrete(q: Arc<FiniteQuantale>, labels: Vec<String>) -> Result<Self> {
        let n = labels.len();
        let le: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
        QCategory::from_preorder(q, labels, &le)
    }

    pub fn quantale(&self) -> &FiniteQuantale {
        &self.quantale
    }

    pub fn quantale_arc(&self) -> &Arc<FiniteQuantale> {
        &self.quantale
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn objects(&self) -> std::ops::Range<Obj> {
        0..self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Obj) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Result<Obj> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn hom(&self, x: Obj, y: Obj) -> Elem {
        self.hom[x][y]
    }

    pub fn hom_matrix(&self) -> &[Vec<Elem>] {
        &self.hom
    }

    /// `x ⊑ y ⟺ k ≤ A(x, y)`.
    pub fn below(&self, x: Obj, y: Obj) -> bool {
        self.quantale.above_unit(self.hom[x][y])
    }

    pub fn isomorphic(&self, x: Obj, y: Obj) -> bool {
        self.below(x, y) && self.below(y, x)
    }

    pub fn underlying_preorder(&self) -> Vec<Vec<bool>> {
        self.objects()
            .map(|x| self.objects().map(|y| self.below(x, y)).collect())
            .collect()
    }

    pub fn is_separated(&self) -> bool {
        self.objects()
            .all(|x| self.objects().all(|y| x == y || !self.isomorphic(x, y)))
    }

    /// `A^op(x, y) = A(y, x)`.
    pub fn opposite(&self) -> QCategory {
        let hom = self
            .objects()
            .map(|x| self.objects().map(|y| self.hom[y][x]).collect())
            .collect();
        QCategory {
            quantale: self.quantale.clone(),
            labels: self.labels.clone(),
            hom,
        }
    }

    pub(crate) fn same_quantale(&self, other: &QCategory) -> Result<()> {
        if self.quantale != other.quantale {
            return Err(Error::Mismatch(
                "categories are enriched in different quantales".into(),
            ));
        }
        Ok(())
    }
}

/// An object map `f: A → B` with `A(x, y) ≤ B(fx, fy)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFunctor {
    source: QCategory,
    target: QCategory,
    map: Vec<Obj>,
}

impl QFunctor {
    pub fn new(source: QCategory, target: QCategory, map: Vec<Obj>) -> Result<Self> {
        source.same_quantale(&target)?;
        if map.len() != source.size() || map.iter().any(|&y| y >= target.size()) {
            return Err(Error::Shape(
                "object map does not match the categories".into(),
            ));
        }
        if let Some((x, y)) = functor_violation(&source, &target, &map) {
            return Err(Error::InvalidFunctor(format!(
                "A({0},{1}) ≤ B(f{0},f{1}) fails",
                source.label(x),
                source.label(y)
            )));
        }
        Ok(QFunctor {
            source,
            target,
            map,
        })
    }

    pub fn identity(a: &QCategory) -> Self {
        QFunctor {
            source: a.clone(),
            target: a.clone(),
            map: a.objects().collect(),
        }
    }

    pub fn source(&self) -> &QCategory {
        &self.source
    }

    pub fn target(&self) -> &QCategory {
        &self.target
    }

    pub fn map(&self) -> &[Obj] {
        &self.map
    }

    pub fn apply(&self, x: Obj) -> Obj {
        self.map[x]
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &QFunctor) -> Result<QFunctor> {
        if f.target != self.source {
            return Err(Error::Mismatch(
                "functor composition needs matching middle category".into(),
            ));
        }
        Ok(QFunctor {
            source: f.source.clone(),
            target: self.target.clone(),
            map: f.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    /// The graph `f_*(x, y) = B(fx, y)`, a distributor `A ⇸ B`.
    pub fn graph(&self) -> Distributor {
        let matrix = self
            .source
            .objects()
            .map(|x| {
                self.target
                    .objects()
                    .map(|y| self.target.hom(self.map[x], y))
                    .collect()
            })
            .collect();
        Distributor {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix,
        }
    }

    /// The cograph `f^*(y, x) = B(y, fx)`, a distributor `B ⇸ A`.
    pub fn cograph(&self) -> Distributor {
        let matrix = self
            .target
            .objects()
            .map(|y| {
                self.source
                    .objects()
                    .map(|x| self.target.hom(y, self.map[x]))
                    .collect()
            })
            .collect();
        Distributor {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix,
        }
    }
}

pub(crate) fn functor_violation(a: &QCategory, b: &QCategory, map: &[Obj]) -> Option<(Obj, Obj)> {
    let q = a.quantale();
    a.objects()
        .flat_map(|x| a.objects().map(move |y| (x, y)))
        .find(|&(x, y)| !q.le(a.hom(x, y), b.hom(map[x], map[y])))
}

/// Whether an object map is a functor, without constructing one.
pub fn validate_functor(
    a: &QCategory,
    b: &QCategory,
    map: &[Obj],
) -> Result<Option<(String, String)>> {
    a.same_quantale(b)?;
    if map.len() != a.size() || map.iter().any(|&y| y >= b.size()) {
        return Err(Error::Shape(
            "object map does not match the categories".into(),
        ));
    }
    Ok(functor_violation(a, b, map).map(|(x, y)| (a.label(x).to_string(), a.label(y).to_string())))
}

/// `f ⊣ g` for `f: A → B`, `g: B → A`: `B(fx, y) = A(x, gy)` for all `x, y`,
/// i.e. the graph of `f` equals the cograph of `g`.
pub fn check_adjunction(f: &QFunctor, g: &QFunctor) -> Result<bool> {
    if f.source != g.target || f.target != g.source {
        return Err(Error::Mismatch(
            "an adjunction needs f: A → B and g: B → A".into(),
        ));
    }
    let (a, b) = (&f.source, &f.target);
    Ok(a.objects().all(|x| {
        b.objects()
            .all(|y| b.hom(f.apply(x), y) == a.hom(x, g.apply(y)))
    }))
}

/// A distributor `φ: A ⇸ B` with matrix `φ(x, y)`, `x ∈ A`, `y ∈ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distributor {
    source: QCategory,
    target: QCategory,
    matrix: Vec<Vec<Elem>>,
}

impl Distributor {
    pub fn new(source: QCategory, target: QCategory, matrix: Vec<Vec<Elem>>) -> Result<Self> {
        source.same_quantale(&target)?;
        let q = source.quantale();
        if matrix.len() != source.size()
            || matrix
                .iter()
                .any(|r| r.len() != target.size() || r.iter().any(|&e| e >= q.size()))
        {
            return Err(Error::Shape(format!(
                "distributor matrix must be {}×{}",
                source.size(),
                target.size()
            )));
        }
        for x in source.objects() {
            for x2 in source.objects() {
                for y in target.objects() {
                    for y2 in target.objects() {
                        let lhs =
                            q.tensor(q.tensor(target.hom(y, y2), matrix[x][y]), source.hom(x2, x));
                        if !q.le(lhs, matrix[x2][y2]) {
                            return Err(Error::InvalidDistributor(format!(
                                "B({y},{y2}) & φ({x},{y}) & A({x2},{x}) ≤ φ({x2},{y2}) fails",
                                y = target.label(y),
                                y2 = target.label(y2),
                                x = source.label(x),
                                x2 = source.label(x2),
                            )));
                        }
                    }
                }
            }
        }
        Ok(Distributor {
            source,
            target,
            matrix,
        })
    }

    /// The identity distributor `A ⇸ A`, which is `A` itself.
    pub fn identity(a: &QCategory) -> Self {
        Distributor {
            source: a.clone(),
            target: a.clone(),
            matrix: a.hom.clone(),
        }
    }

    pub fn source(&self) -> &QCategory {
        &self.source
    }

    pub fn target(&self) -> &QCategory {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<Elem>] {
        &self.matrix
    }

    pub fn get(&self, x: Obj, y: Obj) -> Elem {
        self.matrix[x][y]
    }

    /// `(self ∘ φ)(x, z) = ⋁_y self(y, z) & φ(x, y)`.
    pub fn after(&self, phi: &Distributor) -> Result<Distributor> {
        if phi.target != self.source {
            return Err(Error::Mismatch(
                "distributor composition needs matching middle category".into(),
            ));
        }
        let q = self.source.quantale();
        let matrix = phi
            .source
            .objects()
            .map(|x| {
                self.target
                    .objects()
                    .map(|z| {
                        q.join_all(
                            self.source
                                .objects()
                                .map(|y| q.tensor(self.matrix[y][z], phi.matrix[x][y])),
                        )
                    })
                    .collect()
            })
            .collect();
        Ok(Distributor {
            source: phi.source.clone(),
            target: self.target.clone(),
            matrix,
        })
    }
}
