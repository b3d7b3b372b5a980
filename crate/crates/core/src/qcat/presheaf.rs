//! Weights, coweights, the categories `PA` and `P†A`, Yoneda embeddings and
//! the presheaf monad on finite instances.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Obj, QCategory, QFunctor};
use crate::error::{Error, Result};
use crate::quantale::{Elem, FiniteQuantale};

/// Default cap on the number of candidate vectors `|Q|^|A|` to enumerate.
pub const DEFAULT_ENUMERATION_CAP: usize = 4096;

/// `φ(x) & A(x', x) ≤ φ(x')`.
pub fn is_weight(a: &QCategory, phi: &[Elem]) -> bool {
    let q = a.quantale();
    phi.len() == a.size()
        && a.objects().all(|x| {
            a.objects()
                .all(|x2| q.le(q.tensor(phi[x], a.hom(x2, x)), phi[x2]))
        })
}

/// `A(x, x') & ψ(x) ≤ ψ(x')`.
pub fn is_coweight(a: &QCategory, psi: &[Elem]) -> bool {
    let q = a.quantale();
    psi.len() == a.size()
        && a.objects().all(|x| {
            a.objects()
                .all(|x2| q.le(q.tensor(a.hom(x, x2), psi[x]), psi[x2]))
        })
}

/// `PA(φ, ρ) = ⋀_x φ(x) → ρ(x)`.
pub fn presheaf_hom(q: &FiniteQuantale, phi: &[Elem], rho: &[Elem]) -> Elem {
    q.meet_all(phi.iter().zip(rho).map(|(&p, &r)| q.implies(p, r)))
}

/// `P†A(ψ, σ) = ⋀_x σ(x) → ψ(x)`.
pub fn copresheaf_hom(q: &FiniteQuantale, psi: &[Elem], sigma: &[Elem]) -> Elem {
    presheaf_hom(q, sigma, psi)
}

/// `y_A(x) = A(−, x)`.
pub fn yoneda(a: &QCategory, x: Obj) -> Vec<Elem> {
    a.objects().map(|z| a.hom(z, x)).collect()
}

/// `y†_A(x) = A(x, −)`.
pub fn coyoneda(a: &QCategory, x: Obj) -> Vec<Elem> {
    a.objects().map(|z| a.hom(x, z)).collect()
}

/// `"(v1,v2,…)"` with the quantale's element labels.
pub fn weight_label(q: &FiniteQuantale, phi: &[Elem]) -> String {
    let parts: Vec<&str> = phi.iter().map(|&e| q.label(e)).collect();
    format!("({})", parts.join(","))
}

fn candidate_count(q: usize, n: usize) -> Option<usize> {
    (0..n).try_fold(1usize, |acc, _| acc.checked_mul(q))
}

/// All vectors in `Q^A` satisfying `keep`, in lexicographic order with the
/// first object most significant.
fn enumerate(
    a: &QCategory,
    cap: usize,
    what: &str,
    keep: impl Fn(&[Elem]) -> bool,
) -> Result<Vec<Vec<Elem>>> {
    let qn = a.quantale().size();
    let n = a.size();
    match candidate_count(qn, n) {
        Some(c) if c <= cap => {}
        _ => {
            return Err(Error::CapExceeded {
                what: what.to_string(),
                needed: format!("{qn}^{n}"),
                cap,
            })
        }
    }
    let mut out = Vec::new();
    let mut v = vec![0; n];
    loop {
        if keep(&v) {
            out.push(v.clone());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            v[i] += 1;
            if v[i] < qn {
                break;
            }
            v[i] = 0;
        }
    }
}

pub fn enumerate_weights(a: &QCategory, cap: usize) -> Result<Vec<Vec<Elem>>> {
    enumerate(a, cap, "weights", |v| is_weight(a, v))
}

pub fn enumerate_coweights(a: &QCategory, cap: usize) -> Result<Vec<Vec<Elem>>> {
    enumerate(a, cap, "coweights", |v| is_coweight(a, v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresheafKind {
    Presheaf,
    Copresheaf,
}

/// `PA` or `P†A` as a Q-category whose objects are the enumerated
/// (co)weights of `base`.
#[derive(Clone, Debug)]
pub struct PresheafCategory {
    kind: PresheafKind,
    base: QCategory,
    cat: QCategory,
    vectors: Vec<Vec<Elem>>,
    index: HashMap<Vec<Elem>, Obj>,
}

impl PresheafCategory {
    pub fn presheaves(base: &QCategory, cap: usize) -> Result<Self> {
        let vectors = enumerate_weights(base, cap)?;
        Ok(Self::build(PresheafKind::Presheaf, base, vectors))
    }

    pub fn copresheaves(base: &QCategory, cap: usize) -> Result<Self> {
        let vectors = enumerate_coweights(base, cap)?;
        Ok(Self::build(PresheafKind::Copresheaf, base, vectors))
    }

    /// The full subcategory of `PA` on the given weights, which must be valid.
    pub fn full_subcategory(base: &QCategory, weights: Vec<Vec<Elem>>) -> Self {
        debug_assert!(weights.iter().all(|w| is_weight(base, w)));
        Self::build(PresheafKind::Presheaf, base, weights)
    }

    fn build(kind: PresheafKind, base: &QCategory, vectors: Vec<Vec<Elem>>) -> Self {
        let q = base.quantale();
        let hom_fn = match kind {
            PresheafKind::Presheaf => presheaf_hom,
            PresheafKind::Copresheaf => copresheaf_hom,
        };
        let hom = vectors
            .iter()
            .map(|a| vectors.iter().map(|b| hom_fn(q, a, b)).collect())
            .collect();
        let labels = vectors.iter().map(|v| weight_label(q, v)).collect();
        let index = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let cat = QCategory {
            quantale: base.quantale.clone(),
            labels,
            hom,
        };
        debug_assert!(super::validate_category(q, cat.labels(), cat.hom_matrix())
            .unwrap()
            .is_empty());
        PresheafCategory {
            kind,
            base: base.clone(),
            cat,
            vectors,
            index,
        }
    }

    pub fn kind(&self) -> PresheafKind {
        self.kind
    }

    pub fn base(&self) -> &QCategory {
        &self.base
    }

    pub fn category(&self) -> &QCategory {
        &self.cat
    }

    pub fn vectors(&self) -> &[Vec<Elem>] {
        &self.vectors
    }

    pub fn vector(&self, o: Obj) -> &[Elem] {
        &self.vectors[o]
    }

    pub fn object_of(&self, v: &[Elem]) -> Result<Obj> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::UnknownElement(weight_label(self.base.quantale(), v)))
    }

    /// The Yoneda (or co-Yoneda) embedding as a functor `A → PA` (`A → P†A`).
    pub fn embedding(&self) -> Result<QFunctor> {
        let map = self
            .base
            .objects()
            .map(|x| match self.kind {
                PresheafKind::Presheaf => self.object_of(&yoneda(&self.base, x)),
                PresheafKind::Copresheaf => self.object_of(&coyoneda(&self.base, x)),
            })
            .collect::<Result<Vec<_>>>()?;
        QFunctor::new(self.base.clone(), self.cat.clone(), map)
    }
}

/// `Pf(φ)(y) = (φ ∘ f^*)(y) = ⋁_x φ(x) & B(y, fx)`.
pub fn apply_presheaf(f: &QFunctor, phi: &[Elem]) -> Vec<Elem> {
    let (a, b) = (f.source(), f.target());
    let q = a.quantale();
    b.objects()
        .map(|y| q.join_all(a.objects().map(|x| q.tensor(phi[x], b.hom(y, f.apply(x))))))
        .collect()
}

/// `P†f(ψ)(y) = (f_* ∘ ψ)(y) = ⋁_x B(fx, y) & ψ(x)`.
pub fn apply_copresheaf(f: &QFunctor, psi: &[Elem]) -> Vec<Elem> {
    let (a, b) = (f.source(), f.target());
    let q = a.quantale();
    b.objects()
        .map(|y| q.join_all(a.objects().map(|x| q.tensor(b.hom(f.apply(x), y), psi[x]))))
        .collect()
}

fn check_bases(
    f: &QFunctor,
    from: &PresheafCategory,
    to: &PresheafCategory,
    kind: PresheafKind,
) -> Result<()> {
    if from.kind != kind || to.kind != kind {
        return Err(Error::Mismatch("wrong kind of presheaf category".into()));
    }
    if &from.base != f.source() || &to.base != f.target() {
        return Err(Error::Mismatch(
            "presheaf categories do not match the functor".into(),
        ));
    }
    Ok(())
}

/// `Pf: PA → PB`.
pub fn presheaf_action(
    f: &QFunctor,
    pa: &PresheafCategory,
    pb: &PresheafCategory,
) -> Result<QFunctor> {
    check_bases(f, pa, pb, PresheafKind::Presheaf)?;
    let map = pa
        .vectors
        .iter()
        .map(|phi| pb.object_of(&apply_presheaf(f, phi)))
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(pa.cat.clone(), pb.cat.clone(), map)
}

/// `P†f: P†A → P†B`.
pub fn copresheaf_action(
    f: &QFunctor,
    pa: &PresheafCategory,
    pb: &PresheafCategory,
) -> Result<QFunctor> {
    check_bases(f, pa, pb, PresheafKind::Copresheaf)?;
    let map = pa
        .vectors
        .iter()
        .map(|psi| pb.object_of(&apply_copresheaf(f, psi)))
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(pa.cat.clone(), pb.cat.clone(), map)
}

/// `s_A(Φ) = Φ ∘ (y_A)_*`, i.e. `s_A(Φ)(x) = ⋁_φ Φ(φ) & PA(y_A x, φ)`, for a
/// weight `Φ` on `PA`.
pub fn mult_apply(pa: &PresheafCategory, big_phi: &[Elem]) -> Vec<Elem> {
    let a = &pa.base;
    let q = a.quantale();
    a.objects()
        .map(|x| {
            let yx = yoneda(a, x);
            q.join_all(
                pa.vectors
                    .iter()
                    .enumerate()
                    .map(|(i, phi)| q.tensor(big_phi[i], presheaf_hom(q, &yx, phi))),
            )
        })
        .collect()
}

/// `s_A: PPA → PA`. `ppa` must be the presheaf category of `pa`.
pub fn presheaf_mult(pa: &PresheafCategory, ppa: &PresheafCategory) -> Result<QFunctor> {
    if pa.kind != PresheafKind::Presheaf || ppa.kind != PresheafKind::Presheaf || ppa.base != pa.cat
    {
        return Err(Error::Mismatch("expected PA and PPA".into()));
    }
    let map = ppa
        .vectors
        .iter()
        .map(|big| pa.object_of(&mult_apply(pa, big)))
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(ppa.cat.clone(), pa.cat.clone(), map)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::test_support::*;
    use super::*;
    use crate::quantale::FiniteQuantale;

    #[test]
    fn weights_of_two_chain() {
        let c2 = bool_chain(2);
        assert_eq!(
            enumerate_weights(&c2, 4096).unwrap(),
            vec![vec![0, 0], vec![1, 0], vec![1, 1]]
        );
        let pa = PresheafCategory::presheaves(&c2, 4096).unwrap();
        let order = pa.category().underlying_preorder();
        let chain3: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i <= j).collect()).collect();
        assert_eq!(order, chain3);
    }

    #[test]
    fn weights_of_a_point_are_the_quantale() {
        let q = Arc::new(FiniteQuantale::lukasiewicz_chain(3));
        let pt = QCategory::discrete(q.clone(), labels(&["*"])).unwrap();
        let pa = PresheafCategory::presheaves(&pt, 4096).unwrap();
        assert_eq!(pa.vectors(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(pa.category().hom_matrix(), QCategory::d_l(q).hom_matrix());
    }

    #[test]
    fn coweights_reverse_the_order() {
        let c2 = bool_chain(2);
        assert_eq!(
            enumerate_coweights(&c2, 4096).unwrap(),
            vec![vec![0, 0], vec![0, 1], vec![1, 1]]
        );
        let pd = PresheafCategory::copresheaves(&c2, 4096).unwrap();
        let c = pd.category();
        // (1,1) ⊑ (0,1) ⊑ (0,0)
        assert!(c.below(2, 1) && c.below(1, 0) && !c.below(0, 1));
    }

    #[test]
    fn cap_is_a_hard_error() {
        let q = Arc::new(FiniteQuantale::godel_chain(4));
        let a = QCategory::discrete(q, labels(&["a", "b", "c", "d", "e", "f", "g"])).unwrap();
        assert!(matches!(
            enumerate_weights(&a, 4096),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn yoneda_examples() {
        let c2 = bool_chain(2);
        assert_eq!(yoneda(&c2, 1), vec![1, 1]);
        assert_eq!(yoneda(&c2, 0), vec![1, 0]);
        let q = Arc::new(FiniteQuantale::godel_chain(3));
        let a = QCategory::d_l(q.clone());
        let y = yoneda(&a, 1);
        let labels: Vec<&str> = y.iter().map(|&e| q.label(e)).collect();
        assert_eq!(labels, ["1", "1", "1/2"]);
    }

    #[test]
    fn yoneda_is_fully_faithful() {
        let q = Arc::new(FiniteQuantale::lukasiewicz_chain(3));
        let a = QCategory::d_l(q.clone());
        for x in a.objects() {
            for y in a.objects() {
                assert_eq!(
                    presheaf_hom(&q, &yoneda(&a, x), &yoneda(&a, y)),
                    a.hom(x, y)
                );
                assert_eq!(
                    copresheaf_hom(&q, &coyoneda(&a, x), &coyoneda(&a, y)),
                    a.hom(x, y)
                );
            }
        }
    }

    #[test]
    fn presheaf_functoriality() {
        let c2 = bool_chain(2);
        let c3 = bool_chain(3);
        let pa = PresheafCategory::presheaves(&c2, 4096).unwrap();
        let pb = PresheafCategory::presheaves(&c3, 4096).unwrap();
        let id = QFunctor::identity(&c2);
        assert_eq!(
            presheaf_action(&id, &pa, &pa).unwrap(),
            QFunctor::identity(pa.category())
        );
        let f = QFunctor::new(c2.clone(), c3.clone(), vec![0, 2]).unwrap();
        for x in c2.objects() {
            assert_eq!(apply_presheaf(&f, &yoneda(&c2, x)), yoneda(&c3, f.apply(x)));
            assert_eq!(
                apply_copresheaf(&f, &coyoneda(&c2, x)),
                coyoneda(&c3, f.apply(x))
            );
        }
        presheaf_action(&f, &pa, &pb).unwrap();
        let da = PresheafCategory::copresheaves(&c2, 4096).unwrap();
        let db = PresheafCategory::copresheaves(&c3, 4096).unwrap();
        copresheaf_action(&f, &da, &db).unwrap();
    }

    #[test]
    fn multiplication_after_unit_is_identity() {
        let c2 = bool_chain(2);
        let pa = PresheafCategory::presheaves(&c2, 4096).unwrap();
        let ppa = PresheafCategory::presheaves(pa.category(), 4096).unwrap();
        let s = presheaf_mult(&pa, &ppa).unwrap();
        let y_pa = ppa.embedding().unwrap();
        for o in pa.category().objects() {
            assert_eq!(s.apply(y_pa.apply(o)), o);
        }
    }
}
