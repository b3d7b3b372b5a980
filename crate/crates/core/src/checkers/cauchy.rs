//! Directed sets, forward Cauchy weights and continuity.
//!
//! For a finite `A` every directed set contains an upper bound of itself, so
//! the forward Cauchy weights are exactly the representables. This is not
//! assumed anywhere below: the weights are computed from directed subsets.

use serde::{Deserialize, Serialize};

use super::completeness::cocomplete_by_criteria;
use super::{brute_only, run_arms, ArmResult, CheckOptions, CheckerReport, Witness};
use crate::error::{Error, Result};
use crate::qcat::{
    cotensor, find_left_adjoint, join_of, presheaf_hom, sup_weight, weight_label, Obj,
    PresheafCategory, QCategory, QFunctor,
};
use crate::quantale::Elem;

fn require_integral(a: &QCategory) -> Result<()> {
    if a.quantale().is_integral() {
        Ok(())
    } else {
        Err(Error::NotIntegral)
    }
}

/// Nonempty, and every pair has an upper bound inside `d` under `⊑`.
pub fn is_directed(a: &QCategory, d: &[Obj]) -> bool {
    !d.is_empty()
        && d.iter().all(|&x| {
            d.iter()
                .all(|&y| d.iter().any(|&u| a.below(x, u) && a.below(y, u)))
        })
}

/// Every directed subset of `(A, ⊑)`, as sorted object lists in order of
/// their bitmask.
pub fn directed_subsets(a: &QCategory, cap: usize) -> Result<Vec<Vec<Obj>>> {
    let n = a.size();
    if n >= usize::BITS as usize || (1usize << n) > cap {
        return Err(Error::CapExceeded {
            what: "subsets".into(),
            needed: format!("2^{n}"),
            cap,
        });
    }
    Ok((1usize..(1 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>())
        .filter(|d| is_directed(a, d))
        .collect())
}

/// Directed down-sets.
pub fn ideals(a: &QCategory, cap: usize) -> Result<Vec<Vec<Obj>>> {
    Ok(directed_subsets(a, cap)?
        .into_iter()
        .filter(|d| {
            a.objects()
                .all(|x| d.contains(&x) || !d.iter().any(|&y| a.below(x, y)))
        })
        .collect())
}

/// `Λ(D) = ⋁_{d∈D} A(−, d)`.
pub fn lambda_of(a: &QCategory, d: &[Obj]) -> Result<Vec<Elem>> {
    if !is_directed(a, d) {
        let names: Vec<&str> = d.iter().map(|&x| a.label(x)).collect();
        return Err(Error::NotDirected(format!("{{{}}}", names.join(", "))));
    }
    let q = a.quantale();
    Ok(a.objects()
        .map(|x| q.join_all(d.iter().map(|&y| a.hom(x, y))))
        .collect())
}

/// `Γ(φ) = {x : k ≤ φ(x)}`.
pub fn gamma_of(a: &QCategory, phi: &[Elem]) -> Vec<Obj> {
    a.objects()
        .filter(|&x| a.quantale().above_unit(phi[x]))
        .collect()
}

/// `{Λ(D) : D directed}`, deduplicated, in order of first appearance.
pub fn forward_cauchy_weights(a: &QCategory, cap: usize) -> Result<Vec<Vec<Elem>>> {
    require_integral(a)?;
    let mut out: Vec<Vec<Elem>> = Vec::new();
    for d in directed_subsets(a, cap)? {
        let w = lambda_of(a, &d)?;
        if !out.contains(&w) {
            out.push(w);
        }
    }
    Ok(out)
}

/// `C A` as a full subcategory of `PA`.
fn cauchy_category(a: &QCategory, cap: usize) -> Result<PresheafCategory> {
    Ok(PresheafCategory::full_subcategory(
        a,
        forward_cauchy_weights(a, cap)?,
    ))
}

fn require_separated_complete(a: &QCategory) -> Result<()> {
    if !a.is_separated() {
        return Err(Error::NotSeparated);
    }
    if !cocomplete_by_criteria(a)?.0 {
        return Err(Error::NotComplete);
    }
    Ok(())
}

/// `Λ ⊣ Γ` between ideals and `C A`, `ΛΓ = id` and `sup φ = ⋁Γ(φ)`, checked
/// exhaustively.
pub fn check_lambda_gamma(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    require_integral(a)?;
    require_separated_complete(a)?;
    let q = a.quantale();
    let ideals = ideals(a, opts.cap)?;
    let cauchy = forward_cauchy_weights(a, opts.cap)?;
    let names = |d: &[Obj]| {
        d.iter()
            .map(|&x| a.label(x).to_string())
            .collect::<Vec<_>>()
    };
    let fail = |law: &str, d: Option<&[Obj]>, phi: Option<&[Elem]>| {
        Ok((
            false,
            Some(Witness::LambdaGamma {
                law: law.to_string(),
                ideal: d.map(names),
                weight: phi.map(|p| weight_label(q, p)),
            }),
        ))
    };
    brute_only(|| -> ArmResult {
        for phi in &cauchy {
            let g = gamma_of(a, phi);
            if !ideals.contains(&g) {
                return fail("gamma_is_ideal", Some(&g), Some(phi));
            }
            if lambda_of(a, &g)? != *phi {
                return fail("lambda_gamma_is_identity", Some(&g), Some(phi));
            }
            let sup = sup_weight(a, phi)?;
            let join = join_of(a, &g).ok_or(Error::NotComplete)?;
            if sup != join {
                return fail("sup_is_join_of_gamma", Some(&g), Some(phi));
            }
            for d in &ideals {
                let lam = lambda_of(a, d)?;
                let left = q.above_unit(presheaf_hom(q, &lam, phi));
                let right = d.iter().all(|x| g.contains(x));
                if left != right {
                    return fail("lambda_left_adjoint_to_gamma", Some(d), Some(phi));
                }
            }
        }
        Ok((true, None))
    })
}

/// `t_A ⊣ sup_A ⊣ e_A: A → C A`. The brute-force arm searches a left adjoint
/// of `sup_A: C A → A`. When `A` is complete, the criteria arm checks
/// `A(x, sup φ) = ⋀_{y≪x} φ(y)` for all `φ ∈ C A`, where in a finite
/// lattice `y ≪ x` is just `y ⊑ x`.
pub fn is_continuous_qcat(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    require_integral(a)?;
    if !a.is_separated() {
        return Err(Error::NotSeparated);
    }
    let ca = cauchy_category(a, opts.cap)?;
    let q = a.quantale();
    let mut sups = Vec::with_capacity(ca.vectors().len());
    for phi in ca.vectors() {
        match sup_weight(a, phi) {
            Ok(s) => sups.push(s),
            Err(_) => {
                return Ok(CheckerReport {
                    verdict: false,
                    method: super::Method::BruteForce,
                    witness: Some(Witness::NoSup {
                        weight: weight_label(q, phi),
                    }),
                })
            }
        }
    }
    let brute = || -> ArmResult {
        let sup = QFunctor::new(ca.category().clone(), a.clone(), sups.clone())?;
        match find_left_adjoint(&sup) {
            Ok(_) => Ok((true, None)),
            Err(x) => Ok((
                false,
                Some(Witness::NoLeftAdjoint {
                    object: a.label(x).to_string(),
                }),
            )),
        }
    };
    let criteria = || -> ArmResult {
        for (phi, &s) in ca.vectors().iter().zip(&sups) {
            for x in a.objects() {
                let lhs = a.hom(x, s);
                let rhs = q.meet_all(a.objects().filter(|&y| a.below(y, x)).map(|y| phi[y]));
                if lhs != rhs {
                    let w = Witness::ContinuityGap {
                        x: a.label(x).to_string(),
                        weight: weight_label(q, phi),
                        lhs: q.label(lhs).to_string(),
                        rhs: q.label(rhs).to_string(),
                    };
                    return Ok((false, Some(w)));
                }
            }
        }
        Ok((true, None))
    };
    if cocomplete_by_criteria(a)?.0 {
        run_arms("continuous", opts.arm, criteria, brute)
    } else {
        brute_only(brute)
    }
}

/// Whether the inclusion `C A → PA` has a left adjoint. On finite instances
/// this agrees with cocompleteness, which serves as the criteria arm.
pub fn check_inclusion_left_adjoint(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    require_integral(a)?;
    require_separated_complete(a)?;
    let ca = cauchy_category(a, opts.cap)?;
    let pa = PresheafCategory::presheaves(a, opts.cap)?;
    let brute = || -> ArmResult {
        let map = ca
            .vectors()
            .iter()
            .map(|v| pa.object_of(v))
            .collect::<Result<Vec<_>>>()?;
        let incl = QFunctor::new(ca.category().clone(), pa.category().clone(), map)?;
        match find_left_adjoint(&incl) {
            Ok(_) => Ok((true, None)),
            Err(o) => Ok((
                false,
                Some(Witness::NoLeftAdjoint {
                    object: pa.category().label(o).to_string(),
                }),
            )),
        }
    };
    run_arms(
        "inclusion_left_adjoint",
        opts.arm,
        || cocomplete_by_criteria(a),
        brute,
    )
}

/// `p ⊸ ⋁D = ⋁_{d∈D} (p ⊸ d)` for every `p` and directed `D`, up to
/// isomorphism.
pub fn check_cotensor_scott_continuity(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    if !cocomplete_by_criteria(a)?.0 {
        return Err(Error::NotComplete);
    }
    let q = a.quantale();
    let directed = directed_subsets(a, opts.cap)?;
    brute_only(|| -> ArmResult {
        for p in q.elements() {
            for d in &directed {
                let join = join_of(a, d).ok_or(Error::NotComplete)?;
                let lhs = cotensor(a, p, join)?;
                let cots = d
                    .iter()
                    .map(|&x| cotensor(a, p, x))
                    .collect::<Result<Vec<_>>>()?;
                let rhs = join_of(a, &cots).ok_or(Error::NotComplete)?;
                if !a.isomorphic(lhs, rhs) {
                    let w = Witness::NotScottContinuous {
                        p: q.label(p).to_string(),
                        directed: d.iter().map(|&x| a.label(x).to_string()).collect(),
                    };
                    return Ok((false, Some(w)));
                }
            }
        }
        Ok((true, None))
    })
}

/// A finite preorder used to index a net.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetIndex {
    pub labels: Vec<String>,
    pub le: Vec<Vec<bool>>,
}

impl NetIndex {
    pub fn chain(n: usize) -> Self {
        NetIndex {
            labels: (0..n).map(|i| i.to_string()).collect(),
            le: (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.labels.len();
        if n == 0 {
            return Err(Error::NotDirected("empty index".into()));
        }
        if self.le.len() != n || self.le.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("index order must be {n}×{n}")));
        }
        let le = &self.le;
        for i in 0..n {
            if !le[i][i] {
                return Err(Error::NotDirected(format!(
                    "index order is not reflexive at {}",
                    self.labels[i]
                )));
            }
            for j in 0..n {
                for k in 0..n {
                    if le[i][j] && le[j][k] && !le[i][k] {
                        return Err(Error::NotDirected("index order is not transitive".into()));
                    }
                }
                if !(0..n).any(|u| le[i][u] && le[j][u]) {
                    return Err(Error::NotDirected(format!(
                        "{} and {} have no upper bound",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetReport {
    pub is_forward_cauchy: bool,
    /// `⋁_λ ⋀_{γ≥μ≥λ} A(x_μ, x_γ)`
    pub condition: Elem,
    /// `⋁_λ ⋀_{μ≥λ} A(−, x_μ)`
    pub weight: Vec<Elem>,
}

pub fn check_net(a: &QCategory, index: &NetIndex, map: &[Obj]) -> Result<NetReport> {
    index.validate()?;
    let n = index.labels.len();
    if map.len() != n || map.iter().any(|&x| x >= a.size()) {
        return Err(Error::Shape("net map does not match the index".into()));
    }
    let q = a.quantale();
    let le = &index.le;
    let condition = q.join_all((0..n).map(|l| {
        q.meet_all((0..n).filter(|&m| le[l][m]).flat_map(|m| {
            (0..n)
                .filter(move |&g| le[m][g])
                .map(move |g| a.hom(map[m], map[g]))
        }))
    }));
    let weight = a
        .objects()
        .map(|z| {
            q.join_all(
                (0..n).map(|l| q.meet_all((0..n).filter(|&m| le[l][m]).map(|m| a.hom(z, map[m])))),
            )
        })
        .collect();
    Ok(NetReport {
        is_forward_cauchy: q.above_unit(condition),
        condition,
        weight,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::super::{Arm, Method};
    use super::*;
    use crate::qcat::yoneda;
    use crate::quantale::FiniteQuantale;

    fn boolean() -> Arc<FiniteQuantale> {
        Arc::new(FiniteQuantale::boolean())
    }

    fn chain2() -> QCategory {
        QCategory::from_preorder(
            boolean(),
            vec!["a".into(), "b".into()],
            &[vec![true, true], vec![false, true]],
        )
        .unwrap()
    }

    fn antichain2() -> QCategory {
        QCategory::discrete(boolean(), vec!["a".into(), "b".into()]).unwrap()
    }

    fn both() -> CheckOptions {
        CheckOptions::with_arm(Arm::Both)
    }

    #[test]
    fn forward_cauchy_examples() {
        let c = chain2();
        assert_eq!(
            directed_subsets(&c, 4096).unwrap(),
            vec![vec![0], vec![1], vec![0, 1]]
        );
        assert_eq!(
            forward_cauchy_weights(&c, 4096).unwrap(),
            vec![yoneda(&c, 0), yoneda(&c, 1)]
        );
        assert_eq!(lambda_of(&c, &[0, 1]).unwrap(), yoneda(&c, 1));
        let anti = antichain2();
        assert_eq!(
            forward_cauchy_weights(&anti, 4096).unwrap(),
            vec![yoneda(&anti, 0), yoneda(&anti, 1)]
        );
        assert!(matches!(
            lambda_of(&anti, &[0, 1]),
            Err(Error::NotDirected(_))
        ));
        let q = Arc::new(FiniteQuantale::lukasiewicz_chain(3));
        let dl = QCategory::d_l(q);
        let fc = forward_cauchy_weights(&dl, 4096).unwrap();
        assert_eq!(fc.len(), 3);
        assert!(dl.objects().all(|x| fc.contains(&yoneda(&dl, x))));
    }

    #[test]
    fn non_integral_is_refused() {
        let le = (0..3).map(|i| (0..3).map(|j| i <= j).collect()).collect();
        let tensor = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        let q = FiniteQuantale::new(crate::quantale::QuantaleTable {
            elements: vec!["0".into(), "k".into(), "1".into()],
            le,
            tensor,
            unit: 1,
        })
        .unwrap();
        let a = QCategory::d_l(Arc::new(q));
        assert_eq!(forward_cauchy_weights(&a, 4096), Err(Error::NotIntegral));
        assert_eq!(is_continuous_qcat(&a, both()), Err(Error::NotIntegral));
    }

    #[test]
    fn gamma_and_lambda_on_chain() {
        let c = chain2();
        assert_eq!(gamma_of(&c, &yoneda(&c, 0)), vec![0]);
        assert_eq!(gamma_of(&c, &yoneda(&c, 1)), vec![0, 1]);
        assert_eq!(sup_weight(&c, &lambda_of(&c, &[0, 1]).unwrap()).unwrap(), 1);
        let r = check_lambda_gamma(&c, both()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.method, Method::BruteForce);
        assert_eq!(
            check_lambda_gamma(&antichain2(), both()),
            Err(Error::NotComplete)
        );
    }

    #[test]
    fn continuity_examples() {
        let r = is_continuous_qcat(&antichain2(), both()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.method, Method::BruteForce);
        let q = Arc::new(FiniteQuantale::godel_chain(3));
        let r = is_continuous_qcat(&QCategory::d_l(q), both()).unwrap();
        assert!(r.verdict);
        assert_eq!(r.method, Method::BothAgree);
        let full = QCategory::new(
            boolean(),
            vec!["a".into(), "b".into()],
            vec![vec![1, 1], vec![1, 1]],
        )
        .unwrap();
        assert_eq!(is_continuous_qcat(&full, both()), Err(Error::NotSeparated));
    }

    #[test]
    fn inclusion_examples() {
        assert!(
            check_inclusion_left_adjoint(&chain2(), both())
                .unwrap()
                .verdict
        );
        let q = Arc::new(FiniteQuantale::godel_chain(3));
        let pt = QCategory::discrete(q, vec!["*".into()]).unwrap();
        let pa = PresheafCategory::presheaves(&pt, 4096).unwrap();
        assert!(
            check_inclusion_left_adjoint(pa.category(), both())
                .unwrap()
                .verdict
        );
        assert_eq!(
            check_inclusion_left_adjoint(&antichain2(), both()),
            Err(Error::NotComplete)
        );
    }

    #[test]
    fn scott_examples() {
        let q = Arc::new(FiniteQuantale::godel_chain(3));
        let dl = QCategory::d_l(q.clone());
        assert!(
            check_cotensor_scott_continuity(&dl, both())
                .unwrap()
                .verdict
        );
        let two = QCategory::new(
            q,
            vec!["a".into(), "b".into()],
            vec![vec![2, 1], vec![0, 2]],
        )
        .unwrap();
        let pd = PresheafCategory::copresheaves(&two, 4096).unwrap();
        assert!(
            check_cotensor_scott_continuity(pd.category(), both())
                .unwrap()
                .verdict
        );
        assert_eq!(
            check_cotensor_scott_continuity(&antichain2(), both()),
            Err(Error::NotComplete)
        );
    }

    #[test]
    fn net_examples() {
        let c = chain2();
        let constant = check_net(&c, &NetIndex::chain(3), &[1, 1, 1]).unwrap();
        assert!(constant.is_forward_cauchy);
        assert_eq!(constant.weight, yoneda(&c, 1));
        let increasing = check_net(&c, &NetIndex::chain(2), &[0, 1]).unwrap();
        assert!(increasing.is_forward_cauchy);
        assert_eq!(increasing.weight, yoneda(&c, 1));

        // on a finite chain index the last stage alone decides
        let anti = antichain2();
        let alt = check_net(&anti, &NetIndex::chain(4), &[0, 1, 0, 1]).unwrap();
        assert!(alt.is_forward_cauchy);
        assert_eq!(alt.weight, yoneda(&anti, 1));

        // an index where every stage sees both values
        let cyclic = NetIndex {
            labels: vec!["0".into(), "1".into()],
            le: vec![vec![true, true], vec![true, true]],
        };
        let alt = check_net(&anti, &cyclic, &[0, 1]).unwrap();
        assert!(!alt.is_forward_cauchy);
        assert_eq!(alt.condition, 0);
        assert_eq!(alt.weight, vec![0, 0]);

        let not_directed = NetIndex {
            labels: vec!["0".into(), "1".into()],
            le: vec![vec![true, false], vec![false, true]],
        };
        assert!(matches!(
            check_net(&anti, &not_directed, &[0, 1]),
            Err(Error::NotDirected(_))
        ));
    }
}
