//! (Co)completeness and complete (co)distributivity.

use super::{run_arms, ArmResult, CheckOptions, CheckerReport, Witness};
use crate::error::{Error, Result};
use crate::qcat::{
    cotensor, enumerate_weights, find_left_adjoint, join_of, meet_of, sup_weight, tensor,
    weight_label, Obj, PresheafCategory, QCategory, QFunctor,
};

fn names(a: &QCategory, objs: &[Obj]) -> Vec<String> {
    objs.iter().map(|&o| a.label(o).to_string()).collect()
}

/// Tensored, with an empty join and all binary joins. By finite induction
/// this gives joins of all subsets, hence all weighted colimits.
pub(super) fn cocomplete_by_criteria(a: &QCategory) -> ArmResult {
    let q = a.quantale();
    for p in q.elements() {
        for x in a.objects() {
            if tensor(a, p, x).is_err() {
                let w = Witness::NoTensor {
                    p: q.label(p).to_string(),
                    x: a.label(x).to_string(),
                };
                return Ok((false, Some(w)));
            }
        }
    }
    if join_of(a, &[]).is_none() {
        return Ok((false, Some(Witness::NoJoin { objects: vec![] })));
    }
    for x in a.objects() {
        for y in x + 1..a.size() {
            if join_of(a, &[x, y]).is_none() {
                return Ok((
                    false,
                    Some(Witness::NoJoin {
                        objects: names(a, &[x, y]),
                    }),
                ));
            }
        }
    }
    Ok((true, None))
}

fn cocomplete_by_brute_force(a: &QCategory, cap: usize) -> ArmResult {
    for phi in enumerate_weights(a, cap)? {
        if sup_weight(a, &phi).is_err() {
            let w = Witness::NoSup {
                weight: weight_label(a.quantale(), &phi),
            };
            return Ok((false, Some(w)));
        }
    }
    Ok((true, None))
}

pub fn is_cocomplete(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    run_arms(
        "cocomplete",
        opts.arm,
        || cocomplete_by_criteria(a),
        || cocomplete_by_brute_force(a, opts.cap),
    )
}

/// Completeness of `A` is cocompleteness of `A^op`: cotensors, meets and
/// infima of coweights in `A` are tensors, joins and suprema in `A^op`.
pub fn is_complete(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    let mut report = is_cocomplete(&a.opposite(), opts).map_err(|e| match e {
        Error::Disagreement {
            criteria,
            brute_force,
            ..
        } => Error::Disagreement {
            check: "complete".into(),
            criteria,
            brute_force,
        },
        other => other,
    })?;
    report.witness = report.witness.map(Witness::dual);
    Ok(report)
}

/// `sup_A: PA → A`. Fails with `NotComplete` if some weight has no supremum.
pub fn sup_functor(pa: &PresheafCategory) -> Result<QFunctor> {
    let a = pa.base();
    let map = pa
        .vectors()
        .iter()
        .map(|phi| sup_weight(a, phi).map_err(|_| Error::NotComplete))
        .collect::<Result<Vec<_>>>()?;
    QFunctor::new(pa.category().clone(), a.clone(), map)
}

/// `sup_A: PA → A` preserves cotensors, binary meets and the top element.
fn sup_preserves_limits(pa: &PresheafCategory, sup: &QFunctor) -> ArmResult {
    let a = pa.base();
    let c = pa.category();
    let q = a.quantale();
    for o in c.objects() {
        for p in q.elements() {
            let in_pa = cotensor(c, p, o)?;
            let in_a = cotensor(a, p, sup.apply(o))?;
            if sup.apply(in_pa) != in_a {
                let w = Witness::CotensorNotPreserved {
                    p: q.label(p).to_string(),
                    weight: c.label(o).to_string(),
                };
                return Ok((false, Some(w)));
            }
        }
    }
    let top_pa = meet_of(c, &[]).ok_or(Error::NotComplete)?;
    let top_a = meet_of(a, &[]).ok_or(Error::NotComplete)?;
    if sup.apply(top_pa) != top_a {
        return Ok((false, Some(Witness::MeetNotPreserved { weights: vec![] })));
    }
    for o1 in c.objects() {
        for o2 in o1 + 1..c.size() {
            let m_pa = meet_of(c, &[o1, o2]).ok_or(Error::NotComplete)?;
            let m_a = meet_of(a, &[sup.apply(o1), sup.apply(o2)]).ok_or(Error::NotComplete)?;
            if sup.apply(m_pa) != m_a {
                let w = Witness::MeetNotPreserved {
                    weights: names(c, &[o1, o2]),
                };
                return Ok((false, Some(w)));
            }
        }
    }
    Ok((true, None))
}

fn sup_has_left_adjoint(sup: &QFunctor) -> ArmResult {
    match find_left_adjoint(sup) {
        Ok(_) => Ok((true, None)),
        Err(x) => Ok((
            false,
            Some(Witness::NoLeftAdjoint {
                object: sup.target().label(x).to_string(),
            }),
        )),
    }
}

/// Whether `sup_A: PA → A` has a left adjoint. Requires `A` separated and
/// cocomplete.
pub fn is_completely_distributive(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    if !a.is_separated() {
        return Err(Error::NotSeparated);
    }
    if !cocomplete_by_criteria(a)?.0 {
        return Err(Error::NotComplete);
    }
    let pa = PresheafCategory::presheaves(a, opts.cap)?;
    let sup = sup_functor(&pa)?;
    run_arms(
        "completely_distributive",
        opts.arm,
        || sup_preserves_limits(&pa, &sup),
        || sup_has_left_adjoint(&sup),
    )
}

/// Complete distributivity of `A^op`.
pub fn is_completely_codistributive(a: &QCategory, opts: CheckOptions) -> Result<CheckerReport> {
    is_completely_distributive(&a.opposite(), opts).map_err(|e| match e {
        Error::Disagreement {
            criteria,
            brute_force,
            ..
        } => Error::Disagreement {
            check: "completely_codistributive".into(),
            criteria,
            brute_force,
        },
        other => other,
    })
}
