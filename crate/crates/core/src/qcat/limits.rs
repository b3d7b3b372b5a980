//! Tensors, cotensors, suprema and infima found by exhaustive scan.
//!
//! In a non-separated category the universal object is only unique up to
//! isomorphism; the first match in object order is returned.

use super::{Obj, QCategory};
use crate::error::{Error, Result};
use crate::qcat::presheaf::{is_coweight, is_weight, weight_label};
use crate::quantale::Elem;

/// The first object `o` with `hom_from(o, y) == target[y]` for every `y`.
fn represent(a: &QCategory, what: &str, target: &[Elem], covariant: bool) -> Option<Obj> {
    let matches = |o: Obj| {
        a.objects().all(|y| {
            let h = if covariant { a.hom(o, y) } else { a.hom(y, o) };
            h == target[y]
        })
    };
    let mut found = a.objects().filter(|&o| matches(o));
    let first = found.next()?;
    if let Some(other) = found.next() {
        log::warn!(
            "{what}: `{}` and `{}` both qualify; using `{}`",
            a.label(first),
            a.label(other),
            a.label(first)
        );
    }
    Some(first)
}

/// `p ⊗ x`: the object with `A(p⊗x, y) = p → A(x, y)` for all `y`.
pub fn tensor(a: &QCategory, p: Elem, x: Obj) -> Result<Obj> {
    let q = a.quantale();
    let target: Vec<Elem> = a.objects().map(|y| q.implies(p, a.hom(x, y))).collect();
    represent(a, "tensor", &target, true).ok_or_else(|| Error::NotTensored {
        p: q.label(p).to_string(),
        x: a.label(x).to_string(),
    })
}

/// `p ⊸ x`: the object with `A(y, p⊸x) = p → A(y, x)` for all `y`.
pub fn cotensor(a: &QCategory, p: Elem, x: Obj) -> Result<Obj> {
    let q = a.quantale();
    let target: Vec<Elem> = a.objects().map(|y| q.implies(p, a.hom(y, x))).collect();
    represent(a, "cotensor", &target, false).ok_or_else(|| Error::NotCotensored {
        p: q.label(p).to_string(),
        x: a.label(x).to_string(),
    })
}

/// `sup φ`: the object with `A(sup φ, y) = PA(φ, y_A(y)) = ⋀_x φ(x) → A(x, y)`.
pub fn sup_weight(a: &QCategory, phi: &[Elem]) -> Result<Obj> {
    let q = a.quantale();
    if !is_weight(a, phi) {
        return Err(Error::Shape(format!(
            "{} is not a weight",
            weight_label(q, phi)
        )));
    }
    let target: Vec<Elem> = a
        .objects()
        .map(|y| q.meet_all(a.objects().map(|x| q.implies(phi[x], a.hom(x, y)))))
        .collect();
    represent(a, "sup", &target, true).ok_or_else(|| Error::NoSup(weight_label(q, phi)))
}

/// `inf ψ`: the object with `A(y, inf ψ) = ⋀_x ψ(x) → A(y, x)`.
pub fn inf_coweight(a: &QCategory, psi: &[Elem]) -> Result<Obj> {
    let q = a.quantale();
    if !is_coweight(a, psi) {
        return Err(Error::Shape(format!(
            "{} is not a coweight",
            weight_label(q, psi)
        )));
    }
    let target: Vec<Elem> = a
        .objects()
        .map(|y| q.meet_all(a.objects().map(|x| q.implies(psi[x], a.hom(y, x)))))
        .collect();
    represent(a, "inf", &target, false).ok_or_else(|| Error::NoInf(weight_label(q, psi)))
}

/// The join of a set of objects: `A(⋁C, y) = ⋀_{c∈C} A(c, y)`.
pub fn join_of(a: &QCategory, set: &[Obj]) -> Option<Obj> {
    let q = a.quantale();
    let target: Vec<Elem> = a
        .objects()
        .map(|y| q.meet_all(set.iter().map(|&c| a.hom(c, y))))
        .collect();
    represent(a, "join", &target, true)
}

/// The meet of a set of objects: `A(y, ⋀C) = ⋀_{c∈C} A(y, c)`.
pub fn meet_of(a: &QCategory, set: &[Obj]) -> Option<Obj> {
    let q = a.quantale();
    let target: Vec<Elem> = a
        .objects()
        .map(|y| q.meet_all(set.iter().map(|&c| a.hom(y, c))))
        .collect();
    represent(a, "meet", &target, false)
}

/// `⋁_x φ(x) ⊗ x`, defined when the tensors and their join exist.
pub fn sup_via_tensors(a: &QCategory, phi: &[Elem]) -> Result<Obj> {
    let tensors = a
        .objects()
        .map(|x| tensor(a, phi[x], x))
        .collect::<Result<Vec<_>>>()?;
    join_of(a, &tensors).ok_or_else(|| Error::NoSup(weight_label(a.quantale(), phi)))
}
