//! Brute-force search for left adjoints.
//!
//! `f ⊣ g` means `A(fb, a) = B(b, ga)` for all `a, b`. For fixed `b` the
//! condition only involves `fb`, so the candidates for each object can be
//! searched independently: `|B|·|A|²` work instead of `|A|^|B|` maps.
//! Any choice satisfying the equality is automatically a functor.

use super::{functor_violation, Obj, QCategory, QFunctor};
use crate::error::{Error, Result};

fn works(g: &QFunctor, b: Obj, cand: Obj) -> bool {
    let (a_cat, b_cat) = (g.source(), g.target());
    a_cat
        .objects()
        .all(|a| a_cat.hom(cand, a) == b_cat.hom(b, g.apply(a)))
}

/// A left adjoint of `g: A → B`, or the first object of `B` with no
/// admissible image.
pub fn find_left_adjoint(g: &QFunctor) -> std::result::Result<QFunctor, Obj> {
    let (a_cat, b_cat) = (g.source(), g.target());
    let mut map = Vec::with_capacity(b_cat.size());
    for b in b_cat.objects() {
        match a_cat.objects().find(|&c| works(g, b, c)) {
            Some(c) => map.push(c),
            None => return Err(b),
        }
    }
    debug_assert!(functor_violation(b_cat, a_cat, &map).is_none());
    Ok(QFunctor {
        source: b_cat.clone(),
        target: a_cat.clone(),
        map,
    })
}

/// Enumerates every object map `B → A`, keeps the functors and tests the
/// adjunction equality. Used to cross-check [`find_left_adjoint`].
pub fn find_left_adjoint_naive(g: &QFunctor, cap: usize) -> Result<Option<QFunctor>> {
    let (a_cat, b_cat): (&QCategory, &QCategory) = (g.source(), g.target());
    let (na, nb) = (a_cat.size(), b_cat.size());
    let total = (0..nb).try_fold(1usize, |acc, _| acc.checked_mul(na));
    if total.is_none_or(|t| t > cap) {
        return Err(Error::CapExceeded {
            what: "object maps".into(),
            needed: format!("{na}^{nb}"),
            cap,
        });
    }
    if na == 0 {
        return Ok((nb == 0).then(|| QFunctor {
            source: b_cat.clone(),
            target: a_cat.clone(),
            map: vec![],
        }));
    }
    let mut map = vec![0; nb];
    loop {
        if functor_violation(b_cat, a_cat, &map).is_none()
            && b_cat.objects().all(|b| works(g, b, map[b]))
        {
            return Ok(Some(QFunctor {
                source: b_cat.clone(),
                target: a_cat.clone(),
                map,
            }));
        }
        let mut i = nb;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            map[i] += 1;
            if map[i] < na {
                break;
            }
            map[i] = 0;
        }
    }
}
