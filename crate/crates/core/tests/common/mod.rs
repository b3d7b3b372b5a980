#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use qdl_core::qcat::QCategory;
use qdl_core::quantale::{Elem, FiniteQuantale, QuantaleTable};

/// The four-element Boolean algebra `{0, a, b, 1}` with `& = ∧`.
pub fn diamond() -> FiniteQuantale {
    let le = vec![
        vec![true, true, true, true],
        vec![false, true, false, true],
        vec![false, false, true, true],
        vec![false, false, false, true],
    ];
    let meet = |i: usize, j: usize| -> Elem {
        match (i, j) {
            (3, x) | (x, 3) => x,
            (x, y) if x == y => x,
            _ => 0,
        }
    };
    let tensor = (0..4)
        .map(|i| (0..4).map(|j| meet(i, j)).collect())
        .collect();
    FiniteQuantale::new(QuantaleTable {
        elements: ["0", "a", "b", "1"].map(String::from).to_vec(),
        le,
        tensor,
        unit: 3,
    })
    .unwrap()
}

/// Integral quantales with at most four elements.
pub fn integral_pool() -> Vec<Arc<FiniteQuantale>> {
    vec![
        Arc::new(FiniteQuantale::boolean()),
        Arc::new(FiniteQuantale::godel_chain(3)),
        Arc::new(FiniteQuantale::lukasiewicz_chain(3)),
        Arc::new(FiniteQuantale::godel_chain(4)),
        Arc::new(FiniteQuantale::lukasiewicz_chain(4)),
        Arc::new(diamond()),
    ]
}

pub fn names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// A Q-category generated by a random hom matrix.
pub fn category(max_objects: usize, max_quantale: usize) -> impl Strategy<Value = QCategory> {
    let pool = integral_pool();
    let pool: Vec<_> = pool
        .into_iter()
        .filter(|q| q.size() <= max_quantale)
        .collect();
    (0..pool.len(), 1..=max_objects)
        .prop_flat_map(move |(qi, n)| {
            let q = pool[qi].clone();
            let size = q.size();
            (
                Just(q),
                prop::collection::vec(prop::collection::vec(0..size, n), n),
            )
        })
        .prop_map(|(q, gen)| QCategory::generated(q, names(gen.len()), &gen).unwrap())
}

/// `x & y ≤ z` is read off the table; everything else is recomputed here.
pub fn weight_law(a: &QCategory, phi: &[Elem]) -> bool {
    let q = a.quantale();
    a.objects().all(|x| {
        a.objects()
            .all(|y| q.le(q.tensor(phi[y], a.hom(x, y)), phi[x]))
    })
}

pub fn coweight_law(a: &QCategory, psi: &[Elem]) -> bool {
    let q = a.quantale();
    a.objects().all(|x| {
        a.objects()
            .all(|y| q.le(q.tensor(a.hom(x, y), psi[x]), psi[y]))
    })
}

/// All vectors in `Q^A`, first coordinate most significant.
pub fn all_vectors(a: &QCategory) -> Vec<Vec<Elem>> {
    let s = a.quantale().size();
    let mut out = vec![vec![]];
    for _ in a.objects() {
        out = out
            .into_iter()
            .flat_map(|v| (0..s).map(move |e| [v.clone(), vec![e]].concat()))
            .collect();
    }
    out
}

/// `⋀_x φ(x) → ρ(x)` with the residuum found by scanning the table.
pub fn pointwise_hom(q: &FiniteQuantale, phi: &[Elem], rho: &[Elem]) -> Elem {
    let imp = |p: Elem, r: Elem| q.join_all(q.elements().filter(|&z| q.le(q.tensor(p, z), r)));
    q.meet_all(phi.iter().zip(rho).map(|(&p, &r)| imp(p, r)))
}
