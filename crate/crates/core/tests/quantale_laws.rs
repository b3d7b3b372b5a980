mod common;

use proptest::prelude::*;
use qdl_core::quantale::{validate, FiniteQuantale, DEFAULT_CLOSURE_CAP};
use qdl_core::tnorm::{Component, ComponentKind, OrdinalSumTNorm};
use qdl_core::{rat, Error, Rational};

fn pool() -> Vec<FiniteQuantale> {
    let mut v: Vec<FiniteQuantale> = common::integral_pool()
        .iter()
        .map(|q| (**q).clone())
        .collect();
    v.push(FiniteQuantale::godel_chain(6));
    v.push(FiniteQuantale::lukasiewicz_chain(7));
    v
}

#[test]
fn residuation_holds_exhaustively() {
    for q in pool() {
        for p in q.elements() {
            for z in q.elements() {
                for r in q.elements() {
                    assert_eq!(
                        q.le(q.tensor(p, z), r),
                        q.le(z, q.implies(p, r)),
                        "p={} z={} r={}",
                        q.label(p),
                        q.label(z),
                        q.label(r)
                    );
                }
            }
        }
    }
}

#[test]
fn pool_tables_validate_and_are_integral() {
    for q in pool() {
        assert!(validate(&q.table()).unwrap().is_empty());
        assert!(q.is_integral());
    }
}

#[test]
fn label_residuum_matches_index_residuum() {
    let q = FiniteQuantale::lukasiewicz_chain(5);
    assert_eq!(q.residuum("3/4", "1/4").unwrap(), "1/2");
    assert_eq!(q.residuum("1/4", "3/4").unwrap(), "1");
    assert!(matches!(
        q.residuum("1/3", "0"),
        Err(Error::UnknownElement(_))
    ));
}

fn grid_point(d: i64) -> impl Strategy<Value = Rational> {
    (0..=d).prop_map(move |n| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn from_tnorm_output_validates(
        lo in 0i64..4,
        width in 1i64..=4,
        luk in any::<bool>(),
        points in prop::collection::vec(grid_point(8), 0..4),
    ) {
        let hi = (lo + width).min(4);
        prop_assume!(lo < hi);
        let kind = if luk { ComponentKind::Lukasiewicz } else { ComponentKind::Product };
        let t = OrdinalSumTNorm::new(vec![Component::new(rat(lo, 4), rat(hi, 4), kind).unwrap()]).unwrap();
        match FiniteQuantale::from_tnorm(&t, &[&[Rational::zero(), Rational::one()], &points[..]].concat(), DEFAULT_CLOSURE_CAP) {
            Ok(q) => {
                prop_assert!(validate(&q.table()).unwrap().is_empty());
                prop_assert!(q.is_integral());
                for p in q.elements() {
                    for z in q.elements() {
                        let v = t.eval(&q.label(p).parse().unwrap(), &q.label(z).parse().unwrap()).unwrap();
                        prop_assert_eq!(q.label(q.tensor(p, z)), v.to_string());
                    }
                }
            }
            Err(Error::ClosureOverflow { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }
}
