use negcat_core::linalg::Field;
use negcat_core::typea::{
    decompose, ext1_dim, ext1_dim_rep, hom_dim, hom_dim_oracle, tau, tau_inv, Interval,
    ModuleObject, Representation,
};
use proptest::prelude::*;

#[test]
fn interval_hom_and_ext_match_oracles_up_to_six() {
    for p in [2, 3] {
        let field = Field::new(p);
        for n in 1..=6 {
            let all = Interval::all(n);
            for &x in &all {
                let rx = Representation::interval(field, n, x);
                for &y in &all {
                    let ry = Representation::interval(field, n, y);
                    assert_eq!(
                        hom_dim(x, y),
                        hom_dim_oracle(&rx, &ry),
                        "Hom({x:?},{y:?}) n={n}"
                    );
                    assert_eq!(
                        ext1_dim(x, y),
                        ext1_dim_rep(x, &ry),
                        "Ext({x:?},{y:?}) n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn auslander_reiten_formula_holds() {
    // Ext^1(x, y) ≅ D Hom(y, τx) over a hereditary algebra.
    for n in 1..=6 {
        for x in Interval::all(n) {
            for y in Interval::all(n) {
                let expect = tau(x, n).map_or(0, |t| hom_dim(y, t));
                assert_eq!(ext1_dim(x, y), expect, "n={n} {x:?} {y:?}");
            }
        }
    }
}

#[test]
fn translate_is_a_partial_bijection() {
    for n in 1..=6 {
        for x in Interval::all(n) {
            assert_eq!(tau(x, n).is_none(), x.is_projective(n));
            assert_eq!(tau_inv(x, n).is_none(), x.is_injective());
            if let Some(t) = tau(x, n) {
                assert_eq!(tau_inv(t, n), Some(x));
            }
        }
    }
}

fn interval_strategy(n: usize) -> impl Strategy<Value = Interval> {
    (1..=n)
        .prop_flat_map(move |lo| (Just(lo), lo..=n))
        .prop_map(|(lo, hi)| Interval::new(lo, hi))
}

fn sum_of(field: Field, n: usize, xs: &[Interval]) -> Representation {
    xs.iter().fold(Representation::zero(field, n), |acc, &x| {
        acc.direct_sum(&Representation::interval(field, n, x))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_recovers_summands(xs in prop::collection::vec(interval_strategy(5), 0..5)) {
        let field = Field::new(3);
        let r = sum_of(field, 5, &xs);
        prop_assert_eq!(decompose(&r), ModuleObject::new(xs));
    }

    #[test]
    fn hom_is_additive(xs in prop::collection::vec(interval_strategy(4), 1..4),
                       ys in prop::collection::vec(interval_strategy(4), 1..4)) {
        let field = Field::new(2);
        let expect: usize = xs.iter().flat_map(|&x| ys.iter().map(move |&y| hom_dim(x, y))).sum();
        prop_assert_eq!(hom_dim_oracle(&sum_of(field, 4, &xs), &sum_of(field, 4, &ys)), expect);
    }
}
