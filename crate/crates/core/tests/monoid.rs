use negcat_core::abelian::conflations_in;
use negcat_core::intermediate::induced_intermediate;
use negcat_core::monoid::{
    is_free_on_simples, localization_iso_check, localize, monoid_of, monoid_of_abelian, Decision,
    MonoidElement, MonoidPresentation,
};
use negcat_core::presets;

fn el(v: &[u32]) -> MonoidElement {
    MonoidElement { vector: v.to_vec() }
}

#[test]
fn naturals_localized_at_one_are_the_integers() {
    let nat = MonoidPresentation::free(vec!["x"]);
    let z = localize(nat, vec![el(&[1])]);
    for a in 0..5 {
        for b in 0..5 {
            for c in 0..5 {
                for d in 0..5 {
                    let lhs = z.fraction(el(&[a]), el(&[b]));
                    let rhs = z.fraction(el(&[c]), el(&[d]));
                    let want = if a as i32 - b as i32 == c as i32 - d as i32 {
                        Decision::Yes
                    } else {
                        Decision::No
                    };
                    assert_eq!(z.eq_bounded(&lhs, &rhs, 3), want);
                }
            }
        }
        // two-sided inverse witness
        let s = el(&[a]);
        let prod = z.mul(&z.q(&s), &z.fraction(el(&[0]), s.clone()));
        assert_eq!(z.eq_bounded(&prod, &z.identity(), 3), Decision::Yes);
    }
}

#[test]
fn localizing_at_zero_changes_nothing() {
    let m = MonoidPresentation::new(vec!['a', 'b'], vec![(vec![2, 0], vec![0, 1])]);
    let l = localize(m.clone(), vec![el(&[0, 0])]);
    for u in [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1]] {
        for v in [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1]] {
            assert_eq!(
                l.eq_bounded(&l.q(&el(&u)), &l.q(&el(&v)), 2),
                m.eq_bounded(&el(&u), &el(&v), 2)
            );
        }
    }
    assert_eq!(m.eq_bounded(&el(&[2, 0]), &el(&[0, 1]), 0), Decision::Yes);
    assert_eq!(m.eq_bounded(&el(&[1, 0]), &el(&[0, 1]), 2), Decision::No);
}

#[test]
fn localizing_one_coordinate_of_the_plane() {
    let n2 = MonoidPresentation::free(vec![0, 1]);
    let l = localize(n2, vec![el(&[1, 0])]);
    let a = l.fraction(el(&[0, 2]), el(&[3, 0]));
    let b = l.fraction(el(&[1, 2]), el(&[4, 0]));
    let c = l.fraction(el(&[1, 1]), el(&[4, 0]));
    assert_eq!(l.eq_bounded(&a, &b, 2), Decision::Yes);
    assert_eq!(l.eq_bounded(&a, &c, 2), Decision::No);
}

#[test]
fn free_monoids_separate_distinct_elements() {
    let m = MonoidPresentation::free(vec![0, 1, 2]);
    assert_eq!(
        m.eq_bounded(&el(&[1, 2, 0]), &el(&[1, 2, 0]), 0),
        Decision::Yes
    );
    assert_eq!(
        m.eq_bounded(&el(&[1, 2, 0]), &el(&[2, 1, 0]), 4),
        Decision::No
    );
}

#[test]
fn unknown_is_reported_when_the_bound_is_too_small() {
    // a = b only through the intermediate element 3c of higher degree
    let m = MonoidPresentation::new(
        vec!['a', 'b', 'c'],
        vec![
            (vec![1, 0, 0], vec![0, 0, 3]),
            (vec![0, 1, 0], vec![0, 0, 3]),
        ],
    );
    assert_eq!(
        m.eq_bounded(&el(&[1, 0, 0]), &el(&[0, 1, 0]), 1),
        Decision::Unknown
    );
    assert_eq!(
        m.eq_bounded(&el(&[1, 0, 0]), &el(&[0, 1, 0]), 2),
        Decision::Yes
    );
}

#[test]
fn abelian_monoids_are_free_on_simples() {
    let c = presets::orbit_ambient(2).unwrap();
    let sub = presets::orbit_subcat(&c, &presets::orbit_sms()).unwrap();
    assert!(is_free_on_simples(
        &monoid_of_abelian(&c, &sub, 2).unwrap(),
        &sub,
        2
    ));
    let d = presets::derived_ambient(2);
    let dsub = presets::derived_subcat(&d).unwrap();
    let m = monoid_of_abelian(&d, &dsub, 2).unwrap();
    assert!(is_free_on_simples(&m, &dsub, 2));
    // [P(2)] = [P(3)] + [S(2)] by a single relation
    let p2 = m.element(&[presets::derived_fclass()[1]]);
    let p3s2 = m.element(&presets::derived_simples());
    assert_eq!(m.eq_bounded(&p2, &p3s2, 1), Decision::Yes);
}

#[test]
fn split_only_categories_give_free_monoids() {
    let d = presets::derived_ambient(2);
    let simples = presets::derived_simples();
    // a single indecomposable without self-extensions
    let confl = conflations_in(&d, &simples[..1], 2).unwrap();
    let m = monoid_of(&simples[..1], &confl);
    assert!(m.relations.is_empty());
}

#[test]
fn localization_isomorphism_in_the_derived_example() {
    let d = presets::derived_ambient(2);
    let sub = presets::derived_subcat(&d).unwrap();
    let fclass = presets::derived_fclass();
    let cset = induced_intermediate(&d, &sub, &fclass);
    let r = localization_iso_check(&d, &sub, &fclass, &cset, 6).unwrap();
    assert!(r.verified(), "{r:?}");
    // the zero class: both sides are M(A)
    let r0 = localization_iso_check(&d, &sub, &[], &sub.indecomposables, 4).unwrap();
    assert!(r0.verified(), "{r0:?}");
}
