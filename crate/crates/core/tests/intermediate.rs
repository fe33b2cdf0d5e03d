use negcat_core::abelian::extension_closure;
use negcat_core::derived::{DInd, DerivedCat};
use negcat_core::intermediate::{
    enumerate_intermediate, enumerate_torsion_free, f_of, induced_intermediate,
    induced_intermediate_by_triangles, is_intermediate, is_torsion_free,
};
use negcat_core::linalg::Field;
use negcat_core::presets;
use negcat_core::typea::Interval;

fn m(i: Interval) -> DInd {
    DInd::module(i)
}

#[test]
fn single_simple_has_two_torsion_free_classes() {
    let d = DerivedCat::new(Field::new(2), 1);
    let sub = extension_closure(&d, &[m(Interval::simple(1))], 2).unwrap();
    assert_eq!(enumerate_torsion_free(&d, &sub).len(), 2);
    assert_eq!(enumerate_intermediate(&d, &sub).len(), 2);
}

#[test]
fn derived_example_classes() {
    let d = presets::derived_ambient(2);
    let sub = presets::derived_subcat(&d).unwrap();
    let tf = enumerate_torsion_free(&d, &sub);
    assert_eq!(tf.len(), 5);
    let fclass = presets::derived_fclass();
    assert!(is_torsion_free(&d, &sub, &fclass));
    // P(3) is a subobject of P(2)
    assert!(!is_torsion_free(&d, &sub, &[m(Interval::projective(2, 3))]));

    let mut want = vec![
        m(Interval::projective(3, 3)).shifted(1),
        m(Interval::projective(2, 3)).shifted(1),
        m(Interval::projective(3, 3)),
        m(Interval::projective(2, 3)),
        m(Interval::simple(2)),
    ];
    want.sort();
    let got = induced_intermediate(&d, &sub, &fclass);
    assert_eq!(got, want);
    assert!(is_intermediate(&d, &sub, &got));
    for f in &tf {
        let c = induced_intermediate(&d, &sub, f);
        assert_eq!(c, induced_intermediate_by_triangles(&d, &sub, f, 2));
        assert_eq!(&f_of(&d, &sub, &c), f);
    }
}

#[test]
fn orbit_example_round_trips() {
    let c = presets::orbit_ambient(2).unwrap();
    let sub = presets::orbit_subcat(&c, &presets::orbit_sms()).unwrap();
    let tf = enumerate_torsion_free(&c, &sub);
    assert_eq!(tf.len(), 37);
    assert!(tf.contains(&presets::orbit_fclass()));
    for f in &tf {
        assert_eq!(&f_of(&c, &sub, &induced_intermediate(&c, &sub, f)), f);
    }
    let fclass = presets::orbit_fclass();
    assert_eq!(
        induced_intermediate(&c, &sub, &fclass),
        induced_intermediate_by_triangles(&c, &sub, &fclass, 2)
    );
}
