use negcat_core::fg::snake_suite;
use negcat_core::presets;

#[test]
fn seven_term_sequences_are_exact_in_the_orbit_category() {
    let c = presets::orbit_ambient(2).unwrap();
    let sub = presets::orbit_subcat(&c, &presets::orbit_sms()).unwrap();
    let r = snake_suite(&c, &sub, 2024, 200).unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(r.nonzero_delta > 10, "{r:?}");
}

#[test]
fn seven_term_sequences_are_exact_in_the_derived_category() {
    let d = presets::derived_ambient(3);
    let sub = presets::derived_subcat(&d).unwrap();
    let r = snake_suite(&d, &sub, 2025, 200).unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(r.nonzero_delta > 10, "{r:?}");
}
