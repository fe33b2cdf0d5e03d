use negcat_core::abelian::{reps, AbelianSubcat};
use negcat_core::ambient::{keys, shift_obj, Ambient, Mor};
use negcat_core::fg::{
    approximation_multiplicities, fg_decompose, fg_decompose_with, functor_law_suite, kernel,
    kernel_by_fingerprint, sigma_a_star_a, DeletionOrder,
};
use negcat_core::presets;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_obj<K: Clone>(rng: &mut ChaCha8Rng, pool: &[K]) -> Vec<K> {
    let k = rng.gen_range(1..=2);
    (0..k)
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect()
}

fn random_mor<A: Ambient>(
    a: &A,
    rng: &mut ChaCha8Rng,
    src: &[A::Ind],
    tgt: &[A::Ind],
) -> Mor<A::Ind> {
    let z = Mor::zero(a, src, tgt);
    let p = a.field().prime();
    z.with_flat(
        &(0..z.dim())
            .map(|_| rng.gen_range(0..p))
            .collect::<Vec<_>>(),
    )
}

fn functor_laws<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>, seed: u64, pairs: usize) {
    let r = functor_law_suite(a, sub, seed, pairs);
    assert!(r.passed(), "{r:?}");
    assert!(r.nontrivial * 2 > pairs, "{r:?}");
}

#[test]
fn functor_laws_in_the_orbit_category() {
    let c = presets::orbit_ambient(2).unwrap();
    let sub = presets::orbit_subcat(&c, &presets::orbit_sms()).unwrap();
    functor_laws(&c, &sub, 101, 100);
}

#[test]
fn functor_laws_in_the_derived_category() {
    let d = presets::derived_ambient(3);
    let sub = presets::derived_subcat(&d).unwrap();
    functor_laws(&d, &sub, 202, 100);
}

fn minimality<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>) {
    for k in sigma_a_star_a(a, sub) {
        let c = vec![a.canonical(&k)];
        let base = fg_decompose(a, sub, &c).unwrap();
        for seed in 0..4 {
            let other = fg_decompose_with(a, sub, &c, DeletionOrder::Shuffled(seed)).unwrap();
            assert_eq!(keys(a, &other.f_part), keys(a, &base.f_part));
            assert_eq!(keys(a, &other.g_part), keys(a, &base.g_part));
        }
        let mut from_radical: Vec<A::Key> = approximation_multiplicities(a, sub, &c)
            .into_iter()
            .flat_map(|(k, m)| std::iter::repeat_n(k, m))
            .collect();
        from_radical.sort();
        assert_eq!(keys(a, &base.f_part), from_radical);
        // F and G land in A, and ΣF(c) -> c -> G(c) recovers c as a cone
        assert!(sub.contains_all(&keys(a, &base.f_part)));
        assert!(sub.contains_all(&keys(a, &base.g_part)));
        assert_eq!(keys(a, &a.cone_object(&base.phi)), keys(a, &base.g_part));
        assert_eq!(
            keys(a, &shift_obj(a, &base.phi.src, -1)),
            keys(a, &base.f_part)
        );
    }
}

#[test]
fn approximations_are_minimal() {
    let c = presets::orbit_ambient(2).unwrap();
    minimality(
        &c,
        &presets::orbit_subcat(&c, &presets::orbit_sms()).unwrap(),
    );
    let d = presets::derived_ambient(2);
    minimality(&d, &presets::derived_subcat(&d).unwrap());
}

fn kernels_agree<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nonzero = 0;
    for _ in 0..60 {
        let x = reps(a, &random_obj(&mut rng, &sub.indecomposables));
        let y = reps(a, &random_obj(&mut rng, &sub.indecomposables));
        let f = random_mor(a, &mut rng, &x, &y);
        let k = kernel(a, sub, &f).unwrap();
        nonzero += usize::from(!k.is_empty());
        assert_eq!(Some(k), kernel_by_fingerprint(a, sub, &f, 4));
    }
    assert!(nonzero > 5);
}

#[test]
fn kernels_match_the_fingerprint_oracle() {
    let c = presets::orbit_ambient(3).unwrap();
    kernels_agree(
        &c,
        &presets::orbit_subcat(&c, &presets::orbit_sms()).unwrap(),
        9,
    );
    let d = presets::derived_ambient(2);
    kernels_agree(&d, &presets::derived_subcat(&d).unwrap(), 10);
}
