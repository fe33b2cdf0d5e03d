use negcat_core::ambient::{compose, is_hom_exact, Ambient, Mor};
use negcat_core::derived::{DInd, DerivedCat};
use negcat_core::linalg::Field;
use negcat_core::orbit::OrbitCat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_obj<I: Clone>(rng: &mut ChaCha8Rng, pool: &[I], max: usize) -> Vec<I> {
    let k = rng.gen_range(1..=max);
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
    let v: Vec<u32> = (0..z.dim()).map(|_| rng.gen_range(0..p)).collect();
    z.with_flat(&v)
}

#[test]
fn derived_triangles_are_exact() {
    let d = DerivedCat::new(Field::new(3), 3);
    let pool = d.indecomposables_in(-1, 1);
    let probes = d.indecomposables_in(-3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let x = random_obj(&mut rng, &pool, 2);
        let y = random_obj(&mut rng, &pool, 2);
        let f = random_mor(&d, &mut rng, &x, &y);
        let tri = d.cone_triangle(&f);
        assert!(is_hom_exact(&d, &tri, &probes), "{:?}", f);
        assert_eq!(d.cone_object(&f), tri.z);
    }
}

#[test]
fn derived_composition_matches_chain_level() {
    let d = DerivedCat::new(Field::new(2), 4);
    let pool = d.indecomposables_in(-1, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let x = random_obj(&mut rng, &pool, 2);
        let y = random_obj(&mut rng, &pool, 2);
        let z = random_obj(&mut rng, &pool, 2);
        let f = random_mor(&d, &mut rng, &x, &y);
        let g = random_mor(&d, &mut rng, &y, &z);
        let scalar = compose(&d, &g, &f);
        let chain = d.realize(&g).after(&d.realize(&f));
        assert_eq!(d.extract(&x, &z, &chain), scalar);
    }
}

fn orbit() -> OrbitCat {
    OrbitCat::new(3, 4, Field::new(2)).unwrap()
}

#[test]
fn orbit_composition_is_associative_and_unital() {
    let c = orbit();
    let pool: Vec<DInd> = c.probe_set();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..80 {
        let objs: Vec<Vec<DInd>> = (0..4).map(|_| random_obj(&mut rng, &pool, 2)).collect();
        let f = random_mor(&c, &mut rng, &objs[0], &objs[1]);
        let g = random_mor(&c, &mut rng, &objs[1], &objs[2]);
        let h = random_mor(&c, &mut rng, &objs[2], &objs[3]);
        let lhs = compose(&c, &h, &compose(&c, &g, &f));
        let rhs = compose(&c, &compose(&c, &h, &g), &f);
        assert_eq!(lhs, rhs);
        assert_eq!(compose(&c, &Mor::identity(&c, &objs[1]), &f), f);
        assert_eq!(compose(&c, &f, &Mor::identity(&c, &objs[0])), f);
    }
}

#[test]
fn orbit_associativity_on_shifted_lifts() {
    // Lifts far from the preferred ones exercise the F-scalars.
    let c = orbit();
    let pool: Vec<DInd> = c.probe_set();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..60 {
        let objs: Vec<Vec<DInd>> = (0..3)
            .map(|_| {
                random_obj(&mut rng, &pool, 2)
                    .into_iter()
                    .map(|x| c.f_pow(x, rng.gen_range(-2..=2)))
                    .collect()
            })
            .collect();
        let f = random_mor(&c, &mut rng, &objs[0], &objs[1]);
        let g = random_mor(&c, &mut rng, &objs[1], &objs[2]);
        let id2 = Mor::identity(&c, &objs[2]);
        assert_eq!(
            compose(&c, &id2, &compose(&c, &g, &f)),
            compose(&c, &compose(&c, &id2, &g), &f)
        );
        let back = c.relabel_obj(
            &objs[1],
            &objs[1]
                .iter()
                .map(|&x| c.canonical(&c.key(&x)))
                .collect::<Vec<_>>(),
        );
        let fwd = c.relabel_obj(&back.tgt, &objs[1]);
        assert_eq!(compose(&c, &fwd, &back), Mor::identity(&c, &objs[1]));
    }
}

#[test]
fn orbit_triangles_are_exact_and_cones_agree() {
    let c = orbit();
    let pool: Vec<DInd> = c.probe_set();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut checked = 0;
    for _ in 0..80 {
        let x = random_obj(&mut rng, &pool, 2);
        let y = random_obj(&mut rng, &pool, 2);
        let f = random_mor(&c, &mut rng, &x, &y);
        let windowed = c.cone_c(&f);
        if let Some(tri) = c.triangle(&f) {
            checked += 1;
            assert_eq!(c.diagonals(&tri.z), windowed);
            assert!(is_hom_exact(&c, &tri, &pool), "{:?}", f);
        }
    }
    assert!(checked > 40);
}
