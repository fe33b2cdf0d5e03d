//! Torsion-free classes of `A`, intermediate categories between `A` and
//! `ΣA∗A`, and the correspondence between them.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::abelian::{reps, sums_up_to, AbelianSubcat};
use crate::ambient::{keys, projective_morphisms, shift_obj, Ambient};
use crate::fg::{fg_decompose, is_mono, sigma_a_star_a};

/// Extension data among objects built from a fixed set of indecomposables:
/// for every pair of end terms, the summands of all middle terms.
#[derive(Debug, Clone)]
pub struct ExtensionTable<K: Ord> {
    pub entries: Vec<(Vec<K>, Vec<K>, BTreeSet<K>)>,
}

impl<K: Ord + Clone + Send + Sync> ExtensionTable<K> {
    pub fn build<A: Ambient<Key = K>>(a: &A, set: &[K], max_summands: usize) -> Self {
        let objs = sums_up_to(set, max_summands);
        let entries = objs
            .par_iter()
            .flat_map_iter(|x| {
                let sx = shift_obj(a, &reps(a, x), 1);
                objs.iter().filter_map(move |z| {
                    let mut mids = BTreeSet::new();
                    for e in projective_morphisms(a, &reps(a, z), &sx) {
                        let y = shift_obj(a, &a.cone_object(&e), -1);
                        mids.extend(keys(a, &y));
                    }
                    (!mids.is_empty()).then(|| (x.clone(), z.clone(), mids))
                })
            })
            .collect();
        ExtensionTable { entries }
    }
}

impl<K: Ord> ExtensionTable<K> {
    /// Whether `set` is closed under the recorded extensions.
    pub fn closed(&self, set: &BTreeSet<K>) -> bool {
        self.entries.iter().all(|(x, z, mids)| {
            !(x.iter().all(|k| set.contains(k)) && z.iter().all(|k| set.contains(k)))
                || mids.iter().all(|k| set.contains(k))
        })
    }
}

/// Precomputed data for torsion-free tests in a fixed `A`.
pub struct TorsionData<K: Ord> {
    pub extensions: ExtensionTable<K>,
    /// summands of sources of monomorphisms into each indecomposable
    pub subobjects: BTreeMap<K, BTreeSet<K>>,
}

impl<K: Ord + Clone + Send + Sync> TorsionData<K> {
    pub fn new<A: Ambient<Key = K>>(a: &A, sub: &AbelianSubcat<K>) -> Self {
        let extensions = ExtensionTable::build(a, &sub.indecomposables, 2);
        let subobjects = sub
            .indecomposables
            .par_iter()
            .map(|f| {
                let lf = sub.length(std::slice::from_ref(f)) as usize;
                let fo = vec![a.canonical(f)];
                let mut found = BTreeSet::new();
                for b in sums_up_to(&sub.indecomposables, lf) {
                    if sub.length(&b) as usize > lf {
                        continue;
                    }
                    if b.iter().all(|k| found.contains(k)) {
                        continue;
                    }
                    let bo = reps(a, &b);
                    for m in projective_morphisms(a, &bo, &fo) {
                        if is_mono(a, sub, &m).expect("morphism of A") {
                            found.extend(b.iter().cloned());
                            break;
                        }
                    }
                }
                (f.clone(), found)
            })
            .collect();
        TorsionData {
            extensions,
            subobjects,
        }
    }

    pub fn is_torsion_free(&self, set: &BTreeSet<K>) -> bool {
        set.iter()
            .all(|f| self.subobjects[f].iter().all(|b| set.contains(b)))
            && self.extensions.closed(set)
    }
}

pub fn is_torsion_free<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>, set: &[A::Key]) -> bool {
    TorsionData::new(a, sub).is_torsion_free(&set.iter().cloned().collect())
}

/// Sort key: cardinality first, then lexicographic.
fn canonical_sort<K: Ord + Clone>(v: &mut [Vec<K>]) {
    v.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
}

/// All torsion-free classes, as sorted lists of indecomposables.
pub fn enumerate_torsion_free<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>) -> Vec<Vec<A::Key>> {
    let data = TorsionData::new(a, sub);
    enumerate_with(&data, &sub.indecomposables)
}

pub fn enumerate_with<K: Ord + Clone + Send + Sync>(
    data: &TorsionData<K>,
    inds: &[K],
) -> Vec<Vec<K>> {
    let n = inds.len();
    assert!(n < 26, "too many indecomposables for subset enumeration");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: BTreeSet<K> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| inds[i].clone())
            .collect();
        if data.is_torsion_free(&set) {
            out.push(set.into_iter().collect());
        }
    }
    canonical_sort(&mut out);
    out
}

/// `ΣF∗A` on indecomposables: members `z` of `ΣA∗A` with `F(z) ∈ add F`.
pub fn induced_intermediate<A: Ambient>(
    a: &A,
    sub: &AbelianSubcat<A::Key>,
    fclass: &[A::Key],
) -> Vec<A::Key> {
    let fset: BTreeSet<&A::Key> = fclass.iter().collect();
    let mut out: Vec<A::Key> = sigma_a_star_a(a, sub)
        .into_iter()
        .filter(|k| {
            let d = fg_decompose(a, sub, &[a.canonical(k)]).expect("member of ΣA∗A");
            keys(a, &d.f_part).iter().all(|x| fset.contains(x))
        })
        .collect();
    out.sort();
    out
}

/// `ΣF∗A` computed directly as summands of middle terms of triangles
/// `Σf -> y -> a -> Σ²f` with `f`, `a` sums of at most `max_summands`
/// indecomposables.
pub fn induced_intermediate_by_triangles<A: Ambient>(
    a: &A,
    sub: &AbelianSubcat<A::Key>,
    fclass: &[A::Key],
    max_summands: usize,
) -> Vec<A::Key> {
    let mut out: BTreeSet<A::Key> = sub.indecomposables.iter().cloned().collect();
    for k in fclass {
        out.insert(a.key(&a.shift_ind(&a.canonical(k), 1)));
    }
    for f in sums_up_to(fclass, max_summands) {
        let s2f = shift_obj(a, &reps(a, &f), 2);
        for x in sums_up_to(&sub.indecomposables, max_summands) {
            for e in projective_morphisms(a, &reps(a, &x), &s2f) {
                let y = shift_obj(a, &a.cone_object(&e), -1);
                out.extend(keys(a, &y));
            }
        }
    }
    out.into_iter().collect()
}

/// Union of the summands of `F(z)` over `z` in the set.
pub fn f_of<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>, cset: &[A::Key]) -> Vec<A::Key> {
    let mut out = BTreeSet::new();
    for k in cset {
        if let Some(d) = fg_decompose(a, sub, &[a.canonical(k)]) {
            out.extend(keys(a, &d.f_part));
        }
    }
    out.into_iter().collect()
}

/// Intermediate-category predicate given the extension table of `ΣA∗A`.
pub fn is_intermediate_with<K: Ord + Clone>(
    table: &ExtensionTable<K>,
    a_inds: &[K],
    star: &BTreeSet<K>,
    cset: &BTreeSet<K>,
) -> bool {
    a_inds.iter().all(|k| cset.contains(k)) && cset.is_subset(star) && table.closed(cset)
}

pub fn is_intermediate<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>, cset: &[A::Key]) -> bool {
    let star: BTreeSet<A::Key> = sigma_a_star_a(a, sub).into_iter().collect();
    let cs: BTreeSet<A::Key> = cset.iter().cloned().collect();
    if !cs.is_subset(&star) {
        return false;
    }
    let table = ExtensionTable::build(a, cset, 2);
    is_intermediate_with(&table, &sub.indecomposables, &star, &cs)
}

/// Brute-force enumeration of all intermediate categories.
pub fn enumerate_intermediate<A: Ambient>(a: &A, sub: &AbelianSubcat<A::Key>) -> Vec<Vec<A::Key>> {
    let star = sigma_a_star_a(a, sub);
    let starset: BTreeSet<A::Key> = star.iter().cloned().collect();
    let table = ExtensionTable::build(a, &star, 2);
    let extra: Vec<A::Key> = star.iter().filter(|k| !sub.contains(k)).cloned().collect();
    assert!(
        extra.len() < 26,
        "too many candidates for subset enumeration"
    );
    let mut out = Vec::new();
    for mask in 0u32..(1 << extra.len()) {
        let mut set: BTreeSet<A::Key> = sub.indecomposables.iter().cloned().collect();
        set.extend(
            (0..extra.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| extra[i].clone()),
        );
        if is_intermediate_with(&table, &sub.indecomposables, &starset, &set) {
            out.push(set.into_iter().collect());
        }
    }
    canonical_sort(&mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport<K> {
    /// false when the star equality fails; the sets below are still filled in
    pub applicable: bool,
    pub torsion_free: Vec<Vec<K>>,
    pub intermediate: Vec<Vec<K>>,
    /// `(torsion-free index, intermediate index)` pairs under `F ↦ ΣF∗A`
    pub matching: Vec<(usize, usize)>,
    /// torsion-free classes whose induced category was not enumerated
    pub unmatched_torsion_free: Vec<usize>,
    /// intermediate categories not of the form `ΣF∗A`
    pub unmatched_intermediate: Vec<usize>,
    pub round_trip_torsion_free: bool,
    pub round_trip_intermediate: bool,
}

impl<K> BijectionReport<K> {
    pub fn verified(&self) -> bool {
        self.applicable
            && self.torsion_free.len() == self.intermediate.len()
            && self.matching.len() == self.torsion_free.len()
            && self.unmatched_torsion_free.is_empty()
            && self.unmatched_intermediate.is_empty()
            && self.round_trip_torsion_free
            && self.round_trip_intermediate
    }
}

pub fn bijection_check<A: Ambient>(
    a: &A,
    sub: &AbelianSubcat<A::Key>,
    star_equality_holds: bool,
) -> BijectionReport<A::Key> {
    let tf = enumerate_torsion_free(a, sub);
    let im = enumerate_intermediate(a, sub);
    let index: BTreeMap<&Vec<A::Key>, usize> = im.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let induced: Vec<(Vec<A::Key>, bool)> = tf
        .par_iter()
        .map(|f| {
            let c = induced_intermediate(a, sub, f);
            let back = f_of(a, sub, &c) == *f;
            (c, back)
        })
        .collect();
    let rt_tf = induced.iter().all(|(_, back)| *back);
    let mut matching = Vec::new();
    let mut unmatched_tf = Vec::new();
    let mut hit = vec![false; im.len()];
    for (i, (c, _)) in induced.iter().enumerate() {
        match index.get(c) {
            Some(&j) => {
                matching.push((i, j));
                hit[j] = true;
            }
            None => unmatched_tf.push(i),
        }
    }
    let rt_im = im
        .par_iter()
        .all(|c| induced_intermediate(a, sub, &f_of(a, sub, c)) == *c);
    let unmatched_im = (0..im.len()).filter(|&j| !hit[j]).collect();
    BijectionReport {
        applicable: star_equality_holds,
        torsion_free: tf,
        intermediate: im,
        matching,
        unmatched_torsion_free: unmatched_tf,
        unmatched_intermediate: unmatched_im,
        round_trip_torsion_free: rt_tf,
        round_trip_intermediate: rt_im,
    }
}
