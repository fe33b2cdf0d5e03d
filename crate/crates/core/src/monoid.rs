//! Grothendieck monoids of finite extension-closed subcategories, their
//! localizations, and a bounded decision procedure for equality.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::abelian::{conflations_in, sums_up_to, AbelianSubcat, Conflation};
use crate::ambient::{keys, Ambient};
use crate::error::Result;
use crate::fg::fg_decompose;
use crate::linalg::{kernel_basis, Field, Matrix};

/// Prime used for the additive invariants that certify inequality.
const INVARIANT_PRIME: u32 = 1_000_003;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidElement {
    pub vector: Vec<u32>,
}

impl MonoidElement {
    pub fn zero(len: usize) -> Self {
        MonoidElement {
            vector: vec![0; len],
        }
    }

    pub fn generator(len: usize, i: usize) -> Self {
        let mut e = Self::zero(len);
        e.vector[i] = 1;
        e
    }

    pub fn degree(&self) -> u32 {
        self.vector.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        MonoidElement {
            vector: self
                .vector
                .iter()
                .zip(&other.vector)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

#[derive(Debug)]
pub struct MonoidPresentation<K> {
    pub generators: Vec<K>,
    /// `(u, v)` meaning `u = v`
    pub relations: Vec<(Vec<u32>, Vec<u32>)>,
    invariants: OnceLock<Vec<Vec<u32>>>,
}

impl<K: Clone> Clone for MonoidPresentation<K> {
    fn clone(&self) -> Self {
        MonoidPresentation {
            generators: self.generators.clone(),
            relations: self.relations.clone(),
            invariants: self.invariants.clone(),
        }
    }
}

impl<K: Ord + Clone> MonoidPresentation<K> {
    /// Drops relations whose sides coincide and repeated relations.
    pub fn new(generators: Vec<K>, relations: Vec<(Vec<u32>, Vec<u32>)>) -> Self {
        let g = generators.len();
        let mut seen = BTreeSet::new();
        let mut rels = Vec::new();
        for (u, v) in relations {
            assert!(u.len() == g && v.len() == g, "relation of the wrong length");
            if u == v {
                continue;
            }
            let key = if u <= v {
                (u.clone(), v.clone())
            } else {
                (v.clone(), u.clone())
            };
            if seen.insert(key) {
                rels.push((u, v));
            }
        }
        MonoidPresentation {
            generators,
            relations: rels,
            invariants: OnceLock::new(),
        }
    }

    pub fn free(generators: Vec<K>) -> Self {
        Self::new(generators, Vec::new())
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.generators.iter().position(|g| g == k)
    }

    /// Element given by a multiset of generators.
    pub fn element(&self, ks: &[K]) -> MonoidElement {
        let mut e = MonoidElement::zero(self.rank());
        for k in ks {
            e.vector[self.index_of(k).expect("generator")] += 1;
        }
        e
    }

    /// Additive functionals to `F_q` vanishing on every relation.
    pub fn invariants(&self) -> &[Vec<u32>] {
        self.invariants.get_or_init(|| {
            let field = Field::new(INVARIANT_PRIME);
            let g = self.rank();
            if self.relations.is_empty() {
                return (0..g)
                    .map(|i| MonoidElement::generator(g, i).vector)
                    .collect();
            }
            let rows: Vec<Vec<i64>> = self
                .relations
                .iter()
                .map(|(u, v)| {
                    u.iter()
                        .zip(v)
                        .map(|(&a, &b)| a as i64 - b as i64)
                        .collect()
                })
                .collect();
            kernel_basis(&Matrix::from_rows(field, &rows))
        })
    }

    pub fn invariant_of(&self, e: &MonoidElement) -> Vec<u32> {
        let field = Field::new(INVARIANT_PRIME);
        self.invariants()
            .iter()
            .map(|w| {
                w.iter().zip(&e.vector).fold(0, |acc, (&a, &b)| {
                    field.add(acc, field.mul(a, field.reduce(b as i64)))
                })
            })
            .collect()
    }

    fn neighbours(&self, s: &[u32], cap: u32, out: &mut Vec<Vec<u32>>) -> bool {
        let deg: u32 = s.iter().sum();
        let mut capped = false;
        for (u, v) in &self.relations {
            for (from, to) in [(u, v), (v, u)] {
                if s.iter().zip(from).all(|(a, b)| a >= b) {
                    let fd: u32 = from.iter().sum();
                    let td: u32 = to.iter().sum();
                    if deg - fd + td > cap {
                        capped = true;
                        continue;
                    }
                    out.push(
                        s.iter()
                            .zip(from)
                            .zip(to)
                            .map(|((a, b), c)| a - b + c)
                            .collect(),
                    );
                }
            }
        }
        capped
    }

    /// Decides `u = v` in the presented monoid.
    ///
    /// `Yes` comes from a rewriting path through elements of degree at most
    /// `max(deg u, deg v) + bound`. `No` comes either from an additive
    /// invariant or from exhausting the whole rewriting class of `u`.
    pub fn eq_bounded(&self, u: &MonoidElement, v: &MonoidElement, bound: u32) -> Decision {
        if u == v {
            return Decision::Yes;
        }
        if self.invariant_of(u) != self.invariant_of(v) {
            return Decision::No;
        }
        let cap = u.degree().max(v.degree()) + bound;
        // Two-sided breadth-first search.
        let mut seen = [HashSet::new(), HashSet::new()];
        let mut frontier = [vec![u.vector.clone()], vec![v.vector.clone()]];
        seen[0].insert(u.vector.clone());
        seen[1].insert(v.vector.clone());
        let mut capped = [false, false];
        let mut buf = Vec::new();
        loop {
            let side = if frontier[0].len() <= frontier[1].len() {
                0
            } else {
                1
            };
            if frontier[side].is_empty() {
                return if capped[side] {
                    Decision::Unknown
                } else {
                    Decision::No
                };
            }
            let mut next = Vec::new();
            for s in std::mem::take(&mut frontier[side]) {
                buf.clear();
                capped[side] |= self.neighbours(&s, cap, &mut buf);
                for t in buf.drain(..) {
                    if seen[1 - side].contains(&t) {
                        return Decision::Yes;
                    }
                    if seen[side].insert(t.clone()) {
                        next.push(t);
                    }
                }
            }
            frontier[side] = next;
        }
    }
}

/// Presentation with one generator per indecomposable and one relation
/// `[x] + [z] = [y]` per conflation.
pub fn monoid_of<K: Ord + Clone>(
    generators: &[K],
    conflations: &[Conflation<K>],
) -> MonoidPresentation<K> {
    let index: BTreeMap<&K, usize> = generators.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let g = generators.len();
    let vec_of = |ks: &[K]| {
        let mut v = vec![0; g];
        for k in ks {
            v[index[k]] += 1;
        }
        v
    };
    let relations = conflations
        .iter()
        .map(|c| {
            let mut lhs = vec_of(&c.x);
            for (a, b) in lhs.iter_mut().zip(vec_of(&c.z)) {
                *a += b;
            }
            (lhs, vec_of(&c.y))
        })
        .collect();
    MonoidPresentation::new(generators.to_vec(), relations)
}

/// Fractions `(m, s)` with `s` in the submonoid generated by `inverted`.
#[derive(Debug, Clone)]
pub struct LocalizedMonoid<K> {
    pub base: MonoidPresentation<K>,
    pub inverted: Vec<MonoidElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    pub m: MonoidElement,
    pub s: MonoidElement,
}

pub fn localize<K: Ord + Clone>(
    base: MonoidPresentation<K>,
    inverted: Vec<MonoidElement>,
) -> LocalizedMonoid<K> {
    LocalizedMonoid { base, inverted }
}

impl<K: Ord + Clone> LocalizedMonoid<K> {
    pub fn fraction(&self, m: MonoidElement, s: MonoidElement) -> Fraction {
        Fraction { m, s }
    }

    /// `q(m) = (m, 0)`.
    pub fn q(&self, m: &MonoidElement) -> Fraction {
        Fraction {
            m: m.clone(),
            s: MonoidElement::zero(self.base.rank()),
        }
    }

    pub fn mul(&self, a: &Fraction, b: &Fraction) -> Fraction {
        Fraction {
            m: a.m.add(&b.m),
            s: a.s.add(&b.s),
        }
    }

    pub fn identity(&self) -> Fraction {
        self.q(&MonoidElement::zero(self.base.rank()))
    }

    /// `(m, s) = (m', s')` iff `m + s' + t = m' + s + t` for some `t` in the
    /// inverted submonoid; `t` ranges over sums of at most `bound` inverted
    /// elements and each comparison uses `eq_bounded` with the same bound.
    pub fn eq_bounded(&self, a: &Fraction, b: &Fraction, bound: u32) -> Decision {
        let lhs = a.m.add(&b.s);
        let rhs = b.m.add(&a.s);
        let mut all_no = true;
        let mut ts = vec![MonoidElement::zero(self.base.rank())];
        if !self.inverted.is_empty() {
            ts.extend(
                sums_up_to(&self.inverted, bound as usize)
                    .into_iter()
                    .map(|v| {
                        v.iter()
                            .fold(MonoidElement::zero(self.base.rank()), |acc, x| acc.add(x))
                    }),
            );
        }
        for t in ts {
            match self.base.eq_bounded(&lhs.add(&t), &rhs.add(&t), bound) {
                Decision::Yes => return Decision::Yes,
                Decision::No => {}
                Decision::Unknown => all_no = false,
            }
        }
        // Invariants are additive, so a separation at t = 0 separates every t.
        if all_no || self.base.invariant_of(&lhs) != self.base.invariant_of(&rhs) {
            Decision::No
        } else {
            Decision::Unknown
        }
    }
}

/// Presentation of `M(A)` from the conflations of `A`.
pub fn monoid_of_abelian<A: Ambient>(
    a: &A,
    sub: &AbelianSubcat<A::Key>,
    max_summands: usize,
) -> Result<MonoidPresentation<A::Key>> {
    let confl = conflations_in(a, &sub.indecomposables, max_summands)?;
    Ok(monoid_of(&sub.indecomposables, &confl))
}

/// Whether every generator equals the combination of simples given by its
/// class vector and the simples are independent.
pub fn is_free_on_simples<K: Ord + Clone>(
    m: &MonoidPresentation<K>,
    sub: &AbelianSubcat<K>,
    bound: u32,
) -> bool {
    for k in &m.generators {
        let mut combo = Vec::new();
        for (s, &c) in sub.simples.iter().zip(&sub.class_vectors[k]) {
            combo.extend(std::iter::repeat_n(s.clone(), c as usize));
        }
        if m.eq_bounded(
            &m.element(std::slice::from_ref(k)),
            &m.element(&combo),
            bound,
        ) != Decision::Yes
        {
            return false;
        }
    }
    let field = Field::new(INVARIANT_PRIME);
    let cols: Vec<Vec<u32>> = sub
        .simples
        .iter()
        .map(|s| m.invariant_of(&m.element(std::slice::from_ref(s))))
        .collect();
    let rows = cols.first().map_or(0, |c| c.len());
    crate::linalg::rank(&Matrix::from_columns(field, rows, &cols)) == sub.simples.len()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationReport<K> {
    pub bound: u32,
    pub generators_a: Vec<K>,
    pub generators_c: Vec<K>,
    pub relations_c: usize,
    pub free_on_simples: bool,
    /// `c ↦ [G(c)] - [F(c)]` respects every relation of `M(C)`
    pub inverse_respects_relations: bool,
    pub ball_size: usize,
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub unknowns: usize,
}

impl<K> LocalizationReport<K> {
    pub fn verified(&self) -> bool {
        self.free_on_simples
            && self.inverse_respects_relations
            && self.well_defined
            && self.injective
            && self.surjective
            && self.unknowns == 0
    }
}

fn class_diff(sub_len: usize, plus: &[u32], minus: &[u32]) -> Vec<i64> {
    (0..sub_len)
        .map(|i| plus[i] as i64 - minus[i] as i64)
        .collect()
}

/// Bounded verification that the map `M(A)_{M_F} -> M(ΣF∗A)` induced by
/// the inclusion is bijective.
///
/// The localization side is modelled as differences `m - s` of class
/// vectors, which is exact once `M(A)` is known to be free on the simples.
/// Elements of the ball are pairs of a multiset of simples and a multiset of
/// indecomposables of `F` with at most `bound` members in total.
pub fn localization_iso_check<A: Ambient>(
    a: &A,
    sub: &AbelianSubcat<A::Key>,
    fclass: &[A::Key],
    cset: &[A::Key],
    bound: u32,
) -> Result<LocalizationReport<A::Key>> {
    let k = sub.simples.len();
    let slack = 2;
    let ma = monoid_of_abelian(a, sub, 2)?;
    let free_on_simples = is_free_on_simples(&ma, sub, slack);

    let mut confl = conflations_in(a, cset, 2)?;
    let mut fg = BTreeMap::new();
    for c in cset {
        let d = fg_decompose(a, sub, &[a.canonical(c)]).expect("member of ΣA∗A");
        let fk = keys(a, &d.f_part);
        let gk = keys(a, &d.g_part);
        let mut sf: Vec<A::Key> = d.f_part.iter().map(|x| a.key(&a.shift_ind(x, 1))).collect();
        sf.sort();
        if !(sf.is_empty() || gk.is_empty()) {
            confl.push(Conflation {
                x: sf,
                y: vec![c.clone()],
                z: gk.clone(),
            });
        }
        fg.insert(c.clone(), (fk, gk));
    }
    let mc = monoid_of(cset, &confl);

    let psi = |e: &MonoidElement| -> Vec<i64> {
        let mut out = vec![0i64; k];
        for (i, &n) in e.vector.iter().enumerate() {
            let (f, g) = &fg[&mc.generators[i]];
            let d = class_diff(k, &sub.class_of(g), &sub.class_of(f));
            for (o, x) in out.iter_mut().zip(d) {
                *o += n as i64 * x;
            }
        }
        out
    };
    let inverse_respects_relations = mc.relations.iter().all(|(u, v)| {
        psi(&MonoidElement { vector: u.clone() }) == psi(&MonoidElement { vector: v.clone() })
    });

    let sigma = |x: &A::Key| a.key(&a.shift_ind(&a.canonical(x), 1));
    let mut unknowns = 0;

    // The ball of the localization, grouped by value.
    let mut gens: Vec<(bool, A::Key)> = sub.simples.iter().map(|s| (false, s.clone())).collect();
    gens.extend(fclass.iter().map(|f| (true, f.clone())));
    let mut ball: Vec<Vec<(bool, A::Key)>> = vec![Vec::new()];
    ball.extend(sums_up_to(&gens, bound as usize));
    let mut groups: BTreeMap<Vec<i64>, Vec<MonoidElement>> = BTreeMap::new();
    for elt in &ball {
        let mut value = vec![0i64; k];
        let mut image = Vec::new();
        for (inv, x) in elt {
            let cv = sub.class_of(std::slice::from_ref(x));
            for (o, c) in value.iter_mut().zip(cv) {
                *o += if *inv { -(c as i64) } else { c as i64 };
            }
            image.push(if *inv { sigma(x) } else { x.clone() });
        }
        groups.entry(value).or_default().push(mc.element(&image));
    }
    let pairs: Vec<(&MonoidElement, &MonoidElement)> = groups
        .values()
        .flat_map(|m| m[1..].iter().map(move |e| (&m[0], e)))
        .collect();
    let decisions: Vec<Decision> = pairs
        .par_iter()
        .map(|(x, y)| mc.eq_bounded(x, y, slack))
        .collect();
    let well_defined = decisions.iter().all(|d| *d == Decision::Yes);
    unknowns += decisions
        .iter()
        .filter(|d| **d == Decision::Unknown)
        .count();
    let reps: Vec<&MonoidElement> = groups.values().map(|m| &m[0]).collect();
    let mut injective = true;
    let mut invs = BTreeSet::new();
    for r in &reps {
        if !invs.insert(mc.invariant_of(r)) {
            injective = false;
        }
    }
    if !injective {
        for (i, x) in reps.iter().enumerate() {
            for y in &reps[i + 1..] {
                match mc.eq_bounded(x, y, slack) {
                    Decision::No => {}
                    Decision::Yes => injective = false,
                    Decision::Unknown => unknowns += 1,
                }
            }
        }
    }

    let ball_c: Vec<Vec<A::Key>> = std::iter::once(Vec::new())
        .chain(sums_up_to(cset, bound as usize))
        .collect();
    let decisions: Vec<Decision> = ball_c
        .par_iter()
        .map(|u| {
            let mut pre = Vec::new();
            for c in u {
                let (f, g) = &fg[c];
                pre.extend(g.iter().cloned());
                pre.extend(f.iter().map(sigma));
            }
            mc.eq_bounded(&mc.element(u), &mc.element(&pre), slack)
        })
        .collect();
    let surjective = decisions.iter().all(|d| *d == Decision::Yes);
    unknowns += decisions
        .iter()
        .filter(|d| **d == Decision::Unknown)
        .count();

    Ok(LocalizationReport {
        bound,
        generators_a: ma.generators.clone(),
        generators_c: mc.generators.clone(),
        relations_c: mc.relations.len(),
        free_on_simples,
        inverse_respects_relations,
        ball_size: ball.len(),
        well_defined,
        injective,
        surjective,
        unknowns,
    })
}
