//! The bounded derived category `D^b(kA_n)`, modelled on canonical
//! complexes.
//!
//! Every indecomposable is `Σ^s M` for an interval module `M`; its canonical
//! complex is `Σ^s` of the two-term projective resolution of `M`. Hom spaces
//! between indecomposables are at most one-dimensional, and each nonzero one
//! carries a fixed chain-level basis map `b(x, y)` (the identity when
//! `x = y`). Composition is then determined by scalars `c(x, y, z)` with
//! `b(y, z) ∘ b(x, y) = c · b(x, z)`, all computed once at chain level.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::ambient::{Ambient, CompTable, Mor, Triangle};
use crate::complex::{mapping_cone, ChainMap, HomSpace, ProjComplex};
use crate::linalg::{solve, Field, Matrix};
use crate::typea::{ext1_dim, hom_dim as mod_hom_dim, tau, tau_inv, Interval};

/// `Σ^shift M[module]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DInd {
    pub shift: i32,
    pub module: Interval,
}

impl DInd {
    pub fn new(shift: i32, module: Interval) -> Self {
        DInd { shift, module }
    }

    pub fn module(module: Interval) -> Self {
        DInd { shift: 0, module }
    }

    pub fn shifted(self, k: i32) -> Self {
        DInd {
            shift: self.shift + k,
            module: self.module,
        }
    }
}

impl fmt::Display for DInd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.shift {
            0 => write!(f, "{}", self.module),
            1 => write!(f, "Σ{}", self.module),
            s => write!(f, "Σ^{}{}", s, self.module),
        }
    }
}

type HomKey = (Interval, i32, Interval);

struct Caches {
    spaces: HashMap<HomKey, Arc<HomSpace>>,
    basis: HashMap<HomKey, ChainMap>,
    comp: HashMap<(Interval, i32, Interval, i32, Interval), u32>,
}

pub struct DerivedCat {
    field: Field,
    n: usize,
    /// Shift window `[lo, hi]` used when enumerating indecomposables.
    window: (i32, i32),
    caches: Mutex<Caches>,
}

/// Explicit isomorphism between a complex and the canonical complex of its
/// decomposition: `u : can(labels) -> C` and `inv : C -> can(labels)`.
pub struct CanonicalIso {
    pub labels: Vec<DInd>,
    pub u: ChainMap,
    pub inv: ChainMap,
}

impl DerivedCat {
    pub fn new(field: Field, n: usize) -> Self {
        assert!(n >= 1);
        DerivedCat {
            field,
            n,
            window: (-2, 2),
            caches: Mutex::new(Caches {
                spaces: HashMap::new(),
                basis: HashMap::new(),
                comp: HashMap::new(),
            }),
        }
    }

    pub fn with_window(mut self, lo: i32, hi: i32) -> Self {
        self.window = (lo, hi);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field_(&self) -> Field {
        self.field
    }

    pub fn window(&self) -> (i32, i32) {
        self.window
    }

    pub fn dim(&self, x: DInd, y: DInd) -> usize {
        match y.shift - x.shift {
            0 => mod_hom_dim(x.module, y.module),
            1 => ext1_dim(x.module, y.module),
            _ => 0,
        }
    }

    pub fn can(&self, x: DInd) -> ProjComplex {
        ProjComplex::resolution(self.field, self.n, x.module).shift(x.shift)
    }

    pub fn can_obj(&self, obj: &[DInd]) -> ProjComplex {
        let parts: Vec<ProjComplex> = obj.iter().map(|&x| self.can(x)).collect();
        ProjComplex::direct_sum(&parts, self.field, self.n)
    }

    /// Positions of each summand's terms inside `can_obj(obj)`, per degree.
    pub fn positions(&self, obj: &[DInd]) -> Vec<BTreeMap<i32, Vec<usize>>> {
        let mut offset: BTreeMap<i32, usize> = BTreeMap::new();
        obj.iter()
            .map(|&x| {
                let c = self.can(x);
                c.degrees()
                    .map(|d| {
                        let o = offset.entry(d).or_insert(0);
                        let len = c.term(d).len();
                        let pos = (*o..*o + len).collect();
                        *o += len;
                        (d, pos)
                    })
                    .collect()
            })
            .collect()
    }

    fn key(x: DInd, y: DInd) -> HomKey {
        (x.module, y.shift - x.shift, y.module)
    }

    fn space(&self, k: HomKey) -> Arc<HomSpace> {
        if let Some(s) = self.caches.lock().unwrap().spaces.get(&k) {
            return s.clone();
        }
        let src = ProjComplex::resolution(self.field, self.n, k.0);
        let tgt = ProjComplex::resolution(self.field, self.n, k.2).shift(k.1);
        let s = Arc::new(HomSpace::new(&src, &tgt));
        self.caches.lock().unwrap().spaces.insert(k, s.clone());
        s
    }

    fn basis_unshifted(&self, k: HomKey) -> ChainMap {
        if let Some(b) = self.caches.lock().unwrap().basis.get(&k) {
            return b.clone();
        }
        let b = if k.1 == 0 && k.0 == k.2 {
            ChainMap::identity(&ProjComplex::resolution(self.field, self.n, k.0))
        } else {
            let s = self.space(k);
            assert_eq!(s.dim(), 1, "basis map requested for a zero Hom space");
            s.basis_map(0)
        };
        self.caches.lock().unwrap().basis.insert(k, b.clone());
        b
    }

    /// The chain-level basis map `can(x) -> can(y)`.
    pub fn basis_map(&self, x: DInd, y: DInd) -> ChainMap {
        self.basis_unshifted(Self::key(x, y)).shift(x.shift)
    }

    /// Coefficient of a chain map `can(x) -> can(y)` on `b(x, y)`.
    pub fn coefficient(&self, x: DInd, y: DInd, f: &ChainMap) -> u32 {
        if self.dim(x, y) == 0 {
            return 0;
        }
        let k = Self::key(x, y);
        let s = self.space(k);
        let g = f.shift(-x.shift);
        let b = self.basis_unshifted(k);
        let (cf, cb) = (s.coords(&g)[0], s.coords(&b)[0]);
        self.field.mul(cf, self.field.inv(cb))
    }

    /// `c(x, y, z)` with `b(y,z) ∘ b(x,y) = c · b(x,z)`.
    pub fn structure_constant(&self, x: DInd, y: DInd, z: DInd) -> u32 {
        if self.dim(x, y) == 0 || self.dim(y, z) == 0 || self.dim(x, z) == 0 {
            return 0;
        }
        let key = (
            x.module,
            y.shift - x.shift,
            y.module,
            z.shift - y.shift,
            z.module,
        );
        if let Some(&c) = self.caches.lock().unwrap().comp.get(&key) {
            return c;
        }
        let comp = self.basis_map(y, z).after(&self.basis_map(x, y));
        let c = self.coefficient(x, z, &comp);
        self.caches.lock().unwrap().comp.insert(key, c);
        c
    }

    /// Chain map between canonical complexes realising a scalar morphism.
    pub fn realize(&self, m: &Mor<DInd>) -> ChainMap {
        let sp = self.positions(&m.src);
        let tp = self.positions(&m.tgt);
        let (sc, tc) = (self.can_obj(&m.src), self.can_obj(&m.tgt));
        let mut comps: BTreeMap<i32, Matrix> = BTreeMap::new();
        for (j, &y) in m.tgt.iter().enumerate() {
            for (i, &x) in m.src.iter().enumerate() {
                let c = m.blocks[j][i].first().copied().unwrap_or(0);
                if c == 0 {
                    continue;
                }
                let b = self.basis_map(x, y);
                for d in sc.degrees() {
                    let blk = b.at(d, &self.can(x), &self.can(y));
                    if blk.is_zero() {
                        continue;
                    }
                    let mat = comps.entry(d).or_insert_with(|| {
                        Matrix::zeros(self.field, tc.term(d).len(), sc.term(d).len())
                    });
                    for (ri, &r) in tp[j][&d].iter().enumerate() {
                        for (ci, &cc) in sp[i][&d].iter().enumerate() {
                            let v = self.field.mul(c, blk.get(ri, ci));
                            mat.add_at(r, cc, v);
                        }
                    }
                }
            }
        }
        ChainMap::from_components(comps)
    }

    /// Scalar morphism of a chain map between canonical complexes.
    pub fn extract(&self, src: &[DInd], tgt: &[DInd], f: &ChainMap) -> Mor<DInd> {
        let sp = self.positions(src);
        let tp = self.positions(tgt);
        let mut m = Mor::zero(self, src, tgt);
        for (j, &y) in tgt.iter().enumerate() {
            for (i, &x) in src.iter().enumerate() {
                if self.dim(x, y) == 0 {
                    continue;
                }
                let r = f.restrict(&sp[i], &tp[j], self.field);
                m.blocks[j][i] = vec![self.coefficient(x, y, &r)];
            }
        }
        m
    }

    /// Decomposes `c` and builds mutually inverse isomorphisms (up to
    /// homotopy) with the canonical complex of the decomposition.
    pub fn canonical_iso(&self, c: &ProjComplex) -> CanonicalIso {
        let f = self.field;
        let labels: Vec<DInd> = c
            .cohomology_summands()
            .into_iter()
            .map(|(s, m)| DInd::new(s, m))
            .collect();
        let mut xs: Vec<ChainMap> = Vec::with_capacity(labels.len());
        let mut ys: Vec<ChainMap> = Vec::with_capacity(labels.len());
        let mut i = 0;
        while i < labels.len() {
            let t = labels[i];
            let mult = labels[i..].iter().take_while(|&&l| l == t).count();
            let ct = self.can(t);
            let hx = HomSpace::new(&ct, c);
            let hy = HomSpace::new(c, &ct);
            let he = HomSpace::new(&ct, &ct);
            let id_coord = he.coords(&ChainMap::identity(&ct))[0];
            let scale = f.inv(id_coord);
            let mut pairing = Matrix::zeros(f, hy.dim(), hx.dim());
            for a in 0..hy.dim() {
                for b in 0..hx.dim() {
                    let comp = hy.basis_map(a).after(&hx.basis_map(b));
                    pairing.set(a, b, f.mul(he.coords(&comp)[0], scale));
                }
            }
            let mut red = pairing.clone();
            let pivots = red.rref();
            assert_eq!(
                pivots.len(),
                mult,
                "pairing rank differs from multiplicity of {t}"
            );
            // M = pairing restricted to pivot columns; B with B·M = I.
            let mt = Matrix::from_columns(
                f,
                mult,
                &(0..hy.dim())
                    .map(|a| pivots.iter().map(|&p| pairing.get(a, p)).collect())
                    .collect::<Vec<_>>(),
            );
            for (q, &p) in pivots.iter().enumerate() {
                xs.push(hx.basis_map(p));
                let mut e = vec![0; mult];
                e[q] = 1;
                let brow = solve(&mt, &e).expect("pairing has full rank");
                ys.push(hy.combine(&brow));
            }
            i += mult;
        }
        let can_l = self.can_obj(&labels);
        let pos = self.positions(&labels);
        let mut ucomps: BTreeMap<i32, Matrix> = BTreeMap::new();
        let mut vcomps: BTreeMap<i32, Matrix> = BTreeMap::new();
        for (p, &t) in labels.iter().enumerate() {
            let ct = self.can(t);
            for d in ct.degrees() {
                let ub = xs[p].at(d, &ct, c);
                let vb = ys[p].at(d, c, &ct);
                let um = ucomps
                    .entry(d)
                    .or_insert_with(|| Matrix::zeros(f, c.term(d).len(), can_l.term(d).len()));
                for r in 0..ub.rows() {
                    for (ci, &cc) in pos[p][&d].iter().enumerate() {
                        um.set(r, cc, ub.get(r, ci));
                    }
                }
                let vm = vcomps
                    .entry(d)
                    .or_insert_with(|| Matrix::zeros(f, can_l.term(d).len(), c.term(d).len()));
                for (ri, &rr) in pos[p][&d].iter().enumerate() {
                    for cc in 0..vb.cols() {
                        vm.set(rr, cc, vb.get(ri, cc));
                    }
                }
            }
        }
        let u = ChainMap::from_components(ucomps);
        let v = ChainMap::from_components(vcomps);
        // v∘u = 1 + N with N nilpotent modulo homotopy.
        let e = v.after(&u);
        let id = ChainMap::identity(&can_l);
        let minus_n = id.add(&e.scale(f.neg(1)));
        let mut inv_e = id.clone();
        let mut power = id;
        for _ in 0..=labels.len() {
            power = power.after(&minus_n);
            inv_e = inv_e.add(&power);
        }
        let inv = inv_e.after(&v);
        CanonicalIso { labels, u, inv }
    }

    /// Triangle `x -> y -> z -> Σx` on a scalar morphism, with `z` canonical.
    pub fn cone_triangle(&self, f: &Mor<DInd>) -> Triangle<DInd> {
        let fc = self.realize(f);
        let (sc, tc) = (self.can_obj(&f.src), self.can_obj(&f.tgt));
        let mc = mapping_cone(&fc, &sc, &tc);
        let iso = self.canonical_iso(&mc.cone);
        let sx: Vec<DInd> = f.src.iter().map(|x| x.shifted(1)).collect();
        let g = self.extract(&f.tgt, &iso.labels, &iso.inv.after(&mc.incl));
        let h = self.extract(&iso.labels, &sx, &mc.proj.after(&iso.u));
        Triangle {
            x: f.src.clone(),
            y: f.tgt.clone(),
            z: iso.labels,
            f: f.clone(),
            g,
            h,
        }
    }

    /// `τ` on indecomposables of `D^b`.
    pub fn tau(&self, x: DInd) -> DInd {
        match tau(x.module, self.n) {
            Some(m) => DInd::new(x.shift, m),
            None => DInd::new(x.shift - 1, Interval::injective(x.module.lo)),
        }
    }

    pub fn tau_inv(&self, x: DInd) -> DInd {
        match tau_inv(x.module, self.n) {
            Some(m) => DInd::new(x.shift, m),
            None => DInd::new(x.shift + 1, Interval::projective(x.module.hi, self.n)),
        }
    }

    /// Serre functor `ν = Στ` on indecomposables.
    pub fn serre(&self, x: DInd) -> DInd {
        self.tau(x).shifted(1)
    }

    pub fn indecomposables_in(&self, lo: i32, hi: i32) -> Vec<DInd> {
        (lo..=hi)
            .flat_map(|s| {
                Interval::all(self.n)
                    .into_iter()
                    .map(move |m| DInd::new(s, m))
            })
            .collect()
    }
}

impl Ambient for DerivedCat {
    type Ind = DInd;
    type Key = DInd;

    fn field(&self) -> Field {
        self.field
    }

    fn key(&self, x: &DInd) -> DInd {
        *x
    }

    fn canonical(&self, k: &DInd) -> DInd {
        *k
    }

    fn hom_len(&self, x: &DInd, y: &DInd) -> usize {
        self.dim(*x, *y)
    }

    fn comp_table(&self, x: &DInd, y: &DInd, z: &DInd) -> Arc<CompTable> {
        Arc::new(vec![vec![vec![self.structure_constant(*x, *y, *z)]]])
    }

    fn identity_coords(&self, _x: &DInd) -> Vec<u32> {
        vec![1]
    }

    fn shift_ind(&self, x: &DInd, k: i32) -> DInd {
        x.shifted(k)
    }

    fn cone_object(&self, f: &Mor<DInd>) -> Vec<DInd> {
        let fc = self.realize(f);
        let mc = mapping_cone(&fc, &self.can_obj(&f.src), &self.can_obj(&f.tgt));
        mc.cone
            .cohomology_summands()
            .into_iter()
            .map(|(s, m)| DInd::new(s, m))
            .collect()
    }

    fn triangle(&self, f: &Mor<DInd>) -> Option<Triangle<DInd>> {
        Some(self.cone_triangle(f))
    }

    fn probe_set(&self) -> Vec<DInd> {
        self.indecomposables_in(self.window.0, self.window.1)
    }

    fn name(&self, x: &DInd) -> String {
        let m = x.module.name(self.n);
        match x.shift {
            0 => m,
            1 => format!("Σ{m}"),
            s => format!("Σ^{s}{m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::compose;

    #[test]
    fn identity_is_basis() {
        let d = DerivedCat::new(Field::new(3), 3);
        for x in d.indecomposables_in(-1, 1) {
            assert_eq!(d.structure_constant(x, x, x), 1);
        }
    }

    #[test]
    fn cone_p3_to_p2() {
        let d = DerivedCat::new(Field::new(2), 3);
        let (p3, p2) = (
            DInd::module(Interval::projective(3, 3)),
            DInd::module(Interval::projective(2, 3)),
        );
        let f = Mor::single(p3, p2, vec![1]);
        let t = d.cone_triangle(&f);
        assert_eq!(t.z, vec![DInd::module(Interval::simple(2))]);
        assert!(compose(&d, &t.g, &t.f).is_zero());
        assert!(compose(&d, &t.h, &t.g).is_zero());
        assert!(!t.g.is_zero() && !t.h.is_zero());
    }

    #[test]
    fn serre_duality_dims() {
        let d = DerivedCat::new(Field::new(2), 4);
        let all = d.indecomposables_in(-1, 1);
        for &x in &all {
            for y in d.indecomposables_in(-3, 3) {
                assert_eq!(d.dim(x, y), d.dim(y, d.serre(x)));
            }
        }
    }
}
