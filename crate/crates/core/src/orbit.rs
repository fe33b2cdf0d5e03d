//! Negative cluster categories `C_{-w}(A_n) = D^b(kA_n) / F` with
//! `F = Σ^{w+1} τ`, and their model by admissible diagonals of an `N`-gon,
//! `N = (w+1)(n+1) - 2`.
//!
//! Objects are carried as lists of lifts to `D^b`. A morphism `x -> y` of
//! degree `k` is a morphism `x -> F^k y` of `D^b`; the Hom basis of a pair of
//! indecomposables is indexed by the degrees `k` with nonzero component.
//! Applying `F` to a basis map of `D^b` gives a scalar multiple of the basis
//! map between the images; these scalars are computed at chain level once and
//! drive composition.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::ambient::{compose, Ambient, CompTable, Mor, Triangle};
use crate::complex::ChainMap;
use crate::derived::{DInd, DerivedCat};
use crate::error::{NegcatError, Result};
use crate::linalg::Field;
use crate::typea::Interval;

/// Unordered pair of polygon vertices, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    pub a: usize,
    pub b: usize,
}

impl Diagonal {
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "degenerate diagonal");
        Diagonal {
            a: a.min(b),
            b: a.max(b),
        }
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.a, self.b]
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CategoryContext {
    pub w: usize,
    pub n: usize,
    pub big_n: usize,
    pub field: Field,
}

impl CategoryContext {
    pub fn new(w: usize, n: usize, field: Field) -> Result<Self> {
        if w < 1 || n < 1 {
            return Err(NegcatError::InvalidParameters(format!(
                "need w >= 1 and n >= 1, got w={w}, n={n}"
            )));
        }
        Ok(CategoryContext {
            w,
            n,
            big_n: (w + 1) * (n + 1) - 2,
            field,
        })
    }

    pub fn is_admissible(&self, a: usize, b: usize) -> bool {
        let nn = self.big_n;
        if a == b || a >= nn || b >= nn {
            return false;
        }
        let (a, b) = (a.min(b), a.max(b));
        let edge = b - a == 1 || (a == 0 && b == nn - 1);
        !edge && (b - a + 1) % (self.w + 1) == 0
    }

    pub fn diagonal(&self, a: usize, b: usize) -> Result<Diagonal> {
        if self.is_admissible(a, b) {
            Ok(Diagonal::new(a, b))
        } else {
            Err(NegcatError::NotAdmissible(a, b))
        }
    }

    pub fn all_indecomposables(&self) -> Vec<Diagonal> {
        let nn = self.big_n;
        let mut out = Vec::new();
        for a in 0..nn {
            for b in a + 1..nn {
                if self.is_admissible(a, b) {
                    out.push(Diagonal::new(a, b));
                }
            }
        }
        out
    }

    /// Rotation of the polygon by `k` steps.
    pub fn rotate(&self, d: Diagonal, k: i64) -> Diagonal {
        let nn = self.big_n as i64;
        let r = |v: usize| (v as i64 + k).rem_euclid(nn) as usize;
        Diagonal::new(r(d.a), r(d.b))
    }
}

/// Strict interleaving of endpoints around the polygon.
pub fn crossing(d1: Diagonal, d2: Diagonal) -> bool {
    let inside = |v: usize| d1.a < v && v < d1.b;
    let shared = share_endpoint(d1, d2);
    !shared && (inside(d2.a) != inside(d2.b))
}

pub fn share_endpoint(d1: Diagonal, d2: Diagonal) -> bool {
    d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b
}

type ScalarKey = (Interval, i32, Interval);

struct OrbitCaches {
    /// isomorphisms `can(F M) <-> F_raw(can M)` for modules `M`
    fiso: HashMap<Interval, (ChainMap, ChainMap)>,
    lambda: HashMap<ScalarKey, u32>,
    ks: HashMap<ScalarKey, Arc<Vec<i32>>>,
    tables: HashMap<(Interval, i32, Interval, i32, Interval), Arc<CompTable>>,
}

pub struct OrbitCat {
    ctx: CategoryContext,
    derived: DerivedCat,
    lifts: BTreeMap<Diagonal, DInd>,
    caches: Mutex<OrbitCaches>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArQuiver {
    pub vertices: Vec<Diagonal>,
    /// irreducible maps `source -> target`
    pub arrows: Vec<(Diagonal, Diagonal)>,
    /// `τ` on vertices
    pub tau: BTreeMap<Diagonal, Diagonal>,
    /// each row is a `τ^{-1}`-orbit, listed along `τ^{-1}`
    pub rows: Vec<Vec<Diagonal>>,
}

impl OrbitCat {
    pub fn new(w: usize, n: usize, field: Field) -> Result<Self> {
        let ctx = CategoryContext::new(w, n, field)?;
        let derived = DerivedCat::new(field, n);
        let mut cat = OrbitCat {
            ctx,
            derived,
            lifts: BTreeMap::new(),
            caches: Mutex::new(OrbitCaches {
                fiso: HashMap::new(),
                lambda: HashMap::new(),
                ks: HashMap::new(),
                tables: HashMap::new(),
            }),
        };
        let total = ctx.all_indecomposables().len();
        let mut s = 0;
        while cat.lifts.len() < total {
            for m in Interval::all(n) {
                let x = DInd::new(s, m);
                cat.lifts.entry(cat.project(x)).or_insert(x);
            }
            s += 1;
            assert!(
                s as usize <= 4 * ctx.big_n + 8,
                "diagonal labelling is not surjective"
            );
        }
        assert_eq!(cat.lifts.len(), total);
        Ok(cat)
    }

    pub fn ctx(&self) -> &CategoryContext {
        &self.ctx
    }

    pub fn derived(&self) -> &DerivedCat {
        &self.derived
    }

    /// Diagonal label of the `F`-orbit of `Σ^s[a,b]`.
    pub fn project(&self, x: DInd) -> Diagonal {
        let (w, n, nn) = (self.ctx.w as i64, self.ctx.n as i64, self.ctx.big_n as i64);
        let (a, b, s) = (x.module.lo as i64, x.module.hi as i64, x.shift as i64);
        let p = ((w + 1) * (n - b) + s).rem_euclid(nn) as usize;
        let q = (w + (w + 1) * (n - a) + s).rem_euclid(nn) as usize;
        Diagonal::new(p, q)
    }

    /// The lift with the least nonnegative shift.
    pub fn lift(&self, d: Diagonal) -> Result<DInd> {
        self.lifts
            .get(&d)
            .copied()
            .ok_or(NegcatError::NotAdmissible(d.a, d.b))
    }

    pub fn lift_obj(&self, ds: &[Diagonal]) -> Result<Vec<DInd>> {
        ds.iter().map(|&d| self.lift(d)).collect()
    }

    pub fn f(&self, x: DInd) -> DInd {
        self.derived.tau(x).shifted(self.ctx.w as i32 + 1)
    }

    pub fn f_inv(&self, x: DInd) -> DInd {
        self.derived.tau_inv(x.shifted(-(self.ctx.w as i32) - 1))
    }

    pub fn f_pow(&self, mut x: DInd, k: i32) -> DInd {
        if k >= 0 {
            for _ in 0..k {
                x = self.f(x);
            }
        } else {
            for _ in 0..-k {
                x = self.f_inv(x);
            }
        }
        x
    }

    /// `(m, c)` with `x = F^m c` and `c` the preferred lift.
    pub fn normalize(&self, x: DInd) -> (i32, DInd) {
        let c = self.lifts[&self.project(x)];
        let step = self.ctx.w as i32 + 1;
        // F moves shifts by w or w+1, so the degree is pinned down to a
        // small range around the shift difference.
        let guess = (x.shift - c.shift) / step;
        for r in 0..=(self.ctx.n as i32 + 4) {
            for m in [guess - r, guess + r] {
                if self.f_pow(c, m) == x {
                    return (m, c);
                }
            }
        }
        panic!("failed to normalise {x}");
    }

    fn fiso(&self, m: Interval) -> (ChainMap, ChainMap) {
        if let Some(v) = self.caches.lock().unwrap().fiso.get(&m) {
            return v.clone();
        }
        let w = self.ctx.w as i32;
        let c = self.derived.can(DInd::module(m)).serre().shift(w);
        let iso = self.derived.canonical_iso(&c);
        assert_eq!(iso.labels, vec![self.f(DInd::module(m))], "F on {m}");
        let v = (iso.u, iso.inv);
        self.caches.lock().unwrap().fiso.insert(m, v.clone());
        v
    }

    /// `λ(x, y)` with `F(b(x,y)) = λ · b(Fx, Fy)`.
    pub fn lambda(&self, x: DInd, y: DInd) -> u32 {
        if self.derived.dim(x, y) == 0 {
            return 0;
        }
        let key = (x.module, y.shift - x.shift, y.module);
        if let Some(&v) = self.caches.lock().unwrap().lambda.get(&key) {
            return v;
        }
        let d = &self.derived;
        let w = self.ctx.w as i32;
        let (x0, y0) = (DInd::module(x.module), DInd::new(key.1, y.module));
        let b = d.basis_map(x0, y0);
        let fb = b.serre(&d.can(x0), &d.can(y0)).shift(w);
        let (ux, _) = self.fiso(x.module);
        let (_, iy) = self.fiso(y.module);
        let chain = iy.shift(y0.shift).after(&fb).after(&ux);
        let v = d.coefficient(self.f(x0), self.f(y0), &chain);
        assert_ne!(v, 0, "F is faithful on nonzero basis maps");
        self.caches.lock().unwrap().lambda.insert(key, v);
        v
    }

    /// Scalar of `F^k` on `b(x, y)`.
    pub fn big_lambda(&self, k: i32, x: DInd, y: DInd) -> u32 {
        let fld = self.ctx.field;
        let mut acc = 1;
        if k >= 0 {
            let (mut a, mut b) = (x, y);
            for _ in 0..k {
                acc = fld.mul(acc, self.lambda(a, b));
                a = self.f(a);
                b = self.f(b);
            }
        } else {
            let (mut a, mut b) = (x, y);
            for _ in 0..-k {
                a = self.f_inv(a);
                b = self.f_inv(b);
                acc = fld.mul(acc, fld.inv(self.lambda(a, b)));
            }
        }
        acc
    }

    /// Degrees `k` with `Hom_D(x, F^k y) != 0`, ascending.
    pub fn hom_degrees(&self, x: DInd, y: DInd) -> Arc<Vec<i32>> {
        let key = (x.module, y.shift - x.shift, y.module);
        if let Some(v) = self.caches.lock().unwrap().ks.get(&key) {
            return v.clone();
        }
        let (x0, y0) = (DInd::module(x.module), DInd::new(key.1, y.module));
        let dim_at = |k: i32| self.derived.dim(x0, self.f_pow(y0, k));
        let step = self.ctx.w as i32 + 1;
        let r0 = (key.1.abs() + self.ctx.n as i32 + step - 1) / step + 1;
        let (mut lo, mut hi) = (-r0, r0);
        let cap = 8 * (r0 + self.ctx.n as i32 + 2);
        while dim_at(lo) != 0 || dim_at(lo + 1) != 0 {
            lo -= 1;
            assert!(lo > -cap, "Hom window exhausted without vanishing");
        }
        while dim_at(hi) != 0 || dim_at(hi - 1) != 0 {
            hi += 1;
            assert!(hi < cap, "Hom window exhausted without vanishing");
        }
        let v: Vec<i32> = (lo..=hi).filter(|&k| dim_at(k) != 0).collect();
        let v = Arc::new(v);
        self.caches.lock().unwrap().ks.insert(key, v.clone());
        v
    }

    /// Orbit Hom dimension between objects given by diagonals.
    pub fn hom_dim_c(&self, x: &[Diagonal], y: &[Diagonal]) -> usize {
        let (x, y) = (self.lift_obj(x).unwrap(), self.lift_obj(y).unwrap());
        crate::ambient::hom_dim(self, &x, &y)
    }

    pub fn shift_diag(&self, d: Diagonal, k: i32) -> Diagonal {
        self.project(self.lifts[&d].shifted(k))
    }

    pub fn diagonals(&self, obj: &[DInd]) -> Vec<Diagonal> {
        let mut v: Vec<Diagonal> = obj.iter().map(|&x| self.project(x)).collect();
        v.sort();
        v
    }

    /// The degree-`k` isomorphism `x -> F^{-k} x` for `k = -m`, i.e. the
    /// identity of `D` seen between two lifts of the same orbit.
    pub fn relabel_iso(&self, from: DInd, to: DInd) -> Mor<DInd> {
        let (mf, cf) = self.normalize(from);
        let (mt, ct) = (self.normalize(to).0, self.normalize(to).1);
        assert_eq!(cf, ct, "relabelling between different orbits");
        // from = F^mf c, to = F^mt c, so from = F^{mf - mt} to.
        let k = mf - mt;
        let ks = self.hom_degrees(from, to);
        let idx = ks
            .iter()
            .position(|&j| j == k)
            .expect("identity degree present");
        let mut v = vec![0; ks.len()];
        v[idx] = 1;
        Mor::single(from, to, v)
    }

    /// Object-level isomorphism between two lift lists of the same object,
    /// matching summands in order.
    pub fn relabel_obj(&self, from: &[DInd], to: &[DInd]) -> Mor<DInd> {
        let parts: Vec<Mor<DInd>> = from
            .iter()
            .zip(to)
            .map(|(&a, &b)| self.relabel_iso(a, b))
            .collect();
        Mor::diag(self, &parts)
    }

    /// If every nonzero block of `f` sits in a single degree, finds lifts
    /// making `f` a degree-0 map and returns those lifts with the D-morphism.
    pub fn relift(&self, f: &Mor<DInd>) -> Option<(Vec<DInd>, Vec<DInd>, Mor<DInd>)> {
        let (ns, nt) = (f.src.len(), f.tgt.len());
        let mut deg: Vec<Vec<Option<i32>>> = vec![vec![None; ns]; nt];
        for j in 0..nt {
            for i in 0..ns {
                let ks = self.hom_degrees(f.src[i], f.tgt[j]);
                let nz: Vec<i32> = f.blocks[j][i]
                    .iter()
                    .zip(ks.iter())
                    .filter(|(&c, _)| c != 0)
                    .map(|(_, &k)| k)
                    .collect();
                match nz.len() {
                    0 => {}
                    1 => deg[j][i] = Some(nz[0]),
                    _ => return None,
                }
            }
        }
        // potentials: k_{ji} = beta_j - alpha_i
        let mut alpha: Vec<Option<i32>> = vec![None; ns];
        let mut beta: Vec<Option<i32>> = vec![None; nt];
        for start in 0..ns + nt {
            let seen = if start < ns {
                alpha[start].is_some()
            } else {
                beta[start - ns].is_some()
            };
            if seen {
                continue;
            }
            if start < ns {
                alpha[start] = Some(0);
            } else {
                beta[start - ns] = Some(0);
            }
            let mut q = VecDeque::from([start]);
            while let Some(v) = q.pop_front() {
                if v < ns {
                    let a = alpha[v].unwrap();
                    for j in 0..nt {
                        if let Some(k) = deg[j][v] {
                            match beta[j] {
                                None => {
                                    beta[j] = Some(a + k);
                                    q.push_back(ns + j);
                                }
                                Some(b) if b != a + k => return None,
                                _ => {}
                            }
                        }
                    }
                } else {
                    let j = v - ns;
                    let b = beta[j].unwrap();
                    for i in 0..ns {
                        if let Some(k) = deg[j][i] {
                            match alpha[i] {
                                None => {
                                    alpha[i] = Some(b - k);
                                    q.push_back(i);
                                }
                                Some(a) if a != b - k => return None,
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
        let xs: Vec<DInd> = (0..ns)
            .map(|i| self.f_pow(f.src[i], alpha[i].unwrap()))
            .collect();
        let ys: Vec<DInd> = (0..nt)
            .map(|j| self.f_pow(f.tgt[j], beta[j].unwrap()))
            .collect();
        // Transport f along the relabelling isomorphisms.
        let to_new_y = self.relabel_obj(&f.tgt, &ys);
        let from_new_x = self.relabel_obj(&xs, &f.src);
        let g = compose(self, &to_new_y, &compose(self, f, &from_new_x));
        let mut dmor = Mor::zero(&self.derived, &xs, &ys);
        for j in 0..nt {
            for i in 0..ns {
                let ks = self.hom_degrees(xs[i], ys[j]);
                for (c, &k) in g.blocks[j][i].iter().zip(ks.iter()) {
                    if *c == 0 {
                        continue;
                    }
                    assert_eq!(k, 0, "relifted map has a nonzero component off degree 0");
                    dmor.blocks[j][i] = vec![*c];
                }
            }
        }
        Some((xs, ys, dmor))
    }

    /// Image in the orbit category of a morphism of `D^b`.
    pub fn from_derived(&self, m: &Mor<DInd>) -> Mor<DInd> {
        let mut out = Mor::zero(self, &m.src, &m.tgt);
        for (j, &y) in m.tgt.iter().enumerate() {
            for (i, &x) in m.src.iter().enumerate() {
                let c = m.blocks[j][i].first().copied().unwrap_or(0);
                if c == 0 {
                    continue;
                }
                let ks = self.hom_degrees(x, y);
                let idx = ks.iter().position(|&k| k == 0).unwrap();
                out.blocks[j][i][idx] = c;
            }
        }
        out
    }

    /// Cone of an orbit morphism by the windowed equivariant method with a
    /// given radius; returns the diagonals of one period.
    pub fn cone_windowed(&self, f: &Mor<DInd>, radius: i32) -> Vec<Diagonal> {
        let fld = self.ctx.field;
        let offsets: Vec<i32> = f
            .src
            .iter()
            .chain(f.tgt.iter())
            .map(|&x| self.normalize(x).0)
            .collect();
        let center = if offsets.is_empty() {
            0
        } else {
            -(offsets.iter().sum::<i32>() / offsets.len() as i32)
        };
        let copies: Vec<i32> = (center - radius..=center + radius).collect();
        let src: Vec<DInd> = copies
            .iter()
            .flat_map(|&m| f.src.iter().map(move |&x| (m, x)))
            .map(|(m, x)| self.f_pow(x, m))
            .collect();
        let tgt: Vec<DInd> = copies
            .iter()
            .flat_map(|&m| f.tgt.iter().map(move |&y| (m, y)))
            .map(|(m, y)| self.f_pow(y, m))
            .collect();
        let d = &self.derived;
        let mut big = Mor::zero(d, &src, &tgt);
        let (ns, nt) = (f.src.len(), f.tgt.len());
        for (ci, &m) in copies.iter().enumerate() {
            for i in 0..ns {
                for j in 0..nt {
                    let ks = self.hom_degrees(f.src[i], f.tgt[j]);
                    for (c, &k) in f.blocks[j][i].iter().zip(ks.iter()) {
                        if *c == 0 {
                            continue;
                        }
                        let Some(cj) = copies.iter().position(|&mm| mm == m + k) else {
                            continue;
                        };
                        let x = f.src[i];
                        let yk = self.f_pow(f.tgt[j], k);
                        let s = fld.mul(*c, self.big_lambda(m, x, yk));
                        let (row, col) = (cj * nt + j, ci * ns + i);
                        debug_assert_eq!(tgt[row], self.f_pow(yk, m));
                        let e = &mut big.blocks[row][col];
                        e[0] = fld.add(e[0], s);
                    }
                }
            }
        }
        let cone = d.cone_object(&big);
        let mut out: Vec<Diagonal> = cone
            .into_iter()
            .filter(|&z| self.normalize(z).0 == 0)
            .map(|z| self.project(z))
            .collect();
        out.sort();
        out
    }

    /// Windowed cone with the stability check between radius `r` and `r+1`.
    pub fn cone_c(&self, f: &Mor<DInd>) -> Vec<Diagonal> {
        let spread = {
            let offs: Vec<i32> = f
                .src
                .iter()
                .chain(f.tgt.iter())
                .map(|&x| self.normalize(x).0)
                .collect();
            let kmax = f
                .src
                .iter()
                .flat_map(|&x| f.tgt.iter().map(move |&y| (x, y)))
                .flat_map(|(x, y)| self.hom_degrees(x, y).iter().copied().collect::<Vec<_>>())
                .map(|k| k.abs())
                .max()
                .unwrap_or(0);
            let (mn, mx) = (
                offs.iter().copied().min().unwrap_or(0),
                offs.iter().copied().max().unwrap_or(0),
            );
            (mx - mn) + kmax
        };
        let mut prev = self.cone_windowed(f, spread + 2);
        for r in (spread + 2..).take(6) {
            let next = self.cone_windowed(f, r + 1);
            if next == prev {
                return next;
            }
            prev = next;
        }
        panic!("windowed cone did not stabilise");
    }

    pub fn ar_quiver(&self) -> ArQuiver {
        let vertices = self.ctx.all_indecomposables();
        let d = &self.derived;
        let mut arrows = Vec::new();
        let mut tau = BTreeMap::new();
        for &v in &vertices {
            let z = self.lifts[&v];
            let tz = d.tau(z);
            tau.insert(v, self.project(tz));
            // AR triangle τz -> e -> z -> Στz; e = Σ^{-1} cone(z -> Στz).
            let stz = tz.shifted(1);
            let h = Mor::single(z, stz, vec![1]);
            assert_eq!(d.dim(z, stz), 1);
            let e = d.cone_object(&h);
            for m in e {
                arrows.push((self.project(m.shifted(-1)), v));
            }
        }
        arrows.sort();
        arrows.dedup();
        let tau_inv: BTreeMap<Diagonal, Diagonal> = tau.iter().map(|(&a, &b)| (b, a)).collect();
        let mut rows: Vec<Vec<Diagonal>> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for &start in &vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut row = vec![start];
            seen.insert(start);
            let mut cur = tau_inv[&start];
            while cur != start {
                row.push(cur);
                seen.insert(cur);
                cur = tau_inv[&cur];
            }
            rows.push(row);
        }
        ArQuiver {
            vertices,
            arrows,
            tau,
            rows,
        }
    }

    fn table(&self, x: DInd, y: DInd, z: DInd) -> Arc<CompTable> {
        let key = (
            x.module,
            y.shift - x.shift,
            y.module,
            z.shift - x.shift,
            z.module,
        );
        if let Some(t) = self.caches.lock().unwrap().tables.get(&key) {
            return t.clone();
        }
        let fld = self.ctx.field;
        let (k1s, k2s, k3s) = (
            self.hom_degrees(x, y),
            self.hom_degrees(y, z),
            self.hom_degrees(x, z),
        );
        let mut t = vec![vec![vec![0u32; k3s.len()]; k2s.len()]; k1s.len()];
        for (a, &k1) in k1s.iter().enumerate() {
            for (b, &k2) in k2s.iter().enumerate() {
                let fy = self.f_pow(y, k1);
                let fz2 = self.f_pow(z, k2);
                let fz = self.f_pow(z, k1 + k2);
                let lam = self.big_lambda(k1, y, fz2);
                let c = self.derived.structure_constant(x, fy, fz);
                let v = fld.mul(lam, c);
                if v != 0 {
                    let idx = k3s
                        .iter()
                        .position(|&k| k == k1 + k2)
                        .expect("composite lands in a nonzero degree");
                    t[a][b][idx] = v;
                }
            }
        }
        let t = Arc::new(t);
        self.caches.lock().unwrap().tables.insert(key, t.clone());
        t
    }
}

impl Ambient for OrbitCat {
    type Ind = DInd;
    type Key = Diagonal;

    fn field(&self) -> Field {
        self.ctx.field
    }

    fn key(&self, x: &DInd) -> Diagonal {
        self.project(*x)
    }

    fn canonical(&self, k: &Diagonal) -> DInd {
        self.lifts[k]
    }

    fn hom_len(&self, x: &DInd, y: &DInd) -> usize {
        self.hom_degrees(*x, *y).len()
    }

    fn comp_table(&self, x: &DInd, y: &DInd, z: &DInd) -> Arc<CompTable> {
        self.table(*x, *y, *z)
    }

    fn identity_coords(&self, x: &DInd) -> Vec<u32> {
        let ks = self.hom_degrees(*x, *x);
        ks.iter().map(|&k| u32::from(k == 0)).collect()
    }

    fn shift_ind(&self, x: &DInd, k: i32) -> DInd {
        x.shifted(k)
    }

    fn cone_object(&self, f: &Mor<DInd>) -> Vec<DInd> {
        self.cone_c(f).into_iter().map(|d| self.lifts[&d]).collect()
    }

    fn triangle(&self, f: &Mor<DInd>) -> Option<Triangle<DInd>> {
        let (xs, ys, dm) = self.relift(f)?;
        let t = self.derived.cone_triangle(&dm);
        let g_new = self.from_derived(&t.g);
        let h_new = self.from_derived(&t.h);
        let y_to_new = self.relabel_obj(&f.tgt, &ys);
        let sx_new: Vec<DInd> = xs.iter().map(|x| x.shifted(1)).collect();
        let sx_old: Vec<DInd> = f.src.iter().map(|x| x.shifted(1)).collect();
        let back = self.relabel_obj(&sx_new, &sx_old);
        Some(Triangle {
            x: f.src.clone(),
            y: f.tgt.clone(),
            z: t.z.clone(),
            f: f.clone(),
            g: compose(self, &g_new, &y_to_new),
            h: compose(self, &back, &h_new),
        })
    }

    fn probe_set(&self) -> Vec<DInd> {
        self.lifts.values().copied().collect()
    }

    fn name(&self, x: &DInd) -> String {
        self.project(*x).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> OrbitCat {
        OrbitCat::new(3, 4, Field::new(2)).unwrap()
    }

    #[test]
    fn census() {
        let c = cat();
        assert_eq!(c.ctx().big_n, 18);
        assert_eq!(c.ctx().all_indecomposables().len(), 36);
        assert!(!c.ctx().is_admissible(0, 4));
    }

    #[test]
    fn projection_is_f_invariant() {
        let c = cat();
        for x in c.derived().indecomposables_in(-6, 6) {
            assert_eq!(c.project(c.f(x)), c.project(x));
            assert_eq!(c.f_inv(c.f(x)), x);
            assert_eq!(c.project(x.shifted(1)), c.ctx().rotate(c.project(x), 1));
        }
    }

    #[test]
    fn shift_matches_figure_labels() {
        let c = cat();
        for ((a, b), (p, q)) in [
            ((0, 3), (1, 4)),
            ((4, 11), (5, 12)),
            ((5, 8), (6, 9)),
            ((12, 15), (13, 16)),
        ] {
            assert_eq!(c.shift_diag(Diagonal::new(a, b), 1), Diagonal::new(p, q));
        }
    }

    #[test]
    fn crossing_examples() {
        let d = Diagonal::new;
        assert!(!crossing(d(0, 3), d(4, 11)));
        assert!(!share_endpoint(d(0, 3), d(4, 11)));
        assert!(crossing(d(0, 3), d(1, 8)));
        assert!(!crossing(d(0, 3), d(0, 3)));
        assert!(share_endpoint(d(0, 3), d(0, 3)));
    }

    #[test]
    fn serre_duality_in_orbit() {
        let c = cat();
        let ds = c.ctx().all_indecomposables();
        let w = c.ctx().w as i32;
        for &x in ds.iter().step_by(5) {
            for &y in &ds {
                let (lx, ly) = (c.lift(x).unwrap(), c.lift(y).unwrap());
                assert_eq!(c.hom_len(&lx, &ly), c.hom_len(&ly, &lx.shifted(-w)));
            }
        }
    }

    #[test]
    fn ar_row_one() {
        let c = cat();
        let q = c.ar_quiver();
        let row = q
            .rows
            .iter()
            .find(|r| r.contains(&Diagonal::new(0, 3)))
            .unwrap();
        let start = row.iter().position(|&d| d == Diagonal::new(0, 3)).unwrap();
        let cyc: Vec<Diagonal> = (0..row.len())
            .map(|i| row[(start + i) % row.len()])
            .collect();
        let want = [
            (0, 3),
            (4, 7),
            (8, 11),
            (12, 15),
            (1, 16),
            (2, 5),
            (6, 9),
            (10, 13),
            (14, 17),
        ];
        assert_eq!(
            cyc,
            want.iter()
                .map(|&(a, b)| Diagonal::new(a, b))
                .collect::<Vec<_>>()
        );
        assert_eq!(q.rows.len(), 4);
    }
}
