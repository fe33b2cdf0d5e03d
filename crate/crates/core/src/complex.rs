//! Bounded complexes of projective `kA_n`-modules and chain maps between
//! them, i.e. the chain-level model of `D^b(kA_n) = K^b(proj kA_n)`.
//!
//! A term is a list of projective indices (`i` stands for `P(i) = [i, n]`).
//! Since `Hom(P(i), P(j))` is one-dimensional exactly when `j <= i` and
//! spanned by the path inclusion, any map between sums of projectives is a
//! scalar matrix supported on the entries with `target <= source`, and
//! composition is plain matrix multiplication.
//!
//! Differentials have degree `+1`; `Σ` shifts degrees down by one and negates
//! the differential; on chain maps `Σ` is a pure reindexing.

use std::collections::BTreeMap;

use crate::linalg::{kernel_basis, rank, solve, Field, Matrix, Span};
use crate::typea::Interval;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjComplex {
    field: Field,
    n: usize,
    terms: BTreeMap<i32, Vec<usize>>,
    /// `diffs[d]` maps `terms[d]` to `terms[d+1]`; absent means zero.
    diffs: BTreeMap<i32, Matrix>,
}

#[inline]
fn allowed(target: usize, source: usize) -> bool {
    target <= source
}

impl ProjComplex {
    pub fn zero(field: Field, n: usize) -> Self {
        ProjComplex {
            field,
            n,
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    /// Builds a complex from terms and differentials, checking shapes,
    /// supports and `d∘d = 0`.
    pub fn new(
        field: Field,
        n: usize,
        terms: BTreeMap<i32, Vec<usize>>,
        diffs: BTreeMap<i32, Matrix>,
    ) -> Self {
        let c = ProjComplex {
            field,
            n,
            terms: terms.into_iter().filter(|(_, t)| !t.is_empty()).collect(),
            diffs,
        };
        c.validate();
        c
    }

    fn validate(&self) {
        for (&d, m) in &self.diffs {
            let (s, t) = (self.term(d), self.term(d + 1));
            assert_eq!(
                (m.rows(), m.cols()),
                (t.len(), s.len()),
                "differential shape at {d}"
            );
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    assert!(
                        m.get(r, c) == 0 || allowed(t[r], s[c]),
                        "differential entry outside Hom support"
                    );
                }
            }
        }
        for (&d, m) in &self.diffs {
            if let Some(next) = self.diffs.get(&(d + 1)) {
                assert!(next.mul(m).is_zero(), "d∘d != 0 at degree {d}");
            }
        }
    }

    /// The two-term projective resolution of an interval module placed with
    /// its top in degree 0: `P(hi+1) -> P(lo)`.
    pub fn resolution(field: Field, n: usize, x: Interval) -> Self {
        let mut terms = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        terms.insert(0, vec![x.lo]);
        if x.hi < n {
            terms.insert(-1, vec![x.hi + 1]);
            let mut m = Matrix::zeros(field, 1, 1);
            m.set(0, 0, 1);
            diffs.insert(-1, m);
        }
        ProjComplex::new(field, n, terms, diffs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn term(&self, d: i32) -> &[usize] {
        self.terms.get(&d).map_or(&[], |v| v.as_slice())
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.terms.keys().copied()
    }

    pub fn is_zero_complex(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn size(&self) -> usize {
        self.terms.values().map(|t| t.len()).sum()
    }

    /// Differential out of degree `d`, materialised as a (possibly empty) matrix.
    pub fn diff(&self, d: i32) -> Matrix {
        self.diffs.get(&d).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.field, self.term(d + 1).len(), self.term(d).len())
        })
    }

    fn range(&self) -> Option<(i32, i32)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    /// `Σ^k`: degrees move down by `k`, differentials pick up `(-1)^k`.
    pub fn shift(&self, k: i32) -> ProjComplex {
        let sign = k.rem_euclid(2) == 1;
        ProjComplex {
            field: self.field,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(&d, t)| (d - k, t.clone()))
                .collect(),
            diffs: self
                .diffs
                .iter()
                .map(|(&d, m)| (d - k, if sign { m.neg() } else { m.clone() }))
                .collect(),
        }
    }

    pub fn direct_sum(parts: &[ProjComplex], field: Field, n: usize) -> ProjComplex {
        let mut terms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for p in parts {
            for (&d, t) in &p.terms {
                terms.entry(d).or_default().extend_from_slice(t);
            }
        }
        let mut diffs = BTreeMap::new();
        for &d in terms.keys() {
            let (rows, cols) = (terms.get(&(d + 1)).map_or(0, |t| t.len()), terms[&d].len());
            if rows == 0 {
                continue;
            }
            let mut m = Matrix::zeros(field, rows, cols);
            let (mut ro, mut co) = (0, 0);
            for p in parts {
                let pd = p.diff(d);
                for r in 0..pd.rows() {
                    for c in 0..pd.cols() {
                        m.set(ro + r, co + c, pd.get(r, c));
                    }
                }
                ro += p.term(d + 1).len();
                co += p.term(d).len();
            }
            diffs.insert(d, m);
        }
        ProjComplex::new(field, n, terms, diffs)
    }

    /// Chain-level Serre functor `ν`: apply the Nakayama functor termwise
    /// (`P(i) -> I(i)`, same scalar matrices) and replace each `I(i)` by its
    /// strictly functorial resolution `P(i+1) -> P(1)`, then totalise.
    ///
    /// Degree `m` of the result is `P(1)^{J^m} ⊕ P(i+1)^{J^{m+1}, i<n}`.
    pub fn serre(&self) -> ProjComplex {
        let f = self.field;
        let n = self.n;
        let Some((lo, hi)) = self.range() else {
            return self.clone();
        };
        let layout = SerreLayout::new(self, lo - 1, hi);
        let mut terms = BTreeMap::new();
        for m in lo - 1..=hi {
            let t = layout.term(self, m);
            if !t.is_empty() {
                terms.insert(m, t);
            }
        }
        let mut diffs = BTreeMap::new();
        for m in lo - 1..=hi {
            let (src, tgt) = (layout.term(self, m), layout.term(self, m + 1));
            if src.is_empty() || tgt.is_empty() {
                continue;
            }
            let mut d = Matrix::zeros(f, tgt.len(), src.len());
            // horizontal, degree-0 parts: D^m on the P(1) blocks
            let dm = self.diff(m);
            for r in 0..dm.rows() {
                for c in 0..dm.cols() {
                    d.set(r, c, dm.get(r, c));
                }
            }
            // horizontal, degree -1 parts: D^{m+1} restricted to i < n
            let dm1 = self.diff(m + 1);
            let src_low = layout.low_positions(self, m + 1);
            let tgt_low = layout.low_positions(self, m + 2);
            let (src_off, tgt_off) = (self.term(m).len(), self.term(m + 1).len());
            for (ri, &r) in tgt_low.iter().enumerate() {
                for (ci, &c) in src_low.iter().enumerate() {
                    let v = dm1.get(r, c);
                    if v != 0 {
                        d.set(tgt_off + ri, src_off + ci, v);
                    }
                }
            }
            // vertical: P(i+1) -> P(1) inside J^{m+1}, sign (-1)^{m+1}
            let sign = if (m + 1).rem_euclid(2) == 1 {
                f.neg(1)
            } else {
                1
            };
            for (ci, &c) in src_low.iter().enumerate() {
                d.set(c, src_off + ci, sign);
            }
            diffs.insert(m, d);
        }
        ProjComplex::new(f, n, terms, diffs)
    }

    /// Multiset of shifted intervals `(shift, interval)` such that this
    /// complex is isomorphic to `⊕ Σ^shift M[interval]`, read off from the
    /// cohomology representations (the algebra is hereditary).
    pub fn cohomology_summands(&self) -> Vec<(i32, Interval)> {
        let mut out = Vec::new();
        let n = self.n;
        let f = self.field;
        for d in self.degrees().collect::<Vec<_>>() {
            let term = self.term(d);
            let prev = self.term(d - 1);
            let dout = self.diff(d);
            let din = self.diff(d - 1);
            // Positions of summands alive at vertex v (index <= v).
            let alive = |t: &[usize], v: usize| -> Vec<usize> {
                (0..t.len()).filter(|&i| t[i] <= v).collect()
            };
            let mut cycles: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n + 1];
            let mut bounds: Vec<Matrix> = Vec::with_capacity(n + 1);
            bounds.push(Matrix::zeros(f, 0, 0));
            for v in 1..=n {
                let cols = alive(term, v);
                let rows = alive(self.term(d + 1), v);
                let mut m = Matrix::zeros(f, rows.len(), cols.len());
                for (ri, &r) in rows.iter().enumerate() {
                    for (ci, &c) in cols.iter().enumerate() {
                        m.set(ri, ci, dout.get(r, c));
                    }
                }
                let kb = kernel_basis(&m);
                // embed into full term coordinates
                cycles[v] = kb
                    .into_iter()
                    .map(|k| {
                        let mut full = vec![0; term.len()];
                        for (ci, &c) in cols.iter().enumerate() {
                            full[c] = k[ci];
                        }
                        full
                    })
                    .collect();
                let pcols = alive(prev, v);
                let mut b = Matrix::zeros(f, term.len(), pcols.len());
                for r in 0..term.len() {
                    if term[r] > v {
                        continue;
                    }
                    for (ci, &c) in pcols.iter().enumerate() {
                        b.set(r, ci, din.get(r, c));
                    }
                }
                bounds.push(b);
            }
            let brank: Vec<usize> = bounds.iter().map(rank).collect();
            let mut rk = vec![vec![0i64; n + 2]; n + 2];
            for a in 1..=n {
                for b in a..=n {
                    let bb = &bounds[b];
                    let mut m = Matrix::zeros(f, term.len(), cycles[a].len() + bb.cols());
                    for (j, z) in cycles[a].iter().enumerate() {
                        for (r, &x) in z.iter().enumerate() {
                            m.set(r, j, x);
                        }
                    }
                    for r in 0..bb.rows() {
                        for c in 0..bb.cols() {
                            m.set(r, cycles[a].len() + c, bb.get(r, c));
                        }
                    }
                    rk[a][b] = (rank(&m) - brank[b]) as i64;
                }
            }
            let get = |a: usize, b: usize| -> i64 {
                if a == 0 || b > n || a > b {
                    0
                } else {
                    rk[a][b]
                }
            };
            for a in 1..=n {
                for b in a..=n {
                    let mult = get(a, b) - get(a - 1, b) - get(a, b + 1) + get(a - 1, b + 1);
                    assert!(mult >= 0, "negative multiplicity in cohomology");
                    for _ in 0..mult {
                        out.push((-d, Interval::new(a, b)));
                    }
                }
            }
        }
        out.sort();
        out
    }
}

struct SerreLayout;

impl SerreLayout {
    fn new(_c: &ProjComplex, _lo: i32, _hi: i32) -> Self {
        SerreLayout
    }

    /// Degree `m` of the totalised resolution.
    fn term(&self, c: &ProjComplex, m: i32) -> Vec<usize> {
        let n = c.n();
        let mut t: Vec<usize> = c.term(m).iter().map(|_| 1).collect();
        t.extend(c.term(m + 1).iter().filter(|&&i| i < n).map(|&i| i + 1));
        t
    }

    /// Positions (within `J^d`) of the summands `I(i)` with `i < n`.
    fn low_positions(&self, c: &ProjComplex, d: i32) -> Vec<usize> {
        let n = c.n();
        c.term(d)
            .iter()
            .enumerate()
            .filter(|(_, &i)| i < n)
            .map(|(p, _)| p)
            .collect()
    }
}

/// A chain map, stored degreewise. Source and target are kept by the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    comps: BTreeMap<i32, Matrix>,
}

impl ChainMap {
    pub fn zero() -> Self {
        ChainMap {
            comps: BTreeMap::new(),
        }
    }

    pub fn from_components(comps: BTreeMap<i32, Matrix>) -> Self {
        ChainMap {
            comps: comps.into_iter().filter(|(_, m)| !m.is_zero()).collect(),
        }
    }

    pub fn identity(c: &ProjComplex) -> Self {
        ChainMap::from_components(
            c.degrees()
                .map(|d| (d, Matrix::identity(c.field(), c.term(d).len())))
                .collect(),
        )
    }

    /// Component at degree `d`, materialised for the given endpoints.
    pub fn at(&self, d: i32, src: &ProjComplex, tgt: &ProjComplex) -> Matrix {
        self.comps
            .get(&d)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(src.field(), tgt.term(d).len(), src.term(d).len()))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ChainMap) -> ChainMap {
        let mut comps = BTreeMap::new();
        for (d, a) in &first.comps {
            if let Some(b) = self.comps.get(d) {
                comps.insert(*d, b.mul(a));
            }
        }
        ChainMap::from_components(comps)
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        let mut comps = self.comps.clone();
        for (d, m) in &other.comps {
            comps
                .entry(*d)
                .and_modify(|x| *x = x.add(m))
                .or_insert_with(|| m.clone());
        }
        ChainMap::from_components(comps)
    }

    pub fn scale(&self, c: u32) -> ChainMap {
        ChainMap::from_components(self.comps.iter().map(|(&d, m)| (d, m.scale(c))).collect())
    }

    /// `Σ^k` of the map (reindexing only).
    pub fn shift(&self, k: i32) -> ChainMap {
        ChainMap {
            comps: self
                .comps
                .iter()
                .map(|(&d, m)| (d - k, m.clone()))
                .collect(),
        }
    }

    /// Checks `d ∘ f = f ∘ d` and the Hom support pattern.
    pub fn is_chain_map(&self, src: &ProjComplex, tgt: &ProjComplex) -> bool {
        for (&d, m) in &self.comps {
            let (s, t) = (src.term(d), tgt.term(d));
            if (m.rows(), m.cols()) != (t.len(), s.len()) {
                return false;
            }
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    if m.get(r, c) != 0 && !allowed(t[r], s[c]) {
                        return false;
                    }
                }
            }
        }
        let degs: Vec<i32> = src.degrees().chain(tgt.degrees()).collect();
        for &d in &degs {
            let lhs = tgt.diff(d).mul(&self.at(d, src, tgt));
            let rhs = self.at(d + 1, src, tgt).mul(&src.diff(d));
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Block of the map between summand ranges: source positions
    /// `src_pos[d]`, target positions `tgt_pos[d]` per degree.
    pub fn restrict(
        &self,
        src_pos: &BTreeMap<i32, Vec<usize>>,
        tgt_pos: &BTreeMap<i32, Vec<usize>>,
        field: Field,
    ) -> ChainMap {
        let mut comps = BTreeMap::new();
        for (&d, m) in &self.comps {
            let (Some(sp), Some(tp)) = (src_pos.get(&d), tgt_pos.get(&d)) else {
                continue;
            };
            let mut b = Matrix::zeros(field, tp.len(), sp.len());
            for (ri, &r) in tp.iter().enumerate() {
                for (ci, &c) in sp.iter().enumerate() {
                    b.set(ri, ci, m.get(r, c));
                }
            }
            comps.insert(d, b);
        }
        ChainMap::from_components(comps)
    }

    /// Chain-level Serre functor on maps, matching [`ProjComplex::serre`].
    pub fn serre(&self, src: &ProjComplex, tgt: &ProjComplex) -> ChainMap {
        let f = src.field();
        let n = src.n();
        let degs: Vec<i32> = src.degrees().chain(tgt.degrees()).collect();
        let (Some(&lo), Some(&hi)) = (degs.iter().min(), degs.iter().max()) else {
            return ChainMap::zero();
        };
        let lay = SerreLayout;
        let mut comps = BTreeMap::new();
        for m in lo - 1..=hi {
            let (s, t) = (lay.term(src, m), lay.term(tgt, m));
            if s.is_empty() || t.is_empty() {
                continue;
            }
            let mut out = Matrix::zeros(f, t.len(), s.len());
            let fm = self.at(m, src, tgt);
            for r in 0..fm.rows() {
                for c in 0..fm.cols() {
                    out.set(r, c, fm.get(r, c));
                }
            }
            let fm1 = self.at(m + 1, src, tgt);
            let sl = lay.low_positions(src, m + 1);
            let tl = lay.low_positions(tgt, m + 1);
            let (so, to) = (src.term(m).len(), tgt.term(m).len());
            for (ri, &r) in tl.iter().enumerate() {
                for (ci, &c) in sl.iter().enumerate() {
                    out.set(to + ri, so + ci, fm1.get(r, c));
                }
            }
            let _ = n;
            comps.insert(m, out);
        }
        ChainMap::from_components(comps)
    }
}

/// Standard mapping cone `C^d = tgt^d ⊕ src^{d+1}` with
/// `d_C = [[d_tgt, f], [0, -d_src]]`, plus the triangle maps
/// `tgt -> C` and `C -> Σ src`.
pub struct MappingCone {
    pub cone: ProjComplex,
    pub incl: ChainMap,
    pub proj: ChainMap,
}

pub fn mapping_cone(f: &ChainMap, src: &ProjComplex, tgt: &ProjComplex) -> MappingCone {
    let field = src.field();
    let n = src.n();
    let degs: Vec<i32> = src.degrees().map(|d| d - 1).chain(tgt.degrees()).collect();
    let mut terms = BTreeMap::new();
    for &d in &degs {
        let mut t = tgt.term(d).to_vec();
        t.extend_from_slice(src.term(d + 1));
        if !t.is_empty() {
            terms.insert(d, t);
        }
    }
    let mut diffs = BTreeMap::new();
    let mut incl = BTreeMap::new();
    let mut proj = BTreeMap::new();
    for (&d, t) in &terms {
        let (tq, sp) = (tgt.term(d).len(), src.term(d + 1).len());
        let mut i = Matrix::zeros(field, t.len(), tq);
        for k in 0..tq {
            i.set(k, k, 1);
        }
        incl.insert(d, i);
        let mut p = Matrix::zeros(field, sp, t.len());
        for k in 0..sp {
            p.set(k, tq + k, 1);
        }
        proj.insert(d, p);
        let Some(next) = terms.get(&(d + 1)) else {
            continue;
        };
        let (tq1, sp1) = (tgt.term(d + 1).len(), src.term(d + 2).len());
        debug_assert_eq!(next.len(), tq1 + sp1);
        let mut m = Matrix::zeros(field, next.len(), t.len());
        let dq = tgt.diff(d);
        for r in 0..dq.rows() {
            for c in 0..dq.cols() {
                m.set(r, c, dq.get(r, c));
            }
        }
        let fd = f.at(d + 1, src, tgt);
        for r in 0..fd.rows() {
            for c in 0..fd.cols() {
                m.set(r, tq + c, fd.get(r, c));
            }
        }
        let dp = src.diff(d + 1);
        for r in 0..dp.rows() {
            for c in 0..dp.cols() {
                m.set(tq1 + r, tq + c, field.neg(dp.get(r, c)));
            }
        }
        diffs.insert(d, m);
    }
    MappingCone {
        cone: ProjComplex::new(field, n, terms, diffs),
        incl: ChainMap::from_components(incl),
        proj: ChainMap::from_components(proj),
    }
}

/// `Hom_{K^b(proj)}(src, tgt)`: chain maps modulo null-homotopic ones, with an
/// explicit basis of representatives and a coordinate map.
pub struct HomSpace {
    field: Field,
    /// (degree, target row, source col) per variable
    vars: Vec<(i32, usize, usize)>,
    var_index: BTreeMap<(i32, usize, usize), usize>,
    basis: Vec<Vec<u32>>,
    /// columns: basis vectors followed by homotopy generators
    solver: Matrix,
    src_shape: BTreeMap<i32, (usize, usize)>,
}

impl HomSpace {
    pub fn new(src: &ProjComplex, tgt: &ProjComplex) -> Self {
        let field = src.field();
        let mut vars = Vec::new();
        let mut var_index = BTreeMap::new();
        let mut src_shape = BTreeMap::new();
        for d in src.degrees() {
            let (s, t) = (src.term(d), tgt.term(d));
            if t.is_empty() {
                continue;
            }
            src_shape.insert(d, (t.len(), s.len()));
            for r in 0..t.len() {
                for c in 0..s.len() {
                    if allowed(t[r], s[c]) {
                        var_index.insert((d, r, c), vars.len());
                        vars.push((d, r, c));
                    }
                }
            }
        }
        let nv = vars.len();
        // Commutation constraints: (d_tgt f^d - f^{d+1} d_src)[r][c] = 0.
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let degs: Vec<i32> = src.degrees().collect();
        for &d in &degs {
            let (s, t1) = (src.term(d), tgt.term(d + 1));
            if s.is_empty() || t1.is_empty() {
                continue;
            }
            let dq = tgt.diff(d);
            let dp = src.diff(d);
            for r in 0..t1.len() {
                for c in 0..s.len() {
                    let mut eq = vec![0u32; nv];
                    let mut any = false;
                    for k in 0..tgt.term(d).len() {
                        let a = dq.get(r, k);
                        if a == 0 {
                            continue;
                        }
                        if let Some(&v) = var_index.get(&(d, k, c)) {
                            eq[v] = field.add(eq[v], a);
                            any = true;
                        }
                    }
                    for k in 0..src.term(d + 1).len() {
                        let b = dp.get(k, c);
                        if b == 0 {
                            continue;
                        }
                        if let Some(&v) = var_index.get(&(d + 1, r, k)) {
                            eq[v] = field.sub(eq[v], b);
                            any = true;
                        }
                    }
                    if any {
                        rows.push(eq);
                    }
                }
            }
        }
        let cycles = if rows.is_empty() {
            (0..nv)
                .map(|i| {
                    let mut e = vec![0; nv];
                    e[i] = 1;
                    e
                })
                .collect()
        } else {
            let mut m = Matrix::zeros(field, rows.len(), nv);
            for (i, r) in rows.iter().enumerate() {
                for (j, &x) in r.iter().enumerate() {
                    m.set(i, j, x);
                }
            }
            kernel_basis(&m)
        };
        // Null-homotopic maps: f^d = d_tgt^{d-1} s^d + s^{d+1} d_src^d,
        // with s^d : src^d -> tgt^{d-1}.
        let mut homotopies: Vec<Vec<u32>> = Vec::new();
        for d in src.degrees() {
            let (s, t) = (src.term(d), tgt.term(d - 1));
            for r in 0..t.len() {
                for c in 0..s.len() {
                    if !allowed(t[r], s[c]) {
                        continue;
                    }
                    let mut v = vec![0u32; nv];
                    // contribution to f^d: d_tgt^{d-1}[:, r] * e_{r,c}
                    let dq = tgt.diff(d - 1);
                    for rr in 0..tgt.term(d).len() {
                        let a = dq.get(rr, r);
                        if a != 0 {
                            let idx = var_index[&(d, rr, c)];
                            v[idx] = field.add(v[idx], a);
                        }
                    }
                    // contribution to f^{d-1}: e_{r,c} * d_src^{d-1}[c, :]
                    let dp = src.diff(d - 1);
                    for cc in 0..src.term(d - 1).len() {
                        let b = dp.get(c, cc);
                        if b != 0 {
                            let idx = var_index[&(d - 1, r, cc)];
                            v[idx] = field.add(v[idx], b);
                        }
                    }
                    if v.iter().any(|&x| x != 0) {
                        homotopies.push(v);
                    }
                }
            }
        }
        let mut span = Span::new(field, nv);
        let mut hgens = Vec::new();
        for h in &homotopies {
            if span.insert(h) {
                hgens.push(h.clone());
            }
        }
        let mut basis = Vec::new();
        for z in cycles {
            if span.insert(&z) {
                basis.push(z);
            }
        }
        let cols: Vec<Vec<u32>> = basis.iter().chain(hgens.iter()).cloned().collect();
        let solver = Matrix::from_columns(field, nv, &cols);
        HomSpace {
            field,
            vars,
            var_index,
            basis,
            solver,
            src_shape,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn to_map(&self, v: &[u32]) -> ChainMap {
        let mut comps: BTreeMap<i32, Matrix> = BTreeMap::new();
        for (i, &(d, r, c)) in self.vars.iter().enumerate() {
            if v[i] == 0 {
                continue;
            }
            let (rows, cols) = self.src_shape[&d];
            comps
                .entry(d)
                .or_insert_with(|| Matrix::zeros(self.field, rows, cols))
                .set(r, c, v[i]);
        }
        ChainMap::from_components(comps)
    }

    pub fn basis_map(&self, i: usize) -> ChainMap {
        self.to_map(&self.basis[i])
    }

    /// Coordinates of a chain map in the basis (modulo homotopy).
    /// Panics if `f` is not a chain map between the spaces' endpoints.
    pub fn coords(&self, f: &ChainMap) -> Vec<u32> {
        let mut v = vec![0u32; self.vars.len()];
        for (&d, m) in &f.comps {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let x = m.get(r, c);
                    if x == 0 {
                        continue;
                    }
                    let idx = *self
                        .var_index
                        .get(&(d, r, c))
                        .expect("chain map entry outside Hom support");
                    v[idx] = x;
                }
            }
        }
        if self.vars.is_empty() {
            return Vec::new();
        }
        let x = solve(&self.solver, &v).expect("not a chain map for this Hom space");
        x[..self.basis.len()].to_vec()
    }

    /// Sum of `coef[i] * basis_i`.
    pub fn combine(&self, coef: &[u32]) -> ChainMap {
        let f = self.field;
        let mut v = vec![0u32; self.vars.len()];
        for (c, b) in coef.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(b) {
                *x = f.add(*x, f.mul(*c, y));
            }
        }
        self.to_map(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2)
    }

    #[test]
    fn resolution_cohomology() {
        let n = 3;
        for x in Interval::all(n) {
            let c = ProjComplex::resolution(f2(), n, x);
            assert_eq!(c.cohomology_summands(), vec![(0, x)]);
            assert_eq!(c.shift(2).cohomology_summands(), vec![(2, x)]);
        }
    }

    #[test]
    fn hom_dims_match_modules() {
        let f = Field::new(3);
        let n = 4;
        for x in Interval::all(n) {
            for y in Interval::all(n) {
                let (cx, cy) = (
                    ProjComplex::resolution(f, n, x),
                    ProjComplex::resolution(f, n, y),
                );
                assert_eq!(HomSpace::new(&cx, &cy).dim(), crate::typea::hom_dim(x, y));
                assert_eq!(
                    HomSpace::new(&cx, &cy.shift(1)).dim(),
                    crate::typea::ext1_dim(x, y),
                    "Ext^1({x},{y})"
                );
                assert_eq!(HomSpace::new(&cx, &cy.shift(-1)).dim(), 0);
                assert_eq!(HomSpace::new(&cx, &cy.shift(2)).dim(), 0);
            }
        }
    }

    #[test]
    fn cone_of_p3_into_p2_is_s2() {
        let n = 3;
        let f = f2();
        let p3 = ProjComplex::resolution(f, n, Interval::projective(3, n));
        let p2 = ProjComplex::resolution(f, n, Interval::projective(2, n));
        let h = HomSpace::new(&p3, &p2);
        assert_eq!(h.dim(), 1);
        let mc = mapping_cone(&h.basis_map(0), &p3, &p2);
        assert_eq!(
            mc.cone.cohomology_summands(),
            vec![(0, Interval::simple(2))]
        );
        assert!(mc.incl.is_chain_map(&p2, &mc.cone));
        assert!(mc.proj.is_chain_map(&mc.cone, &p3.shift(1)));
    }

    #[test]
    fn serre_is_a_functor_on_objects() {
        let n = 3;
        let f = Field::new(5);
        for x in Interval::all(n) {
            let c = ProjComplex::resolution(f, n, x);
            let s = c.serre();
            // ν = Στ: ν P(i) = I(i); ν M = Σ τ M otherwise.
            let got = s.cohomology_summands();
            let want = match crate::typea::tau(x, n) {
                Some(t) => vec![(1, t)],
                None => vec![(0, Interval::injective(x.lo))],
            };
            assert_eq!(got, want, "nu({x})");
        }
    }

    #[test]
    fn serre_commutes_with_shift_strictly() {
        let n = 4;
        let f = Field::new(3);
        let c = ProjComplex::resolution(f, n, Interval::new(2, 3));
        assert_eq!(c.shift(1).serre(), c.serre().shift(1));
        assert_eq!(c.shift(-3).serre(), c.serre().shift(-3));
    }
}
