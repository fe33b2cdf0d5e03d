//! Krull–Schmidt triangulated categories with finite-dimensional Hom spaces,
//! presented by indecomposables, Hom bases and composition tables.
//!
//! Morphisms between direct sums are block matrices whose `(j, i)` block is a
//! coefficient vector in the chosen basis of `Hom(src[i], tgt[j])`.

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use crate::linalg::{kernel_basis, solve, Field, Matrix, Span};

/// `table[a][b]` is the coordinate vector (in `Hom(x, z)`) of the composite
/// `basis_b(y, z) ∘ basis_a(x, y)`.
pub type CompTable = Vec<Vec<Vec<u32>>>;

pub trait Ambient: Sync + Send {
    type Ind: Clone + Eq + Hash + Ord + Debug + Send + Sync;
    /// Isomorphism class of an indecomposable.
    type Key: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn field(&self) -> Field;
    fn key(&self, x: &Self::Ind) -> Self::Key;
    /// The preferred representative of an isomorphism class.
    fn canonical(&self, k: &Self::Key) -> Self::Ind;
    fn hom_len(&self, x: &Self::Ind, y: &Self::Ind) -> usize;
    fn comp_table(&self, x: &Self::Ind, y: &Self::Ind, z: &Self::Ind) -> Arc<CompTable>;
    fn identity_coords(&self, x: &Self::Ind) -> Vec<u32>;
    /// `Σ^k x`; `Σ` acts on coefficient vectors as the identity.
    fn shift_ind(&self, x: &Self::Ind, k: i32) -> Self::Ind;
    /// Indecomposable summands of the cone, as canonical representatives.
    fn cone_object(&self, f: &Mor<Self::Ind>) -> Vec<Self::Ind>;
    /// A distinguished triangle on `f`, when it can be computed with maps.
    fn triangle(&self, f: &Mor<Self::Ind>) -> Option<Triangle<Self::Ind>>;
    /// Every indecomposable up to isomorphism that searches should visit.
    fn probe_set(&self) -> Vec<Self::Ind>;
    fn name(&self, x: &Self::Ind) -> String;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mor<I> {
    pub src: Vec<I>,
    pub tgt: Vec<I>,
    /// `blocks[j][i]`: coordinates of the component `src[i] -> tgt[j]`.
    pub blocks: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone)]
pub struct Triangle<I> {
    pub x: Vec<I>,
    pub y: Vec<I>,
    pub z: Vec<I>,
    pub f: Mor<I>,
    pub g: Mor<I>,
    /// `z -> Σx`
    pub h: Mor<I>,
}

impl<I: Clone + Eq> Mor<I> {
    pub fn zero<A: Ambient<Ind = I>>(a: &A, src: &[I], tgt: &[I]) -> Self {
        let blocks = tgt
            .iter()
            .map(|y| src.iter().map(|x| vec![0; a.hom_len(x, y)]).collect())
            .collect();
        Mor {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            blocks,
        }
    }

    pub fn identity<A: Ambient<Ind = I>>(a: &A, obj: &[I]) -> Self {
        let mut m = Mor::zero(a, obj, obj);
        for (i, x) in obj.iter().enumerate() {
            m.blocks[i][i] = a.identity_coords(x);
        }
        m
    }

    /// Morphism `x -> y` between indecomposables given by coordinates.
    pub fn single(x: I, y: I, coords: Vec<u32>) -> Self {
        Mor {
            src: vec![x],
            tgt: vec![y],
            blocks: vec![vec![coords]],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().flatten().flatten().all(|&c| c == 0)
    }

    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flatten().flatten().copied().collect()
    }

    pub fn with_flat(&self, v: &[u32]) -> Self {
        let mut out = self.clone();
        let mut k = 0;
        for row in out.blocks.iter_mut() {
            for blk in row.iter_mut() {
                for c in blk.iter_mut() {
                    *c = v[k];
                    k += 1;
                }
            }
        }
        assert_eq!(k, v.len());
        out
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().flatten().map(|b| b.len()).sum()
    }

    pub fn add(&self, other: &Self, f: Field) -> Self {
        assert!(
            self.src == other.src && self.tgt == other.tgt,
            "adding maps with different endpoints"
        );
        let v: Vec<u32> = self
            .flatten()
            .iter()
            .zip(other.flatten())
            .map(|(&a, b)| f.add(a, b))
            .collect();
        self.with_flat(&v)
    }

    pub fn scale(&self, c: u32, f: Field) -> Self {
        let v: Vec<u32> = self.flatten().iter().map(|&a| f.mul(a, c)).collect();
        self.with_flat(&v)
    }

    pub fn neg(&self, f: Field) -> Self {
        self.scale(f.neg(1), f)
    }

    /// `Σ^k` of the morphism.
    pub fn shift<A: Ambient<Ind = I>>(&self, a: &A, k: i32) -> Self {
        Mor {
            src: self.src.iter().map(|x| a.shift_ind(x, k)).collect(),
            tgt: self.tgt.iter().map(|x| a.shift_ind(x, k)).collect(),
            blocks: self.blocks.clone(),
        }
    }

    /// Component out of source summand `i`.
    pub fn column(&self, i: usize) -> Self {
        Mor {
            src: vec![self.src[i].clone()],
            tgt: self.tgt.clone(),
            blocks: self.blocks.iter().map(|r| vec![r[i].clone()]).collect(),
        }
    }

    /// Component into target summand `j`.
    pub fn row(&self, j: usize) -> Self {
        Mor {
            src: self.src.clone(),
            tgt: vec![self.tgt[j].clone()],
            blocks: vec![self.blocks[j].clone()],
        }
    }

    /// Restriction to chosen source and target summands.
    pub fn sub(&self, cols: &[usize], rows: &[usize]) -> Self {
        Mor {
            src: cols.iter().map(|&i| self.src[i].clone()).collect(),
            tgt: rows.iter().map(|&j| self.tgt[j].clone()).collect(),
            blocks: rows
                .iter()
                .map(|&j| cols.iter().map(|&i| self.blocks[j][i].clone()).collect())
                .collect(),
        }
    }

    /// `[f_1 f_2 ...] : ⊕ src_k -> tgt`.
    pub fn hconcat(parts: &[Self]) -> Self {
        let tgt = parts[0].tgt.clone();
        let mut src = Vec::new();
        let mut blocks: Vec<Vec<Vec<u32>>> = vec![Vec::new(); tgt.len()];
        for p in parts {
            assert!(p.tgt == tgt);
            src.extend(p.src.iter().cloned());
            for (j, r) in p.blocks.iter().enumerate() {
                blocks[j].extend(r.iter().cloned());
            }
        }
        Mor { src, tgt, blocks }
    }

    /// `(f_1; f_2; ...) : src -> ⊕ tgt_k`.
    pub fn vconcat(parts: &[Self]) -> Self {
        let src = parts[0].src.clone();
        let mut tgt = Vec::new();
        let mut blocks = Vec::new();
        for p in parts {
            assert!(p.src == src);
            tgt.extend(p.tgt.iter().cloned());
            blocks.extend(p.blocks.iter().cloned());
        }
        Mor { src, tgt, blocks }
    }

    /// Block-diagonal sum.
    pub fn diag<A: Ambient<Ind = I>>(a: &A, parts: &[Self]) -> Self {
        let src: Vec<I> = parts.iter().flat_map(|p| p.src.iter().cloned()).collect();
        let tgt: Vec<I> = parts.iter().flat_map(|p| p.tgt.iter().cloned()).collect();
        let mut m = Mor::zero(a, &src, &tgt);
        let (mut ro, mut co) = (0, 0);
        for p in parts {
            for (j, r) in p.blocks.iter().enumerate() {
                for (i, b) in r.iter().enumerate() {
                    m.blocks[ro + j][co + i] = b.clone();
                }
            }
            ro += p.tgt.len();
            co += p.src.len();
        }
        m
    }
}

/// `g ∘ f`.
pub fn compose<A: Ambient>(a: &A, g: &Mor<A::Ind>, f: &Mor<A::Ind>) -> Mor<A::Ind> {
    assert!(
        f.tgt == g.src,
        "composing maps whose endpoints do not match"
    );
    let fld = a.field();
    let mut out = Mor::zero(a, &f.src, &g.tgt);
    for (l, z) in g.tgt.iter().enumerate() {
        for (i, x) in f.src.iter().enumerate() {
            let acc = &mut out.blocks[l][i];
            if acc.is_empty() {
                continue;
            }
            for (j, y) in f.tgt.iter().enumerate() {
                let (fa, gb) = (&f.blocks[j][i], &g.blocks[l][j]);
                if fa.iter().all(|&c| c == 0) || gb.iter().all(|&c| c == 0) {
                    continue;
                }
                let t = a.comp_table(x, y, z);
                for (ia, &ca) in fa.iter().enumerate() {
                    if ca == 0 {
                        continue;
                    }
                    for (ib, &cb) in gb.iter().enumerate() {
                        if cb == 0 {
                            continue;
                        }
                        let s = fld.mul(ca, cb);
                        for (k, &v) in t[ia][ib].iter().enumerate() {
                            if v != 0 {
                                acc[k] = fld.add(acc[k], fld.mul(s, v));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn hom_dim<A: Ambient>(a: &A, x: &[A::Ind], y: &[A::Ind]) -> usize {
    x.iter()
        .map(|xi| y.iter().map(|yj| a.hom_len(xi, yj)).sum::<usize>())
        .sum()
}

/// Basis of `Hom(src, tgt)` made of single-coordinate morphisms.
pub fn hom_basis<A: Ambient>(a: &A, src: &[A::Ind], tgt: &[A::Ind]) -> Vec<Mor<A::Ind>> {
    let z = Mor::zero(a, src, tgt);
    let d = z.dim();
    (0..d)
        .map(|k| {
            let mut v = vec![0; d];
            v[k] = 1;
            z.with_flat(&v)
        })
        .collect()
}

/// All morphisms `src -> tgt` (the whole space; use only for small spaces).
pub fn all_morphisms<A: Ambient>(a: &A, src: &[A::Ind], tgt: &[A::Ind]) -> Vec<Mor<A::Ind>> {
    let z = Mor::zero(a, src, tgt);
    a.field()
        .all_vectors(z.dim())
        .into_iter()
        .map(|v| z.with_flat(&v))
        .collect()
}

/// Nonzero morphisms up to nonzero scalars.
pub fn projective_morphisms<A: Ambient>(a: &A, src: &[A::Ind], tgt: &[A::Ind]) -> Vec<Mor<A::Ind>> {
    let z = Mor::zero(a, src, tgt);
    a.field()
        .projective_points(z.dim())
        .into_iter()
        .map(|v| z.with_flat(&v))
        .collect()
}

/// Matrix (columns indexed by the unknown's coordinates) of the linear map
/// `u ↦ op(u)` on a space of morphisms with the given template.
pub fn linear_map_matrix<I: Clone + Eq>(
    field: Field,
    template: &Mor<I>,
    out_dim: usize,
    op: impl Fn(&Mor<I>) -> Vec<u32>,
) -> Matrix {
    let d = template.dim();
    let cols: Vec<Vec<u32>> = (0..d)
        .map(|k| {
            let mut v = vec![0; d];
            v[k] = 1;
            op(&template.with_flat(&v))
        })
        .collect();
    Matrix::from_columns(field, out_dim, &cols)
}

/// Solves `op(u) = rhs` for `u` with the template's shape; returns a
/// solution and the dimension of the solution space of the homogeneous
/// system.
pub fn solve_linear<I: Clone + Eq>(
    field: Field,
    template: &Mor<I>,
    rhs: &[u32],
    op: impl Fn(&Mor<I>) -> Vec<u32>,
) -> Option<(Mor<I>, usize)> {
    let m = linear_map_matrix(field, template, rhs.len(), op);
    let kdim = kernel_basis(&m).len();
    if m.cols() == 0 {
        return if rhs.iter().all(|&c| c == 0) {
            Some((template.with_flat(&[]), 0))
        } else {
            None
        };
    }
    let x = if m.rows() == 0 {
        vec![0; m.cols()]
    } else {
        solve(&m, rhs)?
    };
    Some((template.with_flat(&x), kdim))
}

/// Span of the images of morphisms under a linear readout.
pub fn span_of(field: Field, dim: usize, vecs: impl IntoIterator<Item = Vec<u32>>) -> Span {
    let mut s = Span::new(field, dim);
    for v in vecs {
        s.insert(&v);
    }
    s
}

/// Multiset of isomorphism classes of an object.
pub fn keys<A: Ambient>(a: &A, obj: &[A::Ind]) -> Vec<A::Key> {
    let mut k: Vec<A::Key> = obj.iter().map(|x| a.key(x)).collect();
    k.sort();
    k
}

pub fn is_iso_objects<A: Ambient>(a: &A, x: &[A::Ind], y: &[A::Ind]) -> bool {
    keys(a, x) == keys(a, y)
}

pub fn shift_obj<A: Ambient>(a: &A, obj: &[A::Ind], k: i32) -> Vec<A::Ind> {
    obj.iter().map(|x| a.shift_ind(x, k)).collect()
}

pub fn names<A: Ambient>(a: &A, obj: &[A::Ind]) -> Vec<String> {
    obj.iter().map(|x| a.name(x)).collect()
}

/// Rank of `u ↦ m ∘ u` on `Hom(t, m.src)`.
fn post_rank<A: Ambient>(a: &A, t: &[A::Ind], m: &Mor<A::Ind>) -> usize {
    let tmpl = Mor::zero(a, t, &m.src);
    let out = Mor::zero(a, t, &m.tgt).dim();
    if tmpl.dim() == 0 || out == 0 {
        return 0;
    }
    crate::linalg::rank(&linear_map_matrix(a.field(), &tmpl, out, |u| {
        compose(a, m, u).flatten()
    }))
}

/// Whether `Hom(t, -)` turns the triangle into an exact sequence for every
/// probe `t`, with all consecutive composites zero.
pub fn is_hom_exact<A: Ambient>(a: &A, tri: &Triangle<A::Ind>, probes: &[A::Ind]) -> bool {
    let sf = tri.f.shift(a, 1);
    let composites_vanish = compose(a, &tri.g, &tri.f).is_zero()
        && compose(a, &tri.h, &tri.g).is_zero()
        && compose(a, &sf, &tri.h).is_zero();
    composites_vanish
        && probes.iter().all(|t| {
            let t = std::slice::from_ref(t);
            [(&tri.f, &tri.g), (&tri.g, &tri.h), (&tri.h, &sf)]
                .iter()
                .all(|(p, q)| {
                    post_rank(a, t, p) + post_rank(a, t, q) == Mor::zero(a, t, &p.tgt).dim()
                })
        })
}
