//! Finite-dimensional modules over the path algebra of the linearly oriented
//! quiver `1 -> 2 -> ... -> n`.
//!
//! Conventions (fixed once, tested below):
//! - a representation has one vector space per vertex and one map per arrow
//!   `i -> i+1`;
//! - `P(i)` has simple top `S(i)` and `Hom(P(i), M) = M_i`, so `P(i) = [i, n]`;
//! - `I(i) = [1, i]` and `S(i) = [i, i]`.
//!
//! Every other orientation of `A_n` is derived equivalent to this one, so a
//! single orientation suffices for the derived and orbit categories built on
//! top.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::linalg::{kernel_basis, rank, Field, Matrix};

/// Indecomposable interval module `M[lo, hi]`, 1-based vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo >= 1 && lo <= hi, "invalid interval [{lo},{hi}]");
        Interval { lo, hi }
    }

    pub fn projective(i: usize, n: usize) -> Self {
        Interval::new(i, n)
    }

    pub fn injective(i: usize) -> Self {
        Interval::new(1, i)
    }

    pub fn simple(i: usize) -> Self {
        Interval::new(i, i)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn is_projective(&self, n: usize) -> bool {
        self.hi == n
    }

    pub fn is_injective(&self) -> bool {
        self.lo == 1
    }

    /// All intervals for `A_n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Interval> {
        let mut v = Vec::new();
        for lo in 1..=n {
            for hi in lo..=n {
                v.push(Interval { lo, hi });
            }
        }
        v
    }

    /// Conventional name (`P(i)`, `I(i)`, `S(i)`) when there is one.
    pub fn name(&self, n: usize) -> String {
        if self.hi == n {
            format!("P({})", self.lo)
        } else if self.lo == 1 {
            format!("I({})", self.hi)
        } else if self.lo == self.hi {
            format!("S({})", self.lo)
        } else {
            self.to_string()
        }
    }
}

/// `dim Hom(M[x], M[y])`: one exactly when `y.lo <= x.lo <= y.hi <= x.hi`.
pub fn hom_dim(x: Interval, y: Interval) -> usize {
    usize::from(y.lo <= x.lo && x.lo <= y.hi && y.hi <= x.hi)
}

/// `dim Ext^1(M[x], M[y])` from the projective resolution
/// `0 -> P(x.hi + 1) -> P(x.lo) -> M[x] -> 0`.
///
/// `Ext^1(M[x], Y)` is the cokernel of `Hom(P(x.lo), Y) -> Hom(P(x.hi+1), Y)`,
/// i.e. of the structure map `Y_{x.lo} -> Y_{x.hi+1}`.
pub fn ext1_dim(x: Interval, y: Interval) -> usize {
    let next = x.hi + 1;
    if !y.contains(next) {
        return 0;
    }
    // Y_next is one-dimensional; the composite map is nonzero iff x.lo is in y too.
    usize::from(!y.contains(x.lo))
}

/// Quiver representation of `A_n` (linear orientation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    dims: Vec<usize>,
    /// `maps[i]` is the map at arrow `i+1 -> i+2` (0-based storage), shaped
    /// `dims[i+1] x dims[i]`.
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(field: Field, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        assert!(!dims.is_empty());
        assert_eq!(maps.len(), dims.len() - 1, "one map per arrow");
        for (i, m) in maps.iter().enumerate() {
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[i + 1], dims[i]),
                "map at arrow {} has the wrong shape",
                i + 1
            );
        }
        Representation { field, dims, maps }
    }

    pub fn zero(field: Field, n: usize) -> Self {
        let dims = vec![0; n];
        let maps = (1..n).map(|_| Matrix::zeros(field, 0, 0)).collect();
        Representation { field, dims, maps }
    }

    pub fn interval(field: Field, n: usize, x: Interval) -> Self {
        assert!(x.hi <= n);
        let dims: Vec<usize> = (1..=n).map(|v| usize::from(x.contains(v))).collect();
        let maps = (0..n - 1)
            .map(|i| {
                let mut m = Matrix::zeros(field, dims[i + 1], dims[i]);
                if dims[i] == 1 && dims[i + 1] == 1 {
                    m.set(0, 0, 1);
                }
                m
            })
            .collect();
        Representation { field, dims, maps }
    }

    pub fn n(&self) -> usize {
        self.dims.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimension at 1-based vertex `v`.
    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Map at the arrow `v -> v+1`.
    pub fn arrow(&self, v: usize) -> &Matrix {
        &self.maps[v - 1]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Composite `V_a -> V_b` for `a <= b`.
    pub fn composite(&self, a: usize, b: usize) -> Matrix {
        assert!(a <= b);
        let mut m = Matrix::identity(self.field, self.dim_at(a));
        for v in a..b {
            m = self.arrow(v).mul(&m);
        }
        m
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.n(), other.n());
        let f = self.field;
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = (0..self.n() - 1)
            .map(|i| {
                let mut m = Matrix::zeros(f, dims[i + 1], dims[i]);
                let (a, b) = (&self.maps[i], &other.maps[i]);
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        m.set(r, c, a.get(r, c));
                    }
                }
                for r in 0..b.rows() {
                    for c in 0..b.cols() {
                        m.set(a.rows() + r, a.cols() + c, b.get(r, c));
                    }
                }
                m
            })
            .collect();
        Representation {
            field: f,
            dims,
            maps,
        }
    }
}

/// Multiset of intervals in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ModuleObject {
    summands: Vec<Interval>,
}

impl ModuleObject {
    pub fn new(mut summands: Vec<Interval>) -> Self {
        summands.sort();
        ModuleObject { summands }
    }

    pub fn summands(&self) -> &[Interval] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn union(&self, other: &ModuleObject) -> ModuleObject {
        let mut s = self.summands.clone();
        s.extend_from_slice(&other.summands);
        ModuleObject::new(s)
    }

    pub fn dim_vector(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for x in &self.summands {
            for v in x.lo..=x.hi {
                d[v - 1] += 1;
            }
        }
        d
    }
}

/// `dim Hom(X, Y)` as the solution space of the commuting-square equations
/// `Y_i f_i = f_{i+1} X_i`, computed by a kernel over the full unknown set.
pub fn hom_dim_oracle(x: &Representation, y: &Representation) -> usize {
    assert_eq!(x.n(), y.n());
    let f = x.field();
    let n = x.n();
    // Unknown f_v is dim Y_v x dim X_v, stored row-major at offset[v].
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let unknowns = offset[n];
    if unknowns == 0 {
        return 0;
    }
    let mut eqs: Vec<Vec<u32>> = Vec::new();
    for v in 0..n - 1 {
        let (xa, ya) = (&x.maps[v], &y.maps[v]);
        let (dx0, dx1, dy0, dy1) = (x.dims[v], x.dims[v + 1], y.dims[v], y.dims[v + 1]);
        // Entry (r, c) of  ya * f_v - f_{v+1} * xa, r < dy1, c < dx0.
        for r in 0..dy1 {
            for c in 0..dx0 {
                let mut eq = vec![0; unknowns];
                for k in 0..dy0 {
                    let coef = ya.get(r, k);
                    if coef != 0 {
                        let idx = offset[v] + k * dx0 + c;
                        eq[idx] = f.add(eq[idx], coef);
                    }
                }
                for k in 0..dx1 {
                    let coef = xa.get(k, c);
                    if coef != 0 {
                        let idx = offset[v + 1] + r * dx1 + k;
                        eq[idx] = f.sub(eq[idx], coef);
                    }
                }
                eqs.push(eq);
            }
        }
    }
    if eqs.is_empty() {
        return unknowns;
    }
    let rows: Vec<Vec<i64>> = eqs
        .into_iter()
        .map(|e| e.into_iter().map(i64::from).collect())
        .collect();
    kernel_basis(&Matrix::from_rows(f, &rows)).len()
}

/// `dim Ext^1(M[x], Y)` for an arbitrary representation `Y`, via the
/// projective resolution of the interval.
pub fn ext1_dim_rep(x: Interval, y: &Representation) -> usize {
    let next = x.hi + 1;
    if next > y.n() {
        return 0;
    }
    let comp = y.composite(x.lo, next);
    y.dim_at(next) - rank(&comp)
}

/// Interval decomposition by the rank formula
/// `m[a,b] = r(a,b) - r(a-1,b) - r(a,b+1) + r(a-1,b+1)`.
pub fn decompose(r: &Representation) -> ModuleObject {
    let n = r.n();
    let mut ranks = vec![vec![0i64; n + 2]; n + 2];
    for a in 1..=n {
        for b in a..=n {
            ranks[a][b] = rank(&r.composite(a, b)) as i64;
        }
    }
    let rk = |a: usize, b: usize| -> i64 {
        if a == 0 || b > n || a > b {
            0
        } else {
            ranks[a][b]
        }
    };
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            let m = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1);
            assert!(m >= 0, "negative multiplicity in rank formula");
            for _ in 0..m {
                out.push(Interval { lo: a, hi: b });
            }
        }
    }
    ModuleObject::new(out)
}

fn tau_table(n: usize) -> HashMap<Interval, Interval> {
    static CACHE: OnceLock<Mutex<HashMap<usize, HashMap<Interval, Interval>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    // For each non-projective x the AR translate is the unique interval t with
    // dim Ext^1(x, y) = dim Hom(y, t) for every y.
    let all = Interval::all(n);
    let mut table = HashMap::new();
    for &x in &all {
        if x.is_projective(n) {
            continue;
        }
        let matches: Vec<Interval> = all
            .iter()
            .copied()
            .filter(|&t| all.iter().all(|&y| ext1_dim(x, y) == hom_dim(y, t)))
            .collect();
        assert_eq!(matches.len(), 1, "AR duality does not pin down tau({x})");
        table.insert(x, matches[0]);
    }
    cache.lock().unwrap().insert(n, table.clone());
    table
}

/// AR translate; `None` exactly for projectives.
pub fn tau(x: Interval, n: usize) -> Option<Interval> {
    tau_table(n).get(&x).copied()
}

/// Inverse AR translate; `None` exactly for injectives.
pub fn tau_inv(x: Interval, n: usize) -> Option<Interval> {
    tau_table(n).iter().find(|(_, &t)| t == x).map(|(&k, _)| k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2)
    }

    #[test]
    fn hom_dim_examples() {
        let n = 3;
        let rep = |x| Representation::interval(f2(), n, x);
        let (s2, m12) = (Interval::new(2, 2), Interval::new(1, 2));
        assert_eq!(hom_dim(s2, m12), 1);
        assert_eq!(hom_dim_oracle(&rep(s2), &rep(m12)), 1);
        assert_eq!(hom_dim(m12, s2), 0);
        assert_eq!(hom_dim_oracle(&rep(m12), &rep(s2)), 0);
        for x in Interval::all(n) {
            assert_eq!(hom_dim(x, x), 1);
            assert_eq!(hom_dim_oracle(&Representation::zero(f2(), n), &rep(x)), 0);
        }
    }

    #[test]
    fn projective_convention() {
        // Hom(P(i), M) = M_i for every interval M.
        let n = 5;
        for i in 1..=n {
            let p = Interval::projective(i, n);
            assert_eq!(p.name(n), format!("P({i})"));
            for m in Interval::all(n) {
                assert_eq!(hom_dim(p, m), usize::from(m.contains(i)));
            }
        }
    }

    #[test]
    fn ext_examples() {
        let n = 3;
        let s2 = Interval::simple(2);
        let p3 = Interval::projective(3, n);
        assert_eq!(ext1_dim(s2, p3), 1);
        for x in Interval::all(n) {
            assert_eq!(ext1_dim(x, x), 0);
            for i in 1..=n {
                assert_eq!(ext1_dim(Interval::projective(i, n), x), 0);
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let f = f2();
        let id = Representation::new(f, vec![1, 1], vec![Matrix::identity(f, 1)]);
        assert_eq!(decompose(&id).summands(), &[Interval::new(1, 2)]);
        let zero = Representation::new(f, vec![1, 1], vec![Matrix::zeros(f, 1, 1)]);
        assert_eq!(
            decompose(&zero).summands(),
            &[Interval::new(1, 1), Interval::new(2, 2)]
        );
        let sum = Representation::interval(f, 3, Interval::new(1, 3))
            .direct_sum(&Representation::interval(f, 3, Interval::new(2, 2)));
        assert_eq!(
            decompose(&sum).summands(),
            &[Interval::new(1, 3), Interval::new(2, 2)]
        );
    }

    #[test]
    fn tau_examples() {
        let n = 3;
        assert_eq!(tau(Interval::projective(2, n), n), None);
        assert_eq!(tau(Interval::simple(2), n), Some(Interval::simple(3)));
        // tau S(1) = S(2): the AR sequence 0 -> S(2) -> I(2) -> S(1) -> 0.
        assert_eq!(tau(Interval::simple(1), n), Some(Interval::simple(2)));
        for x in Interval::all(n) {
            if let Some(t) = tau(x, n) {
                assert_eq!(tau_inv(t, n), Some(x));
            }
        }
    }
}
