//! Brute-force oracles on small machine integers, sharing no code with the
//! library beyond type conversions.

use std::collections::HashMap;

use logmod::{Int, IntVector};

pub type V = Vec<i64>;

pub fn small(v: &[Int]) -> V {
    v.iter()
        .map(|x| i64::try_from(x).expect("oracle inputs are small"))
        .collect()
}

pub fn big(v: &[i64]) -> IntVector {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[i64], b: &[i64]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn apply(rows: &[V], v: &[i64]) -> V {
    rows.iter().map(|r| dot(r, v)).collect()
}

/// Membership in the monoid generated by nonnegative, nonzero vectors, by
/// depth-first search on the remaining difference.
pub struct Span {
    gens: Vec<V>,
    memo: HashMap<V, bool>,
}

impl Span {
    pub fn new(gens: Vec<V>) -> Self {
        assert!(gens.iter().all(|g| g.iter().all(|&x| x >= 0) && g.iter().any(|&x| x > 0)));
        Self {
            gens,
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, v: &[i64]) -> bool {
        if v.iter().any(|&x| x < 0) {
            return false;
        }
        if v.iter().all(|&x| x == 0) {
            return true;
        }
        if let Some(&b) = self.memo.get(v) {
            return b;
        }
        let mut found = false;
        for i in 0..self.gens.len() {
            let rest = sub(v, &self.gens[i]);
            if self.contains(&rest) {
                found = true;
                break;
            }
        }
        self.memo.insert(v.to_vec(), found);
        found
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Integer row echelon basis of the lattice spanned by `gens`.
pub struct Lattice {
    rows: Vec<V>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn new(n: usize, gens: &[V]) -> Self {
        let mut pending: Vec<V> = gens.to_vec();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..n {
            let mut pivot: Option<V> = None;
            let mut rest = Vec::new();
            for r in pending.drain(..) {
                if r[col] == 0 {
                    rest.push(r);
                    continue;
                }
                pivot = Some(match pivot {
                    None => r,
                    Some(p) => {
                        // combine so that the pivot column becomes the gcd
                        let (g, x, y) = ext_gcd(p[col], r[col]);
                        let new: V = p.iter().zip(&r).map(|(a, b)| x * a + y * b).collect();
                        let (pa, ra) = (p[col] / g, r[col] / g);
                        let leftover: V = p.iter().zip(&r).map(|(a, b)| ra * a - pa * b).collect();
                        rest.push(leftover);
                        new
                    }
                });
            }
            pending = rest.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect();
            if let Some(p) = pivot {
                rows.push(p);
                pivots.push(col);
            }
        }
        Self { rows, pivots }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut v = v.to_vec();
        for (r, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c] % r[c] != 0 {
                return false;
            }
            let q = v[c] / r[c];
            v = v.iter().zip(r).map(|(a, b)| a - q * b).collect();
        }
        v.iter().all(|&x| x == 0)
    }
}

/// Determinant by cofactor expansion.
pub fn det(m: &[V]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<V> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

/// Number of rays added by the minimal resolution of `cone((1,0),(1,k))`:
/// the length of the Hirzebruch-Jung continued fraction of `k/(k-1)`.
pub fn hirzebruch_jung_count(k: i64) -> usize {
    let (mut n, mut q) = (k, k - 1);
    let mut len = 0;
    while q > 0 {
        let c = (n + q - 1) / q;
        len += 1;
        let r = c * q - n;
        n = q;
        q = r;
    }
    len
}

/// Kato's condition for `h: N^a -> N^b` at `(a1, a2, b1, b2)`: some
/// `a3, a4 ∈ N^a`, `b ∈ N^b` with `b1 = h(a3) + b`, `b2 = h(a4) + b` and
/// `a1 + a3 = a2 + a4`. Injectivity of `h` bounds the search.
pub fn kato_resolvable(h: &[V], a1: &[i64], a2: &[i64], b1: &[i64], b2: &[i64]) -> bool {
    let a = a1.len();
    let limit = b1.iter().chain(b2).copied().max().unwrap_or(0).max(0);
    let mut a3 = vec![0i64; a];
    loop {
        let img = apply(h, &a3);
        let b = sub(b1, &img);
        if b.iter().all(|&x| x >= 0) {
            let a4: V = a1.iter().zip(a2).zip(&a3).map(|((x, y), z)| x - y + z).collect();
            if a4.iter().all(|&x| x >= 0) && sub(b2, &apply(h, &a4)) == b {
                return true;
            }
        }
        // next a3 in the box [0, limit]^a
        let mut i = 0;
        loop {
            if i == a {
                return false;
            }
            a3[i] += 1;
            if a3[i] <= limit {
                break;
            }
            a3[i] = 0;
            i += 1;
        }
    }
}
