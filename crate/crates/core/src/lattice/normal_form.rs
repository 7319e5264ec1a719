//! Hermite and Smith normal forms and what they buy: kernels, lattice
//! bases, integer solving, cokernels and basis completion.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{is_zero, primitive, Int, IntMatrix, IntVector};
use crate::error::{Error, Result};

/// Row-style Hermite normal form: returns `(H, U)` with `U·A = H`, `U`
/// unimodular, `H` in row echelon form with positive pivots and the entries
/// above each pivot reduced into `[0, pivot)`. Zero rows come last.
pub fn hnf_rows(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        loop {
            let pivot = (row..m)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&i, &j| h[(i, col)].abs().cmp(&h[(j, col)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(p, row);
            u.swap_rows(p, row);
            let mut clean = true;
            for i in row + 1..m {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(row, col)]);
                h.add_row_multiple(i, row, &-&q);
                u.add_row_multiple(i, row, &-&q);
                if !h[(i, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        for i in 0..row {
            let q = h[(i, col)].div_floor(&h[(row, col)]);
            h.add_row_multiple(i, row, &-&q);
            u.add_row_multiple(i, row, &-&q);
        }
        row += 1;
    }
    (h, u)
}

/// Canonical (Hermite) basis of the lattice generated by `vectors` in `Z^n`.
pub fn row_lattice_basis(n: usize, vectors: &[IntVector]) -> Vec<IntVector> {
    let a = IntMatrix::from_rows(n, vectors).expect("vectors of length n");
    let (h, _) = hnf_rows(&a);
    h.row_vectors().into_iter().filter(|r| !is_zero(r)).collect()
}

/// Canonical basis of the saturated lattice `{x : A·x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> Vec<IntVector> {
    let n = a.cols();
    let (h, u) = hnf_rows(&a.transpose());
    let raw: Vec<IntVector> = (0..n)
        .filter(|&i| is_zero(h.row(i)))
        .map(|i| u.row(i).to_vec())
        .collect();
    row_lattice_basis(n, &raw)
}

/// Canonical representative of `v` modulo the lattice with Hermite basis `basis`.
pub fn reduce_modulo(v: &[Int], basis: &[IntVector]) -> IntVector {
    let mut v = v.to_vec();
    for b in basis {
        let Some(p) = b.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let q = v[p].div_floor(&b[p]);
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &q * y;
            }
        }
    }
    v
}

/// Rank over the rationals of a list of vectors.
pub fn rank_of(vectors: &[IntVector]) -> usize {
    let mut rows: Vec<IntVector> = vectors.iter().filter(|v| !is_zero(v)).cloned().collect();
    let Some(n) = rows.first().map(|r| r.len()) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let a = pivot_row[col].clone();
            let b = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &a - y * &b;
            }
            *row = primitive(row);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of `span(vectors) ∩ Z^n`.
pub fn saturation_basis(n: usize, vectors: &[IntVector]) -> Vec<IntVector> {
    let a = IntMatrix::from_rows(n, vectors).expect("vectors of length n");
    let orth = kernel_basis(&a);
    let b = IntMatrix::from_rows(n, &orth).expect("kernel vectors of length n");
    kernel_basis(&b)
}

/// Coordinates of `v` in the lattice basis `basis` (rows), if `v` lies in it.
pub fn lattice_coordinates(basis: &[IntVector], v: &[Int]) -> Option<IntVector> {
    let n = v.len();
    let b = IntMatrix::from_columns(n, basis).ok()?;
    solve_linear(&b, v).ok().flatten().map(|s| s.particular)
}

/// Smith normal form `D = U·A·V` with unimodular witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// The nonzero diagonal entries, in order.
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }
}

fn min_abs_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            if d[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn snf(a: &IntMatrix) -> Snf {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_abs_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &-&q);
                u.add_row_multiple(i, t, &-&q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &-&q);
                v.add_col_multiple(j, t, &-&q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // move the smallest leftover in row/column t onto the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    if !d[(i, t)].is_zero() && d[(i, t)].abs() < d[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !d[(t, j)].is_zero() && d[(t, j)].abs() < d[best].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    d.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                } else if best.1 != t {
                    d.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            let pivot = d[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    d.add_row_multiple(t, i, &Int::one());
                    u.add_row_multiple(t, i, &Int::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Snf { d, u, v }
}

/// A particular integer solution together with a basis of the integer kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: IntVector,
    pub kernel: Vec<IntVector>,
}

/// Solves `A·x = b` over the integers.
pub fn solve_linear(a: &IntMatrix, b: &[Int]) -> Result<Option<Solution>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let s = snf(a);
    let c = s.u.apply(b);
    let diag = s.diagonal();
    let r = diag.len();
    if c[r..].iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let mut y = vec![Int::zero(); a.cols()];
    for i in 0..r {
        let (q, rem) = c[i].div_rem(&diag[i]);
        if !rem.is_zero() {
            return Ok(None);
        }
        y[i] = q;
    }
    let kernel = kernel_basis(a);
    let particular = reduce_modulo(&s.v.apply(&y), &kernel);
    Ok(Some(Solution { particular, kernel }))
}

/// Free rank and invariant factors (> 1) of `Z^rows / colspan(A)`.
pub fn coker_invariants(a: &IntMatrix) -> (usize, Vec<Int>) {
    let s = snf(a);
    let diag = s.diagonal();
    let free = a.rows() - diag.len();
    (free, diag.into_iter().filter(|d| !d.is_one()).collect())
}

/// Primitive vector along `v` and a unimodular matrix with it as first column.
///
/// When some coordinate of the primitive vector is ±1 the remaining columns
/// are the standard basis vectors other than that coordinate's; otherwise
/// the completion comes from the Hermite reduction of the column.
pub fn primitive_and_extend(v: &[Int]) -> Result<(IntVector, IntMatrix)> {
    if is_zero(v) {
        return Err(Error::ZeroVector);
    }
    let n1 = primitive(v);
    let n = n1.len();
    if let Some(i) = n1.iter().position(|x| x.abs().is_one()) {
        let mut cols = vec![n1.clone()];
        cols.extend((0..n).filter(|&j| j != i).map(|j| super::unit_vector(n, j)));
        return Ok((n1, IntMatrix::from_columns(n, &cols)?));
    }
    let col = IntMatrix::from_columns(n, std::slice::from_ref(&n1))?;
    let (_, u) = hnf_rows(&col);
    // u is unimodular, so its Hermite form is the identity and the
    // transform is its inverse
    let (_, u_inv) = hnf_rows(&u);
    debug_assert_eq!(u_inv.column(0), n1);
    Ok((n1, u_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;

    fn check_snf(a: &IntMatrix) {
        let s = snf(a);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        assert_eq!(s.u.mul(a).unwrap().mul(&s.v).unwrap(), s.d);
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_examples() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        check_snf(&a);
        assert_eq!(snf(&a).d, IntMatrix::from_i64(&[&[1, 0], &[0, 6]]));

        let id = IntMatrix::identity(3);
        let s = snf(&id);
        assert_eq!(s.d, id);
        assert_eq!(s.u, id);
        assert_eq!(s.v, id);

        let row = IntMatrix::from_i64(&[&[2, 4]]);
        check_snf(&row);
        assert_eq!(snf(&row).d, IntMatrix::from_i64(&[&[2, 0]]));

        check_snf(&IntMatrix::from_i64(&[&[4, 6, 8], &[6, 9, 12], &[2, 5, 7]]));
        check_snf(&IntMatrix::zeros(2, 3));
    }

    #[test]
    fn solve_examples() {
        let a = IntMatrix::from_i64(&[&[2]]);
        assert_eq!(solve_linear(&a, &ivec(&[3])).unwrap(), None);

        let a = IntMatrix::from_i64(&[&[1, 1]]);
        let s = solve_linear(&a, &ivec(&[2])).unwrap().unwrap();
        assert_eq!(a.apply(&s.particular), ivec(&[2]));
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(a.apply(&s.kernel[0]), ivec(&[0]));
        assert_eq!(primitive(&s.kernel[0]), s.kernel[0]);

        let b = ivec(&[5, -7, 2]);
        let s = solve_linear(&IntMatrix::identity(3), &b).unwrap().unwrap();
        assert_eq!(s.particular, b);
        assert!(s.kernel.is_empty());

        assert!(solve_linear(&IntMatrix::identity(2), &ivec(&[1])).is_err());
    }

    #[test]
    fn coker_examples() {
        assert_eq!(coker_invariants(&IntMatrix::identity(2)), (0, vec![]));
        assert_eq!(
            coker_invariants(&IntMatrix::from_i64(&[&[2, 0], &[0, 1]])),
            (0, vec![Int::from(2)])
        );
        assert_eq!(coker_invariants(&IntMatrix::from_i64(&[&[1], &[1]])), (1, vec![]));
    }

    #[test]
    fn primitive_extension_examples() {
        let (n1, b) = primitive_and_extend(&ivec(&[2, 0])).unwrap();
        assert_eq!(n1, ivec(&[1, 0]));
        assert_eq!(b, IntMatrix::identity(2));

        let (n1, b) = primitive_and_extend(&ivec(&[2, 3])).unwrap();
        assert_eq!(n1, ivec(&[2, 3]));
        assert_eq!(b.column(0), n1);
        assert!(b.is_unimodular());

        let (_, b) = primitive_and_extend(&ivec(&[1, 1, 1])).unwrap();
        assert_eq!(b, IntMatrix::from_i64(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]]));

        let (n1, b) = primitive_and_extend(&ivec(&[6, 10, 15])).unwrap();
        assert_eq!(n1, ivec(&[6, 10, 15]));
        assert_eq!(b.column(0), n1);
        assert!(b.is_unimodular());

        assert_eq!(primitive_and_extend(&ivec(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn kernel_and_saturation() {
        let a = IntMatrix::from_i64(&[&[2, 4, 6]]);
        let k = kernel_basis(&a);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_zero(&a.apply(v)));
        }
        let sat = saturation_basis(2, &[ivec(&[2, 2])]);
        assert_eq!(sat, vec![ivec(&[1, 1])]);
        assert_eq!(rank_of(&[ivec(&[1, 2]), ivec(&[2, 4]), ivec(&[0, 0])]), 1);
    }

    #[test]
    fn reduction_is_canonical() {
        let basis = row_lattice_basis(2, &[ivec(&[2, 0]), ivec(&[1, 1])]);
        let a = reduce_modulo(&ivec(&[5, 3]), &basis);
        let b = reduce_modulo(&ivec(&[1, 1]), &basis);
        assert_eq!(a, b);
        assert_eq!(lattice_coordinates(&basis, &ivec(&[3, 1])).is_some(), true);
        assert_eq!(lattice_coordinates(&basis, &ivec(&[1, 0])), None);
    }
}
