//! Fixed inputs shared by the benchmarks.

use logmod::lattice::ivec;
use logmod::{AffineMonoid, Cone, IntMatrix, IntVector, MonoidHom, MonoidIdeal};

fn vs(rows: &[&[i64]]) -> Vec<IntVector> {
    rows.iter().map(|r| ivec(r)).collect()
}

/// The cone spanned by `(1,0)` and `(1,k)`.
pub fn thin_cone(k: i64) -> Cone {
    Cone::from_generators(2, &vs(&[&[1, 0], &[1, k]])).expect("cone")
}

/// A simplicial 3-cone with a large fundamental parallelepiped.
pub fn wide_cone() -> Cone {
    Cone::from_generators(3, &vs(&[&[1, 0, 0], &[0, 1, 0], &[5, 7, 11]])).expect("cone")
}

/// `(a, b) -> (a, a + b, b)` from `N^2` to `N^3`: exact, not integral.
pub fn plane_into_space() -> MonoidHom {
    let m = IntMatrix::from_i64(&[&[1, 0], &[1, 1], &[0, 1]]);
    MonoidHom::new(&AffineMonoid::free(2), &AffineMonoid::free(3), &m).expect("hom")
}

/// `N^2` into `N^2` with `(1,-1)` adjoined: not exact.
pub fn open_chart() -> MonoidHom {
    let q = AffineMonoid::free(2);
    let p = q.extend_fs(&vs(&[&[1, -1]])).expect("extension");
    MonoidHom::new(&q, &p, &IntMatrix::identity(2)).expect("hom")
}

/// A non-simplicial saturated monoid of rank 3 and an ideal in it.
pub fn cone_over_square() -> (AffineMonoid, MonoidIdeal) {
    let q = AffineMonoid::new(3, &vs(&[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1], &[0, 1, 1]]))
        .expect("monoid")
        .saturate();
    let k = MonoidIdeal::new(&q, &vs(&[&[2, 1, 0], &[1, 2, 1], &[1, 1, 0], &[3, 0, 1]])).expect("ideal");
    (q, k)
}
