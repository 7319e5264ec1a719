//! Exact integer linear algebra and rational polyhedral cones.
//!
//! Everything here works over arbitrary-precision integers; there is no
//! floating point anywhere in the crate.

mod cone;
mod dd;
mod hilbert;
mod matrix;
mod normal_form;

pub use cone::Cone;
pub use hilbert::{fundamental_parallelepiped, hilbert_basis, triangulate};
pub use matrix::IntMatrix;
pub use normal_form::{
    coker_invariants, hnf_rows, kernel_basis, lattice_coordinates, primitive_and_extend,
    rank_of, reduce_modulo, row_lattice_basis, saturation_basis, snf, solve_linear, Snf,
    Solution,
};

pub(crate) use hilbert::{parallelepiped_with_coefficients, saturated_generators};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Arbitrary-precision integer used for every coordinate.
pub type Int = BigInt;
/// A lattice vector.
pub type IntVector = Vec<Int>;

/// Builds a vector from machine integers.
pub fn ivec(xs: &[i64]) -> IntVector {
    xs.iter().map(|&x| Int::from(x)).collect()
}

pub fn zero_vector(n: usize) -> IntVector {
    vec![Int::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> IntVector {
    let mut v = zero_vector(n);
    v[i] = Int::from(1);
    v
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[Int], b: &[Int]) -> IntVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Int], b: &[Int]) -> IntVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Int]) -> IntVector {
    a.iter().map(|x| -x).collect()
}

pub fn scale(c: &Int, a: &[Int]) -> IntVector {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// gcd of the coordinates (0 for the zero vector).
pub fn content(a: &[Int]) -> Int {
    a.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides out the content; the zero vector is returned unchanged.
pub fn primitive(a: &[Int]) -> IntVector {
    let g = content(a);
    if g.is_zero() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &g).collect()
}

/// Sorts lexicographically and removes duplicates.
pub fn canonical_set(mut vs: Vec<IntVector>) -> Vec<IntVector> {
    vs.sort();
    vs.dedup();
    vs
}
