//! Smoothness and resolution by star subdivisions.

use num_traits::{One, Signed, Zero};

use super::Fan;
use crate::error::{Error, Result};
use crate::lattice::{parallelepiped_with_coefficients, snf, Cone, Int, IntMatrix, IntVector};

/// Index of the rays of a simplicial pointed cone in their saturated span.
fn multiplicity(c: &Cone) -> Int {
    let rays = c.pointed_rays();
    if rays.is_empty() {
        return Int::one();
    }
    let m = IntMatrix::from_rows(c.ambient_rank(), rays).expect("rays of ambient length");
    snf(&m).diagonal().into_iter().map(|d| d.abs()).product()
}

fn cone_is_smooth(c: &Cone) -> bool {
    c.is_pointed() && c.is_simplicial() && multiplicity(c).is_one()
}

pub(super) fn is_smooth(f: &Fan) -> bool {
    f.cones.iter().all(cone_is_smooth)
}

pub(super) fn resolve_smooth(f: &Fan) -> Result<Fan> {
    if f.cones.iter().any(|c| !c.is_pointed()) {
        return Err(Error::HasLineality);
    }
    let mut fan = f.clone();
    loop {
        let cones = fan.all_cones();
        if let Some(c) = cones.iter().find(|c| !c.is_simplicial()) {
            let v = ray_sum(c);
            fan = fan.star_subdivide(&v)?;
            continue;
        }
        let Some(c) = cones.iter().find(|c| !multiplicity(c).is_one()) else {
            return Ok(fan);
        };
        let v = subdivision_point(c);
        fan = fan.star_subdivide(&v)?;
    }
}

fn ray_sum(c: &Cone) -> IntVector {
    let mut v = vec![Int::zero(); c.ambient_rank()];
    for r in c.pointed_rays() {
        for (a, b) in v.iter_mut().zip(r) {
            *a += b;
        }
    }
    v
}

/// Nonzero parallelepiped point with the smallest coefficient sum, ties
/// broken lexicographically.
fn subdivision_point(c: &Cone) -> IntVector {
    parallelepiped_with_coefficients(c.ambient_rank(), c.pointed_rays())
        .into_iter()
        .filter(|(p, _)| p.iter().any(|x| !x.is_zero()))
        .map(|(p, lambda)| (lambda.iter().sum::<Int>(), p))
        .min()
        .map(|(_, p)| p)
        .expect("a cone of multiplicity above one has interior points")
}
