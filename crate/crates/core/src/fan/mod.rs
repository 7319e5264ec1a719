//! Fans, integral piecewise-linear functions on them, and the passage
//! between fans and monoids.

mod pl;
mod smooth;

pub use pl::{
    ideal_from_pl, pl_from_ideal, projective_support, pullback_pl, subdivide_by_pl, PLFunction,
};

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::{dot, Cone, IntMatrix, IntVector};
use crate::monoid::AffineMonoid;
use num_traits::Zero;

/// A fan, stored by its maximal cones in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fan {
    ambient_rank: usize,
    cones: Vec<Cone>,
}

/// Outcome of [`cones_map_onto`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntoReport {
    /// Every cone of the source maps onto a cone of the target.
    pub onto: bool,
    /// `dim τ - dim φ(τ)` for each maximal source cone, in fan order.
    pub fiber_dims: Vec<usize>,
    pub constant_fiber_dim: bool,
    /// The first source cone whose image is not a target cone.
    pub failure: Option<(Cone, Cone)>,
}

fn check_rank(n: usize, c: &Cone) -> Result<()> {
    if c.ambient_rank() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.ambient_rank(),
        });
    }
    Ok(())
}

/// Keeps the cones that are not faces of other cones; sorted.
fn maximal(cones: Vec<Cone>) -> Vec<Cone> {
    let set: BTreeSet<Cone> = cones.into_iter().collect();
    let all: Vec<Cone> = set.into_iter().collect();
    all.iter()
        .filter(|c| !all.iter().any(|d| d != *c && d.dim() > c.dim() && d.has_face(c)))
        .cloned()
        .collect()
}

impl Fan {
    /// The fan whose maximal cones are the maximal members of `cones`.
    pub fn new(n: usize, cones: Vec<Cone>) -> Result<Self> {
        for c in &cones {
            check_rank(n, c)?;
        }
        let cones = maximal(cones);
        for (i, a) in cones.iter().enumerate() {
            for b in &cones[i + 1..] {
                let meet = a.intersect(b)?;
                if !a.has_face(&meet) || !b.has_face(&meet) {
                    return Err(Error::InvalidFan(format!(
                        "cones {:?} and {:?} do not meet in a common face",
                        a.rays(),
                        b.rays()
                    )));
                }
            }
        }
        Ok(Self {
            ambient_rank: n,
            cones,
        })
    }

    pub fn from_cone(c: &Cone) -> Self {
        Self {
            ambient_rank: c.ambient_rank(),
            cones: vec![c.clone()],
        }
    }

    /// Whether `cones` satisfy the fan condition.
    pub fn validate(n: usize, cones: &[Cone]) -> bool {
        Self::new(n, cones.to_vec()).is_ok()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.cones
    }

    /// Every cone of the fan, ordered by dimension then canonically.
    pub fn all_cones(&self) -> Vec<Cone> {
        let set: BTreeSet<Cone> = self.cones.iter().flat_map(|c| c.faces()).collect();
        let mut v: Vec<Cone> = set.into_iter().collect();
        v.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        v
    }

    /// Primitive generators of the one-dimensional cones.
    pub fn rays(&self) -> Vec<IntVector> {
        let set: BTreeSet<IntVector> = self
            .cones
            .iter()
            .flat_map(|c| c.pointed_rays().to_vec())
            .collect();
        set.into_iter().collect()
    }

    pub fn dim(&self) -> usize {
        self.cones.iter().map(Cone::dim).max().unwrap_or(0)
    }

    pub fn support_contains(&self, v: &[crate::lattice::Int]) -> bool {
        self.cones.iter().any(|c| c.contains(v))
    }

    /// The cone of the fan containing `v` in its relative interior.
    pub fn cone_containing(&self, v: &[crate::lattice::Int]) -> Option<Cone> {
        self.all_cones()
            .into_iter()
            .find(|c| c.contains_in_relative_interior(v))
    }

    /// Whether the support of this fan contains that of `other`.
    pub fn support_covers(&self, other: &Fan) -> Result<bool> {
        for s in &other.cones {
            let pieces: Vec<Cone> = self
                .cones
                .iter()
                .map(|t| s.intersect(t))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|c| c.dim() == s.dim())
                .collect();
            if !covers(s, &pieces) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_support(&self, other: &Fan) -> Result<bool> {
        Ok(self.ambient_rank == other.ambient_rank
            && self.support_covers(other)?
            && other.support_covers(self)?)
    }

    /// Every cone lies in a cone of `coarse`, and the supports agree.
    pub fn refines(&self, coarse: &Fan) -> Result<bool> {
        let inside = self
            .cones
            .iter()
            .all(|c| coarse.cones.iter().any(|d| d.contains_cone(c)));
        Ok(inside && self.same_support(coarse)?)
    }

    /// Coarsest common refinement of two fans with the same support.
    pub fn common_refinement(&self, other: &Fan) -> Result<Fan> {
        if self.ambient_rank != other.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let mut cones = Vec::new();
        for a in &self.cones {
            for b in &other.cones {
                cones.push(a.intersect(b)?);
            }
        }
        Fan::new(self.ambient_rank, cones)
    }

    /// Star subdivision at `v`: every cone containing `v` is replaced by the
    /// cones spanned by `v` and its facets not containing `v`.
    pub fn star_subdivide(&self, v: &[crate::lattice::Int]) -> Result<Fan> {
        let v = crate::lattice::primitive(v);
        if v.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        let mut out = Vec::new();
        for c in &self.cones {
            if !c.contains(&v) || c.pointed_rays().contains(&v) {
                out.push(c.clone());
                continue;
            }
            if !c.is_pointed() {
                return Err(Error::HasLineality);
            }
            for f in c.faces().into_iter().filter(|f| f.dim() + 1 == c.dim()) {
                if f.contains(&v) {
                    continue;
                }
                let mut gens = f.rays();
                gens.push(v.clone());
                out.push(Cone::from_generators(self.ambient_rank, &gens)?);
            }
        }
        Fan::new(self.ambient_rank, out)
    }

    pub fn is_smooth(&self) -> bool {
        smooth::is_smooth(self)
    }

    /// A smooth refinement with the same support, by repeated star
    /// subdivision.
    pub fn resolve_smooth(&self) -> Result<Fan> {
        smooth::resolve_smooth(self)
    }

    /// The fan whose cones are the preimages of this fan's cones inside the
    /// cones of `src`, under `phi: src lattice -> this lattice`.
    pub fn pull_back(&self, phi: &IntMatrix, src: &Fan) -> Result<Fan> {
        let mut cones = Vec::new();
        for t in &src.cones {
            for s in &self.cones {
                cones.push(t.intersect(&s.preimage(phi)?)?);
            }
        }
        Fan::new(src.ambient_rank, cones)
    }
}

/// Whether the union of `pieces` equals `target`. The pieces must lie in
/// `target`, have its dimension and meet one another in common faces.
fn covers(target: &Cone, pieces: &[Cone]) -> bool {
    if pieces.is_empty() {
        return false;
    }
    let d = target.dim();
    if d == 0 {
        return true;
    }
    for p in pieces {
        for f in p.faces().into_iter().filter(|f| f.dim() + 1 == d) {
            let rays = f.rays();
            let on_boundary = target
                .facets()
                .iter()
                .any(|n| rays.iter().all(|r| dot(n, r).is_zero()));
            if on_boundary {
                continue;
            }
            let shared = pieces.iter().filter(|q| *q != p && q.has_face(&f)).count();
            if shared != 1 {
                return false;
            }
        }
    }
    true
}

/// Checks that `phi` carries each cone of `src` onto a cone of `dst`.
pub fn cones_map_onto(phi: &IntMatrix, src: &Fan, dst: &Fan) -> Result<OntoReport> {
    if phi.cols() != src.ambient_rank || phi.rows() != dst.ambient_rank {
        return Err(Error::DimensionMismatch {
            expected: src.ambient_rank,
            found: phi.cols(),
        });
    }
    for c in &src.cones {
        let img = c.image(phi)?;
        let image_fan = Fan::from_cone(&img);
        if !dst.support_covers(&image_fan)? {
            return Err(Error::ImageEscapesSupport);
        }
    }
    let targets: BTreeSet<Cone> = dst.all_cones().into_iter().collect();
    let mut failure = None;
    for c in src.all_cones() {
        let img = c.image(phi)?;
        if !targets.contains(&img) {
            failure = Some((c, img));
            break;
        }
    }
    let fiber_dims: Vec<usize> = src
        .cones
        .iter()
        .map(|c| c.image(phi).map(|i| c.dim() - i.dim()))
        .collect::<Result<_>>()?;
    let constant_fiber_dim = fiber_dims.windows(2).all(|w| w[0] == w[1]);
    Ok(OntoReport {
        onto: failure.is_none(),
        fiber_dims,
        constant_fiber_dim,
        failure,
    })
}

/// `τ^∨ ∩ M` for the lattice `M` with basis `lattice`.
pub fn chart_of_cone(tau: &Cone, lattice: &[IntVector]) -> Result<AffineMonoid> {
    AffineMonoid::from_cone(&tau.dual(), lattice)
}

#[cfg(test)]
mod tests;
