use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::dd::dual_description;
use super::{canonical_set, dot, neg, Int, IntMatrix, IntVector};
use crate::error::{Error, Result};

/// A rational polyhedral cone in canonical double-description form.
///
/// The generator side is a Hermite basis of the lineality space plus the
/// extreme rays of the pointed part orthogonal to it; the inequality side is
/// the same data for the dual cone. Two cones are equal iff their canonical
/// forms are structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ambient_rank: usize,
    lineality: Vec<IntVector>,
    pointed_rays: Vec<IntVector>,
    equations: Vec<IntVector>,
    facets: Vec<IntVector>,
}

fn with_negatives(basis: &[IntVector]) -> Vec<IntVector> {
    basis.iter().flat_map(|b| [b.clone(), neg(b)]).collect()
}

fn check_len(n: usize, vs: &[IntVector]) -> Result<()> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

impl Cone {
    /// The cone generated by `gens` (the zero cone when empty).
    pub fn from_generators(n: usize, gens: &[IntVector]) -> Result<Self> {
        check_len(n, gens)?;
        let dual = dual_description(n, gens);
        let dual_gens: Vec<IntVector> = with_negatives(&dual.lineality)
            .into_iter()
            .chain(dual.rays.iter().cloned())
            .collect();
        let primal = dual_description(n, &dual_gens);
        Ok(Self {
            ambient_rank: n,
            lineality: primal.lineality,
            pointed_rays: primal.rays,
            equations: dual.lineality,
            facets: dual.rays,
        })
    }

    /// The cone `{x : <f, x> >= 0 for every f in ineqs}`.
    pub fn from_inequalities(n: usize, ineqs: &[IntVector]) -> Result<Self> {
        Ok(Self::from_generators(n, ineqs)?.dual())
    }

    pub fn zero(n: usize) -> Self {
        Self::from_generators(n, &[]).expect("empty generator list")
    }

    pub fn full_space(n: usize) -> Self {
        Self::zero(n).dual()
    }

    /// The nonnegative orthant.
    pub fn orthant(n: usize) -> Self {
        let gens: Vec<IntVector> = (0..n).map(|i| super::unit_vector(n, i)).collect();
        Self::from_generators(n, &gens).expect("unit vectors")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Canonical generating rays: `±` the lineality basis together with the
    /// pointed extreme rays, sorted.
    pub fn rays(&self) -> Vec<IntVector> {
        canonical_set(
            with_negatives(&self.lineality)
                .into_iter()
                .chain(self.pointed_rays.iter().cloned())
                .collect(),
        )
    }

    /// Canonical inequalities (rays of the dual cone).
    pub fn ineqs(&self) -> Vec<IntVector> {
        canonical_set(
            with_negatives(&self.equations)
                .into_iter()
                .chain(self.facets.iter().cloned())
                .collect(),
        )
    }

    pub fn lineality_basis(&self) -> &[IntVector] {
        &self.lineality
    }

    /// Extreme rays of the pointed part.
    pub fn pointed_rays(&self) -> &[IntVector] {
        &self.pointed_rays
    }

    /// Hermite basis of the integer functionals vanishing on the span.
    pub fn equations(&self) -> &[IntVector] {
        &self.equations
    }

    /// Facet normals, taken inside the span.
    pub fn facets(&self) -> &[IntVector] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_zero_cone(&self) -> bool {
        self.dim() == 0
    }

    /// A pointed cone whose extreme ray count equals its dimension.
    pub fn is_simplicial(&self) -> bool {
        self.is_pointed() && self.pointed_rays.len() == self.dim()
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        v.len() == self.ambient_rank
            && self.equations.iter().all(|e| dot(e, v).is_zero())
            && self.facets.iter().all(|f| !dot(f, v).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays().iter().all(|r| self.contains(r))
    }

    /// Whether `v` lies in the relative interior.
    pub fn contains_in_relative_interior(&self, v: &[Int]) -> bool {
        self.contains(v) && self.facets.iter().all(|f| dot(f, v).is_positive())
    }

    /// Sum of the generators; a point of the relative interior.
    pub fn interior_point(&self) -> IntVector {
        let mut s = vec![Int::zero(); self.ambient_rank];
        for r in self.rays() {
            for (a, b) in s.iter_mut().zip(&r) {
                *a += b;
            }
        }
        s
    }

    /// The dual cone; an involution on canonical forms.
    pub fn dual(&self) -> Cone {
        Cone {
            ambient_rank: self.ambient_rank,
            lineality: self.equations.clone(),
            pointed_rays: self.facets.clone(),
            equations: self.lineality.clone(),
            facets: self.pointed_rays.clone(),
        }
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        if other.ambient_rank != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: other.ambient_rank,
            });
        }
        let mut ineqs = self.ineqs();
        ineqs.extend(other.ineqs());
        Cone::from_inequalities(self.ambient_rank, &ineqs)
    }

    /// Intersection with the half-spaces `<f, x> >= 0` for `f` in `ineqs`.
    pub fn cut(&self, ineqs: &[IntVector]) -> Result<Cone> {
        let mut all = self.ineqs();
        all.extend(ineqs.iter().cloned());
        Cone::from_inequalities(self.ambient_rank, &all)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &IntMatrix) -> Result<Cone> {
        if m.cols() != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: m.cols(),
            });
        }
        let gens: Vec<IntVector> = self.rays().iter().map(|r| m.apply(r)).collect();
        Cone::from_generators(m.rows(), &gens)
    }

    /// Preimage `{x : m·x in self}`.
    pub fn preimage(&self, m: &IntMatrix) -> Result<Cone> {
        if m.rows() != self.ambient_rank {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_rank,
                found: m.rows(),
            });
        }
        let mt = m.transpose();
        let ineqs: Vec<IntVector> = self.ineqs().iter().map(|f| mt.apply(f)).collect();
        Cone::from_inequalities(m.cols(), &ineqs)
    }

    /// All faces, from `{lineality}` up to the cone itself, in canonical
    /// order (by dimension, then by canonical form).
    pub fn faces(&self) -> Vec<Cone> {
        let n = self.pointed_rays.len();
        let full: BTreeSet<usize> = (0..n).collect();
        let facet_sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| {
                (0..n)
                    .filter(|&i| dot(f, &self.pointed_rays[i]).is_zero())
                    .collect()
            })
            .collect();
        let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut stack = vec![full];
        while let Some(s) = stack.pop() {
            if !seen.insert(s.clone()) {
                continue;
            }
            for fs in &facet_sets {
                let t: BTreeSet<usize> = s.intersection(fs).copied().collect();
                if !seen.contains(&t) {
                    stack.push(t);
                }
            }
        }
        let mut faces: Vec<Cone> = seen
            .into_iter()
            .map(|s| {
                let gens: Vec<IntVector> = with_negatives(&self.lineality)
                    .into_iter()
                    .chain(s.iter().map(|&i| self.pointed_rays[i].clone()))
                    .collect();
                Cone::from_generators(self.ambient_rank, &gens).expect("rays of the cone")
            })
            .collect();
        faces.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        faces.dedup();
        faces
    }

    /// Whether `face` is a face of this cone.
    pub fn has_face(&self, face: &Cone) -> bool {
        if !self.contains_cone(face) {
            return false;
        }
        // a face is cut out by a supporting functional from the dual cone:
        // the sum of all dual generators vanishing on it
        let dual_gens = self.dual().rays();
        let support: Vec<&IntVector> = dual_gens
            .iter()
            .filter(|y| face.rays().iter().all(|r| dot(y, r).is_zero()))
            .collect();
        let mut y = vec![Int::zero(); self.ambient_rank];
        for s in support {
            for (a, b) in y.iter_mut().zip(s) {
                *a += b;
            }
        }
        let exposed = self.cut(&[neg(&y)]).expect("same ambient rank");
        exposed == *face
    }
}
