//! Integrality verdicts with certificates and witnesses.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::kato::{KatoOutcome, KatoWitness, DEFAULT_BOUND};
use super::MonoidHom;
use crate::error::{Error, Result};
use crate::lattice::{
    add, coker_invariants, fundamental_parallelepiped, reduce_modulo, row_lattice_basis, scale,
    solve_linear, sub, triangulate, Cone, Int, IntMatrix, IntVector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Identity,
    /// Coset decomposition; needs a gp-injective local hom with finite
    /// cokernel.
    FreeModule,
    /// Equidimensionality of the dual cone map; needs a free source.
    MiracleFlatness,
    Bounded(u32),
    /// The first applicable exact strategy, else a bounded search.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Certificate {
    Identity,
    FreeModule,
    MiracleFlatness,
}

/// Evidence of non-integrality. Both kinds refer to the normalized hom
/// they were found on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Kato { hom: MonoidHom, witness: KatoWitness },
    /// A face of the target's dual cone whose image is not a face, or over
    /// which the fiber dimension jumps.
    FaceCondition { hom: MonoidHom, face: Cone, image: Cone },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntegralityVerdict {
    Integral(Certificate),
    NotIntegral(Box<Witness>),
    UnknownUpTo(u32),
}

impl IntegralityVerdict {
    pub fn is_integral(&self) -> bool {
        matches!(self, IntegralityVerdict::Integral(_))
    }

    pub fn is_not_integral(&self) -> bool {
        matches!(self, IntegralityVerdict::NotIntegral(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tri {
    True,
    False,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismIntegrality {
    pub verdict: Tri,
    /// One entry per face of the target, in canonical face order.
    pub table: Vec<(Cone, IntegralityVerdict)>,
}

fn inapplicable(why: &str) -> Error {
    Error::StrategyInapplicable(why.to_string())
}

/// `(q + c·s, c·s)` for the least `c >= 0` putting `q + c·s` in the source,
/// `s` the sum of its generators.
fn split_difference(h: &MonoidHom, q: &[Int]) -> (IntVector, IntVector) {
    let src = h.source();
    let s = src
        .gens()
        .iter()
        .fold(vec![Int::zero(); src.rank()], |acc, g| add(&acc, g));
    let mut c = Int::zero();
    loop {
        let a2 = scale(&c, &s);
        let a1 = add(q, &a2);
        if src.contains(&a1) {
            return (a1, a2);
        }
        c += 1;
    }
}

fn kato_witness(h: &MonoidHom, w: KatoWitness) -> IntegralityVerdict {
    IntegralityVerdict::NotIntegral(Box::new(Witness::Kato {
        hom: h.clone(),
        witness: w,
    }))
}

impl MonoidHom {
    pub fn is_integral(&self, strategy: Strategy) -> Result<IntegralityVerdict> {
        let n = self.normalized()?;
        match strategy {
            Strategy::Identity => {
                if n.is_isomorphism() {
                    Ok(IntegralityVerdict::Integral(Certificate::Identity))
                } else {
                    Err(inapplicable("not an isomorphism"))
                }
            }
            Strategy::FreeModule => free_module(&n),
            Strategy::MiracleFlatness => miracle_flatness(&n),
            Strategy::Bounded(b) => bounded(&n, b),
            Strategy::Auto => auto(&n, DEFAULT_BOUND),
        }
    }

    /// [`Strategy::Auto`] with a custom bound for the final bounded search.
    pub fn is_integral_auto(&self, bound: u32) -> Result<IntegralityVerdict> {
        auto(&self.normalized()?, bound)
    }

    /// Integrality at every face of the target.
    pub fn integrality_per_face(&self) -> Result<MorphismIntegrality> {
        self.require_saturated()?;
        let mut table = Vec::new();
        for face in self.target().faces()? {
            let v = self.localized_at(&face)?.is_integral(Strategy::Auto)?;
            table.push((face.cone, v));
        }
        let verdict = if table.iter().any(|(_, v)| v.is_not_integral()) {
            Tri::False
        } else if table.iter().all(|(_, v)| v.is_integral()) {
            Tri::True
        } else {
            Tri::Unknown
        };
        Ok(MorphismIntegrality { verdict, table })
    }

    pub fn is_integral_morphism(&self) -> Result<Tri> {
        Ok(self.integrality_per_face()?.verdict)
    }
}

fn auto(n: &MonoidHom, bound: u32) -> Result<IntegralityVerdict> {
    if n.is_isomorphism() {
        return Ok(IntegralityVerdict::Integral(Certificate::Identity));
    }
    for attempt in [free_module(n), miracle_flatness(n)] {
        match attempt {
            Err(Error::StrategyInapplicable(_)) => continue,
            other => return other,
        }
    }
    bounded(n, bound)
}

fn bounded(n: &MonoidHom, b: u32) -> Result<IntegralityVerdict> {
    Ok(match n.kato_bounded(b)? {
        KatoOutcome::Violated(w) => kato_witness(n, w),
        KatoOutcome::NoViolationUpTo(b) => IntegralityVerdict::UnknownUpTo(b),
    })
}

fn free_module(n: &MonoidHom) -> Result<IntegralityVerdict> {
    let (q, p) = (n.source(), n.target());
    if !q.is_saturated() || !p.is_saturated() {
        return Err(inapplicable("free-module decomposition needs saturated monoids"));
    }
    if !n.is_gp_injective() {
        return Err(inapplicable("not injective on groups"));
    }
    if coker_invariants(&n.gp_matrix()).0 != 0 {
        return Err(inapplicable("infinite cokernel on groups"));
    }
    if !n.is_local() {
        return Err(inapplicable("not local"));
    }
    let ex = n.exactness()?;
    if !ex.exact {
        let q_el = ex
            .closure
            .gens()
            .iter()
            .find(|g| !q.contains(g))
            .expect("a non-exact hom has a closure generator outside the source")
            .clone();
        let (a1, a2) = split_difference(n, &q_el);
        let w = KatoWitness {
            a1,
            a2,
            b1: vec![Int::zero(); p.rank()],
            b2: n.apply(&q_el),
        };
        return Ok(kato_witness(n, w));
    }
    if q.gens().is_empty() {
        // the zero monoid into a sharp target of finite index is trivial
        return Ok(IntegralityVerdict::Integral(Certificate::FreeModule));
    }

    // minimal elements of each coset of h(gp Q) in P lie in fundamental
    // parallelepipeds of a triangulation by generator images
    let dim = p.rank();
    let images: Vec<IntVector> = q.gens().iter().map(|g| n.apply(g)).collect();
    let cone = Cone::from_generators(dim, &images)?;
    let along_ray = |r: &IntVector| -> IntVector {
        images
            .iter()
            .filter(|v| crate::lattice::primitive(v) == *r)
            .min()
            .expect("every extreme ray carries a generator image")
            .clone()
    };
    let mut candidates: Vec<IntVector> = Vec::new();
    for simplex in triangulate(&cone)? {
        let gens: Vec<IntVector> = simplex.iter().map(along_ray).collect();
        candidates.extend(fundamental_parallelepiped(dim, &gens)?);
    }
    let candidates = crate::lattice::canonical_set(candidates);
    let sublattice = row_lattice_basis(dim, &n.matrix().column_vectors());
    let mut cosets: BTreeMap<IntVector, Vec<IntVector>> = BTreeMap::new();
    for x in candidates {
        let minimal = images.iter().all(|v| !p.contains(&sub(&x, v)));
        if minimal {
            cosets
                .entry(reduce_modulo(&x, &sublattice))
                .or_default()
                .push(x);
        }
    }
    for members in cosets.values() {
        if members.len() > 1 {
            let (x, y) = (&members[0], &members[1]);
            let a = solve_linear(n.matrix(), &sub(y, x))?
                .ok_or_else(|| Error::Internal("coset difference outside the image".into()))?
                .particular;
            let (a1, a2) = split_difference(n, &a);
            return Ok(kato_witness(
                n,
                KatoWitness {
                    a1,
                    a2,
                    b1: x.clone(),
                    b2: y.clone(),
                },
            ));
        }
    }
    Ok(IntegralityVerdict::Integral(Certificate::FreeModule))
}

fn miracle_flatness(n: &MonoidHom) -> Result<IntegralityVerdict> {
    let (q, p) = (n.source(), n.target());
    let free = q.is_sharp() && q.is_saturated() && q.gens().len() == q.dim();
    if !free {
        return Err(inapplicable("source is not free"));
    }
    if !p.is_saturated() {
        return Err(inapplicable("target is not saturated"));
    }
    if !n.is_gp_injective() {
        return Err(inapplicable("not injective on groups"));
    }
    // coordinates in which the source is the standard orthant
    let basis = IntMatrix::from_columns(q.rank(), q.gens())?;
    let h = n.matrix().mul(&basis)?;
    let phi = h.transpose();
    let sigma_q = Cone::orthant(q.rank());
    let sigma_p = p.cone().dual();
    let faces = sigma_p.faces();
    let images: Vec<Cone> = faces.iter().map(|t| t.image(&phi)).collect::<Result<_>>()?;
    let mut failure = None;
    for (tau, img) in faces.iter().zip(&images) {
        if !sigma_q.has_face(img) {
            failure = Some((tau.clone(), img.clone()));
            break;
        }
        let equidimensional = faces
            .iter()
            .zip(&images)
            .any(|(t, i)| i == img && t.dim() == img.dim() && tau.has_face(t));
        if !equidimensional {
            failure = Some((tau.clone(), img.clone()));
            break;
        }
    }
    let Some((face, image)) = failure else {
        return Ok(IntegralityVerdict::Integral(Certificate::MiracleFlatness));
    };
    for b in 1..=DEFAULT_BOUND {
        if let KatoOutcome::Violated(w) = n.kato_bounded(b)? {
            return Ok(kato_witness(n, w));
        }
    }
    Ok(IntegralityVerdict::NotIntegral(Box::new(Witness::FaceCondition {
        hom: n.clone(),
        face,
        image,
    })))
}
