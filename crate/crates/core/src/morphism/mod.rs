//! Homomorphisms of affine monoids: exactness, integrality and push-outs.

mod fast;
mod integral;
mod kato;
mod pushout;

pub use integral::{Certificate, IntegralityVerdict, MorphismIntegrality, Strategy, Tri, Witness};
pub use kato::{KatoOutcome, KatoWitness, DEFAULT_BOUND};
pub use pushout::Pushout;

use crate::error::{Error, Result};
use crate::lattice::{coker_invariants, Cone, Int, IntMatrix, IntVector};
use crate::monoid::{AffineMonoid, Face};

/// A homomorphism `source -> target` given by an integer matrix between the
/// ambient lattices (`target.rank() x source.rank()`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidHom {
    source: AffineMonoid,
    target: AffineMonoid,
    matrix: IntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeatnessReport {
    pub gp_injective: bool,
    pub coker_rank: usize,
    pub coker_torsion: Vec<Int>,
    pub is_local: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exactness {
    pub exact: bool,
    /// `{q in gp(Q) : h(q) in P}`.
    pub closure: AffineMonoid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceExactness {
    pub face: Cone,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismExactness {
    pub exact: bool,
    /// One entry per face of the target, in canonical face order.
    pub table: Vec<FaceExactness>,
}

impl MonoidHom {
    pub fn new(source: &AffineMonoid, target: &AffineMonoid, matrix: &IntMatrix) -> Result<Self> {
        if matrix.cols() != source.rank() {
            return Err(Error::DimensionMismatch {
                expected: source.rank(),
                found: matrix.cols(),
            });
        }
        if matrix.rows() != target.rank() {
            return Err(Error::DimensionMismatch {
                expected: target.rank(),
                found: matrix.rows(),
            });
        }
        if let Some(index) = source
            .gens()
            .iter()
            .position(|g| !target.contains(&matrix.apply(g)))
        {
            return Err(Error::NotAHomomorphism { index });
        }
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            matrix: matrix.clone(),
        })
    }

    pub fn identity(m: &AffineMonoid) -> Self {
        Self {
            source: m.clone(),
            target: m.clone(),
            matrix: IntMatrix::identity(m.rank()),
        }
    }

    pub fn source(&self) -> &AffineMonoid {
        &self.source
    }

    pub fn target(&self) -> &AffineMonoid {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Int]) -> IntVector {
        self.matrix.apply(x)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &MonoidHom) -> Result<MonoidHom> {
        if self.target != other.source {
            return Err(Error::SourceMismatch);
        }
        MonoidHom::new(&self.source, &other.target, &other.matrix.mul(&self.matrix)?)
    }

    /// The map on groups in Hermite-basis coordinates
    /// (`dim target x dim source`).
    pub fn gp_matrix(&self) -> IntMatrix {
        let cols: Vec<IntVector> = self
            .source
            .gp_basis()
            .iter()
            .map(|b| {
                self.target
                    .gp_coordinates(&self.apply(b))
                    .expect("homomorphism maps the group into the group")
            })
            .collect();
        IntMatrix::from_columns(self.target.dim(), &cols).expect("coordinates of length dim")
    }

    pub fn is_gp_injective(&self) -> bool {
        self.gp_matrix().rank() == self.source.dim()
    }

    pub fn is_local(&self) -> bool {
        self.source
            .gens()
            .iter()
            .all(|g| !self.target.is_unit(&self.apply(g)) || self.source.is_unit(g))
    }

    pub fn neatness_report(&self) -> NeatnessReport {
        let (coker_rank, coker_torsion) = coker_invariants(&self.gp_matrix());
        NeatnessReport {
            gp_injective: self.is_gp_injective(),
            coker_rank,
            coker_torsion,
            is_local: self.is_local(),
        }
    }

    fn require_saturated(&self) -> Result<()> {
        if self.source.is_saturated() && self.target.is_saturated() {
            Ok(())
        } else {
            Err(Error::NotSaturated)
        }
    }

    pub fn exactness(&self) -> Result<Exactness> {
        self.require_saturated()?;
        let pre = self.target.cone().preimage(&self.matrix)?;
        let closure = AffineMonoid::from_cone(&pre, self.source.gp_basis())?;
        Ok(Exactness {
            exact: closure == self.source,
            closure,
        })
    }

    pub fn is_exact_hom(&self) -> Result<bool> {
        Ok(self.exactness()?.exact)
    }

    /// The face `h^{-1}(F)` of the source.
    pub fn preimage_face(&self, face: &Face) -> Result<Face> {
        let cone = self
            .source
            .cone()
            .intersect(&face.cone.preimage(&self.matrix)?)?;
        self.source.face(&cone)
    }

    /// The induced map of sharpened localizations
    /// `(Q_{h^{-1}F})^sharp -> (P_F)^sharp`.
    pub fn localized_at(&self, face: &Face) -> Result<MonoidHom> {
        self.require_saturated()?;
        let g = self.preimage_face(face)?;
        let sq = self.source.localize(&g)?.sharpen();
        let sp = self.target.localize(face)?.sharpen();
        let m = sp.proj.mul(&self.matrix)?.mul(&sq.section)?;
        MonoidHom::new(&sq.monoid, &sp.monoid, &m)
    }

    pub fn exactness_per_face(&self) -> Result<MorphismExactness> {
        self.require_saturated()?;
        let mut table = Vec::new();
        for face in self.target.faces()? {
            let exact = self.localized_at(&face)?.is_exact_hom()?;
            table.push(FaceExactness {
                face: face.cone,
                exact,
            });
        }
        Ok(MorphismExactness {
            exact: table.iter().all(|f| f.exact),
            table,
        })
    }

    pub fn is_exact_morphism(&self) -> Result<bool> {
        Ok(self.exactness_per_face()?.exact)
    }

    /// The induced map of sharp quotients, written in Hermite coordinates of
    /// their groups. Source and target become full-dimensional and sharp.
    pub fn normalized(&self) -> Result<MonoidHom> {
        let sq = self.source.sharpen();
        let sp = self.target.sharpen();
        let m = sp.proj.mul(&self.matrix)?.mul(&sq.section)?;
        let q = &sq.monoid;
        let p = &sp.monoid;
        let coords = |mon: &AffineMonoid| -> Vec<IntVector> {
            mon.gens()
                .iter()
                .map(|g| mon.gp_coordinates(g).expect("generator in group"))
                .collect()
        };
        let qc = AffineMonoid::new(q.dim(), &coords(q))?;
        let pc = AffineMonoid::new(p.dim(), &coords(p))?;
        let cols: Vec<IntVector> = q
            .gp_basis()
            .iter()
            .map(|b| {
                p.gp_coordinates(&m.apply(b))
                    .ok_or_else(|| Error::Internal("image leaves the target group".into()))
            })
            .collect::<Result<_>>()?;
        let mc = IntMatrix::from_columns(p.dim(), &cols)?;
        MonoidHom::new(&qc, &pc, &mc)
    }

    /// Whether this is an isomorphism of monoids.
    pub fn is_isomorphism(&self) -> bool {
        if self.source.dim() != self.target.dim() || !self.is_gp_injective() {
            return false;
        }
        let (free, torsion) = coker_invariants(&self.gp_matrix());
        if free != 0 || !torsion.is_empty() {
            return false;
        }
        let mut img: Vec<IntVector> = self.source.gens().iter().map(|g| self.apply(g)).collect();
        img.sort();
        AffineMonoid::new(self.target.rank(), &img).is_ok_and(|m| m == self.target)
    }
}
