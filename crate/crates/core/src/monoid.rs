//! Affine monoids inside integer lattices, their faces, localizations,
//! sharpenings and ideals.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    canonical_set, dot, is_zero, kernel_basis, neg, reduce_modulo, row_lattice_basis,
    saturated_generators, solve_linear, sub, Cone, Int, IntMatrix, IntVector,
};

/// Data derived from a generating set; computed once.
#[derive(Clone)]
struct Analysis {
    cone: Cone,
    /// Hermite basis of the group generated by the monoid.
    gp: Vec<IntVector>,
    /// Hermite basis of the unit group.
    units: Vec<IntVector>,
    /// Sum of the facet normals; positive on every non-unit generator.
    grading: IntVector,
    /// Generators outside the lineality space, with their degree.
    graded_gens: Vec<(IntVector, Int)>,
    saturated: OnceLock<bool>,
}

impl Analysis {
    fn of(rank: usize, gens: &[IntVector]) -> Self {
        let cone = Cone::from_generators(rank, gens).expect("generators of length rank");
        let gp = row_lattice_basis(rank, gens);
        let mut grading = vec![Int::zero(); rank];
        for f in cone.facets() {
            for (a, b) in grading.iter_mut().zip(f) {
                *a += b;
            }
        }
        let (lineal, free): (Vec<IntVector>, Vec<IntVector>) = gens
            .iter()
            .cloned()
            .partition(|g| cone.contains(&neg(g)));
        let units = row_lattice_basis(rank, &lineal);
        let mut graded_gens: Vec<(IntVector, Int)> = free
            .into_iter()
            .map(|g| {
                let d = dot(&grading, &g);
                (g, d)
            })
            .collect();
        graded_gens.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        Self {
            cone,
            gp,
            units,
            grading,
            graded_gens,
            saturated: OnceLock::new(),
        }
    }

    fn saturated(&self) -> bool {
        *self.saturated.get_or_init(|| {
            saturated_generators(&self.cone, &self.gp)
                .iter()
                .all(|s| self.generated_contains(s))
        })
    }

    fn in_gp(&self, x: &[Int]) -> bool {
        is_zero(&reduce_modulo(x, &self.gp))
    }

    fn contains(&self, x: &[Int]) -> bool {
        if x.len() != self.cone.ambient_rank() || !self.cone.contains(x) || !self.in_gp(x) {
            return false;
        }
        self.saturated() || self.generated_contains(x)
    }

    /// Membership in the monoid generated by the generators, assuming `x`
    /// already lies in the cone and in the group.
    fn generated_contains(&self, x: &[Int]) -> bool {
        let mut failed = HashSet::new();
        self.search(x.to_vec(), 0, &mut failed)
    }

    fn search(&self, x: IntVector, i: usize, failed: &mut HashSet<(usize, IntVector)>) -> bool {
        let deg = dot(&self.grading, &x);
        if deg.is_zero() {
            return is_zero(&reduce_modulo(&x, &self.units));
        }
        if i == self.graded_gens.len() || deg.is_negative() {
            return false;
        }
        let key = (i, reduce_modulo(&x, &self.units));
        if failed.contains(&key) {
            return false;
        }
        let (g, dg) = &self.graded_gens[i];
        let mut rest = x;
        let mut spent = Int::zero();
        loop {
            if self.cone.contains(&rest) && self.search(rest.clone(), i + 1, failed) {
                return true;
            }
            spent += dg;
            if spent > deg {
                break;
            }
            rest = sub(&rest, g);
        }
        failed.insert(key);
        false
    }
}

/// A finitely generated submonoid of `Z^rank`.
///
/// Generators are canonical: saturated monoids carry their Hilbert-type
/// generating set (units as `±` a Hermite basis, the rest reduced modulo
/// units), other monoids a sorted irredundant generating set.
#[derive(Clone)]
pub struct AffineMonoid {
    rank: usize,
    gens: Vec<IntVector>,
    /// Set when `gens` is known to be a Hilbert basis of its cone.
    known_saturated: bool,
    analysis: OnceLock<Analysis>,
}

impl PartialEq for AffineMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.gens == other.gens
    }
}

impl Eq for AffineMonoid {}

impl Hash for AffineMonoid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.gens.hash(state);
    }
}

impl PartialOrd for AffineMonoid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AffineMonoid {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rank, &self.gens).cmp(&(other.rank, &other.gens))
    }
}

impl fmt::Debug for AffineMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineMonoid(rank {}, gens [", self.rank)?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in g.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "])")
    }
}

/// A face of a saturated monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// Generators of the ambient monoid lying in the face.
    pub gens: Vec<IntVector>,
    pub monoid: AffineMonoid,
    pub cone: Cone,
}

/// The sharp quotient of a monoid together with the maps realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sharpening {
    pub monoid: AffineMonoid,
    /// Surjection `Z^rank -> Z^r` killing the lineality space.
    pub proj: IntMatrix,
    /// A section of `proj` (`proj · section = I`).
    pub section: IntMatrix,
}

impl AffineMonoid {
    /// The monoid generated by `gens` in `Z^rank`, canonicalized.
    pub fn new(rank: usize, gens: &[IntVector]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != rank) {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: g.len(),
            });
        }
        let gens = canonical_set(gens.iter().filter(|g| !is_zero(g)).cloned().collect());
        let a = Analysis::of(rank, &gens);
        if a.saturated() {
            let sat = saturated_generators(&a.cone, &a.gp);
            return Ok(Self::from_saturated_parts(rank, sat));
        }
        // drop redundant generators, largest first
        let mut kept = gens;
        let mut i = kept.len();
        while i > 0 {
            i -= 1;
            let g = kept.remove(i);
            let rest = Analysis::of(rank, &kept);
            if !rest.contains(&g) {
                kept.insert(i, g);
            }
        }
        let a = Analysis::of(rank, &kept);
        let _ = a.saturated.set(false);
        let m = Self {
            rank,
            gens: kept,
            known_saturated: false,
            analysis: OnceLock::new(),
        };
        let _ = m.analysis.set(a);
        Ok(m)
    }

    fn from_saturated_parts(rank: usize, gens: Vec<IntVector>) -> Self {
        Self {
            rank,
            gens,
            known_saturated: true,
            analysis: OnceLock::new(),
        }
    }

    /// `cone ∩ lattice`, where `lattice` is a basis of a sublattice.
    pub fn from_cone(cone: &Cone, lattice: &[IntVector]) -> Result<Self> {
        Self::new(cone.ambient_rank(), &saturated_generators(cone, lattice))
    }

    /// The monoid `Z^rank ∩ cone`.
    pub fn saturated_in_standard_lattice(cone: &Cone) -> Result<Self> {
        let n = cone.ambient_rank();
        let basis: Vec<IntVector> = (0..n).map(|i| crate::lattice::unit_vector(n, i)).collect();
        Self::from_cone(cone, &basis)
    }

    /// `N^n` in `Z^n`.
    pub fn free(n: usize) -> Self {
        Self::saturated_in_standard_lattice(&Cone::orthant(n)).expect("orthant")
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(rank, &[]).expect("no generators")
    }

    fn analysis(&self) -> &Analysis {
        self.analysis.get_or_init(|| {
            let a = Analysis::of(self.rank, &self.gens);
            if self.known_saturated {
                let _ = a.saturated.set(true);
            }
            a
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[IntVector] {
        &self.gens
    }

    pub fn cone(&self) -> &Cone {
        &self.analysis().cone
    }

    /// Hermite basis of `gp(M)`.
    pub fn gp_basis(&self) -> &[IntVector] {
        &self.analysis().gp
    }

    /// Rank of `gp(M)`.
    pub fn dim(&self) -> usize {
        self.gp_basis().len()
    }

    /// Hermite basis of the unit group.
    pub fn units_basis(&self) -> &[IntVector] {
        &self.analysis().units
    }

    pub fn is_fine(&self) -> bool {
        true
    }

    pub fn is_sharp(&self) -> bool {
        self.units_basis().is_empty()
    }

    pub fn is_saturated(&self) -> bool {
        self.analysis().saturated()
    }

    pub fn is_zero_monoid(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.analysis().contains(x)
    }

    pub fn in_gp(&self, x: &[Int]) -> bool {
        x.len() == self.rank && self.analysis().in_gp(x)
    }

    pub fn is_unit(&self, x: &[Int]) -> bool {
        self.contains(x) && self.contains(&neg(x))
    }

    /// Coordinates of `x` in the Hermite basis of `gp(M)`.
    pub fn gp_coordinates(&self, x: &[Int]) -> Option<IntVector> {
        crate::lattice::lattice_coordinates(self.gp_basis(), x)
    }

    pub fn saturate(&self) -> AffineMonoid {
        if self.is_saturated() {
            return self.clone();
        }
        let a = self.analysis();
        Self::from_saturated_parts(self.rank, saturated_generators(&a.cone, &a.gp))
    }

    pub fn sharpen(&self) -> Sharpening {
        let lineality = self.cone().lineality_basis();
        let proj = if lineality.is_empty() {
            IntMatrix::identity(self.rank)
        } else {
            let l = IntMatrix::from_rows(self.rank, lineality).expect("rank");
            let f = kernel_basis(&l);
            IntMatrix::from_rows(self.rank, &f).expect("rank")
        };
        let r = proj.rows();
        let cols: Vec<IntVector> = (0..r)
            .map(|i| {
                solve_linear(&proj, &crate::lattice::unit_vector(r, i))
                    .expect("matching rank")
                    .expect("proj is surjective")
                    .particular
            })
            .collect();
        let section = IntMatrix::from_columns(self.rank, &cols).expect("rank");
        let gens: Vec<IntVector> = self.gens.iter().map(|g| proj.apply(g)).collect();
        let monoid = Self::new(r, &gens).expect("projected generators");
        Sharpening {
            monoid,
            proj,
            section,
        }
    }

    /// All faces in canonical order. Requires a saturated monoid.
    pub fn faces(&self) -> Result<Vec<Face>> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        Ok(self
            .cone()
            .faces()
            .into_iter()
            .map(|c| self.face_of_cone(c))
            .collect())
    }

    fn face_of_cone(&self, cone: Cone) -> Face {
        let gens: Vec<IntVector> = self.gens.iter().filter(|g| cone.contains(g)).cloned().collect();
        let monoid = Self::new(self.rank, &gens).expect("subset of generators");
        Face { gens, monoid, cone }
    }

    /// The face cut out by a face of the cone.
    pub fn face(&self, cone: &Cone) -> Result<Face> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        if !self.cone().has_face(cone) {
            return Err(Error::NotAFace);
        }
        Ok(self.face_of_cone(cone.clone()))
    }

    /// The smallest face containing `x`.
    pub fn face_containing(&self, x: &[Int]) -> Result<Face> {
        if !self.is_saturated() {
            return Err(Error::NotSaturated);
        }
        if !self.cone().contains(x) {
            return Err(Error::OutsideParent);
        }
        let cone = self.cone().faces().into_iter().find(|c| c.contains(x)).expect("M is a face");
        Ok(self.face_of_cone(cone))
    }

    /// `M - F`: the monoid generated by `M` and the inverses of `F`.
    pub fn localize(&self, face: &Face) -> Result<AffineMonoid> {
        let valid = face.gens.iter().all(|g| self.contains(g))
            && self.cone().has_face(&face.cone)
            && self
                .gens
                .iter()
                .filter(|g| face.cone.contains(g))
                .all(|g| face.monoid.contains(g));
        if !valid {
            return Err(Error::NotAFace);
        }
        let mut gens = self.gens.clone();
        gens.extend(face.gens.iter().map(|g| neg(g)));
        Self::new(self.rank, &gens)
    }

    /// The smallest saturated submonoid of `gp(M)` containing `M` and `extra`.
    pub fn extend_fs(&self, extra: &[IntVector]) -> Result<AffineMonoid> {
        for e in extra {
            if e.len() != self.rank {
                return Err(Error::DimensionMismatch {
                    expected: self.rank,
                    found: e.len(),
                });
            }
            if !self.in_gp(e) {
                return Err(Error::OutsideGroup);
            }
        }
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().filter(|e| !is_zero(e)).cloned());
        let a = Analysis::of(self.rank, &canonical_set(gens));
        Ok(Self::from_saturated_parts(self.rank, saturated_generators(&a.cone, &a.gp)))
    }

    /// Whether some lattice isomorphism `gp(self) -> gp(other)` carries
    /// `self` onto `other`. Brute force over generator bijections; meant for
    /// small monoids.
    pub fn is_isomorphic_to(&self, other: &AffineMonoid) -> bool {
        if self.dim() != other.dim() || self.gens.len() != other.gens.len() {
            return false;
        }
        let d = self.dim();
        if d == 0 {
            return true;
        }
        let to_coords = |m: &AffineMonoid| -> Vec<IntVector> {
            m.gens.iter().map(|g| m.gp_coordinates(g).expect("generator in gp")).collect()
        };
        let a = to_coords(self);
        let b = to_coords(other);
        // a basis of Q^d among self's generators
        let mut basis_idx = Vec::new();
        let mut chosen: Vec<IntVector> = Vec::new();
        for (i, g) in a.iter().enumerate() {
            chosen.push(g.clone());
            if crate::lattice::rank_of(&chosen) == chosen.len() {
                basis_idx.push(i);
            } else {
                chosen.pop();
            }
        }
        let src = IntMatrix::from_columns(d, &chosen).expect("d");
        let det = src.det().expect("square");
        let target_set: HashSet<&IntVector> = b.iter().collect();
        let mut images: Vec<usize> = Vec::new();
        try_images(&a, &b, &basis_idx, &src, &det, &target_set, &mut images)
    }
}

fn try_images(
    a: &[IntVector],
    b: &[IntVector],
    basis_idx: &[usize],
    src: &IntMatrix,
    det: &Int,
    target: &HashSet<&IntVector>,
    images: &mut Vec<usize>,
) -> bool {
    let d = basis_idx.len();
    if images.len() == d {
        // the map T with T·src = img; T = img·src^{-1} must be integral and unimodular
        let img_cols: Vec<IntVector> = images.iter().map(|&j| b[j].clone()).collect();
        let img = IntMatrix::from_columns(d, &img_cols).expect("d");
        let img_det = img.det().expect("square");
        if img_det.abs() != det.abs() {
            return false;
        }
        // solve T row by row: src^T · t_i = img row i
        let st = src.transpose();
        let mut rows = Vec::with_capacity(d);
        for i in 0..d {
            match solve_linear(&st, img.row(i)).expect("square") {
                Some(s) => rows.push(s.particular),
                None => return false,
            }
        }
        let t = IntMatrix::from_rows(d, &rows).expect("d");
        if !t.is_unimodular() {
            return false;
        }
        let mapped: HashSet<IntVector> = a.iter().map(|g| t.apply(g)).collect();
        return mapped.len() == target.len() && mapped.iter().all(|x| target.contains(x));
    }
    for j in 0..b.len() {
        if images.contains(&j) {
            continue;
        }
        images.push(j);
        if try_images(a, b, basis_idx, src, det, target, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// A monoid ideal, stored by a minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidIdeal {
    parent: AffineMonoid,
    gens: Vec<IntVector>,
}

impl MonoidIdeal {
    pub fn new(parent: &AffineMonoid, gens: &[IntVector]) -> Result<Self> {
        for g in gens {
            if g.len() != parent.rank() {
                return Err(Error::DimensionMismatch {
                    expected: parent.rank(),
                    found: g.len(),
                });
            }
            if !parent.contains(g) {
                return Err(Error::OutsideParent);
            }
        }
        let gens = canonical_set(gens.to_vec());
        // over a saturated parent, `g - h ∈ parent` compares facet values
        let values: Option<Vec<IntVector>> = parent.is_saturated().then(|| {
            gens.iter()
                .map(|g| parent.cone().facets().iter().map(|f| dot(f, g)).collect())
                .collect()
        });
        let divides = |i: usize, j: usize| match &values {
            Some(v) => v[i].iter().zip(&v[j]).all(|(a, b)| a <= b),
            None => parent.contains(&sub(&gens[j], &gens[i])),
        };
        let minimal = (0..gens.len())
            .filter(|&j| {
                !(0..gens.len()).any(|i| i != j && divides(i, j) && (i < j || !divides(j, i)))
            })
            .map(|j| gens[j].clone())
            .collect();
        Ok(Self {
            parent: parent.clone(),
            gens: minimal,
        })
    }

    pub fn empty(parent: &AffineMonoid) -> Self {
        Self {
            parent: parent.clone(),
            gens: vec![],
        }
    }

    /// The ideal of all of `parent`.
    pub fn unit(parent: &AffineMonoid) -> Self {
        Self {
            parent: parent.clone(),
            gens: vec![vec![Int::zero(); parent.rank()]],
        }
    }

    pub fn parent(&self) -> &AffineMonoid {
        &self.parent
    }

    pub fn gens(&self) -> &[IntVector] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.gens.iter().any(|g| self.parent.contains(&sub(x, g)))
    }

    pub fn product(&self, other: &MonoidIdeal) -> Result<MonoidIdeal> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        let sums: Vec<IntVector> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| crate::lattice::add(a, b)))
            .collect();
        Self::new(&self.parent, &sums)
    }

    /// The image ideal in the sharp quotient.
    pub fn sharpen(&self) -> Result<MonoidIdeal> {
        let s = self.parent.sharpen();
        self.sharpen_with(&s)
    }

    pub fn sharpen_with(&self, s: &Sharpening) -> Result<MonoidIdeal> {
        let gens: Vec<IntVector> = self.gens.iter().map(|g| s.proj.apply(g)).collect();
        Self::new(&s.monoid, &gens)
    }

    /// The same ideal generated inside a larger monoid.
    pub fn extend_to(&self, parent: &AffineMonoid) -> Result<MonoidIdeal> {
        Self::new(parent, &self.gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;

    fn m(rank: usize, gens: &[&[i64]]) -> AffineMonoid {
        let gens: Vec<IntVector> = gens.iter().map(|g| ivec(g)).collect();
        AffineMonoid::new(rank, &gens).unwrap()
    }

    fn vs(xs: &[&[i64]]) -> Vec<IntVector> {
        canonical_set(xs.iter().map(|x| ivec(x)).collect())
    }

    #[test]
    fn new_examples() {
        assert_eq!(m(2, &[&[1, 0], &[0, 1], &[1, 1]]).gens(), vs(&[&[1, 0], &[0, 1]]));
        assert!(m(1, &[]).is_zero_monoid());
        let q = m(2, &[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(q.gens(), vs(&[&[2, 0], &[0, 2], &[1, 1]]));
        assert!(q.is_saturated());
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            AffineMonoid::new(2, &[ivec(&[1])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn numerical_semigroup() {
        let s = m(1, &[&[2], &[3], &[4]]);
        assert_eq!(s.gens(), vs(&[&[2], &[3]]));
        assert!(!s.is_saturated());
        assert!(!s.contains(&ivec(&[1])));
        assert!(s.contains(&ivec(&[5])));
        assert_eq!(s.saturate(), AffineMonoid::free(1));
    }

    #[test]
    fn sharpen_examples() {
        let zn = m(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        let s = zn.sharpen();
        assert_eq!(s.monoid, AffineMonoid::free(1));
        assert_eq!(s.proj, IntMatrix::from_i64(&[&[0, 1]]));
        assert_eq!(s.proj.mul(&s.section).unwrap(), IntMatrix::identity(1));
        let n2 = AffineMonoid::free(2);
        assert_eq!(n2.sharpen().proj, IntMatrix::identity(2));
        let z = m(1, &[&[1], &[-1]]);
        assert!(z.sharpen().monoid.is_zero_monoid());
    }

    #[test]
    fn faces_and_localization() {
        let n2 = AffineMonoid::free(2);
        let faces = n2.faces().unwrap();
        assert_eq!(faces.len(), 4);
        let e1 = faces.iter().find(|f| f.gens == vs(&[&[1, 0]])).unwrap();
        let loc = n2.localize(e1).unwrap();
        assert_eq!(loc, m(2, &[&[1, 0], &[-1, 0], &[0, 1]]));
        assert_eq!(loc.units_basis(), vs(&[&[1, 0]]));
        assert_eq!(n2.localize(&faces[0]).unwrap(), n2);
        assert_eq!(n2.localize(&faces[3]).unwrap(), m(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]));
        assert_eq!(m(1, &[&[2], &[3]]).faces(), Err(Error::NotSaturated));
        let half = AffineMonoid::saturated_in_standard_lattice(
            &Cone::from_inequalities(2, &[ivec(&[1, 1])]).unwrap(),
        )
        .unwrap();
        assert_eq!(half.faces().unwrap().len(), 2);
    }

    #[test]
    fn extend_fs_examples() {
        let n2 = AffineMonoid::free(2);
        let e = n2.extend_fs(&[ivec(&[1, -1])]).unwrap();
        assert_eq!(e.gens(), vs(&[&[0, 1], &[1, -1]]));
        assert_eq!(n2.extend_fs(&[ivec(&[1, 1])]).unwrap(), n2);
        assert_eq!(
            AffineMonoid::free(1).extend_fs(&[ivec(&[-1])]).unwrap(),
            m(1, &[&[1], &[-1]])
        );
        let even = m(2, &[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(even.extend_fs(&[ivec(&[1, 0])]), Err(Error::OutsideGroup));
    }

    #[test]
    fn ideal_examples() {
        let n2 = AffineMonoid::free(2);
        let k = MonoidIdeal::new(&n2, &vs(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(k.gens(), vs(&[&[0, 1], &[1, 0]]));
        assert!(MonoidIdeal::new(&n2, &[]).unwrap().is_empty());
        let n = AffineMonoid::free(1);
        assert_eq!(MonoidIdeal::new(&n, &vs(&[&[2], &[3]])).unwrap().gens(), vs(&[&[2]]));
        let a = MonoidIdeal::new(&n2, &[ivec(&[1, 0])]).unwrap();
        let b = MonoidIdeal::new(&n2, &[ivec(&[0, 1])]).unwrap();
        assert_eq!(a.product(&b).unwrap().gens(), vs(&[&[1, 1]]));
        assert!(a.product(&MonoidIdeal::empty(&n2)).unwrap().is_empty());
        let zn = m(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        let k = MonoidIdeal::new(&zn, &vs(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(k.gens(), vs(&[&[1, 0]]));
        assert_eq!(k.sharpen().unwrap().gens(), vs(&[&[0]]));
    }

    #[test]
    fn isomorphism_up_to_change_of_basis() {
        let a = m(2, &[&[1, 0], &[1, 1]]);
        assert!(a.is_isomorphic_to(&AffineMonoid::free(2)));
        // saturated in its own group, which has index two
        assert!(m(2, &[&[1, 0], &[1, 2]]).is_isomorphic_to(&AffineMonoid::free(2)));
        let b = m(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        assert!(!b.is_isomorphic_to(&AffineMonoid::free(2)));
        assert!(b.is_isomorphic_to(&m(2, &[&[2, 0], &[0, 2], &[1, 1]])));
        assert!(!b.is_isomorphic_to(&m(2, &[&[0, 1], &[1, 0], &[3, -1]])));
        let c = m(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(c.is_isomorphic_to(&AffineMonoid::free(2)));
    }
}
