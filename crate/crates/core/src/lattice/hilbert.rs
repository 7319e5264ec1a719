//! Hilbert bases of pointed cones through pulling triangulations and
//! fundamental parallelepipeds.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{
    canonical_set, dot, hnf_rows, is_zero, kernel_basis, lattice_coordinates, neg,
    saturation_basis, solve_linear, sub, Cone, Int, IntMatrix, IntVector,
};
use crate::error::{Error, Result};

/// Minimal generating set of the monoid `cone ∩ Z^n`, sorted.
pub fn hilbert_basis(cone: &Cone) -> Result<Vec<IntVector>> {
    if !cone.is_pointed() {
        return Err(Error::HasLineality);
    }
    Ok(hilbert_basis_of_rays(cone.ambient_rank(), cone.pointed_rays()))
}

/// Hilbert basis of the pointed cone spanned by `rays`.
pub(crate) fn hilbert_basis_of_rays(n: usize, rays: &[IntVector]) -> Vec<IntVector> {
    let cone = Cone::from_generators(n, rays).expect("rays of length n");
    debug_assert!(cone.is_pointed());
    let rays = cone.pointed_rays().to_vec();
    let mut candidates: Vec<IntVector> = rays.clone();
    for simplex in pulling(n, &rays, (0..rays.len()).collect()) {
        let gens: Vec<IntVector> = simplex.iter().map(|&i| rays[i].clone()).collect();
        candidates.extend(
            parallelepiped_points(n, &gens)
                .into_iter()
                .filter(|p| !is_zero(p)),
        );
    }
    let candidates = canonical_set(candidates);
    let basis = candidates
        .iter()
        .filter(|x| {
            !candidates
                .iter()
                .any(|h| h != *x && cone.contains(&sub(x, h)))
        })
        .cloned()
        .collect();
    basis
}

/// Pulling triangulation of a pointed cone into simplicial cones spanned by
/// its extreme rays.
pub fn triangulate(cone: &Cone) -> Result<Vec<Vec<IntVector>>> {
    if !cone.is_pointed() {
        return Err(Error::HasLineality);
    }
    let rays = cone.pointed_rays();
    Ok(pulling(cone.ambient_rank(), rays, (0..rays.len()).collect())
        .into_iter()
        .map(|s| s.into_iter().map(|i| rays[i].clone()).collect())
        .collect())
}

fn pulling(n: usize, rays: &[IntVector], subset: Vec<usize>) -> Vec<Vec<usize>> {
    let gens: Vec<IntVector> = subset.iter().map(|&i| rays[i].clone()).collect();
    let cone = Cone::from_generators(n, &gens).expect("rays of length n");
    if subset.len() == cone.dim() {
        return vec![subset];
    }
    let apex = subset[0];
    let mut out = Vec::new();
    for f in cone.facets() {
        if dot(f, &rays[apex]).is_zero() {
            continue;
        }
        let face: Vec<usize> = subset
            .iter()
            .copied()
            .filter(|&i| dot(f, &rays[i]).is_zero())
            .collect();
        for mut s in pulling(n, rays, face) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}

/// Lattice points `sum λ_i g_i` with every `λ_i` in `[0, 1)`, for linearly
/// independent `gens`. The lattice is `span(gens) ∩ Z^n`. Sorted, and
/// always containing the origin.
pub fn fundamental_parallelepiped(n: usize, gens: &[IntVector]) -> Result<Vec<IntVector>> {
    if let Some(g) = gens.iter().find(|g| g.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.len(),
        });
    }
    if super::rank_of(gens) != gens.len() {
        return Err(Error::Internal("generators are linearly dependent".into()));
    }
    Ok(canonical_set(parallelepiped_points(n, gens)))
}

fn parallelepiped_points(n: usize, gens: &[IntVector]) -> Vec<IntVector> {
    parallelepiped_with_coefficients(n, gens)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

/// Parallelepiped points together with their coefficient numerators
/// `λ_i · |det|`, where `det` is the index of the generators in their
/// saturated span.
pub(crate) fn parallelepiped_with_coefficients(
    n: usize,
    gens: &[IntVector],
) -> Vec<(IntVector, IntVector)> {
    let k = gens.len();
    if k == 0 {
        return vec![(vec![Int::zero(); n], vec![])];
    }
    let basis = saturation_basis(n, gens);
    let coords: Vec<IntVector> = gens
        .iter()
        .map(|g| lattice_coordinates(&basis, g).expect("generator lies in its saturation"))
        .collect();
    // columns are the generators in lattice coordinates
    let v = IntMatrix::from_columns(k, &coords).expect("square");
    let det = v.det().expect("square");
    let abs_det = det.abs();
    let adj = adjugate(&v);
    let (h, _) = hnf_rows(&v.transpose());
    let bounds: Vec<Int> = (0..k).map(|i| h[(i, i)].clone()).collect();

    let mut points = Vec::new();
    let mut x = vec![Int::zero(); k];
    loop {
        let a = adj.apply(&x);
        let lambda: IntVector = a
            .iter()
            .map(|ai| {
                let s = if det.is_negative() { -ai } else { ai.clone() };
                s.mod_floor(&abs_det)
            })
            .collect();
        let p: IntVector = v.apply(&lambda).into_iter().map(|c| c / &abs_det).collect();
        let mut y = vec![Int::zero(); n];
        for (pi, b) in p.iter().zip(&basis) {
            for (yj, bj) in y.iter_mut().zip(b) {
                *yj += pi * bj;
            }
        }
        points.push((y, lambda));
        // odometer over the box [0, h_ii)
        let mut i = 0;
        loop {
            if i == k {
                return points;
            }
            x[i] += 1;
            if x[i] < bounds[i] {
                break;
            }
            x[i] = Int::zero();
            i += 1;
        }
    }
}

fn adjugate(m: &IntMatrix) -> IntMatrix {
    let k = m.rows();
    if k == 1 {
        return IntMatrix::identity(1);
    }
    let mut adj = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            let minor = m
                .select_rows((0..k).filter(|&r| r != j))
                .select_cols((0..k).filter(|&c| c != i));
            let d = minor.det().expect("square minor");
            adj[(i, j)] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    adj
}

/// Canonical generating set of the monoid `cone ∩ M`, where `M` is the
/// lattice with basis `lattice`. Units appear as `±` a Hermite basis of the
/// unit group; the remaining generators are reduced modulo it.
pub(crate) fn saturated_generators(cone: &Cone, lattice: &[IntVector]) -> Vec<IntVector> {
    let n = cone.ambient_rank();
    let m = lattice.len();
    if m == 0 {
        return vec![];
    }
    let b = IntMatrix::from_columns(n, lattice).expect("lattice vectors of length n");
    let local = cone.preimage(&b).expect("matching rank");
    let gens = saturated_generators_standard(&local);
    canonical_set(gens.iter().map(|g| b.apply(g)).collect())
}

fn saturated_generators_standard(cone: &Cone) -> Vec<IntVector> {
    let m = cone.ambient_rank();
    let lin = cone.lineality_basis().to_vec();
    if lin.is_empty() {
        return hilbert_basis_of_rays(m, cone.pointed_rays());
    }
    let lin_m = IntMatrix::from_rows(m, &lin).expect("rank m");
    let functionals = kernel_basis(&lin_m);
    if functionals.is_empty() {
        return canonical_set(
            lin.iter()
                .flat_map(|l| [l.clone(), neg(l)])
                .collect(),
        );
    }
    let proj = IntMatrix::from_rows(m, &functionals).expect("rank m");
    let image = cone.image(&proj).expect("matching rank");
    let mut out: Vec<IntVector> = lin.iter().flat_map(|l| [l.clone(), neg(l)]).collect();
    for h in hilbert_basis_of_rays(proj.rows(), image.pointed_rays()) {
        let lift = solve_linear(&proj, &h)
            .expect("matching rank")
            .expect("projection onto a saturated quotient is surjective");
        out.push(lift.particular);
    }
    canonical_set(out)
}
