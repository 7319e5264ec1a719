//! Double description: generators of `{y : <g, y> >= 0 for all g}`.

use num_traits::{Signed, Zero};

use super::{
    canonical_set, dot, is_zero, kernel_basis, primitive, rank_of, row_lattice_basis, sub, Int,
    IntMatrix, IntVector,
};

/// Generators of the dual of `cone(gens)`: a Hermite basis of its lineality
/// space (`gens^⊥`) and the extreme rays of its pointed part, taken inside
/// `span(gens)`, primitive and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DualDescription {
    pub lineality: Vec<IntVector>,
    pub rays: Vec<IntVector>,
}

pub(crate) fn dual_description(n: usize, gens: &[IntVector]) -> DualDescription {
    let gens: Vec<IntVector> = gens.iter().filter(|g| !is_zero(g)).cloned().collect();
    let g = IntMatrix::from_rows(n, &gens).expect("generators of length n");
    let lineality = kernel_basis(&g);
    let span = row_lattice_basis(n, &gens);
    if span.is_empty() {
        return DualDescription {
            lineality,
            rays: vec![],
        };
    }
    // y = sum z_j w_j with w_j a basis of span(gens); constraints <w_j, g> z_j
    let constraints: Vec<IntVector> = gens
        .iter()
        .map(|g| span.iter().map(|w| dot(w, g)).collect())
        .collect();
    let rays = extreme_rays(span.len(), &constraints)
        .into_iter()
        .map(|z| {
            let mut y = vec![Int::zero(); n];
            for (zj, w) in z.iter().zip(&span) {
                for (yi, wi) in y.iter_mut().zip(w) {
                    *yi += zj * wi;
                }
            }
            primitive(&y)
        })
        .collect();
    DualDescription {
        lineality,
        rays: canonical_set(rays),
    }
}

/// Extreme rays of the pointed cone `{z in R^d : a·z >= 0}`; the constraint
/// rows must have rank `d`.
fn extreme_rays(d: usize, constraints: &[IntVector]) -> Vec<IntVector> {
    let rows = canonical_set(constraints.iter().map(|c| primitive(c)).collect());
    let rows: Vec<IntVector> = rows.into_iter().filter(|r| !is_zero(r)).collect();

    let mut basis_idx = Vec::with_capacity(d);
    let mut chosen: Vec<IntVector> = Vec::with_capacity(d);
    for (i, r) in rows.iter().enumerate() {
        chosen.push(r.clone());
        if rank_of(&chosen) == chosen.len() {
            basis_idx.push(i);
        } else {
            chosen.pop();
        }
        if chosen.len() == d {
            break;
        }
    }
    assert_eq!(chosen.len(), d, "constraints must have full rank");

    // initial simplicial cone: ray j is cut out by all chosen rows but row j
    let mut rays: Vec<IntVector> = (0..d)
        .map(|j| {
            let others: Vec<IntVector> = (0..d).filter(|&i| i != j).map(|i| chosen[i].clone()).collect();
            let m = IntMatrix::from_rows(d, &others).expect("rows of width d");
            let k = kernel_basis(&m);
            let r = k.into_iter().next().expect("one-dimensional kernel");
            if dot(&chosen[j], &r).is_negative() {
                super::neg(&r)
            } else {
                r
            }
        })
        .collect();
    let mut processed: Vec<IntVector> = chosen;

    for (i, a) in rows.iter().enumerate() {
        if basis_idx.contains(&i) {
            continue;
        }
        let values: Vec<Int> = rays.iter().map(|r| dot(a, r)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            processed.push(a.clone());
            continue;
        }
        let zero_sets: Vec<Vec<bool>> = rays
            .iter()
            .map(|r| processed.iter().map(|c| dot(c, r).is_zero()).collect())
            .collect();
        let mut next: Vec<IntVector> = rays
            .iter()
            .zip(&values)
            .filter(|(_, v)| !v.is_negative())
            .map(|(r, _)| r.clone())
            .collect();
        for (p, vp) in values.iter().enumerate().filter(|(_, v)| v.is_positive()) {
            for (q, vq) in values.iter().enumerate().filter(|(_, v)| v.is_negative()) {
                let common: Vec<IntVector> = processed
                    .iter()
                    .enumerate()
                    .filter(|(c, _)| zero_sets[p][*c] && zero_sets[q][*c])
                    .map(|(_, row)| row.clone())
                    .collect();
                if d < 2 || common.len() < d - 2 || rank_of(&common) != d - 2 {
                    continue;
                }
                // vp * r_q - vq * r_p lies on the new hyperplane
                let combo = sub(
                    &super::scale(vp, &rays[q]),
                    &super::scale(vq, &rays[p]),
                );
                next.push(primitive(&combo));
            }
        }
        rays = canonical_set(next);
        processed.push(a.clone());
    }
    rays
}
