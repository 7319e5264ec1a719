//! Push-outs in the category of fs monoids.

use num_traits::Zero;

use super::MonoidHom;
use crate::error::{Error, Result};
use crate::lattice::{coker_invariants, kernel_basis, solve_linear, Int, IntMatrix, IntVector};
use crate::monoid::AffineMonoid;

/// `P ⊕_Q Q'` with its two coprojections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pushout {
    pub monoid: AffineMonoid,
    /// Coprojection `P -> result`.
    pub inj_p: IntMatrix,
    /// Coprojection `Q' -> result`.
    pub inj_q: IntMatrix,
    /// Invariant factors of the torsion split off the amalgamated group.
    pub torsion: Vec<Int>,
}

impl Pushout {
    pub fn leg_p(&self, h: &MonoidHom) -> Result<MonoidHom> {
        MonoidHom::new(h.target(), &self.monoid, &self.inj_p)
    }

    /// The base-changed homomorphism `Q' -> P ⊕_Q Q'`.
    pub fn leg_q(&self, g: &MonoidHom) -> Result<MonoidHom> {
        MonoidHom::new(g.target(), &self.monoid, &self.inj_q)
    }
}

/// An integer matrix `M` with `M·(a·b) = c·b` for every `b` in `basis`, if
/// one exists.
fn factor_through(a: &IntMatrix, c: &IntMatrix, basis: &[IntVector]) -> Option<IntMatrix> {
    let ab: Vec<IntVector> = basis.iter().map(|b| a.apply(b)).collect();
    let cb: Vec<IntVector> = basis.iter().map(|b| c.apply(b)).collect();
    let sys = IntMatrix::from_rows(a.rows(), &ab).ok()?;
    let mut rows = Vec::with_capacity(c.rows());
    for i in 0..c.rows() {
        let rhs: IntVector = cb.iter().map(|v| v[i].clone()).collect();
        rows.push(solve_linear(&sys, &rhs).ok()??.particular);
    }
    IntMatrix::from_rows(a.rows(), &rows).ok()
}

fn is_gp_iso(g: &MonoidHom) -> bool {
    let (free, torsion) = coker_invariants(&g.gp_matrix());
    g.is_gp_injective() && free == 0 && torsion.is_empty()
}

impl MonoidHom {
    /// Push-out of `P <- Q -> Q'` where `self: Q -> P` and `g: Q -> Q'`.
    ///
    /// When one leg is an isomorphism on groups and the other factors
    /// through it integrally, the result lives in the ambient lattice of the
    /// opposite target; otherwise in the free part of the amalgamated
    /// ambient group.
    pub fn pushout_fs(&self, g: &MonoidHom) -> Result<Pushout> {
        if self.source() != g.source() {
            return Err(Error::SourceMismatch);
        }
        for m in [self.source(), self.target(), g.target()] {
            if !m.is_saturated() {
                return Err(Error::NotSaturated);
            }
        }
        let (p, qp) = (self.target(), g.target());
        let basis = self.source().gp_basis();
        if is_gp_iso(g) {
            if let Some(m) = factor_through(g.matrix(), self.matrix(), basis) {
                return assemble(IntMatrix::identity(p.rank()), m, p, qp, vec![]);
            }
        }
        if is_gp_iso(self) {
            if let Some(m) = factor_through(self.matrix(), g.matrix(), basis) {
                return assemble(m, IntMatrix::identity(qp.rank()), p, qp, vec![]);
            }
        }
        let (np, nq) = (p.rank(), qp.rank());
        let relations: Vec<IntVector> = basis
            .iter()
            .map(|b| {
                let mut r = self.apply(b);
                r.extend(g.apply(b).into_iter().map(|x| -x));
                r
            })
            .collect();
        let rel = IntMatrix::from_rows(np + nq, &relations)?;
        let pi = IntMatrix::from_rows(np + nq, &kernel_basis(&rel))?;
        let inj_p = pi.select_cols(0..np);
        let inj_q = pi.select_cols(np..np + nq);

        let hp = self.gp_matrix();
        let gq = g.gp_matrix();
        let mut stacked = IntMatrix::zeros(hp.rows() + gq.rows(), hp.cols());
        for j in 0..hp.cols() {
            for i in 0..hp.rows() {
                stacked[(i, j)] = hp[(i, j)].clone();
            }
            for i in 0..gq.rows() {
                stacked[(hp.rows() + i, j)] = -&gq[(i, j)];
            }
        }
        let (_, torsion) = coker_invariants(&stacked);
        assemble(inj_p, inj_q, p, qp, torsion)
    }
}

fn assemble(
    inj_p: IntMatrix,
    inj_q: IntMatrix,
    p: &AffineMonoid,
    qp: &AffineMonoid,
    torsion: Vec<Int>,
) -> Result<Pushout> {
    let n = inj_p.rows();
    let mut gens: Vec<IntVector> = p.gens().iter().map(|x| inj_p.apply(x)).collect();
    gens.extend(qp.gens().iter().map(|x| inj_q.apply(x)));
    gens.retain(|v| v.iter().any(|x| !x.is_zero()));
    let monoid = AffineMonoid::new(n, &gens)?.saturate();
    Ok(Pushout {
        monoid,
        inj_p,
        inj_q,
        torsion,
    })
}
