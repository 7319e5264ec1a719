//! Log blow-ups of affine charts along monoid ideals.
//!
//! Cones of a [`ChartCover`] live in the dual of the group of the base, in
//! coordinates dual to `base.gp_basis()`.

use crate::error::{Error, Result};
use crate::fan::{pl_from_ideal, Fan};
use crate::lattice::{dot, scale, solve_linear, sub, zero_vector, Cone, Int, IntMatrix, IntVector};
use crate::monoid::{AffineMonoid, MonoidIdeal};
use crate::morphism::MonoidHom;

use num_integer::Integer;
use num_traits::{Signed, Zero};

/// One affine chart `base⟨K - label⟩` of a blow-up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub label: IntVector,
    pub monoid: AffineMonoid,
    pub cone: Cone,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartCover {
    pub base: AffineMonoid,
    pub ideal: MonoidIdeal,
    pub charts: Vec<Chart>,
}

impl ChartCover {
    /// The fan formed by the chart cones.
    pub fn fan(&self) -> Result<Fan> {
        Fan::new(
            self.base.gp_basis().len(),
            self.charts.iter().map(|c| c.cone.clone()).collect(),
        )
    }

    pub fn is_trivial(&self) -> bool {
        self.charts.len() == 1 && self.charts[0].monoid == self.base
    }
}

/// The ideal of `h.target()` generated by the image of `k`.
pub fn ideal_pullback(h: &MonoidHom, k: &MonoidIdeal) -> Result<MonoidIdeal> {
    if k.parent() != h.source() {
        return Err(Error::ParentMismatch);
    }
    let images: Vec<IntVector> = k.gens().iter().map(|g| h.apply(g)).collect();
    MonoidIdeal::new(h.target(), &images)
}

/// `m` and `k` rewritten in coordinates of the group of `m`.
fn in_gp_coordinates(m: &AffineMonoid, k: &MonoidIdeal) -> Result<(AffineMonoid, MonoidIdeal)> {
    let d = m.gp_basis().len();
    let coords = |x: &IntVector| m.gp_coordinates(x).ok_or(Error::OutsideGroup);
    let gens = m.gens().iter().map(coords).collect::<Result<Vec<_>>>()?;
    let local = AffineMonoid::new(d, &gens)?;
    let kgens = k.gens().iter().map(coords).collect::<Result<Vec<_>>>()?;
    let ideal = MonoidIdeal::new(&local, &kgens)?;
    Ok((local, ideal))
}

/// Chart cover of the blow-up of `q` along `k`: one chart per generator of
/// `k` whose domain of linearity of `ord_k` is full-dimensional.
pub fn blowup_charts(q: &AffineMonoid, k: &MonoidIdeal) -> Result<ChartCover> {
    if k.parent() != q {
        return Err(Error::ParentMismatch);
    }
    if k.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    if !q.is_sharp() {
        return Err(Error::NotSharp);
    }
    if !q.is_saturated() {
        return Err(Error::NotSaturated);
    }
    let (local, local_k) = in_gp_coordinates(q, k)?;
    let ord = pl_from_ideal(&local, &local_k)?;
    let index = |piece: &IntVector| {
        local_k
            .gens()
            .iter()
            .position(|g| g == piece)
            .ok_or_else(|| Error::Internal("domain without a generator".into()))
    };
    // the remaining generators lie in the Newton polyhedron of the pieces,
    // so they add nothing to any chart
    let vertices = ord
        .pieces()
        .iter()
        .map(|piece| Ok(k.gens()[index(piece)?].clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut charts = Vec::new();
    for (cone, piece) in ord.domains() {
        let p = &k.gens()[index(piece)?];
        let diffs: Vec<IntVector> = vertices.iter().map(|g| sub(g, p)).collect();
        charts.push(Chart {
            label: p.clone(),
            monoid: q.extend_fs(&diffs)?,
            cone: cone.clone(),
        });
    }
    Ok(ChartCover {
        base: q.clone(),
        ideal: k.clone(),
        charts,
    })
}

/// On every chart the ideal becomes generated by the chart label.
pub fn is_locally_principal(cover: &ChartCover) -> bool {
    cover.charts.iter().all(|c| {
        cover.ideal.contains(&c.label)
            && cover
                .ideal
                .gens()
                .iter()
                .all(|k| c.monoid.contains(&sub(k, &c.label)))
    })
}

/// A common denominator `b ∈ Q` and numerators `a_i ∈ Q` with
/// `P = Q⟨a_i - b⟩`. Only generators of `P` outside `Q` get a numerator.
pub fn common_denominator(q: &AffineMonoid, p: &AffineMonoid) -> Result<(IntVector, Vec<IntVector>)> {
    if q.rank() != p.rank() {
        return Err(Error::DimensionMismatch {
            expected: q.rank(),
            found: p.rank(),
        });
    }
    if q.gp_basis() != p.gp_basis() {
        return Err(Error::NotGpExtension);
    }
    if q.gens().iter().any(|g| !p.contains(g)) {
        return Err(Error::OutsideParent);
    }
    let outside: Vec<&IntVector> = p.gens().iter().filter(|g| !q.contains(g)).collect();
    let solved = solved_denominator(q, &outside)?;
    let b = if q.is_saturated() {
        let scaled = scaled_denominator(q, &outside);
        let size = |v: &IntVector| (v.iter().map(|x| x.abs()).sum::<Int>(), v.clone());
        std::cmp::min_by_key(solved, scaled, size)
    } else {
        solved
    };
    let a: Vec<IntVector> = outside.iter().map(|g| crate::lattice::add(g, &b)).collect();
    let diffs: Vec<IntVector> = a.iter().map(|x| sub(x, &b)).collect();
    if &q.extend_fs(&diffs)? != p {
        return Err(Error::Internal("common denominator does not recover P".into()));
    }
    Ok((b, a))
}

/// Least multiple of the generator sum `w` of a saturated `q` that moves
/// every `g` into the cone of `q`.
fn scaled_denominator(q: &AffineMonoid, outside: &[&IntVector]) -> IntVector {
    let w = q
        .gens()
        .iter()
        .fold(zero_vector(q.rank()), |acc, g| crate::lattice::add(&acc, g));
    let mut t = Int::zero();
    for u in q.cone().facets() {
        let wu = dot(u, &w);
        for g in outside {
            let gu = dot(u, g);
            if gu.is_negative() {
                t = t.max((-gu).div_ceil(&wu));
            }
        }
    }
    scale(&t, &w)
}

/// Clears the negative coefficients of a solution over the generators.
fn solved_denominator(q: &AffineMonoid, outside: &[&IntVector]) -> Result<IntVector> {
    let n = q.rank();
    let gens = IntMatrix::from_columns(n, q.gens())?;
    let mut b = vec![Int::zero(); n];
    for g in outside {
        let c = solve_linear(&gens, g)?
            .ok_or_else(|| Error::Internal("generator outside the common group".into()))?
            .particular;
        for (cj, qj) in c.iter().zip(q.gens()) {
            if cj.is_negative() {
                for (bi, x) in b.iter_mut().zip(qj) {
                    *bi -= cj * x;
                }
            }
        }
    }
    Ok(b)
}

/// One push-out comparison of [`base_change_verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartCheck {
    /// `None` for the chart `V_0 = Q⟨a_i - b⟩`, else the numerator `a_j`.
    pub label: Option<IntVector>,
    pub expected: AffineMonoid,
    pub found: AffineMonoid,
    /// For `V_j`: the push-out over `V_0 ∩ V_j` agrees with that over `V_j`.
    pub overlap_ok: bool,
}

impl ChartCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.found && self.overlap_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseChangeReport {
    pub denominator: IntVector,
    pub numerators: Vec<IntVector>,
    pub ideal: MonoidIdeal,
    pub cover: ChartCover,
    pub checks: Vec<ChartCheck>,
}

impl BaseChangeReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(ChartCheck::ok) && is_locally_principal(&self.cover)
    }

    pub fn failing(&self) -> Option<&ChartCheck> {
        self.checks.iter().find(|c| !c.ok())
    }
}

fn pushout_with(q: &AffineMonoid, p: &AffineMonoid, v: &AffineMonoid) -> Result<AffineMonoid> {
    let id = IntMatrix::identity(q.rank());
    let to_p = MonoidHom::new(q, p, &id)?;
    let to_v = MonoidHom::new(q, v, &id)?;
    let po = to_p.pushout_fs(&to_v)?;
    if !po.inj_p.is_identity() {
        return Err(Error::Internal("push-out left the common lattice".into()));
    }
    Ok(po.monoid)
}

/// Checks chartwise that the base change of `Q ⊆ P` along the blow-up of
/// `Q` at `(b, a_1, ..., a_r)` is an open immersion onto `P`.
pub fn base_change_verify(q: &AffineMonoid, p: &AffineMonoid) -> Result<BaseChangeReport> {
    let (b, a) = common_denominator(q, p)?;
    let mut kgens = a.clone();
    kgens.push(b.clone());
    let ideal = MonoidIdeal::new(q, &kgens)?;
    let cover = blowup_charts(q, &ideal)?;

    let mut checks = Vec::new();
    let fractions = |den: &IntVector| -> Vec<IntVector> {
        kgens.iter().map(|k| sub(k, den)).collect()
    };
    let v0 = q.extend_fs(&fractions(&b))?;
    checks.push(ChartCheck {
        label: None,
        expected: p.clone(),
        found: pushout_with(q, p, &v0)?,
        overlap_ok: true,
    });
    for aj in &a {
        let vj = q.extend_fs(&fractions(aj))?;
        let expected = p.extend_fs(&[sub(&b, aj)])?;
        let found = pushout_with(q, p, &vj)?;
        let mut both = fractions(&b);
        both.extend(fractions(aj));
        let overlap = pushout_with(q, p, &q.extend_fs(&both)?)?;
        checks.push(ChartCheck {
            label: Some(aj.clone()),
            expected,
            overlap_ok: overlap == found,
            found,
        });
    }
    Ok(BaseChangeReport {
        denominator: b,
        numerators: a,
        ideal,
        cover,
        checks,
    })
}

/// Outcome of [`blowup_laws_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawsReport {
    /// The pulled-back ideal is principal on every chart of `Bl_K`.
    pub principal_on_charts: bool,
    /// Blowing up a chart of `Bl_K` along the pulled-back ideal again gives
    /// the chart back.
    pub idempotent: bool,
    pub product_fan: Fan,
    /// Charts of `Bl_K` blown up along the pullback of `K'`.
    pub iterated_fan: Fan,
    pub refinement_fan: Fan,
    pub product_law: bool,
}

impl LawsReport {
    pub fn ok(&self) -> bool {
        self.principal_on_charts && self.idempotent && self.product_law
    }
}

fn inclusion(q: &AffineMonoid, m: &AffineMonoid) -> Result<MonoidHom> {
    MonoidHom::new(q, m, &IntMatrix::identity(q.rank()))
}

/// Fan of the blow-up of each chart of `cover` along the pullback of `k2`.
fn iterated_fan(cover: &ChartCover, k2: &MonoidIdeal) -> Result<Fan> {
    let d = cover.base.gp_basis().len();
    let mut cones = Vec::new();
    for c in &cover.charts {
        let pulled = ideal_pullback(&inclusion(&cover.base, &c.monoid)?, k2)?;
        let inner = blowup_charts(&c.monoid, &pulled)?;
        cones.extend(inner.charts.into_iter().map(|x| x.cone));
    }
    Fan::new(d, cones)
}

/// Self-product and product-ideal laws for blow-ups along `k` and `k2`.
pub fn blowup_laws_check(q: &AffineMonoid, k: &MonoidIdeal, k2: &MonoidIdeal) -> Result<LawsReport> {
    let cover = blowup_charts(q, k)?;
    let mut principal_on_charts = true;
    let mut idempotent = true;
    for c in &cover.charts {
        let pulled = ideal_pullback(&inclusion(q, &c.monoid)?, k)?;
        if !pulled.is_principal() {
            principal_on_charts = false;
            continue;
        }
        if !blowup_charts(&c.monoid, &pulled)?.is_trivial() {
            idempotent = false;
        }
    }
    let product_fan = blowup_charts(q, &k.product(k2)?)?.fan()?;
    let iterated = iterated_fan(&cover, k2)?;
    let refinement_fan = cover.fan()?.common_refinement(&blowup_charts(q, k2)?.fan()?)?;
    let product_law = product_fan == iterated && product_fan == refinement_fan;
    Ok(LawsReport {
        principal_on_charts,
        idempotent,
        product_fan,
        iterated_fan: iterated,
        refinement_fan,
        product_law,
    })
}

#[cfg(test)]
mod tests;
