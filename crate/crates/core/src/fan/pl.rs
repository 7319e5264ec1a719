//! Integral piecewise-linear functions on fans.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{covers, Fan};
use crate::error::{Error, Result};
use crate::lattice::{
    dot, hnf_rows, is_zero, neg, primitive_and_extend, saturated_generators, sub,
    Cone, Int, IntMatrix, IntVector,
};
use crate::monoid::{AffineMonoid, MonoidIdeal};

/// A function on the support of a fan, linear on each maximal cone.
/// `pieces[i]` is the functional on `fan.max_cones()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PLFunction {
    fan: Fan,
    pieces: Vec<IntVector>,
}

fn generators(c: &Cone) -> Vec<IntVector> {
    c.rays()
}

impl PLFunction {
    /// Checks that the pieces agree on shared faces.
    pub fn new(fan: Fan, pieces: Vec<IntVector>) -> Result<Self> {
        if pieces.len() != fan.cones.len() {
            return Err(Error::DimensionMismatch {
                expected: fan.cones.len(),
                found: pieces.len(),
            });
        }
        for p in &pieces {
            if p.len() != fan.ambient_rank {
                return Err(Error::DimensionMismatch {
                    expected: fan.ambient_rank,
                    found: p.len(),
                });
            }
        }
        for (i, a) in fan.cones.iter().enumerate() {
            for (j, b) in fan.cones.iter().enumerate().skip(i + 1) {
                let meet = a.intersect(b)?;
                let diff = sub(&pieces[i], &pieces[j]);
                if generators(&meet).iter().any(|r| !dot(&diff, r).is_zero()) {
                    return Err(Error::Discontinuous);
                }
            }
        }
        Ok(Self { fan, pieces })
    }

    /// Builds the fan from the given cones. Cones that turn out not to be
    /// maximal are dropped together with their functionals.
    pub fn from_pieces(n: usize, pieces: Vec<(Cone, IntVector)>) -> Result<Self> {
        let fan = Fan::new(n, pieces.iter().map(|(c, _)| c.clone()).collect())?;
        let mut data = Vec::with_capacity(fan.cones.len());
        for c in &fan.cones {
            let l = pieces
                .iter()
                .find(|(d, _)| d == c)
                .map(|(_, l)| l.clone())
                .ok_or_else(|| Error::Internal("lost a maximal cone".into()))?;
            data.push(l);
        }
        Self::new(fan, data)
    }

    /// The linear function `l` on a single cone.
    pub fn linear(c: &Cone, l: IntVector) -> Result<Self> {
        Self::new(Fan::from_cone(c), vec![l])
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn pieces(&self) -> &[IntVector] {
        &self.pieces
    }

    pub fn ambient_rank(&self) -> usize {
        self.fan.ambient_rank
    }

    /// `(cone, functional)` pairs in fan order.
    pub fn domains(&self) -> impl Iterator<Item = (&Cone, &IntVector)> {
        self.fan.cones.iter().zip(&self.pieces)
    }

    pub fn eval(&self, v: &[Int]) -> Result<Int> {
        self.domains()
            .find(|(c, _)| c.contains(v))
            .map(|(_, l)| dot(l, v))
            .ok_or(Error::NotDefinedOnSupport)
    }

    /// The functional of a domain containing `c`.
    pub fn piece_on(&self, c: &Cone) -> Option<&IntVector> {
        self.domains().find(|(d, _)| d.contains_cone(c)).map(|(_, l)| l)
    }

    /// Linear on the whole support.
    pub fn is_linear(&self) -> bool {
        let l = &self.pieces[0];
        self.domains().all(|(c, m)| {
            let diff = sub(l, m);
            generators(c).iter().all(|r| dot(&diff, r).is_zero())
        })
    }

    /// Whether the function is the pointwise minimum of its pieces on its
    /// support.
    pub fn is_min_of_pieces(&self) -> bool {
        self.domains().all(|(c, l)| {
            generators(c).iter().all(|r| {
                let own = dot(l, r);
                self.pieces.iter().all(|m| dot(m, r) >= own)
            })
        })
    }

    pub fn negate(&self) -> Self {
        Self {
            fan: self.fan.clone(),
            pieces: self.pieces.iter().map(|l| neg(l)).collect(),
        }
    }

    /// Adds a global linear function.
    pub fn add_linear(&self, m: &[Int]) -> Self {
        Self {
            fan: self.fan.clone(),
            pieces: self.pieces.iter().map(|l| crate::lattice::add(l, m)).collect(),
        }
    }

    /// Restriction to the fan of pieces `c ∩ domain` for the cones `c` of
    /// `f`, whose support must lie in that of `self`.
    pub fn restrict(&self, f: &Fan) -> Result<Self> {
        if !self.fan.support_covers(f)? {
            return Err(Error::NotDefinedOnSupport);
        }
        let mut out = Vec::new();
        for c in &f.cones {
            for (d, l) in self.domains() {
                let meet = c.intersect(d)?;
                if meet.dim() == c.dim() {
                    out.push((meet, l.clone()));
                }
            }
        }
        Self::from_pieces(f.ambient_rank, out)
    }

    /// Pointwise sum, on the common refinement of the two fans.
    pub fn sum(&self, other: &PLFunction) -> Result<Self> {
        let fan = self.fan.common_refinement(&other.fan)?;
        let pieces = fan
            .cones
            .iter()
            .map(|c| {
                let a = self.piece_on(c).ok_or(Error::NotDefinedOnSupport)?;
                let b = other.piece_on(c).ok_or(Error::NotDefinedOnSupport)?;
                Ok(crate::lattice::add(a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(fan, pieces)
    }

    /// Same support and same values.
    pub fn agrees_with(&self, other: &PLFunction) -> Result<bool> {
        if self.ambient_rank() != other.ambient_rank() || !self.fan.same_support(&other.fan)? {
            return Ok(false);
        }
        let refined = self.fan.common_refinement(&other.fan)?;
        for c in &refined.cones {
            for r in generators(c) {
                if self.eval(&r)? != other.eval(&r)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn require_chart_base(q: &AffineMonoid) -> Result<()> {
    if !q.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if q.gp_basis().len() != q.rank() {
        return Err(Error::NotFullLattice);
    }
    Ok(())
}

/// The generators that are vertices of `conv(gens) + cone(q)`, in order:
/// those `g` with `(g, 1)` an extreme ray of the homogenized cone. Without
/// vertices (`q` not sharp) every generator is kept.
///
/// The hull is grown from a few minimizers, adding the worst violator of
/// each facet until every generator satisfies it.
fn newton_vertices(q: &AffineMonoid, gens: &[IntVector]) -> Result<Vec<IntVector>> {
    if !q.is_sharp() || gens.len() <= 1 {
        return Ok(gens.to_vec());
    }
    let n = q.rank();
    let lift = |v: &IntVector, last: Int| {
        let mut w = v.clone();
        w.push(last);
        w
    };
    let lifted: Vec<IntVector> = gens.iter().map(|g| lift(g, Int::one())).collect();
    let recession: Vec<IntVector> = q.cone().rays().iter().map(|r| lift(r, Int::zero())).collect();
    let argmin = |f: &IntVector| {
        (0..lifted.len())
            .min_by_key(|&i| dot(f, &lifted[i]))
            .expect("nonempty")
    };
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    let sigma = q.cone().dual();
    let mut interior = vec![Int::zero(); n];
    for r in sigma.rays() {
        chosen.insert(argmin(&lift(&r, Int::zero())));
        interior = crate::lattice::add(&interior, &r);
    }
    chosen.insert(argmin(&lift(&interior, Int::zero())));
    loop {
        let mut hull_gens: Vec<IntVector> = chosen.iter().map(|&i| lifted[i].clone()).collect();
        hull_gens.extend(recession.iter().cloned());
        let hull = Cone::from_generators(n + 1, &hull_gens)?;
        let mut added = false;
        for f in hull.facets() {
            let i = argmin(f);
            if dot(f, &lifted[i]).is_negative() && chosen.insert(i) {
                added = true;
            }
        }
        for e in hull.equations() {
            for sign in [e.clone(), neg(e)] {
                let i = argmin(&sign);
                if dot(&sign, &lifted[i]).is_negative() && chosen.insert(i) {
                    added = true;
                }
            }
        }
        if !added {
            let extreme: BTreeSet<IntVector> = hull
                .pointed_rays()
                .iter()
                .filter(|r| r[n].is_one())
                .map(|r| r[..n].to_vec())
                .collect();
            return Ok(gens.iter().filter(|g| extreme.contains(*g)).cloned().collect());
        }
    }
}

/// `n ↦ min_k <k, n>` over the generators of `k` on the dual cone of `q`,
/// with its maximal domains of linearity.
pub fn pl_from_ideal(q: &AffineMonoid, k: &MonoidIdeal) -> Result<PLFunction> {
    require_chart_base(q)?;
    if k.parent() != q {
        return Err(Error::ParentMismatch);
    }
    if k.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let sigma = q.cone().dual();
    let n = q.rank();
    let gens = newton_vertices(q, k.gens())?;
    let mut pieces = Vec::new();
    let mut seen: Vec<Cone> = Vec::new();
    for g in &gens {
        let cuts: Vec<IntVector> = gens.iter().filter(|h| *h != g).map(|h| sub(h, g)).collect();
        let domain = sigma.cut(&cuts)?;
        if domain.dim() == sigma.dim() && !seen.contains(&domain) {
            seen.push(domain.clone());
            pieces.push((domain, g.clone()));
        }
    }
    PLFunction::from_pieces(n, pieces)
}

/// The ideal `{m ∈ Q : <m, ·> >= s on σ_Q}` of a function that is the
/// minimum of its pieces.
pub fn ideal_from_pl(q: &AffineMonoid, s: &PLFunction) -> Result<MonoidIdeal> {
    require_chart_base(q)?;
    let n = q.rank();
    if s.ambient_rank() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.ambient_rank(),
        });
    }
    if !s.is_min_of_pieces() {
        return Err(Error::NonConvex);
    }
    let sigma = q.cone().dual();
    let s = s.restrict(&Fan::from_cone(&sigma))?;

    // <m, r> >= <l, r> for every generator r of every domain
    let mut rows: Vec<(IntVector, Int)> = Vec::new();
    for (c, l) in s.domains() {
        for r in generators(c) {
            let b = dot(l, &r);
            rows.push((r, b));
        }
    }
    for a in q.cone().ineqs() {
        rows.push((a, Int::zero()));
    }
    let rows: Vec<(IntVector, Int)> = rows
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let in_region = |m: &[Int]| rows.iter().all(|(a, b)| dot(a, m) >= *b);

    // vertices of the region from its homogenization
    let mut hom: Vec<IntVector> = rows
        .iter()
        .map(|(a, b)| {
            let mut r = a.clone();
            r.push(-b);
            r
        })
        .collect();
    let mut t = vec![Int::zero(); n + 1];
    t[n] = Int::one();
    hom.push(t);
    let lifted = Cone::from_inequalities(n + 1, &hom)?;
    let vertices: Vec<&IntVector> = lifted
        .pointed_rays()
        .iter()
        .filter(|r| r[n].is_positive())
        .collect();
    if vertices.is_empty() {
        return Err(Error::EmptyIdeal);
    }

    let hilbert = saturated_generators(q.cone(), q.gp_basis());
    let mut lo = vec![Int::zero(); n];
    let mut hi = vec![Int::zero(); n];
    for i in 0..n {
        lo[i] = vertices
            .iter()
            .map(|v| v[i].div_floor(&v[n]))
            .min()
            .expect("nonempty");
        hi[i] = vertices
            .iter()
            .map(|v| v[i].div_ceil(&v[n]))
            .max()
            .expect("nonempty");
        for h in &hilbert {
            if h[i].is_negative() {
                lo[i] += &h[i];
            } else {
                hi[i] += &h[i];
            }
        }
    }

    let nonunits: Vec<&IntVector> = hilbert.iter().filter(|h| !q.is_unit(h)).collect();
    let mut found = Vec::new();
    let mut m = lo.clone();
    'outer: loop {
        if in_region(&m) && nonunits.iter().all(|h| !in_region(&sub(&m, h))) {
            found.push(m.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            if m[i] < hi[i] {
                m[i] += 1;
                break;
            }
            m[i] = lo[i].clone();
            i += 1;
        }
    }
    if found.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    MonoidIdeal::new(q, &found)
}

/// Refines `f` by the maximal domains of linearity of `s` inside each cone
/// of `f`.
pub fn subdivide_by_pl(f: &Fan, s: &PLFunction) -> Result<Fan> {
    if s.ambient_rank() != f.ambient_rank {
        return Err(Error::DimensionMismatch {
            expected: f.ambient_rank,
            found: s.ambient_rank(),
        });
    }
    if !s.fan.support_covers(f)? {
        return Err(Error::NotDefinedOnSupport);
    }
    let mut fine = Vec::new();
    let mut merged = Vec::new();
    for c in &f.cones {
        let gens_c = generators(c);
        // pieces of c, grouped by the functional they carry on span(c)
        let mut groups: Vec<(IntVector, Vec<Cone>)> = Vec::new();
        for (d, l) in s.domains() {
            let meet = c.intersect(d)?;
            if meet.dim() != c.dim() {
                continue;
            }
            fine.push(meet.clone());
            match groups.iter_mut().find(|(m, _)| {
                let diff = sub(m, l);
                gens_c.iter().all(|r| dot(&diff, r).is_zero())
            }) {
                Some((_, g)) => {
                    if !g.contains(&meet) {
                        g.push(meet)
                    }
                }
                None => groups.push((l.clone(), vec![meet])),
            }
        }
        for (i, (_, group)) in groups.iter().enumerate() {
            let rays: Vec<IntVector> = group.iter().flat_map(generators).collect();
            let hull = Cone::from_generators(f.ambient_rank, &rays)?;
            let mut clean = true;
            for (j, (_, other)) in groups.iter().enumerate() {
                if i == j {
                    continue;
                }
                for o in other {
                    if hull.intersect(o)?.dim() == c.dim() {
                        clean = false;
                    }
                }
            }
            if clean && covers(&hull, group) {
                merged.push(hull);
            } else {
                merged.extend(group.iter().cloned());
            }
        }
    }
    match Fan::new(f.ambient_rank, merged) {
        Ok(fan) => Ok(fan),
        Err(_) => Fan::new(f.ambient_rank, fine),
    }
}

/// `s ∘ φ` on the cones of `src` refined by the preimages of the domains of
/// `s`. `φ` maps the lattice of `src` to that of `s`.
pub fn pullback_pl(phi: &IntMatrix, s: &PLFunction, src: &Fan) -> Result<PLFunction> {
    if phi.rows() != s.ambient_rank() || phi.cols() != src.ambient_rank {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_rank(),
            found: phi.rows(),
        });
    }
    for c in &src.cones {
        if !s.fan.support_covers(&Fan::from_cone(&c.image(phi)?))? {
            return Err(Error::NotDefinedOnSupport);
        }
    }
    let fan = s.fan.pull_back(phi, src)?;
    let phi_t = phi.transpose();
    let pieces = fan
        .cones
        .iter()
        .map(|c| {
            let img = c.image(phi)?;
            let l = s.piece_on(&img).ok_or(Error::NotDefinedOnSupport)?;
            Ok(phi_t.apply(l))
        })
        .collect::<Result<Vec<_>>>()?;
    PLFunction::new(fan, pieces)
}

/// `n ↦ -min(0, x_1, ..., x_r)` where `x` are the coordinates of `n` in a
/// basis extending the primitive vector along `n1`. Its domains of
/// linearity form the fan of projective space on the rays
/// `b_1, ..., b_r, -(b_1 + ... + b_r)`.
pub fn projective_support(n1: &[Int]) -> Result<PLFunction> {
    if is_zero(n1) {
        return Err(Error::ZeroVector);
    }
    let (_, b) = primitive_and_extend(n1)?;
    let r = b.rows();
    let (_, b_inv) = hnf_rows(&b);
    let cols = b.column_vectors();
    let minus_sum: IntVector = (0..r)
        .map(|i| -cols.iter().map(|c| &c[i]).sum::<Int>())
        .collect();
    let mut pieces = vec![(Cone::from_generators(r, &cols)?, vec![Int::zero(); r])];
    for j in 0..r {
        let mut rays: Vec<IntVector> = (0..r)
            .filter(|&i| i != j)
            .map(|i| cols[i].clone())
            .collect();
        rays.push(minus_sum.clone());
        pieces.push((Cone::from_generators(r, &rays)?, neg(&b_inv.row(j))));
    }
    PLFunction::from_pieces(r, pieces)
}
