//! Bounded search for violations of the four-element integrality criterion.

use std::collections::{HashMap, HashSet};

use super::fast::{self, Membership, Small, SmallMatrix};
use super::MonoidHom;
use crate::error::{Error, Result};
use crate::lattice::IntVector;
use crate::monoid::AffineMonoid;

/// Search bound used by the pipelines.
pub const DEFAULT_BOUND: u32 = 8;

/// `h(a1) + b1 = h(a2) + b2` with no `a3, a4, b` such that
/// `b1 = h(a3) + b`, `b2 = h(a4) + b` and `a1 + a3 = a2 + a4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KatoWitness {
    pub a1: IntVector,
    pub a2: IntVector,
    pub b1: IntVector,
    pub b2: IntVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KatoOutcome {
    NoViolationUpTo(u32),
    Violated(KatoWitness),
}

impl KatoOutcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, KatoOutcome::Violated(_))
    }
}

/// Elements with coefficient sum at most `bound`, ordered by minimal
/// coefficient sum and then by value, largest first.
fn layered(gens: &[Small], dim: usize, bound: u32) -> Result<Vec<Small>> {
    let mut seen: HashSet<Small> = HashSet::new();
    let zero = vec![0i64; dim];
    seen.insert(zero.clone());
    let mut out = vec![zero];
    let mut frontier = out.clone();
    for _ in 0..bound {
        let mut next = Vec::new();
        for e in &frontier {
            for g in gens {
                let v = fast::add(e, g)?;
                if seen.insert(v.clone()) {
                    next.push(v);
                }
            }
        }
        next.sort_by(|a, b| b.cmp(a));
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

struct Search<'a> {
    q_gens: &'a [Small],
    h_gens: Vec<Small>,
    degrees: Vec<i64>,
    bound: u32,
    grading: Small,
    p: &'a Membership,
}

impl Search<'_> {
    /// All `a3` in the candidate set for `b1`.
    fn candidates(&self, b1: &[i64]) -> Result<Vec<Small>> {
        let budget = fast::dot(&self.grading, b1)?;
        let mut found: HashSet<Small> = HashSet::new();
        let mut out = Vec::new();
        let zero_q = vec![0i64; self.q_gens.first().map_or(0, |g| g.len())];
        self.walk(0, zero_q, b1.to_vec(), budget, self.bound, &mut found, &mut out)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        i: usize,
        a3: Small,
        rest: Small,
        budget: i64,
        kernel_budget: u32,
        found: &mut HashSet<Small>,
        out: &mut Vec<Small>,
    ) -> Result<()> {
        if i == self.q_gens.len() {
            if found.insert(a3.clone()) && self.p.contains(&rest)? {
                out.push(a3);
            }
            return Ok(());
        }
        let (g, hg, dg) = (&self.q_gens[i], &self.h_gens[i], self.degrees[i]);
        let (mut a, mut r, mut b, mut k) = (a3, rest, budget, kernel_budget);
        loop {
            self.walk(i + 1, a.clone(), r.clone(), b, k, found, out)?;
            if dg == 0 {
                if k == 0 {
                    break;
                }
                k -= 1;
            } else {
                if b < dg {
                    break;
                }
                b -= dg;
            }
            a = fast::add(&a, g)?;
            r = fast::sub(&r, hg)?;
        }
        Ok(())
    }
}

impl MonoidHom {
    /// Exhaustive search for a violated instance among elements with
    /// generator coefficient sums at most `bound`. Requires sharp source and
    /// target.
    pub fn kato_bounded(&self, bound: u32) -> Result<KatoOutcome> {
        let (q, p) = (self.source(), self.target());
        if !q.is_sharp() || !p.is_sharp() {
            return Err(Error::NotSharp);
        }
        let h = SmallMatrix::new(self.matrix())?;
        let q_gens: Vec<Small> = q.gens().iter().map(|g| fast::to_small(g)).collect::<Result<_>>()?;
        let p_gens: Vec<Small> = p.gens().iter().map(|g| fast::to_small(g)).collect::<Result<_>>()?;
        let h_gens: Vec<Small> = q_gens.iter().map(|g| h.apply(g)).collect::<Result<_>>()?;
        let grading = fast::to_small(&grading_of(p))?;
        let degrees: Vec<i64> = h_gens.iter().map(|v| fast::dot(&grading, v)).collect::<Result<_>>()?;
        let p_member = Membership::new(p)?;
        let q_member = Membership::new(q)?;
        let search = Search {
            q_gens: &q_gens,
            h_gens,
            degrees,
            bound,
            grading,
            p: &p_member,
        };

        let sq = layered(&q_gens, q.rank(), bound)?;
        let sp = layered(&p_gens, p.rank(), bound)?;
        let sp_set: HashSet<&Small> = sp.iter().collect();
        let mut candidates: Vec<Option<Vec<Small>>> = vec![None; sp.len()];
        let mut verdicts: HashMap<Small, Option<usize>> = HashMap::new();

        for a1 in &sq {
            for a2 in &sq {
                if a1 == a2 {
                    continue;
                }
                let d = fast::sub(a1, a2)?;
                if !verdicts.contains_key(&d) {
                    let hd = h.apply(&d)?;
                    let mut failing = None;
                    for (j, b1) in sp.iter().enumerate() {
                        let b2 = fast::add(b1, &hd)?;
                        if !sp_set.contains(&b2) {
                            continue;
                        }
                        if candidates[j].is_none() {
                            candidates[j] = Some(search.candidates(b1)?);
                        }
                        let mut ok = false;
                        for a3 in candidates[j].as_ref().expect("filled above") {
                            if q_member.contains(&fast::add(a3, &d)?)? {
                                ok = true;
                                break;
                            }
                        }
                        if !ok {
                            failing = Some(j);
                            break;
                        }
                    }
                    verdicts.insert(d.clone(), failing);
                }
                if let Some(j) = verdicts[&d] {
                    let b1 = &sp[j];
                    let b2 = fast::add(b1, &h.apply(&d)?)?;
                    return Ok(KatoOutcome::Violated(KatoWitness {
                        a1: fast::to_big(a1),
                        a2: fast::to_big(a2),
                        b1: fast::to_big(b1),
                        b2: fast::to_big(&b2),
                    }));
                }
            }
        }
        Ok(KatoOutcome::NoViolationUpTo(bound))
    }
}

/// Sum of the facet normals of the cone; positive on nonzero elements of a
/// sharp monoid.
pub(crate) fn grading_of(m: &AffineMonoid) -> IntVector {
    let mut g = vec![crate::lattice::Int::from(0); m.rank()];
    for f in m.cone().facets() {
        g = crate::lattice::add(&g, f);
    }
    g
}

impl KatoWitness {
    /// Re-checks the witness: the hypothesis holds and no `(a3, a4, b)`
    /// exists. `bound` caps coefficients of generators mapping to zero, as
    /// in the search.
    pub fn replays(&self, h: &MonoidHom, bound: u32) -> Result<bool> {
        let (q, p) = (h.source(), h.target());
        if !q.is_sharp() || !p.is_sharp() {
            return Err(Error::NotSharp);
        }
        let lhs = crate::lattice::add(&h.apply(&self.a1), &self.b1);
        let rhs = crate::lattice::add(&h.apply(&self.a2), &self.b2);
        if lhs != rhs
            || !q.contains(&self.a1)
            || !q.contains(&self.a2)
            || !p.contains(&self.b1)
            || !p.contains(&self.b2)
        {
            return Ok(false);
        }
        let hm = SmallMatrix::new(h.matrix())?;
        let q_gens: Vec<Small> = q.gens().iter().map(|g| fast::to_small(g)).collect::<Result<_>>()?;
        let h_gens: Vec<Small> = q_gens.iter().map(|g| hm.apply(g)).collect::<Result<_>>()?;
        let grading = fast::to_small(&grading_of(p))?;
        let degrees: Vec<i64> = h_gens.iter().map(|v| fast::dot(&grading, v)).collect::<Result<_>>()?;
        let p_member = Membership::new(p)?;
        let search = Search {
            q_gens: &q_gens,
            h_gens,
            degrees,
            bound,
            grading,
            p: &p_member,
        };
        let d = fast::sub(&fast::to_small(&self.a1)?, &fast::to_small(&self.a2)?)?;
        for a3 in search.candidates(&fast::to_small(&self.b1)?)? {
            if q.contains(&fast::to_big(&fast::add(&a3, &d)?)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
