//! Machine-integer mirrors of exact data for the bounded searches.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{Int, IntMatrix, IntVector};
use crate::monoid::AffineMonoid;

pub(crate) type Small = Vec<i64>;

pub(crate) fn to_small(v: &[Int]) -> Result<Small> {
    v.iter().map(|x| x.to_i64().ok_or(Error::SearchOverflow)).collect()
}

pub(crate) fn to_big(v: &[i64]) -> IntVector {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> Result<Small> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).ok_or(Error::SearchOverflow))
        .collect()
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Result<Small> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y).ok_or(Error::SearchOverflow))
        .collect()
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::SearchOverflow)
    })
}

pub(crate) struct SmallMatrix {
    rows: Vec<Small>,
}

impl SmallMatrix {
    pub(crate) fn new(m: &IntMatrix) -> Result<Self> {
        Ok(Self {
            rows: m.row_vectors().iter().map(|r| to_small(r)).collect::<Result<_>>()?,
        })
    }

    pub(crate) fn apply(&self, v: &[i64]) -> Result<Small> {
        self.rows.iter().map(|r| dot(r, v)).collect()
    }
}

/// Membership oracle; exact for saturated monoids and delegating otherwise.
pub(crate) struct Membership {
    equations: Vec<Small>,
    facets: Vec<Small>,
    gp: Vec<Small>,
    fallback: Option<AffineMonoid>,
}

impl Membership {
    pub(crate) fn new(m: &AffineMonoid) -> Result<Self> {
        let conv = |vs: &[IntVector]| -> Result<Vec<Small>> { vs.iter().map(|v| to_small(v)).collect() };
        Ok(Self {
            equations: conv(m.cone().equations())?,
            facets: conv(m.cone().facets())?,
            gp: conv(m.gp_basis())?,
            fallback: (!m.is_saturated()).then(|| m.clone()),
        })
    }

    pub(crate) fn contains(&self, x: &[i64]) -> Result<bool> {
        for e in &self.equations {
            if dot(e, x)? != 0 {
                return Ok(false);
            }
        }
        for f in &self.facets {
            if dot(f, x)? < 0 {
                return Ok(false);
            }
        }
        // echelon reduction against the Hermite basis of the group
        let mut r = x.to_vec();
        for b in &self.gp {
            let Some(p) = b.iter().position(|&v| v != 0) else { continue };
            if r[p] % b[p] != 0 {
                return Ok(false);
            }
            let q = r[p] / b[p];
            for (ri, bi) in r.iter_mut().zip(b) {
                *ri = bi.checked_mul(q).and_then(|t| ri.checked_sub(t)).ok_or(Error::SearchOverflow)?;
            }
        }
        if r.iter().any(|&v| v != 0) {
            return Ok(false);
        }
        Ok(match &self.fallback {
            None => true,
            Some(m) => m.contains(&to_big(x)),
        })
    }
}
