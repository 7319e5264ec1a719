//! End-to-end constructions: exactification by a blow-up of the base and
//! integralization by subdividing fans, each with recorded verdicts.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::blowup::{blowup_charts, common_denominator, ChartCover};
use crate::error::{Error, Result};
use crate::fan::{
    chart_of_cone, cones_map_onto, ideal_from_pl, projective_support, pullback_pl,
    subdivide_by_pl, Fan, OntoReport, PLFunction,
};
use crate::lattice::{dot, is_zero, primitive, scale, unit_vector, Cone, Int, IntMatrix, IntVector};
use crate::monoid::{AffineMonoid, MonoidIdeal};
use crate::morphism::{
    Certificate, IntegralityVerdict, KatoOutcome, MonoidHom, MorphismExactness,
    MorphismIntegrality, NeatnessReport, Strategy,
};

/// Bound of the Kato cross-check run on every integralized chart.
pub const CROSS_CHECK_BOUND: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub neatness: NeatnessReport,
    pub exact_hom: bool,
    pub exact_morphism: MorphismExactness,
    pub integral_hom: IntegralityVerdict,
    pub integral_morphism: MorphismIntegrality,
}

/// Neatness, exactness and integrality of `h`, pointwise and at every face.
pub fn analyze(h: &MonoidHom) -> Result<AnalysisReport> {
    Ok(AnalysisReport {
        neatness: h.neatness_report(),
        exact_hom: h.is_exact_hom()?,
        exact_morphism: h.exactness_per_face()?,
        integral_hom: h.is_integral(Strategy::Auto)?,
        integral_morphism: h.integrality_per_face()?,
    })
}

/// The base change of input `input` to chart `chart` of the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseChangedChart {
    pub chart: usize,
    pub input: usize,
    pub hom: MonoidHom,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactificationResult {
    /// `{q ∈ gp(Q) : h_i(q) ∈ P_i}` for each input.
    pub closures: Vec<AffineMonoid>,
    /// Ideals `(b, a_1, ...)` of the distinct closures
    /// `{q ∈ gp(Q) : h_i(q) ∈ (P_i)_F}` over faces `F` at which the
    /// localized input is not exact, skipping those whose blow-up is
    /// already dominated.
    pub factor_ideals: Vec<MonoidIdeal>,
    /// Product of the factor ideals.
    pub base_ideal: MonoidIdeal,
    pub cover: ChartCover,
    pub per_chart: Vec<BaseChangedChart>,
}

impl ExactificationResult {
    pub fn all_exact(&self) -> bool {
        self.per_chart.iter().all(|c| c.exact)
    }
}

fn inclusion(q: &AffineMonoid, m: &AffineMonoid) -> Result<MonoidHom> {
    MonoidHom::new(q, m, &IntMatrix::identity(q.rank()))
}

/// Blows up `q` along the product of the ideals making each `h_i` exact
/// after base change, at every face of its target, and records the
/// exactness of every base change.
pub fn exactify(q: &AffineMonoid, homs: &[MonoidHom]) -> Result<ExactificationResult> {
    if !q.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if !q.is_sharp() {
        return Err(Error::NotSharp);
    }
    if homs.is_empty() {
        return Err(Error::Precondition("no input charts".into()));
    }
    let mut closures = Vec::new();
    let mut needed: Vec<AffineMonoid> = Vec::new();
    for h in homs {
        if h.source() != q {
            return Err(Error::SourceMismatch);
        }
        if !h.is_gp_injective() {
            return Err(Error::NotGpInjective);
        }
        closures.push(h.exactness()?.closure);
        for face in h.target().faces()? {
            let local_q = q.localize(&h.preimage_face(&face)?)?;
            let local_p = h.target().localize(&face)?;
            let pre = local_p.cone().preimage(h.matrix())?;
            let closure = AffineMonoid::from_cone(&pre, q.gp_basis())?;
            if closure != local_q && !needed.contains(&closure) {
                needed.push(closure);
            }
        }
    }
    // factors whose subdivision is already refined add nothing
    let mut factor_ideals = Vec::new();
    let mut base_ideal = MonoidIdeal::unit(q);
    for c in &needed {
        let (b, mut a) = common_denominator(q, c)?;
        a.push(b);
        let k = MonoidIdeal::new(q, &a)?;
        let current = blowup_charts(q, &base_ideal)?.fan()?;
        if current.refines(&blowup_charts(q, &k)?.fan()?)? {
            continue;
        }
        base_ideal = base_ideal.product(&k)?;
        factor_ideals.push(k);
    }
    let cover = blowup_charts(q, &base_ideal)?;
    let mut per_chart = Vec::new();
    for (ci, chart) in cover.charts.iter().enumerate() {
        let incl = inclusion(q, &chart.monoid)?;
        for (i, h) in homs.iter().enumerate() {
            let hom = h.pushout_fs(&incl)?.leg_q(&incl)?;
            let exact = hom.is_exact_morphism()?;
            per_chart.push(BaseChangedChart {
                chart: ci,
                input: i,
                hom,
                exact,
            });
        }
    }
    Ok(ExactificationResult {
        closures,
        factor_ideals,
        base_ideal,
        cover,
        per_chart,
    })
}

/// One chart of the integralized morphism: the map of charts of `base_cone`
/// and of `source_cone`, which lies over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralChart {
    pub base_cone: Cone,
    pub source_cone: Cone,
    pub hom: MonoidHom,
    pub certificate: Certificate,
    pub kato: KatoOutcome,
    pub exact_morphism: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralizationResult {
    /// Sum of the projective support functions of the ray images; lives on
    /// the whole dual space of the base.
    pub support_function: PLFunction,
    /// Linear shift `m` with `m - s >= 0` on the base dual cone.
    pub shift: IntVector,
    /// The ideal whose order function is `m - s`.
    pub base_ideal: MonoidIdeal,
    pub base_fan: Fan,
    pub source_fan: Fan,
    pub onto: OntoReport,
    pub charts: Vec<IntegralChart>,
}

fn require_good_chart(m: &AffineMonoid) -> Result<()> {
    if !m.is_saturated() {
        return Err(Error::NotSaturated);
    }
    if !m.is_sharp() {
        return Err(Error::NotSharp);
    }
    if m.gp_basis().len() != m.rank() {
        return Err(Error::NotFullLattice);
    }
    Ok(())
}

/// Smallest multiple `c·w` of the generator sum `w` of `q` with
/// `c·w - l ∈ σ_Q^∨` for every piece `l` of `s`.
fn dominating_shift(q: &AffineMonoid, s: &PLFunction) -> IntVector {
    let w = q
        .gens()
        .iter()
        .fold(vec![Int::zero(); q.rank()], |acc, g| crate::lattice::add(&acc, g));
    let sigma = q.cone().dual();
    let mut c = Int::zero();
    for l in s.pieces() {
        for r in sigma.rays() {
            let need = dot(l, &r);
            let unit = dot(&w, &r);
            if need.is_positive() {
                c = c.max(need.div_ceil(&unit));
            }
        }
    }
    scale(&c, &w)
}

/// Subdivides the dual cones of `h: Q -> P` so that every induced chart map
/// is integral, certifying each chart.
pub fn integralize(h: &MonoidHom) -> Result<IntegralizationResult> {
    let (q, p) = (h.source(), h.target());
    require_good_chart(q)?;
    require_good_chart(p)?;
    if !h.is_gp_injective() {
        return Err(Error::NotGpInjective);
    }
    if !h.is_local() {
        return Err(Error::Precondition("homomorphism is not local".into()));
    }
    if !h.is_exact_hom()? {
        return Err(Error::Precondition("homomorphism is not exact".into()));
    }
    let (n, n2) = (q.rank(), p.rank());
    let phi = h.matrix().transpose();
    let sigma_q = q.cone().dual();
    let sigma_p = p.cone().dual();

    let mut s = PLFunction::linear(&Cone::full_space(n), vec![Int::zero(); n])?;
    for rho in sigma_p.pointed_rays() {
        let v = phi.apply(rho);
        if is_zero(&v) {
            continue;
        }
        s = s.sum(&projective_support(&primitive(&v))?)?;
    }

    let base = Fan::from_cone(&sigma_q);
    let on_base = s.restrict(&base)?;
    let shift = dominating_shift(q, &on_base);
    let base_ideal = ideal_from_pl(q, &on_base.negate().add_linear(&shift))?;

    let base_fan = subdivide_by_pl(&base, &s)?.resolve_smooth()?;
    let top = Fan::from_cone(&sigma_p);
    let pulled = pullback_pl(&phi, &s, &top)?;
    let source_fan = base_fan.pull_back(&phi, &subdivide_by_pl(&top, &pulled)?)?;

    let onto = cones_map_onto(&phi, &source_fan, &base_fan)?;
    if let Some((c, img)) = &onto.failure {
        return Err(Error::CertificationFailed(format!(
            "cone {:?} maps onto {:?}, which is not a cone of the base fan",
            c.rays(),
            img.rays()
        )));
    }
    if !onto.constant_fiber_dim {
        return Err(Error::CertificationFailed(format!(
            "fiber dimensions {:?} are not constant",
            onto.fiber_dims
        )));
    }

    let std_q: Vec<IntVector> = (0..n).map(|i| unit_vector(n, i)).collect();
    let std_p: Vec<IntVector> = (0..n2).map(|i| unit_vector(n2, i)).collect();
    let mut charts = Vec::new();
    for tau2 in source_fan.max_cones() {
        let tau = tau2.image(&phi)?;
        let hom = MonoidHom::new(
            &chart_of_cone(&tau, &std_q)?,
            &chart_of_cone(tau2, &std_p)?,
            h.matrix(),
        )?;
        let fail = |why: String| {
            Error::CertificationFailed(format!(
                "chart over {:?} -> {:?}: {why}",
                tau2.rays(),
                tau.rays()
            ))
        };
        let certificate = match hom.is_integral(Strategy::MiracleFlatness) {
            Ok(IntegralityVerdict::Integral(c)) => c,
            Ok(v) => return Err(fail(format!("{v:?}"))),
            Err(e) => return Err(fail(e.to_string())),
        };
        let kato = hom.normalized()?.kato_bounded(CROSS_CHECK_BOUND)?;
        if kato.is_violated() {
            return Err(fail(format!("{kato:?}")));
        }
        let exact_morphism = hom.is_exact_morphism()?;
        charts.push(IntegralChart {
            base_cone: tau,
            source_cone: tau2.clone(),
            hom,
            certificate,
            kato,
            exact_morphism,
        });
    }
    Ok(IntegralizationResult {
        support_function: s,
        shift,
        base_ideal,
        base_fan,
        source_fan,
        onto,
        charts,
    })
}
