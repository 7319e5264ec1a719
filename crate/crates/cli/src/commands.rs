//! Subcommands as pure functions from parsed inputs to result trees.
//!
//! Every result records the command, its options and its inputs, so that
//! `verify` can recompute it from the result alone.

use serde_json::{json, Value};

use logmod::blowup::{blowup_charts, is_locally_principal};
use logmod::fan::{pl_from_ideal, Fan};
use logmod::morphism::IntegralityVerdict;
use logmod::pipeline;
use logmod::{AffineMonoid, Error, Int, MonoidHom, MonoidIdeal};

use crate::encode as e;

/// Why a command produced no result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Malformed or unsuitable input; exit code 2.
    Input(String),
    /// An internal assertion or a certificate that did not check; exit 3.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Internal(_) | Error::CertificationFailed(_) | Error::SearchOverflow => {
                Failure::Internal(err.to_string())
            }
            _ => Failure::Input(err.to_string()),
        }
    }
}

/// A result tree and whether it carries a negative verdict (exit code 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub negative: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.negative)
    }
}

fn wrap(command: &str, options: Value, input: Value, result: Value, negative: bool) -> Outcome {
    Outcome {
        value: json!({
            "command": command,
            "options": options,
            "input": input,
            "result": result,
        }),
        negative,
    }
}

pub fn analyze(h: &MonoidHom, bound: u32) -> Result<Outcome, Failure> {
    let neat = h.neatness_report();
    let exactness = h.exactness()?;
    let per_face = h.exactness_per_face()?;
    let integral = h.is_integral_auto(bound)?;
    let morphism = h.integrality_per_face()?;
    let integral_flag = match &integral {
        IntegralityVerdict::Integral(_) => json!(true),
        IntegralityVerdict::NotIntegral(_) => json!(false),
        IntegralityVerdict::UnknownUpTo(_) => Value::Null,
    };
    let negative = !exactness.exact
        || !per_face.exact
        || integral.is_not_integral()
        || morphism.verdict == logmod::morphism::Tri::False;
    let result = json!({
        "exact": exactness.exact,
        "integral": integral_flag,
        "neatness": e::neatness(&neat),
        "exact_closure": e::monoid(&exactness.closure),
        "exact_morphism": e::morphism_exactness(&per_face),
        "integral_hom": e::verdict(&integral),
        "integral_morphism": e::morphism_integrality(&morphism),
    });
    Ok(wrap(
        "analyze",
        json!({ "bound": bound }),
        json!({ "hom": e::hom(h) }),
        result,
        negative,
    ))
}

/// Push-out of `h: Q -> P` along `g: Q -> Q'`.
pub fn pushout(h: &MonoidHom, g: &MonoidHom) -> Result<Outcome, Failure> {
    let po = h.pushout_fs(g)?;
    let base_changed = po.leg_q(g)?;
    let result = json!({
        "monoid": e::monoid(&po.monoid),
        "inj_p": e::matrix(&po.inj_p),
        "inj_q": e::matrix(&po.inj_q),
        "torsion": e::vector(&po.torsion),
        "torsion_free": po.torsion.is_empty(),
        "base_change": {
            "hom": e::hom(&base_changed),
            "exact": base_changed.is_exact_hom()?,
        },
    });
    Ok(wrap(
        "pushout",
        json!({}),
        json!({ "hom": e::hom(h), "along": e::hom(g) }),
        result,
        false,
    ))
}

pub fn blowup(q: &AffineMonoid, k: &MonoidIdeal) -> Result<Outcome, Failure> {
    let cover = blowup_charts(q, k)?;
    let principal = is_locally_principal(&cover);
    let fan = cover.fan()?;
    let result = json!({
        "cover": e::cover(&cover),
        "fan": e::fan(&fan),
        "locally_principal": principal,
        "trivial": cover.is_trivial(),
    });
    Ok(wrap(
        "blowup",
        json!({}),
        json!({ "monoid": e::monoid(q), "ideal": e::ideal(k) }),
        result,
        !principal,
    ))
}

pub fn exactify(q: &AffineMonoid, homs: &[MonoidHom]) -> Result<Outcome, Failure> {
    let r = pipeline::exactify(q, homs)?;
    let per_chart: Vec<Value> = r
        .per_chart
        .iter()
        .map(|c| {
            json!({
                "chart": c.chart,
                "input": c.input,
                "hom": e::hom(&c.hom),
                "exact": c.exact,
            })
        })
        .collect();
    let all_exact = r.all_exact();
    // only defined over a full lattice
    let ord = pl_from_ideal(q, &r.base_ideal)
        .map(|s| e::pl_function(&s))
        .unwrap_or(Value::Null);
    let result = json!({
        "closures": r.closures.iter().map(e::monoid).collect::<Vec<_>>(),
        "factor_ideals": r.factor_ideals.iter().map(e::ideal).collect::<Vec<_>>(),
        "base_ideal": e::ideal(&r.base_ideal),
        "ord_function": ord,
        "cover": e::cover(&r.cover),
        "per_chart": per_chart,
        "all_exact": all_exact,
    });
    let targets: Vec<Value> = homs
        .iter()
        .map(|h| json!({ "target": e::monoid(h.target()), "matrix": e::matrix(h.matrix()) }))
        .collect();
    Ok(wrap(
        "exactify",
        json!({}),
        json!({ "base": e::monoid(q), "homs": targets }),
        result,
        !all_exact,
    ))
}

pub fn integralize(h: &MonoidHom) -> Result<Outcome, Failure> {
    let r = pipeline::integralize(h)?;
    let charts: Vec<Value> = r
        .charts
        .iter()
        .map(|c| {
            json!({
                "base_cone": e::cone(&c.base_cone),
                "source_cone": e::cone(&c.source_cone),
                "hom": e::hom(&c.hom),
                "certificate": e::certificate(c.certificate),
                "kato": e::kato(&c.kato),
                "exact_morphism": c.exact_morphism,
            })
        })
        .collect();
    let result = json!({
        "support_function": e::pl_function(&r.support_function),
        "shift": e::vector(&r.shift),
        "base_ideal": e::ideal(&r.base_ideal),
        "base_fan": e::fan(&r.base_fan),
        "base_fan_smooth": r.base_fan.is_smooth(),
        "source_fan": e::fan(&r.source_fan),
        "onto": e::onto(&r.onto),
        "cross_check_bound": pipeline::CROSS_CHECK_BOUND,
        "charts": charts,
    });
    Ok(wrap(
        "integralize",
        json!({}),
        json!({ "hom": e::hom(h) }),
        result,
        false,
    ))
}

pub fn fan_subdivide(f: &Fan, v: &[Int]) -> Result<Outcome, Failure> {
    if v.len() != f.ambient_rank() {
        return Err(Failure::Input(format!(
            "subdivision vector needs {} coordinates, found {}",
            f.ambient_rank(),
            v.len()
        )));
    }
    let g = f.star_subdivide(v)?;
    let result = json!({
        "fan": e::fan(&g),
        "same_support": g.same_support(f)?,
        "refines": g.refines(f)?,
    });
    Ok(wrap(
        "fan subdivide",
        json!({}),
        json!({ "fan": e::fan(f), "vector": e::vector(v) }),
        result,
        false,
    ))
}

pub fn fan_resolve(f: &Fan) -> Result<Outcome, Failure> {
    let g = f.resolve_smooth()?;
    let added: Vec<_> = g
        .rays()
        .into_iter()
        .filter(|r| !f.rays().contains(r))
        .collect();
    let result = json!({
        "fan": e::fan(&g),
        "smooth": g.is_smooth(),
        "same_support": g.same_support(f)?,
        "refines": g.refines(f)?,
        "added_rays": e::vectors(&added),
    });
    Ok(wrap(
        "fan resolve",
        json!({}),
        json!({ "fan": e::fan(f) }),
        result,
        false,
    ))
}

pub fn fan_check(f: &Fan) -> Result<Outcome, Failure> {
    let cones: Vec<Value> = f
        .max_cones()
        .iter()
        .map(|c| {
            json!({
                "rays": e::cone(c),
                "dim": c.dim(),
                "simplicial": c.is_simplicial(),
                "pointed": c.is_pointed(),
            })
        })
        .collect();
    let result = json!({
        "valid": Fan::validate(f.ambient_rank(), f.max_cones()),
        "dim": f.dim(),
        "rays": e::vectors(&f.rays()),
        "cone_count": f.all_cones().len(),
        "smooth": f.is_smooth(),
        "max_cones": cones,
    });
    Ok(wrap(
        "fan check",
        json!({}),
        json!({ "fan": e::fan(f) }),
        result,
        false,
    ))
}

/// Every cone of `f`, faces included, as lists of ray coordinates.
pub fn fan_geometry(f: &Fan) -> Result<Outcome, Failure> {
    let cones: Vec<Value> = f.all_cones().iter().map(e::cone).collect();
    let result = json!({ "rank": f.ambient_rank(), "cones": cones });
    Ok(wrap(
        "fan emit-geometry",
        json!({}),
        json!({ "fan": e::fan(f) }),
        result,
        false,
    ))
}
