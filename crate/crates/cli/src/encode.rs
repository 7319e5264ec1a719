//! Core values to result trees and back.

use serde_json::{json, Map, Value};

use logmod::blowup::ChartCover;
use logmod::fan::{Fan, OntoReport, PLFunction};
use logmod::morphism::{
    Certificate, IntegralityVerdict, KatoOutcome, KatoWitness, MorphismExactness,
    MorphismIntegrality, NeatnessReport, Tri, Witness,
};
use logmod::{AffineMonoid, Cone, Int, IntMatrix, IntVector, MonoidHom, MonoidIdeal};

/// Integers that fit `i64` become JSON numbers, larger ones strings.
pub fn int(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn vector(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vectors(vs: &[IntVector]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    vectors(&m.row_vectors())
}

pub fn monoid(m: &AffineMonoid) -> Value {
    json!({ "rank": m.rank(), "gens": vectors(m.gens()) })
}

pub fn ideal(k: &MonoidIdeal) -> Value {
    vectors(k.gens())
}

pub fn hom(h: &MonoidHom) -> Value {
    json!({
        "source": monoid(h.source()),
        "target": monoid(h.target()),
        "matrix": matrix(h.matrix()),
    })
}

pub fn cone(c: &Cone) -> Value {
    vectors(&c.rays())
}

pub fn fan(f: &Fan) -> Value {
    json!({
        "rank": f.ambient_rank(),
        "cones": f.max_cones().iter().map(cone).collect::<Vec<_>>(),
    })
}

pub fn pl_function(s: &PLFunction) -> Value {
    let pieces: Vec<Value> = s
        .domains()
        .map(|(c, l)| json!({ "cone": cone(c), "linear": vector(l) }))
        .collect();
    json!({ "rank": s.ambient_rank(), "pieces": pieces })
}

pub fn tri(t: Tri) -> Value {
    match t {
        Tri::True => json!(true),
        Tri::False => json!(false),
        Tri::Unknown => Value::Null,
    }
}

pub fn neatness(n: &NeatnessReport) -> Value {
    json!({
        "gp_injective": n.gp_injective,
        "coker_rank": n.coker_rank,
        "coker_torsion": vector(&n.coker_torsion),
        "local": n.is_local,
    })
}

pub fn certificate(c: Certificate) -> Value {
    Value::String(
        match c {
            Certificate::Identity => "identity",
            Certificate::FreeModule => "free_module",
            Certificate::MiracleFlatness => "miracle_flatness",
        }
        .into(),
    )
}

pub fn kato_witness(w: &KatoWitness) -> Value {
    json!({
        "a1": vector(&w.a1),
        "a2": vector(&w.a2),
        "b1": vector(&w.b1),
        "b2": vector(&w.b2),
    })
}

pub fn kato(k: &KatoOutcome) -> Value {
    match k {
        KatoOutcome::NoViolationUpTo(b) => json!({ "violated": false, "bound": b }),
        KatoOutcome::Violated(w) => json!({ "violated": true, "witness": kato_witness(w) }),
    }
}

pub fn verdict(v: &IntegralityVerdict) -> Value {
    match v {
        IntegralityVerdict::Integral(c) => {
            json!({ "verdict": "integral", "certificate": certificate(*c) })
        }
        IntegralityVerdict::UnknownUpTo(b) => json!({ "verdict": "unknown", "bound": b }),
        IntegralityVerdict::NotIntegral(w) => {
            let witness = match w.as_ref() {
                Witness::Kato { hom: h, witness } => {
                    let mut o = kato_witness(witness);
                    o["kind"] = json!("kato");
                    o["hom"] = hom(h);
                    o
                }
                Witness::FaceCondition { hom: h, face, image } => json!({
                    "kind": "face_condition",
                    "hom": hom(h),
                    "face": cone(face),
                    "image": cone(image),
                }),
            };
            json!({ "verdict": "not_integral", "witness": witness })
        }
    }
}

pub fn morphism_exactness(m: &MorphismExactness) -> Value {
    let faces: Vec<Value> = m
        .table
        .iter()
        .map(|f| json!({ "face": cone(&f.face), "exact": f.exact }))
        .collect();
    json!({ "exact": m.exact, "faces": faces })
}

pub fn morphism_integrality(m: &MorphismIntegrality) -> Value {
    let faces: Vec<Value> = m
        .table
        .iter()
        .map(|(c, v)| json!({ "face": cone(c), "integral": verdict(v) }))
        .collect();
    json!({ "integral": tri(m.verdict), "faces": faces })
}

pub fn cover(c: &ChartCover) -> Value {
    let charts: Vec<Value> = c
        .charts
        .iter()
        .map(|ch| {
            json!({
                "label": vector(&ch.label),
                "monoid": monoid(&ch.monoid),
                "cone": cone(&ch.cone),
            })
        })
        .collect();
    json!({
        "base": monoid(&c.base),
        "ideal": ideal(&c.ideal),
        "charts": charts,
    })
}

pub fn onto(o: &OntoReport) -> Value {
    json!({
        "onto": o.onto,
        "fiber_dims": o.fiber_dims,
        "constant_fiber_dim": o.constant_fiber_dim,
    })
}

/// A malformed result tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeError(pub String);

impl std::fmt::Display for DecodeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

pub type Decoded<T> = Result<T, DecodeError>;

fn bad<T>(what: impl Into<String>) -> Decoded<T> {
    Err(DecodeError(what.into()))
}

pub fn field<'a>(v: &'a Value, key: &str) -> Decoded<&'a Value> {
    v.get(key)
        .ok_or_else(|| DecodeError(format!("missing field `{key}`")))
}

pub fn obj(v: &Value) -> Decoded<&Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| DecodeError("expected an object".into()))
}

pub fn arr(v: &Value) -> Decoded<&Vec<Value>> {
    v.as_array()
        .ok_or_else(|| DecodeError("expected an array".into()))
}

pub fn boolean(v: &Value) -> Decoded<bool> {
    v.as_bool()
        .ok_or_else(|| DecodeError("expected a boolean".into()))
}

pub fn usize_of(v: &Value) -> Decoded<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| DecodeError("expected a count".into()))
}

pub fn str_of(v: &Value) -> Decoded<&str> {
    v.as_str()
        .ok_or_else(|| DecodeError("expected a string".into()))
}

pub fn int_of(v: &Value) -> Decoded<Int> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .or_else(|| n.as_u64().map(Int::from))
            .ok_or_else(|| DecodeError(format!("`{n}` is not an integer"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| DecodeError(format!("`{s}` is not an integer"))),
        _ => bad("expected an integer"),
    }
}

pub fn vector_of(v: &Value) -> Decoded<IntVector> {
    arr(v)?.iter().map(int_of).collect()
}

pub fn vectors_of(v: &Value) -> Decoded<Vec<IntVector>> {
    arr(v)?.iter().map(vector_of).collect()
}

fn lib<T>(r: logmod::Result<T>) -> Decoded<T> {
    r.map_err(|e| DecodeError(e.to_string()))
}

pub fn monoid_of(v: &Value) -> Decoded<AffineMonoid> {
    let n = usize_of(field(v, "rank")?)?;
    lib(AffineMonoid::new(n, &vectors_of(field(v, "gens")?)?))
}

pub fn ideal_of(v: &Value, parent: &AffineMonoid) -> Decoded<MonoidIdeal> {
    lib(MonoidIdeal::new(parent, &vectors_of(v)?))
}

pub fn hom_of(v: &Value) -> Decoded<MonoidHom> {
    let source = monoid_of(field(v, "source")?)?;
    let target = monoid_of(field(v, "target")?)?;
    let rows = vectors_of(field(v, "matrix")?)?;
    if rows.len() != target.rank() {
        return bad("matrix row count differs from target rank");
    }
    let m = lib(IntMatrix::from_rows(source.rank(), &rows))?;
    lib(MonoidHom::new(&source, &target, &m))
}

pub fn cone_of(v: &Value, n: usize) -> Decoded<Cone> {
    lib(Cone::from_generators(n, &vectors_of(v)?))
}

pub fn fan_of(v: &Value) -> Decoded<Fan> {
    let n = usize_of(field(v, "rank")?)?;
    let cones = arr(field(v, "cones")?)?
        .iter()
        .map(|c| cone_of(c, n))
        .collect::<Decoded<Vec<_>>>()?;
    lib(Fan::new(n, cones))
}

pub fn kato_witness_of(v: &Value) -> Decoded<KatoWitness> {
    Ok(KatoWitness {
        a1: vector_of(field(v, "a1")?)?,
        a2: vector_of(field(v, "a2")?)?,
        b1: vector_of(field(v, "b1")?)?,
        b2: vector_of(field(v, "b2")?)?,
    })
}
