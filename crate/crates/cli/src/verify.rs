//! Re-checking emitted results.
//!
//! A result is accepted when recomputing it from its recorded inputs gives
//! the identical tree and every certificate it carries checks on its own
//! terms: Kato witnesses replay, integral charts re-certify, fans are
//! smooth and support-preserving where claimed.

use serde_json::{json, Value};

use logmod::fan::cones_map_onto;
use logmod::morphism::{IntegralityVerdict, Strategy};
use logmod::{IntMatrix, MonoidHom};

use crate::commands::{self, Failure, Outcome};
use crate::encode::{
    arr, boolean, fan_of, field, hom_of, ideal_of, kato_witness_of, monoid_of, str_of,
    usize_of, vector_of, vectors_of, DecodeError, Decoded,
};

impl From<DecodeError> for Failure {
    fn from(e: DecodeError) -> Self {
        Failure::Input(format!("malformed result: {e}"))
    }
}

/// Named outcomes of the certificate checks.
struct Checks(Vec<(String, bool)>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, ok: bool) {
        self.0.push((name.into(), ok));
    }

    fn lib(&mut self, name: impl Into<String>, r: logmod::Result<bool>) {
        self.push(name, r.unwrap_or(false));
    }
}

/// Runs the recorded command again on the recorded inputs.
pub fn recompute(v: &Value) -> Result<Outcome, Failure> {
    let command = str_of(field(v, "command")?)?;
    let input = field(v, "input")?;
    match command {
        "analyze" => {
            let bound = field(field(v, "options")?, "bound")?
                .as_u64()
                .and_then(|b| u32::try_from(b).ok())
                .ok_or_else(|| DecodeError("bad bound".into()))?;
            commands::analyze(&hom_of(field(input, "hom")?)?, bound)
        }
        "pushout" => commands::pushout(
            &hom_of(field(input, "hom")?)?,
            &hom_of(field(input, "along")?)?,
        ),
        "blowup" => {
            let q = monoid_of(field(input, "monoid")?)?;
            let k = ideal_of(field(input, "ideal")?, &q)?;
            commands::blowup(&q, &k)
        }
        "exactify" => {
            let q = monoid_of(field(input, "base")?)?;
            let mut homs = Vec::new();
            for t in arr(field(input, "homs")?)? {
                homs.push(hom_of(&json!({
                    "source": field(input, "base")?,
                    "target": field(t, "target")?,
                    "matrix": field(t, "matrix")?,
                }))?);
            }
            commands::exactify(&q, &homs)
        }
        "integralize" => commands::integralize(&hom_of(field(input, "hom")?)?),
        "fan subdivide" => commands::fan_subdivide(
            &fan_of(field(input, "fan")?)?,
            &vector_of(field(input, "vector")?)?,
        ),
        "fan resolve" => commands::fan_resolve(&fan_of(field(input, "fan")?)?),
        "fan check" => commands::fan_check(&fan_of(field(input, "fan")?)?),
        "fan emit-geometry" => commands::fan_geometry(&fan_of(field(input, "fan")?)?),
        "verify" => verify(field(input, "result")?),
        other => Err(Failure::Input(format!("unknown command `{other}`"))),
    }
}

fn check_analyze(v: &Value, checks: &mut Checks) -> Decoded<()> {
    let h = hom_of(field(field(v, "input")?, "hom")?)?;
    let bound = usize_of(field(field(v, "options")?, "bound")?)? as u32;
    let r = field(v, "result")?;
    let ih = field(r, "integral_hom")?;
    match str_of(field(ih, "verdict")?)? {
        "not_integral" => {
            let w = field(ih, "witness")?;
            let wh = hom_of(field(w, "hom")?)?;
            checks.push("witness hom is the normalized input", h.normalized().ok() == Some(wh.clone()));
            if str_of(field(w, "kind")?)? == "kato" {
                let kw = kato_witness_of(w)?;
                checks.lib("kato witness replays", kw.replays(&wh, bound));
            }
        }
        "integral" => {
            let strategy = match str_of(field(ih, "certificate")?)? {
                "identity" => Strategy::Identity,
                "free_module" => Strategy::FreeModule,
                _ => Strategy::MiracleFlatness,
            };
            let again = h.is_integral(strategy).map(|x| x.is_integral());
            checks.lib("integrality certificate re-derives", again);
        }
        _ => {}
    }
    let closure = monoid_of(field(r, "exact_closure")?)?;
    let exact = boolean(field(r, "exact")?)?;
    let q = h.source();
    let contains_q = q.gens().iter().all(|g| closure.contains(g));
    checks.push(
        "exact iff the closure is the source",
        contains_q && (exact == (&closure == q)),
    );
    Ok(())
}

fn check_pushout(v: &Value, checks: &mut Checks) -> Decoded<()> {
    let input = field(v, "input")?;
    let h = hom_of(field(input, "hom")?)?;
    let g = hom_of(field(input, "along")?)?;
    let r = field(v, "result")?;
    let m = monoid_of(field(r, "monoid")?)?;
    let rows = |key: &str, cols: usize| -> Decoded<IntMatrix> {
        IntMatrix::from_rows(cols, &vectors_of(field(r, key)?)?).map_err(|e| DecodeError(e.to_string()))
    };
    let ip = rows("inj_p", h.target().rank())?;
    let iq = rows("inj_q", g.target().rank())?;
    let square = ip.mul(h.matrix()).ok() == iq.mul(g.matrix()).ok();
    checks.push("push-out square commutes", square);
    let lands = h.target().gens().iter().all(|x| m.contains(&ip.apply(x)))
        && g.target().gens().iter().all(|x| m.contains(&iq.apply(x)));
    checks.push("coprojections land in the push-out", lands);
    Ok(())
}

fn check_blowup(v: &Value, checks: &mut Checks) -> Decoded<()> {
    let cover = field(field(v, "result")?, "cover")?;
    let ideal = vectors_of(field(cover, "ideal")?)?;
    let mut principal = true;
    for c in arr(field(cover, "charts")?)? {
        let m = monoid_of(field(c, "monoid")?)?;
        let label = vector_of(field(c, "label")?)?;
        principal &= ideal
            .iter()
            .all(|k| m.contains(&logmod::lattice::sub(k, &label)));
    }
    checks.push("ideal is principal on every chart", principal);
    Ok(())
}

fn check_exactify(v: &Value, checks: &mut Checks) -> Decoded<()> {
    let r = field(v, "result")?;
    let mut ok = true;
    for c in arr(field(r, "per_chart")?)? {
        let h = hom_of(field(c, "hom")?)?;
        let claimed = boolean(field(c, "exact")?)?;
        ok &= h.is_exact_morphism().ok() == Some(claimed);
    }
    checks.push("per-chart exactness re-derives", ok);
    Ok(())
}

fn check_integralize(v: &Value, checks: &mut Checks) -> Decoded<()> {
    let h = hom_of(field(field(v, "input")?, "hom")?)?;
    let r = field(v, "result")?;
    let base = fan_of(field(r, "base_fan")?)?;
    let source = fan_of(field(r, "source_fan")?)?;
    checks.push("base fan is smooth", base.is_smooth());
    let onto = cones_map_onto(&h.matrix().transpose(), &source, &base);
    checks.push(
        "source cones map onto base cones with constant fiber dimension",
        matches!(onto, Ok(o) if o.onto && o.constant_fiber_dim),
    );
    let bound = usize_of(field(r, "cross_check_bound")?)? as u32;
    let mut flat = true;
    let mut kato_clean = true;
    for c in arr(field(r, "charts")?)? {
        let ch: MonoidHom = hom_of(field(c, "hom")?)?;
        flat &= matches!(
            ch.is_integral(Strategy::MiracleFlatness),
            Ok(IntegralityVerdict::Integral(_))
        );
        kato_clean &= matches!(
            ch.normalized().and_then(|n| n.kato_bounded(bound)),
            Ok(k) if !k.is_violated()
        );
    }
    checks.push("every chart is flat over a smooth base", flat);
    checks.push("bounded Kato search finds no violation", kato_clean);
    Ok(())
}

fn check_fan_output(v: &Value, checks: &mut Checks, smooth: bool) -> Decoded<()> {
    let before = fan_of(field(field(v, "input")?, "fan")?)?;
    let after = fan_of(field(field(v, "result")?, "fan")?)?;
    checks.lib("support is preserved", after.same_support(&before));
    checks.lib("output refines input", after.refines(&before));
    if smooth {
        checks.push("output is smooth", after.is_smooth());
    }
    Ok(())
}

fn check_geometry(v: &Value, checks: &mut Checks) -> Decoded<()> {
    let f = fan_of(field(field(v, "input")?, "fan")?)?;
    let r = field(v, "result")?;
    let n = usize_of(field(r, "rank")?)?;
    let mut ok = n == f.ambient_rank();
    for c in arr(field(r, "cones")?)? {
        for ray in arr(c)? {
            let ray = vector_of(ray)?;
            ok &= ray.len() == n && f.support_contains(&ray);
        }
    }
    checks.push("listed rays lie in the support", ok);
    Ok(())
}

fn check_verify(v: &Value, checks: &mut Checks) -> Decoded<()> {
    let claimed = boolean(field(field(v, "result")?, "verified")?)?;
    checks.push("nested verdict is positive", claimed);
    Ok(())
}

/// Verifies `v`, returning a `verify` result whose verdict is negative on
/// any mismatch or failed check.
pub fn verify(v: &Value) -> Result<Outcome, Failure> {
    let command = str_of(field(v, "command")?)?.to_string();
    let recomputed = recompute(v)?;
    let same = recomputed.value == *v;
    let mut checks = Checks(Vec::new());
    match command.as_str() {
        "analyze" => check_analyze(v, &mut checks)?,
        "pushout" => check_pushout(v, &mut checks)?,
        "blowup" => check_blowup(v, &mut checks)?,
        "exactify" => check_exactify(v, &mut checks)?,
        "integralize" => check_integralize(v, &mut checks)?,
        "fan subdivide" => check_fan_output(v, &mut checks, false)?,
        "fan resolve" => check_fan_output(v, &mut checks, true)?,
        "fan emit-geometry" => check_geometry(v, &mut checks)?,
        "verify" => check_verify(v, &mut checks)?,
        _ => {}
    }
    let verified = same && checks.0.iter().all(|(_, ok)| *ok);
    let listed: Vec<Value> = checks
        .0
        .iter()
        .map(|(name, ok)| json!({ "check": name, "ok": ok }))
        .collect();
    Ok(Outcome {
        value: json!({
            "command": "verify",
            "options": {},
            "input": { "result": v },
            "result": {
                "recomputed_command": command,
                "recomputed_identical": same,
                "checks": listed,
                "verified": verified,
            },
        }),
        negative: !verified,
    })
}
