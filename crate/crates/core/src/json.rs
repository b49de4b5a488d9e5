//! JSON encodings. Rationals are strings `"p"` or `"p/q"`, infinities
//! `"inf"`/`"-inf"`; object keys come out sorted, so equal values always
//! serialize to identical bytes.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::compactify::{facade_coordinates, CompactifiedPoint, LimitProfile};
use crate::fans::Fan;
use crate::gaussnorm::{LogSeminorm, Monomial, ToyGroupDatum, ValuedPolynomial};
use crate::num::{parse_q, ExtQ, Q};
use crate::parabolics::StratumDescriptor;
use crate::rootdata::{DiagramSubset, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct JsonError(pub String);

fn err<T>(m: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError(m.into()))
}

pub fn q_json(x: &Q) -> Value {
    Value::String(x.to_string())
}

pub fn ext_json(x: &ExtQ) -> Value {
    Value::String(x.to_string())
}

pub fn vec_json(v: &[Q]) -> Value {
    Value::Array(v.iter().map(q_json).collect())
}

pub fn parse_q_value(v: &Value) -> Result<Q, JsonError> {
    match v {
        Value::String(s) => parse_q(s).map_err(|e| JsonError(e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(Q::from_integer(n.as_i64().unwrap().into())),
        other => err(format!("expected a rational, found {other}")),
    }
}

pub fn parse_ext_value(v: &Value) -> Result<ExtQ, JsonError> {
    match v {
        Value::String(s) => ExtQ::parse(s).map_err(|e| JsonError(e.to_string())),
        other => parse_q_value(other).map(ExtQ::Finite),
    }
}

pub fn parse_vec_value(v: &Value) -> Result<Vec<Q>, JsonError> {
    v.as_array()
        .ok_or_else(|| JsonError("expected an array of rationals".into()))?
        .iter()
        .map(parse_q_value)
        .collect()
}

pub fn subset_json(d: &RootDatum, s: DiagramSubset) -> Value {
    json!(d.subset_labels(s))
}

fn root_labels(d: &RootDatum, roots: &[usize]) -> Value {
    json!(roots.iter().map(|&a| d.root_label(a)).collect::<Vec<_>>())
}

fn form_labels(d: &RootDatum, forms: &[Vec<i64>]) -> Value {
    json!(forms
        .iter()
        .map(|f| d.root_index(f).map_or_else(|| format!("{f:?}"), |a| d.root_label(a)))
        .collect::<Vec<_>>())
}

pub fn datum_json(d: &RootDatum) -> Value {
    let roots: Vec<Value> = (0..d.num_roots())
        .map(|a| {
            json!({
                "label": d.root_label(a),
                "coefficients": d.root(a),
                "coroot": d.coroot(a),
                "positive": d.is_positive(a),
                "multipliable": d.is_multipliable(a),
                "divisible": d.half(a).is_some(),
            })
        })
        .collect();
    json!({
        "type": d.name(),
        "rank": d.rank(),
        "ambient_dim": d.ambient_dim(),
        "essential": d.is_essential(),
        "reduced": d.is_reduced(),
        "basis": (0..d.rank()).map(|i| d.simple_label(i)).collect::<Vec<_>>(),
        "cartan": d.cartan(),
        "gram": d.gram().iter().map(|r| vec_json(r)).collect::<Vec<_>>(),
        "root_count": d.num_roots(),
        "roots": roots,
        "weyl_order": d.weyl_group().order(),
        "components": d.diagram_components().into_iter().map(|c| subset_json(d, c)).collect::<Vec<_>>(),
    })
}

/// `{"type": "A2"}` or `{"roots": [[q, ...], ...], "basis": [indices]}`.
pub fn datum_from_json(v: &Value) -> Result<RootDatum, JsonError> {
    if let Some(name) = v.get("type").and_then(Value::as_str) {
        if v.get("roots").is_none() || v.get("roots").is_some_and(|r| r.get(0).is_some_and(Value::is_object)) {
            return RootDatum::catalogue(name).map_err(|e| JsonError(e.to_string()));
        }
    }
    let Some(roots) = v.get("roots").and_then(Value::as_array) else {
        return err("root datum needs \"type\" or \"roots\"");
    };
    let roots: Vec<Vec<Q>> = roots.iter().map(parse_vec_value).collect::<Result<_, _>>()?;
    let basis = match v.get("basis") {
        None | Some(Value::Null) => None,
        Some(b) => Some(
            b.as_array()
                .ok_or_else(|| JsonError("basis must be an array of indices".into()))?
                .iter()
                .map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| JsonError("bad basis index".into())))
                .collect::<Result<Vec<_>, _>>()?,
        ),
    };
    let d = RootDatum::from_vectors("explicit", roots, basis).map_err(|e| JsonError(e.to_string()))?;
    Ok(if v.get("essentialize").and_then(Value::as_bool).unwrap_or(false) { d.essentialize() } else { d })
}

pub fn fan_json(fan: &Fan, with_faces: bool) -> Value {
    let d = fan.datum();
    let w = d.weyl_group();
    let cones: Vec<Value> = (0..fan.len())
        .map(|c| {
            let cone = fan.cone(c);
            let core = fan.core(c);
            json!({
                "index": c,
                "dim": cone.span_dim(),
                "equalities": form_labels(d, &cone.equalities),
                "strict": form_labels(d, &cone.strict),
                "rays": cone.rays,
                "weyl_facets": fan.cones()[c].facets.len(),
                "core": {
                    "type": subset_json(d, core.core_type),
                    "generating_type": subset_json(d, core.generating),
                    "weyl_word": w.element(core.weyl).word.iter().map(|i| d.simple_label(*i)).collect::<Vec<_>>(),
                },
            })
        })
        .collect();
    let mut out = json!({
        "datum": d.name(),
        "J": subset_json(d, fan.j()),
        "cone_count": fan.len(),
        "cones": cones,
    });
    if with_faces {
        let order = fan.face_order();
        let edges: Vec<[usize; 2]> = (0..fan.len())
            .flat_map(|f| (0..fan.len()).filter(move |&g| f != g && order[f][g]).map(move |g| [f, g]))
            .collect();
        out["faces"] = json!(edges);
    }
    out
}

pub fn stratum_json(d: &RootDatum, s: &StratumDescriptor) -> Value {
    let mut v = json!({
        "type": subset_json(d, s.t),
        "I": subset_json(d, s.i),
        "levi_rank": s.levi_rank,
        "levi_roots": root_labels(d, &s.levi_roots),
    });
    if let Some(w) = s.weyl {
        let word = &d.weyl_group().element(w).word;
        v["weyl_word"] = json!(word.iter().map(|i| d.simple_label(*i)).collect::<Vec<_>>());
    }
    v
}

pub fn point_json(fan: &Fan, p: &CompactifiedPoint) -> Value {
    let d = fan.datum();
    let coords: Map<String, Value> = facade_coordinates(fan, p)
        .into_iter()
        .map(|(a, v)| (d.root_label(a), q_json(&v)))
        .collect();
    json!({
        "cone": p.cone,
        "core_type": subset_json(d, fan.core(p.cone).core_type),
        "interior": p.is_interior(fan),
        "base": vec_json(&p.base),
        "facade_coords": coords,
    })
}

/// Reads `{"cone": c, "base": [...]}`.
pub fn point_from_json(v: &Value) -> Result<CompactifiedPoint, JsonError> {
    let cone = v.get("cone").and_then(Value::as_u64).ok_or_else(|| JsonError("missing cone".into()))? as usize;
    let base = parse_vec_value(v.get("base").ok_or_else(|| JsonError("missing base".into()))?)?;
    Ok(CompactifiedPoint { cone, base })
}

pub fn profile_json(d: &RootDatum, p: &LimitProfile) -> Value {
    let m: Map<String, Value> = (0..d.num_roots()).map(|a| (d.root_label(a), ext_json(p.value(a)))).collect();
    Value::Object(m)
}

/// A map from root labels to extended rationals. Values at `-a` may be
/// omitted when `a` is given; every root must be determined.
pub fn profile_from_json(d: &RootDatum, v: &Value) -> Result<LimitProfile, JsonError> {
    let obj = v.as_object().ok_or_else(|| JsonError("profile must be an object".into()))?;
    let mut vals: Vec<Option<ExtQ>> = vec![None; d.num_roots()];
    for (k, x) in obj {
        let a = d.parse_root_label(k).map_err(|e| JsonError(e.to_string()))?;
        vals[a] = Some(parse_ext_value(x)?);
    }
    for a in 0..d.num_roots() {
        if vals[a].is_none() {
            vals[a] = vals[d.negative(a)].clone().map(|x| -x);
        }
    }
    let vals: Vec<ExtQ> = vals
        .into_iter()
        .enumerate()
        .map(|(a, x)| x.ok_or_else(|| JsonError(format!("no value for root {}", d.root_label(a)))))
        .collect::<Result<_, _>>()?;
    LimitProfile::new(d, vals).map_err(|e| JsonError(e.to_string()))
}

pub fn polynomial_json(g: &ToyGroupDatum, f: &ValuedPolynomial) -> Value {
    let monos: Vec<Value> = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let exp: Map<String, Value> = m.iter().map(|(k, e)| (g.coord_label(*k), json!(e))).collect();
            json!({"exp": exp, "logc": q_json(c)})
        })
        .collect();
    json!({ "monomials": monos })
}

pub fn polynomial_from_json(g: &ToyGroupDatum, v: &Value) -> Result<ValuedPolynomial, JsonError> {
    let monos = v
        .get("monomials")
        .and_then(Value::as_array)
        .ok_or_else(|| JsonError("polynomial needs a \"monomials\" array".into()))?;
    let mut terms = Vec::new();
    for m in monos {
        let mut exp = Monomial::new();
        if let Some(e) = m.get("exp") {
            let e = e.as_object().ok_or_else(|| JsonError("\"exp\" must be an object".into()))?;
            for (k, n) in e {
                let c = g.parse_coord(k).map_err(|e| JsonError(e.to_string()))?;
                let n = n.as_u64().ok_or_else(|| JsonError(format!("bad exponent for {k}")))?;
                *exp.entry(c).or_default() += u32::try_from(n).map_err(|_| JsonError("exponent too large".into()))?;
            }
        }
        let logc = parse_ext_value(m.get("logc").ok_or_else(|| JsonError("monomial needs \"logc\"".into()))?)?;
        if logc == ExtQ::PosInf {
            return err("coefficient log-value cannot be +inf");
        }
        terms.push((exp, logc));
    }
    Ok(ValuedPolynomial::from_terms(terms))
}

pub fn seminorm_json(g: &ToyGroupDatum, s: &LogSeminorm) -> Value {
    let m: BTreeMap<String, Value> = s.values().iter().map(|(c, v)| (g.coord_label(*c), ext_json(v))).collect();
    json!(m)
}
