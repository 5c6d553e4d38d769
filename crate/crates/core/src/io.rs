// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! JSON formats for charts, actions, balls and correspondences, and DOT
//! export. Rationals travel as strings, never floats.

use serde_json::{json, Map, Value};

use crate::actions::{Automorphism, BallChart};
use crate::chart::{ComplexChart, RawChart, Sign, VertexId, Wall};
use crate::error::{Error, Result};
use crate::weight::{format_weight, parse_weight, Weight};

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { path: path.into(), message: message.into() }
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))
}

fn field<'v>(obj: &'v Value, key: &str, path: &str) -> Result<&'v Value> {
    obj.get(key).ok_or_else(|| schema(path, format!("missing field {key:?}")))
}

fn array<'v>(v: &'v Value, path: &str) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| schema(path, "expected an array"))
}

fn object<'v>(v: &'v Value, path: &str) -> Result<&'v Map<String, Value>> {
    v.as_object().ok_or_else(|| schema(path, "expected an object"))
}

fn string<'v>(v: &'v Value, path: &str) -> Result<&'v str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

/// Accepts `"3/2"`, `"0.5"` or a JSON integer.
pub fn weight_from_json(v: &Value, path: &str) -> Result<Weight> {
    match v {
        Value::String(s) => parse_weight(s).map_err(|_| schema(path, format!("not a rational: {s:?}"))),
        Value::Number(n) if n.is_i64() => Ok(Weight::from_integer(n.as_i64().unwrap())),
        Value::Number(_) => Err(schema(path, "non-integer numbers must be strings")),
        _ => Err(schema(path, "expected a rational string")),
    }
}

pub fn weight_to_json(w: &Weight) -> Value {
    Value::String(format_weight(w))
}

/// `{"hyperplanes":[{"id","weight"}],"vertices":[{"id","signs":{..}}]}`.
pub fn raw_chart_from_json(v: &Value) -> Result<RawChart> {
    let hyps = array(field(v, "hyperplanes", "$")?, "hyperplanes")?;
    let mut walls = Vec::with_capacity(hyps.len());
    for (i, h) in hyps.iter().enumerate() {
        let path = format!("hyperplanes[{i}]");
        let id = string(field(h, "id", &path)?, &format!("{path}.id"))?.to_string();
        let weight = match h.get("weight") {
            Some(w) => weight_from_json(w, &format!("{path}.weight"))?,
            None => Weight::from_integer(1),
        };
        walls.push(Wall { id, weight });
    }
    let index: std::collections::HashMap<&str, usize> =
        walls.iter().enumerate().map(|(i, w)| (w.id.as_str(), i)).collect();
    let verts = array(field(v, "vertices", "$")?, "vertices")?;
    let mut vertices = Vec::with_capacity(verts.len());
    for (i, x) in verts.iter().enumerate() {
        let path = format!("vertices[{i}]");
        let id = string(field(x, "id", &path)?, &format!("{path}.id"))?.to_string();
        let signs_obj = object(field(x, "signs", &path)?, &format!("{path}.signs"))?;
        let mut signs: Vec<Option<Sign>> = vec![None; walls.len()];
        for (wall, s) in signs_obj {
            let spath = format!("{path}.signs.{wall}");
            let w = *index.get(wall.as_str()).ok_or_else(|| schema(&spath, "unknown hyperplane"))?;
            let text = string(s, &spath)?;
            signs[w] =
                Some(Sign::parse(text).ok_or_else(|| schema(&spath, format!("sign must be + or -, got {text:?}")))?);
        }
        let signs = signs
            .into_iter()
            .enumerate()
            .map(|(w, s)| {
                s.ok_or_else(|| schema(format!("{path}.signs"), format!("missing hyperplane {}", walls[w].id)))
            })
            .collect::<Result<Vec<_>>>()?;
        vertices.push((id, signs));
    }
    Ok(RawChart { walls, vertices })
}

pub fn chart_from_json(v: &Value) -> Result<ComplexChart> {
    ComplexChart::validate(raw_chart_from_json(v)?)
}

pub fn chart_from_str(text: &str) -> Result<ComplexChart> {
    chart_from_json(&parse_json(text)?)
}

pub fn chart_to_json(c: &ComplexChart) -> Value {
    let hyperplanes: Vec<Value> =
        c.walls().iter().map(|w| json!({"id": w.id, "weight": weight_to_json(&w.weight)})).collect();
    let vertices: Vec<Value> = c
        .vertices()
        .map(|v| {
            let signs: Map<String, Value> = c
                .wall_ids()
                .map(|w| (c.wall(w).id.clone(), Value::String(c.sign(v, w).as_char().to_string())))
                .collect();
            json!({"id": c.vertex_name(v), "signs": signs})
        })
        .collect();
    json!({"hyperplanes": hyperplanes, "vertices": vertices})
}

/// Compact canonical text: chart order, canonical rationals.
pub fn chart_to_string(c: &ComplexChart) -> String {
    chart_to_json(c).to_string()
}

/// Parses and re-serializes; idempotent on its own output.
pub fn canonical_chart(text: &str) -> Result<String> {
    Ok(chart_to_string(&chart_from_str(text)?))
}

fn vertex(c: &ComplexChart, v: &Value, path: &str) -> Result<VertexId> {
    c.find_vertex(string(v, path)?)
}

/// `{"domain":[..],"map":{..}}`; `domain` is optional and must match the
/// keys of `map` when present.
pub fn action_from_json(c: &ComplexChart, v: &Value) -> Result<Automorphism> {
    let map_obj = object(field(v, "map", "$")?, "map")?;
    let mut map = vec![None; c.num_vertices()];
    for (from, to) in map_obj {
        let a = c.find_vertex(from)?;
        map[a] = Some(vertex(c, to, &format!("map.{from}"))?);
    }
    if let Some(domain) = v.get("domain") {
        let mut listed: Vec<VertexId> = array(domain, "domain")?
            .iter()
            .enumerate()
            .map(|(i, d)| vertex(c, d, &format!("domain[{i}]")))
            .collect::<Result<_>>()?;
        listed.sort_unstable();
        listed.dedup();
        let keys: Vec<VertexId> = (0..map.len()).filter(|&a| map[a].is_some()).collect();
        if listed != keys {
            return Err(schema("domain", "domain differs from the keys of map"));
        }
    }
    Automorphism::new(c, map)
}

pub fn action_to_json(c: &ComplexChart, g: &Automorphism) -> Value {
    let domain = g.domain();
    let map: Map<String, Value> = domain
        .iter()
        .map(|&a| (c.vertex_name(a).to_string(), Value::String(c.vertex_name(g.apply(a).unwrap()).to_string())))
        .collect();
    json!({
        "domain": domain.iter().map(|&a| c.vertex_name(a)).collect::<Vec<_>>(),
        "map": map,
    })
}

/// Chart JSON plus `basepoint`, `radius`, optional `dimension` and
/// `generators` (name to action).
pub fn ball_from_json(v: &Value) -> Result<BallChart> {
    let chart = chart_from_json(v)?;
    let basepoint = vertex(&chart, field(v, "basepoint", "$")?, "basepoint")?;
    let radius = weight_from_json(field(v, "radius", "$")?, "radius")?;
    let dimension = match v.get("dimension") {
        Some(d) => d.as_u64().ok_or_else(|| schema("dimension", "expected a nonnegative integer"))? as usize,
        None => chart.dimension(),
    };
    let mut generators = Vec::new();
    if let Some(gens) = v.get("generators") {
        for (name, g) in object(gens, "generators")? {
            generators.push((name.clone(), action_from_json(&chart, g)?));
        }
    }
    Ok(BallChart { chart, basepoint, radius, dimension, generators })
}

pub fn ball_to_json(b: &BallChart) -> Value {
    let mut v = chart_to_json(&b.chart);
    let obj = v.as_object_mut().expect("chart JSON is an object");
    obj.insert("basepoint".into(), Value::String(b.chart.vertex_name(b.basepoint).to_string()));
    obj.insert("radius".into(), weight_to_json(&b.radius));
    obj.insert("dimension".into(), json!(b.dimension));
    let gens: Map<String, Value> = b.generators.iter().map(|(n, g)| (n.clone(), action_to_json(&b.chart, g))).collect();
    obj.insert("generators".into(), Value::Object(gens));
    v
}

pub fn ball_from_str(text: &str) -> Result<BallChart> {
    ball_from_json(&parse_json(text)?)
}

/// `{"pairs":[["x","y"],..]}` as vertex ids of `x` and `y`.
pub fn pairs_from_json(x: &ComplexChart, y: &ComplexChart, v: &Value) -> Result<Vec<(VertexId, VertexId)>> {
    let pairs = array(field(v, "pairs", "$")?, "pairs")?;
    pairs
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let path = format!("pairs[{i}]");
            match array(p, &path)?.as_slice() {
                [a, b] => Ok((vertex(x, a, &format!("{path}[0]"))?, vertex(y, b, &format!("{path}[1]"))?)),
                _ => Err(schema(path, "expected a pair")),
            }
        })
        .collect()
}

pub fn pairs_to_json(x: &ComplexChart, y: &ComplexChart, pairs: &[(VertexId, VertexId)]) -> Value {
    json!({"pairs": pairs.iter().map(|&(a, b)| [x.vertex_name(a), y.vertex_name(b)]).collect::<Vec<_>>()})
}

/// Undirected 1-skeleton with edges labelled by hyperplane and weight.
pub fn chart_to_dot(c: &ComplexChart) -> String {
    let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let mut out = String::from("graph chart {\n");
    for v in c.vertices() {
        out.push_str(&format!("  {};\n", quote(c.vertex_name(v))));
    }
    for v in c.vertices() {
        for &(u, w) in c.neighbors(v) {
            if v < u {
                let label = format!("{} ({})", c.wall(w).id, format_weight(&c.weight(w)));
                out.push_str(&format!(
                    "  {} -- {} [label={}];\n",
                    quote(c.vertex_name(v)),
                    quote(c.vertex_name(u)),
                    quote(&label)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, racg_ball, RacgSpec};

    const SQUARE: &str = r#"{"hyperplanes":[{"id":"a","weight":"1"},{"id":"b","weight":"1"}],
        "vertices":[{"id":"00","signs":{"a":"-","b":"-"}},{"id":"10","signs":{"a":"+","b":"-"}},
                    {"id":"01","signs":{"a":"-","b":"+"}},{"id":"11","signs":{"a":"+","b":"+"}}]}"#;

    #[test]
    fn square_parses() {
        let c = chart_from_str(SQUARE).unwrap();
        assert_eq!((c.num_vertices(), c.num_walls(), c.dimension()), (4, 2, 2));
    }

    #[test]
    fn zero_weight_rejected() {
        let text = SQUARE.replacen(r#""weight":"1""#, r#""weight":"0""#, 1);
        assert_eq!(chart_from_str(&text).unwrap_err(), Error::NonPositiveWeight { wall: "a".into() });
    }

    #[test]
    fn schema_errors_carry_paths() {
        let text = SQUARE.replacen(r#""b":"-"}}"#, r#""b":"x"}}"#, 1);
        match chart_from_str(&text).unwrap_err() {
            Error::Schema { path, .. } => assert_eq!(path, "vertices[0].signs.b"),
            e => panic!("unexpected {e}"),
        }
        let floats = SQUARE.replacen(r#""weight":"1""#, r#""weight":0.5"#, 1);
        assert!(matches!(chart_from_str(&floats), Err(Error::Schema { .. })));
    }

    #[test]
    fn racg_ball_round_trip_is_byte_identical() {
        let b = racg_ball(&RacgSpec::cycle(5, 3)).unwrap();
        let text = chart_to_string(&b.chart);
        assert_eq!(canonical_chart(&text).unwrap(), text);
        let ball_text = ball_to_json(&b).to_string();
        let again = ball_from_str(&ball_text).unwrap();
        assert_eq!(ball_to_json(&again).to_string(), ball_text);
    }

    #[test]
    fn weights_are_canonicalized() {
        let text = SQUARE.replacen(r#""weight":"1""#, r#""weight":"0.50""#, 1);
        let canon = canonical_chart(&text).unwrap();
        assert!(canon.contains(r#""weight":"1/2""#));
        assert_eq!(canonical_chart(&canon).unwrap(), canon);
    }

    #[test]
    fn dot_labels_edges() {
        let dot = chart_to_dot(&grid(&[1]));
        assert!(dot.contains(r#""0" -- "1" [label="x1 (1)"];"#));
    }
}
