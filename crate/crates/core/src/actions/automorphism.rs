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

//! Chart automorphisms, possibly partial, with their signed hyperplane maps.

use crate::chart::{ComplexChart, Halfspace, VertexId, WallId};
use crate::error::{Error, Result};
use crate::weight::Weight;

/// A weight-preserving vertex map defined on a subset of a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    map: Vec<Option<VertexId>>,
    /// Image wall, and whether the reference side is sent to the
    /// non-reference side of the image.
    walls: Vec<Option<(WallId, bool)>>,
}

/// A chart of the ball of radius `radius` about `basepoint`, with partial
/// generator actions.
#[derive(Clone, Debug)]
pub struct BallChart {
    pub chart: ComplexChart,
    pub basepoint: VertexId,
    pub radius: Weight,
    /// Dimension of the ambient complex, which can exceed the chart's own.
    pub dimension: usize,
    pub generators: Vec<(String, Automorphism)>,
}

impl BallChart {
    pub fn generator(&self, name: &str) -> Result<&Automorphism> {
        self.generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g)
            .ok_or_else(|| Error::Schema { path: "generators".into(), message: format!("unknown generator {name}") })
    }

    /// The word `s1 s2 ... sk`, acting as `v ↦ s1(s2(...sk(v)))`.
    pub fn word(&self, letters: &[&str]) -> Result<Automorphism> {
        let mut out = Automorphism::identity(&self.chart);
        for l in letters.iter().rev() {
            out = self.generator(l)?.compose(&self.chart, &out)?;
        }
        Ok(out)
    }
}

impl Automorphism {
    pub fn identity(chart: &ComplexChart) -> Automorphism {
        Automorphism {
            map: chart.vertices().map(Some).collect(),
            walls: chart.wall_ids().map(|w| Some((w, false))).collect(),
        }
    }

    /// Checks injectivity, adjacency and weight preservation, and derives the
    /// hyperplane map from the edges inside the domain.
    pub fn new(chart: &ComplexChart, map: Vec<Option<VertexId>>) -> Result<Automorphism> {
        if map.len() != chart.num_vertices() {
            return Err(Error::Schema {
                path: "map".into(),
                message: format!("expected {} entries, found {}", chart.num_vertices(), map.len()),
            });
        }
        let mut preimage = vec![None; chart.num_vertices()];
        for (v, &img) in map.iter().enumerate() {
            if let Some(u) = img {
                if let Some(prev) = preimage[u].replace(v) {
                    return Err(Error::NotInjective(format!(
                        "{} and {} both map to {}",
                        chart.vertex_name(prev),
                        chart.vertex_name(v),
                        chart.vertex_name(u)
                    )));
                }
            }
        }
        let mut walls: Vec<Option<(WallId, bool)>> = vec![None; chart.num_walls()];
        for v in chart.vertices() {
            let Some(gv) = map[v] else { continue };
            for &(u, w) in chart.neighbors(v) {
                let Some(gu) = map[u] else { continue };
                let Some(w2) = chart.neighbors(gv).iter().find(|&&(x, _)| x == gu).map(|&(_, w2)| w2) else {
                    return Err(Error::NotAdjacencyPreserving {
                        from: chart.vertex_name(v).to_string(),
                        to: chart.vertex_name(u).to_string(),
                    });
                };
                if chart.weight(w) != chart.weight(w2) {
                    return Err(Error::WeightMismatch {
                        wall: chart.wall(w).id.clone(),
                        image: chart.wall(w2).id.clone(),
                    });
                }
                let flip = (chart.sign(v, w) == chart.reference_signs()[w])
                    != (chart.sign(gv, w2) == chart.reference_signs()[w2]);
                match walls[w] {
                    None => walls[w] = Some((w2, flip)),
                    Some(prev) if prev == (w2, flip) => {}
                    Some(_) => return Err(Error::InconsistentWallMap { wall: chart.wall(w).id.clone() }),
                }
            }
        }
        Ok(Automorphism { map, walls })
    }

    /// Builds from explicit pairs; unlisted vertices are outside the domain.
    pub fn from_pairs(chart: &ComplexChart, pairs: &[(VertexId, VertexId)]) -> Result<Automorphism> {
        let mut map = vec![None; chart.num_vertices()];
        for &(a, b) in pairs {
            if map[a].replace(b).is_some_and(|old| old != b) {
                return Err(Error::Schema {
                    path: format!("map.{}", chart.vertex_name(a)),
                    message: "vertex listed twice".into(),
                });
            }
        }
        Automorphism::new(chart, map)
    }

    pub fn apply(&self, v: VertexId) -> Option<VertexId> {
        self.map[v]
    }

    pub fn vertex_map(&self) -> &[Option<VertexId>] {
        &self.map
    }

    pub fn domain(&self) -> Vec<VertexId> {
        (0..self.map.len()).filter(|&v| self.map[v].is_some()).collect()
    }

    pub fn is_total(&self) -> bool {
        self.map.iter().all(Option::is_some)
    }

    pub fn wall_image(&self, w: WallId) -> Option<WallId> {
        self.walls[w].map(|(w2, _)| w2)
    }

    /// `g·𝔥`, when the hyperplane of `h` meets the domain in an edge.
    pub fn apply_halfspace(&self, chart: &ComplexChart, h: Halfspace) -> Option<Halfspace> {
        let (w2, flip) = self.walls[h.wall]?;
        let on_reference = h.sign == chart.reference_signs()[h.wall];
        let image_on_reference = on_reference != flip;
        let r2 = chart.reference_signs()[w2];
        Some(Halfspace::new(w2, if image_on_reference { r2 } else { r2.flip() }))
    }

    /// `self ∘ other`, defined where `other` lands in the domain of `self`.
    pub fn compose(&self, chart: &ComplexChart, other: &Automorphism) -> Result<Automorphism> {
        let map = other.map.iter().map(|&v| v.and_then(|u| self.map[u])).collect();
        Automorphism::new(chart, map)
    }

    pub fn inverse(&self, chart: &ComplexChart) -> Result<Automorphism> {
        let mut map = vec![None; self.map.len()];
        for (v, &img) in self.map.iter().enumerate() {
            if let Some(u) = img {
                map[u] = Some(v);
            }
        }
        Automorphism::new(chart, map)
    }

    /// `g^n` for any integer `n`.
    pub fn power(&self, chart: &ComplexChart, n: i64) -> Result<Automorphism> {
        let base = if n < 0 { self.inverse(chart)? } else { self.clone() };
        let mut map: Vec<Option<VertexId>> = chart.vertices().map(Some).collect();
        for _ in 0..n.unsigned_abs() {
            map = map.iter().map(|&v| v.and_then(|u| base.map[u])).collect();
        }
        Automorphism::new(chart, map)
    }

    /// `d(v, gv)` when `v` is in the domain.
    pub fn displacement(&self, chart: &ComplexChart, v: VertexId) -> Option<Weight> {
        self.map[v].map(|u| chart.distance(v, u))
    }
}
