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

//! New charts from old: restriction quotients, cubical subdivision,
//! products and reweighting.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::Zero;

use crate::chart::{ComplexChart, Sign, SparseChart, VertexId, Wall, WallId};
use crate::cubes::Cube;
use crate::error::{Error, Result};
use crate::wallset::WallSet;
use crate::weight::Weight;

/// A restriction quotient together with the projection of every vertex.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub chart: ComplexChart,
    pub projection: Vec<VertexId>,
    /// Original wall of each quotient wall.
    pub kept: Vec<WallId>,
}

/// The cubical subdivision, with the vertex injection and the cube behind
/// every new vertex.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub chart: ComplexChart,
    pub injection: Vec<VertexId>,
    pub cubes: Vec<Cube>,
    cube_index: HashMap<Cube, VertexId>,
}

impl ComplexChart {
    /// Collapses every wall outside `keep`.
    pub fn restriction_quotient(&self, keep: &[WallId]) -> Result<Quotient> {
        let mut kept: Vec<WallId> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.is_empty() {
            return Err(Error::EmptyQuotient);
        }
        let index: HashMap<WallId, u32> = kept.iter().enumerate().map(|(i, &w)| (w, i as u32)).collect();
        let walls: Vec<Wall> = kept.iter().map(|&w| self.wall(w).clone()).collect();
        let reference: Vec<Sign> = kept.iter().map(|&w| self.reference_signs()[w]).collect();
        let mut seen: HashMap<WallSet, VertexId> = HashMap::new();
        let mut vertices = Vec::new();
        let mut projection = Vec::with_capacity(self.num_vertices());
        for v in self.vertices() {
            let c: WallSet = self.coords(v).iter().filter_map(|w| index.get(&w).map(|&i| i as usize)).collect();
            let next = seen.len();
            let q = *seen.entry(c.clone()).or_insert_with(|| {
                vertices.push((self.vertex_name(v).to_string(), c));
                next
            });
            projection.push(q);
        }
        let chart = ComplexChart::from_sparse(SparseChart { walls, reference, vertices })?;
        Ok(Quotient { chart, projection, kept })
    }

    /// Doubles every wall; new vertices are the cubes of `self`. The copies
    /// of wall `a` are `a-` and `a+`, cutting off the open `-` and `+` sides.
    pub fn subdivide(&self) -> Result<Subdivision> {
        let mut walls = Vec::with_capacity(2 * self.num_walls());
        let mut reference = Vec::with_capacity(2 * self.num_walls());
        for (w, wall) in self.walls().iter().enumerate() {
            let r = self.reference_signs()[w];
            walls.push(Wall { id: format!("{}-", wall.id), weight: wall.weight });
            walls.push(Wall { id: format!("{}+", wall.id), weight: wall.weight });
            reference.push(if r == Sign::Minus { Sign::Minus } else { Sign::Plus });
            reference.push(if r == Sign::Plus { Sign::Plus } else { Sign::Minus });
        }
        let cubes = self.cubes();
        let mut vertices = Vec::with_capacity(cubes.len());
        let mut injection = vec![usize::MAX; self.num_vertices()];
        let mut cube_index = HashMap::with_capacity(cubes.len());
        for (i, cube) in cubes.iter().enumerate() {
            let spanned: HashSet<WallId> = cube.walls.iter().copied().collect();
            let mut c = Vec::new();
            for w in self.coords(cube.base).iter() {
                if !spanned.contains(&w) {
                    c.push(2 * w as u32);
                    c.push(2 * w as u32 + 1);
                }
            }
            for &w in &cube.walls {
                let r = self.reference_signs()[w];
                c.push(2 * w as u32 + u32::from(r == Sign::Plus));
            }
            let name = if cube.walls.is_empty() {
                injection[cube.base] = i;
                self.vertex_name(cube.base).to_string()
            } else {
                let ids: Vec<&str> = cube.walls.iter().map(|&w| self.wall(w).id.as_str()).collect();
                format!("<{};{}>", self.vertex_name(cube.base), ids.join(","))
            };
            vertices.push((name, WallSet::from_unsorted(c)));
            cube_index.insert(cube.clone(), i);
        }
        // Vertex 0 of the subdivision must be the reference vertex.
        let zero = injection[0];
        vertices.swap(0, zero);
        let mut cubes = cubes;
        cubes.swap(0, zero);
        for slot in injection.iter_mut() {
            if *slot == zero {
                *slot = 0;
            } else if *slot == 0 {
                *slot = zero;
            }
        }
        cube_index.insert(cubes[0].clone(), 0);
        cube_index.insert(cubes[zero].clone(), zero);
        let chart = ComplexChart::from_sparse(SparseChart { walls, reference, vertices })?;
        Ok(Subdivision { chart, injection, cubes, cube_index })
    }

    /// Cartesian product; wall ids are prefixed when the factors share any.
    pub fn product(&self, other: &ComplexChart) -> Result<ComplexChart> {
        let clash = other.walls().iter().any(|w| self.find_wall(&w.id).is_ok());
        let rename = |prefix: &str, w: &Wall| Wall {
            id: if clash { format!("{prefix}{}", w.id) } else { w.id.clone() },
            weight: w.weight,
        };
        let mut walls: Vec<Wall> = self.walls().iter().map(|w| rename("1.", w)).collect();
        walls.extend(other.walls().iter().map(|w| rename("2.", w)));
        let mut reference = self.reference_signs().to_vec();
        reference.extend_from_slice(other.reference_signs());
        let offset = self.num_walls() as u32;
        let mut vertices = Vec::with_capacity(self.num_vertices() * other.num_vertices());
        for a in self.vertices() {
            for b in other.vertices() {
                let mut c: Vec<u32> = self.coords(a).as_slice().to_vec();
                c.extend(other.coords(b).as_slice().iter().map(|&w| w + offset));
                vertices.push((format!("({},{})", self.vertex_name(a), other.vertex_name(b)), WallSet::from_sorted(c)));
            }
        }
        ComplexChart::from_sparse(SparseChart { walls, reference, vertices })
    }

    /// Vertex of `self × other` over `(a, b)`.
    pub fn product_vertex(&self, other: &ComplexChart, a: VertexId, b: VertexId) -> VertexId {
        a * other.num_vertices() + b
    }

    /// Same combinatorics with the weights from `table`.
    pub fn reweight(&self, table: &BTreeMap<String, Weight>) -> Result<ComplexChart> {
        let mut weights = Vec::with_capacity(self.num_walls());
        for wall in self.walls() {
            let w = *table.get(&wall.id).ok_or_else(|| Error::MissingWeight { wall: wall.id.clone() })?;
            if w <= Weight::zero() {
                return Err(Error::NonPositiveWeight { wall: wall.id.clone() });
            }
            weights.push(w);
        }
        Ok(self.with_weights(weights))
    }

    /// Multiplies every weight by `lambda > 0`.
    pub fn scaled(&self, lambda: Weight) -> Result<ComplexChart> {
        let table = self.walls().iter().map(|w| (w.id.clone(), w.weight * lambda)).collect();
        self.reweight(&table)
    }
}

impl Subdivision {
    pub fn vertex_of_cube(&self, cube: &Cube) -> Option<VertexId> {
        self.cube_index.get(cube).copied()
    }

    /// Transports a (partial) vertex map of the original chart to the
    /// subdivision. A cube is mapped when all its corners are.
    pub fn lift(&self, original: &ComplexChart, map: &[Option<VertexId>]) -> Vec<Option<VertexId>> {
        self.cubes
            .iter()
            .map(|cube| {
                let images: Option<Vec<VertexId>> = original.cube_vertices(cube).into_iter().map(|v| map[v]).collect();
                let images = images?;
                let first = original.coords(images[0]);
                let mut spanned: Vec<WallId> = Vec::new();
                for &u in &images[1..] {
                    for w in first.sym_diff(original.coords(u)).iter() {
                        if !spanned.contains(&w) {
                            spanned.push(w);
                        }
                    }
                }
                spanned.sort_unstable();
                let base = *images.iter().find(|&&u| spanned.iter().all(|&w| !original.coords(u).contains(w)))?;
                self.vertex_of_cube(&Cube { base, walls: spanned })
            })
            .collect()
    }
}
