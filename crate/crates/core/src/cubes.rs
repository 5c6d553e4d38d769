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

//! Cube enumeration and free faces.

use std::collections::{HashMap, HashSet};

use crate::chart::{ComplexChart, VertexId, WallId};

/// A cube, given by its corner nearest the reference vertex and the sorted
/// walls it spans.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    pub base: VertexId,
    pub walls: Vec<WallId>,
}

impl Cube {
    pub fn dimension(&self) -> usize {
        self.walls.len()
    }
}

impl ComplexChart {
    /// Corner of the cube spanned by `walls` at `base`, flipping the walls in `mask`.
    fn corner(&self, base: VertexId, walls: &[WallId], mask: u64) -> Option<VertexId> {
        let mut c = self.coords(base).clone();
        for (i, &w) in walls.iter().enumerate() {
            if mask >> i & 1 == 1 {
                c = c.toggled(w);
            }
        }
        self.vertex_at(&c)
    }

    fn spans_cube(&self, base: VertexId, walls: &[WallId]) -> bool {
        (0..1u64 << walls.len()).all(|m| self.corner(base, walls, m).is_some())
    }

    pub fn cube_vertices(&self, cube: &Cube) -> Vec<VertexId> {
        (0..1u64 << cube.walls.len())
            .map(|m| self.corner(cube.base, &cube.walls, m).expect("cube corners exist"))
            .collect()
    }

    /// Every cube, each listed once.
    pub fn cubes(&self) -> Vec<Cube> {
        let mut out = Vec::new();
        for v in self.vertices() {
            let up: Vec<WallId> =
                self.neighbors(v).iter().map(|&(_, w)| w).filter(|&w| !self.coords(v).contains(w)).collect();
            let mut walls = Vec::new();
            self.collect_cubes(v, &up, 0, &mut walls, &mut out);
        }
        out
    }

    fn collect_cubes(&self, v: VertexId, up: &[WallId], from: usize, walls: &mut Vec<WallId>, out: &mut Vec<Cube>) {
        let mut sorted = walls.clone();
        sorted.sort_unstable();
        out.push(Cube { base: v, walls: sorted });
        for i in from..up.len() {
            walls.push(up[i]);
            if self.spans_cube(v, walls) {
                self.collect_cubes(v, up, i + 1, walls, out);
            }
            walls.pop();
        }
    }

    /// Cubes not contained in a larger cube.
    pub fn maximal_cubes(&self) -> Vec<Cube> {
        let all = self.cubes();
        let set: HashSet<&Cube> = all.iter().collect();
        all.iter()
            .filter(|c| {
                !self.neighbors(c.base).iter().any(|&(_, w)| {
                    if c.walls.contains(&w) {
                        return false;
                    }
                    let mut walls = c.walls.clone();
                    walls.push(w);
                    walls.sort_unstable();
                    let base = if self.coords(c.base).contains(w) {
                        self.across(c.base, w).expect("neighbor across wall")
                    } else {
                        c.base
                    };
                    set.contains(&Cube { base, walls })
                })
            })
            .cloned()
            .collect()
    }

    /// Faces of a cube, including the cube itself.
    pub fn faces(&self, cube: &Cube) -> Vec<Cube> {
        let k = cube.walls.len();
        let mut out = Vec::new();
        for keep in 0..1u64 << k {
            let kept: Vec<WallId> = (0..k).filter(|&i| keep >> i & 1 == 1).map(|i| cube.walls[i]).collect();
            let fixed: Vec<WallId> = (0..k).filter(|&i| keep >> i & 1 == 0).map(|i| cube.walls[i]).collect();
            for flip in 0..1u64 << fixed.len() {
                let base = self.corner(cube.base, &fixed, flip).expect("cube corners exist");
                out.push(Cube { base, walls: kept.clone() });
            }
        }
        out
    }

    /// Non-maximal cubes lying in exactly one maximal cube. Cubes touching
    /// `boundary` are skipped.
    pub fn free_faces(&self, boundary: &[VertexId]) -> Vec<Cube> {
        let maximal = self.maximal_cubes();
        let mut counts: HashMap<Cube, usize> = HashMap::new();
        for m in &maximal {
            for f in self.faces(m) {
                if f != *m {
                    *counts.entry(f).or_default() += 1;
                }
            }
        }
        let boundary: HashSet<VertexId> = boundary.iter().copied().collect();
        let mut out: Vec<Cube> = counts
            .into_iter()
            .filter(|(c, n)| *n == 1 && self.cube_vertices(c).iter().all(|v| !boundary.contains(v)))
            .map(|(c, _)| c)
            .collect();
        out.sort_unstable_by(|a, b| (a.walls.len(), a.base, &a.walls).cmp(&(b.walls.len(), b.base, &b.walls)));
        out
    }
}
