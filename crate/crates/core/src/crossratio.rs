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

//! Gromov products, cross ratios, opposite points and cut points.

use std::collections::HashSet;
use std::fmt;

use crate::chart::{ComplexChart, VertexId, WallId};
use crate::error::{Error, Result};
use crate::wallset::WallSet;
use crate::weight::{Show, Weight};

/// `⟦a:b:c⟧`, stored with its smallest entry shifted to zero.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossRatioTriple {
    pub a: Weight,
    pub b: Weight,
    pub c: Weight,
}

impl CrossRatioTriple {
    pub fn new(a: Weight, b: Weight, c: Weight) -> Self {
        let m = a.min(b).min(c);
        CrossRatioTriple { a: a - m, b: b - m, c: c - m }
    }

    pub fn entries(&self) -> [Weight; 3] {
        [self.a, self.b, self.c]
    }

    /// The cross ratio is the difference of the last two entries.
    pub fn cross_ratio(&self) -> Weight {
        self.b - self.c
    }
}

impl fmt::Display for CrossRatioTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}:{}:{}]]", Show(&self.a), Show(&self.b), Show(&self.c))
    }
}

/// The three characterizations of a cut point `v` of `I(x, y)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CutTest {
    /// The link of `v` inside the interval has exactly two components.
    pub two_components: bool,
    /// That link is a disjoint union of two cliques.
    pub two_cliques: bool,
    /// `I(x,y) = I(x,v) ∪ I(v,y)`.
    pub splits_interval: bool,
}

impl CutTest {
    pub fn agree(&self) -> bool {
        self.two_components == self.two_cliques && self.two_cliques == self.splits_interval
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OppositeWitness {
    pub x: VertexId,
    pub y: VertexId,
    pub z: VertexId,
    pub median: VertexId,
    /// Link elements of the median inside `I(x,y)` toward `x` and toward `y`.
    pub components: (Vec<WallId>, Vec<WallId>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OppositeReport {
    pub opposite: bool,
    pub median: VertexId,
    pub test: CutTest,
    pub witness: Option<OppositeWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusReport {
    pub tuples_checked: usize,
    /// First 4-tuple of pair indices whose cross-ratio triples differ.
    pub violation: Option<([usize; 4], CrossRatioTriple, CrossRatioTriple)>,
}

impl MobiusReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl ComplexChart {
    /// `𝒲(A|B)` for two-point sets `{x, y}` and `{z, w}`.
    pub fn walls_pair(&self, x: VertexId, y: VertexId, z: VertexId, w: VertexId) -> WallSet {
        let (cx, cy, cz, cw) = (self.coords(x), self.coords(y), self.coords(z), self.coords(w));
        cx.sym_diff(cz).difference(&cx.sym_diff(cy)).difference(&cz.sym_diff(cw))
    }

    /// `(x·y)_v`, the weight of `𝒲(v|x,y)`.
    pub fn gromov_product(&self, v: VertexId, x: VertexId, y: VertexId) -> Weight {
        let cv = self.coords(v);
        self.total_weight(&cv.sym_diff(self.coords(x)).intersection(&cv.sym_diff(self.coords(y))))
    }

    /// `½[d(v,x) + d(v,y) − d(x,y)]`
    pub fn gromov_product_by_distances(&self, v: VertexId, x: VertexId, y: VertexId) -> Weight {
        (self.distance(v, x) + self.distance(v, y) - self.distance(x, y)) / Weight::from_integer(2)
    }

    /// `#𝒲(x,z|y,w) − #𝒲(x,w|y,z)`, weighted.
    pub fn cross_ratio(&self, x: VertexId, y: VertexId, z: VertexId, w: VertexId) -> Weight {
        self.total_weight(&self.walls_pair(x, z, y, w)) - self.total_weight(&self.walls_pair(x, w, y, z))
    }

    /// The same quantity through Gromov products at `v`.
    pub fn cross_ratio_at(&self, v: VertexId, x: VertexId, y: VertexId, z: VertexId, w: VertexId) -> Weight {
        self.gromov_product(v, x, z) + self.gromov_product(v, y, w)
            - self.gromov_product(v, x, w)
            - self.gromov_product(v, y, z)
    }

    /// `d(x,w) + d(y,z) − d(x,z) − d(y,w)`, which is twice the cross ratio.
    pub fn distance_cross_ratio(&self, x: VertexId, y: VertexId, z: VertexId, w: VertexId) -> Weight {
        self.distance(x, w) + self.distance(y, z) - self.distance(x, z) - self.distance(y, w)
    }

    pub fn crt(&self, x: VertexId, y: VertexId, z: VertexId, w: VertexId) -> CrossRatioTriple {
        CrossRatioTriple::new(
            self.total_weight(&self.walls_pair(x, y, z, w)),
            self.total_weight(&self.walls_pair(x, z, y, w)),
            self.total_weight(&self.walls_pair(x, w, y, z)),
        )
    }

    /// Evaluates the three cut-point conditions for `v ∈ I(x,y)`.
    /// Endpoints count as cut points.
    pub fn cut_test(&self, x: VertexId, y: VertexId, v: VertexId) -> Result<CutTest> {
        let interval = self.interval(x, y);
        if !interval.contains(v) {
            return Err(Error::Internal(format!(
                "{} is not in the interval between {} and {}",
                self.vertex_name(v),
                self.vertex_name(x),
                self.vertex_name(y)
            )));
        }
        let splits_interval = {
            let ix: HashSet<VertexId> = self.interval(x, v).vertices.into_iter().collect();
            let iy: HashSet<VertexId> = self.interval(v, y).vertices.into_iter().collect();
            interval.vertices.iter().all(|u| ix.contains(u) || iy.contains(u))
        };
        if v == x || v == y {
            return Ok(CutTest { two_components: true, two_cliques: true, splits_interval });
        }
        let link = self.interval_link(&interval.crossing, v);
        let comps = link.components();
        let two_components = comps.len() == 2;
        let two_cliques = two_components
            && comps
                .iter()
                .all(|c| c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| link.adjacent(a, b))));
        Ok(CutTest { two_components, two_cliques, splits_interval })
    }

    /// Link of `v` restricted to the interval with crossing walls `walls`.
    fn interval_link(&self, walls: &WallSet, v: VertexId) -> crate::chart::Link {
        let mut link = self.link(v);
        link.elements.retain(|&w| walls.contains(w));
        link.edges.retain(|&(a, b)| walls.contains(a) && walls.contains(b));
        link
    }

    pub fn cut_points(&self, x: VertexId, y: VertexId) -> Result<Vec<VertexId>> {
        let mut out = Vec::new();
        for v in self.interval(x, y).vertices {
            let t = self.cut_test(x, y, v)?;
            if !t.agree() {
                return Err(Error::Internal(format!("cut-point conditions disagree at {}", self.vertex_name(v))));
            }
            if t.splits_interval {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// `x ⋈_z y`: the median is a cut point of `I(x,y)`.
    pub fn is_opposite(&self, x: VertexId, y: VertexId, z: VertexId) -> Result<OppositeReport> {
        let m = self.median(x, y, z);
        let test = self.cut_test(x, y, m)?;
        if !test.agree() {
            return Err(Error::Internal(format!("cut-point conditions disagree at {}", self.vertex_name(m))));
        }
        let witness = test.splits_interval.then(|| {
            let toward = |t: VertexId| -> Vec<WallId> {
                let sep = self.separating(m, t);
                let mut ws: Vec<WallId> = self.adjacent_walls(m).into_iter().filter(|&w| sep.contains(w)).collect();
                ws.sort_unstable();
                ws
            };
            OppositeWitness { x, y, z, median: m, components: (toward(x), toward(y)) }
        });
        Ok(OppositeReport { opposite: test.splits_interval, median: m, test, witness })
    }

    /// Unordered pairs `{x, y}` with a third point `z`, all from
    /// `candidates`, such that `m(x,y,z) = v` and `x ⋈_z y`.
    pub fn opposite_triples_through(
        &self,
        v: VertexId,
        candidates: &[VertexId],
    ) -> Result<Vec<(VertexId, VertexId, VertexId)>> {
        if candidates.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut c = candidates.to_vec();
        c.sort_unstable();
        c.dedup();
        let mut out = Vec::new();
        for (i, &x) in c.iter().enumerate() {
            for &y in &c[i + 1..] {
                for &z in &c {
                    if z == x || z == y || self.median(x, y, z) != v {
                        continue;
                    }
                    if self.is_opposite(x, y, z)?.opposite {
                        out.push((x, y, z));
                    }
                }
            }
        }
        Ok(out)
    }

    /// A vertex `z` with `crt(x1,x2,y,z) = ⟦a:b:c⟧`, `a < min(b,c)`.
    /// Such a vertex exists exactly when `x1 ⋈_y x2` fails.
    pub fn non_opposite_witness(
        &self,
        x1: VertexId,
        x2: VertexId,
        y: VertexId,
    ) -> Option<(VertexId, CrossRatioTriple)> {
        self.vertices().find_map(|z| {
            let t = self.crt(x1, x2, y, z);
            (t.a < t.b.min(t.c)).then_some((z, t))
        })
    }
}

/// Checks that `pairs` preserves cross ratios on every 4-tuple.
pub fn mobius_check(x: &ComplexChart, y: &ComplexChart, pairs: &[(VertexId, VertexId)]) -> Result<MobiusReport> {
    let mut seen_x = HashSet::new();
    let mut seen_y = HashSet::new();
    for &(a, b) in pairs {
        if !seen_x.insert(a) || !seen_y.insert(b) {
            return Err(Error::NotInjective(format!("{} -> {}", x.vertex_name(a), y.vertex_name(b))));
        }
    }
    let n = pairs.len();
    let mut checked = 0;
    // The triple of a sorted 4-tuple determines cr for every reordering.
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                for l in k..n {
                    checked += 1;
                    let t1 = x.crt(pairs[i].0, pairs[j].0, pairs[k].0, pairs[l].0);
                    let t2 = y.crt(pairs[i].1, pairs[j].1, pairs[k].1, pairs[l].1);
                    if t1 != t2 {
                        return Ok(MobiusReport { tuples_checked: checked, violation: Some(([i, j, k, l], t1, t2)) });
                    }
                }
            }
        }
    }
    Ok(MobiusReport { tuples_checked: checked, violation: None })
}
