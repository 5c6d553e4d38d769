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

//! Convexity: medians, intervals, hulls, gates, bridges and strong
//! separation.

use std::collections::HashMap;

use num_traits::Zero;

use crate::chart::{ComplexChart, Halfspace, VertexId};
use crate::error::{Error, Result};
use crate::pocset::Relation;
use crate::wallset::WallSet;
use crate::weight::Weight;

/// A convex vertex set, cached with the walls crossing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexSet {
    /// Sorted.
    pub vertices: Vec<VertexId>,
    /// `𝒲(C)`: walls with vertices of the set on both sides.
    pub crossing: WallSet,
    /// A member of the set; every other wall has the whole set on the side
    /// of `anchor`.
    pub anchor: VertexId,
}

impl ConvexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Halfspaces containing the set.
    pub fn halfspaces(&self, chart: &ComplexChart) -> Vec<Halfspace> {
        chart.wall_ids().filter(|&w| !self.crossing.contains(w)).map(|w| chart.side_of(self.anchor, w)).collect()
    }
}

/// The product region between two convex sets.
#[derive(Clone, Debug)]
pub struct BridgeDecomposition {
    pub distance: Weight,
    /// A pair of gates realizing the distance.
    pub gates: (VertexId, VertexId),
    /// Gate projection of the second set onto the first, and vice versa.
    pub shore1: Vec<VertexId>,
    pub shore2: Vec<VertexId>,
    /// `𝒲(C1) ∩ 𝒲(C2)`
    pub shore_walls: WallSet,
    /// `𝒲(C1|C2)`
    pub gap_walls: WallSet,
    /// Abstract shore: distinct restrictions to `shore_walls`.
    pub shore: Vec<WallSet>,
    pub interval: ConvexSet,
    pub bridge: ConvexSet,
    /// Each bridge vertex with its shore index and interval vertex.
    pub map: Vec<(VertexId, usize, VertexId)>,
    /// The map is a bijection onto `shore × interval`, preserving distance.
    pub isometry: bool,
    /// `𝒲(bridge) = shore_walls ⊔ gap_walls`.
    pub wall_partition: bool,
    /// Both shores project bijectively onto the abstract shore.
    pub shores_match: bool,
}

impl ComplexChart {
    pub fn median(&self, x: VertexId, y: VertexId, z: VertexId) -> VertexId {
        let m = WallSet::majority(self.coords(x), self.coords(y), self.coords(z));
        self.vertex_at(&m).expect("validated charts are majority-closed")
    }

    pub fn hull(&self, set: &[VertexId]) -> Result<ConvexSet> {
        let &anchor = set.first().ok_or(Error::EmptySet)?;
        let base = self.coords(anchor);
        let mut crossing = WallSet::new();
        for &a in &set[1..] {
            crossing = crossing.union(&base.sym_diff(self.coords(a)));
        }
        let vertices = self.vertices().filter(|&v| base.sym_diff(self.coords(v)).is_subset(&crossing)).collect();
        Ok(ConvexSet { vertices, crossing, anchor })
    }

    pub fn interval(&self, x: VertexId, y: VertexId) -> ConvexSet {
        self.hull(&[x, y]).expect("nonempty")
    }

    pub fn is_convex(&self, set: &[VertexId]) -> Result<bool> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Ok(self.hull(&sorted)?.vertices == sorted)
    }

    /// Checks convexity and caches the crossing walls.
    pub fn convex_set(&self, set: &[VertexId]) -> Result<ConvexSet> {
        let hull = self.hull(set)?;
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if hull.vertices != sorted {
            let missing = hull.vertices.iter().filter(|v| sorted.binary_search(v).is_err()).count();
            return Err(Error::NotConvex { missing });
        }
        Ok(hull)
    }

    pub fn halfspace_set(&self, h: Halfspace) -> Result<ConvexSet> {
        self.hull(&self.halfspace_vertices(h))
    }

    /// Nearest-point projection onto a convex set.
    pub fn gate(&self, c: &ConvexSet, x: VertexId) -> VertexId {
        let a = self.coords(c.anchor);
        let p = a.sym_diff(&self.coords(x).sym_diff(a).intersection(&c.crossing));
        self.vertex_at(&p).expect("gates of convex sets are vertices")
    }

    /// `𝒲(C1|C2)`
    pub fn walls_between(&self, c1: &ConvexSet, c2: &ConvexSet) -> WallSet {
        self.coords(c1.anchor).sym_diff(self.coords(c2.anchor)).difference(&c1.crossing.union(&c2.crossing))
    }

    pub fn bridge_decomposition(&self, c1: &ConvexSet, c2: &ConvexSet) -> Result<BridgeDecomposition> {
        if c1.is_empty() || c2.is_empty() {
            return Err(Error::EmptySet);
        }
        // Exhaustive minimum; the gate characterization is checked below.
        let mut best: Option<(Weight, VertexId, VertexId)> = None;
        for &a in &c1.vertices {
            for &b in &c2.vertices {
                let d = self.distance(a, b);
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, a, b));
                }
            }
        }
        let (distance, x1, x2) = best.expect("both sets nonempty");
        let gap_walls = self.walls_between(c1, c2);
        if self.separating(x1, x2) != gap_walls {
            return Err(Error::Internal("closest pair is not separated exactly by W(C1|C2)".into()));
        }
        let mut shore1: Vec<VertexId> = c2.vertices.iter().map(|&y| self.gate(c1, y)).collect();
        shore1.sort_unstable();
        shore1.dedup();
        let mut shore2: Vec<VertexId> = c1.vertices.iter().map(|&y| self.gate(c2, y)).collect();
        shore2.sort_unstable();
        shore2.dedup();
        let shore_walls = c1.crossing.intersection(&c2.crossing);
        let mut joined = shore1.clone();
        joined.extend(&shore2);
        let bridge = self.hull(&joined)?;
        let interval = self.interval(x1, x2);

        let restrict = |v: VertexId| self.coords(v).intersection(&shore_walls);
        let mut shore_index: HashMap<WallSet, usize> = HashMap::new();
        let mut shore = Vec::new();
        for &s in &shore1 {
            let key = restrict(s);
            if !shore_index.contains_key(&key) {
                shore_index.insert(key.clone(), shore.len());
                shore.push(key);
            }
        }
        let onto = |side: &[VertexId]| {
            let mut seen: Vec<usize> = side.iter().filter_map(|&s| shore_index.get(&restrict(s)).copied()).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == side.len() && seen.len() == shore.len()
        };
        let shores_match = onto(&shore1) && onto(&shore2);

        let mut map = Vec::with_capacity(bridge.len());
        let mut isometry = bridge.len() == shore.len() * interval.len();
        for &b in &bridge.vertices {
            match shore_index.get(&restrict(b)) {
                Some(&s) => map.push((b, s, self.gate(&interval, b))),
                None => isometry = false,
            }
        }
        if isometry {
            let mut images: Vec<(usize, VertexId)> = map.iter().map(|&(_, s, i)| (s, i)).collect();
            images.sort_unstable();
            images.dedup();
            isometry = images.len() == map.len();
        }
        if isometry {
            'outer: for (i, &(b, s, p)) in map.iter().enumerate() {
                for &(b2, s2, p2) in &map[i + 1..] {
                    let ds = self.total_weight(&shore[s].sym_diff(&shore[s2]));
                    if self.distance(b, b2) != ds + self.distance(p, p2) {
                        isometry = false;
                        break 'outer;
                    }
                }
            }
        }
        let wall_partition = shore_walls.is_disjoint(&gap_walls) && bridge.crossing == shore_walls.union(&gap_walls);
        Ok(BridgeDecomposition {
            distance,
            gates: (x1, x2),
            shore1,
            shore2,
            shore_walls,
            gap_walls,
            shore,
            interval,
            bridge,
            map,
            isometry,
            wall_partition,
            shores_match,
        })
    }

    /// Disjoint halfspaces whose walls have no common transverse wall. A
    /// halfspace and its complement qualify when nothing crosses their wall.
    pub fn strongly_separated(&self, h1: Halfspace, h2: Halfspace) -> Result<bool> {
        if h1 == h2.complement() {
            return Ok(self.transverse_walls(h1.wall).is_empty());
        }
        if h1.wall == h2.wall || self.relation(h1, h2)? != Relation::Disjoint {
            return Err(Error::NotDisjoint);
        }
        let (a, b) = (self.transverse_walls(h1.wall), self.transverse_walls(h2.wall));
        Ok(!a.iter().any(|w| b.binary_search(w).is_ok()))
    }

    /// Weighted distance between two vertex sets.
    pub fn set_distance(&self, a: &[VertexId], b: &[VertexId]) -> Weight {
        let mut best: Option<Weight> = None;
        for &x in a {
            for &y in b {
                let d = self.distance(x, y);
                if best.is_none_or(|m| d < m) {
                    best = Some(d);
                }
            }
        }
        best.unwrap_or_else(Weight::zero)
    }
}
