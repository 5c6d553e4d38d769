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

//! Finite charts of CAT(0) cube and cuboid complexes.
//!
//! A chart is a finite set of vertices, each given by an orientation of
//! every hyperplane (a DCC ultrafilter restricted to the chart's walls),
//! together with a positive rational weight per hyperplane. A raw chart is
//! accepted when its walls separate, induce pairwise distinct bipartitions,
//! the vertex set is closed under coordinatewise majority, and the
//! one-wall-flip graph is connected with graph distance equal to wall
//! distance.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::wallset::WallSet;
use crate::weight::{int, Weight};

pub type VertexId = usize;
pub type WallId = usize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    }

    fn flipped_if(self, cond: bool) -> Sign {
        if cond {
            self.flip()
        } else {
            self
        }
    }
}

/// One side of a hyperplane.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub wall: WallId,
    pub sign: Sign,
}

impl Halfspace {
    pub fn new(wall: WallId, sign: Sign) -> Self {
        Halfspace { wall, sign }
    }

    /// The complementary halfspace `𝔥*`.
    pub fn complement(self) -> Halfspace {
        Halfspace { wall: self.wall, sign: self.sign.flip() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub id: String,
    pub weight: Weight,
}

impl Wall {
    pub fn unit(id: impl Into<String>) -> Self {
        Wall { id: id.into(), weight: Weight::one() }
    }
}

/// Unvalidated input: one dense sign vector per vertex, indexed like `walls`.
#[derive(Clone, Debug, Default)]
pub struct RawChart {
    pub walls: Vec<Wall>,
    pub vertices: Vec<(String, Vec<Sign>)>,
}

/// Unvalidated sparse input: vertices are given by the walls on which they
/// disagree with `reference`.
#[derive(Clone, Debug, Default)]
pub struct SparseChart {
    pub walls: Vec<Wall>,
    pub reference: Vec<Sign>,
    pub vertices: Vec<(String, WallSet)>,
}

/// How thoroughly the majority-closure and distance checks were run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Exhaustive,
    Sampled { triples: usize, sources: usize },
}

#[derive(Clone, Debug)]
pub struct ValidationOptions {
    /// Every triple is checked for majority closure up to this many vertices.
    pub exhaustive_median_up_to: usize,
    /// Breadth-first search from every vertex up to this many vertices.
    pub exhaustive_distance_up_to: usize,
    pub sampled_triples: usize,
    pub sampled_sources: usize,
    pub seed: u64,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            exhaustive_median_up_to: 200,
            exhaustive_distance_up_to: 1500,
            sampled_triples: 20_000,
            sampled_sources: 24,
            seed: 0x5eed,
        }
    }
}

/// The link of a vertex: adjacent hyperplanes, joined when they span a
/// square at the vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub base: VertexId,
    pub elements: Vec<WallId>,
    pub edges: Vec<(WallId, WallId)>,
}

impl Link {
    pub fn degree(&self) -> usize {
        self.elements.len()
    }

    pub fn adjacent(&self, a: WallId, b: WallId) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    /// Connected components of the link graph, each sorted.
    pub fn components(&self) -> Vec<Vec<WallId>> {
        let mut seen: HashSet<WallId> = HashSet::new();
        let mut out = Vec::new();
        for &start in &self.elements {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(a) = stack.pop() {
                for &b in &self.elements {
                    if !seen.contains(&b) && self.adjacent(a, b) {
                        seen.insert(b);
                        comp.push(b);
                        stack.push(b);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// A validated, immutable chart.
#[derive(Debug)]
pub struct ComplexChart {
    walls: Vec<Wall>,
    wall_lookup: HashMap<String, WallId>,
    reference: Vec<Sign>,
    vertex_ids: Vec<String>,
    vertex_lookup: HashMap<String, VertexId>,
    coords: Vec<WallSet>,
    coord_lookup: HashMap<WallSet, VertexId>,
    adjacency: Vec<Vec<(VertexId, WallId)>>,
    carriers: Vec<(VertexId, VertexId)>,
    transverse: Vec<Vec<WallId>>,
    unit_weights: bool,
    validation: Validation,
    dimension: OnceLock<usize>,
}

impl Clone for ComplexChart {
    fn clone(&self) -> Self {
        ComplexChart {
            walls: self.walls.clone(),
            wall_lookup: self.wall_lookup.clone(),
            reference: self.reference.clone(),
            vertex_ids: self.vertex_ids.clone(),
            vertex_lookup: self.vertex_lookup.clone(),
            coords: self.coords.clone(),
            coord_lookup: self.coord_lookup.clone(),
            adjacency: self.adjacency.clone(),
            carriers: self.carriers.clone(),
            transverse: self.transverse.clone(),
            unit_weights: self.unit_weights,
            validation: self.validation.clone(),
            dimension: self.dimension.clone(),
        }
    }
}

fn describe_signs(walls: &[Wall], reference: &[Sign], coords: &WallSet) -> String {
    walls
        .iter()
        .enumerate()
        .map(|(w, wall)| format!("{}{}", wall.id, reference[w].flipped_if(coords.contains(w)).as_char()))
        .collect::<Vec<_>>()
        .join(",")
}

impl ComplexChart {
    /// Validates a dense raw chart.
    pub fn validate(raw: RawChart) -> Result<ComplexChart> {
        Self::validate_with(raw, &ValidationOptions::default())
    }

    pub fn validate_with(raw: RawChart, opts: &ValidationOptions) -> Result<ComplexChart> {
        let nw = raw.walls.len();
        for (id, signs) in &raw.vertices {
            if signs.len() != nw {
                return Err(Error::Schema {
                    path: format!("vertices.{id}.signs"),
                    message: format!("expected {nw} signs, found {}", signs.len()),
                });
            }
        }
        let reference = match raw.vertices.first() {
            Some((_, s)) => s.clone(),
            None => return Err(Error::EmptySet),
        };
        let vertices = raw
            .vertices
            .into_iter()
            .map(|(id, signs)| {
                let coords: WallSet = (0..nw).filter(|&w| signs[w] != reference[w]).collect();
                (id, coords)
            })
            .collect();
        Self::from_sparse_with(SparseChart { walls: raw.walls, reference, vertices }, opts)
    }

    pub fn from_sparse(sparse: SparseChart) -> Result<ComplexChart> {
        Self::from_sparse_with(sparse, &ValidationOptions::default())
    }

    pub fn from_sparse_with(sparse: SparseChart, opts: &ValidationOptions) -> Result<ComplexChart> {
        let SparseChart { walls, reference, vertices } = sparse;
        let nw = walls.len();
        if reference.len() != nw {
            return Err(Error::Schema {
                path: "reference".into(),
                message: format!("expected {nw} signs, found {}", reference.len()),
            });
        }
        if vertices.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut wall_lookup = HashMap::with_capacity(nw);
        for (w, wall) in walls.iter().enumerate() {
            if wall.weight <= Weight::zero() {
                return Err(Error::NonPositiveWeight { wall: wall.id.clone() });
            }
            if wall_lookup.insert(wall.id.clone(), w).is_some() {
                return Err(Error::Schema {
                    path: format!("hyperplanes.{}", wall.id),
                    message: "duplicate hyperplane id".into(),
                });
            }
        }

        // Re-anchor at the first vertex and dedup identical sign vectors.
        let shift = vertices[0].1.clone();
        let reference: Vec<Sign> = reference.iter().enumerate().map(|(w, s)| s.flipped_if(shift.contains(w))).collect();
        let mut vertex_ids = Vec::with_capacity(vertices.len());
        let mut coords = Vec::with_capacity(vertices.len());
        let mut coord_lookup = HashMap::with_capacity(vertices.len());
        let mut vertex_lookup = HashMap::with_capacity(vertices.len());
        for (id, c) in vertices {
            if let Some(w) = c.iter().find(|&w| w >= nw) {
                return Err(Error::Schema {
                    path: format!("vertices.{id}"),
                    message: format!("hyperplane index {w} out of range"),
                });
            }
            let c = c.sym_diff(&shift);
            if coord_lookup.contains_key(&c) {
                continue;
            }
            if vertex_lookup.contains_key(&id) {
                return Err(Error::Schema {
                    path: format!("vertices.{id}"),
                    message: "duplicate vertex id with different signs".into(),
                });
            }
            let v = vertex_ids.len();
            vertex_lookup.insert(id.clone(), v);
            coord_lookup.insert(c.clone(), v);
            vertex_ids.push(id);
            coords.push(c);
        }

        // Separation and distinct bipartitions.
        let mut members: Vec<Vec<VertexId>> = vec![Vec::new(); nw];
        for (v, c) in coords.iter().enumerate() {
            for w in c.iter() {
                members[w].push(v);
            }
        }
        let mut partitions: HashMap<&[VertexId], WallId> = HashMap::with_capacity(nw);
        for (w, m) in members.iter().enumerate() {
            if m.is_empty() {
                return Err(Error::NonSeparatingHyperplane { wall: walls[w].id.clone() });
            }
            if let Some(&first) = partitions.get(m.as_slice()) {
                return Err(Error::DuplicateWallPartition {
                    first: walls[first].id.clone(),
                    second: walls[w].id.clone(),
                });
            }
            partitions.insert(m.as_slice(), w);
        }
        drop(partitions);

        let n = coords.len();
        let mut validation = Validation::Exhaustive;

        // Majority closure.
        let median_fail = |i: usize, j: usize, k: usize| -> Option<Error> {
            let m = WallSet::majority(&coords[i], &coords[j], &coords[k]);
            if coord_lookup.contains_key(&m) {
                None
            } else {
                Some(Error::NotMedianClosed {
                    x: vertex_ids[i].clone(),
                    y: vertex_ids[j].clone(),
                    z: vertex_ids[k].clone(),
                    majority: describe_signs(&walls, &reference, &m),
                })
            }
        };
        if n <= opts.exhaustive_median_up_to {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if let Some(e) = median_fail(i, j, k) {
                            return Err(e);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            for _ in 0..opts.sampled_triples {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if let Some(e) = median_fail(i, j, k) {
                    return Err(e);
                }
            }
            validation = Validation::Sampled { triples: opts.sampled_triples, sources: 0 };
        }

        // One-wall-flip graph. Every edge is found from its endpoint that lies
        // beyond the flipped wall as seen from the reference vertex.
        let mut adjacency: Vec<Vec<(VertexId, WallId)>> = vec![Vec::new(); n];
        for v in 0..n {
            for w in coords[v].iter() {
                let mut c = coords[v].clone();
                c.remove(w);
                if let Some(&u) = coord_lookup.get(&c) {
                    adjacency[v].push((u, w));
                    adjacency[u].push((v, w));
                }
            }
        }
        for nbrs in adjacency.iter_mut() {
            nbrs.sort_unstable_by_key(|&(u, w)| (w, u));
        }

        // Connectivity.
        let hops_from = |s: VertexId| -> Vec<usize> {
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(a) = queue.pop_front() {
                for &(b, _) in &adjacency[a] {
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        queue.push_back(b);
                    }
                }
            }
            dist
        };
        let from0 = hops_from(0);
        let reached = from0.iter().filter(|&&d| d != usize::MAX).count();
        if reached != n {
            return Err(Error::DisconnectedChart { start: vertex_ids[0].clone(), reached, total: n });
        }

        // Graph distance agrees with wall distance.
        let check_source = |s: VertexId, dist: &[usize]| -> Result<()> {
            for t in 0..n {
                let walls_between = coords[s].sym_diff_len(&coords[t]);
                if dist[t] != walls_between {
                    return Err(Error::DistanceMismatch {
                        x: vertex_ids[s].clone(),
                        y: vertex_ids[t].clone(),
                        graph: dist[t],
                        walls: walls_between,
                    });
                }
            }
            Ok(())
        };
        check_source(0, &from0)?;
        if n <= opts.exhaustive_distance_up_to {
            for s in 1..n {
                check_source(s, &hops_from(s))?;
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xd157);
            for _ in 0..opts.sampled_sources {
                let s = rng.gen_range(0..n);
                check_source(s, &hops_from(s))?;
            }
            let triples = match validation {
                Validation::Sampled { triples, .. } => triples,
                Validation::Exhaustive => 0,
            };
            validation = Validation::Sampled { triples, sources: opts.sampled_sources };
        }

        let mut carriers = vec![(usize::MAX, usize::MAX); nw];
        for (v, nbrs) in adjacency.iter().enumerate() {
            for &(u, w) in nbrs {
                if carriers[w].0 == usize::MAX && !coords[v].contains(w) {
                    carriers[w] = (v, u);
                }
            }
        }

        // Transverse pairs are exactly the pairs spanning a square.
        let mut pairs: HashSet<(WallId, WallId)> = HashSet::new();
        for v in 0..n {
            let nbrs = &adjacency[v];
            for i in 0..nbrs.len() {
                for j in i + 1..nbrs.len() {
                    let (w1, w2) = (nbrs[i].1, nbrs[j].1);
                    if w1 == w2 {
                        continue;
                    }
                    let key = if w1 < w2 { (w1, w2) } else { (w2, w1) };
                    if pairs.contains(&key) {
                        continue;
                    }
                    let corner = coords[v].toggled(w1).toggled(w2);
                    if coord_lookup.contains_key(&corner) {
                        pairs.insert(key);
                    }
                }
            }
        }
        let mut transverse = vec![Vec::new(); nw];
        for &(a, b) in &pairs {
            transverse[a].push(b);
            transverse[b].push(a);
        }
        for t in transverse.iter_mut() {
            t.sort_unstable();
        }

        let unit_weights = walls.iter().all(|w| w.weight.is_one());
        Ok(ComplexChart {
            walls,
            wall_lookup,
            reference,
            vertex_ids,
            vertex_lookup,
            coords,
            coord_lookup,
            adjacency,
            carriers,
            transverse,
            unit_weights,
            validation,
            dimension: OnceLock::new(),
        })
    }

    pub fn validation(&self) -> &Validation {
        &self.validation
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn num_walls(&self) -> usize {
        self.walls.len()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_ids.len()
    }

    pub fn wall_ids(&self) -> std::ops::Range<WallId> {
        0..self.walls.len()
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn wall(&self, w: WallId) -> &Wall {
        &self.walls[w]
    }

    pub fn weight(&self, w: WallId) -> Weight {
        self.walls[w].weight
    }

    pub fn has_unit_weights(&self) -> bool {
        self.unit_weights
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_ids[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn find_vertex(&self, id: &str) -> Result<VertexId> {
        self.vertex_lookup.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn find_wall(&self, id: &str) -> Result<WallId> {
        self.wall_lookup.get(id).copied().ok_or_else(|| Error::UnknownWall(id.to_string()))
    }

    /// Walls separating `v` from the reference vertex (vertex 0).
    pub fn coords(&self, v: VertexId) -> &WallSet {
        &self.coords[v]
    }

    pub fn reference_signs(&self) -> &[Sign] {
        &self.reference
    }

    pub fn vertex_at(&self, coords: &WallSet) -> Option<VertexId> {
        self.coord_lookup.get(coords).copied()
    }

    pub fn sign(&self, v: VertexId, w: WallId) -> Sign {
        self.reference[w].flipped_if(self.coords[v].contains(w))
    }

    pub fn signs(&self, v: VertexId) -> Vec<Sign> {
        (0..self.walls.len()).map(|w| self.sign(v, w)).collect()
    }

    pub fn in_halfspace(&self, v: VertexId, h: Halfspace) -> bool {
        self.sign(v, h.wall) == h.sign
    }

    /// Halfspace bounded by `w` that contains `v`.
    pub fn side_of(&self, v: VertexId, w: WallId) -> Halfspace {
        Halfspace::new(w, self.sign(v, w))
    }

    pub fn halfspace_vertices(&self, h: Halfspace) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.in_halfspace(v, h)).collect()
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, WallId)] {
        &self.adjacency[v]
    }

    /// Vertex adjacent to `v` across `w`, if present.
    pub fn across(&self, v: VertexId, w: WallId) -> Option<VertexId> {
        self.adjacency[v].iter().find(|&&(_, x)| x == w).map(|&(u, _)| u)
    }

    /// Walls dual to edges at `v` (`𝒲_v`).
    pub fn adjacent_walls(&self, v: VertexId) -> Vec<WallId> {
        self.adjacency[v].iter().map(|&(_, w)| w).collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// One edge dual to `w`, as (endpoint on the reference side, other endpoint).
    pub fn carrier_edge(&self, w: WallId) -> (VertexId, VertexId) {
        self.carriers[w]
    }

    /// `𝒲(x|y)`
    pub fn separating(&self, x: VertexId, y: VertexId) -> WallSet {
        self.coords[x].sym_diff(&self.coords[y])
    }

    pub fn total_weight(&self, walls: &WallSet) -> Weight {
        if self.unit_weights {
            int(walls.len() as i64)
        } else {
            walls.iter().fold(Weight::zero(), |acc, w| acc + self.walls[w].weight)
        }
    }

    pub fn distance(&self, x: VertexId, y: VertexId) -> Weight {
        if self.unit_weights {
            int(self.hops(x, y) as i64)
        } else {
            self.total_weight(&self.separating(x, y))
        }
    }

    /// Unweighted distance: the number of separating walls.
    pub fn hops(&self, x: VertexId, y: VertexId) -> usize {
        self.coords[x].sym_diff_len(&self.coords[y])
    }

    pub fn transverse(&self, a: WallId, b: WallId) -> bool {
        self.transverse[a].binary_search(&b).is_ok()
    }

    pub fn transverse_walls(&self, w: WallId) -> &[WallId] {
        &self.transverse[w]
    }

    pub fn link(&self, v: VertexId) -> Link {
        let mut elements = self.adjacent_walls(v);
        elements.sort_unstable();
        let mut edges = Vec::new();
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                let (a, b) = (elements[i], elements[j]);
                if self.vertex_at(&self.coords[v].toggled(a).toggled(b)).is_some() {
                    edges.push((a, b));
                }
            }
        }
        Link { base: v, elements, edges }
    }

    /// Largest cube dimension.
    pub fn dimension(&self) -> usize {
        *self.dimension.get_or_init(|| {
            let mut best = if self.num_walls() > 0 { 1 } else { 0 };
            for v in self.vertices() {
                let link = self.link(v);
                if link.degree() <= best {
                    continue;
                }
                best = best.max(max_clique(&link, best));
            }
            best
        })
    }

    /// Walls partitioned by side: `(ℋ(A|B)` as halfspaces containing `B`.
    pub fn separating_walls(&self, a: &[VertexId], b: &[VertexId]) -> Result<Vec<Halfspace>> {
        let (&a0, &b0) = match (a.first(), b.first()) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::EmptySet),
        };
        let mut out = Vec::new();
        for w in self.separating(a0, b0).iter() {
            let sa = self.sign(a0, w);
            if a.iter().all(|&x| self.sign(x, w) == sa) && b.iter().all(|&y| self.sign(y, w) != sa) {
                out.push(Halfspace::new(w, sa.flip()));
            }
        }
        Ok(out)
    }

    /// Weighted size of `𝒲(A|B)`.
    pub fn separation_weight(&self, a: &[VertexId], b: &[VertexId]) -> Result<Weight> {
        Ok(self.separating_walls(a, b)?.iter().fold(Weight::zero(), |acc, h| acc + self.weight(h.wall)))
    }

    pub fn halfspace_name(&self, h: Halfspace) -> String {
        format!("{}{}", self.walls[h.wall].id, h.sign.as_char())
    }

    /// Builds a sparse description of this chart, suitable for re-validation
    /// after modification.
    pub fn to_sparse(&self) -> SparseChart {
        SparseChart {
            walls: self.walls.clone(),
            reference: self.reference.clone(),
            vertices: self.vertices().map(|v| (self.vertex_ids[v].clone(), self.coords[v].clone())).collect(),
        }
    }

    pub fn to_raw(&self) -> RawChart {
        RawChart {
            walls: self.walls.clone(),
            vertices: self.vertices().map(|v| (self.vertex_ids[v].clone(), self.signs(v))).collect(),
        }
    }

    /// Copy of this chart with new weights; the combinatorics are untouched.
    pub(crate) fn with_weights(&self, weights: Vec<Weight>) -> ComplexChart {
        let mut out = self.clone();
        for (wall, weight) in out.walls.iter_mut().zip(weights) {
            wall.weight = weight;
        }
        out.unit_weights = out.walls.iter().all(|w| w.weight.is_one());
        out
    }
}

/// Maximum clique size in a link, searching only for cliques larger than `floor`.
fn max_clique(link: &Link, floor: usize) -> usize {
    fn grow(link: &Link, clique: &mut Vec<WallId>, candidates: &[WallId], best: &mut usize) {
        if clique.len() > *best {
            *best = clique.len();
        }
        if clique.len() + candidates.len() <= *best {
            return;
        }
        for (i, &c) in candidates.iter().enumerate() {
            if clique.len() + candidates.len() - i <= *best {
                return;
            }
            let next: Vec<WallId> = candidates[i + 1..].iter().copied().filter(|&d| link.adjacent(c, d)).collect();
            clique.push(c);
            grow(link, clique, &next, best);
            clique.pop();
        }
    }
    let mut best = floor;
    grow(link, &mut Vec::new(), &link.elements, &mut best);
    best
}

impl fmt::Display for ComplexChart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chart({} vertices, {} hyperplanes)", self.num_vertices(), self.num_walls())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(walls: &[&str], verts: &[(&str, &str)]) -> RawChart {
        RawChart {
            walls: walls.iter().map(|w| Wall::unit(*w)).collect(),
            vertices: verts
                .iter()
                .map(|(id, s)| {
                    (id.to_string(), s.chars().map(|c| if c == '1' { Sign::Plus } else { Sign::Minus }).collect())
                })
                .collect(),
        }
    }

    #[test]
    fn square_is_accepted() {
        let c = ComplexChart::validate(raw(&["a", "b"], &[("00", "00"), ("01", "01"), ("10", "10"), ("11", "11")]))
            .unwrap();
        assert_eq!(c.num_vertices(), 4);
        assert_eq!(c.num_edges(), 4);
        assert!(c.transverse(0, 1));
        assert_eq!(c.dimension(), 2);
    }

    #[test]
    fn duplicate_partition_rejected() {
        let e = ComplexChart::validate(raw(&["a", "b"], &[("00", "00"), ("11", "11")])).unwrap_err();
        assert_eq!(e, Error::DuplicateWallPartition { first: "a".into(), second: "b".into() });
    }

    #[test]
    fn majority_gap_reported_with_witness() {
        let e = ComplexChart::validate(raw(&["a", "b", "c"], &[("000", "000"), ("110", "110"), ("011", "011")]))
            .unwrap_err();
        match e {
            Error::NotMedianClosed { majority, .. } => assert_eq!(majority, "a-,b+,c-"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_separating_rejected() {
        let e = ComplexChart::validate(raw(&["a", "b"], &[("00", "00"), ("10", "10")])).unwrap_err();
        assert_eq!(e, Error::NonSeparatingHyperplane { wall: "b".into() });
    }

    #[test]
    fn odd_cycle_rejected() {
        // 010 = maj(000, 110, 011) is missing
        let e = ComplexChart::validate(raw(
            &["a", "b", "c"],
            &[("000", "000"), ("110", "110"), ("011", "011"), ("101", "101"), ("111", "111")],
        ));
        assert!(matches!(e, Err(Error::NotMedianClosed { .. })));
    }

    #[test]
    fn dedups_identical_vertices() {
        let c = ComplexChart::validate(raw(&["a"], &[("x", "0"), ("y", "1"), ("y2", "1")])).unwrap();
        assert_eq!(c.num_vertices(), 2);
        assert!(c.find_vertex("y2").is_err());
    }

    #[test]
    fn nonpositive_weight_rejected() {
        let mut r = raw(&["a"], &[("x", "0"), ("y", "1")]);
        r.walls[0].weight = Weight::zero();
        assert_eq!(ComplexChart::validate(r).unwrap_err(), Error::NonPositiveWeight { wall: "a".into() });
    }
}
