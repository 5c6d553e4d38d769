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

//! Extending a distance-preserving bijection between vertex sets to a
//! cubical isomorphism, one combinatorial neighbourhood at a time.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chart::{ComplexChart, Halfspace, VertexId, WallId};
use crate::error::{Error, Result};
use crate::weight::{int, Weight};

/// A distance-preserving bijection `φ: A → B` between vertex subsets.
#[derive(Clone, Debug)]
pub struct PartialIsometry<'a> {
    pub x: &'a ComplexChart,
    pub y: &'a ComplexChart,
    forward: Vec<Option<VertexId>>,
    backward: Vec<Option<VertexId>>,
}

impl<'a> PartialIsometry<'a> {
    pub fn new(x: &'a ComplexChart, y: &'a ComplexChart, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut forward = vec![None; x.num_vertices()];
        let mut backward = vec![None; y.num_vertices()];
        for &(a, b) in pairs {
            if a >= forward.len() {
                return Err(Error::UnknownVertex(format!("#{a}")));
            }
            if b >= backward.len() {
                return Err(Error::UnknownVertex(format!("#{b}")));
            }
            match (forward[a], backward[b]) {
                (None, None) => {
                    forward[a] = Some(b);
                    backward[b] = Some(a);
                }
                (Some(b0), Some(a0)) if (a0, b0) == (a, b) => {}
                _ => {
                    return Err(Error::NotInjective(format!(
                        "{} -> {} clashes with an earlier pair",
                        x.vertex_name(a),
                        y.vertex_name(b)
                    )))
                }
            }
        }
        let p = PartialIsometry { x, y, forward, backward };
        let domain = p.domain();
        for (i, &a) in domain.iter().enumerate() {
            for &c in &domain[i + 1..] {
                if x.distance(a, c) != y.distance(p.forward[a].unwrap(), p.forward[c].unwrap()) {
                    return Err(Error::NotDistancePreserving {
                        x: x.vertex_name(a).to_string(),
                        y: x.vertex_name(c).to_string(),
                    });
                }
            }
        }
        Ok(p)
    }

    pub fn from_names(x: &'a ComplexChart, y: &'a ComplexChart, pairs: &[(&str, &str)]) -> Result<Self> {
        let ids = pairs.iter().map(|(a, b)| Ok((x.find_vertex(a)?, y.find_vertex(b)?))).collect::<Result<Vec<_>>>()?;
        PartialIsometry::new(x, y, &ids)
    }

    /// The restriction of a total map to `domain`.
    pub fn restrict(x: &'a ComplexChart, y: &'a ComplexChart, map: &[VertexId], domain: &[VertexId]) -> Result<Self> {
        let pairs: Vec<_> = domain.iter().map(|&a| (a, map[a])).collect();
        PartialIsometry::new(x, y, &pairs)
    }

    pub fn get(&self, a: VertexId) -> Option<VertexId> {
        self.forward[a]
    }

    pub fn len(&self) -> usize {
        self.forward.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `A`, sorted.
    pub fn domain(&self) -> Vec<VertexId> {
        (0..self.forward.len()).filter(|&a| self.forward[a].is_some()).collect()
    }

    /// `B`, sorted.
    pub fn image(&self) -> Vec<VertexId> {
        (0..self.backward.len()).filter(|&b| self.backward[b].is_some()).collect()
    }

    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.domain().into_iter().map(|a| (a, self.forward[a].unwrap())).collect()
    }

    /// Both `A = V(X)` and `B = V(Y)`.
    pub fn is_total(&self) -> bool {
        self.forward.iter().all(Option::is_some) && self.backward.iter().all(Option::is_some)
    }

    pub fn inverse(&self) -> PartialIsometry<'a> {
        PartialIsometry { x: self.y, y: self.x, forward: self.backward.clone(), backward: self.forward.clone() }
    }

    /// The map as a vector, when `A = V(X)`.
    pub fn total_map(&self) -> Option<Vec<VertexId>> {
        self.forward.iter().copied().collect()
    }
}

/// `H_𝔴`: the part of the set on the far side of a wall at `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSet {
    pub base: VertexId,
    pub wall: WallId,
    /// Sorted.
    pub members: Vec<VertexId>,
    /// A member whose only wall at `base` separating it from `base` is `wall`.
    pub witness: Option<VertexId>,
    /// Whether the members satisfy `x ∈ H ⇔ ∀y ∈ H, d(x,y) < d(x,v) + d(v,y)`
    /// over the whole set.
    pub satisfies_star: bool,
}

fn h_set_in(c: &ComplexChart, set: &[VertexId], v: VertexId, w: WallId, at_v: &[WallId]) -> HSet {
    let vs = c.sign(v, w);
    let members: Vec<VertexId> = set.iter().copied().filter(|&x| c.sign(x, w) != vs).collect();
    let witness =
        members.iter().copied().find(|&x| at_v.iter().filter(|&&u| c.sign(x, u) != c.sign(v, u)).count() == 1);
    let satisfies_star = set.iter().all(|&x| {
        let inside = members.binary_search(&x).is_ok();
        let dxv = c.distance(x, v);
        inside == members.iter().all(|&y| c.distance(x, y) < dxv + c.distance(v, y))
    });
    HSet { base: v, wall: w, members, witness, satisfies_star }
}

fn h_sets_in(c: &ComplexChart, set: &[VertexId], v: VertexId) -> Vec<HSet> {
    let at_v = c.adjacent_walls(v);
    at_v.iter().map(|&w| h_set_in(c, set, v, w, &at_v)).collect()
}

/// One H-set per wall at `v`, with witnesses and condition (∗) checked.
pub fn h_sets(partial: &PartialIsometry, v: VertexId) -> Result<Vec<HSet>> {
    if partial.get(v).is_none() {
        return Err(Error::UnknownVertex(format!("{} is not in the domain", partial.x.vertex_name(v))));
    }
    Ok(h_sets_in(partial.x, &partial.domain(), v))
}

/// The wall at `φ(v)` whose trace on `B` is `φ(H_𝔴)`, and its side away
/// from `φ(v)`.
pub fn push_halfspace(partial: &PartialIsometry, v: VertexId, w: WallId) -> Result<Halfspace> {
    let (a, b) = (partial.domain(), partial.image());
    push_in(partial, &a, &b, v, w)
}

fn push_in(p: &PartialIsometry, a: &[VertexId], b: &[VertexId], v: VertexId, w: WallId) -> Result<Halfspace> {
    let (x, y) = (p.x, p.y);
    let no_match = |reason: &str| Error::NoMatch {
        vertex: x.vertex_name(v).to_string(),
        wall: x.wall(w).id.clone(),
        reason: reason.to_string(),
    };
    let pv = p.get(v).ok_or_else(|| Error::UnknownVertex(format!("{} is not in the domain", x.vertex_name(v))))?;
    let source = h_set_in(x, a, v, w, &x.adjacent_walls(v));
    if source.witness.is_none() {
        return Err(no_match("no witness on the source side"));
    }
    let mut image: Vec<VertexId> = source.members.iter().map(|&m| p.get(m).unwrap()).collect();
    image.sort_unstable();
    let candidates: Vec<HSet> = h_sets_in(y, b, pv).into_iter().filter(|h| h.members == image).collect();
    match candidates.as_slice() {
        [] => Err(no_match("no hyperplane at the image has the same trace")),
        [h] if h.witness.is_none() => Err(no_match("matching hyperplane has no witness")),
        [h] => Ok(Halfspace::new(h.wall, y.sign(pv, h.wall).flip())),
        many => Err(Error::AmbiguousMatch {
            vertex: x.vertex_name(v).to_string(),
            wall: x.wall(w).id.clone(),
            candidates: many.iter().map(|h| y.wall(h.wall).id.clone()).collect(),
        }),
    }
}

/// An edge from `v ∈ A` to `u` dual to `wall`, pushed to the edge from
/// `φ(v)` to `image` dual to `pushed.wall`.
#[derive(Clone, Debug)]
struct Push {
    v: VertexId,
    wall: WallId,
    u: VertexId,
    pushed: Halfspace,
    image: VertexId,
}

/// Pushes every edge leaving `A`; returns the pushes and the reasons for
/// edges that could not be pushed.
fn grow(p: &PartialIsometry) -> Result<(Vec<Push>, Vec<String>)> {
    let (x, y) = (p.x, p.y);
    let (a, b) = (p.domain(), p.image());
    let mut pushes = Vec::new();
    let mut blocked = Vec::new();
    for &v in &a {
        for &(u, wall) in x.neighbors(v) {
            match push_in(p, &a, &b, v, wall) {
                Ok(pushed) => {
                    let image = y.across(p.get(v).unwrap(), pushed.wall).expect("adjacent wall has an edge");
                    if let Some(known) = p.get(u) {
                        if known != image {
                            return Err(Error::InconsistentExtension {
                                vertex: x.vertex_name(u).to_string(),
                                images: vec![y.vertex_name(known).to_string(), y.vertex_name(image).to_string()],
                            });
                        }
                        continue;
                    }
                    pushes.push(Push { v, wall, u, pushed, image });
                }
                Err(e @ (Error::NoMatch { .. } | Error::AmbiguousMatch { .. })) => {
                    if p.get(u).is_none() {
                        blocked.push(e.to_string());
                    }
                }
                Err(e) => return Err(e),
            }
        }
    }
    for q in &pushes {
        let h = x.side_of(q.u, q.wall);
        if let Some(&m) = a.iter().find(|&&m| x.in_halfspace(m, h) != y.in_halfspace(p.get(m).unwrap(), q.pushed)) {
            return Err(Error::Internal(format!("pushed side disagrees with the trace at {}", x.vertex_name(m))));
        }
    }
    check_dichotomy(p, &a, &pushes)?;
    check_case_table(x, &a, &pushes)?;
    Ok((pushes, blocked))
}

/// For pushes with `𝔥₁ ∩ A = 𝔥₂* ∩ A`, exactly one of: `𝔥₂* ⊊ 𝔥₁` with
/// `d(x,v₂) ≤ d(x,v₁) + d(v₁,v₂) − 2(w₁+w₂)` on `𝔥₁ ∩ A`, or `𝔥₁ = 𝔥₂*`
/// with equality `d(x₀,v₂) = d(x₀,v₁) + d(v₁,v₂) − 2w₁` somewhere.
fn check_dichotomy(p: &PartialIsometry, a: &[VertexId], pushes: &[Push]) -> Result<()> {
    let x = p.x;
    let trace = |h: Halfspace| -> Vec<VertexId> { a.iter().copied().filter(|&m| x.in_halfspace(m, h)).collect() };
    let mut by_trace: HashMap<Vec<VertexId>, Vec<usize>> = HashMap::new();
    let outer: Vec<Halfspace> = pushes.iter().map(|q| x.side_of(q.u, q.wall)).collect();
    for (i, &h) in outer.iter().enumerate() {
        by_trace.entry(trace(h)).or_default().push(i);
    }
    for (j, q2) in pushes.iter().enumerate() {
        let inner2 = outer[j].complement();
        for &i in by_trace.get(&trace(inner2)).map(Vec::as_slice).unwrap_or(&[]) {
            let q1 = &pushes[i];
            let h1 = outer[i];
            let (w1, w2) = (x.weight(q1.wall), x.weight(q2.wall));
            let d12 = x.distance(q1.v, q2.v);
            let members = trace(h1);
            let nested = h1 != inner2 && x.is_subset(inner2, h1);
            let case_a = nested
                && members.iter().all(|&m| x.distance(m, q2.v) <= x.distance(m, q1.v) + d12 - int(2) * (w1 + w2));
            let case_b =
                h1 == inner2 && members.iter().any(|&m| x.distance(m, q2.v) == x.distance(m, q1.v) + d12 - int(2) * w1);
            if case_a == case_b {
                return Err(Error::DichotomyViolation(format!(
                    "edges {}-{} and {}-{}: nested {}, equal {}",
                    x.vertex_name(q1.v),
                    x.vertex_name(q1.u),
                    x.vertex_name(q2.v),
                    x.vertex_name(q2.u),
                    case_a,
                    case_b
                )));
            }
        }
    }
    Ok(())
}

/// `d(w₁,v₂) = d(v₁,v₂) ± w₁` and `d(w₁,w₂) = d(v₁,v₂) ± w₁ ± w₂`, with the
/// signs read off the sides of `v₁, v₂`; equal walls cancel.
fn check_case_table(x: &ComplexChart, a: &[VertexId], pushes: &[Push]) -> Result<()> {
    let signed = |w: Weight, away: bool| if away { w } else { -w };
    for q1 in pushes {
        let h1 = x.side_of(q1.u, q1.wall);
        let wt1 = x.weight(q1.wall);
        for &v2 in a {
            let expected = x.distance(q1.v, v2) + signed(wt1, !x.in_halfspace(v2, h1));
            if x.distance(q1.u, v2) != expected {
                return Err(Error::Internal(format!(
                    "case table fails at {} and {}",
                    x.vertex_name(q1.u),
                    x.vertex_name(v2)
                )));
            }
        }
        for q2 in pushes {
            let h2 = x.side_of(q2.u, q2.wall);
            let base = x.distance(q1.v, q2.v);
            let expected = if q1.wall == q2.wall {
                base
            } else {
                base + signed(wt1, !x.in_halfspace(q2.v, h1)) + signed(x.weight(q2.wall), !x.in_halfspace(q1.v, h2))
            };
            if x.distance(q1.u, q2.u) != expected {
                return Err(Error::Internal(format!(
                    "case table fails at {} and {}",
                    x.vertex_name(q1.u),
                    x.vertex_name(q2.u)
                )));
            }
        }
    }
    Ok(())
}

/// Result of one extension step.
#[derive(Clone, Debug)]
pub struct Step<'a> {
    pub next: PartialIsometry<'a>,
    /// Vertices added on the source side and on the target side.
    pub added: (usize, usize),
    /// Edges leaving the correspondence that could not be pushed.
    pub blocked: Vec<String>,
}

/// Extends `φ` to the neighbours of `A` and `φ⁻¹` to the neighbours of `B`,
/// checks that the two agree, and re-validates distances.
pub fn extend_one_step<'a>(partial: &PartialIsometry<'a>) -> Result<Step<'a>> {
    let (x, y) = (partial.x, partial.y);
    let (fwd, mut blocked) = grow(partial)?;
    let (bwd, blocked_back) = grow(&partial.inverse())?;
    blocked.extend(blocked_back);

    let mut forward = partial.forward.clone();
    let mut backward = partial.backward.clone();
    let mut added = (0, 0);
    let clash = |u: &str, images: Vec<&str>| Error::InconsistentExtension {
        vertex: u.to_string(),
        images: images.into_iter().map(str::to_string).collect(),
    };
    for q in &fwd {
        match forward[q.u] {
            None => {
                if let Some(other) = backward[q.image] {
                    return Err(clash(y.vertex_name(q.image), vec![x.vertex_name(other), x.vertex_name(q.u)]));
                }
                forward[q.u] = Some(q.image);
                backward[q.image] = Some(q.u);
                added.0 += 1;
            }
            Some(i) if i != q.image => {
                return Err(clash(x.vertex_name(q.u), vec![y.vertex_name(i), y.vertex_name(q.image)]));
            }
            Some(_) => {}
        }
    }
    for q in &bwd {
        // `q` is an edge of Y from `q.v ∈ B` to `q.u`, pushed into X.
        match backward[q.u] {
            None => {
                if let Some(other) = forward[q.image] {
                    return Err(clash(x.vertex_name(q.image), vec![y.vertex_name(other), y.vertex_name(q.u)]));
                }
                backward[q.u] = Some(q.image);
                forward[q.image] = Some(q.u);
                added.1 += 1;
            }
            Some(i) if i != q.image => {
                return Err(clash(y.vertex_name(q.u), vec![x.vertex_name(i), x.vertex_name(q.image)]));
            }
            Some(_) => {}
        }
    }
    let next = PartialIsometry { x, y, forward, backward };
    let domain = next.domain();
    for (i, &p) in domain.iter().enumerate() {
        let fresh_p = partial.get(p).is_none();
        for &q in &domain[i + 1..] {
            if (fresh_p || partial.get(q).is_none())
                && x.distance(p, q) != y.distance(next.forward[p].unwrap(), next.forward[q].unwrap())
            {
                return Err(Error::DistanceViolation {
                    x: x.vertex_name(p).to_string(),
                    y: x.vertex_name(q).to_string(),
                });
            }
        }
    }
    Ok(Step { next, added, blocked })
}

/// Iterates [`extend_one_step`] to a fixed point and verifies the result.
pub fn extend_full(partial: &PartialIsometry) -> Result<Vec<VertexId>> {
    let mut current = partial.clone();
    while !current.is_total() {
        let step = extend_one_step(&current)?;
        if step.added == (0, 0) {
            let mut frontier = BTreeSet::new();
            for &v in &current.domain() {
                for &(u, _) in current.x.neighbors(v) {
                    if current.get(u).is_none() {
                        frontier.insert(format!("X:{}", current.x.vertex_name(u)));
                    }
                }
            }
            let inverse = current.inverse();
            for &v in &inverse.domain() {
                for &(u, _) in inverse.x.neighbors(v) {
                    if inverse.get(u).is_none() {
                        frontier.insert(format!("Y:{}", inverse.x.vertex_name(u)));
                    }
                }
            }
            if current.is_empty() {
                frontier.insert("empty correspondence".to_string());
            }
            return Err(Error::Stalled { frontier: frontier.into_iter().collect(), reasons: step.blocked });
        }
        current = step.next;
    }
    let map = current.total_map().expect("total");
    verify_isomorphism(current.x, current.y, &map)?;
    Ok(map)
}

/// Checks that `map` is a bijection preserving edges, the hyperplane
/// structure and weights.
pub fn verify_isomorphism(x: &ComplexChart, y: &ComplexChart, map: &[VertexId]) -> Result<()> {
    let fail = |m: String| Err(Error::NotIsomorphism(m));
    if map.len() != x.num_vertices() || x.num_vertices() != y.num_vertices() {
        return fail(format!("{} vertices against {}", x.num_vertices(), y.num_vertices()));
    }
    let mut seen = vec![false; y.num_vertices()];
    for &b in map {
        if b >= seen.len() || std::mem::replace(&mut seen[b], true) {
            return fail("map is not a bijection".into());
        }
    }
    if x.num_edges() != y.num_edges() {
        return fail("edge counts differ".into());
    }
    let mut walls: Vec<Option<WallId>> = vec![None; x.num_walls()];
    for v in x.vertices() {
        for &(u, w) in x.neighbors(v) {
            let image = match y.neighbors(map[v]).iter().find(|&&(t, _)| t == map[u]) {
                Some(&(_, iw)) => iw,
                None => return fail(format!("edge {}-{} is not preserved", x.vertex_name(v), x.vertex_name(u))),
            };
            if *walls[w].get_or_insert(image) != image {
                return fail(format!("edges dual to {} go to different hyperplanes", x.wall(w).id));
            }
            if x.weight(w) != y.weight(image) {
                return fail(format!("{} and {} have different weights", x.wall(w).id, y.wall(image).id));
            }
        }
    }
    Ok(())
}

/// Every weight-preserving cubical isomorphism extending `φ`, by
/// backtracking over breadth-first vertex order.
pub fn brute_force_extensions(partial: &PartialIsometry, bound: usize) -> Result<Vec<Vec<VertexId>>> {
    let (x, y) = (partial.x, partial.y);
    if x.num_vertices() > bound {
        return Err(Error::BoundExceeded { size: x.num_vertices(), bound });
    }
    if x.num_vertices() != y.num_vertices() || x.num_walls() != y.num_walls() {
        return Ok(Vec::new());
    }
    let start = partial.domain().first().copied().unwrap_or(0);
    let mut order = vec![start];
    let mut parent = vec![None; x.num_vertices()];
    let mut queued = vec![false; x.num_vertices()];
    queued[start] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &(u, _) in x.neighbors(v) {
            if !queued[u] {
                queued[u] = true;
                parent[u] = Some(v);
                order.push(u);
            }
        }
        i += 1;
    }

    struct Search<'s> {
        x: &'s ComplexChart,
        y: &'s ComplexChart,
        partial: &'s PartialIsometry<'s>,
        order: Vec<VertexId>,
        parent: Vec<Option<VertexId>>,
        map: Vec<Option<VertexId>>,
        used: Vec<bool>,
        found: Vec<Vec<VertexId>>,
    }
    impl Search<'_> {
        fn fits(&self, depth: usize, v: VertexId, c: VertexId) -> bool {
            if self.used[c] {
                return false;
            }
            match (self.partial.get(v), self.partial.backward[c]) {
                (Some(b), _) if b != c => return false,
                (None, Some(_)) => return false,
                _ => {}
            }
            self.order[..depth].iter().all(|&p| self.x.distance(v, p) == self.y.distance(c, self.map[p].unwrap()))
        }

        fn run(&mut self, depth: usize) {
            if depth == self.order.len() {
                self.found.push(self.map.iter().map(|m| m.unwrap()).collect());
                return;
            }
            let v = self.order[depth];
            let candidates: Vec<VertexId> = match self.parent[v] {
                Some(p) => self.y.neighbors(self.map[p].unwrap()).iter().map(|&(c, _)| c).collect(),
                None => match self.partial.get(v) {
                    Some(b) => vec![b],
                    None => self.y.vertices().collect(),
                },
            };
            for c in candidates {
                if self.fits(depth, v, c) {
                    self.map[v] = Some(c);
                    self.used[c] = true;
                    self.run(depth + 1);
                    self.used[c] = false;
                    self.map[v] = None;
                }
            }
        }
    }

    let mut search = Search {
        x,
        y,
        partial,
        order,
        parent,
        map: vec![None; x.num_vertices()],
        used: vec![false; y.num_vertices()],
        found: Vec::new(),
    };
    search.run(0);
    for m in &search.found {
        verify_isomorphism(x, y, m)?;
    }
    Ok(search.found)
}

/// `A` is witness-complete when every iterated neighbourhood of `A` has a
/// witness for every wall at every vertex, so extension never blocks.
pub fn witness_complete(chart: &ComplexChart, set: &[VertexId]) -> bool {
    let mut inside = vec![false; chart.num_vertices()];
    for &v in set {
        inside[v] = true;
    }
    loop {
        let members: Vec<VertexId> = chart.vertices().filter(|&v| inside[v]).collect();
        if members.is_empty() {
            return false;
        }
        for &v in &members {
            if h_sets_in(chart, &members, v).iter().any(|h| h.witness.is_none()) {
                return false;
            }
        }
        if members.len() == chart.num_vertices() {
            return true;
        }
        for &v in &members {
            for &(u, _) in chart.neighbors(v) {
                inside[u] = true;
            }
        }
    }
}

/// Thins `V(X)` to a small witness-complete subset by deleting vertices
/// in a seeded random order while the property holds.
pub fn thin_witness_complete(chart: &ComplexChart, seed: u64) -> Vec<VertexId> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<VertexId> = chart.vertices().collect();
    order.shuffle(&mut rng);
    let mut set: Vec<VertexId> = chart.vertices().collect();
    for v in order {
        let trial: Vec<VertexId> = set.iter().copied().filter(|&u| u != v).collect();
        if witness_complete(chart, &trial) {
            set = trial;
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{grid, grid_vertex, path, star};

    fn identity<'a>(c: &'a ComplexChart, domain: &[VertexId]) -> PartialIsometry<'a> {
        let map: Vec<VertexId> = c.vertices().collect();
        PartialIsometry::restrict(c, c, &map, domain).unwrap()
    }

    fn names(c: &ComplexChart, vs: &[VertexId]) -> Vec<String> {
        vs.iter().map(|&v| c.vertex_name(v).to_string()).collect()
    }

    #[test]
    fn path_h_sets() {
        let p = path(5);
        let all: Vec<_> = p.vertices().collect();
        let phi = identity(&p, &all);
        let hs = h_sets(&phi, p.find_vertex("2").unwrap()).unwrap();
        let mut sets: Vec<Vec<String>> = hs.iter().map(|h| names(&p, &h.members)).collect();
        sets.sort();
        assert_eq!(sets, vec![vec!["0", "1"], vec!["3", "4", "5"]]);
        assert!(hs.iter().all(|h| h.witness.is_some() && h.satisfies_star));
    }

    #[test]
    fn grid_corner_has_two_h_sets() {
        let g = grid(&[3, 3]);
        let all: Vec<_> = g.vertices().collect();
        let hs = h_sets(&identity(&g, &all), grid_vertex(&[3, 3], &[0, 0])).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().all(|h| h.witness.is_some()));
    }

    #[test]
    fn antipodal_corners_lack_witnesses() {
        let sq = grid(&[1, 1]);
        let a = [sq.find_vertex("0,0").unwrap(), sq.find_vertex("1,1").unwrap()];
        let hs = h_sets(&identity(&sq, &a), a[0]).unwrap();
        assert_eq!(hs.len(), 2);
        assert!(hs.iter().all(|h| h.witness.is_none()));
        assert!(!witness_complete(&sq, &a));
    }

    #[test]
    fn identity_pushes_walls_to_themselves() {
        let g = grid(&[2, 2]);
        let all: Vec<_> = g.vertices().collect();
        let phi = identity(&g, &all);
        for v in g.vertices() {
            for w in g.adjacent_walls(v) {
                let h = push_halfspace(&phi, v, w).unwrap();
                assert_eq!(h.wall, w);
                assert_ne!(h.sign, g.sign(v, w));
            }
        }
    }

    fn rotation(dims: &[usize; 2]) -> Vec<VertexId> {
        let n = dims[0];
        let mut map = vec![0; (n + 1) * (n + 1)];
        for i in 0..=n {
            for j in 0..=n {
                map[grid_vertex(dims, &[i, j])] = grid_vertex(dims, &[j, n - i]);
            }
        }
        map
    }

    #[test]
    fn rotation_pushes_and_extends() {
        let dims = [2, 2];
        let g = grid(&dims);
        let rot = rotation(&dims);
        let center = grid_vertex(&dims, &[1, 1]);
        let a: Vec<_> = g.vertices().filter(|&v| v != center).collect();
        let phi = PartialIsometry::restrict(&g, &g, &rot, &a).unwrap();
        // Each wall goes where the rotation sends its edges.
        for &v in &a {
            for &(u, w) in g.neighbors(v) {
                let h = push_halfspace(&phi, v, w).unwrap();
                let (rv, ru) = (rot[v], rot[u]);
                assert_eq!(g.across(rv, h.wall), Some(ru));
            }
        }
        let step = extend_one_step(&phi).unwrap();
        assert_eq!(step.next.total_map().unwrap(), rot);
        assert_eq!(extend_full(&phi).unwrap(), rot);
    }

    #[test]
    fn path_grows_one_layer_per_step() {
        let p = path(5);
        let ends = [p.find_vertex("0").unwrap(), p.find_vertex("5").unwrap()];
        let phi = identity(&p, &ends);
        let step = extend_one_step(&phi).unwrap();
        assert_eq!(names(&p, &step.next.domain()), vec!["0", "1", "4", "5"]);
        let step = extend_one_step(&step.next).unwrap();
        assert_eq!(step.next.len(), 6);
        assert_eq!(extend_full(&phi).unwrap(), p.vertices().collect::<Vec<_>>());
    }

    #[test]
    fn full_domain_returns_input() {
        let g = grid(&[2, 1]);
        let all: Vec<_> = g.vertices().collect();
        let phi = identity(&g, &all);
        let step = extend_one_step(&phi).unwrap();
        assert_eq!(step.added, (0, 0));
        assert_eq!(extend_full(&phi).unwrap(), all);
    }

    #[test]
    fn path_into_tripod_fails() {
        let p = path(2);
        let t = star(3, 1);
        let phi = PartialIsometry::from_names(&p, &t, &[("0", "0.1"), ("1", "c"), ("2", "1.1")]).unwrap();
        match extend_full(&phi) {
            Err(Error::Stalled { frontier, .. }) => assert_eq!(frontier, vec!["Y:2.1"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sparse_domain_has_no_match() {
        let sq = grid(&[1, 1]);
        let a = [sq.find_vertex("0,0").unwrap(), sq.find_vertex("1,1").unwrap()];
        let phi = identity(&sq, &a);
        let w = sq.adjacent_walls(a[0])[0];
        assert!(matches!(push_halfspace(&phi, a[0], w), Err(Error::NoMatch { .. })));
        assert!(matches!(extend_full(&phi), Err(Error::Stalled { .. })));
    }

    #[test]
    fn distance_breaking_correspondence_is_rejected() {
        let p = path(3);
        let err = PartialIsometry::from_names(&p, &p, &[("0", "0"), ("1", "3")]).unwrap_err();
        assert!(matches!(err, Error::NotDistancePreserving { .. }));
    }

    #[test]
    fn square_symmetry_counts() {
        let sq = grid(&[1, 1]);
        let v = |n: &str| sq.find_vertex(n).unwrap();
        let two = PartialIsometry::new(&sq, &sq, &[(v("0,0"), v("0,0")), (v("1,0"), v("1,0"))]).unwrap();
        assert_eq!(brute_force_extensions(&two, 64).unwrap().len(), 1);
        let one = PartialIsometry::new(&sq, &sq, &[(v("0,0"), v("0,0"))]).unwrap();
        assert_eq!(brute_force_extensions(&one, 64).unwrap().len(), 2);
        let none = PartialIsometry::new(&sq, &sq, &[]).unwrap();
        assert_eq!(brute_force_extensions(&none, 64).unwrap().len(), 8);
        assert!(matches!(brute_force_extensions(&none, 3), Err(Error::BoundExceeded { size: 4, bound: 3 })));
    }
}
