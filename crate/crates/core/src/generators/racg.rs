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

//! Balls in Davis complexes of right-angled Coxeter groups.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::actions::{
    cr_from_ell_check_with, translation_length, Automorphism, BallChart, CrFromEllReport, LengthCertificate,
};
use crate::chart::{ComplexChart, Sign, SparseChart, VertexId, Wall};
use crate::error::{Error, Result};
use crate::wallset::WallSet;
use crate::weight::{int, Weight};

/// Generators are `0..names.len()`; `edges` lists commuting pairs.
#[derive(Clone, Debug)]
pub struct RacgSpec {
    pub names: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub radius: usize,
    /// One weight per generator; reflection walls inherit the weight of
    /// their generator's conjugacy class. Defaults to 1.
    pub weights: Option<Vec<Weight>>,
}

impl RacgSpec {
    /// Generators named `a, b, c, ...`.
    pub fn lettered(n: usize, edges: &[(usize, usize)], radius: usize) -> RacgSpec {
        RacgSpec {
            names: (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect(),
            edges: edges.to_vec(),
            radius,
            weights: None,
        }
    }

    /// The `n`-cycle graph with generators `s0..s{n-1}`.
    pub fn cycle(n: usize, radius: usize) -> RacgSpec {
        RacgSpec {
            names: (0..n).map(|i| format!("s{i}")).collect(),
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
            radius,
            weights: None,
        }
    }
}

/// Word problem via cancellation and lexicographic trace normal form.
#[derive(Clone, Debug)]
pub struct Racg {
    commute: Vec<Vec<bool>>,
}

impl Racg {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Racg> {
        let mut commute = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::Schema { path: "edges".into(), message: format!("bad edge ({a}, {b})") });
            }
            commute[a][b] = true;
            commute[b][a] = true;
        }
        Ok(Racg { commute })
    }

    pub fn rank(&self) -> usize {
        self.commute.len()
    }

    pub fn commutes(&self, a: u8, b: u8) -> bool {
        self.commute[a as usize][b as usize]
    }

    /// Deletes `s … s` pairs whose middle letters all commute with `s`.
    fn reduce(&self, word: &mut Vec<u8>) {
        'again: loop {
            for i in 0..word.len() {
                for j in i + 1..word.len() {
                    if word[j] == word[i] {
                        word.remove(j);
                        word.remove(i);
                        continue 'again;
                    }
                    if !self.commutes(word[i], word[j]) {
                        break;
                    }
                }
            }
            return;
        }
    }

    /// ShortLex normal form.
    pub fn normal_form(&self, word: &[u8]) -> Vec<u8> {
        let mut w = word.to_vec();
        self.reduce(&mut w);
        let mut out = Vec::with_capacity(w.len());
        while !w.is_empty() {
            // Letters that can be commuted to the front.
            let mut best: Option<usize> = None;
            for p in 0..w.len() {
                if w[..p].iter().all(|&q| self.commutes(q, w[p])) && best.is_none_or(|b| w[p] < w[b]) {
                    best = Some(p);
                }
            }
            out.push(w.remove(best.expect("the first letter is always available")));
        }
        out
    }

    pub fn multiply(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        let mut w = a.to_vec();
        w.extend_from_slice(b);
        self.normal_form(&w)
    }
}

fn word_name(names: &[String], w: &[u8]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|&s| names[s as usize].as_str()).collect()
    }
}

impl RacgSpec {
    fn weights(&self) -> Result<Vec<Weight>> {
        let n = self.names.len();
        match &self.weights {
            Some(w) if w.len() == n => Ok(w.clone()),
            Some(_) => Err(Error::Schema { path: "weights".into(), message: "one weight per generator".into() }),
            None => Ok(vec![int(1); n]),
        }
    }

    /// Parses a word such as `s0s2s0s3` or `ab` by greedy longest match.
    pub fn parse_word(&self, text: &str) -> Result<Vec<u8>> {
        let mut out = Vec::new();
        let mut rest = text.trim();
        if rest == "1" {
            return Ok(out);
        }
        while !rest.is_empty() {
            let (i, name) = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())
                .ok_or_else(|| Error::Schema { path: "word".into(), message: format!("cannot parse {text}") })?;
            out.push(i as u8);
            rest = &rest[name.len()..];
        }
        Ok(out)
    }

    /// Dimension of the Davis complex: the largest clique of commuting
    /// generators.
    pub fn dimension(&self) -> usize {
        let n = self.names.len();
        let adj = |a: usize, b: usize| self.edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
        let mut best = usize::from(n > 0);
        for mask in 1u64..(1u64 << n.min(20)) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if members.len() > best
                && members.iter().enumerate().all(|(k, &a)| members[k + 1..].iter().all(|&b| adj(a, b)))
            {
                best = members.len();
            }
        }
        best
    }
}

/// The convex hull of the word-length ball of radius `R`, with the
/// generators acting by left multiplication.
pub fn racg_ball(spec: &RacgSpec) -> Result<BallChart> {
    if spec.radius == 0 {
        return Err(Error::Schema { path: "radius".into(), message: "radius must be at least 1".into() });
    }
    let n = spec.names.len();
    let group = Racg::new(n, &spec.edges)?;

    let mut elems: Vec<Vec<u8>> = vec![Vec::new()];
    let mut index: HashMap<Vec<u8>, VertexId> = HashMap::from([(Vec::new(), 0)]);
    let mut frontier = vec![0];
    for _ in 0..spec.radius {
        let mut next = Vec::new();
        for &v in &frontier {
            for s in 0..n as u8 {
                let w = group.multiply(&elems[v], &[s]);
                if !index.contains_key(&w) {
                    index.insert(w.clone(), elems.len());
                    next.push(elems.len());
                    elems.push(w);
                }
            }
        }
        frontier = next;
    }
    // Square completion: x, xst present with s, t commuting forces xs, xt.
    let mut queue: VecDeque<VertexId> = (0..elems.len()).collect();
    while let Some(v) = queue.pop_front() {
        for s in 0..n as u8 {
            for t in s + 1..n as u8 {
                if !group.commutes(s, t) {
                    continue;
                }
                let x = elems[v].clone();
                let xst = group.multiply(&x, &[s, t]);
                if !index.contains_key(&xst) {
                    continue;
                }
                for corner in [group.multiply(&x, &[s]), group.multiply(&x, &[t])] {
                    if !index.contains_key(&corner) {
                        index.insert(corner.clone(), elems.len());
                        queue.push_back(elems.len());
                        queue.push_back(v);
                        elems.push(corner);
                    }
                }
            }
        }
    }
    assemble(spec, &group, elems, index, int(spec.radius as i64))
}

fn reflection(group: &Racg, g: &[u8], s: u8) -> Vec<u8> {
    let mut w = g.to_vec();
    w.push(s);
    w.extend(g.iter().rev());
    group.normal_form(&w)
}

/// The convex hull of finitely many group elements, based at the first.
/// The recorded radius is zero: the chart is not a ball, so only
/// radius-free certificates apply to it.
pub fn racg_hull(spec: &RacgSpec, points: &[Vec<u8>]) -> Result<BallChart> {
    let n = spec.names.len();
    let group = Racg::new(n, &spec.edges)?;
    let points: Vec<Vec<u8>> = points.iter().map(|p| group.normal_form(p)).collect();
    let base = points.first().ok_or(Error::EmptySet)?.clone();
    // A vertex lies in the hull iff every wall separating it from the base
    // separates some point from the base.
    let mut crossing: HashSet<Vec<u8>> = HashSet::new();
    for p in &points {
        let path = group.multiply(&base.iter().rev().copied().collect::<Vec<u8>>(), p);
        let mut at = base.clone();
        for &s in &path {
            crossing.insert(reflection(&group, &at, s));
            at = group.multiply(&at, &[s]);
        }
    }
    let mut elems = vec![base.clone()];
    let mut index: HashMap<Vec<u8>, VertexId> = HashMap::from([(base, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for s in 0..n as u8 {
            if !crossing.contains(&reflection(&group, &elems[v], s)) {
                continue;
            }
            let u = group.multiply(&elems[v], &[s]);
            if !index.contains_key(&u) {
                index.insert(u.clone(), elems.len());
                queue.push_back(elems.len());
                elems.push(u);
            }
        }
    }
    assemble(spec, &group, elems, index, int(0))
}

/// Translation length of the element `word`, certified on the hull of
/// `1, x, x²`. Walls crossed by `[1, x]` then have their images inside the
/// chart, which is what skewer counting needs.
pub fn racg_translation_length(spec: &RacgSpec, word: &[u8]) -> Result<LengthCertificate> {
    let group = Racg::new(spec.names.len(), &spec.edges)?;
    let x = group.normal_form(word);
    let x2 = group.multiply(&x, &x);
    let hull = racg_hull(spec, &[Vec::new(), x.clone(), x2])?;
    let g = racg_element_action(spec, &hull, &x)?;
    translation_length(&hull, &g)
}

/// `cr(g⁻ᵏu, h⁻ᵏw, gᵏu, hᵏw)` on the hull of the four points. Cross
/// ratios only see walls separating their arguments, so any convex chart
/// containing them gives the same value.
pub fn racg_deep_cross_ratio(spec: &RacgSpec, g: &[u8], h: &[u8], u: &[u8], w: &[u8], k: usize) -> Result<Weight> {
    let group = Racg::new(spec.names.len(), &spec.edges)?;
    let inverse = |x: &[u8]| x.iter().rev().copied().collect::<Vec<u8>>();
    let points = [
        group.multiply(&inverse(g).repeat(k), u),
        group.multiply(&inverse(h).repeat(k), w),
        group.multiply(&g.repeat(k), u),
        group.multiply(&h.repeat(k), w),
    ];
    let hull = racg_hull(spec, &points)?;
    let id = |x: &[u8]| hull.chart.find_vertex(&word_name(&spec.names, x));
    Ok(hull.chart.cross_ratio(id(&points[0])?, id(&points[1])?, id(&points[2])?, id(&points[3])?))
}

/// The cross-ratio/length comparison for the elements `g` and `h`, with
/// neat witnesses found in `ball` and both sequences certified on hulls.
pub fn racg_cr_from_ell(
    spec: &RacgSpec,
    ball: &BallChart,
    g: &[u8],
    h: &[u8],
    n_max: usize,
) -> Result<CrFromEllReport> {
    let ga = racg_element_action(spec, ball, g)?;
    let ha = racg_element_action(spec, ball, h)?;
    let word_of = |v: VertexId| spec.parse_word(ball.chart.vertex_name(v));
    cr_from_ell_check_with(
        ball,
        &ga,
        &ha,
        n_max,
        |n| racg_length_combination(spec, g, h, n as usize),
        |k, u, w| racg_deep_cross_ratio(spec, g, h, &word_of(u)?, &word_of(w)?, k as usize),
    )
}

/// Left multiplication by `word` on a chart built by this module, as one
/// partial map rather than a composite of generators.
pub fn racg_element_action(spec: &RacgSpec, ball: &BallChart, word: &[u8]) -> Result<Automorphism> {
    let group = Racg::new(spec.names.len(), &spec.edges)?;
    let chart = &ball.chart;
    let mut map = Vec::with_capacity(chart.num_vertices());
    for v in chart.vertices() {
        let e = spec.parse_word(chart.vertex_name(v))?;
        let image = group.multiply(word, &e);
        map.push(chart.find_vertex(&word_name(&spec.names, &image)).ok());
    }
    Automorphism::new(chart, map)
}

/// `ℓ(gⁿ) + ℓ(hⁿ) − ℓ(gⁿhⁿ)` with each length from [`racg_translation_length`].
pub fn racg_length_combination(spec: &RacgSpec, g: &[u8], h: &[u8], n: usize) -> Result<Weight> {
    let gn = g.repeat(n);
    let hn = h.repeat(n);
    let gnhn = [gn.clone(), hn.clone()].concat();
    Ok(racg_translation_length(spec, &gn)?.value + racg_translation_length(spec, &hn)?.value
        - racg_translation_length(spec, &gnhn)?.value)
}

/// Chart on a convex set of elements, vertex 0 first. Walls are the
/// reflections `g s g⁻¹`; coordinates come from breadth-first search.
fn assemble(
    spec: &RacgSpec,
    group: &Racg,
    elems: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, VertexId>,
    radius: Weight,
) -> Result<BallChart> {
    let n = spec.names.len();
    let weights = spec.weights()?;
    let mut wall_index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut walls: Vec<Wall> = Vec::new();
    let mut wall_of = |g: &[u8], s: u8| -> usize {
        let r = reflection(group, g, s);
        *wall_index.entry(r.clone()).or_insert_with(|| {
            walls.push(Wall { id: word_name(&spec.names, &r), weight: weights[s as usize] });
            walls.len() - 1
        })
    };
    let mut coords: Vec<Option<WallSet>> = vec![None; elems.len()];
    coords[0] = Some(WallSet::new());
    let mut bfs = VecDeque::from([0usize]);
    while let Some(v) = bfs.pop_front() {
        for s in 0..n as u8 {
            let u = match index.get(&group.multiply(&elems[v], &[s])) {
                Some(&u) => u,
                None => continue,
            };
            let w = wall_of(&elems[v], s);
            if coords[u].is_none() {
                coords[u] = Some(coords[v].as_ref().expect("visited").toggled(w));
                bfs.push_back(u);
            }
        }
    }
    let vertices = elems
        .iter()
        .zip(coords)
        .map(|(e, c)| (word_name(&spec.names, e), c.expect("convex sets are connected")))
        .collect();
    let reference = vec![Sign::Minus; walls.len()];
    let chart = ComplexChart::from_sparse(SparseChart { walls, reference, vertices })?;

    let mut generators = Vec::with_capacity(n);
    for s in 0..n as u8 {
        let map = elems.iter().map(|e| index.get(&group.multiply(&[s], e)).copied()).collect();
        generators.push((spec.names[s as usize].clone(), Automorphism::new(&chart, map)?));
    }
    Ok(BallChart { chart, basepoint: 0, radius, dimension: spec.dimension(), generators })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms() {
        let g = Racg::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.normal_form(&[1, 0]), vec![0, 1]);
        assert_eq!(g.normal_form(&[0, 1, 0]), vec![1]);
        assert_eq!(g.normal_form(&[0, 2, 0]), vec![0, 2, 0]);
        assert_eq!(g.normal_form(&[2, 1, 0, 2]), vec![2, 0, 1, 2]);
    }

    #[test]
    fn edge_graph_gives_square() {
        let b = racg_ball(&RacgSpec::lettered(2, &[(0, 1)], 2)).unwrap();
        assert_eq!((b.chart.num_vertices(), b.chart.num_walls(), b.chart.dimension()), (4, 2, 2));
    }

    #[test]
    fn free_product_gives_tree() {
        let b = racg_ball(&RacgSpec::lettered(3, &[], 3)).unwrap();
        // 1 + 3 + 6 + 12
        assert_eq!(b.chart.num_vertices(), 22);
        assert_eq!(b.chart.dimension(), 1);
    }

    #[test]
    fn hull_of_tree_points_is_a_path() {
        let spec = RacgSpec::lettered(3, &[], 1);
        let ab = spec.parse_word("ab").unwrap();
        let h = racg_hull(&spec, &[vec![], ab.clone(), [ab.clone(), ab].concat()]).unwrap();
        assert_eq!(h.chart.num_vertices(), 5);
        assert_eq!(h.dimension, 1);
    }

    #[test]
    fn pentagon_dimension() {
        assert_eq!(RacgSpec::cycle(5, 1).dimension(), 2);
        assert_eq!(RacgSpec::lettered(3, &[(0, 1), (1, 2), (0, 2)], 1).dimension(), 3);
    }
}
