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

//! Deterministic fixtures and random charts.

pub mod racg;

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::{Automorphism, BallChart};
use crate::chart::{ComplexChart, Sign, SparseChart, VertexId, Wall};
use crate::error::{Error, Result};
use crate::wallset::WallSet;
use crate::weight::int;

pub use racg::{
    racg_ball, racg_cr_from_ell, racg_deep_cross_ratio, racg_element_action, racg_hull, racg_length_combination,
    racg_translation_length, RacgSpec,
};

/// Path with vertices `0..=n` and walls `w1..wn`, `wi` between `i-1` and `i`.
pub fn path(n: usize) -> ComplexChart {
    let walls = (1..=n).map(|i| Wall::unit(format!("w{i}"))).collect();
    let vertices = (0..=n).map(|i| (i.to_string(), (0..i).collect())).collect();
    ComplexChart::from_sparse(SparseChart { walls, reference: vec![Sign::Minus; n], vertices })
        .expect("paths are valid charts")
}

fn axis_name(i: usize) -> String {
    const NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "t"];
    NAMES.get(i).map_or_else(|| format!("a{i}."), |s| s.to_string())
}

/// Product of paths with `dims[i]` edges; vertices are named by their
/// comma-separated coordinates, walls `x1, x2, ..., y1, ...`.
pub fn grid(dims: &[usize]) -> ComplexChart {
    let mut walls = Vec::new();
    let mut offsets = Vec::new();
    for (axis, &n) in dims.iter().enumerate() {
        offsets.push(walls.len() as u32);
        walls.extend((1..=n).map(|k| Wall::unit(format!("{}{k}", axis_name(axis)))));
    }
    let total: usize = dims.iter().map(|n| n + 1).product();
    let mut vertices = Vec::with_capacity(total);
    for idx in 0..total {
        let mut rest = idx;
        let mut pos = vec![0; dims.len()];
        for axis in (0..dims.len()).rev() {
            pos[axis] = rest % (dims[axis] + 1);
            rest /= dims[axis] + 1;
        }
        let coords: Vec<u32> = pos
            .iter()
            .enumerate()
            .flat_map(|(axis, &p)| {
                let o = offsets[axis];
                (0..p as u32).map(move |k| o + k)
            })
            .collect();
        let name = pos.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        vertices.push((name, WallSet::from_unsorted(coords)));
    }
    let reference = vec![Sign::Minus; walls.len()];
    ComplexChart::from_sparse(SparseChart { walls, reference, vertices }).expect("grids are valid charts")
}

/// Vertex of `grid(dims)` at integer position `pos`.
pub fn grid_vertex(dims: &[usize], pos: &[usize]) -> VertexId {
    pos.iter().zip(dims).fold(0, |acc, (&p, &n)| acc * (n + 1) + p)
}

/// Star with `legs` legs of `len` edges; center `c`, leg vertices `i.j`.
pub fn star(legs: usize, len: usize) -> ComplexChart {
    let mut walls = Vec::new();
    let mut vertices = vec![("c".to_string(), WallSet::new())];
    for i in 0..legs {
        let mut coords = Vec::new();
        for j in 1..=len {
            coords.push(walls.len() as u32);
            walls.push(Wall::unit(format!("e{i}.{j}")));
            vertices.push((format!("{i}.{j}"), WallSet::from_sorted(coords.clone())));
        }
    }
    let reference = vec![Sign::Minus; walls.len()];
    ComplexChart::from_sparse(SparseChart { walls, reference, vertices }).expect("stars are valid charts")
}

/// The ball `[-r, r]` of the integers, with the unit shift and the
/// reflection `n ↦ 1 - n` as partial actions.
pub fn integer_ball(r: usize) -> BallChart {
    let n = 2 * r;
    let walls = (0..n).map(|k| Wall::unit(format!("h{}", k as i64 - r as i64 + 1))).collect();
    let vertices = (0..=n).map(|i| ((i as i64 - r as i64).to_string(), (0..i).collect())).collect();
    let chart = ComplexChart::from_sparse(SparseChart { walls, reference: vec![Sign::Minus; n], vertices })
        .expect("integer balls are valid charts");
    let shift = (0..=n).map(|i| (i < n).then_some(i + 1)).collect();
    // n ↦ 1 − n is i ↦ 2r + 1 − i on indices.
    let reflect = (0..=n).map(|i| (i >= 1).then(|| n + 1 - i)).collect();
    let generators = vec![
        ("s".to_string(), Automorphism::new(&chart, shift).expect("shift preserves edges")),
        ("r".to_string(), Automorphism::new(&chart, reflect).expect("reflection preserves edges")),
    ];
    BallChart { chart, basepoint: r, radius: int(r as i64), dimension: 1, generators }
}

/// The two charts of the branch-point figure with their marked points
/// `x, y, z, z'`.
#[derive(Clone, Debug)]
pub struct Fig1 {
    pub left: ComplexChart,
    pub left_points: [VertexId; 4],
    pub right: ComplexChart,
    pub right_points: [VertexId; 4],
}

/// Left: a star with four legs of length two, marked at its leaves.
/// Right: the box `[-1, 2]³` in `ℤ³` with four marked points whose
/// pairwise partitions are balanced, so every cross ratio vanishes, while
/// the medians `m(x,y,z)` and `m(x,y,z')` differ.
pub fn fig1() -> Fig1 {
    let left = star(4, 2);
    let leaf = |i: usize| left.find_vertex(&format!("{i}.2")).expect("leaf exists");
    let left_points = [leaf(0), leaf(1), leaf(2), leaf(3)];
    let right = grid(&[3, 3, 3]);
    let at = |p: [i64; 3]| {
        let pos: Vec<usize> = p.iter().map(|&c| (c + 1) as usize).collect();
        grid_vertex(&[3, 3, 3], &pos)
    };
    let right_points = [at([0, 2, 1]), at([2, 1, 0]), at([0, 0, -1]), at([1, -1, 1])];
    Fig1 { left, left_points, right, right_points }
}

/// A copy of `chart` with shuffled vertex and wall order and primed
/// names, together with the isomorphism onto it.
pub fn relabeled(chart: &ComplexChart, seed: u64) -> (ComplexChart, Vec<VertexId>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sparse = chart.to_sparse();
    let mut wall_order: Vec<usize> = (0..sparse.walls.len()).collect();
    wall_order.shuffle(&mut rng);
    let mut new_index = vec![0u32; wall_order.len()];
    for (k, &w) in wall_order.iter().enumerate() {
        new_index[w] = k as u32;
    }
    let walls = wall_order
        .iter()
        .map(|&w| Wall { id: format!("{}'", sparse.walls[w].id), weight: sparse.walls[w].weight })
        .collect();
    let reference = wall_order.iter().map(|&w| sparse.reference[w]).collect();
    let mut vertex_order: Vec<VertexId> = chart.vertices().collect();
    vertex_order.shuffle(&mut rng);
    let vertices = vertex_order
        .iter()
        .map(|&v| {
            let (name, coords) = &sparse.vertices[v];
            (format!("{name}'"), WallSet::from_unsorted(coords.iter().map(|w| new_index[w]).collect()))
        })
        .collect();
    let copy =
        ComplexChart::from_sparse(SparseChart { walls, reference, vertices }).expect("relabeling keeps validity");
    let map = chart
        .vertices()
        .map(|v| copy.find_vertex(&format!("{}'", chart.vertex_name(v))).expect("every vertex is copied"))
        .collect();
    (copy, map)
}

/// Majority closure of `n_seeds` random sign vectors over `n_walls` walls,
/// with non-separating and repeated walls removed.
pub fn random_median(n_walls: usize, n_seeds: usize, seed: u64) -> Result<ComplexChart> {
    if n_walls == 0 || n_walls > 16 {
        return Err(Error::Schema { path: "n_walls".into(), message: "must lie in 1..=16".into() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = (1u32 << n_walls) - 1;
    let seeds: Vec<u32> = (0..n_seeds).map(|_| rng.gen::<u32>() & mask).collect();
    median_closure_chart(n_walls, &seeds)
}

/// Chart spanned by the majority closure of bit-vector seeds.
pub fn median_closure_chart(n_walls: usize, seeds: &[u32]) -> Result<ComplexChart> {
    let mut elems: Vec<u32> = Vec::new();
    let mut seen: HashSet<u32> = HashSet::new();
    for &s in seeds {
        if seen.insert(s) {
            elems.push(s);
        }
    }
    let mut next = 0;
    while next < elems.len() {
        let c = elems[next];
        next += 1;
        for i in 0..next {
            for j in i..next {
                let (a, b) = (elems[i], elems[j]);
                let m = (a & b) | (b & c) | (a & c);
                if seen.insert(m) {
                    elems.push(m);
                }
            }
        }
    }
    if elems.len() < 2 {
        return Err(Error::DegenerateSample);
    }
    // Keep one wall per nontrivial bipartition.
    let column =
        |w: usize| -> Vec<bool> { elems.iter().map(|&e| (e >> w & 1 == 1) != (elems[0] >> w & 1 == 1)).collect() };
    let mut kept: Vec<usize> = Vec::new();
    let mut parts: HashMap<Vec<bool>, usize> = HashMap::new();
    for w in 0..n_walls {
        let col = column(w);
        if col.iter().any(|&b| b) && !parts.contains_key(&col) {
            parts.insert(col, w);
            kept.push(w);
        }
    }
    let walls = kept.iter().map(|w| Wall::unit(format!("w{w}"))).collect();
    let reference = kept.iter().map(|&w| if elems[0] >> w & 1 == 1 { Sign::Plus } else { Sign::Minus }).collect();
    let vertices = elems
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let c: WallSet =
                kept.iter().enumerate().filter(|&(_, &w)| (e ^ elems[0]) >> w & 1 == 1).map(|(k, _)| k).collect();
            (format!("v{i}"), c)
        })
        .collect();
    ComplexChart::from_sparse(SparseChart { walls, reference, vertices })
}
