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

//! Brute-force oracles shared by the integration tests. They use only the
//! 1-skeleton and its edge weights, never the wall coordinates.

#![allow(dead_code)]

use cubecrux::chart::{ComplexChart, RawChart, Sign, VertexId, Wall};
use cubecrux::error::Result;
use cubecrux::weight::Weight;

/// Chart from bit strings: `verts[i].1[j] == '1'` puts vertex `i` on the
/// plus side of wall `j`.
pub fn bits(walls: &[&str], verts: &[(&str, &str)]) -> Result<ComplexChart> {
    let raw = RawChart {
        walls: walls.iter().map(|w| Wall::unit(*w)).collect(),
        vertices: verts
            .iter()
            .map(|(n, s)| (n.to_string(), s.chars().map(|c| if c == '1' { Sign::Plus } else { Sign::Minus }).collect()))
            .collect(),
    };
    ComplexChart::validate(raw)
}

pub fn square() -> ComplexChart {
    bits(&["a", "b"], &[("00", "00"), ("10", "10"), ("01", "01"), ("11", "11")]).unwrap()
}

pub fn cube3() -> ComplexChart {
    let names = ["000", "001", "010", "011", "100", "101", "110", "111"];
    let verts: Vec<(&str, &str)> = names.iter().map(|n| (*n, *n)).collect();
    bits(&["a", "b", "c"], &verts).unwrap()
}

pub fn v(c: &ComplexChart, name: &str) -> VertexId {
    c.find_vertex(name).unwrap_or_else(|_| panic!("no vertex {name}"))
}

pub fn vs(c: &ComplexChart, names: &[&str]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = names.iter().map(|n| v(c, n)).collect();
    out.sort_unstable();
    out
}

/// All-pairs shortest paths over weighted edges.
#[allow(clippy::needless_range_loop)]
pub fn graph_distances(c: &ComplexChart) -> Vec<Vec<Weight>> {
    let n = c.num_vertices();
    let mut d: Vec<Vec<Option<Weight>>> = vec![vec![None; n]; n];
    for x in 0..n {
        d[x][x] = Some(Weight::from_integer(0));
        for &(y, w) in c.neighbors(x) {
            d[x][y] = Some(c.weight(w));
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|cur| a + b < cur) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d.into_iter().map(|row| row.into_iter().map(|x| x.expect("connected")).collect()).collect()
}

pub fn between(d: &[Vec<Weight>], a: usize, b: usize, m: usize) -> bool {
    d[a][m] + d[m][b] == d[a][b]
}

pub fn interval(d: &[Vec<Weight>], x: usize, y: usize) -> Vec<usize> {
    (0..d.len()).filter(|&m| between(d, x, y, m)).collect()
}

pub fn medians(d: &[Vec<Weight>], x: usize, y: usize, z: usize) -> Vec<usize> {
    (0..d.len()).filter(|&m| between(d, x, y, m) && between(d, y, z, m) && between(d, x, z, m)).collect()
}

/// Smallest interval-closed superset.
pub fn hull(d: &[Vec<Weight>], set: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; d.len()];
    for &s in set {
        inside[s] = true;
    }
    loop {
        let members: Vec<usize> = (0..d.len()).filter(|&i| inside[i]).collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                for m in interval(d, a, b) {
                    if !inside[m] {
                        inside[m] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return (0..d.len()).filter(|&i| inside[i]).collect();
        }
    }
}

pub fn nearest(d: &[Vec<Weight>], set: &[usize], x: usize) -> Vec<usize> {
    let best = set.iter().map(|&s| d[x][s]).min().expect("nonempty");
    set.iter().copied().filter(|&s| d[x][s] == best).collect()
}
