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

//! Medians, intervals, hulls, gates, bridges and strong separation.

mod common;

use common::{cube3, graph_distances, interval, medians, nearest, square, v, vs};
use cubecrux::accept::chart_suite;
use cubecrux::chart::{Halfspace, Sign};
use cubecrux::error::Error;
use cubecrux::generators::{grid, path, racg_ball, star, RacgSpec};
use cubecrux::weight::int;

#[test]
fn medians_by_example() {
    let c = cube3();
    assert_eq!(c.median(v(&c, "000"), v(&c, "110"), v(&c, "101")), v(&c, "100"));
    assert_eq!(c.median(v(&c, "011"), v(&c, "011"), v(&c, "100")), v(&c, "011"));
    let p = path(5);
    assert_eq!(p.median(v(&p, "0"), v(&p, "5"), v(&p, "2")), v(&p, "2"));
}

#[test]
fn intervals_by_example() {
    let s = square();
    assert_eq!(s.interval(v(&s, "00"), v(&s, "11")).vertices, vs(&s, &["00", "01", "10", "11"]));
    assert_eq!(s.interval(v(&s, "10"), v(&s, "10")).vertices, vs(&s, &["10"]));
    let p = path(5);
    assert_eq!(p.interval(v(&p, "1"), v(&p, "4")).vertices, vs(&p, &["1", "2", "3", "4"]));
}

#[test]
fn hulls_by_example() {
    let s = square();
    assert_eq!(s.hull(&vs(&s, &["00", "11"])).unwrap().vertices, vs(&s, &["00", "01", "10", "11"]));
    assert_eq!(s.hull(&vs(&s, &["01"])).unwrap().vertices, vs(&s, &["01"]));
    let t = star(3, 1);
    assert_eq!(t.hull(&vs(&t, &["0.1", "1.1"])).unwrap().vertices, vs(&t, &["c", "0.1", "1.1"]));
    assert_eq!(t.hull(&[]).unwrap_err(), Error::EmptySet);
}

#[test]
fn gates_by_example() {
    let s = square();
    let c = s.convex_set(&vs(&s, &["00", "01"])).unwrap();
    assert_eq!(s.gate(&c, v(&s, "11")), v(&s, "01"));
    assert_eq!(s.gate(&c, v(&s, "00")), v(&s, "00"));
    let p = path(5);
    let c = p.convex_set(&vs(&p, &["2", "3"])).unwrap();
    assert_eq!(p.gate(&c, v(&p, "0")), v(&p, "2"));
}

#[test]
fn convexity_by_example() {
    let s = square();
    // I(01, 10) is the whole square, so the L-shape is not convex.
    let l = vs(&s, &["00", "01", "10"]);
    assert_eq!(common::hull(&graph_distances(&s), &l).len(), 4);
    assert!(!s.is_convex(&l).unwrap());
    assert!(s.is_convex(&vs(&s, &["00", "01"])).unwrap());
    assert!(!s.is_convex(&vs(&s, &["00", "11"])).unwrap());
    assert!(matches!(s.convex_set(&vs(&s, &["00", "11"])), Err(Error::NotConvex { missing: 2 })));
    let g = grid(&[2, 3]);
    for w in g.wall_ids() {
        for sign in [Sign::Minus, Sign::Plus] {
            assert!(g.is_convex(&g.halfspace_vertices(Halfspace::new(w, sign))).unwrap());
        }
    }
}

#[test]
fn tree_bridge_between_disjoint_halfspaces() {
    let t = star(3, 2);
    let h1 = Halfspace::new(t.find_wall("e0.2").unwrap(), Sign::Plus);
    let h2 = Halfspace::new(t.find_wall("e1.1").unwrap(), Sign::Plus);
    let b = t.bridge_decomposition(&t.halfspace_set(h1).unwrap(), &t.halfspace_set(h2).unwrap()).unwrap();
    assert_eq!(b.shore.len(), 1);
    assert_eq!(b.gates, (v(&t, "0.2"), v(&t, "1.1")));
    assert_eq!(b.interval.vertices, vs(&t, &["0.2", "0.1", "c", "1.1"]));
    assert_eq!(b.distance, int(3));
    assert!(b.isometry && b.wall_partition && b.shores_match);
}

#[test]
fn grid_bridge_between_opposite_columns() {
    let g = grid(&[3, 3]);
    let col = |i: usize| g.convex_set(&(0..4).map(|j| v(&g, &format!("{i},{j}"))).collect::<Vec<_>>()).unwrap();
    let b = g.bridge_decomposition(&col(0), &col(3)).unwrap();
    assert_eq!(b.shore.len(), 4);
    assert_eq!(b.interval.len(), 4);
    assert_eq!(b.bridge.len(), 16);
    assert!(b.isometry && b.wall_partition && b.shores_match);
}

#[test]
fn overlapping_sets_have_a_trivial_gap() {
    let g = grid(&[2, 2]);
    let c1 = g.hull(&vs(&g, &["0,0", "1,2"])).unwrap();
    let c2 = g.hull(&vs(&g, &["1,1", "2,2"])).unwrap();
    let b = g.bridge_decomposition(&c1, &c2).unwrap();
    assert_eq!(b.distance, int(0));
    assert_eq!(b.interval.len(), 1);
    assert!(b.gap_walls.is_empty());
    assert!(b.isometry);
}

#[test]
fn strong_separation_by_example() {
    let tree = racg_ball(&RacgSpec::lettered(3, &[], 3)).unwrap().chart;
    for a in tree.wall_ids() {
        for b in tree.wall_ids().filter(|&b| b != a) {
            for (s, t) in [
                (Sign::Minus, Sign::Minus),
                (Sign::Minus, Sign::Plus),
                (Sign::Plus, Sign::Minus),
                (Sign::Plus, Sign::Plus),
            ] {
                let (h1, h2) = (Halfspace::new(a, s), Halfspace::new(b, t));
                if tree.are_disjoint(h1, h2) {
                    assert!(tree.strongly_separated(h1, h2).unwrap());
                }
            }
        }
    }
    let g = grid(&[3, 3]);
    let h = |w: &str, s| Halfspace::new(g.find_wall(w).unwrap(), s);
    assert!(!g.strongly_separated(h("x1", Sign::Minus), h("x3", Sign::Plus)).unwrap());
    assert_eq!(g.strongly_separated(h("x1", Sign::Minus), h("y3", Sign::Plus)).unwrap_err(), Error::NotDisjoint);
}

#[test]
fn oracle_sweep_on_the_chart_suite() {
    for (name, c) in chart_suite(7) {
        let d = graph_distances(&c);
        let n = c.num_vertices();
        for x in 0..n {
            for y in 0..n {
                assert_eq!(c.interval(x, y).vertices, interval(&d, x, y), "{name}: I({x},{y})");
            }
        }
        for x in (0..n).step_by(3) {
            for y in 0..n {
                for z in (0..n).step_by(2) {
                    assert_eq!(vec![c.median(x, y, z)], medians(&d, x, y, z), "{name}: m({x},{y},{z})");
                }
            }
        }
        for pair in [[0, n - 1], [n / 2, n / 3]] {
            let h = c.hull(&pair).unwrap();
            assert_eq!(h.vertices, common::hull(&d, &pair), "{name}: hull {pair:?}");
            for x in 0..n {
                assert_eq!(vec![c.gate(&h, x)], nearest(&d, &h.vertices, x), "{name}: gate of {x}");
            }
        }
    }
}
