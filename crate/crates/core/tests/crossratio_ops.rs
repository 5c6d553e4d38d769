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

//! Gromov products, cross ratios, opposition and cut points.

mod common;

use common::{cube3, square, v, vs};
use cubecrux::crossratio::{mobius_check, CrossRatioTriple};
use cubecrux::generators::{fig1, grid, path, relabeled, star};
use cubecrux::weight::int;

#[test]
fn gromov_products_by_example() {
    let p = path(5);
    assert_eq!(p.gromov_product(v(&p, "0"), v(&p, "3"), v(&p, "5")), int(3));
    let t = star(3, 1);
    assert_eq!(t.gromov_product(v(&t, "c"), v(&t, "0.1"), v(&t, "1.1")), int(0));
    let g = grid(&[2, 2]);
    for a in g.vertices() {
        for x in g.vertices() {
            assert_eq!(g.gromov_product(a, x, x), g.distance(a, x));
            for y in g.vertices() {
                assert_eq!(g.gromov_product(a, x, y), g.gromov_product_by_distances(a, x, y));
            }
        }
    }
}

#[test]
fn cross_ratios_by_example() {
    let p = path(5);
    let [a, b, c, d] = ["0", "5", "2", "3"].map(|n| v(&p, n));
    assert_eq!(p.cross_ratio(a, b, c, d), int(1));
    assert_eq!(p.crt(a, b, c, d), CrossRatioTriple::new(int(0), int(1), int(0)));
    let g = grid(&[2, 2]);
    for x in g.vertices() {
        for y in g.vertices() {
            for z in g.vertices() {
                assert_eq!(g.cross_ratio(x, y, z, z), int(0));
            }
            assert_eq!(g.crt(x, y, x, y).entries(), [int(0), g.distance(x, y), int(0)]);
        }
    }
}

#[test]
fn cross_ratio_matches_distance_formula() {
    let g = grid(&[2, 1, 1]);
    for x in g.vertices().step_by(2) {
        for y in g.vertices() {
            for z in g.vertices().step_by(3) {
                for w in g.vertices() {
                    assert_eq!(int(2) * g.cross_ratio(x, y, z, w), g.distance_cross_ratio(x, y, z, w));
                }
            }
        }
    }
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j])) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn branch_point_figure() {
    let f = fig1();
    assert_eq!(permutations().len(), 24);
    for p in permutations() {
        let l = f.left_points;
        assert_eq!(f.left.cross_ratio(l[p[0]], l[p[1]], l[p[2]], l[p[3]]), int(0));
        let r = f.right_points;
        assert_eq!(f.right.crt(r[p[0]], r[p[1]], r[p[2]], r[p[3]]).entries(), [int(0); 3]);
    }
    let [x, y, z, z2] = f.left_points;
    assert_eq!(f.left.median(x, y, z), f.left.median(x, y, z2));
    assert!(f.left.is_opposite(x, y, z).unwrap().opposite);
    let [x, y, z, z2] = f.right_points;
    assert_ne!(f.right.median(x, y, z), f.right.median(x, y, z2));
    assert!(!f.right.is_opposite(x, y, z).unwrap().opposite);
}

#[test]
fn opposition_by_example() {
    let p = path(5);
    for z in p.vertices() {
        assert!(p.is_opposite(v(&p, "0"), v(&p, "5"), z).unwrap().opposite);
    }
    let s = square();
    let r = s.is_opposite(v(&s, "00"), v(&s, "11"), v(&s, "10")).unwrap();
    assert!(!r.opposite);
    assert_eq!(r.median, v(&s, "10"));
    // A non-opposite triple always has a witness with a strictly smallest
    // first entry.
    let (_, t) = s.non_opposite_witness(v(&s, "00"), v(&s, "11"), v(&s, "10")).unwrap();
    assert!(t.a < t.b.min(t.c));
    assert!(p.non_opposite_witness(v(&p, "0"), v(&p, "5"), v(&p, "2")).is_none());
}

#[test]
fn cut_points_by_example() {
    let p = path(5);
    assert_eq!(p.cut_points(v(&p, "0"), v(&p, "5")).unwrap(), vs(&p, &["0", "1", "2", "3", "4", "5"]));
    let s = square();
    assert_eq!(s.cut_points(v(&s, "00"), v(&s, "11")).unwrap(), vs(&s, &["00", "11"]));
    let g = grid(&[2, 1]);
    assert_eq!(g.cut_points(v(&g, "0,0"), v(&g, "2,1")).unwrap(), vs(&g, &["0,0", "2,1"]));
    let two = grid(&[1, 1]).product(&path(0)).unwrap();
    assert_eq!(two.num_vertices(), 4);
    let g = grid(&[2, 1]);
    assert_eq!(g.cut_points(v(&g, "0,0"), v(&g, "2,0")).unwrap(), vs(&g, &["0,0", "1,0", "2,0"]));
}

#[test]
fn opposite_triples_by_example() {
    let t = star(3, 1);
    let leaves = vs(&t, &["0.1", "1.1", "2.1"]);
    assert_eq!(t.opposite_triples_through(v(&t, "c"), &leaves).unwrap().len(), 3);
    let c = cube3();
    let corners = vs(&c, &["001", "010", "100"]);
    assert!(c.opposite_triples_through(v(&c, "000"), &corners).unwrap().is_empty());
    let p = path(5);
    let found = p.opposite_triples_through(v(&p, "2"), &vs(&p, &["0", "2", "5"])).unwrap();
    assert!(found.contains(&(v(&p, "0"), v(&p, "5"), v(&p, "2"))));
}

#[test]
fn mobius_correspondences() {
    let g = grid(&[2, 1]);
    let id: Vec<_> = g.vertices().map(|x| (x, x)).collect();
    assert!(mobius_check(&g, &g, &id).unwrap().passed());
    let (h, phi) = relabeled(&g, 3);
    let iso: Vec<_> = g.vertices().map(|x| (x, phi[x])).collect();
    assert!(mobius_check(&g, &h, &iso).unwrap().passed());
    let p = path(3);
    let swap: Vec<_> =
        [("0", "0"), ("1", "2"), ("2", "1"), ("3", "3")].iter().map(|(a, b)| (v(&p, a), v(&p, b))).collect();
    let r = mobius_check(&p, &p, &swap).unwrap();
    assert!(!r.passed());
}
