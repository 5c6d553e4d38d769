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

//! Automorphisms, inversions, translation lengths and contraction.

mod common;

use std::collections::BTreeMap;

use common::{square, v};
use cubecrux::actions::{
    cr_from_ell_check, inversion_report, min_set, neatly_contracting_witness, tau_and_reduced, translation_length,
    Automorphism, BallChart,
};
use cubecrux::chart::ComplexChart;
use cubecrux::error::Error;
use cubecrux::generators::{grid, grid_vertex, integer_ball, path, racg_ball, RacgSpec};
use cubecrux::weight::{int, Weight};

fn rotation(c: &ComplexChart) -> Automorphism {
    let map = ["00", "10", "11", "01"];
    let mut m = vec![None; 4];
    for i in 0..4 {
        m[v(c, map[i])] = Some(v(c, map[(i + 1) % 4]));
    }
    Automorphism::new(c, m).unwrap()
}

fn tree(radius: usize) -> BallChart {
    racg_ball(&RacgSpec::lettered(3, &[], radius)).unwrap()
}

#[test]
fn automorphism_validation() {
    let s = square();
    let r = rotation(&s);
    assert!(r.is_total());
    let table: BTreeMap<String, Weight> = [("a".to_string(), int(1)), ("b".to_string(), int(2))].into();
    let rect = s.reweight(&table).unwrap();
    let map = rotation(&s).vertex_map().to_vec();
    assert!(matches!(Automorphism::new(&rect, map), Err(Error::WeightMismatch { .. })));
    let p = path(3);
    let swap = vec![Some(0), Some(2), Some(1), Some(3)];
    assert!(matches!(Automorphism::new(&p, swap), Err(Error::NotAdjacencyPreserving { .. })));
}

#[test]
fn inversions_of_shift_and_reflection() {
    let ball = integer_ball(5);
    let shift = ball.generator("s").unwrap();
    let rep = inversion_report(&ball.chart, shift, 2).unwrap();
    assert!(rep.stably_without_inversions() && rep.non_transverse());
    let refl = ball.generator("r").unwrap();
    let rep = inversion_report(&ball.chart, refl, 1).unwrap();
    assert_eq!(rep.inversions, vec![(1, ball.chart.find_wall("h1").unwrap())]);
    let (sub, subdivision) = ball.subdivided().unwrap();
    let lifted = ball.lift(&subdivision, refl).unwrap();
    assert!(inversion_report(&sub.chart, &lifted, 2).unwrap().stably_without_inversions());
    assert_eq!(translation_length(&ball, refl).unwrap().value, int(0));
}

#[test]
fn shift_length_and_min_set() {
    let ball = integer_ball(10);
    let shift = ball.generator("s").unwrap();
    let cert = translation_length(&ball, shift).unwrap();
    assert_eq!(cert.value, int(1));
    let m = min_set(&ball, shift, &cert).unwrap();
    assert_eq!(m.vertices, shift.domain());
}

#[test]
fn tree_length_matches_exhaustive_minimum() {
    let ball = tree(12);
    let g = ball.word(&["a", "b"]).unwrap();
    let cert = translation_length(&ball, &g).unwrap();
    let brute = g.domain().into_iter().filter_map(|x| g.displacement(&ball.chart, x)).min().unwrap();
    assert_eq!((cert.value, brute), (int(2), int(2)));
    let m = min_set(&ball, &g, &cert).unwrap();
    // The axis of ab is the bi-infinite word (ab)^n, (ab)^n a.
    assert!(m.vertices.iter().all(|&x| {
        let n = ball.chart.vertex_name(x);
        n == "1" || n.trim_start_matches('a').trim_start_matches('b').is_empty() || n.chars().all(|c| c != 'c')
    }));
    assert!(m.vertices.iter().all(|&x| !ball.chart.vertex_name(x).contains('c')));
    assert!(m.convex_within_audit);
}

#[test]
fn rotation_is_elliptic() {
    let s = square();
    let ball = BallChart {
        chart: s.clone(),
        basepoint: 0,
        radius: int(2),
        dimension: 2,
        generators: vec![("r".into(), rotation(&s))],
    };
    let r = ball.generator("r").unwrap();
    assert!((0..4).all(|x| r.apply(x) != Some(x)));
    let cert = translation_length(&ball, r).unwrap();
    assert_eq!(cert.value, int(0));
    let (sub, subdivision) = ball.subdivided().unwrap();
    let lifted = ball.lift(&subdivision, r).unwrap();
    let fixed: Vec<_> = sub.chart.vertices().filter(|&x| lifted.apply(x) == Some(x)).collect();
    assert_eq!(fixed.len(), 1);
    assert_eq!(sub.chart.dimension(), 2);
    assert_eq!(tau_and_reduced(&ball, &["r"], &[]).unwrap_err(), Error::FixedPointAction);
}

#[test]
fn tau_of_a_shift_is_projective() {
    let ball = integer_ball(8);
    let words = vec![vec!["s"], vec!["s", "s"], vec!["s", "s", "s"]];
    let r = tau_and_reduced(&ball, &["s"], &words).unwrap();
    assert_eq!(r.tau, int(1));
    assert_eq!(r.reduced.iter().map(|x| x.2).collect::<Vec<_>>(), vec![int(1), int(2), int(3)]);
    let heavy = ball.scaled(int(3)).unwrap();
    let r3 = tau_and_reduced(&heavy, &["s"], &words).unwrap();
    assert_eq!(r3.tau, int(3));
    assert_eq!(r3.reduced.iter().map(|x| x.2).collect::<Vec<_>>(), vec![int(1), int(2), int(3)]);
}

#[test]
fn neat_witnesses() {
    let ball = tree(6);
    assert!(neatly_contracting_witness(&ball, &ball.word(&["a", "b"]).unwrap()).unwrap().is_some());
    let line = integer_ball(6);
    assert!(neatly_contracting_witness(&line, line.generator("s").unwrap()).unwrap().is_some());
    let dims = [6, 6];
    let chart = grid(&dims);
    let mut map = vec![None; chart.num_vertices()];
    for i in 0..6 {
        for j in 0..6 {
            map[grid_vertex(&dims, &[i, j])] = Some(grid_vertex(&dims, &[i + 1, j + 1]));
        }
    }
    let diag = Automorphism::new(&chart, map).unwrap();
    let plane = BallChart {
        basepoint: grid_vertex(&dims, &[3, 3]),
        chart,
        radius: int(6),
        dimension: 2,
        generators: vec![("d".into(), diag.clone())],
    };
    assert_eq!(neatly_contracting_witness(&plane, &diag).unwrap(), None);
}

#[test]
fn cross_ratio_from_lengths_on_the_tree() {
    let ball = tree(12);
    let w = |s: &[&str]| ball.word(s).unwrap();
    let cases: [(&[&str], &[&str], i64); 3] =
        [(&["a", "b"], &["c", "b"], 0), (&["a", "b"], &["c", "a"], 2), (&["a", "b"], &["c", "a", "b", "c"], -2)];
    for (g, h, s) in cases {
        let r = cr_from_ell_check(&ball, &w(g), &w(h), 4).unwrap();
        assert_eq!(r.stable_length, int(s), "{g:?} {h:?}");
        assert_eq!(r.stable_cross_ratio, int(-s / 2));
        assert!(r.agree && r.margin_met);
    }
}
