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

//! Isometry extension against the exhaustive oracle.

mod common;

use common::{square, v};
use cubecrux::error::Error;
use cubecrux::extension::{
    brute_force_extensions, extend_full, extend_one_step, h_sets, push_halfspace, thin_witness_complete,
    verify_isomorphism, witness_complete, PartialIsometry,
};
use cubecrux::generators::{grid, path, random_median, relabeled, star};

#[test]
fn empty_domain_yields_every_isomorphism() {
    let s = square();
    let none = PartialIsometry::new(&s, &s, &[]).unwrap();
    assert_eq!(brute_force_extensions(&none, 16).unwrap().len(), 8);
    let t = star(3, 1);
    let none = PartialIsometry::new(&t, &t, &[]).unwrap();
    assert_eq!(brute_force_extensions(&none, 16).unwrap().len(), 6);
}

#[test]
fn pushed_walls_agree_with_the_known_rotation() {
    let g = grid(&[2, 2]);
    let rot = |name: &str| {
        let p: Vec<usize> = name.split(',').map(|x| x.parse().unwrap()).collect();
        v(&g, &format!("{},{}", p[1], 2 - p[0]))
    };
    let centre = v(&g, "1,1");
    let pairs: Vec<_> = g.vertices().filter(|&x| x != centre).map(|x| (x, rot(g.vertex_name(x)))).collect();
    let partial = PartialIsometry::new(&g, &g, &pairs).unwrap();
    for (x, y) in &pairs {
        for h in h_sets(&partial, *x).unwrap() {
            let pushed = push_halfspace(&partial, *x, h.wall).unwrap();
            // The wall across the edge (x, x') goes to the wall across (Φx, Φx').
            let across = g.across(*x, h.wall).unwrap();
            let image = g.neighbors(*y).iter().find(|(n, _)| *n == rot(g.vertex_name(across))).unwrap().1;
            assert_eq!(pushed.wall, image);
        }
    }
    let step = extend_one_step(&partial).unwrap();
    assert!(step.next.is_total());
    assert_eq!(step.next.get(centre), Some(centre));
}

#[test]
fn thinned_restrictions_extend_uniquely() {
    let mut charts = vec![grid(&[3, 2]), star(4, 2), path(6)];
    for seed in 0..4 {
        charts.push(random_median(8, 4, seed).unwrap());
    }
    for (i, x) in charts.iter().enumerate() {
        let (y, phi) = relabeled(x, 100 + i as u64);
        let a = thin_witness_complete(x, i as u64);
        assert!(witness_complete(x, &a));
        let partial = PartialIsometry::restrict(x, &y, &phi, &a).unwrap();
        assert_eq!(extend_full(&partial).unwrap(), phi, "chart {i}");
        assert_eq!(brute_force_extensions(&partial, 64).unwrap(), vec![phi.clone()], "chart {i}");
        verify_isomorphism(x, &y, &phi).unwrap();
    }
}

#[test]
fn extension_is_equivariant_under_relabelling() {
    let x = grid(&[2, 1]);
    let (y, phi) = relabeled(&x, 5);
    let a = thin_witness_complete(&x, 1);
    let id = PartialIsometry::restrict(&x, &x, &x.vertices().collect::<Vec<_>>(), &a).unwrap();
    let ext_id = extend_full(&id).unwrap();
    let moved = PartialIsometry::restrict(&x, &y, &phi, &a).unwrap();
    let ext = extend_full(&moved).unwrap();
    assert!(x.vertices().all(|p| ext[p] == phi[ext_id[p]]));
}

#[test]
fn no_isomorphism_means_a_structured_failure() {
    let (p, t) = (path(2), star(3, 1));
    let pairs = [("0", "0.1"), ("1", "c"), ("2", "1.1")];
    let partial = PartialIsometry::from_names(&p, &t, &pairs).unwrap();
    let err = extend_full(&partial).unwrap_err();
    assert!(matches!(err, Error::Stalled { .. } | Error::InconsistentExtension { .. }), "{err:?}");
    assert!(brute_force_extensions(&partial, 16).unwrap().is_empty());
}
