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

//! Neatly contracting automorphisms and the comparison between length
//! functions and cross ratios of their fixed points.

use num_traits::Zero;

use crate::actions::automorphism::{Automorphism, BallChart};
use crate::actions::length::translation_length;
use crate::chart::{Halfspace, Sign, VertexId, WallId};
use crate::error::{Error, Result};
use crate::pocset::Relation;
use crate::weight::{ceil_to_i64, int, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeatWitness {
    pub h1: Halfspace,
    pub h2: Halfspace,
    /// `gⁿ·v` for `n = 0, 1, ...` with `v` on the carrier of `h1`.
    pub forward: Vec<VertexId>,
    /// `g⁻ⁿ·v` for `n = 0, 1, ...`.
    pub backward: Vec<VertexId>,
}

impl BallChart {
    /// Strong separation of disjoint halfspaces, audited: the gate between
    /// the two carriers must have its whole neighbourhood inside the ball.
    /// `None` when that cannot be guaranteed.
    pub fn audited_strongly_separated(&self, h1: Halfspace, h2: Halfspace) -> Result<Option<bool>> {
        let chart = &self.chart;
        if chart.strongly_separated(h1, h2)? {
            let carrier =
                |w: WallId| -> Vec<VertexId> { chart.vertices().filter(|&v| chart.across(v, w).is_some()).collect() };
            let c1 = chart.hull(&carrier(h1.wall))?;
            let b = chart.carrier_edge(h2.wall).0;
            let p = chart.gate(&c1, b);
            let max_weight = chart.walls().iter().map(|w| w.weight).max().unwrap_or_else(Weight::zero);
            if chart.distance(self.basepoint, p) + max_weight > self.radius {
                return Ok(None);
            }
            Ok(Some(true))
        } else {
            Ok(Some(false))
        }
    }
}

/// Halfspaces `𝔥1 ⊇ 𝔥2 ⊇ g𝔥1` with `(𝔥2, 𝔥1*)` and `(g𝔥1, 𝔥2*)` strongly
/// separated, scanning walls by distance from the basepoint.
pub fn neatly_contracting_witness(ball: &BallChart, g: &Automorphism) -> Result<Option<NeatWitness>> {
    let chart = &ball.chart;
    let o = ball.basepoint;
    let mut walls: Vec<(Weight, WallId)> = chart
        .wall_ids()
        .filter(|&w| g.wall_image(w).is_some())
        .map(|w| {
            let (a, b) = chart.carrier_edge(w);
            (chart.distance(o, a).min(chart.distance(o, b)), w)
        })
        .collect();
    walls.sort_unstable();
    let mut inconclusive = false;
    for &(_, w1) in &walls {
        for s in [Sign::Minus, Sign::Plus] {
            let h1 = Halfspace::new(w1, s);
            let gh1 = g.apply_halfspace(chart, h1).expect("image known");
            if gh1.wall == w1 || chart.relation(gh1, h1)? != Relation::Subset {
                continue;
            }
            let a = inside_endpoint(ball, h1);
            let b = inside_endpoint(ball, gh1);
            // Containments are not strict: h2 may be h1 or g·h1 itself.
            let gap = chart.separating(a, b);
            for w2 in gap.iter().chain([w1, gh1.wall]) {
                let h2 = chart.side_of(b, w2);
                if !chart.is_subset(h2, h1) || !chart.is_subset(gh1, h2) {
                    continue;
                }
                match (
                    ball.audited_strongly_separated(h2, h1.complement())?,
                    ball.audited_strongly_separated(gh1, h2.complement())?,
                ) {
                    (Some(true), Some(true)) => {
                        let orbit = |f: &Automorphism| {
                            let mut out = vec![a];
                            while let Some(n) = f.apply(*out.last().expect("nonempty")) {
                                if out.len() > chart.num_vertices() {
                                    break;
                                }
                                out.push(n);
                            }
                            out
                        };
                        let inverse = g.inverse(chart)?;
                        return Ok(Some(NeatWitness { h1, h2, forward: orbit(g), backward: orbit(&inverse) }));
                    }
                    (None, _) | (_, None) => inconclusive = true,
                    _ => {}
                }
            }
        }
    }
    if inconclusive {
        return Err(Error::InsufficientRadius("strong separation could not be audited".into()));
    }
    Ok(None)
}

/// Endpoint inside `h` of an edge dual to its hyperplane.
fn inside_endpoint(ball: &BallChart, h: Halfspace) -> VertexId {
    let (a, b) = ball.chart.carrier_edge(h.wall);
    if ball.chart.in_halfspace(a, h) {
        a
    } else {
        b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrFromEllReport {
    /// `sₙ = ℓ(gⁿ) + ℓ(hⁿ) − ℓ(gⁿhⁿ)` for `n = 1, 2, ...`.
    pub lengths: Vec<Weight>,
    /// `cr(g⁻ᵏu, h⁻ᵏw, gᵏu, hᵏw)` for `k = 1, 2, ...`.
    pub cross_ratios: Vec<Weight>,
    pub stable_length: Weight,
    pub stable_cross_ratio: Weight,
    /// `⌈D·d(o, go)⌉`, and whether both sequences are constant over that
    /// many final terms.
    pub margin: usize,
    pub margin_met: bool,
    /// `s = −2·cr`, the relation forced by the two conventions in use.
    pub agree: bool,
    /// `s = cr` read literally.
    pub literal_agree: bool,
}

fn stabilized(seq: &[Weight], what: &str) -> Result<Weight> {
    match seq {
        [.., a, b] if a == b => Ok(*b),
        _ => Err(Error::NoStabilization(format!("{what}: {seq:?}"))),
    }
}

fn stable_over(seq: &[Weight], margin: usize) -> bool {
    seq.len() >= margin.max(2) && seq[seq.len() - margin.max(2)..].windows(2).all(|w| w[0] == w[1])
}

/// Computes both sequences and compares their stable values, with
/// everything certified inside `ball`.
pub fn cr_from_ell_check(
    ball: &BallChart,
    g: &Automorphism,
    h: &Automorphism,
    n_max: usize,
) -> Result<CrFromEllReport> {
    let chart = &ball.chart;
    let (gi, hi) = (g.inverse(chart)?, h.inverse(chart)?);
    let orbit = |f: &Automorphism, v: VertexId, k: i64| (0..k).try_fold(v, |x, _| f.apply(x));
    cr_from_ell_check_with(
        ball,
        g,
        h,
        n_max,
        |n| {
            let gn = g.power(chart, n)?;
            let hn = h.power(chart, n)?;
            let gnhn = gn.compose(chart, &hn)?;
            Ok(translation_length(ball, &gn)?.value + translation_length(ball, &hn)?.value
                - translation_length(ball, &gnhn)?.value)
        },
        |k, u, w| {
            let points = (orbit(&gi, u, k), orbit(&hi, w, k), orbit(g, u, k), orbit(h, w, k));
            match points {
                (Some(a), Some(b), Some(c), Some(d)) => Ok(chart.cross_ratio(a, b, c, d)),
                _ => Err(Error::InsufficientRadius(format!("orbit step {k} leaves the ball"))),
            }
        },
    )
}

/// As [`cr_from_ell_check`], with `sₙ` and the deep cross ratio
/// `cᵏ(u, w)` supplied by the caller, so that both may be computed on
/// charts larger than the ball. `u` and `w` are the axis points nearest
/// the basepoint; the neat witnesses are still searched inside `ball`.
pub fn cr_from_ell_check_with(
    ball: &BallChart,
    g: &Automorphism,
    h: &Automorphism,
    n_max: usize,
    mut length_combination: impl FnMut(i64) -> Result<Weight>,
    mut deep_cross_ratio: impl FnMut(i64, VertexId, VertexId) -> Result<Weight>,
) -> Result<CrFromEllReport> {
    let chart = &ball.chart;
    if neatly_contracting_witness(ball, g)?.is_none() || neatly_contracting_witness(ball, h)?.is_none() {
        return Err(Error::NotNeatlyContracting);
    }
    let tolerate = |r: Result<Weight>| -> Result<Option<Weight>> {
        match r {
            Ok(x) => Ok(Some(x)),
            Err(Error::InsufficientRadius(_)) | Err(Error::InsufficientDomain { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let mut lengths = Vec::new();
    for n in 1..=n_max as i64 {
        match tolerate(length_combination(n))? {
            Some(s) => lengths.push(s),
            None => break,
        }
    }

    let axis_point = |f: &Automorphism| -> Result<VertexId> {
        let ell = translation_length(ball, f)?.value;
        f.domain()
            .into_iter()
            .filter(|&v| f.displacement(chart, v) == Some(ell))
            .min_by_key(|&v| chart.distance(ball.basepoint, v))
            .ok_or_else(|| Error::InsufficientRadius("no audited vertex on the axis".into()))
    };
    let u = axis_point(g)?;
    let w = axis_point(h)?;
    let mut cross_ratios = Vec::new();
    for k in 1..=n_max as i64 {
        match tolerate(deep_cross_ratio(k, u, w))? {
            Some(c) => cross_ratios.push(c),
            None => break,
        }
    }
    let stable_length = stabilized(&lengths, "length combination")?;
    let stable_cross_ratio = stabilized(&cross_ratios, "deep cross ratio")?;
    let go = g.apply(ball.basepoint).ok_or_else(|| Error::InsufficientRadius("basepoint outside domain".into()))?;
    let margin = ceil_to_i64(&(int(ball.dimension() as i64) * chart.distance(ball.basepoint, go))).max(0) as usize;
    let margin_met = stable_over(&lengths, margin) && stable_over(&cross_ratios, margin);
    let agree = stable_length == -int(2) * stable_cross_ratio;
    let literal_agree = stable_length == stable_cross_ratio;
    Ok(CrFromEllReport {
        lengths,
        cross_ratios,
        stable_length,
        stable_cross_ratio,
        margin,
        margin_met,
        agree,
        literal_agree,
    })
}
