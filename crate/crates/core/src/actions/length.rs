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

//! Inversions, translation lengths with certificates, minimal sets and
//! reduced length functions.

use num_traits::{One, Zero};

use crate::actions::automorphism::{Automorphism, BallChart};
use crate::chart::{ComplexChart, Halfspace, Sign, VertexId, WallId};
use crate::construct::Subdivision;
use crate::error::{Error, Result};
use crate::pocset::Relation;
use crate::weight::{int, lattice_step, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionReport {
    pub max_power: usize,
    /// `(k, w)`: `g^k` preserves `w` and swaps its sides.
    pub inversions: Vec<(usize, WallId)>,
    /// `(w, gw)` transverse.
    pub transverse_pairs: Vec<(WallId, WallId)>,
    /// Walls whose image under `g` was determined.
    pub audited_walls: usize,
}

impl InversionReport {
    pub fn stably_without_inversions(&self) -> bool {
        self.inversions.is_empty()
    }

    pub fn non_transverse(&self) -> bool {
        self.transverse_pairs.is_empty()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// Minimum displacement, with a ball around the minimizer inside the
    /// audited domain.
    MinDisplacement,
    /// `n·ℓ ≤ d(o, gⁿo) ≤ n·ℓ + D·d(o, go)` pins a single lattice value.
    Sandwich,
    /// Weighted count of skewered walls separating `v` from `gv`.
    SkewerCount,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::MinDisplacement => "min-displacement",
            Method::Sandwich => "sandwich",
            Method::SkewerCount => "skewer-count",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Computed on the cubical subdivision with halved weights.
    Subdivided,
    /// Computed for `g^k`, then divided by `k`.
    Power(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthCertificate {
    pub value: Weight,
    pub method: Method,
    /// A vertex of the audited chart, by name, with `d(v, gv) = ℓ` when one
    /// was found.
    pub witness: Option<String>,
    pub transforms: Vec<Transform>,
    pub audited_vertices: usize,
    pub audit: Vec<String>,
}

impl BallChart {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Ball in the subdivision with unchanged weights, so distances between
    /// old vertices double. The radius shrinks to stay inside the chart.
    pub fn subdivided(&self) -> Result<(BallChart, Subdivision)> {
        let sub = self.chart.subdivide()?;
        let max_weight = self.chart.walls().iter().map(|w| w.weight).max().unwrap_or_else(Weight::one);
        let radius = self.radius * int(2) - max_weight * int(self.dimension() as i64);
        let mut generators = Vec::with_capacity(self.generators.len());
        for (name, g) in &self.generators {
            generators.push((name.clone(), Automorphism::new(&sub.chart, sub.lift(&self.chart, g.vertex_map()))?));
        }
        let ball = BallChart {
            chart: sub.chart.clone(),
            basepoint: sub.injection[self.basepoint],
            radius,
            dimension: self.dimension,
            generators,
        };
        Ok((ball, sub))
    }

    pub fn lift(&self, sub: &Subdivision, g: &Automorphism) -> Result<Automorphism> {
        Automorphism::new(&sub.chart, sub.lift(&self.chart, g.vertex_map()))
    }

    /// Same ball with every weight multiplied by `lambda`.
    pub fn scaled(&self, lambda: Weight) -> Result<BallChart> {
        let chart = self.chart.scaled(lambda)?;
        let mut generators = Vec::with_capacity(self.generators.len());
        for (name, g) in &self.generators {
            generators.push((name.clone(), Automorphism::new(&chart, g.vertex_map().to_vec())?));
        }
        Ok(BallChart {
            chart,
            basepoint: self.basepoint,
            radius: self.radius * lambda,
            dimension: self.dimension,
            generators,
        })
    }

    /// The product ball, with generators `s×t` acting diagonally.
    pub fn product(&self, other: &BallChart) -> Result<BallChart> {
        let chart = self.chart.product(&other.chart)?;
        let mut generators = Vec::new();
        for (s, g) in &self.generators {
            for (t, h) in &other.generators {
                generators.push((format!("{s}x{t}"), product_action(&self.chart, &other.chart, &chart, g, h)?));
            }
        }
        let basepoint = self.chart.product_vertex(&other.chart, self.basepoint, other.basepoint);
        Ok(BallChart {
            chart,
            basepoint,
            radius: self.radius.min(other.radius),
            dimension: self.dimension + other.dimension,
            generators,
        })
    }
}

/// `(a, b) ↦ (ga, hb)` on the product chart.
pub fn product_action(
    a: &ComplexChart,
    b: &ComplexChart,
    product: &ComplexChart,
    g: &Automorphism,
    h: &Automorphism,
) -> Result<Automorphism> {
    let mut map = vec![None; product.num_vertices()];
    for x in a.vertices() {
        for y in b.vertices() {
            if let (Some(gx), Some(hy)) = (g.apply(x), h.apply(y)) {
                map[a.product_vertex(b, x, y)] = Some(a.product_vertex(b, gx, hy));
            }
        }
    }
    Automorphism::new(product, map)
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product::<u64>().max(1)
}

pub fn inversion_report(chart: &ComplexChart, g: &Automorphism, max_power: usize) -> Result<InversionReport> {
    let mut inversions = Vec::new();
    let mut power = g.clone();
    for k in 1..=max_power.max(1) {
        if k > 1 {
            power = g.compose(chart, &power)?;
        }
        if power.domain().is_empty() {
            return Err(Error::InsufficientDomain { power: k });
        }
        for w in chart.wall_ids() {
            let h = Halfspace::new(w, Sign::Plus);
            if let Some(img) = power.apply_halfspace(chart, h) {
                if img == h.complement() {
                    inversions.push((k, w));
                }
            }
        }
    }
    let mut transverse_pairs = Vec::new();
    let mut audited_walls = 0;
    for w in chart.wall_ids() {
        if let Some(gw) = g.wall_image(w) {
            audited_walls += 1;
            if gw != w && chart.transverse(w, gw) {
                transverse_pairs.push((w, gw));
            }
        }
    }
    Ok(InversionReport { max_power, inversions, transverse_pairs, audited_walls })
}

/// Certified `ℓ(g)` on a ball chart.
pub fn translation_length(ball: &BallChart, g: &Automorphism) -> Result<LengthCertificate> {
    let report = inversion_report(&ball.chart, g, 2)?;
    if !report.stably_without_inversions() {
        let (sub_ball, sub) = ball.subdivided()?;
        let half = Weight::new(1, 2);
        let sub_ball = sub_ball.scaled(half)?;
        let lifted = Automorphism::new(&sub_ball.chart, sub.lift(&ball.chart, g.vertex_map()))?;
        if !inversion_report(&sub_ball.chart, &lifted, 2)?.stably_without_inversions() {
            return Err(Error::InversionUnresolved);
        }
        let mut cert = translation_length(&sub_ball, &lifted)?;
        cert.transforms.insert(0, Transform::Subdivided);
        return Ok(cert);
    }
    if !report.non_transverse() {
        let k = factorial(ball.dimension());
        let gk = g.power(&ball.chart, k as i64)?;
        if !inversion_report(&ball.chart, &gk, 1)?.non_transverse() {
            return Err(Error::Internal(format!("g^{k} still moves a wall to a transverse one")));
        }
        let mut cert = certify(ball, &gk)?;
        cert.value /= int(k as i64);
        cert.witness = None;
        cert.transforms.insert(0, Transform::Power(k));
        return Ok(cert);
    }
    certify(ball, g)
}

/// Runs the three methods on a `g` acting stably without inversions and
/// non-transversely.
fn certify(ball: &BallChart, g: &Automorphism) -> Result<LengthCertificate> {
    let chart = &ball.chart;
    let dim = int(ball.dimension() as i64);
    let domain = g.domain();
    if domain.is_empty() {
        return Err(Error::InsufficientRadius("empty domain".into()));
    }
    let mut audit = Vec::new();
    let displacement: Vec<(VertexId, Weight)> =
        domain.iter().map(|&v| (v, g.displacement(chart, v).expect("in domain"))).collect();
    let delta = displacement.iter().map(|&(_, d)| d).min().expect("nonempty");
    let with_witness = |value: Weight, method: Method, audit: Vec<String>| {
        let witness = displacement
            .iter()
            .filter(|&&(_, d)| d == value)
            .min_by_key(|&&(v, _)| chart.distance(ball.basepoint, v))
            .map(|&(v, _)| chart.vertex_name(v).to_string());
        LengthCertificate { value, method, witness, transforms: Vec::new(), audited_vertices: domain.len(), audit }
    };

    // Minimum displacement with a large enough audited neighbourhood.
    let reach = dim * delta / int(2);
    let mut minimizers: Vec<(Weight, VertexId)> = displacement
        .iter()
        .filter(|&&(_, d)| d == delta)
        .map(|&(v, _)| (chart.distance(ball.basepoint, v), v))
        .collect();
    minimizers.sort_unstable();
    for &(depth, v0) in minimizers.iter().take(8) {
        if depth + reach > ball.radius {
            break;
        }
        let covered = chart.vertices().all(|u| chart.distance(v0, u) > reach || g.apply(u).is_some());
        if covered {
            audit.push(format!(
                "min displacement {delta} at {} (depth {depth}); ball of radius {reach} audited",
                chart.vertex_name(v0)
            ));
            let mut cert = with_witness(delta, Method::MinDisplacement, audit);
            cert.witness = Some(chart.vertex_name(v0).to_string());
            return Ok(cert);
        }
    }
    audit.push(format!("min displacement {delta} not certified within radius {}", ball.radius));

    // Sandwich bounds along the orbit of the basepoint.
    let o = ball.basepoint;
    let step = lattice_step(chart.walls().iter().map(|w| &w.weight));
    let mut orbit = vec![o];
    while let Some(next) = g.apply(*orbit.last().expect("nonempty")) {
        orbit.push(next);
        if orbit.len() > chart.num_vertices() {
            break;
        }
    }
    if orbit.len() >= 2 {
        let d1 = chart.distance(o, orbit[1]);
        for n in (1..orbit.len()).rev() {
            let dn = chart.distance(o, orbit[n]);
            let nn = int(n as i64);
            let hi = dn / nn;
            let lo = ((dn - dim * d1) / nn).max(Weight::zero());
            let k_lo = (lo / step).ceil().to_integer();
            let k_hi = (hi / step).floor().to_integer();
            if k_lo == k_hi {
                audit.push(format!("sandwich at n={n}: [{lo}, {hi}] on lattice {step}"));
                return Ok(with_witness(step * int(k_lo), Method::Sandwich, audit));
            }
        }
        audit.push(format!("sandwich did not isolate a value (orbit length {})", orbit.len() - 1));
    }

    // Skewered walls between v and gv.
    let inverse = g.inverse(chart)?;
    let mut candidates: Vec<(Weight, VertexId)> = domain.iter().map(|&v| (chart.distance(o, v), v)).collect();
    candidates.sort_unstable();
    'candidates: for &(_, v) in candidates.iter().take(64) {
        let gv = g.apply(v).expect("in domain");
        let mut value = Weight::zero();
        for w in chart.separating(v, gv).iter() {
            match skewers(chart, g, &inverse, w) {
                Some(true) => value += chart.weight(w),
                Some(false) => {}
                None => continue 'candidates,
            }
        }
        audit.push(format!("skewered walls between {} and its image", chart.vertex_name(v)));
        return Ok(with_witness(value, Method::SkewerCount, audit));
    }
    Err(Error::InsufficientRadius(audit.join("; ")))
}

/// Whether `g·𝔥 ⊊ 𝔥` for a side `𝔥` of `w`; `None` if neither `gw` nor
/// `g⁻¹w` lies in the chart.
fn skewers(chart: &ComplexChart, g: &Automorphism, inverse: &Automorphism, w: WallId) -> Option<bool> {
    let via = if g.wall_image(w).is_some() { g } else { inverse };
    via.wall_image(w)?;
    Some([Sign::Minus, Sign::Plus].iter().any(|&s| {
        let h = Halfspace::new(w, s);
        let gh = via.apply_halfspace(chart, h).expect("image known");
        gh.wall != w && chart.relation(gh, h) == Ok(Relation::Subset)
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSet {
    pub vertices: Vec<VertexId>,
    /// Hull of the set meets the audited domain only inside the set.
    pub convex_within_audit: bool,
}

/// Audited vertices of least displacement `ℓ`.
pub fn min_set(ball: &BallChart, g: &Automorphism, cert: &LengthCertificate) -> Result<MinSet> {
    if !cert.transforms.is_empty() {
        return Err(Error::InsufficientRadius("certificate was computed on a transformed chart".into()));
    }
    let chart = &ball.chart;
    let vertices: Vec<VertexId> =
        g.domain().into_iter().filter(|&v| g.displacement(chart, v) == Some(cert.value)).collect();
    if vertices.is_empty() {
        return Err(Error::InsufficientRadius("no audited vertex attains the length".into()));
    }
    let hull = chart.hull(&vertices)?;
    let convex_within_audit = hull.vertices.iter().all(|&v| g.apply(v).is_none() || vertices.binary_search(&v).is_ok());
    Ok(MinSet { vertices, convex_within_audit })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauReport {
    pub tau: Weight,
    /// Subdivision vertex attaining `τ`.
    pub witness: String,
    /// `(word, ℓ, ℓ/τ, ℓ ≤ τ·|word|)`
    pub reduced: Vec<(String, Weight, Weight, bool)>,
}

/// `τ = min_x max_s d(x, sx)` over subdivision vertices, and the reduced
/// lengths `ℓ/τ` of the given words.
pub fn tau_and_reduced(ball: &BallChart, generators: &[&str], words: &[Vec<&str>]) -> Result<TauReport> {
    if generators.is_empty() {
        return Err(Error::EmptySet);
    }
    let (sub_ball, _) = ball.subdivided()?;
    let sub_ball = sub_ball.scaled(Weight::new(1, 2))?;
    let gens: Vec<&Automorphism> = generators.iter().map(|n| sub_ball.generator(n)).collect::<Result<_>>()?;
    let mut best: Option<(Weight, VertexId)> = None;
    for x in sub_ball.chart.vertices() {
        let mut worst = Weight::zero();
        let mut defined = true;
        for g in &gens {
            match g.displacement(&sub_ball.chart, x) {
                Some(d) => worst = worst.max(d),
                None => {
                    defined = false;
                    break;
                }
            }
        }
        if defined && best.is_none_or(|(b, _)| worst < b) {
            best = Some((worst, x));
        }
    }
    let (tau, x) = best.ok_or_else(|| Error::InsufficientRadius("no vertex in every generator's domain".into()))?;
    if tau.is_zero() {
        return Err(Error::FixedPointAction);
    }
    let mut reduced = Vec::new();
    for word in words {
        let g = ball.word(word)?;
        let ell = translation_length(ball, &g)?.value;
        let bound = tau * int(word.len() as i64);
        reduced.push((word.concat(), ell, ell / tau, ell <= bound));
    }
    Ok(TauReport { tau, witness: sub_ball.chart.vertex_name(x).to_string(), reduced })
}
