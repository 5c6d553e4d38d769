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

//! The acceptance suites. Each suite returns a report with a pass flag,
//! a count of checks and the first few counterexamples.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::{cr_from_ell_check, tau_and_reduced, translation_length, BallChart, CrFromEllReport};
use crate::chart::{ComplexChart, Halfspace, Sign, VertexId};
use crate::error::{Error, Result};
use crate::extension::{brute_force_extensions, extend_full, thin_witness_complete, PartialIsometry};
use crate::generators::{fig1, grid, path, racg_ball, racg_cr_from_ell, random_median, relabeled, star, RacgSpec};
use crate::median::ConvexSet;
use crate::weight::{format_weight, int, Weight};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub summary: String,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    /// One line: `PASS name (checks, time): summary`.
    pub fn line(&self) -> String {
        format!(
            "{} {} ({} checks, {:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.checks,
            self.elapsed.as_secs_f64(),
            self.summary
        )
    }
}

type Suite = fn(u64) -> Result<Tally>;

const SUITES: [(&str, Suite); 10] = [
    ("cr-axioms", cr_axioms),
    ("basepoint", basepoint),
    ("median-gate", median_gate),
    ("bridge", bridge),
    ("cut-points", cut_points),
    ("fig1", fig1_suite),
    ("length-tree", length_tree),
    ("cr-from-ell", cr_from_ell),
    ("extension", extension),
    ("homogeneity", homogeneity),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs one suite. Domain errors inside a suite count as failures.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let (name, suite) = SUITES.iter().find(|(n, _)| *n == name).ok_or_else(|| Error::UnknownSuite {
        name: name.to_string(),
        available: suite_names().iter().map(|s| s.to_string()).collect(),
    })?;
    let start = Instant::now();
    let tally = suite(seed).unwrap_or_else(|e| {
        let mut t = Tally::default();
        t.fail(format!("error: {e}"));
        t
    });
    Ok(SuiteReport {
        name,
        passed: tally.failures.is_empty() && tally.checks > 0,
        checks: tally.checks,
        summary: tally.notes.join("; "),
        failures: tally.failures,
        elapsed: start.elapsed(),
    })
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    suite_names().into_iter().map(|n| run_suite(n, seed).expect("listed suite")).collect()
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        if self.failures.len() < 8 {
            self.failures.push(what);
        } else if self.failures.len() == 8 {
            self.failures.push("...".into());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// Twenty random median charts on at most twelve walls.
pub fn random_charts(seed: u64, count: usize) -> Vec<ComplexChart> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let walls = rng.gen_range(4..=12);
        let seeds = rng.gen_range(3..=6);
        if let Ok(c) = random_median(walls, seeds, rng.gen()) {
            if c.num_vertices() >= 4 && c.num_vertices() <= 64 {
                out.push(c);
            }
        }
    }
    out
}

/// The chart suite shared by the exhaustive criteria: fixed fixtures, a
/// weighted grid and random charts, all with at most 64 vertices.
pub fn chart_suite(seed: u64) -> Vec<(String, ComplexChart)> {
    let f = fig1();
    let mut out = vec![
        ("path6".to_string(), path(6)),
        ("grid2x2".to_string(), grid(&[2, 2])),
        ("grid3x2".to_string(), grid(&[3, 2])),
        ("cube".to_string(), grid(&[1, 1, 1])),
        ("grid2x2x2".to_string(), grid(&[2, 2, 2])),
        ("star3x2".to_string(), star(3, 2)),
        ("fig1-left".to_string(), f.left),
        ("fig1-right".to_string(), f.right),
        ("pentagon-r2".to_string(), racg_ball(&RacgSpec::cycle(5, 2)).expect("small ball").chart),
    ];
    let weighted = {
        let g = grid(&[2, 1]);
        let table = g.walls().iter().enumerate().map(|(i, w)| (w.id.clone(), Weight::new(i as i64 + 1, 2))).collect();
        g.reweight(&table).expect("positive weights")
    };
    out.push(("grid2x1-weighted".to_string(), weighted));
    for (i, c) in random_charts(seed, 12).into_iter().enumerate() {
        out.push((format!("random{i}"), c));
    }
    out
}

fn pick(rng: &mut ChaCha8Rng, c: &ComplexChart) -> VertexId {
    rng.gen_range(0..c.num_vertices())
}

fn cr_axioms(seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
    let charts = random_charts(seed, 20);
    for (k, c) in charts.iter().enumerate() {
        for _ in 0..1000 {
            let [x, y, z, w, s] = [(); 5].map(|_| pick(&mut rng, c));
            let cr = |a, b, cc, d| c.cross_ratio(a, b, cc, d);
            let v = cr(x, y, z, w);
            let tag = || format!("chart {k} tuple {:?}", [x, y, z, w, s]);
            t.check(v == -cr(y, x, z, w), || format!("antisymmetry fails on {}", tag()));
            t.check(v == cr(z, w, x, y), || format!("pair symmetry fails on {}", tag()));
            t.check(v == cr(x, y, z, s) + cr(x, y, s, w), || format!("cocycle fails on {}", tag()));
            t.check(cr(x, y, z, w) + cr(y, z, x, w) + cr(z, x, y, w) == int(0), || {
                format!("three-term identity fails on {}", tag())
            });
        }
    }
    t.note(format!(
        "antisymmetry, pair symmetry, cocycle and three-term identity on {} charts x 1000 tuples",
        charts.len()
    ));
    Ok(t)
}

fn basepoint(seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
    let suite = chart_suite(seed);
    for (name, c) in &suite {
        for _ in 0..200 {
            let [v, x, y, z, w] = [(); 5].map(|_| pick(&mut rng, c));
            t.check(c.cross_ratio_at(v, x, y, z, w) == c.cross_ratio(x, y, z, w), || {
                format!("{name}: basepoint {} changes cr", c.vertex_name(v))
            });
        }
    }
    t.note(format!("{} charts x 200 (basepoint, tuple) pairs", suite.len()));
    Ok(t)
}

fn distance_table(c: &ComplexChart) -> Vec<Vec<Weight>> {
    c.vertices().map(|a| c.vertices().map(|b| c.distance(a, b)).collect()).collect()
}

fn convex_samples(c: &ComplexChart, rng: &mut ChaCha8Rng) -> Result<Vec<ConvexSet>> {
    let mut sets = Vec::new();
    for w in c.wall_ids() {
        for s in [Sign::Minus, Sign::Plus] {
            sets.push(c.halfspace_set(Halfspace::new(w, s))?);
        }
    }
    for _ in 0..20 {
        let k = rng.gen_range(1..=3);
        let pts: Vec<VertexId> = (0..k).map(|_| pick(rng, c)).collect();
        sets.push(c.hull(&pts)?);
    }
    Ok(sets)
}

#[allow(clippy::needless_range_loop)]
fn median_gate(seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 3);
    let mut triples = 0usize;
    let mut gates = 0usize;
    for (name, c) in chart_suite(seed).iter().filter(|(_, c)| c.num_vertices() <= 64) {
        let d = distance_table(c);
        let n = c.num_vertices();
        for x in 0..n {
            for y in x..n {
                for z in y..n {
                    let between = |a: usize, b: usize, m: usize| d[a][m] + d[m][b] == d[a][b];
                    let found: Vec<usize> =
                        (0..n).filter(|&m| between(x, y, m) && between(y, z, m) && between(x, z, m)).collect();
                    triples += 1;
                    t.check(found == [c.median(x, y, z)], || format!("{name}: median of ({x},{y},{z}) is {found:?}"));
                }
            }
        }
        for set in convex_samples(c, &mut rng)? {
            for x in 0..n {
                let best = set.vertices.iter().map(|&v| d[x][v]).min().expect("nonempty");
                let nearest: Vec<usize> = set.vertices.iter().copied().filter(|&v| d[x][v] == best).collect();
                let g = c.gate(&set, x);
                // W(x|gate) is exactly the set of walls separating x from C.
                let outside = c
                    .wall_ids()
                    .filter(|&w| set.vertices.iter().all(|&v| c.sign(v, w) != c.sign(x, w)))
                    .collect::<Vec<_>>();
                let sep: Vec<_> = c.separating(x, g).iter().collect();
                gates += 1;
                t.check(nearest == [g] && sep == outside, || {
                    format!("{name}: gate of {x} is {g}, nearest {nearest:?}")
                });
            }
        }
    }
    t.note(format!("{triples} median triples, {gates} gate queries, exhaustive"));
    Ok(t)
}

fn bridge(seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 4);
    let suite = chart_suite(seed);
    for i in 0..100 {
        let (name, c) = &suite[i % suite.len()];
        let hull = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(1..=3);
            let pts: Vec<VertexId> = (0..k).map(|_| pick(rng, c)).collect();
            c.hull(&pts)
        };
        let (c1, c2) = (hull(&mut rng)?, hull(&mut rng)?);
        let b = c.bridge_decomposition(&c1, &c2)?;
        t.check(b.isometry && b.wall_partition && b.shores_match, || {
            format!("{name}: pair {i} isometry {} partition {} shores {}", b.isometry, b.wall_partition, b.shores_match)
        });
    }
    let mut strong = 0usize;
    for (name, c) in &suite {
        for a in c.wall_ids() {
            for b in c.wall_ids() {
                for (sa, sb) in [
                    (Sign::Minus, Sign::Minus),
                    (Sign::Minus, Sign::Plus),
                    (Sign::Plus, Sign::Minus),
                    (Sign::Plus, Sign::Plus),
                ] {
                    let (h1, h2) = (Halfspace::new(a, sa), Halfspace::new(b, sb));
                    if a >= b || !c.are_disjoint(h1, h2) || !c.strongly_separated(h1, h2)? {
                        continue;
                    }
                    strong += 1;
                    let bd = c.bridge_decomposition(&c.halfspace_set(h1)?, &c.halfspace_set(h2)?)?;
                    t.check(bd.shore.len() == 1 && bd.isometry, || {
                        format!(
                            "{name}: strongly separated {} {} has shore {}",
                            c.halfspace_name(h1),
                            c.halfspace_name(h2),
                            bd.shore.len()
                        )
                    });
                }
            }
        }
    }
    t.note(format!("100 random convex pairs, {strong} strongly separated halfspace pairs"));
    Ok(t)
}

fn cut_points(seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut tests = 0usize;
    for (name, c) in chart_suite(seed) {
        for x in c.vertices() {
            for y in c.vertices().filter(|&y| y > x) {
                for v in c.interval(x, y).vertices {
                    let r = c.cut_test(x, y, v)?;
                    tests += 1;
                    t.check(r.agree(), || format!("{name}: conditions disagree at {v} in I({x},{y}): {r:?}"));
                }
            }
        }
    }
    t.note(format!("{tests} (interval, vertex) cases"));
    Ok(t)
}

fn fig1_suite(_seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let f = fig1();
    for (side, c, p) in [("left", &f.left, f.left_points), ("right", &f.right, f.right_points)] {
        let mut perms = 0;
        for a in 0..4 {
            for b in 0..4 {
                for cc in 0..4 {
                    for d in 0..4 {
                        let idx = [a, b, cc, d];
                        if idx.iter().enumerate().any(|(i, u)| idx[i + 1..].contains(u)) {
                            continue;
                        }
                        perms += 1;
                        t.check(c.cross_ratio(p[a], p[b], p[cc], p[d]) == int(0), || {
                            format!("{side}: cr{idx:?} is not 0")
                        });
                    }
                }
            }
        }
        t.check(perms == 24, || "permutation count".into());
    }
    let [x, y, z, z2] = f.left_points;
    t.check(f.left.median(x, y, z) == f.left.median(x, y, z2), || "left medians differ".into());
    t.check(f.left.is_opposite(x, y, z)?.opposite, || "left: x, y not opposite w.r.t. z".into());
    let [x, y, z, z2] = f.right_points;
    t.check(f.right.median(x, y, z) != f.right.median(x, y, z2), || "right medians coincide".into());
    t.check(!f.right.is_opposite(x, y, z)?.opposite, || "right: x, y opposite w.r.t. z".into());
    t.note("24 permuted cross ratios vanish on both sides; medians and opposition as drawn");
    Ok(t)
}

fn tree(radius: usize) -> Result<BallChart> {
    racg_ball(&RacgSpec::lettered(3, &[], radius))
}

fn length_tree(_seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let ball = tree(12)?;
    let ab = ball.word(&["a", "b"])?;
    for n in 1..=4i64 {
        let g = ab.power(&ball.chart, n)?;
        let cert = translation_length(&ball, &g)?;
        t.check(cert.value == int(2 * n), || format!("l((ab)^{n}) = {}", format_weight(&cert.value)));
    }
    let (sub, subdivision) = ball.subdivided()?;
    let lifted = ball.lift(&subdivision, &ab)?;
    let cert = translation_length(&sub, &lifted)?;
    t.check(cert.value == int(4), || format!("subdivision lift: {}", format_weight(&cert.value)));
    let small = tree(6)?;
    let prod = small.product(&small)?;
    let diag = prod.word(&["axa", "bxb"])?;
    let cert = translation_length(&prod, &diag)?;
    t.check(cert.value == int(4), || format!("product diagonal: {}", format_weight(&cert.value)));
    t.note(format!(
        "l((ab)^n) = 2n for n <= 4 on R=12 ({} vertices); lift 4; diagonal 4 on {} vertices",
        ball.chart.num_vertices(),
        prod.chart.num_vertices()
    ));
    Ok(t)
}

fn report_line(label: &str, r: &CrFromEllReport) -> String {
    format!(
        "{label}: s={} cr={} (-2cr={}) over {}/{} terms, margin {} {}",
        format_weight(&r.stable_length),
        format_weight(&r.stable_cross_ratio),
        format_weight(&(-int(2) * r.stable_cross_ratio)),
        r.lengths.len(),
        r.cross_ratios.len(),
        r.margin,
        if r.margin_met { "met" } else { "not met" }
    )
}

fn cr_from_ell(_seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let ball = tree(12)?;
    let (g, h) = (ball.word(&["a", "b"])?, ball.word(&["c", "b"])?);
    let r = cr_from_ell_check(&ball, &g, &h, 4)?;
    t.check(r.agree && r.margin_met, || report_line("tree ab, cb", &r));
    t.note(report_line("tree ab,cb", &r));

    let spec = RacgSpec::cycle(5, 8);
    let pentagon = racg_ball(&spec)?;
    for (gw, hw) in [("s0s2s0s3", "s2s4s2s0"), ("s0s2s0s3", "s1s3s1s4")] {
        let (g, h) = (spec.parse_word(gw)?, spec.parse_word(hw)?);
        let r = racg_cr_from_ell(&spec, &pentagon, &g, &h, 8)?;
        t.check(r.agree && r.margin_met, || report_line(&format!("pentagon {gw}, {hw}"), &r));
        t.note(report_line(&format!("pentagon {gw},{hw}"), &r));
    }
    Ok(t)
}

fn extension(seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 9);
    let mut pool: Vec<(String, ComplexChart)> = vec![
        ("grid3x3".into(), grid(&[3, 3])),
        ("grid7x7".into(), grid(&[7, 7])),
        ("grid3x3x3".into(), grid(&[3, 3, 3])),
        ("grid2x2x2".into(), grid(&[2, 2, 2])),
        ("grid4x2".into(), grid(&[4, 2])),
        ("star3x3".into(), star(3, 3)),
        ("star4x4".into(), star(4, 4)),
        ("star5x2".into(), star(5, 2)),
        ("path9".into(), path(9)),
        ("tree-r3".into(), tree(3)?.chart),
    ];
    for (i, c) in random_charts(seed ^ 0x9e37, 40).into_iter().enumerate() {
        pool.push((format!("random{i}"), c));
    }
    pool.truncate(50);
    let mut sizes = Vec::new();
    for (name, x) in &pool {
        let (y, phi) = relabeled(x, rng.gen());
        let a = thin_witness_complete(x, rng.gen());
        sizes.push(a.len());
        let partial = PartialIsometry::restrict(x, &y, &phi, &a)?;
        let ext = extend_full(&partial);
        t.check(ext.as_ref().ok() == Some(&phi), || format!("{name}: extension gave {:?}", ext.as_ref().err()));
        let all = brute_force_extensions(&partial, 64)?;
        t.check(all == vec![phi.clone()], || format!("{name}: oracle found {} extensions", all.len()));
    }
    let adversarial = adversarial_instances();
    for (name, x, y, pairs) in &adversarial {
        let outcome = PartialIsometry::new(x, y, pairs).and_then(|p| extend_full(&p));
        t.check(outcome.is_err(), || format!("{name}: extended to {outcome:?}"));
    }
    t.note(format!(
        "{} instances (|A| from {} to {}), {} adversarial",
        pool.len(),
        sizes.iter().min().unwrap_or(&0),
        sizes.iter().max().unwrap_or(&0),
        adversarial.len()
    ));
    Ok(t)
}

type Instance = (&'static str, ComplexChart, ComplexChart, Vec<(VertexId, VertexId)>);

/// Distance-preserving correspondences with no extension.
pub fn adversarial_instances() -> Vec<Instance> {
    let v = |c: &ComplexChart, n: &str| c.find_vertex(n).expect("fixture vertex");
    let mut out: Vec<Instance> = Vec::new();
    let (p2, tripod) = (path(2), star(3, 1));
    let pairs =
        vec![(v(&p2, "0"), v(&tripod, "0.1")), (v(&p2, "1"), v(&tripod, "c")), (v(&p2, "2"), v(&tripod, "1.1"))];
    out.push(("path into tripod", p2, tripod, pairs));
    let sq = grid(&[1, 1]);
    let pairs = vec![(v(&sq, "0,0"), v(&sq, "0,0")), (v(&sq, "1,1"), v(&sq, "1,1"))];
    out.push(("square antipodes", sq.clone(), sq.clone(), pairs));
    let (g, p4) = (grid(&[2, 2]), path(4));
    let pairs = vec![(v(&g, "0,0"), v(&p4, "0")), (v(&g, "1,0"), v(&p4, "1")), (v(&g, "2,0"), v(&p4, "2"))];
    out.push(("grid row into path", g, p4, pairs));
    let (t3, t4) = (star(3, 1), star(4, 1));
    let pairs = (0..3).map(|i| (v(&t3, &format!("{i}.1")), v(&t4, &format!("{i}.1")))).collect();
    out.push(("tripod into 4-star", t3, t4, pairs));
    let (sq2, p3) = (grid(&[1, 1]), path(3));
    let pairs = vec![(v(&sq2, "0,0"), v(&p3, "0")), (v(&sq2, "1,0"), v(&p3, "1")), (v(&sq2, "1,1"), v(&p3, "2"))];
    out.push(("square corner into path", sq2, p3, pairs));
    let p2w = path(2);
    let p1w = path(1).scaled(int(2)).expect("positive");
    let pairs = vec![(v(&p2w, "0"), v(&p1w, "0")), (v(&p2w, "2"), v(&p1w, "1"))];
    out.push(("two unit edges onto one long edge", p2w, p1w, pairs));
    let (cube, g21) = (grid(&[1, 1, 1]), grid(&[2, 1]));
    let pairs = vec![(v(&cube, "0,0,0"), v(&g21, "0,0")), (v(&cube, "1,1,0"), v(&g21, "2,0"))];
    out.push(("cube into ladder", cube, g21, pairs));
    let (s32, p4b) = (star(3, 2), path(4));
    let pairs = vec![(v(&s32, "0.2"), v(&p4b, "0")), (v(&s32, "1.2"), v(&p4b, "4"))];
    out.push(("star legs onto path ends", s32, p4b, pairs));
    let (g22, g22b) = (grid(&[2, 2]), grid(&[2, 2]));
    let pairs = vec![(v(&g22, "1,1"), v(&g22b, "1,1"))];
    out.push(("grid centre alone", g22, g22b, pairs));
    let (p5, p7) = (path(5), path(7));
    let pairs = vec![(v(&p5, "0"), v(&p7, "1")), (v(&p5, "5"), v(&p7, "6"))];
    out.push(("path into a longer path", p5, p7, pairs));
    out
}

fn homogeneity(seed: u64) -> Result<Tally> {
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 10);
    for lambda in [int(2), Weight::new(1, 3)] {
        for (name, c) in chart_suite(seed) {
            let s = c.scaled(lambda)?;
            for _ in 0..100 {
                let [v, x, y, z, w] = [(); 5].map(|_| pick(&mut rng, &c));
                t.check(s.distance(x, y) == lambda * c.distance(x, y), || format!("{name}: distance"));
                t.check(s.gromov_product(v, x, y) == lambda * c.gromov_product(v, x, y), || {
                    format!("{name}: Gromov product")
                });
                t.check(s.cross_ratio(x, y, z, w) == lambda * c.cross_ratio(x, y, z, w), || format!("{name}: cr"));
                t.check(s.is_opposite(x, y, z)?.opposite == c.is_opposite(x, y, z)?.opposite, || {
                    format!("{name}: opposite")
                });
            }
            let walls: Vec<_> = c.wall_ids().collect();
            for _ in 0..50 {
                let (a, b, d) = (
                    *walls.choose(&mut rng).unwrap(),
                    *walls.choose(&mut rng).unwrap(),
                    *walls.choose(&mut rng).unwrap(),
                );
                if a != b && b != d && a != d {
                    t.check(s.facing_triple(a, b, d)? == c.facing_triple(a, b, d)?, || format!("{name}: facing"));
                }
                let (h1, h2) = (Halfspace::new(a, Sign::Minus), Halfspace::new(b, Sign::Plus));
                if a != b && c.are_disjoint(h1, h2) {
                    t.check(s.strongly_separated(h1, h2)? == c.strongly_separated(h1, h2)?, || {
                        format!("{name}: strong separation")
                    });
                }
            }
        }
        let ball = tree(6)?;
        let scaled = ball.scaled(lambda)?;
        let words = vec![vec!["a", "b"], vec!["a", "b", "c"], vec!["a", "b", "a", "c"]];
        let before = tau_and_reduced(&ball, &["a", "b", "c"], &words)?;
        let after = tau_and_reduced(&scaled, &["a", "b", "c"], &words)?;
        for (p, q) in before.reduced.iter().zip(&after.reduced) {
            t.check(q.1 == lambda * p.1, || format!("l({}) does not scale", p.0));
            t.check(q.2 == p.2, || format!("reduced length of {} changes", p.0));
        }
        t.check(after.tau == lambda * before.tau, || "tau does not scale".into());
    }
    t.note("lambda in {2, 1/3} on the chart suite and the tree ball");
    Ok(t)
}
