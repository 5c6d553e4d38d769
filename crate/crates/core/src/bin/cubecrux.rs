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

//! Command-line interface. Every subcommand prints one JSON document on
//! stdout. Exit codes: 0 success, 1 structured domain error (JSON on
//! stderr), 2 usage error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cubecrux::accept::{run_all, run_suite, DEFAULT_SEED};
use cubecrux::actions::{
    cr_from_ell_check, min_set, neatly_contracting_witness, tau_and_reduced, translation_length, Automorphism,
    BallChart, CrFromEllReport, LengthCertificate,
};
use cubecrux::chart::{ComplexChart, Halfspace, Sign, VertexId};
use cubecrux::error::{Error, Result};
use cubecrux::extension::{brute_force_extensions, extend_full, PartialIsometry};
use cubecrux::generators::{fig1, grid, path, racg_ball, racg_cr_from_ell, random_median, star, RacgSpec};
use cubecrux::io;
use cubecrux::manifest::{seed_or, RunManifest, SEED_VAR};
use cubecrux::weight::{format_weight, parse_weight, Weight};

#[derive(Parser)]
#[command(name = "cubecrux", version, about = "Exact computations on finite charts of CAT(0) cube complexes")]
struct Cli {
    /// Write a run manifest (input and result digests) to this file.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a chart and print a summary, its canonical form or DOT.
    Validate {
        chart: PathBuf,
        #[arg(long, conflicts_with = "dot")]
        canonical: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Median of three vertices.
    Median { chart: PathBuf, x: String, y: String, z: String },
    /// Interval I(x, y).
    Interval { chart: PathBuf, x: String, y: String },
    /// Convex hull of vertices.
    Hull {
        chart: PathBuf,
        #[arg(required = true)]
        vertices: Vec<String>,
    },
    /// Gate of x on the hull of a set.
    Gate {
        chart: PathBuf,
        x: String,
        /// Repeat for each vertex of the set.
        #[arg(long, required = true)]
        set: Vec<String>,
    },
    /// Bridge between the hulls of two vertex sets; repeat --c1 and --c2
    /// once per vertex.
    Bridge {
        chart: PathBuf,
        #[arg(long, required = true)]
        c1: Vec<String>,
        #[arg(long, required = true)]
        c2: Vec<String>,
    },
    /// Strong separation of two disjoint halfspaces, written `wall+` or `wall-`.
    Ssep { chart: PathBuf, h1: String, h2: String },
    /// Cross ratio cr(x, y, z, w).
    Cr {
        chart: PathBuf,
        x: String,
        y: String,
        z: String,
        w: String,
        /// Also compute it from Gromov products at this basepoint.
        #[arg(long)]
        at: Option<String>,
    },
    /// Normalized cross-ratio triple.
    Crt { chart: PathBuf, x: String, y: String, z: String, w: String },
    /// Gromov product (x . y)_v.
    Gromov { chart: PathBuf, v: String, x: String, y: String },
    /// Whether x and y are opposite with respect to z.
    Opposite { chart: PathBuf, x: String, y: String, z: String },
    /// Free faces, skipping cubes that touch the declared boundary vertices.
    Freefaces {
        chart: PathBuf,
        /// Repeat for each boundary vertex.
        #[arg(long)]
        boundary: Vec<String>,
    },
    /// Cut points of I(x, y), each with the three characterizations.
    Cutpoints { chart: PathBuf, x: String, y: String },
    /// Certified translation length.
    Length(ActionArgs),
    /// Minimal set of an action.
    Minset(ActionArgs),
    /// Tau and reduced lengths of words.
    Tau {
        ball: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        generators: Vec<String>,
        #[arg(long = "word", required = true)]
        words: Vec<String>,
    },
    /// Neatly contracting witness.
    Neat(ActionArgs),
    /// Compare s_n with the deep-axis cross ratio.
    Crfromell {
        /// Ball with generators; omit when using --cycle.
        ball: Option<PathBuf>,
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Right-angled Coxeter group of the n-cycle, computed on hulls.
        #[arg(long, requires = "radius", conflicts_with = "ball")]
        cycle: Option<usize>,
        #[arg(long)]
        radius: Option<usize>,
    },
    /// Extend a partial isometry between two charts.
    Extend {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        phi: PathBuf,
        /// Also count extensions by exhaustive search.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 64)]
        bound: usize,
    },
    /// Generate a chart or ball.
    #[command(subcommand)]
    Gen(Gen),
    /// Restriction quotient keeping the listed hyperplanes.
    Quotient {
        chart: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        keep: Vec<String>,
    },
    /// Cubical subdivision.
    Subdivide { chart: PathBuf },
    /// Product of two charts.
    Product { a: PathBuf, b: PathBuf },
    /// Change hyperplane weights from a JSON table, or scale all of them.
    Reweight {
        chart: PathBuf,
        #[arg(long, conflicts_with = "scale", required_unless_present = "scale")]
        table: Option<PathBuf>,
        #[arg(long)]
        scale: Option<String>,
    },
    /// Run acceptance suites (all when no name is given).
    Accept {
        suite: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args)]
struct ActionArgs {
    ball: PathBuf,
    /// Word in the ball's generators, e.g. `ab` or `s0 s2`.
    #[arg(long, conflicts_with = "action", required_unless_present = "action")]
    word: Option<String>,
    /// Action JSON on the ball's chart.
    #[arg(long)]
    action: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Gen {
    Path {
        n: usize,
    },
    Grid {
        #[arg(value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    Star {
        legs: usize,
        len: usize,
    },
    /// Ball in the Davis complex of a right-angled Coxeter group.
    Racg {
        #[arg(long)]
        radius: usize,
        /// Use the n-cycle with generators s0..s{n-1}.
        #[arg(long, conflicts_with_all = ["rank", "edges"])]
        cycle: Option<usize>,
        /// Generators a, b, c, ...
        #[arg(long, required_unless_present = "cycle")]
        rank: Option<usize>,
        /// Commuting pairs as `i-j`, comma separated.
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
    },
    /// Median closure of random vertices of a cube.
    Random {
        walls: usize,
        seeds: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// The branch-point fixtures.
    Fig1 {
        #[arg(value_parser = ["left", "right"])]
        side: String,
    },
}

/// Input files read so far, for the manifest.
#[derive(Default)]
struct Inputs {
    files: Vec<(String, Vec<u8>)>,
    seed: Option<u64>,
}

impl Inputs {
    fn read(&mut self, p: &Path) -> Result<String> {
        let text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        self.files.push((p.display().to_string(), text.clone().into_bytes()));
        Ok(text)
    }

    fn chart(&mut self, p: &Path) -> Result<ComplexChart> {
        io::chart_from_str(&self.read(p)?)
    }

    fn ball(&mut self, p: &Path) -> Result<BallChart> {
        io::ball_from_str(&self.read(p)?)
    }
}

fn names(c: &ComplexChart, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| c.vertex_name(v).to_string()).collect()
}

fn find_all(c: &ComplexChart, vs: &[String]) -> Result<Vec<VertexId>> {
    vs.iter().map(|v| c.find_vertex(v)).collect()
}

fn halfspace(c: &ComplexChart, text: &str) -> Result<Halfspace> {
    let bad =
        || Error::Schema { path: text.to_string(), message: "expected a hyperplane id followed by + or -".into() };
    let sign = text.get(text.len().saturating_sub(1)..).and_then(Sign::parse).ok_or_else(bad)?;
    Ok(Halfspace::new(c.find_wall(&text[..text.len() - 1])?, sign))
}

fn w(x: Weight) -> Value {
    Value::String(format_weight(&x))
}

/// Splits a word into generator names by longest match; spaces and commas
/// are ignored, `1` is the empty word.
fn split_word<'a>(ball: &'a BallChart, text: &str) -> Result<Vec<&'a str>> {
    let mut rest: String = text.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
    if rest == "1" {
        rest.clear();
    }
    let mut out = Vec::new();
    let mut s = rest.as_str();
    while !s.is_empty() {
        let best = ball
            .generators
            .iter()
            .map(|(n, _)| n.as_str())
            .filter(|n| !n.is_empty() && s.starts_with(n))
            .max_by_key(|n| n.len())
            .ok_or_else(|| Error::Schema { path: "word".into(), message: format!("no generator matches at {s:?}") })?;
        out.push(best);
        s = &s[best.len()..];
    }
    Ok(out)
}

fn action(inputs: &mut Inputs, args: &ActionArgs) -> Result<(BallChart, Automorphism)> {
    let ball = inputs.ball(&args.ball)?;
    let g = match (&args.word, &args.action) {
        (Some(word), _) => ball.word(&split_word(&ball, word)?)?,
        (None, Some(p)) => io::action_from_json(&ball.chart, &io::parse_json(&inputs.read(p)?)?)?,
        (None, None) => unreachable!("clap requires one of --word and --action"),
    };
    Ok((ball, g))
}

fn certificate_json(c: &LengthCertificate) -> Value {
    json!({
        "length": w(c.value),
        "method": c.method.name(),
        "witness": c.witness,
        "transforms": c.transforms.iter().map(|t| format!("{t:?}")).collect::<Vec<_>>(),
        "audited_vertices": c.audited_vertices,
        "audit": c.audit,
    })
}

fn cr_report_json(r: &CrFromEllReport) -> Value {
    json!({
        "lengths": r.lengths.iter().map(|x| w(*x)).collect::<Vec<_>>(),
        "cross_ratios": r.cross_ratios.iter().map(|x| w(*x)).collect::<Vec<_>>(),
        "stable_length": w(r.stable_length),
        "stable_cross_ratio": w(r.stable_cross_ratio),
        "margin": r.margin,
        "margin_met": r.margin_met,
        "agree": r.agree,
        "literal_agree": r.literal_agree,
    })
}

fn run(cmd: &Command, inputs: &mut Inputs) -> Result<(Value, bool)> {
    let ok = |v: Value| Ok((v, true));
    match cmd {
        Command::Validate { chart, canonical, dot } => {
            let text = inputs.read(chart)?;
            let c = io::chart_from_str(&text)?;
            if *canonical {
                return ok(io::parse_json(&io::canonical_chart(&text)?)?);
            }
            if *dot {
                return ok(Value::String(io::chart_to_dot(&c)));
            }
            ok(json!({
                "valid": true,
                "vertices": c.num_vertices(),
                "hyperplanes": c.num_walls(),
                "edges": c.num_edges(),
                "dimension": c.dimension(),
                "validation": format!("{:?}", c.validation()),
            }))
        }
        Command::Freefaces { chart, boundary } => {
            let c = inputs.chart(chart)?;
            let faces = c.free_faces(&find_all(&c, boundary)?);
            let list: Vec<Value> = faces
                .iter()
                .map(|f| {
                    let walls: Vec<&str> = f.walls.iter().map(|&w| c.walls()[w].id.as_str()).collect();
                    json!({"dimension": f.dimension(), "vertices": names(&c, &c.cube_vertices(f)), "hyperplanes": walls})
                })
                .collect();
            ok(json!({"count": list.len(), "free_faces": list}))
        }
        Command::Median { chart, x, y, z } => {
            let c = inputs.chart(chart)?;
            let m = c.median(c.find_vertex(x)?, c.find_vertex(y)?, c.find_vertex(z)?);
            ok(json!({"median": c.vertex_name(m)}))
        }
        Command::Interval { chart, x, y } => {
            let c = inputs.chart(chart)?;
            let i = c.interval(c.find_vertex(x)?, c.find_vertex(y)?);
            ok(json!({"vertices": names(&c, &i.vertices)}))
        }
        Command::Hull { chart, vertices } => {
            let c = inputs.chart(chart)?;
            let h = c.hull(&find_all(&c, vertices)?)?;
            ok(json!({"vertices": names(&c, &h.vertices)}))
        }
        Command::Gate { chart, x, set } => {
            let c = inputs.chart(chart)?;
            let h = c.hull(&find_all(&c, set)?)?;
            let x = c.find_vertex(x)?;
            let g = c.gate(&h, x);
            let walls: Vec<&str> = c.separating(x, g).iter().map(|w| c.wall(w).id.as_str()).collect();
            ok(json!({"gate": c.vertex_name(g), "distance": w(c.distance(x, g)), "separating": walls}))
        }
        Command::Bridge { chart, c1, c2 } => {
            let c = inputs.chart(chart)?;
            let (a, b) = (c.hull(&find_all(&c, c1)?)?, c.hull(&find_all(&c, c2)?)?);
            let r = c.bridge_decomposition(&a, &b)?;
            let wall_names =
                |s: &cubecrux::wallset::WallSet| s.iter().map(|w| c.wall(w).id.clone()).collect::<Vec<_>>();
            ok(json!({
                "distance": w(r.distance),
                "gates": [c.vertex_name(r.gates.0), c.vertex_name(r.gates.1)],
                "shore1": names(&c, &r.shore1),
                "shore2": names(&c, &r.shore2),
                "shore_size": r.shore.len(),
                "shore_walls": wall_names(&r.shore_walls),
                "gap_walls": wall_names(&r.gap_walls),
                "interval": names(&c, &r.interval.vertices),
                "bridge": names(&c, &r.bridge.vertices),
                "isometry": r.isometry,
                "wall_partition": r.wall_partition,
                "shores_match": r.shores_match,
            }))
        }
        Command::Ssep { chart, h1, h2 } => {
            let c = inputs.chart(chart)?;
            let (a, b) = (halfspace(&c, h1)?, halfspace(&c, h2)?);
            ok(json!({"strongly_separated": c.strongly_separated(a, b)?}))
        }
        Command::Cr { chart, x, y, z, w: w4, at } => {
            let c = inputs.chart(chart)?;
            let [x, y, z, q] = [x, y, z, w4].map(|v| c.find_vertex(v));
            let (x, y, z, q) = (x?, y?, z?, q?);
            let mut out = json!({"cr": w(c.cross_ratio(x, y, z, q))});
            if let Some(v) = at {
                out["cr_at"] = w(c.cross_ratio_at(c.find_vertex(v)?, x, y, z, q));
            }
            ok(out)
        }
        Command::Crt { chart, x, y, z, w: w4 } => {
            let c = inputs.chart(chart)?;
            let [x, y, z, q] = [x, y, z, w4].map(|v| c.find_vertex(v));
            let t = c.crt(x?, y?, z?, q?);
            ok(json!({"crt": t.entries().map(w), "cr": w(t.cross_ratio())}))
        }
        Command::Gromov { chart, v, x, y } => {
            let c = inputs.chart(chart)?;
            ok(json!({"gromov": w(c.gromov_product(c.find_vertex(v)?, c.find_vertex(x)?, c.find_vertex(y)?))}))
        }
        Command::Opposite { chart, x, y, z } => {
            let c = inputs.chart(chart)?;
            let r = c.is_opposite(c.find_vertex(x)?, c.find_vertex(y)?, c.find_vertex(z)?)?;
            ok(json!({
                "opposite": r.opposite,
                "median": c.vertex_name(r.median),
                "two_components": r.test.two_components,
                "two_cliques": r.test.two_cliques,
                "splits_interval": r.test.splits_interval,
            }))
        }
        Command::Cutpoints { chart, x, y } => {
            let c = inputs.chart(chart)?;
            let (x, y) = (c.find_vertex(x)?, c.find_vertex(y)?);
            let mut rows = Vec::new();
            for v in c.interval(x, y).vertices {
                let t = c.cut_test(x, y, v)?;
                rows.push(json!({
                    "vertex": c.vertex_name(v),
                    "two_components": t.two_components,
                    "two_cliques": t.two_cliques,
                    "splits_interval": t.splits_interval,
                }));
            }
            ok(json!({"cut_points": names(&c, &c.cut_points(x, y)?), "tests": rows}))
        }
        Command::Length(args) => {
            let (ball, g) = action(inputs, args)?;
            let cert = translation_length(&ball, &g)?;
            ok(certificate_json(&cert))
        }
        Command::Minset(args) => {
            let (ball, g) = action(inputs, args)?;
            let cert = translation_length(&ball, &g)?;
            let m = min_set(&ball, &g, &cert)?;
            ok(json!({
                "length": w(cert.value),
                "vertices": names(&ball.chart, &m.vertices),
                "convex_within_audit": m.convex_within_audit,
            }))
        }
        Command::Tau { ball, generators, words } => {
            let ball = inputs.ball(ball)?;
            let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
            let split: Vec<Vec<&str>> = words.iter().map(|x| split_word(&ball, x)).collect::<Result<_>>()?;
            let r = tau_and_reduced(&ball, &gens, &split)?;
            let rows: Vec<Value> = r
                .reduced
                .iter()
                .map(|(word, l, red, bounded)| json!({"word": word, "length": w(*l), "reduced": w(*red), "bounded": bounded}))
                .collect();
            ok(json!({"tau": w(r.tau), "witness": r.witness, "words": rows}))
        }
        Command::Neat(args) => {
            let (ball, g) = action(inputs, args)?;
            let c = &ball.chart;
            match neatly_contracting_witness(&ball, &g)? {
                Some(n) => ok(json!({
                    "neat": true,
                    "h1": c.halfspace_name(n.h1),
                    "h2": c.halfspace_name(n.h2),
                    "forward": names(c, &n.forward),
                    "backward": names(c, &n.backward),
                })),
                None => Err(Error::NotNeatlyContracting),
            }
        }
        Command::Crfromell { ball, g, h, nmax, cycle, radius } => {
            let r = match (ball, cycle) {
                (Some(p), _) => {
                    let ball = inputs.ball(p)?;
                    let (gw, hw) = (ball.word(&split_word(&ball, g)?)?, ball.word(&split_word(&ball, h)?)?);
                    cr_from_ell_check(&ball, &gw, &hw, *nmax)?
                }
                (None, Some(n)) => {
                    let spec = RacgSpec::cycle(*n, radius.expect("clap requires --radius"));
                    let ball = racg_ball(&spec)?;
                    racg_cr_from_ell(&spec, &ball, &spec.parse_word(g)?, &spec.parse_word(h)?, *nmax)?
                }
                (None, None) => {
                    return Err(Error::Schema {
                        path: "crfromell".into(),
                        message: "give a ball file or --cycle".into(),
                    })
                }
            };
            let passed = r.agree && r.margin_met;
            Ok((cr_report_json(&r), passed))
        }
        Command::Extend { x, y, phi, oracle, bound } => {
            let (cx, cy) = (inputs.chart(x)?, inputs.chart(y)?);
            let pairs = io::pairs_from_json(&cx, &cy, &io::parse_json(&inputs.read(phi)?)?)?;
            let partial = PartialIsometry::new(&cx, &cy, &pairs)?;
            let map = extend_full(&partial)?;
            let full: Vec<(VertexId, VertexId)> = map.iter().copied().enumerate().collect();
            let mut out = io::pairs_to_json(&cx, &cy, &full);
            if *oracle {
                let all = brute_force_extensions(&partial, *bound)?;
                out["oracle_count"] = json!(all.len());
                out["oracle_agrees"] = json!(all == vec![map]);
            }
            ok(out)
        }
        Command::Gen(g) => gen(g, inputs).map(|v| (v, true)),
        Command::Quotient { chart, keep } => {
            let c = inputs.chart(chart)?;
            let walls: Vec<usize> = keep.iter().map(|k| c.find_wall(k)).collect::<Result<_>>()?;
            ok(io::chart_to_json(&c.restriction_quotient(&walls)?.chart))
        }
        Command::Subdivide { chart } => ok(io::chart_to_json(&inputs.chart(chart)?.subdivide()?.chart)),
        Command::Product { a, b } => {
            let (a, b) = (inputs.chart(a)?, inputs.chart(b)?);
            ok(io::chart_to_json(&a.product(&b)?))
        }
        Command::Reweight { chart, table, scale } => {
            let c = inputs.chart(chart)?;
            let out = match (table, scale) {
                (Some(p), _) => {
                    let v = io::parse_json(&inputs.read(p)?)?;
                    let obj = v
                        .as_object()
                        .ok_or_else(|| Error::Schema { path: "$".into(), message: "expected an object".into() })?;
                    let table: BTreeMap<String, Weight> =
                        obj.iter().map(|(k, x)| Ok((k.clone(), io::weight_from_json(x, k)?))).collect::<Result<_>>()?;
                    c.reweight(&table)?
                }
                (None, Some(s)) => c.scaled(parse_weight(s)?)?,
                (None, None) => unreachable!("clap requires --table or --scale"),
            };
            ok(io::chart_to_json(&out))
        }
        Command::Accept { suite, seed } => {
            let seed = seed.unwrap_or_else(|| seed_or(DEFAULT_SEED));
            inputs.seed = Some(seed);
            let reports = match suite.as_deref() {
                None | Some("all") => run_all(seed),
                Some(name) => vec![run_suite(name, seed)?],
            };
            let passed = reports.iter().all(|r| r.passed);
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.name,
                        "passed": r.passed,
                        "checks": r.checks,
                        "summary": r.summary,
                        "counterexamples": r.failures,
                    })
                })
                .collect();
            Ok((json!({"seed": seed, "passed": passed, "suites": rows}), passed))
        }
    }
}

fn gen(g: &Gen, inputs: &mut Inputs) -> Result<Value> {
    Ok(match g {
        Gen::Path { n } => io::chart_to_json(&path(*n)),
        Gen::Grid { dims } => io::chart_to_json(&grid(dims)),
        Gen::Star { legs, len } => io::chart_to_json(&star(*legs, *len)),
        Gen::Racg { radius, cycle, rank, edges } => {
            let spec = match (cycle, rank) {
                (Some(n), _) => RacgSpec::cycle(*n, *radius),
                (None, Some(n)) => {
                    let parsed: Vec<(usize, usize)> = edges
                        .iter()
                        .map(|e| {
                            let bad = || Error::Schema { path: format!("edges.{e}"), message: "expected i-j".into() };
                            let (a, b) = e.split_once('-').ok_or_else(bad)?;
                            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
                        })
                        .collect::<Result<_>>()?;
                    RacgSpec::lettered(*n, &parsed, *radius)
                }
                (None, None) => unreachable!("clap requires --cycle or --rank"),
            };
            io::ball_to_json(&racg_ball(&spec)?)
        }
        Gen::Random { walls, seeds, seed } => {
            let seed = seed.unwrap_or_else(|| seed_or(0));
            inputs.seed = Some(seed);
            io::chart_to_json(&random_median(*walls, *seeds, seed)?)
        }
        Gen::Fig1 { side } => {
            let f = fig1();
            let (c, p) = if side == "left" { (f.left, f.left_points) } else { (f.right, f.right_points) };
            let mut v = io::chart_to_json(&c);
            v["marked"] = json!({"x": c.vertex_name(p[0]), "y": c.vertex_name(p[1]), "z": c.vertex_name(p[2]), "z'": c.vertex_name(p[3])});
            v
        }
    })
}

fn subcommand_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Validate { .. } => "validate",
        Command::Freefaces { .. } => "freefaces",
        Command::Median { .. } => "median",
        Command::Interval { .. } => "interval",
        Command::Hull { .. } => "hull",
        Command::Gate { .. } => "gate",
        Command::Bridge { .. } => "bridge",
        Command::Ssep { .. } => "ssep",
        Command::Cr { .. } => "cr",
        Command::Crt { .. } => "crt",
        Command::Gromov { .. } => "gromov",
        Command::Opposite { .. } => "opposite",
        Command::Cutpoints { .. } => "cutpoints",
        Command::Length(_) => "length",
        Command::Minset(_) => "minset",
        Command::Tau { .. } => "tau",
        Command::Neat(_) => "neat",
        Command::Crfromell { .. } => "crfromell",
        Command::Extend { .. } => "extend",
        Command::Gen(_) => "gen",
        Command::Quotient { .. } => "quotient",
        Command::Subdivide { .. } => "subdivide",
        Command::Product { .. } => "product",
        Command::Reweight { .. } => "reweight",
        Command::Accept { .. } => "accept",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut inputs = Inputs::default();
    match run(&cli.command, &mut inputs) {
        Ok((value, passed)) => {
            let text = match &value {
                Value::String(s) => s.clone(),
                v => v.to_string(),
            };
            println!("{text}");
            if let Some(p) = &cli.manifest {
                let seed = inputs.seed.or_else(|| std::env::var(SEED_VAR).ok().and_then(|s| s.parse().ok()));
                let m = RunManifest::new(subcommand_name(&cli.command), &inputs.files, seed, text.as_bytes());
                let body = serde_json::to_string_pretty(&m).expect("manifest serializes");
                if let Err(e) = std::fs::write(p, body + "\n") {
                    eprintln!("{}", json!({"error": "Io", "code": 99, "message": format!("{}: {e}", p.display())}));
                    return ExitCode::from(1);
                }
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let kind = format!("{e:?}");
            let kind = kind.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error");
            eprintln!("{}", json!({"error": kind, "code": e.code(), "message": e.to_string()}));
            ExitCode::from(1)
        }
    }
}
