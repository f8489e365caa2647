//! Seeded property suites. Case `i` of a run draws from its own ChaCha
//! stream, so results depend only on `(seed, i)`; cases run on a rayon pool
//! and are reported in index order.

use std::panic::{catch_unwind, AssertUnwindSafe};

use orthostair::convex::{
    axis_chords, is_obtuse_body, is_staircase_connected_convex, rotate_to_staircase, s_extreme_points,
    staircase_through,
};
use orthostair::gen::{
    random_carve_instance, random_complex, random_convex_polygon, random_exterior_point, random_normal_complex,
    random_obstacles, random_obtuse_polygon, random_point,
};
use orthostair::grid::{random_grid, random_staircase_grid, GreedyOutcome, GridSet};
use orthostair::rect::RectComplex;
use orthostair::routing::{carve_check, route_around_convex, route_multi, RoutingScene};
use orthostair::{ratio, Complex, Error, Point, Polygon, Rectangle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use num_traits::{Signed, Zero};

use crate::{CliError, Outcome, SceneEntry, SceneFile};

/// Failures shrunk and serialized in full; later ones are listed by index.
const SHRUNK_FAILURES: usize = 3;
const SHRINK_BUDGET: usize = 400;

/// A generated test input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Grid(GridSet),
    Polygon(Polygon),
    Complex(Complex),
    Routes { obstacles: Vec<Polygon>, window: Option<Rectangle>, queries: Vec<(Point, Point)> },
    Carve { region: GridSet, body: Polygon },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The instance does not meet the property's hypothesis.
    Vacuous(String),
    Fail(String),
}

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    generate: fn(&mut ChaCha8Rng) -> Result<Instance, Error>,
    check: fn(&Instance) -> Verdict,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "lemma41-equivalence",
        about: "grid staircase connectivity equals the all-pairs monotone path oracle",
        generate: gen_random_grid,
        check: check_lemma41,
    },
    Suite {
        name: "thm31-linkbound",
        about: "routes around one convex polygon verify with at most four links",
        generate: gen_linkbound,
        check: check_linkbound,
    },
    Suite {
        name: "thm42-no-holes",
        about: "staircase-connected grids have no bounded complement component",
        generate: gen_staircase_grid,
        check: check_no_holes,
    },
    Suite {
        name: "thm43-greedy",
        about: "greedy staircase construction succeeds on staircase-connected grids",
        generate: gen_staircase_grid,
        check: check_greedy,
    },
    Suite {
        name: "thm33-carve",
        about: "removing a convex body inside a connected region keeps it connected",
        generate: gen_carve,
        check: check_carve,
    },
    Suite {
        name: "thm34-multi-route",
        about: "routes among disjoint convex obstacles are found and verified",
        generate: gen_multi_route,
        check: check_multi_route,
    },
    Suite {
        name: "thm51-obtuse",
        about: "obtuse polygons pass the staircase certificate",
        generate: gen_obtuse,
        check: check_obtuse,
    },
    Suite {
        name: "thm53-rotate",
        about: "every convex polygon passes the certificate after rotation",
        generate: gen_convex,
        check: check_rotate,
    },
    Suite {
        name: "thm61-unimodal",
        about: "on normal vertically convex complexes the staircase decision matches profile unimodality",
        generate: gen_normal_complex,
        check: check_unimodal,
    },
    Suite {
        name: "thm71-extreme",
        about: "s-extreme points are exactly the degenerate-chord points; other vertices carry 2-link staircases",
        generate: gen_convex,
        check: check_extreme,
    },
    Suite {
        name: "rect-oracle",
        about: "exact complex decision agrees with the arrangement staircase oracle",
        generate: gen_complex,
        check: check_rect_oracle,
    },
];

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn gen_random_grid(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    let (w, h) = (rng.gen_range(1..=20), rng.gen_range(1..=20));
    Ok(Instance::Grid(random_grid(rng.gen(), w, h, 0.55)?))
}

fn gen_staircase_grid(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    let (w, h) = (rng.gen_range(1..=20), rng.gen_range(1..=20));
    Ok(Instance::Grid(random_staircase_grid(rng.gen(), w, h)?))
}

fn gen_linkbound(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    let poly = random_convex_polygon(rng, 12, 100)?;
    let mut queries = vec![];
    for _ in 0..50 {
        let p = random_exterior_point(rng, &poly, 20)?;
        let q = random_exterior_point(rng, &poly, 20)?;
        queries.push((p, q));
    }
    Ok(Instance::Routes { obstacles: vec![poly], window: None, queries })
}

fn gen_carve(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    let (region, body) = random_carve_instance(rng)?;
    Ok(Instance::Carve { region, body })
}

fn gen_multi_route(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    let obstacles = random_obstacles(rng, 5)?;
    let scene = RoutingScene::with_auto_window(obstacles.clone(), &[])?;
    let mut draw = || loop {
        let p = random_point(rng, -5, 70);
        if scene.check_query_point(&p).is_ok() {
            return p;
        }
    };
    let queries = (0..3).map(|_| (draw(), draw())).collect();
    Ok(Instance::Routes { obstacles, window: Some(scene.window().clone()), queries })
}

fn gen_obtuse(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    Ok(Instance::Polygon(random_obtuse_polygon(rng)?))
}

fn gen_convex(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    Ok(Instance::Polygon(random_convex_polygon(rng, 12, 100)?))
}

fn gen_normal_complex(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    Ok(Instance::Complex(random_normal_complex(rng)?))
}

fn gen_complex(rng: &mut ChaCha8Rng) -> Result<Instance, Error> {
    Ok(Instance::Complex(random_complex(rng, 8)?))
}

fn mismatch(i: &Instance) -> Verdict {
    Verdict::Fail(format!("suite received the wrong instance kind: {}", kind_name(i)))
}

fn kind_name(i: &Instance) -> &'static str {
    match i {
        Instance::Grid(_) => "grid",
        Instance::Polygon(_) => "polygon",
        Instance::Complex(_) => "complex",
        Instance::Routes { .. } => "routes",
        Instance::Carve { .. } => "carve",
    }
}

fn check_lemma41(i: &Instance) -> Verdict {
    let Instance::Grid(g) = i else { return mismatch(i) };
    let decided = g.is_staircase_connected();
    match g.monotone_counterexample() {
        None if decided => Verdict::Pass,
        Some(_) if !decided => Verdict::Pass,
        None => Verdict::Fail("predicate rejects but every pair has a monotone path".into()),
        Some((a, b)) => {
            Verdict::Fail(format!("predicate accepts but ({}, {}) -> ({}, {}) has no monotone path", a.col, a.row, b.col, b.row))
        }
    }
}

fn check_no_holes(i: &Instance) -> Verdict {
    let Instance::Grid(g) = i else { return mismatch(i) };
    if !g.is_staircase_connected() {
        return Verdict::Vacuous("grid is not staircase connected".into());
    }
    match g.bounded_complement_components(1) {
        0 => Verdict::Pass,
        k => Verdict::Fail(format!("{k} bounded complement components")),
    }
}

fn check_greedy(i: &Instance) -> Verdict {
    let Instance::Grid(g) = i else { return mismatch(i) };
    if !g.is_staircase_connected() {
        return Verdict::Vacuous("grid is not staircase connected".into());
    }
    let cells: Vec<_> = g.cells().collect();
    for &a in &cells {
        for &b in &cells {
            match g.greedy_staircase(a, b) {
                Ok(GreedyOutcome::Reached(path)) if path.is_staircase() => {}
                Ok(GreedyOutcome::Reached(_)) => {
                    return Verdict::Fail(format!("greedy path from {a:?} to {b:?} is not a staircase"))
                }
                Ok(GreedyOutcome::Blocked { stuck_at, .. }) => {
                    return Verdict::Fail(format!("greedy blocked at {stuck_at:?} going from {a:?} to {b:?}"))
                }
                Err(e) => return Verdict::Fail(e.to_string()),
            }
        }
    }
    Verdict::Pass
}

fn check_linkbound(i: &Instance) -> Verdict {
    let Instance::Routes { obstacles, queries, .. } = i else { return mismatch(i) };
    let [poly] = obstacles.as_slice() else { return Verdict::Vacuous("needs exactly one obstacle".into()) };
    for (k, (p, q)) in queries.iter().enumerate() {
        if p == q {
            continue;
        }
        match route_around_convex(p, q, poly) {
            Ok(r) if r.verified && r.links <= 4 => {}
            Ok(r) => return Verdict::Fail(format!("query {k}: {} links, verified {}", r.links, r.verified)),
            Err(Error::InsideObstacle) => return Verdict::Vacuous(format!("query {k} starts inside the obstacle")),
            Err(e) => return Verdict::Fail(format!("query {k}: {e}")),
        }
    }
    Verdict::Pass
}

fn check_carve(i: &Instance) -> Verdict {
    let Instance::Carve { region, body } = i else { return mismatch(i) };
    match carve_check(region, body, &ratio(1, 1)) {
        Ok(r) if r.connected => Verdict::Pass,
        Ok(r) => Verdict::Fail(format!("{} cells remain but are not connected", r.remaining)),
        Err(Error::Hypothesis(why)) => Verdict::Vacuous(why),
        Err(e) => Verdict::Fail(e.to_string()),
    }
}

fn check_multi_route(i: &Instance) -> Verdict {
    let Instance::Routes { obstacles, window, queries } = i else { return mismatch(i) };
    let scene = match window {
        Some(w) => RoutingScene::new(obstacles.clone(), w.clone()),
        None => {
            let pts: Vec<Point> = queries.iter().flat_map(|(p, q)| [p.clone(), q.clone()]).collect();
            RoutingScene::with_auto_window(obstacles.clone(), &pts)
        }
    };
    let scene = match scene {
        Ok(s) => s,
        Err(e) => return Verdict::Vacuous(e.to_string()),
    };
    for (k, (p, q)) in queries.iter().enumerate() {
        match route_multi(&scene, p, q, &ratio(2, 1)) {
            Ok(r) if r.verified && scene.verify_path(&r.path) => {}
            Ok(_) => return Verdict::Fail(format!("query {k}: route failed verification")),
            Err(Error::InsideObstacle | Error::OutsideWindow) => {
                return Verdict::Vacuous(format!("query {k} is not in free space"))
            }
            Err(e) => return Verdict::Fail(format!("query {k}: {e}")),
        }
    }
    Verdict::Pass
}

fn check_obtuse(i: &Instance) -> Verdict {
    let Instance::Polygon(p) = i else { return mismatch(i) };
    if !is_obtuse_body(p) {
        return Verdict::Vacuous("polygon is not obtuse".into());
    }
    if is_staircase_connected_convex(p).passed() {
        Verdict::Pass
    } else {
        Verdict::Fail("obtuse polygon fails the staircase certificate".into())
    }
}

fn check_rotate(i: &Instance) -> Verdict {
    let Instance::Polygon(p) = i else { return mismatch(i) };
    let (q, map) = rotate_to_staircase(p);
    if !map.is_similarity() {
        return Verdict::Fail("rotation map is not a similarity".into());
    }
    if p.vertices().iter().zip(q.vertices()).any(|(v, w)| map.apply(v) != *w) {
        return Verdict::Fail("rotated polygon does not match the map".into());
    }
    if is_staircase_connected_convex(&q).passed() {
        Verdict::Pass
    } else {
        Verdict::Fail("rotated polygon fails the staircase certificate".into())
    }
}

fn check_unimodal(i: &Instance) -> Verdict {
    let Instance::Complex(c) = i else { return mismatch(i) };
    match c.thm_unimodal_check() {
        Ok(k) if k.agree => Verdict::Pass,
        Ok(k) => Verdict::Fail(format!("staircase decision {} but profile unimodality {}", k.lhs, k.rhs)),
        Err(Error::Hypothesis(why)) => Verdict::Vacuous(why),
        Err(e) => Verdict::Vacuous(e.to_string()),
    }
}

fn check_extreme(i: &Instance) -> Verdict {
    let Instance::Polygon(p) = i else { return mismatch(i) };
    let extreme: Vec<Point> = s_extreme_points(p).into_iter().map(|(e, _)| e).collect();
    for (k, v) in p.vertices().iter().enumerate() {
        let Some((hw, vw)) = axis_chords(p, v) else { return Verdict::Fail(format!("vertex {k} outside polygon")) };
        let degenerate = hw.is_zero() || vw.is_zero();
        if degenerate != extreme.contains(v) {
            return Verdict::Fail(format!("vertex {k}: degenerate chord {degenerate}, listed {}", !degenerate));
        }
        if !degenerate {
            match staircase_through(p, k) {
                Some(path) if path.link_count() == 2 && path.vertices()[1] == *v => {}
                _ => return Verdict::Fail(format!("vertex {k}: no 2-link staircase through it")),
            }
        }
        let mid = (v + p.next(k)).scale(&ratio(1, 2));
        match axis_chords(p, &mid) {
            Some((h, w)) if h.is_positive() && w.is_positive() => {}
            _ => return Verdict::Fail(format!("edge {k}: midpoint has a degenerate chord")),
        }
    }
    Verdict::Pass
}

fn check_rect_oracle(i: &Instance) -> Verdict {
    let Instance::Complex(c) = i else { return mismatch(i) };
    let exact = match c.is_staircase_connected_exact() {
        Ok(cert) => cert.passed(),
        Err(Error::ComplexDisconnected) => false,
        Err(e) => return Verdict::Fail(e.to_string()),
    };
    let oracle = c.oracle_counterexample();
    match (exact, oracle) {
        (true, None) | (false, Some(_)) => Verdict::Pass,
        (true, Some((p, q))) => Verdict::Fail(format!("exact accepts but no staircase joins {p:?} and {q:?}")),
        (false, None) => Verdict::Fail("exact rejects but the oracle joins every pair".into()),
    }
}

fn guarded(suite: &Suite, instance: &Instance) -> Verdict {
    match catch_unwind(AssertUnwindSafe(|| (suite.check)(instance))) {
        Ok(v) => v,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            Verdict::Fail(format!("panicked: {msg}"))
        }
    }
}

fn without<T: Clone>(items: &[T], k: usize) -> Vec<T> {
    items.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, v)| v.clone()).collect()
}

fn polygon_smaller(p: &Polygon) -> Vec<Polygon> {
    if p.len() <= 3 {
        return vec![];
    }
    (0..p.len()).filter_map(|k| Polygon::new(without(p.vertices(), k)).ok()).collect()
}

/// Smaller variants, most aggressive first, in a fixed order.
fn candidates(i: &Instance) -> Vec<Instance> {
    match i {
        Instance::Grid(g) => {
            let cells: Vec<_> = g.cells().collect();
            (0..cells.len())
                .filter_map(|k| GridSet::from_cells(without(&cells, k)).ok())
                .map(Instance::Grid)
                .collect()
        }
        Instance::Polygon(p) => polygon_smaller(p).into_iter().map(Instance::Polygon).collect(),
        Instance::Complex(c) => {
            let rects = c.rects();
            (0..rects.len())
                .filter_map(|k| RectComplex::new(without(rects, k)).ok())
                .map(Instance::Complex)
                .collect()
        }
        Instance::Routes { obstacles, window, queries } => {
            let mut out = vec![];
            if queries.len() > 1 {
                for k in 0..queries.len() {
                    out.push(Instance::Routes {
                        obstacles: obstacles.clone(),
                        window: window.clone(),
                        queries: without(queries, k),
                    });
                }
            }
            if obstacles.len() > 1 {
                for k in 0..obstacles.len() {
                    out.push(Instance::Routes {
                        obstacles: without(obstacles, k),
                        window: window.clone(),
                        queries: queries.clone(),
                    });
                }
            }
            for (k, o) in obstacles.iter().enumerate() {
                for smaller in polygon_smaller(o) {
                    let mut obs = obstacles.clone();
                    obs[k] = smaller;
                    out.push(Instance::Routes { obstacles: obs, window: window.clone(), queries: queries.clone() });
                }
            }
            out
        }
        Instance::Carve { region, body } => {
            let mut out: Vec<Instance> = polygon_smaller(body)
                .into_iter()
                .map(|b| Instance::Carve { region: region.clone(), body: b })
                .collect();
            let cells: Vec<_> = region.cells().collect();
            out.extend(
                (0..cells.len())
                    .filter_map(|k| GridSet::from_cells(without(&cells, k)).ok())
                    .map(|r| Instance::Carve { region: r, body: body.clone() }),
            );
            out
        }
    }
}

/// Greedily replaces the instance by the first smaller variant that still
/// fails, until none does or the budget runs out.
pub fn shrink(suite: &Suite, start: Instance, message: String) -> (Instance, String, usize) {
    let (mut current, mut message) = (start, message);
    let mut steps = 0;
    let mut evaluations = 0;
    'outer: loop {
        for c in candidates(&current) {
            evaluations += 1;
            if evaluations > SHRINK_BUDGET {
                break 'outer;
            }
            if let Verdict::Fail(m) = guarded(suite, &c) {
                current = c;
                message = m;
                steps += 1;
                continue 'outer;
            }
        }
        break;
    }
    (current, message, steps)
}

/// The instance as a scene file, ready to feed back to the other commands.
pub fn fragment(i: &Instance) -> SceneFile {
    let mut file = SceneFile::default();
    let name = "counterexample".to_string();
    match i {
        Instance::Grid(g) => {
            file.grids.insert(name, g.clone());
        }
        Instance::Polygon(p) => {
            file.polygons.insert(name, p.clone());
        }
        Instance::Complex(c) => {
            file.complexes.insert(name, c.clone());
        }
        Instance::Routes { obstacles, window, queries } => {
            let names: Vec<String> = (0..obstacles.len()).map(|k| format!("obstacle{k}")).collect();
            for (n, o) in names.iter().zip(obstacles) {
                file.polygons.insert(n.clone(), o.clone());
            }
            file.scenes.insert(name, SceneEntry { window: window.clone(), obstacles: names, queries: queries.clone() });
        }
        Instance::Carve { region, body } => {
            file.grids.insert("region".into(), region.clone());
            file.polygons.insert("body".into(), body.clone());
        }
    }
    file
}

fn case_rng(seed: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64);
    rng
}

pub fn case_instance(suite: &Suite, seed: u64, case: usize) -> Result<Instance, Error> {
    (suite.generate)(&mut case_rng(seed, case))
}

fn run_case(suite: &Suite, seed: u64, case: usize) -> (Verdict, Option<Instance>) {
    match case_instance(suite, seed, case) {
        Ok(instance) => {
            let v = guarded(suite, &instance);
            (v, Some(instance))
        }
        Err(e) => (Verdict::Fail(format!("generator: {e}")), None),
    }
}

pub fn run_suite(name: &str, seed: u64, n: usize, threads: usize) -> Result<Outcome, CliError> {
    let suite = find_suite(name).ok_or_else(|| {
        let known: Vec<_> = SUITES.iter().map(|s| s.name).collect();
        CliError::Usage(format!("unknown suite {name:?}; known suites: {}", known.join(", ")))
    })?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker threads: {e}")))?;
    let results: Vec<(Verdict, Option<Instance>)> =
        pool.install(|| (0..n).into_par_iter().map(|case| run_case(suite, seed, case)).collect());

    let (mut passed, mut vacuous) = (0usize, 0usize);
    let mut vacuous_cases = vec![];
    let mut failures = vec![];
    for (case, (verdict, instance)) in results.into_iter().enumerate() {
        match verdict {
            Verdict::Pass => passed += 1,
            Verdict::Vacuous(why) => {
                vacuous += 1;
                if vacuous_cases.len() < SHRUNK_FAILURES {
                    vacuous_cases.push(json!({"case": case, "reason": why}));
                }
            }
            Verdict::Fail(message) => failures.push((case, message, instance)),
        }
    }
    let failed = failures.len();
    let detailed: Vec<Value> = pool.install(|| {
        failures
            .into_par_iter()
            .enumerate()
            .map(|(k, (case, message, instance))| match instance {
                Some(inst) if k < SHRUNK_FAILURES => {
                    let (small, small_message, steps) = shrink(suite, inst, message.clone());
                    json!({
                        "case": case,
                        "message": message,
                        "shrunk_message": small_message,
                        "shrink_steps": steps,
                        "counterexample": fragment(&small).to_value(),
                    })
                }
                _ => json!({"case": case, "message": message}),
            })
            .collect()
    });
    let report = json!({
        "command": "prop",
        "suite": suite.name,
        "about": suite.about,
        "seed": seed,
        "n": n,
        "passed": passed,
        "vacuous": vacuous,
        "failed": failed,
        "verdict": if failed == 0 { "pass" } else { "fail" },
        "vacuous_cases": vacuous_cases,
        "failures": detailed,
    });
    Ok(Outcome { report, pass: failed == 0, figure: None })
}
