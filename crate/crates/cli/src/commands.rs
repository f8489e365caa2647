//! One function per subcommand. Each returns an [`Outcome`] whose report
//! carries the verdict together with its certificate or witness.

use orthostair::convex::{
    alpha_class, axis_chords, cone_contains_axis_dir, is_obtuse_body, is_staircase_connected_convex,
    non_obtuse_vertices, rotate_to_staircase, s_extreme_points, staircase_through, AlphaClass, ConvexCertificate,
};
use orthostair::grid::{rasterize_convex, Cell, GreedyOutcome, GridSet};
use orthostair::rect::{ConvexityViolation, StaircaseCertificate};
use orthostair::routing::{rasterize_free_space, route_around_convex, route_multi, RouteResult, MAX_REFINEMENTS};
use orthostair::{format_rational, parse_rational, Complex, Error, OrthoPath, Point, Polygon, Rational, Scalar};
use num_traits::Signed;
use serde_json::{json, Value};

use crate::svg::Figure;
use crate::{Analysis, CliError, Kind, Outcome, SceneFile};

pub fn point_json(p: &Point) -> Value {
    json!([format_rational(&p.x), format_rational(&p.y)])
}

pub fn cell_json(c: Cell) -> Value {
    json!([c.col, c.row])
}

pub fn path_json(path: &OrthoPath<Rational>) -> Value {
    Value::Array(path.vertices().iter().map(point_json).collect())
}

fn grid_path_json(path: &OrthoPath<i64>) -> Value {
    Value::Array(path.vertices().iter().map(|p| json!([p.x, p.y])).collect())
}

pub fn polygon_json(poly: &Polygon) -> Value {
    Value::Array(poly.vertices().iter().map(point_json).collect())
}

fn f(p: &Point) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn positive(text: &str) -> Result<Rational, CliError> {
    let v = parse_rational(text).map_err(|e| CliError::Usage(e.to_string()))?;
    if !v.is_positive() {
        return Err(CliError::Usage("cell size must be positive".into()));
    }
    Ok(v)
}

fn core_usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn violation_json(v: &ConvexityViolation<Rational>) -> Value {
    json!({"axis": format!("{:?}", v.axis).to_lowercase(), "from": point_json(&v.from), "to": point_json(&v.to)})
}

fn grid_figure(g: &GridSet) -> Figure {
    let mut fig = Figure::new();
    fig.grid(g, 1.0, (0.0, 0.0), "cell");
    fig
}

fn complex_figure(c: &Complex) -> Figure {
    let mut fig = Figure::new();
    for r in c.rects() {
        fig.rect(r, "shape");
    }
    fig
}

fn polygon_figure(p: &Polygon) -> Figure {
    let mut fig = Figure::new();
    fig.polygon(p, "shape");
    fig
}

fn cell_center(c: Cell) -> (f64, f64) {
    (c.col as f64 + 0.5, c.row as f64 + 0.5)
}

fn grid_staircase(g: &GridSet) -> (bool, Value, Option<(Cell, Cell)>) {
    let connected = g.is_orthogonally_connected();
    let gap = g.convexity_gap();
    let pass = connected && gap.is_none();
    let mut cert = json!({"orthogonally_connected": connected, "orthogonally_convex": gap.is_none()});
    if let Some((a, b)) = gap {
        cert["convexity_gap"] = json!([cell_json(a), cell_json(b)]);
    }
    let mut pair = None;
    if !pass {
        if let Some((a, b)) = g.monotone_counterexample() {
            cert["no_staircase_between"] = json!([cell_json(a), cell_json(b)]);
            if let Ok(GreedyOutcome::Blocked { stuck_at, gap, .. }) = g.greedy_staircase(a, b) {
                cert["greedy_blocked"] = json!({"at": cell_json(stuck_at), "missing": cell_json(gap)});
            }
            pair = Some((a, b));
        }
    }
    (pass, cert, pair)
}

pub fn check(file: &SceneFile, target: &str, analysis: Analysis) -> Result<Outcome, CliError> {
    let kind = file.kind_of(target).ok_or_else(|| CliError::Usage(format!("no target named {target:?}")))?;
    let mismatch = |want: &str| CliError::Usage(format!("analysis {analysis:?} needs a {want}, but {target:?} is a {kind}"));
    let (pass, certificate, figure) = match (analysis, kind) {
        (Analysis::Staircase, Kind::Grid) => {
            let g = file.grid(target)?;
            let (pass, cert, pair) = grid_staircase(g);
            let mut fig = grid_figure(g);
            if let Some((a, b)) = pair {
                fig.marker(cell_center(a), "mark");
                fig.marker(cell_center(b), "mark");
            }
            (pass, cert, fig)
        }
        (Analysis::Staircase, _) => return Err(mismatch("grid")),
        (Analysis::OrthogonalConvexity, Kind::Grid) => {
            let g = file.grid(target)?;
            let gap = g.convexity_gap();
            let cert = json!({"gap": gap.map(|(a, b)| json!([cell_json(a), cell_json(b)]))});
            (gap.is_none(), cert, grid_figure(g))
        }
        (Analysis::OrthogonalConvexity, Kind::Complex) => {
            let c = file.complex(target)?;
            let v = c.orthogonal_convexity_violation();
            (v.is_none(), json!({"violation": v.as_ref().map(violation_json)}), complex_figure(c))
        }
        (Analysis::OrthogonalConnectivity, Kind::Grid) => {
            let g = file.grid(target)?;
            let cells: Vec<Cell> = g.cells().collect();
            let apart = cells.iter().find(|&&b| g.s_distance(cells[0], b).ok().flatten().is_none());
            let cert = json!({"unreachable_pair": apart.map(|&b| json!([cell_json(cells[0]), cell_json(b)]))});
            (apart.is_none(), cert, grid_figure(g))
        }
        (Analysis::OrthogonalConnectivity, Kind::Complex) => {
            let c = file.complex(target)?;
            (c.is_connected(), json!({"connected": c.is_connected()}), complex_figure(c))
        }
        (Analysis::OrthogonalConvexity | Analysis::OrthogonalConnectivity, _) => {
            return Err(mismatch("grid or complex"))
        }
        (Analysis::StaircaseExact, Kind::Complex) => {
            let c = file.complex(target)?;
            let cert = c.is_staircase_connected_exact().map_err(core_usage)?;
            let mut fig = complex_figure(c);
            let mut body = match &cert {
                StaircaseCertificate::Pass => json!({"reason": "orthogonally convex with positive widths"}),
                StaircaseCertificate::NotOrthogonallyConvex(v) => {
                    json!({"reason": "not orthogonally convex", "violation": violation_json(v)})
                }
                StaircaseCertificate::ZeroWidth { point } => {
                    fig.marker(f(point), "mark");
                    json!({"reason": "both widths vanish", "point": point_json(point)})
                }
                StaircaseCertificate::PieceZeroWidth { cut, piece, point } => {
                    fig.marker(f(point), "mark");
                    json!({"reason": "both widths vanish in a piece", "cut": point_json(cut), "piece": piece, "point": point_json(point)})
                }
            };
            if let Some((p, q)) = c.oracle_counterexample() {
                body["no_staircase_between"] = json!([point_json(&p), point_json(&q)]);
            }
            let cuts = c.cut_structures().map_err(core_usage)?;
            body["cut_points"] =
                Value::Array(cuts.iter().map(|k| json!({"point": point_json(&k.point), "pieces": k.piece_count()})).collect());
            (cert.passed(), body, fig)
        }
        (Analysis::StaircaseExact, _) => return Err(mismatch("complex")),
        (Analysis::StaircaseConvex, Kind::Polygon) => {
            let p = file.polygon(target)?;
            let mut fig = polygon_figure(p);
            let dirs: Vec<Value> = (0..p.len())
                .map(|i| {
                    let ds = cone_contains_axis_dir(p, i).expect("vertex index in range");
                    Value::Array(ds.iter().map(|d| json!(d.letter().to_string())).collect())
                })
                .collect();
            match is_staircase_connected_convex(p) {
                ConvexCertificate::Pass => (true, json!({"axis_directions_per_vertex": dirs}), fig),
                ConvexCertificate::Violation { vertex, point } => {
                    fig.marker(f(&point), "mark");
                    let (hw, vw) = axis_chords(p, &point).expect("vertex lies in polygon");
                    let cert = json!({
                        "vertex": vertex,
                        "point": point_json(&point),
                        "hw": format_rational(&hw),
                        "vw": format_rational(&vw),
                        "axis_directions_per_vertex": dirs,
                    });
                    (false, cert, fig)
                }
            }
        }
        (Analysis::StaircaseConvex, _) => return Err(mismatch("polygon")),
        (Analysis::Obtuse, Kind::Polygon) => {
            let p = file.polygon(target)?;
            let classes: Vec<Value> = p
                .vertices()
                .iter()
                .map(|v| json!(class_name(alpha_class(p, v).expect("vertex on boundary"))))
                .collect();
            let bad = non_obtuse_vertices(p)
                .into_iter()
                .filter(|&i| alpha_class(p, p.vertex(i)).ok() == Some(AlphaClass::Acute))
                .collect::<Vec<_>>();
            let cert = json!({"vertex_classes": classes, "acute_vertices": bad});
            (is_obtuse_body(p), cert, polygon_figure(p))
        }
        (Analysis::Obtuse, _) => return Err(mismatch("polygon")),
        (Analysis::Unimodal, Kind::Complex) => {
            let c = file.complex(target)?;
            let check = c.thm_unimodal_check().map_err(core_usage)?;
            let cert = json!({"staircase_connected": check.lhs, "profiles_unimodal": check.rhs, "agree": check.agree});
            (check.agree, cert, complex_figure(c))
        }
        (Analysis::Unimodal, _) => return Err(mismatch("complex")),
        (Analysis::Holes, Kind::Grid) => {
            let g = file.grid(target)?;
            let holes = g.bounded_complement_components(1);
            (holes == 0, json!({"bounded_complement_components": holes}), grid_figure(g))
        }
        (Analysis::Holes, _) => return Err(mismatch("grid")),
    };
    let analysis_name = clap::ValueEnum::to_possible_value(&analysis).expect("named").get_name().to_string();
    let report = json!({
        "command": "check",
        "target": target,
        "kind": kind.to_string(),
        "analysis": analysis_name,
        "verdict": verdict(pass),
        "certificate": certificate,
    });
    Ok(Outcome { report, pass, figure: Some(figure) })
}

fn class_name(c: AlphaClass) -> &'static str {
    match c {
        AlphaClass::Acute => "acute",
        AlphaClass::Right => "right",
        AlphaClass::ObtuseAngle => "obtuse",
        AlphaClass::Flat => "flat",
    }
}

pub fn distance(file: &SceneFile, grid: &str, a: Cell, b: Cell) -> Result<Outcome, CliError> {
    let g = file.grid(grid)?;
    let found = g.s_distance(a, b).map_err(core_usage)?;
    let mut fig = grid_figure(g);
    fig.marker(cell_center(a), "mark");
    fig.marker(cell_center(b), "mark");
    let base = json!({"command": "distance", "grid": grid, "from": cell_json(a), "to": cell_json(b)});
    let mut report = base;
    let pass = match found {
        Some(lp) => {
            let pts: Vec<_> = lp.path.vertices().iter().map(|p| (p.x as f64 + 0.5, p.y as f64 + 0.5)).collect();
            fig.path(&pts, "route");
            report["verdict"] = json!("reachable");
            report["links"] = json!(lp.links);
            report["witness"] = grid_path_json(&lp.path);
            true
        }
        None => {
            report["verdict"] = json!("unreachable");
            report["links"] = Value::Null;
            false
        }
    };
    Ok(Outcome { report, pass, figure: Some(fig) })
}

fn route_json(r: &RouteResult<Rational>) -> Value {
    json!({
        "path": path_json(&r.path),
        "links": r.links,
        "verified": r.verified,
        "case": r.case_tag.as_str(),
        "refinements": r.refinements,
    })
}

pub fn route(file: &SceneFile, scene: &str, query: usize, cell_size: &str) -> Result<Outcome, CliError> {
    let entry = file.scene(scene)?;
    let (p, q) = entry.queries.get(query).cloned().ok_or_else(|| {
        CliError::Usage(format!("scene {scene:?} has {} queries, index {query} is out of range", entry.queries.len()))
    })?;
    let built = file.routing_scene(scene)?;
    built.check_query_point(&p).map_err(core_usage)?;
    built.check_query_point(&q).map_err(core_usage)?;
    let size = positive(cell_size)?;
    let mut fig = Figure::new();
    fig.rect(built.window(), "frame");
    for o in built.obstacles() {
        fig.polygon(o, "obstacle");
    }
    fig.marker(f(&p), "mark");
    fig.marker(f(&q), "mark");
    let mut report = json!({
        "command": "route",
        "scene": scene,
        "query": query,
        "from": point_json(&p),
        "to": point_json(&q),
        "obstacles": built.obstacles().len(),
    });
    let result = if built.obstacles().len() == 1 && p != q {
        report["method"] = json!("single-convex");
        route_around_convex(&p, &q, &built.obstacles()[0])
    } else {
        report["method"] = json!("line-grid");
        report["cell_size"] = json!(format_rational(&size));
        route_multi(&built, &p, &q, &size)
    };
    let pass = match result {
        Ok(r) => {
            let pts: Vec<_> = r.path.vertices().iter().map(f).collect();
            fig.path(&pts, "route");
            report["verdict"] = json!(verdict(r.verified));
            report["route"] = route_json(&r);
            r.verified
        }
        Err(Error::ResolutionExhausted { refinements, finest }) => {
            let mut tried = vec![];
            let mut s = size.clone();
            for _ in 0..=MAX_REFINEMENTS {
                tried.push(json!(format_rational(&s)));
                s *= Rational::half();
            }
            report["verdict"] = json!("fail");
            report["refinement_trace"] = json!({"refinements": refinements, "finest": finest, "cell_sizes": tried});
            false
        }
        Err(e) => return Err(core_usage(e)),
    };
    Ok(Outcome { report, pass, figure: Some(fig) })
}

pub fn rotate(file: &SceneFile, target: &str) -> Result<Outcome, CliError> {
    let p = file.polygon(target)?;
    let before = is_staircase_connected_convex(p).passed();
    let (q, map) = rotate_to_staircase(p);
    let after = is_staircase_connected_convex(&q).passed();
    let t = map.to_tuple();
    let mut fig = polygon_figure(&q);
    if !map.is_identity() {
        fig.polygon(p, "obstacle");
    }
    let report = json!({
        "command": "rotate",
        "target": target,
        "verdict": verdict(after),
        "staircase_before": before,
        "staircase_after": after,
        "map": {
            "matrix": [[format_rational(&t[0]), format_rational(&t[1])], [format_rational(&t[2]), format_rational(&t[3])]],
            "translation": [format_rational(&t[4]), format_rational(&t[5])],
            "identity": map.is_identity(),
            "scale_squared": format_rational(&map.scale_squared()),
        },
        "polygon": polygon_json(&q),
    });
    Ok(Outcome { report, pass: after, figure: Some(fig) })
}

pub fn extreme(file: &SceneFile, target: &str) -> Result<Outcome, CliError> {
    let p = file.polygon(target)?;
    let mut fig = polygon_figure(p);
    let points = s_extreme_points(p);
    let mut pass = true;
    let listed: Vec<Value> = points
        .iter()
        .map(|(e, reason)| {
            fig.marker(f(e), "extreme");
            json!({"point": point_json(e), "reason": reason.as_str()})
        })
        .collect();
    let mut staircases = vec![];
    for (i, v) in p.vertices().iter().enumerate() {
        if points.iter().any(|(e, _)| e == v) {
            continue;
        }
        match staircase_through(p, i) {
            Some(path) => {
                let pts: Vec<_> = path.vertices().iter().map(f).collect();
                fig.path(&pts, "route");
                staircases.push(json!({"vertex": i, "staircase": path_json(&path)}));
            }
            None => {
                pass = false;
                staircases.push(json!({"vertex": i, "staircase": Value::Null}));
            }
        }
    }
    let report = json!({
        "command": "extreme",
        "target": target,
        "verdict": verdict(pass),
        "extreme_points": listed,
        "interior_vertex_staircases": staircases,
    });
    Ok(Outcome { report, pass, figure: Some(fig) })
}

pub fn profile(file: &SceneFile, target: &str) -> Result<Outcome, CliError> {
    let c = file.complex(target)?;
    let prof = c.associated_profiles().map_err(core_usage)?;
    let plus_unimodal = prof.f_plus.is_unimodal();
    let minus_unimodal = prof.f_minus.negate().is_unimodal();
    let mut report = json!({
        "command": "profile",
        "target": target,
        "normal": prof.normal,
        "vertically_convex": prof.vertically_convex,
        "f_plus_unimodal": plus_unimodal,
        "neg_f_minus_unimodal": minus_unimodal,
        "f_plus_csv": prof.f_plus.to_csv(),
        "f_minus_csv": prof.f_minus.to_csv(),
    });
    let pass = match c.thm_unimodal_check() {
        Ok(check) => {
            report["theorem_check"] = json!({"staircase_connected": check.lhs, "profiles_unimodal": check.rhs, "agree": check.agree});
            check.agree
        }
        Err(Error::Hypothesis(why)) => {
            report["theorem_check"] = json!({"applies": false, "reason": why});
            true
        }
        Err(e) => return Err(core_usage(e)),
    };
    report["verdict"] = json!(verdict(pass));
    let mut fig = complex_figure(c);
    let step_path = |sf: &orthostair::rect::StepFunction<Rational>| {
        let b = sf.breakpoints();
        let mut pts = vec![];
        for (k, v) in sf.values().iter().enumerate() {
            pts.push((b[k].to_f64(), v.to_f64()));
            pts.push((b[k + 1].to_f64(), v.to_f64()));
        }
        pts
    };
    fig.path(&step_path(&prof.f_plus), "route");
    fig.path(&step_path(&prof.f_minus), "route");
    Ok(Outcome { report, pass, figure: Some(fig) })
}

pub fn rasterize(file: &SceneFile, target: &str, cell_size: &str) -> Result<Outcome, CliError> {
    let size = positive(cell_size)?;
    let (g, mut fig, origin) = match file.kind_of(target) {
        Some(Kind::Polygon) => {
            let p = file.polygon(target)?;
            let g = rasterize_convex(p, &size).map_err(core_usage)?;
            (g, Figure::new(), (0.0, 0.0))
        }
        Some(Kind::Scene) => {
            let s = file.routing_scene(target)?;
            let g = rasterize_free_space(&s, &size).map_err(core_usage)?;
            let w = s.window();
            (g, Figure::new(), (w.xmin.to_f64(), w.ymin.to_f64()))
        }
        Some(k) => return Err(CliError::Usage(format!("rasterize needs a polygon or scene, but {target:?} is a {k}"))),
        None => return Err(CliError::Usage(format!("no target named {target:?}"))),
    };
    fig.grid(&g, size.to_f64(), origin, "cell");
    if let Some(Kind::Polygon) = file.kind_of(target) {
        fig.polygon(file.polygon(target)?, "frame");
    }
    let report = json!({
        "command": "rasterize",
        "target": target,
        "cell_size": format_rational(&size),
        "grid": {"origin": cell_json(g.origin()), "rows": g.to_rows()},
        "cells": g.len(),
        "orthogonally_connected": g.is_orthogonally_connected(),
        "orthogonally_convex": g.is_orthogonally_convex(),
        "staircase_connected": g.is_staircase_connected(),
    });
    Ok(Outcome { report, pass: true, figure: Some(fig) })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FILE: &str = r#####"{
        "grids": {
            "plus": {"origin": [0, 0], "rows": [".#.", "###", ".#."]},
            "u": {"origin": [0, 0], "rows": ["#.#", "###"]},
            "full": {"origin": [0, 0], "rows": ["####", "####", "####"]},
            "pair": {"origin": [0, 0], "rows": ["#.", ".#"]}
        },
        "polygons": {
            "thin_tri": [["0", "0"], ["10", "1"], ["9", "3"]],
            "square": [["0", "0"], ["2", "0"], ["2", "2"], ["0", "2"]],
            "diamond": [["0", "-1"], ["1", "0"], ["0", "1"], ["-1", "0"]]
        },
        "complexes": {
            "tent": [["0", "0", "1", "1"], ["1", "0", "2", "2"], ["2", "0", "3", "1"], ["-1", "1", "0", "1"], ["3", "1", "4", "1"]]
        },
        "scenes": {
            "one": {"obstacles": ["square"], "queries": [[["-1", "1"], ["3", "1"]]]},
            "empty": {"window": ["0", "0", "10", "10"], "queries": [[["1", "1"], ["7", "5"]]]}
        }
    }"#####;

    fn file() -> SceneFile {
        SceneFile::parse(FILE).unwrap()
    }

    #[test]
    fn check_examples() {
        assert!(check(&file(), "plus", Analysis::Staircase).unwrap().pass);
        let o = check(&file(), "thin_tri", Analysis::StaircaseConvex).unwrap();
        assert!(!o.pass);
        assert!(o.report["certificate"]["vertex"].is_number());
        assert!(matches!(check(&file(), "missing", Analysis::Staircase), Err(CliError::Usage(_))));
        let err = check(&file(), "square", Analysis::Staircase).unwrap_err();
        assert!(err.to_string().contains("needs a grid"));
        let u = check(&file(), "u", Analysis::Staircase).unwrap();
        assert!(!u.pass);
        assert!(u.report["certificate"]["greedy_blocked"].is_object());
    }

    #[test]
    fn distance_examples() {
        let full = distance(&file(), "full", Cell::new(0, 0), Cell::new(3, 2)).unwrap();
        assert_eq!(full.report["links"], 2);
        let u = distance(&file(), "u", Cell::new(0, 1), Cell::new(2, 1)).unwrap();
        assert_eq!(u.report["links"], 3);
        let pair = distance(&file(), "pair", Cell::new(0, 1), Cell::new(1, 0)).unwrap();
        assert!(!pair.pass);
        assert_eq!(pair.report["verdict"], "unreachable");
    }

    #[test]
    fn route_examples() {
        let one = route(&file(), "one", 0, "1").unwrap();
        assert!(one.pass);
        assert!(one.report["route"]["links"].as_u64().unwrap() <= 4);
        let empty = route(&file(), "empty", 0, "1").unwrap();
        assert!(empty.report["route"]["links"].as_u64().unwrap() <= 2);
        assert!(matches!(route(&file(), "one", 3, "1"), Err(CliError::Usage(_))));
    }

    #[test]
    fn polygon_and_profile_examples() {
        let e = extreme(&file(), "diamond").unwrap();
        assert_eq!(e.report["extreme_points"].as_array().unwrap().len(), 4);
        let r = rotate(&file(), "square").unwrap();
        assert_eq!(r.report["map"]["identity"], true);
        let p = profile(&file(), "tent").unwrap();
        assert_eq!(p.report["f_plus_unimodal"], true);
        assert_eq!(p.report["neg_f_minus_unimodal"], true);
        assert!(matches!(profile(&file(), "square"), Err(CliError::Usage(_))));
        assert!(matches!(rotate(&file(), "tent"), Err(CliError::Usage(_))));
    }

    #[test]
    fn rasterize_examples() {
        let r = rasterize(&file(), "square", "1").unwrap();
        assert_eq!(r.report["cells"], 4);
        assert!(rasterize(&file(), "square", "0").is_err());
        assert!(rasterize(&file(), "one", "1").unwrap().report["cells"].as_u64().unwrap() > 0);
    }
}
