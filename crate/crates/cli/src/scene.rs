//! Scene files: named grids, polygons, rectangle complexes and routing
//! scenes in one JSON document. Rationals are written as strings.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use orthostair::grid::{Cell, GridSet};
use orthostair::rect::RectComplex;
use orthostair::routing::RoutingScene;
use orthostair::{format_rational, parse_rational, Complex, Point, Polygon, Rational, Rectangle, Scene};
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::CliError;

/// A JSON object whose keys must be distinct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
struct UniqueMap<V>(BTreeMap<String, V>);

impl<V> Default for UniqueMap<V> {
    fn default() -> Self {
        UniqueMap(BTreeMap::new())
    }
}

impl<'de, V: Deserialize<'de>> Deserialize<'de> for UniqueMap<V> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct UniqueVisitor<V>(PhantomData<V>);

        impl<'de, V: Deserialize<'de>> Visitor<'de> for UniqueVisitor<V> {
            type Value = UniqueMap<V>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object with unique names")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut map = BTreeMap::new();
                while let Some((key, value)) = access.next_entry::<String, V>()? {
                    if map.contains_key(&key) {
                        return Err(serde::de::Error::custom(format!("duplicate name {key:?}")));
                    }
                    map.insert(key, value);
                }
                Ok(UniqueMap(map))
            }
        }

        deserializer.deserialize_map(UniqueVisitor(PhantomData))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default, skip_serializing_if = "is_empty")]
    grids: UniqueMap<RawGrid>,
    #[serde(default, skip_serializing_if = "is_empty")]
    polygons: UniqueMap<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "is_empty")]
    complexes: UniqueMap<Vec<[String; 4]>>,
    #[serde(default, skip_serializing_if = "is_empty")]
    scenes: UniqueMap<RawScene>,
}

fn is_empty<V>(m: &UniqueMap<V>) -> bool {
    m.0.is_empty()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    origin: [i64; 2],
    rows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    window: Option<[String; 4]>,
    #[serde(default)]
    obstacles: Vec<String>,
    #[serde(default)]
    queries: Vec<[[String; 2]; 2]>,
}

/// Routing scene as written in a file: obstacles refer to polygons by name.
/// Without a window one is fitted around the obstacles and query points.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SceneEntry {
    pub window: Option<Rectangle>,
    pub obstacles: Vec<String>,
    pub queries: Vec<(Point, Point)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SceneFile {
    pub grids: BTreeMap<String, GridSet>,
    pub polygons: BTreeMap<String, Polygon>,
    pub complexes: BTreeMap<String, Complex>,
    pub scenes: BTreeMap<String, SceneEntry>,
}

/// What a name refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Grid,
    Polygon,
    Complex,
    Scene,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            Kind::Grid => "grid",
            Kind::Polygon => "polygon",
            Kind::Complex => "complex",
            Kind::Scene => "scene",
        })
    }
}

fn num(s: &str, at: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

fn point(p: &[String; 2], at: &str) -> Result<Point, CliError> {
    Ok(Point::new(num(&p[0], at)?, num(&p[1], at)?))
}

fn rect(r: &[String; 4], at: &str) -> Result<Rectangle, CliError> {
    let [x0, y0, x1, y1] = [num(&r[0], at)?, num(&r[1], at)?, num(&r[2], at)?, num(&r[3], at)?];
    Rectangle::new(x0, y0, x1, y1).ok_or_else(|| CliError::Parse(format!("{at}: rectangle min exceeds max")))
}

fn text_point(p: &Point) -> [String; 2] {
    [format_rational(&p.x), format_rational(&p.y)]
}

fn text_rect(r: &Rectangle) -> [String; 4] {
    [format_rational(&r.xmin), format_rational(&r.ymin), format_rational(&r.xmax), format_rational(&r.ymax)]
}

impl SceneFile {
    pub fn parse(text: &str) -> Result<SceneFile, CliError> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let mut seen = std::collections::BTreeSet::new();
        let names = raw.grids.0.keys().chain(raw.polygons.0.keys()).chain(raw.complexes.0.keys()).chain(raw.scenes.0.keys());
        for name in names {
            if !seen.insert(name) {
                return Err(CliError::Parse(format!("name {name:?} is used in two sections")));
            }
        }
        let mut file = SceneFile::default();
        for (name, g) in raw.grids.0 {
            let grid = GridSet::from_rows(Cell::new(g.origin[0], g.origin[1]), &g.rows)
                .map_err(|e| CliError::Parse(format!("grid {name:?}: {e}")))?;
            file.grids.insert(name, grid);
        }
        for (name, vs) in raw.polygons.0 {
            let at = format!("polygon {name:?}");
            let pts = vs.iter().map(|v| point(v, &at)).collect::<Result<Vec<_>, _>>()?;
            let poly = Polygon::new(pts).map_err(|e| CliError::Parse(format!("{at}: {e}")))?;
            file.polygons.insert(name, poly);
        }
        for (name, rs) in raw.complexes.0 {
            let at = format!("complex {name:?}");
            let rects = rs.iter().map(|r| rect(r, &at)).collect::<Result<Vec<_>, _>>()?;
            let complex = RectComplex::new(rects).map_err(|e| CliError::Parse(format!("{at}: {e}")))?;
            file.complexes.insert(name, complex);
        }
        for (name, s) in raw.scenes.0 {
            let at = format!("scene {name:?}");
            let window = s.window.as_ref().map(|w| rect(w, &at)).transpose()?;
            for o in &s.obstacles {
                if !file.polygons.contains_key(o) {
                    return Err(CliError::Parse(format!("{at}: unknown obstacle polygon {o:?}")));
                }
            }
            let queries =
                s.queries.iter().map(|[p, q]| Ok((point(p, &at)?, point(q, &at)?))).collect::<Result<Vec<_>, CliError>>()?;
            file.scenes.insert(name, SceneEntry { window, obstacles: s.obstacles, queries });
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        let raw = RawFile {
            grids: UniqueMap(
                self.grids
                    .iter()
                    .map(|(k, g)| (k.clone(), RawGrid { origin: [g.origin().col, g.origin().row], rows: g.to_rows() }))
                    .collect(),
            ),
            polygons: UniqueMap(
                self.polygons.iter().map(|(k, p)| (k.clone(), p.vertices().iter().map(text_point).collect())).collect(),
            ),
            complexes: UniqueMap(
                self.complexes.iter().map(|(k, c)| (k.clone(), c.rects().iter().map(text_rect).collect())).collect(),
            ),
            scenes: UniqueMap(
                self.scenes
                    .iter()
                    .map(|(k, s)| {
                        let raw = RawScene {
                            window: s.window.as_ref().map(text_rect),
                            obstacles: s.obstacles.clone(),
                            queries: s.queries.iter().map(|(p, q)| [text_point(p), text_point(q)]).collect(),
                        };
                        (k.clone(), raw)
                    })
                    .collect(),
            ),
        };
        serde_json::to_string_pretty(&raw).expect("scene data serializes")
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::from_str(&self.to_json()).expect("own output parses")
    }

    pub fn kind_of(&self, name: &str) -> Option<Kind> {
        if self.grids.contains_key(name) {
            Some(Kind::Grid)
        } else if self.polygons.contains_key(name) {
            Some(Kind::Polygon)
        } else if self.complexes.contains_key(name) {
            Some(Kind::Complex)
        } else if self.scenes.contains_key(name) {
            Some(Kind::Scene)
        } else {
            None
        }
    }

    fn expect_kind(&self, name: &str, want: Kind) -> Result<(), CliError> {
        match self.kind_of(name) {
            None => Err(CliError::Usage(format!("no target named {name:?}"))),
            Some(k) if k != want => Err(CliError::Usage(format!("{name:?} is a {k}, expected a {want}"))),
            Some(_) => Ok(()),
        }
    }

    pub fn grid(&self, name: &str) -> Result<&GridSet, CliError> {
        self.expect_kind(name, Kind::Grid)?;
        Ok(&self.grids[name])
    }

    pub fn polygon(&self, name: &str) -> Result<&Polygon, CliError> {
        self.expect_kind(name, Kind::Polygon)?;
        Ok(&self.polygons[name])
    }

    pub fn complex(&self, name: &str) -> Result<&Complex, CliError> {
        self.expect_kind(name, Kind::Complex)?;
        Ok(&self.complexes[name])
    }

    pub fn scene(&self, name: &str) -> Result<&SceneEntry, CliError> {
        self.expect_kind(name, Kind::Scene)?;
        Ok(&self.scenes[name])
    }

    /// Builds the routing scene, fitting a window when none is given.
    pub fn routing_scene(&self, name: &str) -> Result<Scene, CliError> {
        let entry = self.scene(name)?;
        let obstacles: Vec<Polygon> = entry.obstacles.iter().map(|o| self.polygons[o].clone()).collect();
        let built = match &entry.window {
            Some(w) => RoutingScene::new(obstacles, w.clone()),
            None => {
                let points: Vec<Point> = entry.queries.iter().flat_map(|(p, q)| [p.clone(), q.clone()]).collect();
                RoutingScene::with_auto_window(obstacles, &points)
            }
        };
        built.map_err(|e| CliError::Parse(format!("scene {name:?}: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r####"{
        "grids": {"plus": {"origin": [0, 0], "rows": [".#.", "###", ".#."]}},
        "polygons": {"tri": [["0", "0"], ["4", "0"], ["0", "1/2"]]},
        "complexes": {"tent": [["0", "0", "2", "1"], ["-0.5", "0", "0", "0"]]},
        "scenes": {"one": {"obstacles": ["tri"], "queries": [[["-1", "0"], ["5", "1"]]]}}
    }"####;

    #[test]
    fn parses_and_round_trips() {
        let file = SceneFile::parse(SAMPLE).unwrap();
        assert_eq!(file.grids["plus"].len(), 5);
        assert_eq!(file.polygons["tri"].len(), 3);
        assert_eq!(file.complexes["tent"].rects().len(), 2);
        assert_eq!(file.scenes["one"].queries.len(), 1);
        let again = SceneFile::parse(&file.to_json()).unwrap();
        assert_eq!(file, again);
        assert_eq!(again.to_json(), file.to_json());
    }

    #[test]
    fn rejects_bad_documents() {
        let dup = r#"{"polygons": {"a": [["0","0"],["1","0"],["0","1"]], "a": [["0","0"],["1","0"],["0","1"]]}}"#;
        assert!(matches!(SceneFile::parse(dup), Err(CliError::Parse(m)) if m.contains("duplicate")));
        assert!(SceneFile::parse(r#"{"shapes": {}}"#).is_err());
        let shared = r##"{"grids": {"a": {"origin": [0, 0], "rows": ["#"]}}, "complexes": {"a": [["0","0","1","1"]]}}"##;
        assert!(matches!(SceneFile::parse(shared), Err(CliError::Parse(m)) if m.contains("two sections")));
        assert!(SceneFile::parse(r##"{"grids": {"g": {"origin": [0, 0], "rows": ["#"], "size": 1}}}"##).is_err());
        assert!(SceneFile::parse(r#"{"polygons": {"p": [["0","0"],["1","x"],["0","1"]]}}"#).is_err());
        assert!(SceneFile::parse(r#"{"scenes": {"s": {"obstacles": ["missing"]}}}"#).is_err());
    }

    #[test]
    fn kind_checks() {
        let file = SceneFile::parse(SAMPLE).unwrap();
        assert_eq!(file.kind_of("tent"), Some(Kind::Complex));
        assert!(matches!(file.polygon("plus"), Err(CliError::Usage(m)) if m.contains("expected a polygon")));
        assert!(matches!(file.grid("nope"), Err(CliError::Usage(_))));
        assert!(file.routing_scene("one").is_ok());
    }
}
