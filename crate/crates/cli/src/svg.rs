//! Minimal SVG figures. World coordinates are drawn with the y axis
//! flipped so that north points up on screen.

use std::fmt::Write;

use orthostair::grid::GridSet;
use orthostair::{Point, Polygon, Rectangle, Scalar};

#[derive(Clone, Debug, Default)]
pub struct Figure {
    body: Vec<String>,
    lo: Option<(f64, f64)>,
    hi: Option<(f64, f64)>,
}

fn xy(p: &Point) -> (f64, f64) {
    (p.x.to_f64(), p.y.to_f64())
}

fn n(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

impl Figure {
    pub fn new() -> Self {
        Self::default()
    }

    fn extend(&mut self, (x, y): (f64, f64)) {
        self.lo = Some(self.lo.map_or((x, y), |(a, b)| (a.min(x), b.min(y))));
        self.hi = Some(self.hi.map_or((x, y), |(a, b)| (a.max(x), b.max(y))));
    }

    fn points_attr(&mut self, pts: &[(f64, f64)]) -> String {
        pts.iter()
            .map(|&(x, y)| {
                self.extend((x, y));
                format!("{},{}", n(x), n(-y))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn polygon(&mut self, poly: &Polygon, class: &str) {
        let pts: Vec<_> = poly.vertices().iter().map(xy).collect();
        let attr = self.points_attr(&pts);
        self.body.push(format!(r#"<polygon class="{class}" points="{attr}"/>"#));
    }

    pub fn rect(&mut self, r: &Rectangle, class: &str) {
        let (x0, y0, x1, y1) = (r.xmin.to_f64(), r.ymin.to_f64(), r.xmax.to_f64(), r.ymax.to_f64());
        if x0 == x1 || y0 == y1 {
            let attr = self.points_attr(&[(x0, y0), (x1, y1)]);
            self.body.push(format!(r#"<polyline class="{class} degenerate" points="{attr}"/>"#));
            return;
        }
        self.extend((x0, y0));
        self.extend((x1, y1));
        self.body.push(format!(
            r#"<rect class="{class}" x="{}" y="{}" width="{}" height="{}"/>"#,
            n(x0),
            n(-y1),
            n(x1 - x0),
            n(y1 - y0)
        ));
    }

    /// Cells drawn as unit squares scaled by `cell_size`, offset by `origin`.
    pub fn grid(&mut self, g: &GridSet, cell_size: f64, origin: (f64, f64), class: &str) {
        for c in g.cells() {
            let (x0, y0) = (origin.0 + c.col as f64 * cell_size, origin.1 + c.row as f64 * cell_size);
            self.extend((x0, y0));
            self.extend((x0 + cell_size, y0 + cell_size));
            self.body.push(format!(
                r#"<rect class="{class}" x="{}" y="{}" width="{}" height="{}"/>"#,
                n(x0),
                n(-(y0 + cell_size)),
                n(cell_size),
                n(cell_size)
            ));
        }
    }

    pub fn path(&mut self, pts: &[(f64, f64)], class: &str) {
        let attr = self.points_attr(pts);
        self.body.push(format!(r#"<polyline class="{class}" points="{attr}"/>"#));
    }

    pub fn marker(&mut self, p: (f64, f64), class: &str) {
        self.extend(p);
        self.body.push(format!(r#"<circle class="{class}" cx="{}" cy="{}" r="0.15"/>"#, n(p.0), n(-p.1)));
    }

    pub fn render(&self) -> String {
        let (lo, hi) = (self.lo.unwrap_or((0.0, 0.0)), self.hi.unwrap_or((1.0, 1.0)));
        let pad = ((hi.0 - lo.0).max(hi.1 - lo.1) * 0.05).max(0.5);
        let (x, y) = (lo.0 - pad, -hi.1 - pad);
        let (w, h) = (hi.0 - lo.0 + 2.0 * pad, hi.1 - lo.1 + 2.0 * pad);
        let mut out = String::new();
        writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(out, "<!-- y axis flipped: screen (x, y) shows world (x, -y) -->").unwrap();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="600" height="{}">"#,
            n(x),
            n(y),
            n(w),
            n(h),
            n(600.0 * h / w)
        )
        .unwrap();
        writeln!(
            out,
            "<style>* {{ vector-effect: non-scaling-stroke; stroke-width: 1.5; }} \
             .shape {{ fill: #cfe3f7; stroke: #2b6cb0; }} .obstacle {{ fill: #e2e8f0; stroke: #4a5568; }} \
             .cell {{ fill: #c6f6d5; stroke: #2f855a; }} .removed {{ fill: #fed7d7; stroke: #c53030; }} \
             .degenerate {{ fill: none; stroke: #2b6cb0; stroke-width: 3; }} .route {{ fill: none; stroke: #d53f8c; }} \
             .frame {{ fill: none; stroke: #a0aec0; }} .mark {{ fill: #d53f8c; }} .extreme {{ fill: #c05621; }}</style>"
        )
        .unwrap();
        for line in &self.body {
            writeln!(out, "  {line}").unwrap();
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthostair::ratio;

    #[test]
    fn flips_y_and_notes_it() {
        let mut f = Figure::new();
        let sq = Polygon::rectangle(ratio(0, 1), ratio(0, 1), ratio(2, 1), ratio(1, 1)).unwrap();
        f.polygon(&sq, "shape");
        let svg = f.render();
        assert!(svg.contains("y axis flipped"));
        assert!(svg.contains(r#"points="0,0 2,0 2,-1 0,-1""#));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn degenerate_rectangles_are_lines() {
        let mut f = Figure::new();
        f.rect(&Rectangle::from_i64(0, 0, 3, 0).unwrap(), "shape");
        assert!(f.render().contains("<polyline"));
    }
}
