//! Deterministic SVG drawings of regions and tilings. Screen y grows
//! downward and one lattice unit is 20 px.

use std::collections::BTreeMap;
use std::fmt::Write;

use lozenge_core::counting::Tiling;
use lozenge_core::lattice::{LatticeLine, LineFamily, LozengeKind, Region, TriCell};
use lozenge_core::regions::{LSpec, LabelSet, SnowflakeSpec};

const UNIT: f64 = 20.0;
const MARGIN: f64 = 20.0;
const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

const CELL_FILL: &str = "#f4f4f4";
const GRID: &str = "#c8c8c8";
const HOLE_FILL: &str = "#7a7a7a";
const AXIS: &str = "#c03030";

fn kind_fill(k: LozengeKind) -> &'static str {
    match k {
        LozengeKind::Left => "#e8b04a",
        LozengeKind::Vertical => "#5b8fd6",
        LozengeKind::Right => "#d9584a",
    }
}

/// What to draw beyond the region itself.
#[derive(Clone, Debug, Default)]
pub struct Scene {
    /// Cells shaded as holes.
    pub holes: Region,
    pub tiling: Option<Tiling>,
    /// Lines drawn dashed across the picture.
    pub axes: Vec<LatticeLine>,
    /// Text placed at cell centroids.
    pub labels: Vec<(TriCell, String)>,
}

impl Scene {
    /// Holes of the bounding hexagon, plus the arm labels and the three
    /// diagonals when `overlay` is set.
    pub fn snowflake(s: &SnowflakeSpec, region: &Region, overlay: bool) -> Scene {
        let mut scene = Scene { holes: missing(&s.hexagon_bounds().region(), region), ..Scene::default() };
        if overlay {
            let full = LabelSet::full(s.n);
            let every = SnowflakeSpec { a: [full; 6], b: [full; 6], ..*s };
            scene.axes = s.dendrites().iter().map(|d| d.line).collect();
            scene.labels = every.holes().iter().map(|h| (h.cell, h.label.to_string())).collect();
        }
        scene
    }

    pub fn l_region(l: &LSpec, region: &Region, overlay: bool) -> Scene {
        let mut scene = Scene { holes: missing(&l.bounds().region(), region), ..Scene::default() };
        if overlay {
            let full = LabelSet::full(l.n);
            let every = LSpec { p: full, q: full, r: full, s: full, ..*l };
            scene.labels = every.holes().into_iter().map(|(_, k, c)| (c, k.to_string())).collect();
        }
        scene
    }
}

fn missing(container: &Region, region: &Region) -> Region {
    container.iter().filter(|c| !region.contains(c)).copied().collect()
}

type Vertex = (i64, i64);

fn edges(c: &TriCell) -> [(Vertex, Vertex); 3] {
    let [a, b, d] = c.vertices();
    let e = |p: Vertex, q: Vertex| if p < q { (p, q) } else { (q, p) };
    [e(a, b), e(b, d), e(a, d)]
}

fn on_line(line: &LatticeLine, (u, v): Vertex) -> bool {
    match line.family {
        LineFamily::Horizontal => v == line.offset,
        LineFamily::Positive => u == line.offset,
        LineFamily::Negative => u + v == line.offset,
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new<'a>(cells: impl Iterator<Item = &'a TriCell>) -> Frame {
        let mut pts = cells.flat_map(|c| c.vertices()).map(planar).peekable();
        if pts.peek().is_none() {
            return Frame { min_x: 0.0, max_y: 0.0, width: 2.0 * MARGIN, height: 2.0 * MARGIN };
        }
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for (x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        Frame { min_x: x0, max_y: y1, width: (x1 - x0) * UNIT + 2.0 * MARGIN, height: (y1 - y0) * UNIT + 2.0 * MARGIN }
    }

    fn point(&self, v: Vertex) -> String {
        let (x, y) = self.screen(planar(v));
        format!("{x:.2},{y:.2}")
    }

    fn screen(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.min_x) * UNIT + MARGIN, (self.max_y - y) * UNIT + MARGIN)
    }

    fn polygon(&self, pts: &[Vertex]) -> String {
        pts.iter().map(|&p| self.point(p)).collect::<Vec<_>>().join(" ")
    }
}

fn planar((u, v): Vertex) -> (f64, f64) {
    (u as f64 + v as f64 / 2.0, v as f64 * HALF_SQRT3)
}

fn centroid(c: &TriCell) -> (f64, f64) {
    let pts = c.vertices().map(planar);
    ((pts[0].0 + pts[1].0 + pts[2].0) / 3.0, (pts[0].1 + pts[1].1 + pts[2].1) / 3.0)
}

pub fn render_svg(region: &Region, scene: &Scene) -> String {
    let frame = Frame::new(region.iter().chain(scene.holes.iter()));
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = frame.width,
        h = frame.height
    );

    let _ = writeln!(out, r#"<g fill="{CELL_FILL}" stroke="{GRID}" stroke-width="0.5">"#);
    for c in region.iter() {
        let _ = writeln!(out, r#"<polygon points="{}"/>"#, frame.polygon(&c.vertices()));
    }
    let _ = writeln!(out, "</g>");

    if !scene.holes.is_empty() {
        let _ = writeln!(out, r#"<g fill="{HOLE_FILL}" stroke="{HOLE_FILL}" stroke-width="0.5">"#);
        for c in scene.holes.iter() {
            let _ = writeln!(out, r#"<polygon points="{}"/>"#, frame.polygon(&c.vertices()));
        }
        let _ = writeln!(out, "</g>");
    }

    if let Some(t) = &scene.tiling {
        let _ = writeln!(out, r##"<g stroke="#303030" stroke-width="0.75">"##);
        for l in &t.lozenges {
            let (up, down) = (l.a.vertices(), l.b.vertices());
            let shared: Vec<Vertex> = up.iter().filter(|p| down.contains(p)).copied().collect();
            let apex_up = up.iter().find(|p| !shared.contains(p)).copied().expect("lozenge cells share an edge");
            let apex_down = down.iter().find(|p| !shared.contains(p)).copied().expect("lozenge cells share an edge");
            let pts = [apex_up, shared[0], apex_down, shared[1]];
            let _ = writeln!(out, r#"<polygon fill="{}" points="{}"/>"#, kind_fill(l.kind), frame.polygon(&pts));
        }
        let _ = writeln!(out, "</g>");
    }

    // Boundary: edges owned by exactly one cell of the region.
    let mut owners: BTreeMap<(Vertex, Vertex), u8> = BTreeMap::new();
    for c in region.iter() {
        for e in edges(c) {
            *owners.entry(e).or_default() += 1;
        }
    }
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="2" stroke-linecap="round">"#);
    for (&(p, q), _) in owners.iter().filter(|(_, &n)| n == 1) {
        let (x1, y1) = frame.screen(planar(p));
        let (x2, y2) = frame.screen(planar(q));
        let _ = writeln!(out, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
    }
    let _ = writeln!(out, "</g>");

    if !scene.axes.is_empty() {
        let _ = writeln!(out, r#"<g stroke="{AXIS}" stroke-width="1.5" stroke-dasharray="4 3">"#);
        for line in &scene.axes {
            let mut on: Vec<Vertex> = region
                .iter()
                .chain(scene.holes.iter())
                .flat_map(|c| c.vertices())
                .filter(|&p| on_line(line, p))
                .collect();
            on.sort();
            if let (Some(&p), Some(&q)) = (on.first(), on.last()) {
                let (x1, y1) = frame.screen(planar(p));
                let (x2, y2) = frame.screen(planar(q));
                let _ = writeln!(out, r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#);
            }
        }
        let _ = writeln!(out, "</g>");
    }

    if !scene.labels.is_empty() {
        let _ = writeln!(
            out,
            r#"<g font-family="sans-serif" font-size="7" text-anchor="middle" dominant-baseline="central">"#
        );
        for (c, text) in &scene.labels {
            let (x, y) = frame.screen(centroid(c));
            let _ = writeln!(out, r#"<text x="{x:.2}" y="{y:.2}">{text}</text>"#);
        }
        let _ = writeln!(out, "</g>");
    }

    out.push_str("</svg>\n");
    out
}
