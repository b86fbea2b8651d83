//! Static SVG pictures of a polygon, its dual fan and its dual polygon.

use std::fmt::Write;

use crate::fan::WeightedFan;
use crate::lattice::{LatticePoint, LatticePolygon};
use crate::plucker::{dual_fan, dual_polygon, PluckerError};

const PANEL: f64 = 320.0;
const MARGIN: f64 = 28.0;
const TITLE: f64 = 24.0;

/// Maps lattice coordinates of a box into one panel, y pointing up.
struct Frame {
    left: f64,
    lo: LatticePoint,
    hi: LatticePoint,
    unit: f64,
}

impl Frame {
    fn new(left: f64, lo: LatticePoint, hi: LatticePoint) -> Self {
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1) as f64;
        Frame { left, lo, hi, unit: (PANEL - 2.0 * MARGIN) / span }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.left + MARGIN + (x - self.lo.x as f64) * self.unit,
            TITLE + PANEL - MARGIN - (y - self.lo.y as f64) * self.unit,
        )
    }

    fn axes(&self, out: &mut String) {
        let (x0, y0) = self.map(self.lo.x as f64, 0.0);
        let (x1, _) = self.map(self.hi.x as f64, 0.0);
        let (ax, ay0) = self.map(0.0, self.lo.y as f64);
        let (_, ay1) = self.map(0.0, self.hi.y as f64);
        if self.lo.y <= 0 && 0 <= self.hi.y {
            let _ = writeln!(out, r##"<line x1="{x0:.1}" y1="{y0:.1}" x2="{x1:.1}" y2="{y0:.1}" stroke="#999" stroke-width="1"/>"##);
        }
        if self.lo.x <= 0 && 0 <= self.hi.x {
            let _ = writeln!(out, r##"<line x1="{ax:.1}" y1="{ay0:.1}" x2="{ax:.1}" y2="{ay1:.1}" stroke="#999" stroke-width="1"/>"##);
        }
    }

    fn dots(&self, out: &mut String) {
        for x in self.lo.x..=self.hi.x {
            for y in self.lo.y..=self.hi.y {
                let (cx, cy) = self.map(x as f64, y as f64);
                let _ = writeln!(out, r##"<circle cx="{cx:.1}" cy="{cy:.1}" r="2" fill="#bbb"/>"##);
            }
        }
    }
}

fn title(out: &mut String, left: f64, text: &str) {
    let x = left + PANEL / 2.0;
    let _ = writeln!(out, r#"<text x="{x:.1}" y="17" text-anchor="middle" font-size="14">{text}</text>"#);
}

fn polygon_panel(out: &mut String, left: f64, p: &LatticePolygon, label: &str, fill: &str) {
    let (lo, hi) = p.bounding_box();
    let pad = LatticePoint::new(1, 1);
    let frame = Frame::new(left, lo - pad, hi + pad);
    title(out, left, label);
    frame.axes(out);
    frame.dots(out);
    let pts: Vec<String> = p
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = frame.map(v.x as f64, v.y as f64);
            format!("{x:.1},{y:.1}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="{fill}" fill-opacity="0.35" stroke="#333" stroke-width="2"/>"##,
        pts.join(" ")
    );
    for v in p.vertices() {
        let (cx, cy) = frame.map(v.x as f64, v.y as f64);
        let _ = writeln!(out, r##"<circle cx="{cx:.1}" cy="{cy:.1}" r="3.5" fill="#333"/>"##);
    }
}

fn fan_panel(out: &mut String, left: f64, fan: &WeightedFan) {
    let reach = fan
        .rays()
        .iter()
        .map(|(d, _)| d.u().abs().max(d.v().abs()))
        .max()
        .unwrap_or(1);
    let lo = LatticePoint::new(-reach - 1, -reach - 1);
    let hi = LatticePoint::new(reach + 1, reach + 1);
    let frame = Frame::new(left, lo, hi);
    title(out, left, "dual fan");
    frame.axes(out);
    let (ox, oy) = frame.map(0.0, 0.0);
    for (d, w) in fan.rays() {
        let (tx, ty) = frame.map(d.u() as f64, d.v() as f64);
        let (lx, ly) = frame.map(d.u() as f64 * 1.25, d.v() as f64 * 1.25);
        let _ = writeln!(
            out,
            r##"<line x1="{ox:.1}" y1="{oy:.1}" x2="{tx:.1}" y2="{ty:.1}" stroke="#c33" stroke-width="2" marker-end="url(#arrow)"/>"##
        );
        let _ = writeln!(
            out,
            r#"<text x="{lx:.1}" y="{ly:.1}" text-anchor="middle" dominant-baseline="middle" font-size="12">{w}</text>"#
        );
    }
}

/// Three panels: `P` on its lattice grid, the dual fan as weighted arrows, and
/// the dual polygon.
pub fn render(p: &LatticePolygon) -> Result<String, PluckerError> {
    let fan = dual_fan(p)?;
    let dual = dual_polygon(p)?;
    Ok(render_parts(p, &fan, &dual))
}

pub fn render_parts(p: &LatticePolygon, fan: &WeightedFan, dual: &LatticePolygon) -> String {
    let width = 3.0 * PANEL;
    let height = PANEL + TITLE;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str(
        r##"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto-start-reverse"><path d="M 0 0 L 10 5 L 0 10 z" fill="#c33"/></marker></defs>
<rect width="100%" height="100%" fill="white"/>
"##,
    );
    polygon_panel(&mut out, 0.0, p, "P", "#4a7fd1");
    fan_panel(&mut out, PANEL, fan);
    polygon_panel(&mut out, 2.0 * PANEL, dual, "dual polygon", "#3a9a5b");
    out.push_str("</svg>\n");
    out
}
