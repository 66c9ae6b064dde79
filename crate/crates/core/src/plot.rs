//! SVG scatter plots of planar C-semigroups: shaded cone, elements as dots,
//! gaps as crosses, Frobenius-set gaps circled.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geom::IntPoint;
use crate::semigroup::CSemigroup;

const UNIT: f64 = 32.0;
const PAD: f64 = 24.0;

/// What to draw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    /// Extra lattice units shown beyond the largest gap weight.
    pub margin: i64,
    pub cone: bool,
    pub points: bool,
    pub gaps: bool,
    pub frobenius: bool,
    pub pseudo_frobenius: bool,
    pub generators: bool,
    /// Weights t whose lines `x + y = t` are drawn.
    pub levels: Vec<i64>,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            margin: 3,
            cone: true,
            points: true,
            gaps: true,
            frobenius: true,
            pseudo_frobenius: false,
            generators: false,
            levels: Vec::new(),
        }
    }
}

struct Canvas {
    extent: i64,
    out: String,
}

impl Canvas {
    fn px(&self, x: f64, y: f64) -> (f64, f64) {
        (PAD + x * UNIT, PAD + (self.extent as f64 - y) * UNIT)
    }
}

/// Renders `s` (which must be planar) as a standalone SVG document.
pub fn plot(s: &CSemigroup, spec: &RenderSpec) -> Result<String> {
    if s.dim() != 2 {
        return Err(Error::UnsupportedDimension(s.dim()));
    }
    let extent = (s.max_gap_weight() + spec.margin.max(0)).max(1);
    let size = 2.0 * PAD + extent as f64 * UNIT;
    let mut c = Canvas { extent, out: String::new() };
    let _ = writeln!(
        c.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    );
    c.out.push_str(
        "<style>.cone{fill:#e8eef7;stroke:#7a8fb0}.pt{fill:#1f3b66}.gap{stroke:#b22;stroke-width:2}\
         .frob{fill:none;stroke:#b22;stroke-width:1.5}.pf{fill:none;stroke:#d80}.msg{fill:none;stroke:#2a2}\
         .level{stroke:#888;stroke-dasharray:4 3}</style>\n",
    );
    if spec.cone {
        cone_region(&mut c, s);
    }
    for &t in &spec.levels {
        let (x0, y0) = c.px(t.min(extent) as f64, (t - t.min(extent)) as f64);
        let (x1, y1) = c.px((t - t.min(extent)) as f64, t.min(extent) as f64);
        let _ = writeln!(c.out, r#"<line class="level" x1="{x0:.2}" y1="{y0:.2}" x2="{x1:.2}" y2="{y1:.2}"/>"#);
    }
    let cone = *s.cone();
    let visible: Vec<IntPoint> = (0..=extent)
        .flat_map(|y| (0..=extent).map(move |x| IntPoint::xy(x, y)))
        .filter(|x| cone.contains_unchecked(x))
        .collect();
    if spec.points {
        for x in visible.iter().filter(|x| !s.is_gap(x)) {
            let (cx, cy) = c.px(x.x() as f64, x.y() as f64);
            let _ = writeln!(c.out, r#"<circle class="pt" cx="{cx:.2}" cy="{cy:.2}" r="4"/>"#);
        }
    }
    if spec.gaps {
        for g in s.gaps() {
            let (cx, cy) = c.px(g.x() as f64, g.y() as f64);
            let d = 6.0;
            let _ = writeln!(
                c.out,
                r#"<path class="gap" d="M{:.2} {:.2}L{:.2} {:.2}M{:.2} {:.2}L{:.2} {:.2}"/>"#,
                cx - d,
                cy - d,
                cx + d,
                cy + d,
                cx - d,
                cy + d,
                cx + d,
                cy - d
            );
        }
    }
    if spec.frobenius {
        ring(&mut c, &s.frobenius_set(), "frob", 10.0);
    }
    if spec.pseudo_frobenius && s.genus() > 0 {
        ring(&mut c, &s.pseudo_frobenius()?, "pf", 13.0);
    }
    if spec.generators {
        let gens: Vec<IntPoint> = s.minimal_generators().into_iter().filter(|m| m.x() <= extent && m.y() <= extent).collect();
        ring(&mut c, &gens, "msg", 8.0);
    }
    c.out.push_str("</svg>\n");
    Ok(c.out)
}

fn ring(c: &mut Canvas, pts: &[IntPoint], class: &str, r: f64) {
    for x in pts {
        let (cx, cy) = c.px(x.x() as f64, x.y() as f64);
        let _ = writeln!(c.out, r#"<circle class="{class}" cx="{cx:.2}" cy="{cy:.2}" r="{r:.1}"/>"#);
    }
}

/// The cone clipped to the square viewport, as a polygon.
fn cone_region(c: &mut Canvas, s: &CSemigroup) {
    let e = c.extent as f64;
    let rays = s.cone().rays();
    let ends: Vec<(f64, f64)> = rays
        .iter()
        .map(|r| {
            let t = e / r.x().max(r.y()) as f64;
            (r.x() as f64 * t, r.y() as f64 * t)
        })
        .collect();
    let angle = |x: f64, y: f64| y.atan2(x);
    let (a1, a2) = (angle(ends[0].0, ends[0].1), angle(ends[1].0, ends[1].1));
    let mut poly = vec![(0.0, 0.0), ends[0]];
    for corner in [(e, 0.0), (e, e), (0.0, e)] {
        let a = angle(corner.0, corner.1);
        if a > a1 && a < a2 {
            poly.push(corner);
        }
    }
    poly.push(ends[1]);
    let pts: Vec<String> = poly
        .iter()
        .map(|&(x, y)| {
            let (px, py) = c.px(x, y);
            format!("{px:.2},{py:.2}")
        })
        .collect();
    let _ = writeln!(c.out, r#"<polygon class="cone" points="{}"/>"#, pts.join(" "));
}
