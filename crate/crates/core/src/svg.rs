//! Static SVG drawing of an invariant ladder and its axis in the upper
//! half-plane.
//!
//! The picture is normalized by a real Möbius map that sends the hyperbolic
//! axis of the element to the unit semicircle with the middle period centered,
//! so every period is drawn at a readable size. Farey edges remain
//! semicircles.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::Result;
use crate::farey::ExtRational;
use crate::geodesic::{translation_length, window_pivot};
use crate::matrix::MatrixPSL2Z;

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 520.0;
const MARGIN: f64 = 24.0;
/// Half-width of the visible window in normalized coordinates.
const VIEW: f64 = 2.4;

struct Frame {
    repelling: f64,
    attracting: f64,
    scale: f64,
}

impl Frame {
    /// Normalized boundary coordinate: `δ` goes to -1, `δ̄` to 1.
    fn place(&self, v: &ExtRational) -> f64 {
        let h = if v.is_infinite() {
            1.0
        } else {
            let x = v.to_f64();
            (x - self.attracting) / (x - self.repelling)
        };
        let w = h / self.scale;
        (w - 1.0) / (w + 1.0)
    }

    fn sx(&self, u: f64) -> f64 {
        WIDTH / 2.0 + u * (WIDTH / 2.0 - MARGIN) / VIEW
    }

    fn base(&self) -> f64 {
        HEIGHT - MARGIN
    }

    fn arc(&self, a: f64, b: f64) -> String {
        let (x0, x1) = (self.sx(a.min(b)), self.sx(a.max(b)));
        let r = (x1 - x0) / 2.0;
        let y = self.base();
        format!("M{x0:.2} {y:.2}A{r:.2} {r:.2} 0 0 1 {x1:.2} {y:.2}")
    }

    fn edge(&self, u: &ExtRational, v: &ExtRational) -> String {
        self.arc(self.place(u), self.place(v))
    }
}

/// Draws `periods` translates (1 to 3) of the invariant ladder window of `m`
/// with the Farey axis in red and the hyperbolic axis dashed.
pub fn render_axis_svg(m: &MatrixPSL2Z, periods: usize) -> Result<String> {
    let res = translation_length(m)?;
    let (r1, r2) = m.fixed_point_quadratic()?.roots_f64();
    let periods = periods.clamp(1, 3);
    let n = res.window.types.len();

    let mut triangles = Vec::new();
    let mut translate = MatrixPSL2Z::identity();
    for _ in 0..periods {
        for step in res.window.steps() {
            triangles.push(step.vertices().map(|x| translate.apply(x)));
        }
        translate = &translate * m;
    }
    let positions: BTreeSet<usize> =
        res.moves.positions().iter().flat_map(|&p| (0..periods).map(move |k| p + k * n)).collect();
    let axis: Vec<ExtRational> = positions.iter().map(|&p| window_pivot(m, &res.window, p)).collect();

    // orientation-preserving: x -> (x - hi)/(x - lo) has determinant hi - lo
    let (attracting, repelling) = if r1 > r2 { (r1, r2) } else { (r2, r1) };
    let mut frame = Frame { repelling, attracting, scale: 1.0 };
    let middle = periods / 2;
    let centre: Vec<f64> = positions
        .iter()
        .zip(&axis)
        .filter(|(p, _)| (**p - res.moves.start_pivot_index) / n == middle)
        .map(|(_, v)| frame.place_raw(v).abs().ln())
        .collect();
    if !centre.is_empty() {
        frame.scale = (centre.iter().sum::<f64>() / centre.len() as f64).exp();
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#fdfdf8"/>"##);
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{b:.2}" x2="{WIDTH}" y2="{b:.2}" stroke="#888" stroke-width="1"/>"##,
        b = frame.base()
    );
    let mut ladder = String::new();
    for [a, b, c] in &triangles {
        for (u, v) in [(a, b), (b, c), (c, a)] {
            ladder.push_str(&frame.edge(u, v));
        }
    }
    let _ = writeln!(out, r##"<path d="{ladder}" fill="none" stroke="#4a6fa5" stroke-width="0.8"/>"##);
    let _ = writeln!(
        out,
        r##"<path d="{}" fill="none" stroke="#777" stroke-width="1.2" stroke-dasharray="6 4"/>"##,
        frame.arc(-1.0, 1.0)
    );
    let path: String = axis.windows(2).map(|w| frame.edge(&w[0], &w[1])).collect();
    let _ = writeln!(out, r##"<path d="{path}" fill="none" stroke="#c0392b" stroke-width="2.5"/>"##);
    for v in &axis {
        let _ = writeln!(
            out,
            r##"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#c0392b"><title>{v}</title></circle>"##,
            frame.sx(frame.place(v)),
            frame.base()
        );
    }
    let _ = writeln!(
        out,
        r##"<text x="{MARGIN}" y="{MARGIN}" font-family="monospace" font-size="14">{m}   length {}   moves {}   types {:?}</text>"##,
        res.length, res.moves, res.window.types
    );
    out.push_str("</svg>\n");
    Ok(out)
}

impl Frame {
    fn place_raw(&self, v: &ExtRational) -> f64 {
        if v.is_infinite() {
            1.0
        } else {
            let x = v.to_f64();
            (x - self.attracting) / (x - self.repelling)
        }
    }
}
