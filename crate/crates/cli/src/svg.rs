//! SVG rendering of the `k = 3` alcove geometry.
//!
//! A point `y` of `Z^3` is drawn at `y_1 L_1 + y_2 L_2 + y_3 L_3`, where the `L_i`
//! are unit vectors at mutual angle 120 degrees. Adding `(1,1,1)` does not move a
//! point, so every coordinate below is normalised to `y_3 = 0`.

use std::fmt::Write as _;

use hecke_core::alcove::{LatticePath, LatticePoint, PathOrbitSummary};

/// Pixels per unit length.
const SCALE: f64 = 24.0;
const MARGIN: f64 = 20.0;

/// `L_1, L_2, L_3` at angles 90, 210 and 330 degrees.
pub fn weight_vectors() -> [(f64, f64); 3] {
    let h = 3f64.sqrt() / 2.0;
    [(0.0, 1.0), (-h, -0.5), (h, -0.5)]
}

/// `sum_i y_i L_i` in the plane.
pub fn project(y: &[i64]) -> (f64, f64) {
    let l = weight_vectors();
    let mut p = (0.0, 0.0);
    for (i, &v) in y.iter().enumerate().take(3) {
        p.0 += v as f64 * l[i].0;
        p.1 += v as f64 * l[i].1;
    }
    p
}

#[derive(Clone, Debug)]
pub struct SvgScene {
    pub l: u32,
    /// `y_1 - y_3` of the far edge of the drawn region
    pub radius: i64,
    pub reference: Option<LatticePath>,
    pub conjugates: Vec<Vec<LatticePoint>>,
    /// endpoints with their path counts
    pub endpoints: Vec<(LatticePoint, u64)>,
    pub labels: bool,
}

impl SvgScene {
    pub fn empty(l: u32, radius: i64) -> Self {
        SvgScene { l, radius, reference: None, conjugates: Vec::new(), endpoints: Vec::new(), labels: false }
    }

    pub fn from_orbit(summary: &PathOrbitSummary, conjugates: Vec<Vec<LatticePoint>>, l: u32, radius: i64) -> Self {
        SvgScene {
            l,
            radius,
            reference: Some(summary.reference.clone()),
            conjugates,
            endpoints: summary.endpoint_counts.iter().map(|(p, &n)| (p.clone(), n)).collect(),
            labels: false,
        }
    }

    /// Critical points `(a l, b l, 0)` with `0 <= b <= a`, `a l <= radius`.
    pub fn critical_points(&self) -> Vec<[i64; 3]> {
        let l = self.l as i64;
        let mut out = Vec::new();
        for a in 0..=self.radius / l {
            for b in 0..=a {
                out.push([a * l, b * l, 0]);
            }
        }
        out
    }

    /// Segments `y_i - y_j = m l` clipped to `0 <= y_2 <= y_1 <= radius`, `y_3 = 0`.
    pub fn affine_lines(&self) -> Vec<([i64; 3], [i64; 3])> {
        let (l, r) = (self.l as i64, self.radius);
        let mut out = Vec::new();
        let mut m = 0;
        while m * l <= r {
            let v = m * l;
            if v < r {
                out.push(([v, v, 0], [r, v, 0]));
                out.push(([v, 0, 0], [r, r - v, 0]));
            }
            if v > 0 {
                out.push(([v, 0, 0], [v, v, 0]));
            }
            m += 1;
        }
        out
    }

    pub fn render(&self) -> String {
        let corners = [project(&[0, 0, 0]), project(&[self.radius, 0, 0]), project(&[self.radius, self.radius, 0])];
        let min_x = corners.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        let max_x = corners.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = corners.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        let max_y = corners.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        let width = (max_x - min_x) * SCALE + 2.0 * MARGIN;
        let height = (max_y - min_y) * SCALE + 2.0 * MARGIN;
        let to_px = |y: &[i64]| {
            let (x, v) = project(y);
            ((x - min_x) * SCALE + MARGIN, (max_y - v) * SCALE + MARGIN)
        };
        let pt = |y: &[i64]| {
            let (x, v) = to_px(y);
            format!("{x:.3},{v:.3}")
        };
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
        );
        let r = self.radius;
        let _ = writeln!(
            s,
            r##"<polygon class="chamber" points="{} {} {}" fill="#f7f7f7" stroke="#000000" stroke-width="1.5"/>"##,
            pt(&[0, 0, 0]),
            pt(&[r, 0, 0]),
            pt(&[r, r, 0])
        );
        let l = self.l as i64;
        if 2 * l < r {
            let _ = writeln!(
                s,
                r##"<polygon class="interior" points="{} {} {}" fill="#dde8f5" stroke="none"/>"##,
                pt(&[2 * l, l, 0]),
                pt(&[r, l, 0]),
                pt(&[r, r - l, 0])
            );
        }
        let _ = writeln!(s, r##"<g class="lines" stroke="#999999" stroke-width="0.6">"##);
        for (a, b) in self.affine_lines() {
            let (x1, y1) = to_px(&a);
            let (x2, y2) = to_px(&b);
            let _ = writeln!(s, r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#);
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r##"<g class="critical" fill="#000000">"##);
        for c in self.critical_points() {
            let (x, y) = to_px(&c);
            let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="2.5"/>"#);
        }
        let _ = writeln!(s, "</g>");
        let polyline = |pts: &[LatticePoint]| pts.iter().map(|p| pt(&p.0)).collect::<Vec<_>>().join(" ");
        if !self.conjugates.is_empty() {
            let _ = writeln!(s, r##"<g class="conjugates" fill="none" stroke="#e08030" stroke-width="1" stroke-opacity="0.6">"##);
            for c in &self.conjugates {
                let _ = writeln!(s, r#"<polyline points="{}"/>"#, polyline(c));
            }
            let _ = writeln!(s, "</g>");
        }
        if let Some(path) = &self.reference {
            let _ = writeln!(
                s,
                r##"<polyline class="reference" points="{}" fill="none" stroke="#c02020" stroke-width="2"/>"##,
                polyline(&path.points())
            );
        }
        if !self.endpoints.is_empty() {
            let _ = writeln!(s, r##"<g class="endpoints" fill="#2050c0">"##);
            for (p, n) in &self.endpoints {
                let (x, y) = to_px(&p.0);
                let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3.5" data-count="{n}"/>"#);
                if self.labels {
                    let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" font-size="9">{n}</text>"#, x + 4.0, y - 4.0);
                }
            }
            let _ = writeln!(s, "</g>");
        }
        let _ = writeln!(s, "</svg>");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_at_120_degrees() {
        let l = weight_vectors();
        for i in 0..3 {
            let (x, y) = l[i];
            assert!((x * x + y * y - 1.0).abs() < 1e-12);
            let (u, v) = l[(i + 1) % 3];
            assert!((x * u + y * v + 0.5).abs() < 1e-12);
        }
        let p = project(&[1, 1, 1]);
        assert!(p.0.abs() < 1e-12 && p.1.abs() < 1e-12);
    }

    #[test]
    fn critical_points_are_triple_intersections() {
        let scene = SvgScene::empty(2, 8);
        let lines = scene.affine_lines();
        for c in scene.critical_points() {
            let on = |a: &[i64; 3], b: &[i64; 3]| {
                // c lies on the segment a-b iff it is collinear and between the endpoints
                let cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
                let within = (a[0].min(b[0])..=a[0].max(b[0])).contains(&c[0])
                    && (a[1].min(b[1])..=a[1].max(b[1])).contains(&c[1]);
                cross == 0 && within
            };
            let families = [
                lines.iter().any(|(a, b)| a[1] == b[1] && on(a, b)),
                lines.iter().any(|(a, b)| a[0] == b[0] && on(a, b)),
                lines.iter().any(|(a, b)| a[0] - a[1] == b[0] - b[1] && on(a, b)),
            ];
            let interior_of_region = c[1] > 0 && c[0] > c[1] && c[0] < 8;
            if interior_of_region {
                assert!(families.iter().all(|&f| f), "{c:?}");
            }
        }
    }

    #[test]
    fn empty_scene_has_no_paths() {
        let svg = SvgScene::empty(3, 9).render();
        assert!(svg.contains("class=\"chamber\""));
        assert!(!svg.contains("polyline"));
        assert_eq!(svg, SvgScene::empty(3, 9).render());
    }
}
