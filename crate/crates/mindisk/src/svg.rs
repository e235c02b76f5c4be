//! SVG rendering of an instance and its solution disk.

use crate::geometry::{Disk, Vec2};
use crate::norm::Norm;

/// Boundary samples per circle outline.
const CIRCLE_SAMPLES: usize = 256;

/// Viewport padding as a fraction of the data bounding box.
const PADDING: f64 = 0.10;

struct BBox {
    min: Vec2,
    max: Vec2,
}

impl BBox {
    fn empty() -> Self {
        BBox {
            min: Vec2::new(f64::INFINITY, f64::INFINITY),
            max: Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, p: Vec2) {
        self.min.x = self.min.x.min(p.x);
        self.min.y = self.min.y.min(p.y);
        self.max.x = self.max.x.max(p.x);
        self.max.y = self.max.y.max(p.y);
    }

    fn width(&self) -> f64 {
        (self.max.x - self.min.x).max(1e-9)
    }

    fn height(&self) -> f64 {
        (self.max.y - self.min.y).max(1e-9)
    }
}

fn circle_outline(norm: &Norm, center: Vec2, radius: f64) -> Vec<Vec2> {
    (0..=CIRCLE_SAMPLES)
        .map(|k| {
            let theta = k as f64 * std::f64::consts::TAU / CIRCLE_SAMPLES as f64;
            center + norm.unit_circle_point(theta) * radius
        })
        .collect()
}

/// Render the points, the solution disk boundary, and a translated copy of
/// the norm's unit circle for scale.
pub fn render(norm: &Norm, points: &[Vec2], disk: &Disk) -> String {
    let boundary = circle_outline(norm, disk.center, disk.radius.max(1e-12));

    let mut data_box = BBox::empty();
    for p in points.iter().chain(boundary.iter()) {
        data_box.add(*p);
    }
    // unit ball anchored just left of the data, for scale
    let anchor = Vec2::new(data_box.min.x - 1.4, data_box.max.y - 1.0);
    let ball = circle_outline(norm, anchor, 1.0);

    let mut bbox = BBox::empty();
    for p in points.iter().chain(boundary.iter()).chain(ball.iter()) {
        bbox.add(*p);
    }
    let pad = PADDING * bbox.width().max(bbox.height());
    bbox.add(Vec2::new(bbox.min.x - pad, bbox.min.y - pad));
    bbox.add(Vec2::new(bbox.max.x + pad, bbox.max.y + pad));

    let view_w = 800.0;
    let view_h = view_w * bbox.height() / bbox.width();
    let sx = view_w / bbox.width();
    let to_view = |p: Vec2| -> (f64, f64) {
        ((p.x - bbox.min.x) * sx, (bbox.max.y - p.y) * sx)
    };
    let polyline = |pts: &[Vec2]| -> String {
        pts.iter()
            .map(|p| {
                let (x, y) = to_view(*p);
                format!("{x:.3},{y:.3}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let stroke = (0.004 * view_w).max(0.5);
    let dot = (0.006 * view_w).max(1.0);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {view_w:.3} {view_h:.3}\">\n"
    ));
    out.push_str(&format!(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#888888\" stroke-width=\"{stroke}\" stroke-dasharray=\"4 3\"/>\n",
        polyline(&ball)
    ));
    out.push_str(&format!(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"{stroke}\"/>\n",
        polyline(&boundary)
    ));
    {
        let (cx, cy) = to_view(disk.center);
        out.push_str(&format!(
            "  <circle cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{dot}\" fill=\"#1f77b4\"/>\n"
        ));
    }
    for p in points {
        let (x, y) = to_view(*p);
        out.push_str(&format!(
            "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{dot}\" fill=\"#000000\"/>\n"
        ));
    }
    out.push_str("</svg>\n");
    out
}
