//! Text formats: point files, norm specs, structured reports, and the
//! built-in instance generator.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::Vec2;
use crate::norm::Norm;
use crate::report::SolveReport;

/// Parse a point file: one point per line, two numbers separated by a comma
/// or whitespace; blank lines and lines starting with '#' are ignored.
pub fn parse_points(text: &str) -> Result<Vec<Vec2>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "line {}: expected two coordinates, got {:?}",
                lineno + 1,
                line
            )));
        }
        let x: f64 = fields[0]
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad number {:?}", lineno + 1, fields[0])))?;
        let y: f64 = fields[1]
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad number {:?}", lineno + 1, fields[1])))?;
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::Parse(format!(
                "line {}: coordinates must be finite",
                lineno + 1
            )));
        }
        out.push(Vec2::new(x, y));
    }
    Ok(out)
}

/// Parse a norm spec string of the form `p:<value>`, e.g. "p:4".
///
/// A malformed spec is a [`Error::Parse`] (usage-level) failure; a
/// well-formed spec naming a non-strictly-convex exponent (p ≤ 1 or ∞)
/// fails with [`Error::NotStrictlyConvex`].
pub fn parse_norm_spec(spec: &str) -> Result<Norm> {
    let rest = spec
        .strip_prefix("p:")
        .ok_or_else(|| Error::Parse(format!("norm spec must look like \"p:<value>\", got {spec:?}")))?;
    let p: f64 = rest
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad norm exponent {rest:?}")))?;
    Norm::p_norm(p)
}

/// `n` points drawn uniformly from [-1, 1]², reproducible from `seed`.
pub fn generate_points(n: usize, seed: u64) -> Vec<Vec2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| Vec2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

/// Flat key-value rendering of a report. Numbers print in Rust's shortest
/// round-trip form, so re-parsing reproduces the disk bit for bit.
pub fn format_structured(report: &SolveReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("center_x {}\n", report.disk.center.x));
    out.push_str(&format!("center_y {}\n", report.disk.center.y));
    out.push_str(&format!("radius {}\n", report.disk.radius));
    out.push_str(&format!("support_count {}\n", report.support.len()));
    for p in &report.support {
        out.push_str(&format!("support {} {}\n", p.x, p.y));
    }
    out.push_str(&format!("iterations {}\n", report.iterations.len()));
    out.push_str(&format!("algorithm {}\n", report.algorithm.name()));
    out
}

/// The disk parameters from a structured document: (center, radius).
pub fn parse_structured_disk(text: &str) -> Result<(Vec2, f64)> {
    let mut cx = None;
    let mut cy = None;
    let mut r = None;
    for line in text.lines() {
        let mut it = line.split_whitespace();
        match (it.next(), it.next()) {
            (Some("center_x"), Some(v)) => cx = v.parse::<f64>().ok(),
            (Some("center_y"), Some(v)) => cy = v.parse::<f64>().ok(),
            (Some("radius"), Some(v)) => r = v.parse::<f64>().ok(),
            _ => {}
        }
    }
    match (cx, cy, r) {
        (Some(x), Some(y), Some(r)) => Ok((Vec2::new(x, y), r)),
        _ => Err(Error::Parse("structured document is missing disk fields".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PointSet;

    #[test]
    fn parses_commas_whitespace_and_comments() {
        let text = "# header\n1.5, -2\n3 4\n\n  # trailing comment\n-0.25,0.75\n";
        let pts = parse_points(text).unwrap();
        assert_eq!(
            pts,
            vec![Vec2::new(1.5, -2.0), Vec2::new(3.0, 4.0), Vec2::new(-0.25, 0.75)]
        );
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(parse_points("1 2 3"), Err(Error::Parse(_))));
        assert!(matches!(parse_points("a, b"), Err(Error::Parse(_))));
        assert!(matches!(parse_points("1 inf"), Err(Error::Parse(_))));
    }

    #[test]
    fn norm_spec_parsing() {
        assert_eq!(parse_norm_spec("p:4").unwrap().exponent(), Some(4.0));
        assert!(matches!(parse_norm_spec("q:4"), Err(Error::Parse(_))));
        assert!(matches!(parse_norm_spec("p:zzz"), Err(Error::Parse(_))));
        assert!(matches!(parse_norm_spec("p:1"), Err(Error::NotStrictlyConvex(_))));
        assert!(matches!(parse_norm_spec("p:inf"), Err(Error::NotStrictlyConvex(_))));
    }

    #[test]
    fn generator_is_deterministic_and_in_range() {
        let a = generate_points(32, 7);
        let b = generate_points(32, 7);
        assert_eq!(a, b);
        assert_ne!(a, generate_points(32, 8));
        assert!(a.iter().all(|p| p.x.abs() <= 1.0 && p.y.abs() <= 1.0));
    }

    #[test]
    fn structured_output_round_trips_bit_for_bit() {
        let n = Norm::p_norm(3.0).unwrap();
        let ps = PointSet::new(generate_points(9, 42)).unwrap();
        let report = crate::elzinga_hearn::solve_eh(&n, &ps, 1e-9).unwrap();
        let doc = format_structured(&report);
        let (center, radius) = parse_structured_disk(&doc).unwrap();
        assert_eq!(center.x.to_bits(), report.disk.center.x.to_bits());
        assert_eq!(center.y.to_bits(), report.disk.center.y.to_bits());
        assert_eq!(radius.to_bits(), report.disk.radius.to_bits());
    }
}
