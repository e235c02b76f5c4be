//! Farthest-point Voronoi diagram construction and the edge-max /
//! vertex-min solver on top of it.
//!
//! Only extreme points of the convex hull own nonempty farthest-point
//! regions, so the sites are the hull vertices. The diagram is built
//! naively: every site triple with a circumcenter that is farthest-
//! equidistant contributes a vertex, and a site pair carries an edge
//! exactly when some point of their bisector sees both sites as the strict
//! joint-farthest. Construction is O(n³) and intended for desk-scale
//! inputs; the solver then either returns the two-point disk of the
//! farthest edge pair or the cheapest diagram vertex.

use std::fmt::Write as _;

use crate::bisector::{HalfBisector, HalfPlane};
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, Disk, PointSet, Vec2};
use crate::norm::Norm;
use crate::report::{support_points, Algorithm, IterationRecord, SolveReport, StepKind};
use crate::triangle::circumcenter;

/// Hard cap on hull sites for the naive O(n³) construction.
pub const MAX_SITES: usize = 60;

/// Relative band for "equally farthest" when collecting a vertex's
/// defining sites.
const DEFINING_BAND: f64 = 1e-8;

/// Two circumcenters within this relative distance are the same vertex.
const VERTEX_MERGE_TOL: f64 = 1e-7;

/// Bisector probes run out to this multiple of the site diameter.
const RAY_CAP_FACTOR: f64 = 64.0;

#[derive(Debug, Clone)]
pub struct VoronoiParams {
    /// Probe-grid resolution per bisector half for edge detection.
    pub grid: usize,
    /// Base tolerance: feasibility bands and the edge-acceptance margin
    /// scale from it.
    pub tol: f64,
}

impl Default for VoronoiParams {
    fn default() -> Self {
        VoronoiParams { grid: 128, tol: 1e-9 }
    }
}

/// A point equidistant-farthest from at least three sites.
#[derive(Debug, Clone)]
pub struct DiagramVertex {
    pub location: Vec2,
    /// Indices into `sites`, ascending.
    pub defining: Vec<usize>,
    /// Common (= maximal) distance from the location to its defining sites.
    pub distance: f64,
}

/// The locus where exactly two sites are joint-farthest.
#[derive(Debug, Clone)]
pub struct DiagramEdge {
    /// Site indices, ascending.
    pub pair: (usize, usize),
    /// Indices into `vertices`; fewer than two endpoints means the edge is
    /// unbounded in one or both directions.
    pub endpoints: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FarthestVoronoiDiagram {
    /// Extreme points of the convex hull, counterclockwise.
    pub sites: Vec<Vec2>,
    pub vertices: Vec<DiagramVertex>,
    pub edges: Vec<DiagramEdge>,
}

impl FarthestVoronoiDiagram {
    /// Structured text form for debugging and plotting.
    pub fn to_text_document(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "sites {}", self.sites.len());
        for (i, s) in self.sites.iter().enumerate() {
            let _ = writeln!(out, "site {i} {} {}", s.x, s.y);
        }
        let _ = writeln!(out, "vertices {}", self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = write!(
                out,
                "vertex {i} {} {} distance {} defining",
                v.location.x, v.location.y, v.distance
            );
            for d in &v.defining {
                let _ = write!(out, " {d}");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "edges {}", self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let _ = write!(out, "edge {i} pair {} {} endpoints", e.pair.0, e.pair.1);
            for v in &e.endpoints {
                let _ = write!(out, " {v}");
            }
            let _ = writeln!(out);
        }
        out
    }
}

/// Build the farthest-point Voronoi diagram of the set's hull sites.
pub fn farthest_voronoi(
    norm: &Norm,
    points: &PointSet,
    params: &VoronoiParams,
) -> Result<FarthestVoronoiDiagram> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let sites = convex_hull(points.points());
    if sites.len() > MAX_SITES {
        return Err(Error::SizeLimit { actual: sites.len(), limit: MAX_SITES });
    }
    let n = sites.len();
    if n < 2 {
        return Ok(FarthestVoronoiDiagram { sites, vertices: Vec::new(), edges: Vec::new() });
    }

    let mut diam: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            diam = diam.max(norm.distance(sites[i], sites[j]));
        }
    }

    let vertices = collect_vertices(norm, &sites, params)?;

    let mut edges: Vec<DiagramEdge> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let endpoints: Vec<usize> = vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| v.defining.contains(&i) && v.defining.contains(&j))
                .map(|(vi, _)| vi)
                .collect();
            if n == 2 || edge_exists(norm, &sites, (i, j), &vertices, &endpoints, params, diam)? {
                edges.push(DiagramEdge { pair: (i, j), endpoints });
            }
        }
    }

    Ok(FarthestVoronoiDiagram { sites, vertices, edges })
}

fn collect_vertices(
    norm: &Norm,
    sites: &[Vec2],
    params: &VoronoiParams,
) -> Result<Vec<DiagramVertex>> {
    let n = sites.len();
    let mut vertices: Vec<DiagramVertex> = Vec::new();
    let ctol = params.tol / 8.0;
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let x = match circumcenter(norm, [sites[i], sites[j], sites[k]], ctol) {
                    Ok(Some(x)) => x,
                    Ok(None) => continue,
                    // hull vertices are never collinear, but stay defensive
                    Err(Error::DegenerateTriangle(_)) => continue,
                    Err(e) => return Err(e),
                };
                let dists: Vec<f64> = sites.iter().map(|s| norm.distance(x, *s)).collect();
                let dmax = dists.iter().copied().fold(0.0, f64::max);
                let band = DEFINING_BAND * dmax.max(1.0);
                // a diagram vertex must see its triple as (joint) farthest
                if dists[i] < dmax - band {
                    continue;
                }
                let defining: Vec<usize> =
                    (0..n).filter(|q| dists[*q] >= dmax - band).collect();
                let merge_dist = VERTEX_MERGE_TOL * dmax.max(1.0);
                match vertices
                    .iter_mut()
                    .find(|v| (v.location - x).hypot() <= merge_dist)
                {
                    Some(v) => {
                        for d in defining {
                            if !v.defining.contains(&d) {
                                v.defining.push(d);
                            }
                        }
                        v.defining.sort_unstable();
                    }
                    None => vertices.push(DiagramVertex { location: x, defining, distance: dmax }),
                }
            }
        }
    }
    Ok(vertices)
}

/// Probe the bisector of a site pair for a point where the pair is the
/// strict joint-farthest. A positive margin is required so that pairs whose
/// regions meet only in a single diagram vertex (zero-length contact) are
/// not reported as edges.
fn edge_exists(
    norm: &Norm,
    sites: &[Vec2],
    (i, j): (usize, usize),
    vertices: &[DiagramVertex],
    endpoints: &[usize],
    params: &VoronoiParams,
    diam: f64,
) -> Result<bool> {
    let others: Vec<Vec2> = sites
        .iter()
        .enumerate()
        .filter(|(q, _)| *q != i && *q != j)
        .map(|(_, s)| *s)
        .collect();
    let margin = params.tol * diam.max(1.0);
    let grid = params.grid.max(8);
    let cap = RAY_CAP_FACTOR * diam;

    for side in [HalfPlane::Plus, HalfPlane::Minus] {
        let hb = HalfBisector::new(norm, sites[i], sites[j], side)?;
        let half = hb.half_distance();
        let ratio = (cap / half).powf(1.0 / (grid - 1) as f64);

        let m_at = |mu: f64| -> Result<f64> {
            let x = hb.point_at(mu, params.tol / 8.0)?;
            let far = others
                .iter()
                .map(|s| norm.distance(x, *s))
                .fold(f64::NEG_INFINITY, f64::max);
            Ok(mu - far)
        };

        // geometric grid from the midpoint out to the ray cap, plus the
        // probes between endpoint vertices and toward infinity
        let mut mus: Vec<f64> = (0..grid).map(|t| half * ratio.powi(t as i32)).collect();
        mus.push(8.0 * diam);
        let mut vertex_mus: Vec<f64> = endpoints
            .iter()
            .map(|&v| norm.distance(vertices[v].location, sites[i]))
            .collect();
        vertex_mus.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in vertex_mus.windows(2) {
            mus.push(0.5 * (w[0] + w[1]));
        }
        for v in &vertex_mus {
            mus.push(2.0 * v);
        }

        let mut best = f64::NEG_INFINITY;
        let mut best_mu = half;
        for mu in mus {
            let m = m_at(mu.clamp(half, cap))?;
            if m > best {
                best = m;
                best_mu = mu;
            }
            if m >= margin {
                return Ok(true);
            }
        }

        // one refinement pass around the best probe
        let lo = (best_mu / ratio).max(half);
        let hi = (best_mu * ratio).min(cap);
        for t in 0..=64 {
            let mu = lo + (hi - lo) * t as f64 / 64.0;
            if m_at(mu)? >= margin {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Solve the minimal enclosing disk problem via the farthest-point Voronoi
/// diagram: take the maximum pair distance over diagram edges; if that
/// pair's two-point disk contains the set it is the answer, otherwise the
/// diagram vertex with the smallest defining distance is.
pub fn solve_sh(norm: &Norm, points: &PointSet, tol: f64) -> Result<SolveReport> {
    let pts = points.points();
    if pts.is_empty() {
        return Err(Error::EmptyInput);
    }
    if pts.len() == 1 {
        return Ok(SolveReport {
            disk: Disk::new(norm.clone(), pts[0], 0.0),
            support: vec![pts[0]],
            iterations: Vec::new(),
            algorithm: Algorithm::ShamosHoey,
        });
    }

    let params = VoronoiParams { grid: 128, tol };
    let diagram = farthest_voronoi(norm, points, &params)?;
    let sites = &diagram.sites;

    // edge branch: the maximum pair distance among diagram edges
    let mut best_edge: Option<(usize, usize, f64)> = None;
    for e in &diagram.edges {
        let d = norm.distance(sites[e.pair.0], sites[e.pair.1]);
        if best_edge.is_none_or(|(_, _, bd)| d > bd) {
            best_edge = Some((e.pair.0, e.pair.1, d));
        }
    }
    if let Some((i, j, _)) = best_edge {
        let disk = Disk::two_point(norm.clone(), sites[i], sites[j]);
        let band = tol * disk.radius.max(1.0);
        if pts.iter().all(|p| disk.contains(*p, band)) {
            let support = support_points(norm, pts, disk.center, disk.radius, band);
            return Ok(SolveReport {
                iterations: vec![IterationRecord {
                    kind: StepKind::TwoPoint,
                    active: vec![sites[i], sites[j]],
                    radius: disk.radius,
                }],
                support,
                disk,
                algorithm: Algorithm::ShamosHoey,
            });
        }
    }

    // vertex branch: cheapest vertex disk; every vertex disk contains the
    // set, so the minimum is the optimum
    let mut best_vertex: Option<&DiagramVertex> = None;
    for v in &diagram.vertices {
        if best_vertex.is_none_or(|bv| v.distance < bv.distance) {
            best_vertex = Some(v);
        }
    }
    let v = best_vertex.ok_or_else(|| {
        Error::InternalInconsistency(
            "no feasible edge disk and no diagram vertices: edge detection failed".into(),
        )
    })?;
    let radius = pts
        .iter()
        .map(|p| norm.distance(*p, v.location))
        .fold(0.0, f64::max);
    let disk = Disk::new(norm.clone(), v.location, radius);
    let band = tol * radius.max(1.0);
    let support = support_points(norm, pts, disk.center, disk.radius, band);
    if support.len() < 2 {
        return Err(Error::InternalInconsistency(
            "vertex disk has fewer than two boundary points".into(),
        ));
    }
    let active: Vec<Vec2> = v.defining.iter().take(3).map(|&s| sites[s]).collect();
    Ok(SolveReport {
        iterations: vec![IterationRecord {
            kind: StepKind::Circumdisk,
            active,
            radius: disk.radius,
        }],
        support,
        disk,
        algorithm: Algorithm::ShamosHoey,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pset(coords: &[(f64, f64)]) -> PointSet {
        PointSet::new(coords.iter().map(|&(x, y)| Vec2::new(x, y))).unwrap()
    }

    #[test]
    fn acute_triangle_has_one_vertex_three_edges() {
        let n = Norm::euclidean();
        let d = farthest_voronoi(
            &n,
            &pset(&[(0.0, 0.0), (2.0, 0.0), (1.0, 5.0)]),
            &VoronoiParams::default(),
        )
        .unwrap();
        assert_eq!(d.sites.len(), 3);
        assert_eq!(d.vertices.len(), 1);
        let v = &d.vertices[0];
        assert!((v.location.x - 1.0).abs() < 1e-8, "{:?}", v.location);
        assert!((v.location.y - 2.4).abs() < 1e-8, "{:?}", v.location);
        assert!((v.distance - 2.6).abs() < 1e-8);
        assert_eq!(v.defining, vec![0, 1, 2]);
        assert_eq!(d.edges.len(), 3);
        for e in &d.edges {
            assert_eq!(e.endpoints, vec![0], "edge {:?} should end at the vertex", e.pair);
        }
    }

    #[test]
    fn square_has_center_vertex_and_four_edges() {
        let n = Norm::euclidean();
        let d = farthest_voronoi(
            &n,
            &pset(&[(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)]),
            &VoronoiParams::default(),
        )
        .unwrap();
        assert_eq!(d.sites.len(), 4);
        assert_eq!(d.vertices.len(), 1, "square corners share one center vertex");
        let v = &d.vertices[0];
        assert!(v.location.hypot() < 1e-8, "{:?}", v.location);
        assert_eq!(v.defining, vec![0, 1, 2, 3]);
        assert!((v.distance - 2f64.sqrt()).abs() < 1e-8);
        // the four side pairs are edges; the two diagonals are not
        assert_eq!(d.edges.len(), 4, "edges: {:?}", d.edges);
        for e in &d.edges {
            let s = d.sites[e.pair.0];
            let t = d.sites[e.pair.1];
            let dist = n.distance(s, t);
            assert!((dist - 2.0).abs() < 1e-12, "diagonal pair {:?} leaked in", e.pair);
        }
    }

    #[test]
    fn collinear_points_give_single_full_bisector_edge() {
        let n = Norm::p_norm(3.0).unwrap();
        let d = farthest_voronoi(
            &n,
            &pset(&[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]),
            &VoronoiParams::default(),
        )
        .unwrap();
        assert_eq!(d.sites.len(), 2);
        assert!(d.vertices.is_empty());
        assert_eq!(d.edges.len(), 1);
        assert_eq!(d.edges[0].pair, (0, 1));
        assert!(d.edges[0].endpoints.is_empty());
    }

    #[test]
    fn solve_two_point_branch() {
        let n = Norm::euclidean();
        let r = solve_sh(&n, &pset(&[(-1.0, 0.0), (1.0, 0.0), (0.0, 0.1)]), 1e-9).unwrap();
        assert!((r.disk.center.x).abs() < 1e-9);
        assert!((r.disk.center.y).abs() < 1e-9);
        assert!((r.disk.radius - 1.0).abs() < 1e-9);
        assert_eq!(r.iterations[0].kind, StepKind::TwoPoint);
    }

    #[test]
    fn solve_vertex_branch_acute_triangle() {
        let n = Norm::euclidean();
        let r = solve_sh(&n, &pset(&[(0.0, 0.0), (2.0, 0.0), (1.0, 5.0)]), 1e-9).unwrap();
        assert!((r.disk.center.x - 1.0).abs() < 1e-7, "{:?}", r.disk.center);
        assert!((r.disk.center.y - 2.4).abs() < 1e-7, "{:?}", r.disk.center);
        assert!((r.disk.radius - 2.6).abs() < 1e-7);
        assert_eq!(r.iterations[0].kind, StepKind::Circumdisk);
        assert_eq!(r.support.len(), 3);
    }

    #[test]
    fn site_limit_is_enforced() {
        let n = Norm::euclidean();
        // 61 points on a circle: all of them hull sites
        let coords: Vec<(f64, f64)> = (0..61)
            .map(|k| {
                let t = k as f64 * std::f64::consts::TAU / 61.0;
                (t.cos(), t.sin())
            })
            .collect();
        assert!(matches!(
            farthest_voronoi(&n, &pset(&coords), &VoronoiParams::default()),
            Err(Error::SizeLimit { limit: MAX_SITES, .. })
        ));
    }

    #[test]
    fn text_document_lists_structure() {
        let n = Norm::euclidean();
        let d = farthest_voronoi(
            &n,
            &pset(&[(0.0, 0.0), (2.0, 0.0), (1.0, 5.0)]),
            &VoronoiParams::default(),
        )
        .unwrap();
        let doc = d.to_text_document();
        assert!(doc.contains("sites 3"));
        assert!(doc.contains("vertices 1"));
        assert!(doc.contains("edges 3"));
        assert!(doc.contains("defining 0 1 2"));
    }
}
