//! Convex-polygon geometry: validation, diameter/width, local depth,
//! per-vertex data, the assembled constants (δ₀, h₀, c₀, c(K)) and the
//! tilted-normal frame at an acute vertex.
//!
//! Conventions: vertices are stored counter-clockwise, edge `i` runs from
//! vertex `i` to vertex `i+1 (mod m)`, and boundary points are addressed as
//! `(edge, t)` with `t ∈ [0,1]`. All computations are plain `f64` with the
//! tolerances stated next to them; exact arithmetic is out of scope.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constants;

pub type Point = Complex64;

/// Angles within this distance of π/2 are classified as non-acute, so the
/// boundary classification is deterministic for exact right angles.
pub const ANGLE_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum GeomError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("repeated vertex at index {0}")]
    DegenerateEdge(usize),
    #[error("not strictly convex: cross product <= 0 at vertex {0}")]
    NotConvex(usize),
    #[error("point is not on the polygon boundary")]
    PointNotOnBoundary,
    #[error("vertex {0} is not acute")]
    VertexNotAcute(usize),
    #[error("zeta too far from the vertex: tilted ray misses the opposite side")]
    ZetaTooFar,
    #[error("invalid input: {0}")]
    BadInput(String),
}

#[inline]
pub fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

#[inline]
pub fn dot(a: Complex64, b: Complex64) -> f64 {
    a.re * b.re + a.im * b.im
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<[f64; 2]>,
}

/// Strictly convex polygon with counter-clockwise vertex order.
///
/// Construction goes through [`Polygon::validate`], which normalises the
/// orientation and rejects degenerate or non-convex input, so every value of
/// this type satisfies the invariants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolygonJson", into = "PolygonJson")]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl TryFrom<PolygonJson> for Polygon {
    type Error = GeomError;
    fn try_from(j: PolygonJson) -> Result<Self, GeomError> {
        let pts: Vec<Point> = j.vertices.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        for p in &pts {
            if !p.re.is_finite() || !p.im.is_finite() {
                return Err(GeomError::BadInput("non-finite vertex coordinate".into()));
            }
        }
        Polygon::validate(&pts)
    }
}

impl From<Polygon> for PolygonJson {
    fn from(p: Polygon) -> Self {
        PolygonJson { vertices: p.vertices.iter().map(|z| [z.re, z.im]).collect() }
    }
}

impl Polygon {
    /// Validates a vertex list and returns the polygon with counter-clockwise
    /// orientation. Clockwise input is accepted and reversed.
    pub fn validate(points: &[Point]) -> Result<Polygon, GeomError> {
        if points.len() < 3 {
            return Err(GeomError::TooFewVertices(points.len()));
        }
        let m = points.len();
        let scale = points
            .iter()
            .flat_map(|p| [p.re.abs(), p.im.abs()])
            .fold(0.0f64, f64::max)
            .max(1e-300);
        let dist_tol = 1e-14 * scale;
        for i in 0..m {
            let a = points[i];
            let b = points[(i + 1) % m];
            if (b - a).norm() <= dist_tol {
                return Err(GeomError::DegenerateEdge(i));
            }
        }
        // signed area fixes the orientation before the convexity check
        let mut area2 = 0.0;
        for i in 0..m {
            area2 += cross(points[i], points[(i + 1) % m]);
        }
        let mut verts: Vec<Point> = points.to_vec();
        if area2 < 0.0 {
            verts.reverse();
        }
        let cross_tol = 1e-12 * scale * scale;
        for i in 0..m {
            let a = verts[i];
            let b = verts[(i + 1) % m];
            let c = verts[(i + 2) % m];
            if cross(b - a, c - b) <= cross_tol {
                return Err(GeomError::NotConvex((i + 1) % m));
            }
        }
        Ok(Polygon { vertices: verts })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` as the pair (start, end).
    pub fn edge(&self, i: usize) -> (Point, Point) {
        let m = self.vertices.len();
        (self.vertices[i % m], self.vertices[(i + 1) % m])
    }

    pub fn edge_vec(&self, i: usize) -> Complex64 {
        let (a, b) = self.edge(i);
        b - a
    }

    pub fn edge_len(&self, i: usize) -> f64 {
        self.edge_vec(i).norm()
    }

    pub fn perimeter(&self) -> f64 {
        (0..self.vertex_count()).map(|i| self.edge_len(i)).sum()
    }

    /// Point on edge `i` at parameter `t ∈ [0,1]`.
    pub fn boundary_point(&self, edge: usize, t: f64) -> Point {
        let (a, _) = self.edge(edge);
        a + self.edge_vec(edge) * t
    }

    /// Max pairwise vertex distance; equals the diameter by convexity.
    pub fn diameter(&self) -> f64 {
        let mut d = 0.0f64;
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                d = d.max((self.vertices[i] - self.vertices[j]).norm());
            }
        }
        d
    }

    /// Endpoints of a diameter pair (max distance vertices).
    pub fn diameter_pair(&self) -> (Point, Point) {
        let mut best = (self.vertices[0], self.vertices[1]);
        let mut d = 0.0f64;
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let dist = (self.vertices[i] - self.vertices[j]).norm();
                if dist > d {
                    d = dist;
                    best = (self.vertices[i], self.vertices[j]);
                }
            }
        }
        best
    }

    /// Minimal width: min over edges of the max distance from the edge's
    /// supporting line to a vertex.
    pub fn width(&self) -> f64 {
        let mut w = f64::INFINITY;
        for i in 0..self.vertex_count() {
            let (a, _) = self.edge(i);
            let u = self.edge_vec(i) / self.edge_len(i);
            let h = self
                .vertices
                .iter()
                .map(|v| cross(u, v - a))
                .fold(0.0f64, f64::max);
            w = w.min(h);
        }
        w
    }

    /// Area centroid; an interior point for any valid polygon.
    pub fn centroid(&self) -> Point {
        let m = self.vertices.len();
        let mut a2 = 0.0;
        let mut cx = 0.0;
        let mut cy = 0.0;
        for i in 0..m {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % m];
            let c = cross(p, q);
            a2 += c;
            cx += (p.re + q.re) * c;
            cy += (p.im + q.im) * c;
        }
        Complex64::new(cx / (3.0 * a2), cy / (3.0 * a2))
    }

    /// Closed membership test: boundary points count as inside.
    pub fn contains(&self, z: Point) -> bool {
        (0..self.vertex_count()).all(|i| {
            let (a, _) = self.edge(i);
            cross(self.edge_vec(i), z - a) >= 0.0
        })
    }

    /// Distance from `z` to the boundary ∂K (0 for boundary points).
    pub fn distance_to_boundary(&self, z: Point) -> f64 {
        (0..self.vertex_count())
            .map(|i| {
                let (_, _, p) = self.project_to_edge(i, z);
                (z - p).norm()
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Nearest point of edge `i` to `z`, as `(edge, t, point)`.
    pub fn project_to_edge(&self, i: usize, z: Point) -> (usize, f64, Point) {
        let (a, _) = self.edge(i);
        let e = self.edge_vec(i);
        let t = (dot(e, z - a) / dot(e, e)).clamp(0.0, 1.0);
        (i, t, a + e * t)
    }

    /// Nearest boundary point to `z` as `(edge, t, point)`.
    pub fn project_to_boundary(&self, z: Point) -> (usize, f64, Point) {
        let mut best = self.project_to_edge(0, z);
        let mut dist = (z - best.2).norm();
        for i in 1..self.vertex_count() {
            let cand = self.project_to_edge(i, z);
            let d = (z - cand.2).norm();
            if d < dist {
                dist = d;
                best = cand;
            }
        }
        best
    }

    /// `z` if it lies in K, otherwise its nearest boundary point.
    pub fn project_inside(&self, z: Point) -> Point {
        if self.contains(z) {
            z
        } else {
            self.project_to_boundary(z).2
        }
    }

    /// Interior angle at vertex `i`, in (0, π).
    pub fn interior_angle(&self, i: usize) -> f64 {
        let m = self.vertex_count();
        let v = self.vertices[i % m];
        let prev = self.vertices[(i + m - 1) % m];
        let next = self.vertices[(i + 1) % m];
        let u = prev - v;
        let w = next - v;
        cross(w, u).atan2(dot(w, u))
    }

    /// Length of the chord `{from + t·dir, t ≥ 0} ∩ K` for a boundary point
    /// `from` and an inward direction `dir` (need not be unit).
    pub fn ray_exit(&self, from: Point, dir: Complex64) -> f64 {
        let scale = self.diameter();
        let tol = 1e-12 * scale * scale;
        let mut tmax = f64::INFINITY;
        for i in 0..self.vertex_count() {
            let (a, _) = self.edge(i);
            let e = self.edge_vec(i);
            let c0 = cross(e, from - a);
            let c1 = cross(e, dir);
            if c1 >= 0.0 {
                if c0 < -tol {
                    return 0.0; // ray starts outside this half-plane and never enters
                }
            } else {
                tmax = tmax.min((-c0 / c1).max(0.0));
            }
        }
        if tmax.is_finite() {
            tmax * dir.norm()
        } else {
            0.0
        }
    }

    /// Local depth h(ζ, K) at the boundary point `(edge, t)`: the maximal
    /// chord of K emanating from ζ perpendicular to a supporting line at ζ.
    ///
    /// On edge interiors there is a single inward normal. At a vertex the
    /// supporting normals form a cone; the maximum over the cone is located
    /// by a coarse angular scan plus golden-section refinement (the chord
    /// length is piecewise smooth in the direction).
    pub fn local_depth(&self, edge: usize, t: f64) -> f64 {
        let m = self.vertex_count();
        if t > 0.0 && t < 1.0 {
            let u = self.edge_vec(edge) / self.edge_len(edge);
            let normal = Complex64::new(-u.im, u.re); // inward for CCW order
            return self.ray_exit(self.boundary_point(edge, t), normal);
        }
        // vertex case: cone between the inward normals of the two edges
        let vi = if t <= 0.0 { edge % m } else { (edge + 1) % m };
        let v = self.vertices[vi];
        let e_prev = self.edge_vec((vi + m - 1) % m);
        let e_next = self.edge_vec(vi);
        let phi0 = Complex64::new(-e_prev.im, e_prev.re).arg();
        let mut phi1 = Complex64::new(-e_next.im, e_next.re).arg();
        while phi1 < phi0 {
            phi1 += 2.0 * std::f64::consts::PI;
        }
        let chord = |phi: f64| self.ray_exit(v, Complex64::from_polar(1.0, phi));
        // coarse scan, then golden-section around the best cell
        let nscan = 64;
        let mut best_j = 0;
        let mut best = f64::NEG_INFINITY;
        for j in 0..=nscan {
            let phi = phi0 + (phi1 - phi0) * j as f64 / nscan as f64;
            let c = chord(phi);
            if c > best {
                best = c;
                best_j = j;
            }
        }
        let h = (phi1 - phi0) / nscan as f64;
        let mut lo = phi0 + h * (best_j as f64 - 1.0).max(0.0);
        let mut hi = phi0 + h * (best_j as f64 + 1.0).min(nscan as f64);
        const INV_GOLD: f64 = 0.381_966_011_250_105;
        for _ in 0..60 {
            let m1 = lo + INV_GOLD * (hi - lo);
            let m2 = hi - INV_GOLD * (hi - lo);
            if chord(m1) < chord(m2) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        best.max(chord(0.5 * (lo + hi)))
    }

    /// Local depth at an arbitrary point, which must lie on ∂K (within
    /// `1e-9 · diameter`); the point is snapped to the boundary first.
    pub fn local_depth_at(&self, zeta: Point) -> Result<f64, GeomError> {
        let (edge, t, p) = self.project_to_boundary(zeta);
        if (zeta - p).norm() > 1e-9 * self.diameter() {
            return Err(GeomError::PointNotOnBoundary);
        }
        Ok(self.local_depth(edge, t))
    }

    pub fn vertex_data(&self, i: usize) -> VertexData {
        let m = self.vertex_count();
        let angle = self.interior_angle(i);
        let side_prev = (self.vertices[i] - self.vertices[(i + m - 1) % m]).norm();
        let side_next = (self.vertices[(i + 1) % m] - self.vertices[i]).norm();
        VertexData {
            index: i,
            angle,
            acute: angle < std::f64::consts::FRAC_PI_2 - ANGLE_TOL,
            side_prev,
            side_next,
            r_v: side_prev.min(side_next) / 64.0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polygon serializes")
    }

    pub fn from_json(s: &str) -> Result<Polygon, GeomError> {
        serde_json::from_str(s).map_err(|e| GeomError::BadInput(e.to_string()))
    }
}

/// Per-vertex data: interior angle, acuteness, adjacent side lengths and the
/// acute-vertex radius `R_V = min(|VU|, |VW|)/64`.
#[derive(Debug, Clone, Serialize)]
pub struct VertexData {
    pub index: usize,
    pub angle: f64,
    pub acute: bool,
    /// |VU| with U the previous vertex in counter-clockwise order.
    pub side_prev: f64,
    /// |VW| with W the next vertex.
    pub side_next: f64,
    pub r_v: f64,
}

/// Global geometric constants of a polygon for a fixed exponent `q`.
///
/// `h0` is a certified lower bound for the local depth at every boundary
/// point that is at least `delta0` away from every acute vertex; it comes
/// from the per-side case analysis on the number of acute endpoints.
/// For polygons without acute vertices `delta0` and `mu` are absent, every
/// side takes the no-acute-endpoint case and `c_k = 4^{-1/q}·c0`.
#[derive(Debug, Clone, Serialize)]
pub struct GeometrySummary {
    pub d: f64,
    pub w: f64,
    pub vertices: Vec<VertexData>,
    pub delta0: Option<f64>,
    pub h0: f64,
    pub c0: f64,
    pub mu: Option<f64>,
    pub c_k: f64,
    pub q: f64,
}

/// Computes diameter, width, vertex data, δ₀ = (1/8)·min acute R_V, the
/// per-side depth floor h₀, c₀ = h₀⁴/(1500 d⁵), μ = min over acute vertices
/// of μ(α, q, d), and c(K) = 4^{-1/q}·min(μ^{1/q}, c₀).
pub fn geometry_summary(k: &Polygon, q: f64) -> GeometrySummary {
    assert!(q > 0.0, "q must be positive");
    let m = k.vertex_count();
    let d = k.diameter();
    let w = k.width();
    let vertices: Vec<VertexData> = (0..m).map(|i| k.vertex_data(i)).collect();
    let delta0 = vertices
        .iter()
        .filter(|v| v.acute)
        .map(|v| v.r_v / 8.0)
        .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a: f64| a.min(x))));

    let perp_chord = |vi: usize, edge: usize| -> f64 {
        let u = k.edge_vec(edge) / k.edge_len(edge);
        k.ray_exit(k.vertex(vi), Complex64::new(-u.im, u.re))
    };
    let mut h0 = f64::INFINITY;
    for i in 0..m {
        let a_ac = vertices[i].acute;
        let b_ac = vertices[(i + 1) % m].acute;
        let len = k.edge_len(i);
        let side = match (a_ac, b_ac) {
            (false, false) => perp_chord(i, i).min(perp_chord((i + 1) % m, i)),
            (true, false) => delta0.expect("acute vertex present") * perp_chord((i + 1) % m, i) / len,
            (false, true) => delta0.expect("acute vertex present") * perp_chord(i, i) / len,
            (true, true) => delta0.expect("acute vertex present") * w / len,
        };
        h0 = h0.min(side);
    }
    let c0 = h0.powi(4) / (1500.0 * d.powi(5));
    let mu = vertices
        .iter()
        .filter(|v| v.acute)
        .map(|v| constants::mu(v.angle, q, d))
        .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a: f64| a.min(x))));
    let c_k = match mu {
        Some(mu_val) => 4.0f64.powf(-1.0 / q) * mu_val.powf(1.0 / q).min(c0),
        None => 4.0f64.powf(-1.0 / q) * c0,
    };
    GeometrySummary { d, w, vertices, delta0, h0, c0, mu, c_k, q }
}

/// The tilted-normal construction at a boundary point ζ on the side `[V,W]`
/// next to an acute vertex V: rays from ζ tilted 2θ and 3θ past the inward
/// normal (towards V) hit the other side (V,U] in D and T, with
/// 8·sin(2θ) = sin α.
#[derive(Debug, Clone, Serialize)]
pub struct TiltedFrame {
    pub vertex: usize,
    #[serde(skip)]
    pub zeta: Point,
    pub theta: f64,
    #[serde(skip)]
    pub d_point: Point,
    #[serde(skip)]
    pub t_point: Point,
    /// a = |Tζ|
    pub a: f64,
    /// b = |Dζ|
    pub b: f64,
    /// |TD| = h_coeff · |Vζ|
    pub seg_len: f64,
    pub h_coeff: f64,
    pub dist_v: f64,
}

/// Builds the tilted frame for `zeta ∈ (V, W)` with `|Vζ| ≤ |VU|/8` (which
/// guarantees both intersection points exist inside `(V, U]`).
pub fn tilted_frame(k: &Polygon, v_idx: usize, zeta: Point) -> Result<TiltedFrame, GeomError> {
    let m = k.vertex_count();
    let vd = k.vertex_data(v_idx);
    if !vd.acute {
        return Err(GeomError::VertexNotAcute(v_idx));
    }
    let v = k.vertex(v_idx);
    let w = k.vertex((v_idx + 1) % m);
    let u = k.vertex((v_idx + m - 1) % m);
    // zeta must lie strictly inside [V, W]
    let side = w - v;
    let len = side.norm();
    let t = dot(side, zeta - v) / (len * len);
    let off = (zeta - (v + side * t)).norm();
    if !(t > 0.0 && t < 1.0) || off > 1e-9 * k.diameter() {
        return Err(GeomError::BadInput("zeta is not inside the side [V,W]".into()));
    }
    let dist_v = (zeta - v).norm();
    if dist_v > vd.side_prev / 8.0 * (1.0 + 1e-12) {
        return Err(GeomError::ZetaTooFar);
    }
    let alpha = vd.angle;
    let theta = 0.5 * (alpha.sin() / 8.0).asin();
    let dir_vw = side / len;
    let hit = |tilt: f64| -> Result<Point, GeomError> {
        let ray = dir_vw * Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_2 + tilt);
        // solve zeta + t·ray = v + s·(u - v)
        let e = u - v;
        let det = cross(ray, -e);
        if det.abs() < 1e-300 {
            return Err(GeomError::ZetaTooFar);
        }
        let rhs = v - zeta;
        let tt = cross(rhs, -e) / det;
        let ss = cross(ray, rhs) / det;
        if tt < 0.0 || ss <= 0.0 || ss > 1.0 + 1e-12 {
            return Err(GeomError::ZetaTooFar);
        }
        Ok(v + e * ss)
    };
    let d_point = hit(2.0 * theta)?;
    let t_point = hit(3.0 * theta)?;
    let a = (t_point - zeta).norm();
    let b = (d_point - zeta).norm();
    let seg_len = (t_point - d_point).norm();
    Ok(TiltedFrame {
        vertex: v_idx,
        zeta,
        theta,
        d_point,
        t_point,
        a,
        b,
        seg_len,
        h_coeff: seg_len / dist_v,
        dist_v,
    })
}

/// Convenience constructors for the polygons used throughout the tests.
pub mod shapes {
    use super::*;

    pub fn unit_square() -> Polygon {
        Polygon::validate(&[
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(0.0, 1.0),
        ])
        .unwrap()
    }

    pub fn square_pm1() -> Polygon {
        Polygon::validate(&[
            Complex64::new(-1.0, -1.0),
            Complex64::new(1.0, -1.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(-1.0, 1.0),
        ])
        .unwrap()
    }

    pub fn equilateral_triangle() -> Polygon {
        Polygon::validate(&[
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.5, 3.0f64.sqrt() / 2.0),
        ])
        .unwrap()
    }

    /// Right isosceles triangle with the right angle at the origin and unit legs.
    pub fn right_triangle() -> Polygon {
        Polygon::validate(&[
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
        ])
        .unwrap()
    }

    pub fn regular_ngon(k: usize, side: f64) -> Polygon {
        let r = side / (2.0 * (std::f64::consts::PI / k as f64).sin());
        let pts: Vec<Point> = (0..k)
            .map(|j| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * j as f64 / k as f64))
            .collect();
        Polygon::validate(&pts).unwrap()
    }
}
