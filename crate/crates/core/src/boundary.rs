//! Boundary parametrisation and norms: adaptive Gauss–Legendre L^q norms of
//! p and p′ along ∂K, sup norm with argmax, boundary subsets as parameter
//! intervals, and the level set 𝒢(p) = {ζ : |p(ζ)| > (λ/n^{2/q})·‖p‖_∞}.
//!
//! All integrands are consumed through the log-magnitude channel: a panel
//! integrates exp(q·(ln|f| − offset)) against arc length, and the offset is
//! folded back in at the end, so nothing overflows for large degrees.

use serde::{Deserialize, Serialize};

use crate::constants;
use crate::geom::{Point, Polygon};
use crate::poly::PolyByZeros;

mod gauss {
    //! Gauss–Legendre nodes/weights on [-1, 1], computed by Newton iteration
    //! on the Legendre recurrence and cached per node count.
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};

    fn compute(n: usize) -> (Vec<f64>, Vec<f64>) {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            // Tricomi initial guess
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0f64, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        (nodes, weights)
    }

    type Rule = (Vec<f64>, Vec<f64>);

    pub fn rule(n: usize) -> Rule {
        static CACHE: OnceLock<Mutex<HashMap<usize, Rule>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap();
        guard.entry(n).or_insert_with(|| compute(n)).clone()
    }
}

/// Which function of the polynomial is integrated or maximised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    P,
    Deriv,
}

/// Adaptive quadrature parameters.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuadratureSpec {
    pub nodes: usize,
    pub panels_per_edge: usize,
    pub rel_tol: f64,
    pub max_depth: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { nodes: 16, panels_per_edge: 8, rel_tol: 1e-9, max_depth: 12 }
    }
}

impl QuadratureSpec {
    /// Loose settings used while searching; final values are re-audited with
    /// the default spec.
    pub fn loose() -> Self {
        QuadratureSpec { nodes: 8, panels_per_edge: 2, rel_tol: 1e-4, max_depth: 8 }
    }

    pub fn validate(&self) {
        assert!(self.nodes >= 2, "node count must be at least 2");
        assert!(self.rel_tol > 0.0, "tolerance must be positive");
        assert!(self.panels_per_edge >= 1 && self.max_depth >= 1);
    }
}

/// One parameter interval of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub edge: usize,
    pub t0: f64,
    pub t1: f64,
}

/// Finite union of parameter subintervals of ∂K edges, kept sorted and
/// pairwise disjoint within each edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundarySubset {
    edges: Vec<Interval>,
}

impl BoundarySubset {
    pub fn new(mut entries: Vec<Interval>) -> Self {
        for e in &mut entries {
            e.t0 = e.t0.clamp(0.0, 1.0);
            e.t1 = e.t1.clamp(0.0, 1.0);
        }
        entries.retain(|e| e.t1 > e.t0);
        entries.sort_by(|a, b| (a.edge, a.t0).partial_cmp(&(b.edge, b.t0)).unwrap());
        // merge overlaps within an edge
        let mut merged: Vec<Interval> = Vec::with_capacity(entries.len());
        for e in entries {
            match merged.last_mut() {
                Some(last) if last.edge == e.edge && e.t0 <= last.t1 => {
                    last.t1 = last.t1.max(e.t1);
                }
                _ => merged.push(e),
            }
        }
        BoundarySubset { edges: merged }
    }

    pub fn full(k: &Polygon) -> Self {
        BoundarySubset {
            edges: (0..k.vertex_count()).map(|i| Interval { edge: i, t0: 0.0, t1: 1.0 }).collect(),
        }
    }

    pub fn empty() -> Self {
        BoundarySubset { edges: Vec::new() }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Total arc length.
    pub fn measure(&self, k: &Polygon) -> f64 {
        self.edges.iter().map(|e| (e.t1 - e.t0) * k.edge_len(e.edge)).sum()
    }

    pub fn complement(&self, k: &Polygon) -> Self {
        let mut out = Vec::new();
        for edge in 0..k.vertex_count() {
            let mut cursor = 0.0;
            for e in self.edges.iter().filter(|e| e.edge == edge) {
                if e.t0 > cursor {
                    out.push(Interval { edge, t0: cursor, t1: e.t0 });
                }
                cursor = cursor.max(e.t1);
            }
            if cursor < 1.0 {
                out.push(Interval { edge, t0: cursor, t1: 1.0 });
            }
        }
        BoundarySubset::new(out)
    }

    /// Intersection with the closed disk |z − center| ≤ radius, by a
    /// per-edge quadratic solve of |γ(t) − center|² = radius².
    pub fn intersect_disk(&self, k: &Polygon, center: Point, radius: f64) -> Self {
        let mut out = Vec::new();
        for e in &self.edges {
            let (a, _) = k.edge(e.edge);
            let ev = k.edge_vec(e.edge);
            let w = a - center;
            // |w + t·ev|² = r²
            let qa = ev.norm_sqr();
            let qb = 2.0 * (w.re * ev.re + w.im * ev.im);
            let qc = w.norm_sqr() - radius * radius;
            let disc = qb * qb - 4.0 * qa * qc;
            if disc < 0.0 {
                continue;
            }
            let sq = disc.sqrt();
            let lo = ((-qb - sq) / (2.0 * qa)).max(e.t0);
            let hi = ((-qb + sq) / (2.0 * qa)).min(e.t1);
            if hi > lo {
                out.push(Interval { edge: e.edge, t0: lo, t1: hi });
            }
        }
        BoundarySubset::new(out)
    }

    /// `count` points spread uniformly in arc length over the subset
    /// (midpoint placement inside each slot), as `(edge, t, point)`.
    pub fn sample_points(&self, k: &Polygon, count: usize) -> Vec<(usize, f64, Point)> {
        let total = self.measure(k);
        if total <= 0.0 || count == 0 {
            return Vec::new();
        }
        let step = total / count as f64;
        let mut out = Vec::with_capacity(count);
        let mut acc = 0.0;
        let mut targets = (0..count).map(|i| (i as f64 + 0.5) * step).peekable();
        for e in &self.edges {
            let len = (e.t1 - e.t0) * k.edge_len(e.edge);
            while let Some(&s) = targets.peek() {
                if s > acc + len {
                    break;
                }
                let frac = (s - acc) / len;
                let t = e.t0 + frac * (e.t1 - e.t0);
                out.push((e.edge, t, k.boundary_point(e.edge, t)));
                targets.next();
            }
            acc += len;
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&serde_json::json!({ "edges": self.edges })).unwrap()
    }
}

/// Result of an L^q norm computation.
///
/// `converged == false` is the tolerance-not-met flag: the maximum recursion
/// depth was reached somewhere and `rel_err` reports what was achieved.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct NormResult {
    /// (∫|f|^q)^{1/q}
    pub value: f64,
    /// ln of `value`, safe for huge degrees
    pub log_norm: f64,
    /// ln ∫|f|^q
    pub log_integral: f64,
    /// achieved relative error estimate of the integral
    pub rel_err: f64,
    pub converged: bool,
    pub q: f64,
}

impl NormResult {
    /// ∫|f|^q as a plain double (may overflow for extreme inputs).
    pub fn integral(&self) -> f64 {
        self.log_integral.exp()
    }
}

fn log_integrand(p: &PolyByZeros, which: Which, z: Point) -> f64 {
    match which {
        Which::P => p.log_abs(z),
        Which::Deriv => p.log_abs_deriv(z),
    }
}

/// (∫_S |f|^q |dz|)^{1/q} over a boundary subset (default: all of ∂K) by
/// panel-wise Gauss–Legendre with recursive bisection.
///
/// Panel splits are forced at the boundary projections of zeros lying within
/// 0.01·d of an edge: for q < 1 the integrand has unbounded derivative where
/// |p| vanishes on the edge, and splitting there restores the convergence
/// rate of the panel rule.
pub fn lq_norm(
    p: &PolyByZeros,
    k: &Polygon,
    q: f64,
    which: Which,
    spec: &QuadratureSpec,
    subset: Option<&BoundarySubset>,
) -> NormResult {
    assert!(q > 0.0, "q must be positive");
    spec.validate();
    let full;
    let subset = match subset {
        Some(s) => s,
        None => {
            full = BoundarySubset::full(k);
            &full
        }
    };
    let (nodes, weights) = gauss::rule(spec.nodes);
    let d = k.diameter();

    // offset from a coarse scan so the scaled integrand peaks near exp(0)
    let mut offset = f64::NEG_INFINITY;
    for e in subset.intervals() {
        for j in 0..=32 {
            let t = e.t0 + (e.t1 - e.t0) * j as f64 / 32.0;
            offset = offset.max(log_integrand(p, which, k.boundary_point(e.edge, t)));
        }
    }
    if !offset.is_finite() {
        // identically zero on the subset (empty subset or zero derivative)
        return NormResult {
            value: 0.0,
            log_norm: f64::NEG_INFINITY,
            log_integral: f64::NEG_INFINITY,
            rel_err: 0.0,
            converged: true,
            q,
        };
    }

    let panel_rule = |edge: usize, a: f64, b: f64| -> f64 {
        let len = k.edge_len(edge) * (b - a);
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut s = 0.0;
        let mut comp = 0.0; // Kahan compensation
        for (x, w) in nodes.iter().zip(weights.iter()) {
            let t = mid + half * x;
            let lf = log_integrand(p, which, k.boundary_point(edge, t));
            let val = (q * (lf - offset)).exp() * w;
            let y = val - comp;
            let tmp = s + y;
            comp = (tmp - s) - y;
            s = tmp;
        }
        s * 0.5 * len
    };

    struct Acc {
        sum: f64,
        comp: f64,
        err: f64,
        converged: bool,
    }
    impl Acc {
        fn add(&mut self, v: f64) {
            let y = v - self.comp;
            let t = self.sum + y;
            self.comp = (t - self.sum) - y;
            self.sum = t;
        }
    }
    let mut acc = Acc { sum: 0.0, comp: 0.0, err: 0.0, converged: true };

    #[allow(clippy::too_many_arguments)]
    fn refine(
        edge: usize,
        a: f64,
        b: f64,
        whole: f64,
        depth: usize,
        spec: &QuadratureSpec,
        rule: &dyn Fn(usize, f64, f64) -> f64,
        acc: &mut Acc,
    ) {
        let m = 0.5 * (a + b);
        let left = rule(edge, a, m);
        let right = rule(edge, m, b);
        let better = left + right;
        let err = (whole - better).abs();
        if err <= spec.rel_tol * better.abs() + 1e-300 || better == 0.0 {
            acc.add(better);
            acc.err += err;
            return;
        }
        if depth >= spec.max_depth {
            acc.add(better);
            acc.err += err;
            acc.converged = false;
            return;
        }
        refine(edge, a, m, left, depth + 1, spec, rule, acc);
        refine(edge, m, b, right, depth + 1, spec, rule, acc);
    }

    for e in subset.intervals() {
        // panel boundaries: uniform split plus forced breaks at projections
        // of near-edge zeros
        let mut breaks: Vec<f64> = Vec::new();
        let count = ((spec.panels_per_edge as f64) * (e.t1 - e.t0)).ceil().max(1.0) as usize;
        for j in 0..=count {
            breaks.push(e.t0 + (e.t1 - e.t0) * j as f64 / count as f64);
        }
        for &z in p.zeros() {
            let (_, t, proj) = k.project_to_edge(e.edge, z);
            if (z - proj).norm() < 0.01 * d && t > e.t0 && t < e.t1 {
                breaks.push(t);
            }
        }
        breaks.sort_by(|a, b| a.partial_cmp(b).unwrap());
        breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
        for w in breaks.windows(2) {
            let whole = panel_rule(e.edge, w[0], w[1]);
            refine(e.edge, w[0], w[1], whole, 0, spec, &panel_rule, &mut acc);
        }
    }

    let log_integral = q * offset + acc.sum.ln();
    let log_norm = log_integral / q;
    NormResult {
        value: log_norm.exp(),
        log_norm,
        log_integral,
        rel_err: if acc.sum > 0.0 { acc.err / acc.sum } else { 0.0 },
        converged: acc.converged,
        q,
    }
}

/// Sup norm over ∂K with its argmax.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SupNorm {
    pub value: f64,
    pub log_value: f64,
    #[serde(skip)]
    pub argmax: Point,
    pub edge: usize,
    pub t: f64,
}

/// ‖f‖_∞ over a boundary subset: dense per-edge sampling (≥ 64·(n+1) samples
/// per unit parameter length) followed by golden-section refinement of
/// ln|f| around the best sample. |f| along an edge is the modulus of a
/// degree-n polynomial in t, so this density exceeds its oscillation
/// capacity; no global optimality proof is attempted.
pub fn sup_norm_subset(p: &PolyByZeros, k: &Polygon, which: Which, subset: &BoundarySubset) -> SupNorm {
    let n = p.degree();
    let mut best = SupNorm {
        value: 0.0,
        log_value: f64::NEG_INFINITY,
        argmax: k.vertex(0),
        edge: 0,
        t: 0.0,
    };
    for e in subset.intervals() {
        let m = ((64 * (n + 1)) as f64 * (e.t1 - e.t0)).ceil().max(8.0) as usize;
        let f = |t: f64| log_integrand(p, which, k.boundary_point(e.edge, t));
        let mut ebest = (f64::NEG_INFINITY, e.t0);
        for j in 0..=m {
            let t = e.t0 + (e.t1 - e.t0) * j as f64 / m as f64;
            let v = f(t);
            if v > ebest.0 {
                ebest = (v, t);
            }
        }
        // local refinement around the best sample
        let h = (e.t1 - e.t0) / m as f64;
        let mut lo = (ebest.1 - h).max(e.t0);
        let mut hi = (ebest.1 + h).min(e.t1);
        const INV_GOLD: f64 = 0.381_966_011_250_105;
        for _ in 0..60 {
            let m1 = lo + INV_GOLD * (hi - lo);
            let m2 = hi - INV_GOLD * (hi - lo);
            if f(m1) < f(m2) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        let tm = 0.5 * (lo + hi);
        let (v, t) = if f(tm) > ebest.0 { (f(tm), tm) } else { ebest };
        if v > best.log_value {
            best = SupNorm {
                value: v.exp(),
                log_value: v,
                argmax: k.boundary_point(e.edge, t),
                edge: e.edge,
                t,
            };
        }
    }
    best
}

pub fn sup_norm(p: &PolyByZeros, k: &Polygon) -> SupNorm {
    sup_norm_subset(p, k, Which::P, &BoundarySubset::full(k))
}

/// The level set 𝒢(p) together with the threshold it was cut at.
#[derive(Debug, Clone)]
pub struct GSet {
    pub subset: BoundarySubset,
    /// ln of the cut value (λ/n^{2/q})·‖p‖_∞
    pub threshold_log: f64,
    pub sup: SupNorm,
}

/// 𝒢(p) = {ζ ∈ ∂K : |p(ζ)| > (λ/n^{2/q})·‖p‖_∞} as parameter intervals.
///
/// Threshold crossings are located by bisection on ln|p| along each edge to
/// arc-length tolerance 1e-10·d. A degree-0 polynomial has constant modulus,
/// so 𝒢 is all of ∂K.
pub fn g_set(p: &PolyByZeros, k: &Polygon, q: f64) -> GSet {
    assert!(q > 0.0);
    let sup = sup_norm(p, k);
    let n = p.degree();
    if n == 0 {
        return GSet {
            subset: BoundarySubset::full(k),
            threshold_log: f64::NEG_INFINITY,
            sup,
        };
    }
    let thr = constants::lambda(q).ln() - (2.0 / q) * (n as f64).ln() + sup.log_value;
    let d = k.diameter();
    let mut items = Vec::new();
    for edge in 0..k.vertex_count() {
        let f = |t: f64| p.log_abs(k.boundary_point(edge, t)) - thr;
        let m = 64 * (n + 1);
        let t_tol = (1e-10 * d / k.edge_len(edge)).min(1e-10);
        let mut start: Option<f64> = if f(0.0) > 0.0 { Some(0.0) } else { None };
        let mut prev = (0.0, f(0.0) > 0.0);
        for j in 1..=m {
            let t = j as f64 / m as f64;
            let inside = f(t) > 0.0;
            if inside != prev.1 {
                // bisect the crossing
                let (mut lo, mut hi) = (prev.0, t);
                while hi - lo > t_tol {
                    let mid = 0.5 * (lo + hi);
                    if (f(mid) > 0.0) == prev.1 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let c = 0.5 * (lo + hi);
                if inside {
                    start = Some(c);
                } else if let Some(s) = start.take() {
                    items.push(Interval { edge, t0: s, t1: c });
                }
            }
            prev = (t, inside);
        }
        if let Some(s) = start {
            items.push(Interval { edge, t0: s, t1: 1.0 });
        }
    }
    GSet { subset: BoundarySubset::new(items), threshold_log: thr, sup }
}
