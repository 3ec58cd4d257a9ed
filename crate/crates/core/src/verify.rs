//! One verifier per inequality. Each returns a [`VerifierReport`] carrying
//! both sides, the slack and the tolerance used, so a suite of runs over
//! random polynomials is an empirical test of the statements at desk scale.
//!
//! Every check is one-sided with the orientation `lhs ≥ rhs − tol` where lhs
//! is the side the statement bounds from below; a failure beyond three times
//! the achieved quadrature error on admissible inputs indicates a bug, never
//! a counterexample.

use num_complex::Complex64;
use thiserror::Error;

use crate::boundary::{
    g_set, lq_norm, sup_norm, sup_norm_subset, BoundarySubset, Interval, NormResult,
    QuadratureSpec, Which,
};
use crate::constants::{self, ConstantsError};
use crate::geom::{geometry_summary, tilted_frame, GeomError, Point, Polygon, TiltedFrame};
use crate::poly::PolyByZeros;
use crate::report::{digest_f64s, VerifierReport};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("degree {n} below required {need}")]
    DegreeTooSmall { n: usize, need: usize },
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error(transparent)]
    Constants(#[from] ConstantsError),
    #[error("r = {r} exceeds R_V/8 = {max}")]
    RTooLarge { r: f64, max: f64 },
    #[error("zeros outside K")]
    ZerosOutsideK,
    #[error("zeros outside the unit disk")]
    ZerosOutsideDisk,
    #[error("J is not contained in the frame segment [T,D]")]
    FramePrecondition,
    #[error("|J| = {len} below the required omega*b = {need}")]
    JTooSmall { len: f64, need: f64 },
}

fn digest(p: &PolyByZeros, k: Option<&Polygon>, extra: &[f64]) -> String {
    let mut vals: Vec<f64> = Vec::new();
    for z in p.zeros() {
        vals.push(z.re);
        vals.push(z.im);
    }
    vals.push(p.leading().re);
    vals.push(p.leading().im);
    if let Some(k) = k {
        for v in k.vertices() {
            vals.push(v.re);
            vals.push(v.im);
        }
    }
    vals.extend_from_slice(extra);
    digest_f64s(vals)
}

/// Absolute error estimate of a norm value from its integral-level relative
/// error: |d value| ≈ value · rel_err / q.
fn norm_abs_err(r: &NormResult) -> f64 {
    r.value * (r.rel_err / r.q)
}

/// |p′/p| at a boundary point; +∞ when p vanishes there (the lower bounds
/// hold trivially at zeros of p).
fn ratio_at(p: &PolyByZeros, z: Point) -> f64 {
    match p.log_deriv(z) {
        Ok(v) => v.norm(),
        Err(_) => f64::INFINITY,
    }
}

/// Nikolskii-type bound: ‖p‖_{L^q(∂K)} ≥ (d/(2(q+1)))^{1/q}·‖p‖_∞·n^{-2/q}.
/// Holds for every polynomial of degree ≤ n, zeros anywhere.
pub fn verify_nikolskii(
    p: &PolyByZeros,
    k: &Polygon,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<VerifierReport, VerifyError> {
    let n = p.degree();
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    let d = k.diameter();
    let norm = lq_norm(p, k, q, Which::P, spec, None);
    let sup = sup_norm(p, k);
    let lhs = norm.value;
    let rhs = (d / (2.0 * (q + 1.0))).powf(1.0 / q) * sup.value * (n as f64).powf(-2.0 / q);
    let tol = 3.0 * norm_abs_err(&norm) + 1e-12 * rhs.abs();
    Ok(VerifierReport {
        name: "nikolskii".into(),
        pass: lhs >= rhs - tol,
        lhs,
        rhs,
        slack: lhs - rhs,
        tol,
        n,
        q,
        notes: format!("d={d}, sup={}, quad_converged={}", sup.value, norm.converged),
        digest: digest(p, Some(k), &[q]),
    })
}

/// 𝒢-mass bound: ∫_𝒢 |p|^q ≥ ½·‖p‖_q^q, reported as the mass fraction, and
/// for n ≥ 8 the pointwise bound log(‖p‖_∞/|p(ζ)|) ≤ (4/min(1,q))·log n at
/// sampled ζ ∈ 𝒢.
pub fn verify_g_mass(
    p: &PolyByZeros,
    k: &Polygon,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<VerifierReport, VerifyError> {
    let n = p.degree();
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    let gs = g_set(p, k, q);
    let total = lq_norm(p, k, q, Which::P, spec, None);
    let on_g = lq_norm(p, k, q, Which::P, spec, Some(&gs.subset));
    let frac = (on_g.log_integral - total.log_integral).exp();
    let tol_frac = 3.0 * frac * (on_g.rel_err + total.rel_err) + 1e-12;
    let mass_ok = frac >= 0.5 - tol_frac;

    // pointwise log bound on 𝒢
    let mut log_margin = f64::INFINITY;
    let mut log_ok = true;
    let mut log_note = String::from("log-bound: skipped (n<8)");
    if n >= 8 {
        let bound = 4.0 / q.min(1.0) * (n as f64).ln();
        for (_, _, z) in gs.subset.sample_points(k, 256) {
            let gap = gs.sup.log_value - p.log_abs(z);
            log_margin = log_margin.min(bound - gap);
        }
        log_ok = log_margin >= -1e-9;
        log_note = format!("log-bound margin={log_margin:.6e}");
    }

    Ok(VerifierReport {
        name: "g-mass".into(),
        pass: mass_ok && log_ok,
        lhs: frac,
        rhs: 0.5,
        slack: frac - 0.5,
        tol: tol_frac,
        n,
        q,
        notes: format!(
            "|G|={:.6}, {log_note}, quad_converged={}",
            gs.subset.measure(k),
            total.converged && on_g.converged
        ),
        digest: digest(p, Some(k), &[q]),
    })
}

/// The two segments `I₊ = [V,U]∩D_R_V(V)` and `I₋ = [V,W]∩D_R_V(V)` next to
/// an acute vertex, as boundary subsets.
pub fn oneside_segments(k: &Polygon, v_idx: usize) -> (BoundarySubset, BoundarySubset) {
    let m = k.vertex_count();
    let vd = k.vertex_data(v_idx);
    let prev = (v_idx + m - 1) % m;
    let i_plus = BoundarySubset::new(vec![Interval {
        edge: prev,
        t0: 1.0 - vd.r_v / k.edge_len(prev),
        t1: 1.0,
    }]);
    let i_minus = BoundarySubset::new(vec![Interval {
        edge: v_idx,
        t0: 0.0,
        t1: vd.r_v / k.edge_len(v_idx),
    }]);
    (i_plus, i_minus)
}

/// One-side estimate at an acute vertex: either 𝒢 misses I₊ ∪ I₋ entirely
/// (vacuous pass), or on at least one of the two segments
/// |p′(z)| ≥ (sin(α/2)/(4d))·n·|p(z)| at all sampled points.
///
/// The asserted constant is the d-normalised proof form sin(α/2)/(4d); the
/// weaker sin α/(8d) form is recorded in the notes.
pub fn verify_oneside(
    p: &PolyByZeros,
    k: &Polygon,
    v_idx: usize,
    q: f64,
) -> Result<VerifierReport, VerifyError> {
    let vd = k.vertex_data(v_idx);
    if !vd.acute {
        return Err(GeomError::VertexNotAcute(v_idx).into());
    }
    let n = p.degree();
    let n0 = constants::n0_gset(q);
    let dig = digest(p, Some(k), &[q, v_idx as f64]);
    if n < n0 {
        return Ok(VerifierReport {
            name: "oneside".into(),
            pass: true,
            lhs: 0.0,
            rhs: 0.0,
            slack: 0.0,
            tol: 0.0,
            n,
            q,
            notes: format!("skipped: n={n} < n0={n0} (2^-n < lambda*n^(-2/q))"),
            digest: dig,
        });
    }
    let d = k.diameter();
    let gs = g_set(p, k, q);
    let (i_plus, i_minus) = oneside_segments(k, v_idx);
    let hit_plus = !intersect(&gs.subset, &i_plus).is_empty();
    let hit_minus = !intersect(&gs.subset, &i_minus).is_empty();
    if !hit_plus && !hit_minus {
        return Ok(VerifierReport {
            name: "oneside".into(),
            pass: true,
            lhs: 0.0,
            rhs: 0.0,
            slack: 0.0,
            tol: 0.0,
            n,
            q,
            notes: "vacuous: G misses I+ and I-".into(),
            digest: dig,
        });
    }
    let c_strong = (vd.angle / 2.0).sin() / (4.0 * d);
    let c_weak = vd.angle.sin() / (8.0 * d);
    let min_ratio = |seg: &BoundarySubset| -> f64 {
        seg.sample_points(k, 256)
            .iter()
            .map(|&(_, _, z)| ratio_at(p, z) / n as f64)
            .fold(f64::INFINITY, f64::min)
    };
    let r_plus = min_ratio(&i_plus);
    let r_minus = min_ratio(&i_minus);
    let best = r_plus.max(r_minus);
    let tol = 1e-12 * c_strong;
    let side = if r_plus >= r_minus { "I+" } else { "I-" };
    Ok(VerifierReport {
        name: "oneside".into(),
        pass: best >= c_strong - tol,
        lhs: best,
        rhs: c_strong,
        slack: best - c_strong,
        tol,
        n,
        q,
        notes: format!(
            "side={side}, weak-bound sin(a)/(8d)={c_weak:.6e} holds={}, minus={r_minus:.6e}, plus={r_plus:.6e}",
            best >= c_weak - 1e-12 * c_weak
        ),
        digest: dig,
    })
}

fn intersect(a: &BoundarySubset, b: &BoundarySubset) -> BoundarySubset {
    let mut out = Vec::new();
    for x in a.intervals() {
        for y in b.intervals() {
            if x.edge == y.edge {
                let t0 = x.t0.max(y.t0);
                let t1 = x.t1.min(y.t1);
                if t1 > t0 {
                    out.push(Interval { edge: x.edge, t0, t1 });
                }
            }
        }
    }
    BoundarySubset::new(out)
}

/// The frame segment `[T, D]` as a parameter interval of the side `(V, U]`.
pub fn frame_interval(k: &Polygon, frame: &TiltedFrame) -> Interval {
    let m = k.vertex_count();
    let prev = (frame.vertex + m - 1) % m;
    let (_, t_t, _) = k.project_to_edge(prev, frame.t_point);
    let (_, t_d, _) = k.project_to_edge(prev, frame.d_point);
    Interval { edge: prev, t0: t_t.min(t_d), t1: t_t.max(t_d) }
}

/// Tilted normal estimate at ζ: with the frame (θ, D, T, a, b) and a set
/// `J ⊆ [T,D]` of measure |J| ≥ ω·b,
///
///   |p′/p(ζ)| ≥ (sin θ / (7.5·log(8/ω))) · (n·sin θ/d − (2/a)·log(‖p‖_J/|p(ζ)|)),
///
/// and additionally, when |p(ζ)| ≥ ‖p‖_J, the C(α,ω)·n consequence.
pub fn verify_tne(
    p: &PolyByZeros,
    k: &Polygon,
    v_idx: usize,
    zeta: Point,
    j: &BoundarySubset,
    omega: f64,
) -> Result<VerifierReport, VerifyError> {
    let vd = k.vertex_data(v_idx);
    let c_ao = constants::c_alpha_omega(vd.angle, omega, k.diameter())?;
    let frame = tilted_frame(k, v_idx, zeta)?;
    let td = frame_interval(k, &frame);
    let tol_t = 1e-9;
    for e in j.intervals() {
        if e.edge != td.edge || e.t0 < td.t0 - tol_t || e.t1 > td.t1 + tol_t {
            return Err(VerifyError::FramePrecondition);
        }
    }
    let j_len = j.measure(k);
    if j_len < omega * frame.b * (1.0 - 1e-12) {
        return Err(VerifyError::JTooSmall { len: j_len, need: omega * frame.b });
    }
    let n = p.degree();
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    let d = k.diameter();
    let sup_j = sup_norm_subset(p, k, Which::P, j);
    let log_p_zeta = p.log_abs(zeta);
    let lhs = ratio_at(p, zeta);
    let st = frame.theta.sin();
    let rhs = st / (7.5 * (8.0 / omega).ln())
        * (n as f64 * st / d - 2.0 / frame.a * (sup_j.log_value - log_p_zeta));
    let tol = 1e-9 * rhs.abs() + 1e-15;
    let main_ok = lhs >= rhs - tol;

    let consequence_applies = log_p_zeta >= sup_j.log_value;
    let mut cons_ok = true;
    let mut cons_note = String::from("consequence: n/a (|p(zeta)| < ||p||_J)");
    if consequence_applies {
        let bound = c_ao * n as f64;
        cons_ok = lhs >= bound - 1e-9 * bound;
        cons_note = format!("consequence C(a,w)*n={bound:.6e} holds={cons_ok}");
    }
    Ok(VerifierReport {
        name: "tne".into(),
        pass: main_ok && cons_ok,
        lhs,
        rhs,
        slack: lhs - rhs,
        tol,
        n,
        q: f64::NAN,
        notes: format!(
            "theta={:.6e}, a={:.6e}, b={:.6e}, |J|={j_len:.6e}, omega={omega:.4}, {cons_note}",
            frame.theta, frame.a, frame.b
        ),
        digest: digest(p, Some(k), &[v_idx as f64, zeta.re, zeta.im, omega]),
    })
}

/// Local-depth estimate: |p′(ζ)| ≥ (h(ζ,K)⁴/(1500·d⁵))·n·|p(ζ)| at sampled
/// ζ ∈ 𝒢(p), asserted pointwise wherever n ≥ 32·d⁴/h(ζ)⁴ and skipped
/// otherwise.
pub fn verify_local_depth(
    p: &PolyByZeros,
    k: &Polygon,
    q: f64,
) -> Result<VerifierReport, VerifyError> {
    let n = p.degree();
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    let d = k.diameter();
    let gs = g_set(p, k, q);
    let samples = gs.subset.sample_points(k, 512);
    let mut asserted = 0usize;
    let mut skipped = 0usize;
    let mut worst: Option<(f64, f64)> = None; // (ratio, bound)
    for (edge, t, z) in samples {
        let h = k.local_depth(edge, t);
        if (n as f64) < 32.0 * (d / h).powi(4) {
            skipped += 1;
            continue;
        }
        asserted += 1;
        let bound = h.powi(4) / (1500.0 * d.powi(5)) * n as f64;
        let ratio = ratio_at(p, z);
        // keep the sample with the least relative margin
        if worst.is_none_or(|(r, b)| ratio / bound < r / b) {
            worst = Some((ratio, bound));
        }
    }
    let (lhs, rhs) = worst.unwrap_or((0.0, 0.0));
    let tol = 1e-12 * rhs;
    Ok(VerifierReport {
        name: "local-depth".into(),
        pass: lhs >= rhs - tol,
        lhs,
        rhs,
        slack: lhs - rhs,
        tol,
        n,
        q,
        notes: if asserted == 0 {
            format!("vacuous: all {skipped} samples below pointwise n0")
        } else {
            format!("asserted={asserted}, skipped={skipped}")
        },
        digest: digest(p, Some(k), &[q]),
    })
}

/// Acute-vertex estimate: μ(α,q,d)·n^q·∫_{𝒢∩D_r(V)} |p|^q ≤ ∫_{Γ∩D_{8r}(V)} |p′|^q
/// for 0 < r ≤ R_V/8.
pub fn verify_acute(
    p: &PolyByZeros,
    k: &Polygon,
    v_idx: usize,
    r: f64,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<VerifierReport, VerifyError> {
    let vd = k.vertex_data(v_idx);
    if !vd.acute {
        return Err(GeomError::VertexNotAcute(v_idx).into());
    }
    let r_max = vd.r_v / 8.0;
    if r > r_max * (1.0 + 1e-12) || r <= 0.0 {
        return Err(VerifyError::RTooLarge { r, max: r_max });
    }
    let n = p.degree();
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    let boundary_case = (r - r_max).abs() <= 1e-12 * r_max;
    let d = k.diameter();
    let mu = constants::mu(vd.angle, q, d);
    let gset_n0 = constants::n0_gset(q);
    let (n0, clause) = if gset_n0 > 8 {
        (gset_n0, constants::N0Clause::GSetThreshold)
    } else {
        (8, constants::N0Clause::MinDegree8)
    };
    let v = k.vertex(v_idx);
    let gs = g_set(p, k, q);
    let g_near = gs.subset.intersect_disk(k, v, r);
    let gamma_near = BoundarySubset::full(k).intersect_disk(k, v, 8.0 * r);
    let deriv_int = lq_norm(p, k, q, Which::Deriv, spec, Some(&gamma_near));
    let lhs = deriv_int.integral();
    let mut notes = format!(
        "mu={mu:.6e}, r={r:.6e}, n0={n0}[{clause}]{}{}",
        if boundary_case { " (r = R_V/8 boundary case)" } else { "" },
        if n < n0 { format!(", n={n} < n0") } else { String::new() }
    );
    if g_near.is_empty() {
        notes.push_str(", vacuous: G misses D_r(V)");
        return Ok(VerifierReport {
            name: "acute".into(),
            pass: true,
            lhs,
            rhs: 0.0,
            slack: lhs,
            tol: 0.0,
            n,
            q,
            notes,
            digest: digest(p, Some(k), &[v_idx as f64, r, q]),
        });
    }
    let p_int = lq_norm(p, k, q, Which::P, spec, Some(&g_near));
    let rhs = mu * (n as f64).powf(q) * p_int.integral();
    let err = lhs * deriv_int.rel_err + rhs * p_int.rel_err;
    let tol = 3.0 * err + 1e-12 * rhs.abs();
    Ok(VerifierReport {
        name: "acute".into(),
        pass: lhs >= rhs - tol,
        lhs,
        rhs,
        slack: lhs - rhs,
        tol,
        n,
        q,
        notes,
        digest: digest(p, Some(k), &[v_idx as f64, r, q]),
    })
}

/// The polygon theorem: ‖p′‖_{L^q(∂K)} ≥ c(K)·n·‖p‖_{L^q(∂K)} for
/// p ∈ 𝒫_n(K). The report records the empirical oscillation ratio M_q(p)/n
/// and the n₀ clause that binds; for n below n₀ the inequality is still
/// checked and the shortfall noted.
pub fn verify_polygon_theorem(
    p: &PolyByZeros,
    k: &Polygon,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<VerifierReport, VerifyError> {
    let n = p.degree();
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    let d = k.diameter();
    if !p.zeros_in(k, 1e-9 * d) {
        return Err(VerifyError::ZerosOutsideK);
    }
    let summary = geometry_summary(k, q);
    let n0 = constants::n0_policy(q, d, summary.h0);
    let deriv = lq_norm(p, k, q, Which::Deriv, spec, None);
    let norm = lq_norm(p, k, q, Which::P, spec, None);
    let m_ratio = (deriv.log_norm - norm.log_norm).exp();
    let lhs = deriv.value;
    let rhs = summary.c_k * n as f64 * norm.value;
    let err = norm_abs_err(&deriv) + summary.c_k * n as f64 * norm_abs_err(&norm);
    let tol = 3.0 * err + 1e-12 * rhs.abs();
    Ok(VerifierReport {
        name: "polygon".into(),
        pass: lhs >= rhs - tol,
        lhs,
        rhs,
        slack: lhs - rhs,
        tol,
        n,
        q,
        notes: format!(
            "c(K)={:.6e}, M_q(p)/n={:.6e}, n0={} [{}]{}",
            summary.c_k,
            m_ratio / n as f64,
            n0.value,
            n0.clause,
            if n < n0.value { " (n < n0)" } else { "" }
        ),
        digest: digest(p, Some(k), &[q]),
    })
}

/// Pointwise disk bound |p′(z)| ≥ (n/2)·|p(z)| on |z| = 1 for polynomials
/// with all zeros in the closed unit disk, checked at `samples` roots of
/// unity. The report's lhs is the minimal ratio |p′/p|/n.
pub fn verify_disk(p: &PolyByZeros, samples: usize) -> Result<VerifierReport, VerifyError> {
    let n = p.degree();
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    if p.zeros().iter().any(|z| z.norm() > 1.0 + 1e-12) {
        return Err(VerifyError::ZerosOutsideDisk);
    }
    let mut min_ratio = f64::INFINITY;
    for j in 0..samples {
        let z = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / samples as f64);
        min_ratio = min_ratio.min(ratio_at(p, z) / n as f64);
    }
    let lhs = min_ratio;
    let rhs = 0.5;
    Ok(VerifierReport {
        name: "disk".into(),
        pass: lhs >= rhs - 1e-9,
        lhs,
        rhs,
        slack: lhs - rhs,
        tol: 1e-9,
        n,
        q: f64::NAN,
        notes: format!("samples={samples}"),
        digest: digest(p, None, &[samples as f64]),
    })
}

/// The diameter witness p(z) = (z−z₀)ⁿ with z₀ a diameter endpoint: its
/// sup-norm ratio ‖p′‖_∞/‖p‖_∞ equals n/d exactly. The L^q oscillation
/// ratio is recorded, and once n clears the threshold
/// 2(1+1/q)(d²/w²)·ln(d/w) it is checked against C_q·(w/d²)·n.
pub fn upper_witness(
    k: &Polygon,
    n: usize,
    q: f64,
    spec: &QuadratureSpec,
) -> Result<(PolyByZeros, VerifierReport), VerifyError> {
    if n < 1 {
        return Err(VerifyError::DegreeTooSmall { n, need: 1 });
    }
    let (z0, _) = k.diameter_pair();
    let d = k.diameter();
    let w = k.width();
    let p = PolyByZeros::monic(vec![z0; n]);
    let sup_p = sup_norm_subset(&p, k, Which::P, &BoundarySubset::full(k));
    let sup_dp = sup_norm_subset(&p, k, Which::Deriv, &BoundarySubset::full(k));
    let sup_ratio = (sup_dp.log_value - sup_p.log_value).exp();
    let expected = n as f64 / d;
    let sup_ok = (sup_ratio - expected).abs() <= 1e-12 * expected;

    let deriv = lq_norm(&p, k, q, Which::Deriv, spec, None);
    let norm = lq_norm(&p, k, q, Which::P, spec, None);
    let m_q = (deriv.log_norm - norm.log_norm).exp();
    let threshold = constants::upper_bound_n_threshold(q, d, w);
    let c_q = constants::c_q_upper(q);
    let upper = c_q * w / (d * d) * n as f64;
    let (upper_checked, upper_ok) = if (n as f64) >= threshold {
        (true, m_q <= upper * (1.0 + 1e-9))
    } else {
        (false, true)
    };
    let report = VerifierReport {
        name: "witness".into(),
        pass: sup_ok && upper_ok,
        lhs: sup_ratio,
        rhs: expected,
        slack: sup_ratio - expected,
        tol: 1e-12 * expected,
        n,
        q,
        notes: format!(
            "M_q(p)={m_q:.6e}, C_q*(w/d^2)*n={upper:.6e}, upper_checked={upper_checked}, threshold_n={threshold:.2}"
        ),
        digest: digest(&p, Some(k), &[q]),
    };
    Ok((p, report))
}
