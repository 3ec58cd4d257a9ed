//! Closed-form constants of the verified inequalities, plus the policy for
//! the degree threshold n₀.
//!
//! All formulas are evaluated exactly as stated:
//!   λ(q)      = (8π(q+1))^{-1/q}
//!   θ(α)      = ½·arcsin(sin α / 8)          (so 8·sin 2θ = sin α)
//!   ω_α       = 2^{-5}·sin α
//!   C(α,ω,d)  = sin²α / (2000·d·log(8/ω))     for ω ∈ (0, 8/e)
//!   κ(α,d)    = C(α, ω_α, d) = sin²α / (2000·d·log(2⁸/sin α))
//!   μ(α,q,d)  = [2κ^{-q} + (1 + 2⁷·sin^{-2}α)·(8d/sin α)^q]^{-1}
//!   C_q       = 121·(3q+2+2√(q²+3q+1))/(5q)·(3+2q+2√(q²+3q+1))^{1/q}
//!
//! μ is written here with an explicit d-dependence: the κ^{-q} and (8d/sinα)^q
//! terms both scale like d^q, so μ^{1/q} scales like 1/d as the inequality
//! μ·n^q·∫|p|^q ≤ ∫|p′|^q requires dimensionally.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConstantsError {
    #[error("omega = {0} outside (0, 8/e)")]
    OmegaOutOfRange(f64),
}

/// 8/e, the open upper end of the admissible ω range.
pub const OMEGA_MAX: f64 = 8.0 / std::f64::consts::E;

pub fn lambda(q: f64) -> f64 {
    (8.0 * std::f64::consts::PI * (q + 1.0)).powf(-1.0 / q)
}

pub fn theta(alpha: f64) -> f64 {
    0.5 * (alpha.sin() / 8.0).asin()
}

pub fn omega_alpha(alpha: f64) -> f64 {
    alpha.sin() / 32.0
}

// The admissible range is taken right-closed: log(8/ω) = 1 at ω = 8/e and
// every estimate using it still holds there.
pub fn c_alpha_omega(alpha: f64, omega: f64, d: f64) -> Result<f64, ConstantsError> {
    if !(omega > 0.0 && omega <= OMEGA_MAX) {
        return Err(ConstantsError::OmegaOutOfRange(omega));
    }
    Ok(alpha.sin().powi(2) / (2000.0 * d * (8.0 / omega).ln()))
}

pub fn kappa(alpha: f64, d: f64) -> f64 {
    alpha.sin().powi(2) / (2000.0 * d * (256.0 / alpha.sin()).ln())
}

pub fn mu(alpha: f64, q: f64, d: f64) -> f64 {
    let s = alpha.sin();
    let k = kappa(alpha, d);
    1.0 / (2.0 * k.powf(-q) + (1.0 + 128.0 / (s * s)) * (8.0 * d / s).powf(q))
}

/// The constant of the L^q upper bound ‖p′‖ ≤ C_q·(w/d²)·n·‖p‖.
pub fn c_q_upper(q: f64) -> f64 {
    let s = (q * q + 3.0 * q + 1.0).sqrt();
    121.0 * (3.0 * q + 2.0 + 2.0 * s) / (5.0 * q) * (3.0 + 2.0 * q + 2.0 * s).powf(1.0 / q)
}

/// Degree threshold of the upper-bound theorem: it applies for
/// n ≥ 2(1+1/q)·(d/w)²·ln(d/w).
pub fn upper_bound_n_threshold(q: f64, d: f64, w: f64) -> f64 {
    2.0 * (1.0 + 1.0 / q) * (d / w).powi(2) * (d / w).ln()
}

/// Bundle of every closed-form constant at one (α, q, d, ω).
#[derive(Debug, Clone, Serialize)]
pub struct Constants {
    pub alpha: f64,
    pub q: f64,
    pub d: f64,
    pub omega: f64,
    pub lambda: f64,
    pub theta: f64,
    pub omega_alpha: f64,
    pub c_alpha_omega: f64,
    pub kappa: f64,
    pub mu: f64,
    pub c_q: f64,
}

pub fn constants(alpha: f64, q: f64, d: f64, omega: f64) -> Result<Constants, ConstantsError> {
    Ok(Constants {
        alpha,
        q,
        d,
        omega,
        lambda: lambda(q),
        theta: theta(alpha),
        omega_alpha: omega_alpha(alpha),
        c_alpha_omega: c_alpha_omega(alpha, omega, d)?,
        kappa: kappa(alpha, d),
        mu: mu(alpha, q, d),
        c_q: c_q_upper(q),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum N0Clause {
    /// n ≥ 8, required by the pointwise log bound on 𝒢.
    MinDegree8,
    /// smallest n with 2^{-n} < λ(q)·n^{-2/q}, required by the one-side dichotomy.
    GSetThreshold,
    /// n ≥ 32·d⁴/h₀⁴, required by the local-depth estimate for q < 1.
    LocalDepth,
}

impl std::fmt::Display for N0Clause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            N0Clause::MinDegree8 => write!(f, "n>=8"),
            N0Clause::GSetThreshold => write!(f, "2^-n < lambda*n^(-2/q)"),
            N0Clause::LocalDepth => write!(f, "n >= 32*d^4/h0^4"),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct N0 {
    pub value: usize,
    pub clause: N0Clause,
}

/// Smallest n with 2^{-n} < λ(q)·n^{-2/q} (capped at 10⁶; the inequality
/// always holds eventually since the left side decays geometrically).
pub fn n0_gset(q: f64) -> usize {
    let lam = lambda(q);
    let mut n = 1usize;
    while n < 1_000_000 {
        if 0.5f64.powi(n as i32) < lam * (n as f64).powf(-2.0 / q) {
            return n;
        }
        n += 1;
    }
    n
}

/// Combined policy n₀ = max(8, n₀_gset(q), ⌈32·d⁴/h₀⁴⌉) with the binding
/// clause recorded. The last clause can be astronomically large for thin
/// geometry; callers report it rather than refusing to run.
pub fn n0_policy(q: f64, d: f64, h0: f64) -> N0 {
    let gset = n0_gset(q);
    let depth_f = 32.0 * (d / h0).powi(4);
    let depth = if depth_f >= usize::MAX as f64 { usize::MAX } else { depth_f.ceil() as usize };
    let mut n0 = N0 { value: 8, clause: N0Clause::MinDegree8 };
    if gset > n0.value {
        n0 = N0 { value: gset, clause: N0Clause::GSetThreshold };
    }
    if depth > n0.value {
        n0 = N0 { value: depth, clause: N0Clause::LocalDepth };
    }
    n0
}
