//! Polynomials represented by their zero sets: p(z) = leading·∏(z − z_j).
//!
//! Zero multiplicity is represented by repetition in the list. All norm
//! computations consume |p| through the log-magnitude channel (`log_abs`,
//! `log_abs_deriv`) because degrees of a few hundred with diameters above 1
//! overflow doubles in the direct product.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geom::Polygon;

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("evaluation point coincides with a zero of p")]
    EvalAtZero,
}

/// Direct products are used up to this degree; beyond it evaluation goes
/// through log-magnitude + argument accumulation.
const DIRECT_PRODUCT_MAX: usize = 64;

#[derive(Serialize, Deserialize)]
struct PolyJson {
    zeros: Vec<[f64; 2]>,
    #[serde(default = "one")]
    leading: [f64; 2],
}

fn one() -> [f64; 2] {
    [1.0, 0.0]
}

/// p(z) = leading·∏_j (z − z_j), degree = number of zeros.
///
/// The degree-0 case (empty zero list) is admitted so constants can flow
/// through the quadrature machinery; the verifiers require degree ≥ 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct PolyByZeros {
    zeros: Vec<Complex64>,
    leading: Complex64,
}

impl TryFrom<PolyJson> for PolyByZeros {
    type Error = PolyError;
    fn try_from(j: PolyJson) -> Result<Self, PolyError> {
        PolyByZeros::new(
            j.zeros.iter().map(|z| Complex64::new(z[0], z[1])).collect(),
            Complex64::new(j.leading[0], j.leading[1]),
        )
    }
}

impl From<PolyByZeros> for PolyJson {
    fn from(p: PolyByZeros) -> Self {
        PolyJson {
            zeros: p.zeros.iter().map(|z| [z.re, z.im]).collect(),
            leading: [p.leading.re, p.leading.im],
        }
    }
}

/// A complex value carried as (log of magnitude, argument).
#[derive(Debug, Clone, Copy)]
pub struct LogComplex {
    pub log_abs: f64,
    pub arg: f64,
}

impl LogComplex {
    pub fn to_complex(self) -> Complex64 {
        Complex64::from_polar(self.log_abs.exp(), self.arg)
    }
}

impl PolyByZeros {
    pub fn new(zeros: Vec<Complex64>, leading: Complex64) -> Result<Self, PolyError> {
        if leading == Complex64::new(0.0, 0.0) {
            return Err(PolyError::ZeroLeading);
        }
        Ok(PolyByZeros { zeros, leading })
    }

    pub fn monic(zeros: Vec<Complex64>) -> Self {
        PolyByZeros { zeros, leading: Complex64::new(1.0, 0.0) }
    }

    /// Degree-0 constant, admitted for quadrature tests only.
    pub fn constant(c: Complex64) -> Result<Self, PolyError> {
        Self::new(Vec::new(), c)
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn leading(&self) -> Complex64 {
        self.leading
    }

    /// p(z). Uses the direct product for small degrees and the log channel
    /// beyond `DIRECT_PRODUCT_MAX`; the result can overflow/underflow f64
    /// for extreme inputs, which is inherent to returning a double.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        if self.zeros.len() <= DIRECT_PRODUCT_MAX {
            let mut acc = self.leading;
            for &zj in &self.zeros {
                acc *= z - zj;
            }
            acc
        } else {
            self.log_eval(z).to_complex()
        }
    }

    /// ln|p(z)|; −∞ exactly at zeros of p.
    pub fn log_abs(&self, z: Complex64) -> f64 {
        let mut s = self.leading.norm().ln();
        for &zj in &self.zeros {
            s += (z - zj).norm().ln();
        }
        s
    }

    /// p(z) in log-magnitude + argument form.
    pub fn log_eval(&self, z: Complex64) -> LogComplex {
        let mut log_abs = self.leading.norm().ln();
        let mut arg = self.leading.arg();
        for &zj in &self.zeros {
            let f = z - zj;
            log_abs += f.norm().ln();
            arg += f.arg();
        }
        LogComplex { log_abs, arg }
    }

    fn exact_zero_hits(&self, z: Complex64) -> usize {
        self.zeros.iter().filter(|&&zj| zj == z).count()
    }

    /// p′(z). Away from the zero set this is p(z)·Σ 1/(z − z_j); if z hits a
    /// zero exactly the product rule reduces to the single surviving term
    /// (or to 0 for a multiple zero).
    pub fn deriv_eval(&self, z: Complex64) -> Complex64 {
        let n = self.zeros.len();
        if n == 0 {
            return Complex64::new(0.0, 0.0);
        }
        match self.exact_zero_hits(z) {
            0 => {
                let s: Complex64 = self.zeros.iter().map(|&zj| (z - zj).inv()).sum();
                self.eval(z) * s
            }
            1 => {
                let mut acc = self.leading;
                let mut skipped = false;
                for &zj in &self.zeros {
                    if !skipped && zj == z {
                        skipped = true;
                        continue;
                    }
                    acc *= z - zj;
                }
                acc
            }
            _ => Complex64::new(0.0, 0.0),
        }
    }

    /// ln|p′(z)|; −∞ where p′ vanishes.
    pub fn log_abs_deriv(&self, z: Complex64) -> f64 {
        let n = self.zeros.len();
        if n == 0 {
            return f64::NEG_INFINITY;
        }
        match self.exact_zero_hits(z) {
            0 => {
                let s: Complex64 = self.zeros.iter().map(|&zj| (z - zj).inv()).sum();
                self.log_abs(z) + s.norm().ln()
            }
            1 => {
                let mut acc = self.leading.norm().ln();
                let mut skipped = false;
                for &zj in &self.zeros {
                    if !skipped && zj == z {
                        skipped = true;
                        continue;
                    }
                    acc += (z - zj).norm().ln();
                }
                acc
            }
            _ => f64::NEG_INFINITY,
        }
    }

    /// The logarithmic derivative p′/p(z) = Σ 1/(z − z_j).
    ///
    /// Errors with [`PolyError::EvalAtZero`] when z is numerically a zero of
    /// p (closer than 1e-14 times the spread of the zero set as seen from z).
    pub fn log_deriv(&self, z: Complex64) -> Result<Complex64, PolyError> {
        let mut min_d = f64::INFINITY;
        let mut max_d: f64 = 0.0;
        for &zj in &self.zeros {
            let d = (z - zj).norm();
            min_d = min_d.min(d);
            max_d = max_d.max(d);
        }
        if !self.zeros.is_empty() && min_d <= 1e-14 * max_d.max(f64::MIN_POSITIVE) {
            return Err(PolyError::EvalAtZero);
        }
        Ok(self.zeros.iter().map(|&zj| (z - zj).inv()).sum())
    }

    /// True iff every zero lies in K or within `tol` of ∂K.
    pub fn zeros_in(&self, k: &Polygon, tol: f64) -> bool {
        self.zeros
            .iter()
            .all(|&z| k.contains(z) || k.distance_to_boundary(z) <= tol)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::shapes;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_basics() {
        let p = PolyByZeros::monic(vec![c(0.0, 0.0)]);
        assert_eq!(p.eval(c(2.0, 0.0)), c(2.0, 0.0));
        let p = PolyByZeros::monic(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(p.eval(c(0.0, 1.0)), c(-2.0, 0.0));
    }

    #[test]
    fn log_channel_avoids_underflow() {
        let p = PolyByZeros::monic(vec![c(0.0, 0.0); 100]);
        let v = p.log_abs(c(0.5, 0.0));
        assert!((v - 100.0 * 0.5f64.ln()).abs() < 1e-10);
        assert!(v.is_finite());
        // eval goes through the log channel for n > 64 and still matches
        // 2^-100 up to the accumulated rounding of the 100-term log sum
        let direct = p.eval(c(0.5, 0.0));
        assert!((direct.norm() / 0.5f64.powi(100) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn log_matches_direct_product_small_degree() {
        let zeros: Vec<Complex64> = (0..30)
            .map(|j| c(0.3 * (j as f64 * 1.7).cos(), 0.4 * (j as f64 * 2.3).sin()))
            .collect();
        let p = PolyByZeros::new(zeros, c(1.5, -0.25)).unwrap();
        for j in 0..50 {
            let z = c(2.0 * (j as f64 * 0.37).cos(), 2.0 * (j as f64 * 0.61).sin());
            let direct = p.eval(z);
            let lc = p.log_eval(z).to_complex();
            assert!((direct - lc).norm() <= 1e-12 * direct.norm());
        }
    }

    #[test]
    fn deriv_examples() {
        let p = PolyByZeros::monic(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
        assert!((p.deriv_eval(c(0.0, 1.0)) - c(0.0, 2.0)).norm() < 1e-15);
        let p = PolyByZeros::monic(vec![c(0.0, 0.0); 7]);
        assert!((p.deriv_eval(c(1.0, 0.0)) - c(7.0, 0.0)).norm() < 1e-15);
        let p = PolyByZeros::monic(vec![c(0.0, 0.0), c(1.0, 0.0)]);
        assert!((p.deriv_eval(c(0.0, 0.0)) - c(-1.0, 0.0)).norm() < 1e-15);
        // multiple zero: derivative vanishes there
        let p = PolyByZeros::monic(vec![c(0.5, 0.5), c(0.5, 0.5), c(0.0, 0.0)]);
        assert_eq!(p.deriv_eval(c(0.5, 0.5)), c(0.0, 0.0));
    }

    #[test]
    fn deriv_matches_finite_differences() {
        let zeros: Vec<Complex64> = (0..12)
            .map(|j| c((j as f64 * 0.9).cos(), (j as f64 * 1.3).sin()))
            .collect();
        let p = PolyByZeros::new(zeros, c(0.7, 0.1)).unwrap();
        let h = 1e-6;
        for j in 0..200 {
            let z = c(3.0 * (j as f64 * 0.11).cos(), 3.0 * (j as f64 * 0.17).sin());
            if p.zeros().iter().any(|&zj| (z - zj).norm() < 0.3) {
                continue;
            }
            let fd = (p.eval(z + c(h, 0.0)) - p.eval(z - c(h, 0.0))) / c(2.0 * h, 0.0);
            let ex = p.deriv_eval(z);
            assert!((fd - ex).norm() < 1e-6 * ex.norm().max(1.0), "z = {z}");
        }
    }

    #[test]
    fn log_deriv_examples() {
        let p = PolyByZeros::monic(vec![c(0.0, 0.0)]);
        assert!((p.log_deriv(c(2.0, 0.0)).unwrap() - c(0.5, 0.0)).norm() < 1e-15);
        // p = z²−1 at i: p'/p = 2i/(i²−1) = 2i/(−2) = −i
        let p = PolyByZeros::monic(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
        let ld = p.log_deriv(c(0.0, 1.0)).unwrap();
        assert!((ld - c(0.0, -1.0)).norm() < 1e-15);
        let ratio = p.deriv_eval(c(0.0, 1.0)) / p.eval(c(0.0, 1.0));
        assert!((ld - ratio).norm() < 1e-14);
        // zⁿ at e^{iφ}: n·e^{-iφ}
        let n = 17;
        let p = PolyByZeros::monic(vec![c(0.0, 0.0); n]);
        let z = Complex64::from_polar(1.0, 0.9);
        let ld = p.log_deriv(z).unwrap();
        let expect = Complex64::from_polar(n as f64, -0.9);
        assert!((ld - expect).norm() < 1e-12);
        // at a zero: error
        assert!(matches!(p.log_deriv(c(0.0, 0.0)), Err(PolyError::EvalAtZero)));
    }

    #[test]
    fn log_deriv_consistent_with_quotient() {
        let zeros: Vec<Complex64> = (0..9)
            .map(|j| c(0.5 * (j as f64).cos(), 0.5 * (j as f64).sin()))
            .collect();
        let p = PolyByZeros::new(zeros, c(2.0, 1.0)).unwrap();
        for j in 0..100 {
            let z = c(4.0 * (j as f64 * 0.13).cos(), 4.0 * (j as f64 * 0.19).sin());
            let ld = p.log_deriv(z).unwrap();
            let q = p.deriv_eval(z) / p.eval(z);
            assert!((ld - q).norm() <= 1e-10 * ld.norm().max(1e-30));
        }
    }

    #[test]
    fn zeros_in_polygon() {
        let k = shapes::unit_square();
        let p = PolyByZeros::monic(k.vertices().to_vec());
        assert!(p.zeros_in(&k, 0.0));
        let far = PolyByZeros::monic(vec![c(0.5, 0.5) + c(2.0 * k.diameter(), 0.0)]);
        assert!(!far.zeros_in(&k, 0.0));
        let on_edge = PolyByZeros::monic(vec![c(0.5, 0.0)]);
        assert!(on_edge.zeros_in(&k, 0.0));
    }

    #[test]
    fn json_schema() {
        let p = PolyByZeros::new(vec![c(1.0, 2.0)], c(3.0, 0.0)).unwrap();
        let s = p.to_json();
        assert_eq!(s, "{\"zeros\":[[1.0,2.0]],\"leading\":[3.0,0.0]}");
        let back = PolyByZeros::from_json(&s).unwrap();
        assert_eq!(p, back);
        // leading defaults to 1
        let q = PolyByZeros::from_json("{\"zeros\":[[0.0,0.0]]}").unwrap();
        assert_eq!(q.leading(), c(1.0, 0.0));
    }
}
