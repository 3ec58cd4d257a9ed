//! Structured pass/fail records emitted by every verifier.
//!
//! Orientation is fixed per verifier: `pass ⟺ lhs ≥ rhs − tol`, where lhs is
//! the side the theorem bounds from below and tol combines three times the
//! achieved quadrature error with a relative floor of 1e-12·|rhs|.

use serde::Serialize;

/// JSON/CSV schema: {name, pass, lhs, rhs, slack, tol, n, q, notes} plus the
/// inputs digest.
#[derive(Debug, Clone, Serialize)]
pub struct VerifierReport {
    pub name: String,
    pub pass: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub tol: f64,
    pub n: usize,
    pub q: f64,
    pub notes: String,
    pub digest: String,
}

impl VerifierReport {
    pub fn csv_header() -> &'static str {
        "name,pass,lhs,rhs,slack,tol,n,q,notes,digest"
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.name,
            self.pass,
            self.lhs,
            self.rhs,
            self.slack,
            self.tol,
            self.n,
            self.q,
            csv_quote(&self.notes),
            self.digest
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Combined tolerance for one-sided checks backed by quadrature: three times
/// the absolute quadrature-error estimate plus a 1e-12 relative floor.
pub fn one_sided_tol(quad_err_abs: f64, rhs: f64) -> f64 {
    3.0 * quad_err_abs + 1e-12 * rhs.abs()
}

/// FNV-1a over the canonical little-endian bytes of a float stream; stable
/// across runs and platforms, used as the inputs digest.
pub fn digest_f64s<I: IntoIterator<Item = f64>>(values: I) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for v in values {
        for b in v.to_le_bytes() {
            hash ^= b as u64;
            hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    format!("{hash:016x}")
}
