//! Plain Nelder–Mead simplex minimisation over R^d.
//!
//! Standard coefficients (reflect 1, expand 2, contract 1/2, shrink 1/2),
//! deterministic given the start point. Used by the oscillation search and
//! the Chebyshev-number node optimisation.

#[derive(Debug, Clone, Copy)]
pub struct NmOptions {
    pub max_iter: usize,
    /// stop when the simplex f-spread falls below f_tol·(1 + |f_best|)
    pub f_tol: f64,
    pub x_tol: f64,
}

impl Default for NmOptions {
    fn default() -> Self {
        NmOptions { max_iter: 4000, f_tol: 1e-10, x_tol: 1e-10 }
    }
}

#[derive(Debug, Clone)]
pub struct NmResult {
    pub x: Vec<f64>,
    pub f: f64,
    pub iters: usize,
    pub evals: usize,
    pub converged: bool,
}

pub fn nelder_mead<F: FnMut(&[f64]) -> f64>(
    mut f: F,
    x0: &[f64],
    step: &[f64],
    opts: &NmOptions,
) -> NmResult {
    let dim = x0.len();
    assert!(dim >= 1 && step.len() == dim);
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let f0 = eval(x0, &mut evals);
    simplex.push((x0.to_vec(), f0));
    for i in 0..dim {
        let mut x = x0.to_vec();
        x[i] += if step[i] != 0.0 { step[i] } else { 1e-3 };
        let v = eval(&x, &mut evals);
        simplex.push((x, v));
    }

    let mut iters = 0usize;
    let mut converged = false;
    while iters < opts.max_iter {
        iters += 1;
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
        let best = simplex[0].1;
        let worst = simplex[dim].1;
        let spread = (worst - best).abs();
        let xspread = (0..dim)
            .map(|j| {
                let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
                for (x, _) in &simplex {
                    lo = lo.min(x[j]);
                    hi = hi.max(x[j]);
                }
                hi - lo
            })
            .fold(0.0f64, f64::max);
        if spread <= opts.f_tol * (1.0 + best.abs()) && xspread <= opts.x_tol {
            converged = true;
            break;
        }

        // centroid of all but the worst
        let mut centroid = vec![0.0; dim];
        for (x, _) in simplex.iter().take(dim) {
            for j in 0..dim {
                centroid[j] += x[j] / dim as f64;
            }
        }
        let lerp = |a: &[f64], b: &[f64], t: f64| -> Vec<f64> {
            (0..dim).map(|j| a[j] + t * (b[j] - a[j])).collect()
        };

        let xr = lerp(&centroid, &simplex[dim].0, -1.0);
        let fr = eval(&xr, &mut evals);
        if fr < simplex[0].1 {
            let xe = lerp(&centroid, &simplex[dim].0, -2.0);
            let fe = eval(&xe, &mut evals);
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[dim].1 {
                let x = lerp(&centroid, &simplex[dim].0, -0.5);
                let v = eval(&x, &mut evals);
                (x, v)
            } else {
                let x = lerp(&centroid, &simplex[dim].0, 0.5);
                let v = eval(&x, &mut evals);
                (x, v)
            };
            if fc < simplex[dim].1.min(fr) {
                simplex[dim] = (xc, fc);
            } else {
                // shrink towards the best vertex
                let best_x = simplex[0].0.clone();
                for item in simplex.iter_mut().skip(1) {
                    item.0 = lerp(&best_x, &item.0, 0.5);
                    item.1 = eval(&item.0, &mut evals);
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    NmResult { x: simplex[0].0.clone(), f: simplex[0].1, iters, evals, converged }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimizes_quadratic() {
        let r = nelder_mead(
            |x| (x[0] - 3.0).powi(2) + 2.0 * (x[1] + 1.0).powi(2),
            &[0.0, 0.0],
            &[0.5, 0.5],
            &NmOptions::default(),
        );
        assert!(r.converged);
        assert!((r.x[0] - 3.0).abs() < 1e-6 && (r.x[1] + 1.0).abs() < 1e-6);
    }

    #[test]
    fn minimizes_rosenbrock() {
        let r = nelder_mead(
            |x| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2),
            &[-1.2, 1.0],
            &[0.2, 0.2],
            &NmOptions { max_iter: 20000, ..Default::default() },
        );
        assert!((r.x[0] - 1.0).abs() < 1e-4 && (r.x[1] - 1.0).abs() < 1e-4);
    }
}
