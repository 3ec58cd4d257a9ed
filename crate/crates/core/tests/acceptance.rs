//! Acceptance suite. One test per criterion; each prints a single
//! `ACCEPTANCE <k> <name>: PASS/FAIL` line (run with `--nocapture` to see
//! the lines for passing tests). Tolerances are pinned in code.

use std::time::Instant;

use num_complex::Complex64;

use turan_core::boundary::{BoundarySubset, QuadratureSpec};
use turan_core::capacity::{fekete_diameter, polya_check, transfinite_diameter_regular, CompactSet};
use turan_core::constants;
use turan_core::geom::{shapes, tilted_frame, Polygon};
use turan_core::poly::PolyByZeros;
use turan_core::randpoly::RandomPolyGen;
use turan_core::search::{sweep, SearchConfig};
use turan_core::verify;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Criterion 1: pointwise disk bound |p'|/(n|p|) ≥ 1/2 − 1e-9 over 100
/// seeded zero sets per degree n ∈ {1,…,30}, 1000 boundary samples each,
/// in under 30 seconds.
#[test]
fn acceptance_01_disk_turan_bound() {
    let t0 = Instant::now();
    let mut worst = f64::INFINITY;
    for n in 1..=30usize {
        let mut gen = RandomPolyGen::new(1000 + n as u64);
        for case in 0..100 {
            let p = gen.uniform_in_disk(n);
            let rep = verify::verify_disk(&p, 1000).unwrap();
            worst = worst.min(rep.lhs);
            assert!(
                rep.lhs >= 0.5 - 1e-9,
                "disk bound violated: ratio {} at n={n}, case={case}",
                rep.lhs
            );
        }
    }
    let dt = t0.elapsed();
    assert!(dt.as_secs_f64() < 30.0, "runtime {dt:?} exceeds 30 s");
    println!("ACCEPTANCE 1 disk-turan: PASS (worst ratio {worst:.9}, {dt:.2?})");
}

/// Criterion 2: the equality witness (z−1)(z+1) at z = i gives the ratio
/// |p'/p| = n/2 = 1 within 1e-12.
#[test]
fn acceptance_02_equality_witness() {
    let p = PolyByZeros::monic(vec![c(1.0, 0.0), c(-1.0, 0.0)]);
    let z = c(0.0, 1.0);
    let direct = (p.deriv_eval(z) / p.eval(z)).norm();
    assert!((direct - 1.0).abs() <= 1e-12, "ratio {direct}");
    let via_sum = p.log_deriv(z).unwrap().norm();
    assert!((via_sum - 1.0).abs() <= 1e-12);
    println!("ACCEPTANCE 2 equality-witness: PASS (ratio {direct})");
}

/// Criterion 3: transfinite-diameter reproduction at point count 40, plus
/// the exact k = 6 vs 7 flip of the regular-k-gon closed form, in under two
/// minutes.
///
/// The three δ₄₀ brackets are asserted exactly as stated. They cannot hold
/// of the Fekete diameter exp(2·obj/(k(k−1))): on the unit circle the k=40
/// optimum (roots of unity) gives exactly 40^{1/39} ≈ 1.0992 ∉ [1.0, 1.02],
/// and the segment/square values carry the same ≈10-12% excess over Δ
/// (Gauss–Lobatto oracle: 0.55978 for the length-2 segment; optimised
/// square value 0.64940). The assertions are kept verbatim and this test is
/// expected to fail on them; the sub-check lines below record which parts
/// pass.
#[test]
fn acceptance_03_transfinite_diameters() {
    let t0 = Instant::now();
    let seg = fekete_diameter(&CompactSet::Segment(c(-1.0, 0.0), c(1.0, 0.0)), 40);
    let circ = fekete_diameter(&CompactSet::Disk { center: c(0.0, 0.0), radius: 1.0 }, 40);
    let square = fekete_diameter(&CompactSet::Polygon(shapes::unit_square()), 40);
    let cf4 = transfinite_diameter_regular(4, 1.0);
    let dt = t0.elapsed();

    let c3a = seg.delta_k >= 0.5 && seg.delta_k <= 0.51;
    let c3b = circ.delta_k >= 1.0 && circ.delta_k <= 1.02;
    let c3c = (square.delta_k - cf4).abs() <= 0.02 * cf4;
    let c3d = transfinite_diameter_regular(6, 1.0) <= 1.0 && transfinite_diameter_regular(7, 1.0) > 1.0;
    let c3t = dt.as_secs_f64() < 120.0;
    println!("  3a segment  delta_40 = {:.6} in [0.5, 0.51]: {}", seg.delta_k, c3a);
    println!("  3b circle   delta_40 = {:.6} in [1.0, 1.02]: {}", circ.delta_k, c3b);
    println!(
        "  3c square   delta_40 = {:.6} within 2% of {:.6}: {}",
        square.delta_k, cf4, c3c
    );
    println!("  3d closed form flips at k=7 (0.9204 < 1 < 1.0835): {c3d}");
    println!("  3t runtime {dt:.2?} < 120 s: {c3t}");
    let pass = c3a && c3b && c3c && c3d && c3t;
    println!(
        "ACCEPTANCE 3 transfinite-diameters: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(
        pass,
        "delta_40 brackets unattainable for exp(2 obj/(k(k-1))): the k-point Fekete value \
         exceeds the transfinite diameter by k^(1/(k-1))-type factors (circle: exactly \
         40^(1/39) = 1.0992); see the sub-check lines"
    );
}

/// Criterion 4: Pólya bound δ₃₀ ≥ |J|/4 for 20 seeded random interval
/// unions, never violated.
#[test]
fn acceptance_04_polya_bound() {
    let t0 = Instant::now();
    let mut gen = RandomPolyGen::new(40);
    for case in 0..20 {
        let pieces = 1 + case % 4;
        let mut cuts: Vec<f64> = (0..2 * pieces).map(|_| gen.gen_range(0.0, 1.0)).collect();
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let intervals: Vec<(f64, f64)> = cuts.chunks(2).map(|w| (w[0], w[1])).collect();
        let (_, rep) = polya_check(&intervals, 30);
        assert!(
            rep.pass,
            "Polya bound violated on case {case}: delta={} |J|/4={}",
            rep.lhs, rep.rhs
        );
    }
    println!("ACCEPTANCE 4 polya-bound: PASS ({:.2?})", t0.elapsed());
}

/// Criterion 5: Nikolskii and 𝒢-mass over 200 seeded random polynomials on
/// the unit square and the equilateral triangle, q ∈ {0.5, 1, 2}; the
/// 𝒢-mass fraction must reach 0.5 − 1e-6.
#[test]
fn acceptance_05_nikolskii_and_g_mass() {
    let t0 = Instant::now();
    let square = shapes::unit_square();
    let triangle = shapes::equilateral_triangle();
    let spec = QuadratureSpec::default();
    let mut min_frac = f64::INFINITY;
    for case in 0..200usize {
        let k = if case % 2 == 0 { &square } else { &triangle };
        let mut gen = RandomPolyGen::new(5000 + case as u64);
        let n = 1 + case % 30;
        let p = gen.mixed(k, n, case / 2);
        for q in [0.5, 1.0, 2.0] {
            let nik = verify::verify_nikolskii(&p, k, q, &spec).unwrap();
            assert!(nik.pass, "Nikolskii failed: case={case} q={q} {nik:?}");
            let gm = verify::verify_g_mass(&p, k, q, &spec).unwrap();
            assert!(gm.pass, "g-mass failed: case={case} q={q} {gm:?}");
            assert!(
                gm.lhs >= 0.5 - 1e-6,
                "g-mass fraction {} below 0.5-1e-6 at case={case} q={q}",
                gm.lhs
            );
            min_frac = min_frac.min(gm.lhs);
        }
    }
    println!(
        "ACCEPTANCE 5 nikolskii-gmass: PASS (min fraction {min_frac:.9}, {:.2?})",
        t0.elapsed()
    );
}

fn near_right_corner_polygon() -> Polygon {
    // angle at vertex 0 is π/2 − 1e-6: the right-angle frame values to six
    // digits while staying on the acute branch of the classification
    Polygon::validate(&[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 2.0), c(1e-6, 1.0)]).unwrap()
}

/// Criterion 6: tilted normal estimate on a (numerically) right-angle
/// vertex and a 60° vertex, 100 seeded admissible cases; the main display
/// always holds and the C(α,ω)·n consequence holds whenever its hypothesis
/// |p(ζ)| ≥ ‖p‖_J does.
#[test]
fn acceptance_06_tilted_normal_estimate() {
    let t0 = Instant::now();
    let corners: [(Polygon, usize); 2] = [
        (near_right_corner_polygon(), 0),
        (shapes::equilateral_triangle(), 0),
    ];
    let mut consequences = 0usize;
    for (poly_idx, (k, v)) in corners.iter().enumerate() {
        let vd = k.vertex_data(*v);
        let m = k.vertex_count();
        let v_pt = k.vertex(*v);
        let w_pt = k.vertex((*v + 1) % m);
        let max_d = (vd.side_prev / 8.0).min(0.95 * vd.side_next);
        let mut gen = RandomPolyGen::new(600 + poly_idx as u64);
        for case in 0..50usize {
            let dist = gen.gen_range(0.05 * max_d, max_d);
            let zeta = v_pt + (w_pt - v_pt) / vd.side_next * dist;
            let frame = tilted_frame(k, *v, zeta).unwrap();
            let iv = verify::frame_interval(k, &frame);
            let j = BoundarySubset::new(vec![iv]);
            let omega = j.measure(k) / frame.b;
            let n = 20 + (case * 3) % 41;
            let p = if case % 2 == 0 {
                gen.uniform(k, n)
            } else {
                PolyByZeros::monic(
                    (0..n)
                        .map(|i| {
                            let t = iv.t0 + (iv.t1 - iv.t0) * (i as f64 + 0.5) / n as f64;
                            k.boundary_point(iv.edge, t)
                        })
                        .collect(),
                )
            };
            let rep = verify::verify_tne(&p, k, *v, zeta, &j, omega).unwrap();
            assert!(rep.pass, "tne failed: polygon={poly_idx} case={case} {rep:?}");
            if rep.notes.contains("consequence C") {
                consequences += 1;
            }
        }
    }
    assert!(consequences >= 30, "only {consequences} cases exercised the consequence");
    println!(
        "ACCEPTANCE 6 tilted-normal: PASS (100 cases, {consequences} with consequence, {:.2?})",
        t0.elapsed()
    );
}

/// Criterion 7: acute-vertex theorem on the equilateral triangle at
/// r = R_V/8, q ∈ {1, 2}, 50 seeded polynomials each with n ≥ n₀ and the
/// binding clause logged in the report.
#[test]
fn acceptance_07_acute_vertex_theorem() {
    let t0 = Instant::now();
    let k = shapes::equilateral_triangle();
    let spec = QuadratureSpec::default();
    let r = k.vertex_data(0).r_v / 8.0;
    for q in [1.0, 2.0] {
        let n0 = constants::n0_gset(q).max(8);
        let mut gen = RandomPolyGen::new(700 + q as u64);
        for case in 0..50usize {
            let n = n0 + (case * 5) % 40;
            let p = gen.mixed(&k, n, case);
            let rep = verify::verify_acute(&p, &k, 0, r, q, &spec).unwrap();
            assert!(rep.pass, "acute failed: q={q} case={case} {rep:?}");
            assert!(rep.notes.contains("n0="), "n0 clause not logged: {}", rep.notes);
        }
    }
    println!("ACCEPTANCE 7 acute-vertex: PASS (100 cases, {:.2?})", t0.elapsed());
}

/// Criterion 8: main-theorem bracket. Sweep n ∈ {2,4,8,16,32} at q = 2 with
/// 8 restarts on the triangle and the square: audited best ≥ c(K)·n, best ≤
/// C₂·(w/d²)·n past the upper-bound threshold, and the ratio band best/n
/// stays above 0.9× the band of the two smallest degrees.
///
/// The bracket checks are theorem-backed and assert immediately. The band
/// check is kept verbatim and is expected to fail: the minimum over zero
/// configurations genuinely decays faster than 10% from its n ∈ {2,4}
/// values before flattening. On the triangle the n = 2 optimum is √5
/// (zeros at two vertices, confirmed by hand), best/2 ≈ 1.118, while
/// raised-budget searches reach best/n ≤ 0.61 by n = 16, so no honest
/// optimiser can keep the band within 0.9× of the small-degree values —
/// a sharper optimiser only widens the gap.
#[test]
fn acceptance_08_main_theorem_bracket() {
    let t0 = Instant::now();
    let c2 = constants::c_q_upper(2.0);
    assert!((c2 - 653.771286953).abs() < 1e-6);
    let mut band_ok_all = true;
    for (name, k) in [
        ("triangle", shapes::equilateral_triangle()),
        ("square", shapes::unit_square()),
    ] {
        let cfg = SearchConfig::new(1, 2.0).with_seed(8).with_restarts(8);
        let rows = sweep(&k, &[2, 4, 8, 16, 32], &[2.0], &cfg);
        let mut ratios = Vec::new();
        for row in &rows {
            assert!(
                row.best >= row.lower_ck_n,
                "{name}: best {} below c(K)·n = {}",
                row.best,
                row.lower_ck_n
            );
            if row.upper_applies {
                assert!(
                    row.best <= row.upper_cq_n,
                    "{name}: best {} above C_2(w/d^2)n = {} at n={}",
                    row.best,
                    row.upper_cq_n,
                    row.n
                );
            }
            ratios.push(row.best_over_n);
            println!(
                "  {name} n={} best={:.6} best/n={:.6} bracket=[{:.3e}, {:.3e}]",
                row.n, row.best, row.best_over_n, row.lower_ck_n, row.upper_cq_n
            );
        }
        let small_band = ratios[0].min(ratios[1]);
        let min_all = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let band_ok = min_all > 0.0 && min_all >= 0.9 * small_band;
        println!(
            "  {name} band: min {min_all:.6} vs 0.9 x small-n band {:.6}: {band_ok}",
            0.9 * small_band
        );
        band_ok_all &= band_ok;
    }
    println!(
        "ACCEPTANCE 8 main-theorem-bracket: {} ({:.2?})",
        if band_ok_all { "PASS" } else { "FAIL (band sub-check)" },
        t0.elapsed()
    );
    assert!(
        band_ok_all,
        "brackets hold but the best/n band decays more than 10% below its n in {{2,4}} \
         values; this is a property of the minimum itself (triangle: exact n=2 value \
         sqrt(5), raised-budget minima reach 0.61·n by n=16), not an optimiser artifact"
    );
}

/// Criterion 9: the diameter witness (z−z₀)ⁿ has sup-norm ratio exactly n/d
/// (to 1e-12 relative) on both test polygons for n ∈ {5, 10, 50}.
#[test]
fn acceptance_09_remark_witness() {
    let spec = QuadratureSpec::default();
    for (name, k) in [
        ("square", shapes::unit_square()),
        ("triangle", shapes::equilateral_triangle()),
    ] {
        let d = k.diameter();
        for n in [5usize, 10, 50] {
            let (_, rep) = verify::upper_witness(&k, n, 2.0, &spec).unwrap();
            assert!(rep.pass, "{name} n={n}: {rep:?}");
            let expected = n as f64 / d;
            assert!(
                (rep.lhs - expected).abs() <= 1e-12 * expected,
                "{name} n={n}: sup ratio {} vs n/d {expected}",
                rep.lhs
            );
        }
    }
    println!("ACCEPTANCE 9 remark-witness: PASS");
}
