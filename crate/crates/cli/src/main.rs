//! `turan` — command-line surface of the oscillation laboratory.
//!
//! Exit codes: 0 all checks passed, 1 a verifier reported failure, 2 usage
//! or input error. Runs are reproducible from the command line alone: the
//! only sources of variation are the explicit flags (no environment
//! configuration), and every run logs its seed, quadrature settings, n₀
//! clause and library version to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use turan_core::boundary::{BoundarySubset, QuadratureSpec};
use turan_core::capacity::{fekete_diameter, transfinite_diameter_regular, CompactSet};
use turan_core::constants;
use turan_core::geom::{geometry_summary, shapes, tilted_frame, Polygon};
use turan_core::poly::PolyByZeros;
use turan_core::randpoly::RandomPolyGen;
use turan_core::report::VerifierReport;
use turan_core::search::{sweep, SearchConfig, SweepRow};
use turan_core::verify;

#[derive(Parser)]
#[command(name = "turan", version, about = "Numerical laboratory for Turan-type oscillation inequalities on convex polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// extra per-case diagnostics on stderr
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Disk,
    Nikolskii,
    #[value(name = "g-mass")]
    GMass,
    Oneside,
    Tne,
    #[value(name = "local-depth")]
    LocalDepth,
    Acute,
    Polygon,
    Witness,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Disk => "disk",
            Suite::Nikolskii => "nikolskii",
            Suite::GMass => "g-mass",
            Suite::Oneside => "oneside",
            Suite::Tne => "tne",
            Suite::LocalDepth => "local-depth",
            Suite::Acute => "acute",
            Suite::Polygon => "polygon",
            Suite::Witness => "witness",
        }
    }

    fn needs_polygon(self) -> bool {
        !matches!(self, Suite::Disk)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Geometric summary: d, w, vertex data, delta0, h0, c0, mu, c(K)
    Geom {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a named verifier over seeded random polynomials
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        polygon: Option<PathBuf>,
        /// polynomial degree
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// number of random cases
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// vertex index (defaults to the first acute vertex)
        #[arg(long)]
        vertex: Option<usize>,
        /// |V zeta| along the side `[V,W]` for the tne suite
        #[arg(long)]
        zeta: Option<f64>,
        /// disk radius for the acute suite (defaults to R_V/8)
        #[arg(long)]
        r: Option<f64>,
        /// measure parameter for the tne suite (defaults to |J|/b)
        #[arg(long)]
        omega: Option<f64>,
        /// boundary samples for the disk suite
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// write the report stream to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minimise the oscillation factor M_q(p) over zero configurations
    Sweep {
        #[arg(long)]
        polygon: PathBuf,
        /// degrees, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// exponents, comma separated
        #[arg(long, value_delimiter = ',', default_values_t = [2.0])]
        q: Vec<f64>,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV output path
        #[arg(long)]
        out: PathBuf,
    },
    /// Fekete-diameter estimation on a compact set
    Capacity {
        /// real segment "a,b"
        #[arg(long, allow_hyphen_values = true)]
        segment: Option<String>,
        /// regular k-gon vertex count (k >= 3)
        #[arg(long)]
        regular: Option<usize>,
        /// side length for --regular
        #[arg(long, default_value_t = 1.0)]
        side: f64,
        #[arg(long)]
        polygon: Option<PathBuf>,
        /// disk of the given radius (boundary carrier)
        #[arg(long)]
        disk: Option<f64>,
        /// real interval union "a,b;c,d;..."
        #[arg(long, allow_hyphen_values = true)]
        intervals: Option<String>,
        /// point count
        #[arg(long, default_value_t = 40)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Errors that terminate the run with exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn load_polygon(path: &PathBuf) -> Result<Polygon, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
    Polygon::from_json(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Geom { polygon, q, format } => {
            if q <= 0.0 {
                return Err(UsageError("q must be positive".into()));
            }
            let k = load_polygon(&polygon)?;
            let s = geometry_summary(&k, q);
            eprintln!("# turan v{} cmd=geom q={q}", turan_core::VERSION);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&s).unwrap()),
                _ => {
                    println!("d        = {}", s.d);
                    println!("w        = {}", s.w);
                    println!("delta0   = {:?}", s.delta0);
                    println!("h0       = {}", s.h0);
                    println!("c0       = {}", s.c0);
                    println!("mu       = {:?}", s.mu);
                    println!("c(K)     = {}", s.c_k);
                    for v in &s.vertices {
                        println!(
                            "vertex {} angle={:.6} acute={} R_V={:.6e}",
                            v.index, v.angle, v.acute, v.r_v
                        );
                    }
                    if s.delta0.is_none() {
                        println!("note: no acute vertices, c(K) = 4^(-1/q)*c0 branch");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            polygon,
            n,
            q,
            seed,
            count,
            vertex,
            zeta,
            r,
            omega,
            samples,
            format,
            out,
        } => {
            if q <= 0.0 {
                return Err(UsageError("q must be positive".into()));
            }
            if n < 1 {
                return Err(UsageError("degree n must be at least 1".into()));
            }
            let poly_k = match (suite.needs_polygon(), &polygon) {
                (true, Some(p)) => Some(load_polygon(p)?),
                (true, None) => {
                    return Err(UsageError(format!(
                        "suite {} requires --polygon",
                        suite.name()
                    )))
                }
                (false, _) => None,
            };
            let spec = QuadratureSpec::default();
            log_run(&suite, poly_k.as_ref(), n, q, seed, count, &spec);
            let reports = run_suite(
                suite, poly_k.as_ref(), n, q, seed, count, vertex, zeta, r, omega, samples, &spec,
                cli.verbose,
            )?;
            let all_pass = reports.iter().all(|r| r.pass);
            let body = render_reports(&reports, format, suite.name(), seed, count, all_pass);
            match out {
                Some(path) => std::fs::write(&path, body)
                    .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{body}"),
            }
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Sweep { polygon, n, q, restarts, seed, out } => {
            if n.iter().any(|&nn| nn < 1) {
                return Err(UsageError("all degrees must be at least 1".into()));
            }
            if q.iter().any(|&qq| qq <= 0.0) {
                return Err(UsageError("all exponents must be positive".into()));
            }
            if restarts < 1 {
                return Err(UsageError("restarts must be at least 1".into()));
            }
            let k = load_polygon(&polygon)?;
            let cfg = SearchConfig::new(1, 2.0).with_seed(seed).with_restarts(restarts);
            eprintln!(
                "# turan v{} cmd=sweep seed={seed} restarts={restarts} n={n:?} q={q:?} quad={}",
                turan_core::VERSION,
                quad_str(&cfg.audit)
            );
            let rows = sweep(&k, &n, &q, &cfg);
            let mut csv = String::from(SweepRow::csv_header());
            csv.push('\n');
            for row in &rows {
                csv.push_str(&row.to_csv_row());
                csv.push('\n');
                if cli.verbose {
                    eprintln!(
                        "n={} q={} best={} ({} ms)",
                        row.n, row.q, row.best, row.wall_ms
                    );
                }
            }
            std::fs::write(&out, &csv)
                .map_err(|e| UsageError(format!("cannot write {}: {e}", out.display())))?;
            for row in &rows {
                let flag = if row.best >= row.lower_ck_n
                    && (!row.upper_applies || row.best <= row.upper_cq_n)
                {
                    "ok"
                } else {
                    "BOUND VIOLATION"
                };
                println!(
                    "n={} q={} best={} best/n={} bracket=[{}, {}] {}",
                    row.n, row.q, row.best, row.best_over_n, row.lower_ck_n, row.upper_cq_n, flag
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Capacity { segment, regular, side, polygon, disk, intervals, k, format } => {
            if k < 2 {
                return Err(UsageError("point count --k must be at least 2".into()));
            }
            let mut closed_form = None;
            let chosen = [
                segment.is_some(),
                regular.is_some(),
                polygon.is_some(),
                disk.is_some(),
                intervals.is_some(),
            ]
            .iter()
            .filter(|&&b| b)
            .count();
            if chosen != 1 {
                return Err(UsageError(
                    "choose exactly one of --segment, --regular, --polygon, --disk, --intervals"
                        .into(),
                ));
            }
            let set = if let Some(s) = segment {
                let (a, b) = parse_pair(&s)?;
                CompactSet::Segment(Complex64::new(a, 0.0), Complex64::new(b, 0.0))
            } else if let Some(kk) = regular {
                if kk < 3 {
                    return Err(UsageError("--regular needs k >= 3".into()));
                }
                if side <= 0.0 {
                    return Err(UsageError("--side must be positive".into()));
                }
                closed_form = Some(transfinite_diameter_regular(kk, side));
                CompactSet::Polygon(shapes::regular_ngon(kk, side))
            } else if let Some(path) = polygon {
                CompactSet::Polygon(load_polygon(&path)?)
            } else if let Some(radius) = disk {
                if radius <= 0.0 {
                    return Err(UsageError("--disk radius must be positive".into()));
                }
                CompactSet::Disk { center: Complex64::new(0.0, 0.0), radius }
            } else {
                let iv = parse_intervals(&intervals.unwrap())?;
                CompactSet::Intervals(iv)
            };
            eprintln!("# turan v{} cmd=capacity k={k}", turan_core::VERSION);
            let fr = fekete_diameter(&set, k);
            match format {
                Format::Json => {
                    let points: Vec<[f64; 2]> = fr.points.iter().map(|z| [z.re, z.im]).collect();
                    let doc = serde_json::json!({
                        "k": fr.k,
                        "delta_k": fr.delta_k,
                        "objective": fr.objective,
                        "converged": fr.converged,
                        "closed_form": closed_form,
                        "points": points,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                _ => {
                    println!("k = {}", fr.k);
                    println!("delta_k = {}", fr.delta_k);
                    if let Some(cf) = closed_form {
                        println!("closed_form = {cf}");
                        println!("ratio = {}", fr.delta_k / cf);
                    }
                    println!("converged = {}", fr.converged);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn quad_str(spec: &QuadratureSpec) -> String {
    format!(
        "nodes:{},panels:{},tol:{:e},depth:{}",
        spec.nodes, spec.panels_per_edge, spec.rel_tol, spec.max_depth
    )
}

fn log_run(
    suite: &Suite,
    k: Option<&Polygon>,
    n: usize,
    q: f64,
    seed: u64,
    count: usize,
    spec: &QuadratureSpec,
) {
    let n0 = match k {
        Some(k) => {
            let s = geometry_summary(k, q);
            let n0 = constants::n0_policy(q, s.d, s.h0);
            format!("{}[{}]", n0.value, n0.clause)
        }
        None => "n/a".into(),
    };
    eprintln!(
        "# turan v{} cmd=verify suite={} seed={seed} count={count} n={n} q={q} quad={} n0={}",
        turan_core::VERSION,
        suite.name(),
        quad_str(spec),
        n0
    );
}

#[allow(clippy::too_many_arguments)]
fn run_suite(
    suite: Suite,
    k: Option<&Polygon>,
    n: usize,
    q: f64,
    seed: u64,
    count: usize,
    vertex: Option<usize>,
    zeta_dist: Option<f64>,
    r: Option<f64>,
    omega: Option<f64>,
    samples: usize,
    spec: &QuadratureSpec,
    verbose: bool,
) -> Result<Vec<VerifierReport>, UsageError> {
    let mut gen = RandomPolyGen::new(seed);
    let mut reports = Vec::with_capacity(count);
    let acute_vertex = |k: &Polygon| -> Result<usize, UsageError> {
        match vertex {
            Some(v) => {
                if v >= k.vertex_count() {
                    return Err(UsageError(format!("vertex {v} out of range")));
                }
                Ok(v)
            }
            None => (0..k.vertex_count())
                .find(|&i| k.vertex_data(i).acute)
                .ok_or_else(|| UsageError("polygon has no acute vertex".into())),
        }
    };
    for case in 0..count {
        let rep = match suite {
            Suite::Disk => {
                let p = gen.uniform_in_disk(n);
                verify::verify_disk(&p, samples)?
            }
            Suite::Nikolskii => {
                let k = k.unwrap();
                let p = gen.uniform_in_box(k, n, k.diameter());
                verify::verify_nikolskii(&p, k, q, spec)?
            }
            Suite::GMass => {
                let k = k.unwrap();
                let p = gen.mixed(k, n, case);
                verify::verify_g_mass(&p, k, q, spec)?
            }
            Suite::Oneside => {
                let k = k.unwrap();
                let v = acute_vertex(k)?;
                let p = gen.mixed(k, n, case);
                verify::verify_oneside(&p, k, v, q)?
            }
            Suite::Tne => {
                let k = k.unwrap();
                let v = acute_vertex(k)?;
                let vd = k.vertex_data(v);
                let m = k.vertex_count();
                let w_vtx = k.vertex((v + 1) % m);
                let v_pt = k.vertex(v);
                let max_d = (vd.side_prev / 8.0).min(0.95 * vd.side_next);
                let dist = match zeta_dist {
                    Some(d) => {
                        if d <= 0.0 || d > max_d {
                            return Err(UsageError(format!(
                                "zeta distance {d} outside (0, {max_d}]"
                            )));
                        }
                        d
                    }
                    None => gen.gen_range(0.05 * max_d, max_d),
                };
                let zeta = v_pt + (w_vtx - v_pt) / vd.side_next * dist;
                let frame = tilted_frame(k, v, zeta).map_err(|e| UsageError(e.to_string()))?;
                let iv = verify::frame_interval(k, &frame);
                let j = BoundarySubset::new(vec![iv]);
                let om = match omega {
                    Some(o) => o,
                    None => j.measure(k) / frame.b,
                };
                let p = if case % 2 == 0 {
                    gen.uniform(k, n)
                } else {
                    // zeros along [T,D]: |p(zeta)| >= ||p||_J, so the
                    // C(alpha,omega)*n consequence is exercised too
                    let zeros: Vec<Complex64> = (0..n)
                        .map(|i| {
                            let t = iv.t0 + (iv.t1 - iv.t0) * (i as f64 + 0.5) / n as f64;
                            k.boundary_point(iv.edge, t)
                        })
                        .collect();
                    PolyByZeros::monic(zeros)
                };
                verify::verify_tne(&p, k, v, zeta, &j, om)?
            }
            Suite::LocalDepth => {
                let k = k.unwrap();
                let p = gen.mixed(k, n, case);
                verify::verify_local_depth(&p, k, q)?
            }
            Suite::Acute => {
                let k = k.unwrap();
                let v = acute_vertex(k)?;
                let r_v = k.vertex_data(v).r_v;
                let rr = r.unwrap_or(r_v / 8.0);
                let p = gen.mixed(k, n, case);
                verify::verify_acute(&p, k, v, rr, q, spec)?
            }
            Suite::Polygon => {
                let k = k.unwrap();
                let p = gen.mixed(k, n, case);
                verify::verify_polygon_theorem(&p, k, q, spec)?
            }
            Suite::Witness => {
                let k = k.unwrap();
                let (_, rep) = verify::upper_witness(k, n, q, spec)?;
                reports.push(rep);
                break; // the witness is deterministic, one report suffices
            }
        };
        if verbose {
            eprintln!("case={case} pass={} slack={:.6e}", rep.pass, rep.slack);
        }
        reports.push(rep);
    }
    Ok(reports)
}

fn render_reports(
    reports: &[VerifierReport],
    format: Format,
    suite: &str,
    seed: u64,
    count: usize,
    all_pass: bool,
) -> String {
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "suite": suite,
                "seed": seed,
                "count": count,
                "all_pass": all_pass,
                "reports": reports,
            });
            let mut s = serde_json::to_string_pretty(&doc).unwrap();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(VerifierReport::csv_header());
            s.push('\n');
            for r in reports {
                s.push_str(&r.to_csv_row());
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, r) in reports.iter().enumerate() {
                s.push_str(&format!(
                    "case={i} {} pass={} lhs={:e} rhs={:e} slack={:e} [{}]\n",
                    r.name, r.pass, r.lhs, r.rhs, r.slack, r.notes
                ));
            }
            s.push_str(&format!(
                "{}: {}/{} passed\n",
                suite,
                reports.iter().filter(|r| r.pass).count(),
                reports.len()
            ));
            s
        }
    }
}

fn parse_pair(s: &str) -> Result<(f64, f64), UsageError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(UsageError(format!("expected \"a,b\", got {s:?}")));
    }
    let a: f64 = parts[0].trim().parse().map_err(|e| UsageError(format!("{e}")))?;
    let b: f64 = parts[1].trim().parse().map_err(|e| UsageError(format!("{e}")))?;
    Ok((a, b))
}

fn parse_intervals(s: &str) -> Result<Vec<(f64, f64)>, UsageError> {
    let mut out = Vec::new();
    for chunk in s.split(';') {
        let (a, b) = parse_pair(chunk)?;
        if b < a {
            return Err(UsageError(format!("interval {chunk:?} has b < a")));
        }
        out.push((a, b));
    }
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    for w in out.windows(2) {
        if w[1].0 < w[0].1 {
            return Err(UsageError("intervals must be disjoint".into()));
        }
    }
    Ok(out)
}
