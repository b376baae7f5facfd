//! Command-line front end for the `hilbert-disk` library.

mod figures;
mod literal;
mod svg;

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hilbert_disk::metrics::half_sinh_rho;
use hilbert_disk::report::{human, to_json};
use hilbert_disk::verify::{run_all, Suite, VerifyOptions};
use hilbert_disk::{
    chord_offset, hilbert_closed_form, hilbert_disk, hilbert_polygon, rho_disk, rho_halfplane, visual_angle_disk,
    ConvexPolygon, DiskPoint, HalfPlanePoint, Point, VerificationReport,
};
use serde::Serialize;
use thiserror::Error;

use crate::figures::Rendered;
use crate::literal::parse_complex;

#[derive(Debug, Parser)]
#[command(name = "hilbert-disk", version, about = "Hyperbolic, Hilbert and visual angle metrics of the unit disk")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the randomized verification sweeps.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Output file: the SVG for figures, the JSON report for `verify`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Domain {
    Disk,
    Halfplane,
    Polygon,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FigureKind {
    HilbertCircleTangent,
    CircleFamily,
    PolygonBall,
    SharpnessPlot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distances between two points.
    Metric {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: Point,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        b: Point,
        #[arg(long, value_enum, default_value = "disk")]
        domain: Domain,
        /// Vertex file for `--domain polygon`.
        #[arg(long)]
        polygon: Option<PathBuf>,
    },
    /// A Hilbert circle as an ellipse, with its tangent hyperbolic circles.
    Circle {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z0: Point,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
    },
    /// Run verification suites.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: SuiteChoice,
        /// Random cases in the main sweep of each suite.
        #[arg(long, default_value_t = 10_000)]
        n: usize,
    },
    /// Render a figure to the `--out` SVG with a JSON sidecar.
    Figure {
        #[arg(long, value_enum)]
        kind: FigureKind,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0.5")]
        z0: Point,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
        t: f64,
        /// Real part of the centers of the circle family.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.6)]
        re: f64,
        /// Two real points whose distance is the family's radius.
        #[arg(long, value_parser = parse_pair, default_value = "0.6,0.68")]
        radius_pair: (f64, f64),
        #[arg(long, default_value_t = 8)]
        count: usize,
        /// Vertex file for the polygon ball; the square [-1, 1]² by default.
        #[arg(long)]
        polygon: Option<PathBuf>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0")]
        center: Point,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.9)]
        w: f64,
        /// Decade range `lo:hi` of the sharpness parameter t = 10^-d.
        #[arg(long, value_parser = parse_decades, default_value = "2:5")]
        t_decades: (u32, u32),
    },
    /// Hilbert distance or ball in a convex polygon.
    Polygon {
        /// Vertex file: one "x y" per line, counterclockwise.
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        a: Option<Point>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        b: Option<Point>,
        /// Sample the ball boundary around `--center` instead.
        #[arg(long)]
        ball: bool,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "0")]
        center: Point,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
        t: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SuiteChoice {
    All,
    One(Suite),
}

fn parse_suite(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice::All);
    }
    s.parse().map(SuiteChoice::One).map_err(|e| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("{e}; expected all, {}", names.join(", "))
    })
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (p, q) = s.split_once(',').ok_or("expected two numbers like 0.6,0.68")?;
    let num = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x}: {e}"));
    Ok((num(p)?, num(q)?))
}

fn parse_decades(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected a range like 2:5")?;
    let num = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x}: {e}"));
    Ok((num(lo)?, num(hi)?))
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] hilbert_disk::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error("{0} verification report(s) failed")]
    Failed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Invalid(_) => 3,
            CliError::Write { .. } => 4,
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn read_polygon(path: &Path) -> Result<ConvexPolygon, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    text.parse::<ConvexPolygon>().map_err(CliError::from)
}

fn disk_point(z: Point) -> Result<DiskPoint, CliError> {
    Ok(DiskPoint::new(z)?)
}

#[derive(Debug, Serialize)]
struct DiskMetrics {
    domain: &'static str,
    a: Point,
    b: Point,
    rho: f64,
    hilbert: f64,
    visual: f64,
    m: f64,
    hilbert_closed_form: f64,
    /// `|sh(h/2) - sqrt(1 - m²) sh(rho/2)|`.
    hilbert_hyperbolic_residual: f64,
    /// `|tan(v/2) - sqrt((1 + m)/(1 - m)) th(h/4)|`.
    visual_hilbert_residual: f64,
}

fn disk_metrics(a: DiskPoint, b: DiskPoint) -> DiskMetrics {
    let (rho, h, v) = (rho_disk(a, b), hilbert_disk(a, b), visual_angle_disk(a, b));
    let m = chord_offset(a, b).unwrap_or(0.0);
    DiskMetrics {
        domain: "disk",
        a: a.value(),
        b: b.value(),
        rho,
        hilbert: h,
        visual: v,
        m,
        hilbert_closed_form: hilbert_closed_form(a, b),
        hilbert_hyperbolic_residual: ((h / 2.0).sinh() - (1.0 - m * m).sqrt() * half_sinh_rho(a, b)).abs(),
        visual_hilbert_residual: ((v / 2.0).tan() - ((1.0 + m) / (1.0 - m)).sqrt() * (h / 4.0).tanh()).abs(),
    }
}

#[derive(Debug, Serialize)]
struct SingleMetric {
    domain: &'static str,
    a: Point,
    b: Point,
    #[serde(skip_serializing_if = "Option::is_none")]
    rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hilbert: Option<f64>,
}

fn print_value<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", to_json(value));
    } else {
        println!("{}", text());
    }
}

fn cmd_metric(cli: &Cli, a: Point, b: Point, domain: Domain, polygon: Option<&Path>) -> Result<(), CliError> {
    match domain {
        Domain::Disk => {
            let out = disk_metrics(disk_point(a)?, disk_point(b)?);
            print_value(cli.json, &out, || {
                format!(
                    "rho = {}\nh = {}\nv = {}\nm = {}\nh (closed form) = {}\nHilbert-hyperbolic residual = {}\nvisual-Hilbert residual = {}",
                    human(out.rho),
                    human(out.hilbert),
                    human(out.visual),
                    human(out.m),
                    human(out.hilbert_closed_form),
                    human(out.hilbert_hyperbolic_residual),
                    human(out.visual_hilbert_residual),
                )
            });
        }
        Domain::Halfplane => {
            let rho = rho_halfplane(HalfPlanePoint::new(a)?, HalfPlanePoint::new(b)?);
            let out = SingleMetric {
                domain: "halfplane",
                a,
                b,
                rho: Some(rho),
                hilbert: None,
            };
            print_value(cli.json, &out, || format!("rho = {}", human(rho)));
        }
        Domain::Polygon => {
            let path = polygon.ok_or_else(|| CliError::Usage("--domain polygon needs --polygon FILE".into()))?;
            let h = hilbert_polygon(&read_polygon(path)?, a, b)?;
            let out = SingleMetric {
                domain: "polygon",
                a,
                b,
                rho: None,
                hilbert: Some(h),
            };
            print_value(cli.json, &out, || format!("h = {}", human(h)));
        }
    }
    Ok(())
}

fn check_radius(t: f64) -> Result<f64, CliError> {
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(CliError::Invalid(format!("radius {t} must be positive")))
    }
}

/// Writes the SVG to `--out` and the sidecar next to it, then reports both
/// paths.
fn emit_figure(cli: &Cli, rendered: Rendered) -> Result<(), CliError> {
    let out = cli
        .out
        .as_deref()
        .ok_or_else(|| CliError::Usage("figures need --out FILE.svg".into()))?;
    let sidecar = out.with_extension("json");
    write_file(out, &rendered.svg)?;
    write_file(&sidecar, &rendered.sidecar)?;
    #[derive(Serialize)]
    struct Written<'a> {
        svg: &'a Path,
        sidecar: &'a Path,
    }
    print_value(cli.json, &Written { svg: out, sidecar: &sidecar }, || {
        format!("wrote {} and {}", out.display(), sidecar.display())
    });
    Ok(())
}

fn cmd_circle(cli: &Cli, z0: Point, t: f64) -> Result<(), CliError> {
    let z0 = disk_point(z0)?;
    let t = check_radius(t)?;
    let fig = figures::tangent_circles(z0, t)?;
    if cli.out.is_some() {
        return emit_figure(cli, figures::hilbert_circle_tangent(z0, t)?);
    }
    print_value(cli.json, &fig, || {
        let e = &fig.ellipse;
        format!(
            "center = {} {} {}i\nsemi-axis (radial) = {}\nsemi-axis (transverse) = {}\norientation = {}\ninscribed radius = {}\ncircumscribed radius = {}",
            human(e.center.re),
            if e.center.im < 0.0 { "-" } else { "+" },
            human(e.center.im.abs()),
            human(e.semi_radial),
            human(e.semi_transverse),
            human(e.orientation),
            human(fig.inscribed_radius),
            human(fig.circumscribed_radius),
        )
    });
    Ok(())
}

fn cmd_verify(cli: &Cli, suite: SuiteChoice, n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Invalid("--n must be positive".into()));
    }
    let opts = VerifyOptions { seed: cli.seed, n };
    let mut reports: Vec<VerificationReport> = match suite {
        SuiteChoice::All => run_all(&opts),
        SuiteChoice::One(suite) => suite.run(&opts),
    };
    if let Some(out) = &cli.out {
        for report in &mut reports {
            report.artifacts.push(out.display().to_string());
        }
        write_file(out, &to_json(&reports))?;
    }
    if cli.json {
        println!("{}", to_json(&reports));
    } else {
        for r in &reports {
            println!(
                "{} {:<34} cases={:<7} max_violation={:<12} tolerance={:<8} seed={} {} ms",
                if r.passed() { "PASS" } else { "FAIL" },
                r.suite,
                r.cases,
                human(r.max_violation),
                human(r.tolerance),
                r.seed,
                r.duration_ms
            );
        }
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        if let Some(case) = &r.worst_case {
            eprintln!("{}: worst case {case}", r.suite);
        }
    }
    match reports.iter().filter(|r| !r.passed()).count() {
        0 => Ok(()),
        failed => Err(CliError::Failed(failed)),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_figure(
    cli: &Cli,
    kind: FigureKind,
    z0: Point,
    t: f64,
    re: f64,
    radius_pair: (f64, f64),
    count: usize,
    polygon: Option<&Path>,
    center: Point,
    w: f64,
    t_decades: (u32, u32),
) -> Result<(), CliError> {
    let rendered = match kind {
        FigureKind::HilbertCircleTangent => figures::hilbert_circle_tangent(disk_point(z0)?, check_radius(t)?)?,
        FigureKind::CircleFamily => {
            if !(1..=64).contains(&count) {
                return Err(CliError::Invalid(format!("--count {count} must lie in 1..=64")));
            }
            figures::circle_family(re, radius_pair, count)?
        }
        FigureKind::PolygonBall => {
            let polygon = match polygon {
                Some(path) => read_polygon(path)?,
                None => hilbert_disk::verify::unit_square(),
            };
            figures::polygon_ball(&polygon, center, check_radius(t)?)?
        }
        FigureKind::SharpnessPlot => {
            if !(w > 0.0 && w < 1.0) {
                return Err(CliError::Invalid(format!("--w {w} must lie in (0, 1)")));
            }
            let (lo, hi) = t_decades;
            if !(1 <= lo && lo < hi && hi <= 12) {
                return Err(CliError::Invalid(format!("--t-decades {lo}:{hi} must satisfy 1 <= lo < hi <= 12")));
            }
            figures::sharpness_plot(w, t_decades)?
        }
    };
    emit_figure(cli, rendered)
}

fn cmd_polygon(cli: &Cli, path: &Path, a: Option<Point>, b: Option<Point>, ball: bool, center: Point, t: f64) -> Result<(), CliError> {
    let polygon = read_polygon(path)?;
    if ball {
        let t = check_radius(t)?;
        if cli.out.is_some() {
            return emit_figure(cli, figures::polygon_ball(&polygon, center, t)?);
        }
        let data = figures::polygon_ball_data(&polygon, center, t)?;
        print_value(cli.json, &data, || {
            data.boundary
                .iter()
                .map(|p| format!("{} {}", human(p.re), human(p.im)))
                .collect::<Vec<_>>()
                .join("\n")
        });
        return Ok(());
    }
    let (Some(a), Some(b)) = (a, b) else {
        return Err(CliError::Usage("polygon needs --a and --b, or --ball".into()));
    };
    let h = hilbert_polygon(&polygon, a, b)?;
    let out = SingleMetric {
        domain: "polygon",
        a,
        b,
        rho: None,
        hilbert: Some(h),
    };
    print_value(cli.json, &out, || format!("h = {}", human(h)));
    Ok(())
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Metric { a, b, domain, ref polygon } => cmd_metric(cli, a, b, domain, polygon.as_deref()),
        Command::Circle { z0, t } => cmd_circle(cli, z0, t),
        Command::Verify { suite, n } => cmd_verify(cli, suite, n),
        Command::Figure {
            kind,
            z0,
            t,
            re,
            radius_pair,
            count,
            ref polygon,
            center,
            w,
            t_decades,
        } => cmd_figure(cli, kind, z0, t, re, radius_pair, count, polygon.as_deref(), center, w, t_decades),
        Command::Polygon {
            ref polygon,
            a,
            b,
            ball,
            center,
            t,
        } => cmd_polygon(cli, polygon, a, b, ball, center, t),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
