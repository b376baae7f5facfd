//! One PASS/FAIL line per acceptance criterion, each checked at its stated
//! tolerance and sample size.
//!
//! Runs without the libtest harness so the table is always printed.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Stdio};

use hilbert_disk::verify::{run_all, VerifyOptions};
use hilbert_disk::VerificationReport;
use serde_json::Value;

/// A report the criterion depends on: name, stated tolerance, minimum cases.
struct Need {
    report: &'static str,
    tolerance: f64,
    min_cases: u64,
}

const fn need(report: &'static str, tolerance: f64, min_cases: u64) -> Need {
    Need {
        report,
        tolerance,
        min_cases,
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    needs: &'static [Need],
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "sh(h/2) = sqrt(1-m^2) sh(rho/2) on 1e4 pairs",
        needs: &[need("identities.hilbert-hyperbolic", 1e-10, 10_000)],
    },
    Criterion {
        id: 2,
        title: "tan(v/2) = sqrt((1+m)/(1-m)) th(h/4) on 1e4 pairs",
        needs: &[need("identities.visual-hilbert", 1e-10, 10_000)],
    },
    Criterion {
        id: 3,
        title: "closed forms agree with brute-force oracles",
        needs: &[
            need("oracle.visual-angle", 1e-6, 1_000),
            need("oracle.hilbert-closed-form", 1e-11, 10_000),
        ],
    },
    Criterion {
        id: 4,
        title: "Hilbert circles are the C1 ellipses",
        needs: &[
            need("ellipse.implicit", 1e-9, 10 * 8 * 4 * 360),
            need("ellipse.distance", 1e-8, 10 * 8 * 4 * 360),
            need("ellipse.ray-bisection", 1e-8, 10 * 8 * 4 * 64),
            need("ellipse.ray-monotonicity", 0.0, 1),
            need("ellipse.c2-sign", 0.0, 10 * 8 * 4),
        ],
    },
    Criterion {
        id: 5,
        title: "inscribed and circumscribed hyperbolic radii",
        needs: &[need("tangency.radii", 1e-7, 10 * 4)],
    },
    Criterion {
        id: 6,
        title: "Hilbert midpoint equalities and parameter",
        needs: &[
            need("midpoint.equalities", 1e-10, 10_000),
            need("midpoint.parameter", 1e-12, 1),
        ],
    },
    Criterion {
        id: 7,
        title: "distortion bound D = 2^(1-1/K) (1-m^2)^(-1/(2K))",
        needs: &[
            need("distortion.mobius", 1e-12, 1_000),
            need("distortion.radial-stretch", 1e-12, 1),
            need("distortion.composition", 1e-12, 1),
            need("distortion.through-origin", 1e-12, 1),
        ],
    },
    Criterion {
        id: 8,
        title: "sharpness quotients below 1, increasing, golden values",
        needs: &[
            need("sharpness.golden", 1e-12, 3),
            need("sharpness.below-one-increasing", 0.0, 3),
        ],
    },
    Criterion {
        id: 9,
        title: "six equalities on collinear configurations",
        needs: &[
            need("config.rho", 1e-10, 1_000),
            need("config.hilbert-visual", 1e-9, 1_000),
        ],
    },
    Criterion {
        id: 10,
        title: "ball inclusions and the diameter bound",
        needs: &[
            need("inclusion.hyperbolic-in-hilbert", 1e-9, 1),
            need("inclusion.euclidean-in-hilbert", 1e-9, 1),
            need("inclusion.tangent-points", 1e-10, 1),
            need("inclusion.diameter", 1e-12, 10_000),
        ],
    },
    Criterion {
        id: 11,
        title: "Euclidean form of hyperbolic disks",
        needs: &[need("hyperbolic-disk.euclidean-form", 1e-10, 4 * 3 * 360)],
    },
    Criterion {
        id: 12,
        title: "polygon Hilbert metric",
        needs: &[
            need("polygon.square-diameter", 1e-12, 1),
            need("polygon.triangle-inequality", 1e-10, 2 * 1_000),
        ],
    },
];

fn check(c: &Criterion, reports: &BTreeMap<String, VerificationReport>) -> Result<String, String> {
    let mut worst = 0.0f64;
    for n in c.needs {
        let r = reports.get(n.report).ok_or(format!("{} missing", n.report))?;
        if r.tolerance != n.tolerance {
            return Err(format!("{} runs at tolerance {:e}, stated {:e}", n.report, r.tolerance, n.tolerance));
        }
        if r.cases < n.min_cases {
            return Err(format!("{} ran {} cases, needs {}", n.report, r.cases, n.min_cases));
        }
        if !r.passed() || r.max_violation.is_nan() || r.max_violation > n.tolerance {
            return Err(format!(
                "{} max_violation {:e} > {:e} ({})",
                n.report,
                r.max_violation,
                n.tolerance,
                r.worst_case.as_deref().unwrap_or("no case recorded")
            ));
        }
        if n.tolerance > 0.0 {
            worst = worst.max(r.max_violation / n.tolerance);
        }
    }
    Ok(format!("worst violation/tolerance {worst:.1e}"))
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hilbert-disk"))
}

/// The report text with the `duration_ms` lines removed, byte for byte
/// otherwise.
fn without_duration(text: &str) -> String {
    let v: Value = serde_json::from_str(text).expect("verify --json prints JSON");
    assert!(v.as_array().is_some_and(|a| !a.is_empty()), "an array of reports");
    text.lines()
        .filter(|line| !line.trim_start().starts_with("\"duration_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Two identical `verify` and `figure` invocations per run.
fn determinism(dir: &Path) -> Result<String, String> {
    let verify = || {
        let out = binary()
            .args(["verify", "--suite", "all", "--seed", "11", "--n", "2000", "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("verify exited with {}", out.status));
        }
        Ok(without_duration(&String::from_utf8_lossy(&out.stdout)))
    };
    if verify()? != verify()? {
        return Err("verify JSON differs between runs".into());
    }
    let kinds = ["hilbert-circle-tangent", "circle-family", "polygon-ball", "sharpness-plot"];
    for kind in kinds {
        let mut bytes = Vec::new();
        for run in 0..2 {
            let svg = dir.join(format!("{kind}-{run}.svg"));
            let status = binary()
                .args(["figure", "--kind", kind, "--out"])
                .arg(&svg)
                .stdout(Stdio::null())
                .status()
                .map_err(|e| e.to_string())?;
            if !status.success() {
                return Err(format!("figure {kind} exited with {status}"));
            }
            let read = |p: &Path| std::fs::read(p).map_err(|e| e.to_string());
            bytes.push((read(&svg)?, read(&svg.with_extension("json"))?));
        }
        if bytes[0] != bytes[1] {
            return Err(format!("figure {kind} differs between runs"));
        }
    }
    Ok(format!("verify JSON and {} figures byte-identical", kinds.len()))
}

fn main() -> std::process::ExitCode {
    let opts = VerifyOptions::default();
    let reports: BTreeMap<String, VerificationReport> =
        run_all(&opts).into_iter().map(|r| (r.suite.clone(), r)).collect();

    let mut failures = Vec::new();
    let mut line = |id: u32, title: &str, result: Result<String, String>| match result {
        Ok(detail) => println!("PASS AC{id:<2} {title}: {detail}"),
        Err(why) => {
            println!("FAIL AC{id:<2} {title}: {why}");
            failures.push(id);
        }
    };

    for c in CRITERIA {
        let mut result = check(c, &reports);
        if c.id == 1 {
            let ms = reports["identities.hilbert-hyperbolic"].duration_ms;
            result = result.and_then(|d| {
                if ms < 1000 {
                    Ok(format!("{d}, {ms} ms"))
                } else {
                    Err(format!("took {ms} ms"))
                }
            });
        }
        line(c.id, c.title, result);
    }

    let dir = tempfile::tempdir().unwrap();
    line(13, "CLI determinism", determinism(dir.path()));

    if failures.is_empty() {
        println!("acceptance: {} criteria passed", CRITERIA.len() + 1);
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failures:?}");
        std::process::ExitCode::FAILURE
    }
}
