//! Verification reports and their JSON and text renderings.

use std::io;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one verification sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: u64,
    pub tolerance: f64,
    pub max_violation: f64,
    pub seed: u64,
    pub duration_ms: u64,
    pub status: Status,
    pub artifacts: Vec<String>,
    /// Input of the largest violation, for triage.
    #[serde(skip)]
    pub worst_case: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Running maximum of violations over the cases of a sweep.
#[derive(Clone, Debug)]
pub struct Tally {
    suite: String,
    tolerance: f64,
    cases: u64,
    max_violation: f64,
    worst_case: Option<String>,
}

impl Tally {
    pub fn new(suite: impl Into<String>, tolerance: f64) -> Self {
        Tally {
            suite: suite.into(),
            tolerance,
            cases: 0,
            max_violation: 0.0,
            worst_case: None,
        }
    }

    /// Records one case. NaN counts as an infinite violation.
    pub fn record<D: FnOnce() -> String>(&mut self, violation: f64, describe: D) {
        let violation = if violation.is_nan() { f64::INFINITY } else { violation };
        self.cases += 1;
        if violation > self.max_violation || (self.worst_case.is_none() && violation > self.tolerance) {
            self.max_violation = self.max_violation.max(violation);
            self.worst_case = Some(describe());
        }
    }

    /// Records a case that failed to evaluate at all.
    pub fn record_error(&mut self, describe: String) {
        self.record(f64::INFINITY, || describe);
    }

    pub fn finish(self, seed: u64, duration_ms: u64) -> VerificationReport {
        let status = if self.max_violation <= self.tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            suite: self.suite,
            cases: self.cases,
            tolerance: self.tolerance,
            max_violation: self.max_violation,
            seed,
            duration_ms,
            status,
            artifacts: Vec::new(),
            worst_case: self.worst_case,
        }
    }
}

/// Pretty JSON whose floats carry 17 significant digits, enough to
/// round-trip every double.
pub struct RoundTripFormatter<'a>(PrettyFormatter<'a>);

impl Default for RoundTripFormatter<'_> {
    fn default() -> Self {
        RoundTripFormatter(PrettyFormatter::new())
    }
}

impl Formatter for RoundTripFormatter<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(writer, "{value:.16e}")
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}

/// Serializes `value` as pretty JSON with round-trip floats.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, RoundTripFormatter::default());
    value.serialize(&mut ser).expect("serializing to memory cannot fail");
    String::from_utf8(out).expect("serde_json writes UTF-8")
}

/// Six significant digits, switching to exponent form outside `[1e-4, 1e6)`.
pub fn human(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..6).contains(&mag) {
        format!("{x:.prec$}", prec = (5 - mag) as usize)
    } else {
        format!("{x:.5e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        let mut t = Tally::new("demo", 1e-10);
        t.record(5e-11, || "ok".into());
        let pass = t.clone().finish(7, 3);
        assert!(pass.passed());
        assert_eq!(pass.cases, 1);
        t.record(f64::NAN, || "bad".into());
        let fail = t.finish(7, 3);
        assert_eq!(fail.status, Status::Fail);
        assert_eq!(fail.worst_case.as_deref(), Some("bad"));
    }

    #[test]
    fn json_keeps_seventeen_digits() {
        let json = to_json(&[0.1f64, -1.0 / 3.0]);
        assert!(json.contains("1.0000000000000001e-1"), "{json}");
        assert!(json.contains("-3.3333333333333331e-1"), "{json}");
        let back: Vec<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![0.1, -1.0 / 3.0]);
    }

    #[test]
    fn report_field_names() {
        let report = Tally::new("identities", 1e-10).finish(7, 12);
        let json = to_json(&report);
        let names = ["suite", "cases", "tolerance", "max_violation", "seed", "duration_ms", "status", "artifacts"];
        let at: Vec<usize> = names.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]), "{json}");
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value.as_object().unwrap().len(), names.len());
        assert_eq!(value["status"], "pass");
    }

    #[test]
    fn human_formatting() {
        assert_eq!(human(std::f64::consts::PI), "3.14159");
        assert_eq!(human(1.0986122886681098), "1.09861");
        assert_eq!(human(0.000123456789), "0.000123457");
        assert_eq!(human(1.5e-9), "1.50000e-9");
        assert_eq!(human(0.0), "0");
    }
}
