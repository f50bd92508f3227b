//! Text and structured rendering of suite results.

use std::fmt::Write;

use clap::ValueEnum;
use ydlab_core::Report;

/// Output format of `ydlab check`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One `PASS`/`FAIL` line per check.
    Text,
    /// Blank-line separated `key: value` blocks.
    Structured,
}

/// Run metadata printed before the checks.
pub struct Header<'a> {
    /// Suite name as given on the command line.
    pub suite: &'a str,
    /// Catalog name or file path.
    pub model: &'a str,
    /// Perturbation keywords.
    pub perturbations: Vec<&'a str>,
}

fn one_line(s: &str) -> String {
    s.replace(['\n', '\r'], " ")
}

/// Renders reports. The body is a pure function of the reports, and the
/// header carries only the version and the inputs.
pub fn render(format: Format, header: &Header<'_>, reports: &[Report]) -> String {
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports.iter().map(Report::failures).sum();
    let status = if failed == 0 { "pass" } else { "fail" };
    let version = env!("CARGO_PKG_VERSION");
    let mut out = String::new();
    match format {
        Format::Text => {
            let _ = write!(out, "# ydlab {version} check --suite {} {}", header.suite, header.model);
            if !header.perturbations.is_empty() {
                let _ = write!(out, " perturb={}", header.perturbations.join(","));
            }
            out.push('\n');
            for r in reports {
                for c in &r.checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    let _ = write!(out, "{tag} {}/{}", r.subject, c.name);
                    if !c.passed {
                        let _ = write!(out, ": {}", one_line(&c.detail));
                    }
                    out.push('\n');
                }
            }
            let _ = writeln!(out, "{total} checks, {failed} failed: {}", status.to_uppercase());
        }
        Format::Structured => {
            let _ = writeln!(out, "ydlab: {version}");
            let _ = writeln!(out, "suite: {}", header.suite);
            let _ = writeln!(out, "model: {}", header.model);
            let _ = writeln!(out, "perturbations: {}", header.perturbations.join(","));
            for r in reports {
                for c in &r.checks {
                    out.push('\n');
                    let _ = writeln!(out, "subject: {}", one_line(&r.subject));
                    let _ = writeln!(out, "check: {}", one_line(&c.name));
                    let _ = writeln!(out, "status: {}", if c.passed { "pass" } else { "fail" });
                    if !c.passed {
                        let _ = writeln!(out, "detail: {}", one_line(&c.detail));
                    }
                }
            }
            out.push('\n');
            let _ = writeln!(out, "checks: {total}");
            let _ = writeln!(out, "failed: {failed}");
            let _ = writeln!(out, "status: {status}");
        }
    }
    out
}
