//! Command implementations behind the `swtower` binary: normal forms,
//! products, inline equation checks, relation suites (built-in or from
//! files), Schur-Weyl dimension checks and the localization battery.
//!
//! Output is deterministic: suite order, then relation order, byte for
//! byte. Exit status 0 means no FAIL and no ERROR line was produced.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Error;
use crate::freeseq::{
    check_suite, eval_expr, AlgTarget, Assignment, FreeExpr, RelationStatus, SuiteName,
    SuiteReport,
};
use crate::localize::{self, CheckStatus};
use crate::parse::{lower_to_free, parse_element, parse_to_element};
use crate::rep::sw_dimensions;
use crate::ring::LaurentPoly;
use crate::tower::{AlgContext, AlgebraFamily, PolyElement};

pub const DEFAULT_MAX_DIM: usize = 20_000;

/// Dimension cap honored by swdim; the `SWTOWER_MAX_DIM` environment
/// variable overrides the default.
pub fn max_dim_from_env() -> usize {
    std::env::var("SWTOWER_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Text,
    Json,
}

impl OutputFormat {
    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Usage(format!("unknown format `{other}`"))),
        }
    }
}

/// Parse the `--algebra` flag.
pub fn parse_family(s: &str) -> Result<AlgebraFamily, Error> {
    Ok(match s {
        "sym" => AlgebraFamily::Sym,
        "hecke" => AlgebraFamily::Hecke,
        "cross" | "sas" => AlgebraFamily::CrossPoly,
        "crossLaurent" | "as" => AlgebraFamily::CrossLaurent,
        "dAHA" | "degAffine" => AlgebraFamily::DegAffine,
        "affineHecke" | "aha" => AlgebraFamily::AffineHecke,
        other => return Err(Error::Usage(format!("unknown algebra `{other}`"))),
    })
}

/// A fully resolved command; `run` returns the report text and exit code.
#[derive(Clone, Debug)]
pub enum CliCommand {
    NormalForm { family: AlgebraFamily, n: usize, expr: String },
    Mul { family: AlgebraFamily, n: usize, lhs: String, rhs: String },
    Eval { family: AlgebraFamily, n: usize, equation: String },
    Suite { source: SuiteSource, format: OutputFormat },
    SwDim { n: usize, dim: usize },
    LocVerify { format: OutputFormat },
}

#[derive(Clone, Debug)]
pub enum SuiteSource {
    Builtin(String),
    File(String),
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    suite: &'a str,
    id: &'a str,
    status: &'a str,
    residue: Option<&'a str>,
}

pub struct RunOutput {
    pub stdout: String,
    pub exit_code: i32,
}

fn ok(stdout: String) -> RunOutput {
    RunOutput { stdout, exit_code: 0 }
}

pub fn run_command(cmd: &CliCommand) -> Result<RunOutput, Error> {
    match cmd {
        CliCommand::NormalForm { family, n, expr } => {
            let ctx = AlgContext::new(*family, *n);
            let e = parse_to_element(expr, ctx)?;
            Ok(ok(format!("{e}\n")))
        }
        CliCommand::Mul { family, n, lhs, rhs } => {
            let ctx = AlgContext::new(*family, *n);
            let a = parse_to_element(lhs, ctx)?;
            let b = parse_to_element(rhs, ctx)?;
            Ok(ok(format!("{}\n", a.mul(&b)?)))
        }
        CliCommand::Eval { family, n, equation } => {
            let ctx = AlgContext::new(*family, *n);
            let (lhs, rhs) = split_equation(equation)?;
            let a = parse_to_element(&lhs, ctx)?;
            let b = parse_to_element(&rhs, ctx)?;
            let residue = a.sub(&b)?;
            if residue.is_zero() {
                Ok(ok("PASS eval/inline\n".to_string()))
            } else {
                Ok(RunOutput {
                    stdout: format!("FAIL eval/inline residue={residue}\n"),
                    exit_code: 2,
                })
            }
        }
        CliCommand::Suite { source, format } => {
            let reports = match source {
                SuiteSource::Builtin(name) => {
                    let suite = SuiteName::parse(name)?;
                    vec![crate::freeseq::run_builtin_suite(suite)]
                }
                SuiteSource::File(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Error::Usage(format!("cannot read {path}: {e}")))?;
                    vec![run_suite_file(&text)?]
                }
            };
            render_reports(&reports, *format)
        }
        CliCommand::SwDim { n, dim } => {
            let (image, commutant) = sw_dimensions(*n, *dim, max_dim_from_env())?;
            Ok(ok(format!(
                "image={image} commutant={commutant} full={}\n",
                image == commutant
            )))
        }
        CliCommand::LocVerify { format } => {
            let lines = localize::run_all()?;
            match format {
                OutputFormat::Text => {
                    let mut out = String::new();
                    let mut code = 0;
                    for l in &lines {
                        writeln!(out, "{l}").unwrap();
                        if l.status != CheckStatus::Pass {
                            code = 2;
                        }
                    }
                    Ok(RunOutput { stdout: out, exit_code: code })
                }
                OutputFormat::Json => {
                    let records: Vec<JsonRecord> = lines
                        .iter()
                        .map(|l| match &l.status {
                            CheckStatus::Pass => JsonRecord {
                                suite: "loc",
                                id: &l.id,
                                status: "PASS",
                                residue: None,
                            },
                            CheckStatus::Fail { residue } => JsonRecord {
                                suite: "loc",
                                id: &l.id,
                                status: "FAIL",
                                residue: Some(residue),
                            },
                        })
                        .collect();
                    let code =
                        if lines.iter().all(|l| l.status == CheckStatus::Pass) { 0 } else { 2 };
                    Ok(RunOutput {
                        stdout: format!("{}\n", serde_json::to_string_pretty(&records).unwrap()),
                        exit_code: code,
                    })
                }
            }
        }
    }
}

fn split_equation(eq: &str) -> Result<(String, String), Error> {
    let parts: Vec<&str> = eq.split("==").collect();
    if parts.len() != 2 {
        return Err(Error::Usage("expected exactly one `==` in the equation".into()));
    }
    Ok((parts[0].trim().to_string(), parts[1].trim().to_string()))
}

fn render_reports(reports: &[SuiteReport], format: OutputFormat) -> Result<RunOutput, Error> {
    let mut code = 0;
    for r in reports {
        if !r.all_pass() {
            code = 2;
        }
    }
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for r in reports {
                write!(out, "{r}").unwrap();
            }
            Ok(RunOutput { stdout: out, exit_code: code })
        }
        OutputFormat::Json => {
            let mut records = Vec::new();
            for r in reports {
                for (id, status) in &r.entries {
                    let (s, residue) = match status {
                        RelationStatus::Pass => ("PASS", None),
                        RelationStatus::Fail { residue } => ("FAIL", Some(residue.as_str())),
                        RelationStatus::Error { message } => ("ERROR", Some(message.as_str())),
                    };
                    records.push(JsonRecord {
                        suite: &r.suite,
                        id,
                        status: s,
                        residue,
                    });
                }
            }
            Ok(RunOutput {
                stdout: format!("{}\n", serde_json::to_string_pretty(&records).unwrap()),
                exit_code: code,
            })
        }
    }
}

/// Line-oriented suite file:
///
/// ```text
/// # comment
/// context <algebra> <rank>
/// relation <id> : <element-expr> == <element-expr>
/// ```
///
/// Relations compile to free-sequence differences evaluated under the
/// canonical assignment into the declared tower.
pub fn run_suite_file(text: &str) -> Result<SuiteReport, Error> {
    let mut ctx: Option<AlgContext> = None;
    let mut relations: Vec<(String, FreeExpr)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("context") {
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    col: 1,
                    msg: "context needs `<algebra> <rank>`".into(),
                });
            }
            let family = parse_family(parts[0])?;
            let n: usize = parts[1].parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                col: 1,
                msg: "bad rank".into(),
            })?;
            ctx = Some(AlgContext::new(family, n));
        } else if let Some(rest) = line.strip_prefix("relation") {
            let ctx = ctx.ok_or_else(|| Error::Parse {
                line: lineno + 1,
                col: 1,
                msg: "relation before context header".into(),
            })?;
            let (head, body) = rest.split_once(':').ok_or_else(|| Error::Parse {
                line: lineno + 1,
                col: 1,
                msg: "relation needs `<id> : <lhs> == <rhs>`".into(),
            })?;
            let id = head.trim().to_string();
            let (lhs, rhs) = split_equation(body)?;
            let l = lower_to_free(&parse_element(&lhs)?, &ctx)?;
            let r = lower_to_free(&parse_element(&rhs)?, &ctx)?;
            relations.push((id, FreeExpr::minus(l, r)));
        } else {
            return Err(Error::Parse {
                line: lineno + 1,
                col: 1,
                msg: format!("unrecognized directive `{line}`"),
            });
        }
    }
    let ctx = ctx.ok_or_else(|| Error::Usage("suite file has no context header".into()))?;
    let suite = crate::freeseq::RelationSuite { name: "file".to_string(), relations };
    let target: AlgTarget<LaurentPoly> = AlgTarget::new(ctx.family);
    let asn = target.canonical_assignment();
    Ok(check_suite(&suite, &asn, &target))
}

/// Inline equation evaluation used by the library tests and the FFI layer.
pub fn eval_equation(family: AlgebraFamily, n: usize, equation: &str) -> Result<bool, Error> {
    let ctx = AlgContext::new(family, n);
    let (lhs, rhs) = split_equation(equation)?;
    let target: AlgTarget<LaurentPoly> = AlgTarget::new(family);
    let asn: Assignment<PolyElement> = target.canonical_assignment();
    let l = eval_expr(&lower_to_free(&parse_element(&lhs)?, &ctx)?, &asn, &target)?;
    let r = eval_expr(&lower_to_free(&parse_element(&rhs)?, &ctx)?, &asn, &target)?;
    l.eq_elem(&r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nf_golden() {
        let out = run_command(&CliCommand::NormalForm {
            family: AlgebraFamily::DegAffine,
            n: 2,
            expr: "t[1]*y[1]".into(),
        })
        .unwrap();
        assert_eq!(out.stdout, "y[2]*T[1] + 1\n");
        assert_eq!(out.exit_code, 0);
    }

    #[test]
    fn suite_golden() {
        let out = run_command(&CliCommand::Suite {
            source: SuiteSource::Builtin("affineHecke".into()),
            format: OutputFormat::Text,
        })
        .unwrap();
        assert_eq!(
            out.stdout,
            "PASS affineHecke/quadratic\nPASS affineHecke/cross\nPASS affineHecke/braid\n"
        );
        assert_eq!(out.exit_code, 0);
    }

    #[test]
    fn swdim_golden() {
        let out = run_command(&CliCommand::SwDim { n: 3, dim: 2 }).unwrap();
        assert_eq!(out.stdout, "image=5 commutant=5 full=true\n");
    }

    #[test]
    fn suite_file_roundtrip_and_failure() {
        let good = "# demo\ncontext hecke 3\nrelation quad : t[1]*t[1] == 1 + (q - q^-1)*t[1]\nrelation braid : t[1]*t[2]*t[1] == t[2]*t[1]*t[2]\n";
        let report = run_suite_file(good).unwrap();
        assert!(report.all_pass());
        let bad = "context hecke 3\nrelation broken : t[1]*t[1] == 1\n";
        let report = run_suite_file(bad).unwrap();
        assert!(!report.all_pass());
    }

    #[test]
    fn eval_command() {
        let out = run_command(&CliCommand::Eval {
            family: AlgebraFamily::AffineHecke,
            n: 2,
            equation: "t[1]*y[1]*t[1] == y[2]".into(),
        })
        .unwrap();
        assert_eq!(out.exit_code, 0);
        let out = run_command(&CliCommand::Eval {
            family: AlgebraFamily::AffineHecke,
            n: 2,
            equation: "t[1]*y[1]*t[1] == y[1]".into(),
        })
        .unwrap();
        assert_eq!(out.exit_code, 2);
    }

    #[test]
    fn locverify_passes() {
        let out = run_command(&CliCommand::LocVerify { format: OutputFormat::Text }).unwrap();
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout.lines().count(), 17);
        assert!(out.stdout.lines().all(|l| l.starts_with("PASS")));
    }

    #[test]
    fn json_format() {
        let out = run_command(&CliCommand::Suite {
            source: SuiteSource::Builtin("sym".into()),
            format: OutputFormat::Json,
        })
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        assert_eq!(arr[0]["status"], "PASS");
        assert!(arr[0]["residue"].is_null());
    }
}
