//! Rendering layer behind the `hydromoments` binary.
//!
//! Each `cmd_*` function computes through the library and renders to a
//! string in one of four formats; the binary only parses flags, prints,
//! and maps outcomes to exit codes (0 success, 1 verification failure,
//! 2 usage or domain error). Keeping the rendering here makes every
//! output byte reachable from tests without spawning a process.
//!
//! Output is deterministic by construction: no floats, no hash maps, no
//! timestamps — identical invocations render identical bytes.

use serde::Serialize;

use crate::error::Result;
use crate::ladder::{build_state, validate_quantum_numbers};
use crate::moments::{moment, moment_exists, MomentValue};
use crate::operator::{build_hamiltonian, build_lower, build_raise, RadialOpTerm};
use crate::oracle::{
    proportionality_factor, verify_all_with_fault, MomentFault, VerificationReport,
};
use crate::polyexp::PolyExpTerm;
use crate::rational::Rational;

/// Rendering target. JSON uses the crate's serde forms (rationals as
/// exact strings); the others are line-oriented text.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
    Markdown,
}

/// Unit annotation for `<r^m>`: dimensionless for `m = 0`, `a0` for
/// `m = 1`, `a0^m` otherwise. Energies carry `e^2/a0`.
pub fn unit_label(m: i64) -> String {
    match m {
        0 => String::new(),
        1 => "a0".to_string(),
        _ => format!("a0^{m}"),
    }
}

const ENERGY_UNIT: &str = "e^2/a0";

/// One table/moment row in machine-readable form. Numerator and
/// denominator are decimal strings so arbitrary-precision values
/// survive any JSON consumer untouched.
#[derive(Serialize)]
struct MomentRecord {
    n: u32,
    l: u32,
    m: i64,
    numerator: String,
    denominator: String,
    unit: String,
}

impl MomentRecord {
    fn new(v: &MomentValue) -> Self {
        MomentRecord {
            n: v.n,
            l: v.l,
            m: v.power,
            numerator: v.value.numer().to_string(),
            denominator: v.value.denom().to_string(),
            unit: unit_label(v.power),
        }
    }

    fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.n, self.l, self.m, self.numerator, self.denominator, self.unit
        )
    }
}

const MOMENT_CSV_HEADER: &str = "n,l,m,numerator,denominator,unit";
const MOMENT_MD_HEADER: &str = "| n | l | m | value | unit |\n|---|---|---|-------|------|";

fn markdown_row(v: &MomentValue) -> String {
    format!(
        "| {} | {} | {} | {} | {} |",
        v.n,
        v.l,
        v.power,
        v.value,
        unit_label(v.power)
    )
}

fn value_with_unit(v: &MomentValue) -> String {
    let unit = unit_label(v.power);
    if unit.is_empty() {
        v.value.to_string()
    } else {
        format!("{} {}", v.value, unit)
    }
}

/// `moment`: one exact expectation value with its unit.
pub fn cmd_moment(n: u32, l: u32, m: i64, format: OutputFormat) -> Result<String> {
    let value = moment(n, l, m)?;
    let record = MomentRecord::new(&value);
    Ok(match format {
        OutputFormat::Plain => value_with_unit(&value),
        OutputFormat::Json => to_pretty_json(&record),
        OutputFormat::Csv => format!("{MOMENT_CSV_HEADER}\n{}", record.csv_row()),
        OutputFormat::Markdown => format!("{MOMENT_MD_HEADER}\n{}", markdown_row(&value)),
    })
}

/// `table`: one row per power in `[from, to]` that exists; in plain
/// format the powers below the existence bound appear as explicit
/// `nonexistent` markers instead of being silently dropped.
pub fn cmd_table(n: u32, l: u32, from: i64, to: i64, format: OutputFormat) -> Result<String> {
    debug_assert!(from <= to, "binary validates the range before calling");
    validate_quantum_numbers(n, l)?;
    let values: Vec<MomentValue> = (from..=to)
        .filter(|&m| moment_exists(l, m))
        .map(|m| moment(n, l, m))
        .collect::<Result<_>>()?;
    let records: Vec<MomentRecord> = values.iter().map(MomentRecord::new).collect();
    Ok(match format {
        OutputFormat::Plain => {
            let mut lines = Vec::new();
            let mut existing = values.iter();
            for m in from..=to {
                if moment_exists(l, m) {
                    let v = existing
                        .next()
                        .expect("one computed value per existing power");
                    lines.push(format!("m={m}  {}", value_with_unit(v)));
                } else {
                    lines.push(format!("m={m}  nonexistent"));
                }
            }
            lines.join("\n")
        }
        OutputFormat::Json => to_pretty_json(&records),
        OutputFormat::Csv => {
            let mut lines = vec![MOMENT_CSV_HEADER.to_string()];
            lines.extend(records.iter().map(MomentRecord::csv_row));
            lines.join("\n")
        }
        OutputFormat::Markdown => {
            let mut lines = vec![MOMENT_MD_HEADER.to_string()];
            lines.extend(values.iter().map(markdown_row));
            lines.join("\n")
        }
    })
}

#[derive(Serialize)]
struct OperatorDump {
    hamiltonian: Vec<RadialOpTerm>,
    lowering: Vec<RadialOpTerm>,
    raising: Vec<RadialOpTerm>,
}

#[derive(Serialize)]
struct StateRecord {
    n: u32,
    l: u32,
    energy: String,
    energy_unit: &'static str,
    normsq: String,
    oracle_factor: String,
    wavefunction: Vec<PolyExpTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    operators: Option<OperatorDump>,
}

/// `state`: dump a ladder-built eigenstate — term list, squared norm,
/// energy, and the exact factor relating it to the closed-form
/// wavefunction. `show_operators` appends the `l`-channel operator
/// triple as term records for debugging.
pub fn cmd_state(n: u32, l: u32, show_operators: bool, format: OutputFormat) -> Result<String> {
    let state = build_state(n, l)?;
    let factor = proportionality_factor(n, l)?;
    let operators = show_operators.then(|| OperatorDump {
        hamiltonian: build_hamiltonian(l).terms().to_vec(),
        lowering: build_lower(l).terms().to_vec(),
        raising: build_raise(l).terms().to_vec(),
    });
    let record = StateRecord {
        n,
        l,
        energy: state.energy().to_string(),
        energy_unit: ENERGY_UNIT,
        normsq: state.normsq().to_string(),
        oracle_factor: factor.to_string(),
        wavefunction: state.wavefunction().terms().to_vec(),
        operators,
    };
    Ok(match format {
        OutputFormat::Plain => {
            let mut lines = vec![
                format!("n: {}", record.n),
                format!("l: {}", record.l),
                format!("energy: {} {ENERGY_UNIT}", record.energy),
                format!("normsq: {}", record.normsq),
                format!("oracle factor: {}", record.oracle_factor),
                format!("wavefunction: {}", state.wavefunction()),
            ];
            if show_operators {
                lines.push(format!("hamiltonian: {}", build_hamiltonian(l)));
                lines.push(format!("lowering: {}", build_lower(l)));
                lines.push(format!("raising: {}", build_raise(l)));
            }
            lines.join("\n")
        }
        OutputFormat::Json => to_pretty_json(&record),
        OutputFormat::Csv => {
            let mut lines = vec![
                "key,value".to_string(),
                format!("n,{}", record.n),
                format!("l,{}", record.l),
                format!("energy,{}", record.energy),
                format!("energy_unit,{ENERGY_UNIT}"),
                format!("normsq,{}", record.normsq),
                format!("oracle_factor,{}", record.oracle_factor),
                format!("wavefunction,\"{}\"", state.wavefunction()),
            ];
            if show_operators {
                lines.push(format!("hamiltonian,\"{}\"", build_hamiltonian(l)));
                lines.push(format!("lowering,\"{}\"", build_lower(l)));
                lines.push(format!("raising,\"{}\"", build_raise(l)));
            }
            lines.join("\n")
        }
        OutputFormat::Markdown => {
            let mut lines = vec![
                "| key | value |".to_string(),
                "|-----|-------|".to_string(),
                format!("| n | {} |", record.n),
                format!("| l | {} |", record.l),
                format!("| energy | {} {ENERGY_UNIT} |", record.energy),
                format!("| normsq | {} |", record.normsq),
                format!("| oracle factor | {} |", record.oracle_factor),
                format!("| wavefunction | {} |", state.wavefunction()),
            ];
            if show_operators {
                lines.push(format!("| hamiltonian | {} |", build_hamiltonian(l)));
                lines.push(format!("| lowering | {} |", build_lower(l)));
                lines.push(format!("| raising | {} |", build_raise(l)));
            }
            lines.join("\n")
        }
    })
}

/// `verify`: run the full identity suite and render the per-family
/// report. Returns the text plus whether every family passed; the
/// binary turns `false` into exit code 1.
pub fn cmd_verify(n_max: u32, fault: Option<&MomentFault>, format: OutputFormat) -> (String, bool) {
    let report = verify_all_with_fault(n_max, fault);
    let passed = report.passed();
    let text = match format {
        OutputFormat::Plain => render_report_plain(&report),
        OutputFormat::Json => to_pretty_json(&report),
        OutputFormat::Csv => {
            let mut lines = vec!["family,cells,failures".to_string()];
            lines.extend(
                report
                    .results
                    .iter()
                    .map(|r| format!("{},{},{}", r.family, r.cells, r.failures.len())),
            );
            lines.join("\n")
        }
        OutputFormat::Markdown => {
            let mut lines = vec![
                "| family | cells | failures | status |".to_string(),
                "|--------|-------|----------|--------|".to_string(),
            ];
            lines.extend(report.results.iter().map(|r| {
                format!(
                    "| {} | {} | {} | {} |",
                    r.family,
                    r.cells,
                    r.failures.len(),
                    if r.passed() { "pass" } else { "FAIL" }
                )
            }));
            lines.join("\n")
        }
    };
    (text, passed)
}

fn render_report_plain(report: &VerificationReport) -> String {
    let mut lines = Vec::new();
    for r in &report.results {
        if r.passed() {
            lines.push(format!("{}: pass ({} cells)", r.family, r.cells));
        } else {
            lines.push(format!(
                "{}: FAIL ({} of {} cells)",
                r.family,
                r.failures.len(),
                r.cells
            ));
            for f in &r.failures {
                let mut at = String::new();
                if let Some(n) = f.n {
                    at.push_str(&format!("n={n} "));
                }
                at.push_str(&format!("l={}", f.l));
                if let Some(m) = f.m {
                    at.push_str(&format!(" m={m}"));
                }
                lines.push(format!("  at {at}: {} != {}", f.lhs, f.rhs));
            }
        }
    }
    let failing = report.failing_families().len();
    if failing == 0 {
        lines.push(format!(
            "all {} identity families passed ({} cells, n <= {})",
            report.results.len(),
            report.total_cells(),
            report.n_max
        ));
    } else {
        lines.push(format!(
            "{failing} of {} identity families FAILED ({} failures in {} cells, n <= {})",
            report.results.len(),
            report.total_failures(),
            report.total_cells(),
            report.n_max
        ));
    }
    lines.join("\n")
}

/// Parse the `--inject-fault n,l,m[,delta]` flag. The delta defaults to
/// 1 and must be nonzero — a zero perturbation would make the negative
/// control vacuous.
pub fn parse_fault(spec: &str) -> std::result::Result<MomentFault, String> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() < 3 || parts.len() > 4 {
        return Err(format!(
            "--inject-fault expects n,l,m or n,l,m,delta (got {spec:?})"
        ));
    }
    let n = parts[0]
        .trim()
        .parse::<u32>()
        .map_err(|_| format!("fault n must be a nonnegative integer (got {:?})", parts[0]))?;
    let l = parts[1]
        .trim()
        .parse::<u32>()
        .map_err(|_| format!("fault l must be a nonnegative integer (got {:?})", parts[1]))?;
    let m = parts[2]
        .trim()
        .parse::<i64>()
        .map_err(|_| format!("fault m must be an integer (got {:?})", parts[2]))?;
    let delta = match parts.get(3) {
        Some(d) => d
            .trim()
            .parse::<Rational>()
            .map_err(|e| format!("fault delta: {e}"))?,
        None => Rational::one(),
    };
    if delta.is_zero() {
        return Err("fault delta must be nonzero".to_string());
    }
    Ok(MomentFault { n, l, m, delta })
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("crate types serialize infallibly")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moment_plain_examples() {
        assert_eq!(cmd_moment(2, 1, 1, OutputFormat::Plain).unwrap(), "5 a0");
        assert_eq!(
            cmd_moment(2, 1, -2, OutputFormat::Plain).unwrap(),
            "1/12 a0^-2"
        );
        assert_eq!(cmd_moment(1, 0, 0, OutputFormat::Plain).unwrap(), "1");
    }

    #[test]
    fn moment_errors_are_typed() {
        assert!(cmd_moment(1, 0, -3, OutputFormat::Plain).is_err());
        assert!(cmd_moment(2, 2, 1, OutputFormat::Plain).is_err());
    }

    #[test]
    fn table_plain_marks_nonexistent_rows() {
        let text = cmd_table(3, 0, -5, 0, OutputFormat::Plain).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], "m=-5  nonexistent");
        assert_eq!(lines[2], "m=-3  nonexistent");
        assert_eq!(lines[3], "m=-2  2/27 a0^-2");
        assert_eq!(lines[5], "m=0  1");
    }

    #[test]
    fn table_csv_row_count() {
        let text = cmd_table(2, 1, -4, 2, OutputFormat::Csv).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,l,m,numerator,denominator,unit");
        assert_eq!(lines.len() - 1, 7, "seven data rows");
        assert!(lines.iter().any(|l| l == &"2,1,-2,1,12,a0^-2"));
        assert!(lines[1].starts_with("2,1,-4,"));
    }

    #[test]
    fn table_json_is_deterministic() {
        let a = cmd_table(3, 1, -4, 4, OutputFormat::Json).unwrap();
        let b = cmd_table(3, 1, -4, 4, OutputFormat::Json).unwrap();
        assert_eq!(a, b);
        let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 9);
    }

    #[test]
    fn state_plain_first_excited() {
        let text = cmd_state(2, 0, false, OutputFormat::Plain).unwrap();
        assert!(text.contains("energy: -1/8 e^2/a0"), "{text}");
        assert!(text.contains("normsq: 18"), "{text}");
        assert!(text.contains("oracle factor: -3/2"), "{text}");
    }

    #[test]
    fn state_rejects_invalid_quantum_numbers() {
        assert!(cmd_state(2, 2, false, OutputFormat::Plain).is_err());
    }

    #[test]
    fn verify_summary_line() {
        let (text, passed) = cmd_verify(1, None, OutputFormat::Plain);
        assert!(passed);
        assert!(
            text.ends_with("all 12 identity families passed (31 cells, n <= 1)"),
            "{text}"
        );
    }

    #[test]
    fn verify_reports_fault() {
        let fault = parse_fault("2,0,3").unwrap();
        let (text, passed) = cmd_verify(2, Some(&fault), OutputFormat::Plain);
        assert!(!passed);
        assert!(text.contains("kp_closure: FAIL (3 of"), "{text}");
    }

    #[test]
    fn fault_parsing() {
        let f = parse_fault("4,2,7").unwrap();
        assert_eq!((f.n, f.l, f.m), (4, 2, 7));
        assert!(f.delta.is_one());
        let f = parse_fault("4, 2, 7, -1/3").unwrap();
        assert_eq!(f.delta, Rational::ratio(-1, 3));
        assert!(parse_fault("4,2").is_err());
        assert!(parse_fault("4,2,7,0").is_err());
        assert!(parse_fault("a,b,c").is_err());
    }
}
