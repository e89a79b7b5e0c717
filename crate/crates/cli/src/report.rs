//! Verification report: one record per formula-versus-oracle case.

use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

/// What a case was evaluated at. A family always uses one variant, so the
/// derived order is lexicographic in the parameters within a family.
///
/// Untagged: variants with more fields come first so that deserialization
/// does not match a prefix of the fields.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Parameters {
    Hypercube { n: u32, power: u32, vectors: u64 },
    SignSum { coeffs: Vec<i64>, power: u32 },
    BipartiteDegrees { a: Vec<u32>, b: Vec<u32> },
    Pair { m: u32, n: u32 },
    Degrees { degrees: Vec<u32> },
    Size { n: u32 },
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        match self {
            Parameters::Pair { m, n } => write!(f, "m={m},n={n}"),
            Parameters::Size { n } => write!(f, "n={n}"),
            Parameters::Degrees { degrees } => write!(f, "d=[{}]", list(degrees)),
            Parameters::BipartiteDegrees { a, b } => {
                write!(f, "a=[{}],b=[{}]", list(a), list(b))
            }
            Parameters::Hypercube { n, power, vectors } => {
                write!(f, "n={n},power={power},vectors={vectors}")
            }
            Parameters::SignSum { coeffs, power } => {
                let c: Vec<String> = coeffs.iter().map(i64::to_string).collect();
                write!(f, "coeffs=[{}],power={power}", c.join(","))
            }
        }
    }
}

/// One formula-versus-oracle comparison. Values are exact decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub family: String,
    pub parameters: Parameters,
    pub formula_value: String,
    pub oracle_value: String,
    pub oracle_kind: String,
    #[serde(rename = "match")]
    pub matched: bool,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CaseRecord {
    pub fn new(
        family: &str,
        parameters: Parameters,
        formula_value: impl ToString,
        oracle_value: impl ToString,
        oracle_kind: &str,
        elapsed_ms: f64,
    ) -> Self {
        let formula_value = formula_value.to_string();
        let oracle_value = oracle_value.to_string();
        CaseRecord {
            family: family.to_owned(),
            parameters,
            matched: formula_value == oracle_value,
            formula_value,
            oracle_value,
            oracle_kind: oracle_kind.to_owned(),
            elapsed_ms,
            error: None,
        }
    }

    /// A case that could not be evaluated; always counted as failed.
    pub fn failed(family: &str, parameters: Parameters, oracle_kind: &str, error: String) -> Self {
        CaseRecord {
            family: family.to_owned(),
            parameters,
            formula_value: String::new(),
            oracle_value: String::new(),
            oracle_kind: oracle_kind.to_owned(),
            matched: false,
            elapsed_ms: 0.0,
            error: Some(error),
        }
    }

    fn sort_key(&self) -> (&str, &Parameters, &str) {
        (&self.family, &self.parameters, &self.oracle_kind)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    cases: Vec<CaseRecord>,
}

#[derive(Serialize, Deserialize)]
struct SummaryLine {
    summary: Summary,
}

impl VerificationReport {
    /// Sorts the cases by family, then parameters, then oracle.
    pub fn new(mut cases: Vec<CaseRecord>) -> Self {
        cases.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
        VerificationReport { cases }
    }

    pub fn cases(&self) -> &[CaseRecord] {
        &self.cases
    }

    pub fn summary(&self) -> Summary {
        let passed = self.cases.iter().filter(|c| c.matched).count();
        Summary {
            total: self.cases.len(),
            passed,
            failed: self.cases.len() - passed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.matched)
    }

    /// One JSON record per case, then a `{"summary": ...}` record.
    pub fn write_jsonl(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for case in &self.cases {
            serde_json::to_writer(&mut *out, case)?;
            out.write_all(b"\n")?;
        }
        serde_json::to_writer(
            &mut *out,
            &SummaryLine {
                summary: self.summary(),
            },
        )?;
        out.write_all(b"\n")
    }

    pub fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        for c in &self.cases {
            let status = if c.matched { "PASS" } else { "FAIL" };
            match &c.error {
                Some(e) => writeln!(
                    out,
                    "{status} {} {} [{}] error: {e}",
                    c.family, c.parameters, c.oracle_kind
                )?,
                None => writeln!(
                    out,
                    "{status} {} {} formula={} oracle={} [{}] {:.3}ms",
                    c.family,
                    c.parameters,
                    c.formula_value,
                    c.oracle_value,
                    c.oracle_kind,
                    c.elapsed_ms
                )?,
            }
        }
        let s = self.summary();
        writeln!(
            out,
            "summary: total={} passed={} failed={}",
            s.total, s.passed, s.failed
        )
    }

    /// Parses the output of [`write_jsonl`](Self::write_jsonl), checking the
    /// trailing summary against the cases.
    pub fn parse_jsonl(text: &str) -> Result<Self, String> {
        let mut lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let last = lines.pop().ok_or("empty report")?;
        let summary: SummaryLine = serde_json::from_str(last).map_err(|e| e.to_string())?;
        let cases = lines
            .iter()
            .map(|l| serde_json::from_str::<CaseRecord>(l).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let report = VerificationReport { cases };
        if report.summary() != summary.summary {
            return Err("summary does not match cases".into());
        }
        if let Some(c) = report
            .cases
            .iter()
            .find(|c| c.error.is_none() && c.matched != (c.formula_value == c.oracle_value))
        {
            return Err(format!(
                "inconsistent match flag in {} {}",
                c.family, c.parameters
            ));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport::new(vec![
            CaseRecord::new(
                "odd-complete",
                Parameters::Size { n: 6 },
                96,
                96,
                "pruefer",
                1.5,
            ),
            CaseRecord::new(
                "odd-complete",
                Parameters::Size { n: 2 },
                1,
                1,
                "pruefer",
                0.1,
            ),
            CaseRecord::new(
                "bipartite",
                Parameters::Pair { m: 2, n: 3 },
                12,
                11,
                "pruefer",
                0.0,
            ),
            CaseRecord::failed(
                "odd-complete",
                Parameters::Size { n: 10 },
                "pruefer",
                "too big".into(),
            ),
        ])
    }

    #[test]
    fn match_flag_and_summary() {
        let r = sample();
        assert_eq!(
            r.summary(),
            Summary {
                total: 4,
                passed: 2,
                failed: 2
            }
        );
        assert!(!r.all_passed());
        let order: Vec<String> = r
            .cases()
            .iter()
            .map(|c| format!("{} {}", c.family, c.parameters))
            .collect();
        assert_eq!(
            order,
            [
                "bipartite m=2,n=3",
                "odd-complete n=2",
                "odd-complete n=6",
                "odd-complete n=10"
            ]
        );
    }

    #[test]
    fn jsonl_round_trips() {
        let r = sample();
        let mut buf = Vec::new();
        r.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains(r#""formula_value":"96""#));
        assert!(text.contains(r#""match":true"#));
        assert!(text.ends_with("{\"summary\":{\"total\":4,\"passed\":2,\"failed\":2}}\n"));
        let parsed = VerificationReport::parse_jsonl(&text).unwrap();
        assert_eq!(parsed, r);
        let mut again = Vec::new();
        parsed.write_jsonl(&mut again).unwrap();
        assert_eq!(String::from_utf8(again).unwrap(), text);
    }

    #[test]
    fn every_parameter_shape_round_trips() {
        let shapes = [
            Parameters::Hypercube {
                n: 3,
                power: 2,
                vectors: 125,
            },
            Parameters::SignSum {
                coeffs: vec![-1, 2],
                power: 4,
            },
            Parameters::BipartiteDegrees {
                a: vec![2, 2],
                b: vec![2, 1, 1],
            },
            Parameters::Pair { m: 3, n: 5 },
            Parameters::Degrees {
                degrees: vec![2, 2, 1, 1],
            },
            Parameters::Size { n: 7 },
        ];
        for p in shapes {
            let json = serde_json::to_string(&p).unwrap();
            assert_eq!(
                serde_json::from_str::<Parameters>(&json).unwrap(),
                p,
                "{json}"
            );
        }
    }

    #[test]
    fn parse_rejects_tampered_summary() {
        let mut buf = Vec::new();
        sample().write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf)
            .unwrap()
            .replace("\"passed\":2", "\"passed\":3");
        assert!(VerificationReport::parse_jsonl(&text).is_err());
    }
}
