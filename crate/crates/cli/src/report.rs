//! Verification reports and their JSON form.

use serde::{Deserialize, Serialize};

use crate::range::ParamRange;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Instance {
    pub n: usize,
    pub p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl Instance {
    pub fn new(n: usize, p: usize) -> Self {
        Instance { n, p, k: None }
    }

    pub fn with_k(self, k: usize) -> Self {
        Instance { k: Some(k), ..self }
    }
}

/// One expected-vs-actual comparison. Values are rendered as text
/// (integers, canonical polynomials or vertex lists) so that big integers
/// survive the trip through JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub instance: Instance,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    pub fn compare(
        name: impl Into<String>,
        instance: Instance,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Check {
            name: name.into(),
            instance,
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: ParamRange,
    pub p: ParamRange,
    pub max_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub params: Params,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// Wall-clock time. Left empty in reports printed to stdout so that
    /// repeated runs produce identical output.
    pub duration_ms: Option<u64>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, params: Params, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        CheckReport {
            suite: suite.into(),
            params,
            checks,
            pass,
            duration_ms: None,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CheckReport {
        let params = Params {
            n: ParamRange::new(0, 3),
            p: ParamRange::single(2),
            max_n: 24,
        };
        CheckReport::new(
            "cubes",
            params,
            vec![
                Check::compare(
                    "cube_poly",
                    Instance::new(3, 2),
                    "5 + 5*x + x^2",
                    "5 + 5*x + x^2",
                ),
                Check::compare("h_k", Instance::new(4, 1).with_k(2), 3, 2),
            ],
        )
    }

    #[test]
    fn any_mismatch_fails_the_report() {
        let report = sample();
        assert!(!report.pass);
        assert_eq!(report.failures().count(), 1);
        let mut passing = report.clone();
        passing.checks.truncate(1);
        assert!(CheckReport::new("cubes", passing.params, passing.checks).pass);
    }

    #[test]
    fn json_round_trip() {
        let mut report = sample();
        let text = report.to_json();
        assert_eq!(serde_json::from_str::<CheckReport>(&text).unwrap(), report);
        report.duration_ms = Some(17);
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<CheckReport>(&text).unwrap(), report);
        assert!(!text.contains("\"k\":null"));
    }
}
