use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// One row of evidence: a degree (or bound), named dimensions and a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub dims: BTreeMap<String, usize>,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Record {
    pub fn new(degree: u32, verdict: Verdict) -> Self {
        Record {
            degree,
            label: None,
            dims: BTreeMap::new(),
            verdict,
            witness: None,
        }
    }

    pub fn label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn dim(mut self, name: &str, value: usize) -> Self {
        self.dims.insert(name.to_string(), value);
        self
    }

    pub fn witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

/// Bound-relative evidence for one claim. The overall verdict is derived from
/// the records and cannot be set independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: BTreeMap<String, String>,
    pub records: Vec<Record>,
    verdict: Verdict,
}

impl VerificationReport {
    pub fn new(
        claim: impl Into<String>,
        params: BTreeMap<String, String>,
        records: Vec<Record>,
    ) -> Self {
        let verdict = Verdict::from_bool(records.iter().all(|r| r.verdict.passed()));
        VerificationReport {
            claim: claim.into(),
            params,
            records,
            verdict,
        }
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let raw: VerificationReport = serde_json::from_str(text)?;
        Ok(VerificationReport::new(raw.claim, raw.params, raw.records))
    }

    /// Plain-text table mirroring the JSON records.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "claim: {}", self.claim);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for r in &self.records {
            let dims: Vec<String> = r.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(out, "  [{}] degree {:>2}", r.verdict.as_str(), r.degree);
            if let Some(l) = &r.label {
                let _ = write!(out, "  {l}");
            }
            if !dims.is_empty() {
                let _ = write!(out, "  {}", dims.join(" "));
            }
            if let Some(w) = &r.witness {
                let _ = write!(out, "  witness: {w}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.as_str());
        out
    }
}

pub(crate) fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overall_verdict_follows_records() {
        let ok = VerificationReport::new("c", BTreeMap::new(), vec![Record::new(0, Verdict::Pass)]);
        assert!(ok.passed());
        let bad = VerificationReport::new(
            "c",
            BTreeMap::new(),
            vec![
                Record::new(0, Verdict::Pass),
                Record::new(1, Verdict::Fail).witness("x"),
            ],
        );
        assert!(!bad.passed());
        let json = bad.to_json();
        assert!(json.contains("\"witness\": \"x\""));
        assert_eq!(VerificationReport::from_json(&json).unwrap(), bad);
        assert!(bad.to_text().ends_with("verdict: fail\n"));
    }

    #[test]
    fn json_shape() {
        let r = VerificationReport::new(
            "prop1",
            params([("algebra", "sl2r".to_string())]),
            vec![Record::new(2, Verdict::Pass).dim("S", 6)],
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["claim"], "prop1");
        assert_eq!(v["params"]["algebra"], "sl2r");
        assert_eq!(v["records"][0]["degree"], 2);
        assert_eq!(v["records"][0]["dims"]["S"], 6);
        assert_eq!(v["records"][0]["verdict"], "pass");
        assert!(v["records"][0].get("witness").is_none());
        assert_eq!(v["verdict"], "pass");
    }
}
