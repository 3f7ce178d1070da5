use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Brute-force counts against closed-form coefficients for one pattern set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowOutcome {
    pub patterns: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oeis: Option<String>,
    /// Closed-form coefficients `a_1..a_N`.
    pub expected: Vec<String>,
    pub counted: Vec<u64>,
    pub agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityOutcome {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl IdentityOutcome {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        IdentityOutcome {
            name: name.into(),
            pass,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub rows: Vec<RowOutcome>,
    pub identities: Vec<IdentityOutcome>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(rows: Vec<RowOutcome>, identities: Vec<IdentityOutcome>) -> Self {
        let pass = rows.iter().all(|r| r.agree) && identities.iter().all(|i| i.pass);
        VerificationReport {
            schema: SCHEMA,
            rows,
            identities,
            pass,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self
            .rows
            .iter()
            .map(|r| r.patterns.len())
            .max()
            .unwrap_or(0);
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:<width$}  {:<7}  counted {}  expected {}  {}",
                r.patterns,
                r.oeis.as_deref().unwrap_or("-"),
                join(&r.counted),
                r.expected.join(","),
                verdict(r.agree),
            );
        }
        for r in &self.rows {
            if let Some(note) = &r.note {
                let _ = writeln!(out, "note {}: {}", r.patterns, note);
            }
        }
        for i in &self.identities {
            match &i.detail {
                Some(d) => {
                    let _ = writeln!(out, "{}  {}  ({})", i.name, verdict(i.pass), d);
                }
                None => {
                    let _ = writeln!(out, "{}  {}", i.name, verdict(i.pass));
                }
            }
        }
        let _ = writeln!(
            out,
            "overall: {} ({} rows, {} identities)",
            verdict(self.pass),
            self.rows.len(),
            self.identities.len()
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("patterns,n,count,expected,agree\n");
        for r in &self.rows {
            for (i, (c, e)) in r.counted.iter().zip(&r.expected).enumerate() {
                let _ = writeln!(
                    out,
                    "\"{}\",{},{},{},{}",
                    r.patterns,
                    i + 1,
                    c,
                    e,
                    c.to_string() == *e
                );
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
