//! Reports: the single output type of every command, rendered either as
//! aligned text or as JSON mirroring the struct fields.

use std::fmt::Write as _;

use galjac_core::center::CentralElement;
use galjac_core::Cyclotomic;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    pub fn pass(check: impl Into<String>, detail: impl Into<String>) -> Verdict {
        Verdict {
            check: check.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(check: impl Into<String>, detail: impl Into<String>) -> Verdict {
        Verdict {
            check: check.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    pub fn unknown(check: impl Into<String>, detail: impl Into<String>) -> Verdict {
        Verdict {
            check: check.into(),
            status: Status::Unknown,
            detail: detail.into(),
        }
    }

    /// Pass when `ok`, otherwise fail with the same detail.
    pub fn from_bool(check: impl Into<String>, ok: bool, detail: impl Into<String>) -> Verdict {
        if ok {
            Verdict::pass(check, detail)
        } else {
            Verdict::fail(check, detail)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: serde_json::Value,
    pub invariants: Vec<Entry>,
    pub verdicts: Vec<Verdict>,
    pub provenance: Vec<Entry>,
}

/// Output format selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

impl Report {
    pub fn new(command: &str, inputs: serde_json::Value) -> Report {
        Report {
            command: command.to_string(),
            inputs,
            invariants: Vec::new(),
            verdicts: Vec::new(),
            provenance: Vec::new(),
        }
    }

    pub fn invariant(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.invariants.push(Entry {
            name: name.into(),
            value: value.into(),
        });
    }

    pub fn provenance(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.provenance.push(Entry {
            name: name.into(),
            value: value.into(),
        });
    }

    pub fn verdict(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn has_failure(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == Status::Fail)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "inputs: {}", self.inputs);
        let section = |out: &mut String, title: &str, entries: &[Entry]| {
            if entries.is_empty() {
                return;
            }
            let _ = writeln!(out, "{title}:");
            for e in entries {
                if e.value.contains('\n') {
                    let _ = writeln!(out, "  {}:", e.name);
                    for line in e.value.lines() {
                        let _ = writeln!(out, "    {line}");
                    }
                } else {
                    let _ = writeln!(out, "  {}: {}", e.name, e.value);
                }
            }
        };
        section(&mut out, "invariants", &self.invariants);
        if !self.verdicts.is_empty() {
            let _ = writeln!(out, "verdicts:");
            for v in &self.verdicts {
                let _ = writeln!(out, "  [{}] {}: {}", v.status.tag(), v.check, v.detail);
            }
        }
        section(&mut out, "provenance", &self.provenance);
        out
    }
}

/// Exact rendering: plain "p/q" for rationals, the power-basis form otherwise.
pub fn exact(c: &Cyclotomic) -> String {
    match c.to_rational() {
        Some(r) => r.to_string(),
        None => c.to_string(),
    }
}

/// One "chi_i: value" line per irreducible.
pub fn central(x: &CentralElement) -> String {
    x.coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| format!("chi_{i}: {}", exact(c)))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_layout_is_stable() {
        let mut r = Report::new("group", serde_json::json!({"family": "cyclic", "params": [3]}));
        r.invariant("order", "3");
        r.invariant("table", "a\nb");
        r.verdict(Verdict::pass("orthogonality", "exact"));
        r.provenance("dixon prime", "7");
        let text = r.render(Format::Text);
        assert_eq!(
            text,
            "command: group\ninputs: {\"family\":\"cyclic\",\"params\":[3]}\ninvariants:\n  order: 3\n  table:\n    a\n    b\nverdicts:\n  [PASS] orthogonality: exact\nprovenance:\n  dixon prime: 7\n"
        );
        assert!(!r.has_failure());
        r.verdict(Verdict::fail("x", "y"));
        assert!(r.has_failure());
    }

    #[test]
    fn structured_output_mirrors_fields() {
        let mut r = Report::new("local", serde_json::Value::Null);
        r.verdict(Verdict::unknown("sign", "wild place"));
        let v: serde_json::Value = serde_json::from_str(&r.render(Format::Structured)).unwrap();
        assert_eq!(v["verdicts"][0]["status"], "unknown");
        assert_eq!(v["command"], "local");
    }

    #[test]
    fn exact_rendering() {
        let third = Cyclotomic::from_integer(-1).checked_div(&Cyclotomic::from_integer(3)).unwrap();
        assert_eq!(exact(&third), "-1/3");
        assert_eq!(exact(&Cyclotomic::zeta(3)), "z; order=3");
    }
}
