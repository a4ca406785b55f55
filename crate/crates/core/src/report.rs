use serde::Serialize;
use serde_json::Value;

/// One finitely checkable statement and its outcome.
///
/// `witness` carries the cofactor polynomial on success or the failing
/// index/term on failure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub parameters: Value,
    pub pass: bool,
    pub witness: Value,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, parameters: Value, pass: bool, witness: Value) -> Self {
        Self {
            name: name.into(),
            parameters,
            pass,
            witness,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "[{}] {} {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.parameters
        )
    }
}
