//! Machine-readable run reports: command echo, input digests, payload, and
//! the named mathematical claims a run exercised.
//!
//! Serialization is deterministic for identical inputs: field order is fixed
//! by the struct, digests are hex, and payloads are built from already-
//! deterministic module outputs.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub result: serde_json::Value,
    /// Names of the library-level claims this run exercised, e.g.
    /// "fitting-split" or "decomposition-uniqueness".
    pub lemma_refs: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            result: serde_json::Value::Null,
            lemma_refs: Vec::new(),
        }
    }

    pub fn add_input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(bytes);
        self.inputs.push(InputDigest {
            name: name.into(),
            sha256: format!("{:x}", hasher.finalize()),
        });
    }

    pub fn set_result(&mut self, value: serde_json::Value) {
        self.result = value;
    }

    pub fn add_lemma(&mut self, name: impl Into<String>) {
        self.lemma_refs.push(name.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_inputs_serialize_identically() {
        let build = || {
            let mut r = Report::new("decompose --named cyclic:6");
            r.add_input("cyclic:6", b"cyclic:6");
            r.set_result(serde_json::json!({"factors": [2, 3]}));
            r.add_lemma("decomposition-existence");
            r.to_json()
        };
        assert_eq!(build(), build());
    }

    #[test]
    fn digest_is_hex_sha256() {
        let mut r = Report::new("x");
        r.add_input("empty", b"");
        assert_eq!(
            r.inputs[0].sha256,
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
