//! Shared report plumbing and canonical JSON.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Status::Pass
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One failing (or illustrative) case: what went in, what was expected, what came out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

impl Witness {
    pub fn new(inputs: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Witness {
            inputs: inputs.into(),
            expected: expected.into(),
            got: got.into(),
        }
    }
}

/// Cap on the number of witnesses kept per report.
pub const MAX_WITNESSES: usize = 8;

/// Pretty JSON with object keys in sorted order.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    // `serde_json::Map` is a BTreeMap in this build, so going through
    // `Value` sorts every object.
    let v = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}
