use serde::Serialize;
use serde_json::{json, Value};

use super::arith::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Exact,
    Upper,
    Lower,
}

/// One bound on `A_q(n, d, w)` (or on a packing number), with its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue<T> {
    pub value: T,
    pub kind: BoundKind,
    /// Construction or theorem tag, e.g. `"Thm10i"`.
    pub provenance: String,
    /// Residue or range conditions the value was derived under.
    pub assumptions: String,
    /// `false` for asymptotic reference values that hold only up to `o(1)`.
    pub rigorous: bool,
}

impl<T: Scalar> BoundValue<T> {
    pub fn new(value: T, kind: BoundKind, provenance: impl Into<String>) -> Self {
        BoundValue { value, kind, provenance: provenance.into(), assumptions: String::new(), rigorous: true }
    }

    pub fn exact(value: T, provenance: impl Into<String>) -> Self {
        Self::new(value, BoundKind::Exact, provenance)
    }

    pub fn upper(value: T, provenance: impl Into<String>) -> Self {
        Self::new(value, BoundKind::Upper, provenance)
    }

    pub fn lower(value: T, provenance: impl Into<String>) -> Self {
        Self::new(value, BoundKind::Lower, provenance)
    }

    pub fn assuming(mut self, note: impl Into<String>) -> Self {
        self.assumptions = note.into();
        self
    }

    pub fn heuristic(mut self) -> Self {
        self.rigorous = false;
        self
    }

    /// Bounds from above: exact values and upper bounds.
    pub fn is_upper(&self) -> bool {
        self.rigorous && matches!(self.kind, BoundKind::Exact | BoundKind::Upper)
    }

    pub fn is_lower(&self) -> bool {
        self.rigorous && matches!(self.kind, BoundKind::Exact | BoundKind::Lower)
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "value": scalar_json(&self.value),
            "kind": self.kind,
            "provenance": self.provenance,
        });
        if !self.assumptions.is_empty() {
            v["assumptions"] = json!(self.assumptions);
        }
        if !self.rigorous {
            v["rigorous"] = json!(false);
        }
        v
    }
}

/// JSON number when the value fits in `i64`, decimal string otherwise.
pub(crate) fn scalar_json<T: Scalar>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}
