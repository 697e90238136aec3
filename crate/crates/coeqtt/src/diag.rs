//! Structured diagnostics with source spans.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Severity {
    Error,
    Warning,
}

/// A half-open source region: 1-based line and column of its start, plus
/// its byte length.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Span {
    pub offset: usize,
    pub line: u32,
    pub col: u32,
    pub len: u32,
}

impl Span {
    pub fn join(self, other: Span) -> Span {
        if other.offset >= self.offset {
            Span {
                offset: self.offset,
                line: self.line,
                col: self.col,
                len: (other.offset + other.len as usize - self.offset) as u32,
            }
        } else {
            other.join(self)
        }
    }
}

/// Stable machine-readable diagnostic codes. Golden tests pin these.
pub mod codes {
    pub const ILLEGAL_CHARACTER: &str = "illegal-character";
    pub const UNEXPECTED_TOKEN: &str = "unexpected-token";
    pub const UNBOUND_NAME: &str = "unbound-name";
    pub const POISONED: &str = "poisoned";
    pub const DUPLICATE_NAME: &str = "duplicate-name";
    pub const CANNOT_SYNTHESIZE: &str = "cannot-synthesize";
    pub const U1_HAS_NO_TYPE: &str = "u1-has-no-type";
    pub const NOT_A_UNIVERSE: &str = "not-a-universe";
    pub const NOT_A_FUNCTION: &str = "not-a-function";
    pub const NOT_A_PAIR: &str = "not-a-pair";
    pub const NOT_AN_IDENTITY: &str = "not-an-identity";
    pub const NOT_A_COEQUALIZER: &str = "not-a-coequalizer";
    pub const NOT_A_SUM: &str = "not-a-sum";
    pub const TYPE_MISMATCH: &str = "type-mismatch";
    pub const ENDPOINT_MISMATCH: &str = "endpoint-mismatch";
    pub const ARITY: &str = "arity";
    pub const CONV_ASSERT_FAILED: &str = "conv-assert-failed";
    pub const AXIOM_ASSERT_FAILED: &str = "axiom-assert-failed";
}

#[derive(Clone, Debug)]
pub struct Diagnostic {
    pub severity: Severity,
    pub file: String,
    pub span: Span,
    pub code: &'static str,
    pub message: String,
    /// Pretty-printed normal forms for mismatches.
    pub expected: Option<String>,
    pub actual: Option<String>,
}

impl Diagnostic {
    pub fn error(span: Span, code: &'static str, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            severity: Severity::Error,
            file: String::new(),
            span,
            code,
            message: message.into(),
            expected: None,
            actual: None,
        }
    }

    pub fn with_types(mut self, expected: String, actual: String) -> Diagnostic {
        self.expected = Some(expected);
        self.actual = Some(actual);
        self
    }

    pub fn in_file(mut self, file: &str) -> Diagnostic {
        self.file = file.to_string();
        self
    }

    /// One-object-per-line JSON rendering for `--json` output.
    pub fn to_json(&self) -> String {
        let mut obj = serde_json::Map::new();
        obj.insert("file".into(), self.file.clone().into());
        obj.insert("line".into(), self.span.line.into());
        obj.insert("col".into(), self.span.col.into());
        obj.insert("code".into(), self.code.into());
        obj.insert("message".into(), self.message.clone().into());
        if let Some(e) = &self.expected {
            obj.insert("expected".into(), e.clone().into());
        }
        if let Some(a) = &self.actual {
            obj.insert("actual".into(), a.clone().into());
        }
        serde_json::Value::Object(obj).to_string()
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(
            f,
            "{}:{}:{}: {sev}[{}]: {}",
            self.file, self.span.line, self.span.col, self.code, self.message
        )?;
        if let Some(e) = &self.expected {
            write!(f, "\n  expected: {e}")?;
        }
        if let Some(a) = &self.actual {
            write!(f, "\n  actual:   {a}")?;
        }
        Ok(())
    }
}
