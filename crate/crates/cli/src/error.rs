use serde::Serialize;
use wcomb_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Parse,
    Precondition,
    Verification,
}

impl Kind {
    pub fn exit_code(self) -> u8 {
        match self {
            Kind::Parse => 2,
            Kind::Precondition => 3,
            Kind::Verification => 4,
        }
    }
}

/// Reported on stderr as `{"code": .., "kind": .., "message": ..}`.
#[derive(Clone, Debug, Serialize)]
pub struct CliError {
    pub code: &'static str,
    pub kind: Kind,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        Self {
            code: "parse",
            kind: Kind::Parse,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self {
            code: "io",
            kind: Kind::Precondition,
            message: message.into(),
        }
    }

    pub fn verification(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            kind: Kind::Verification,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::BadRational(_) => ("bad-rational", Kind::Parse),
            Error::EmptyForm => ("empty-form", Kind::Parse),
            Error::OrderMismatch { .. } => ("order-mismatch", Kind::Precondition),
            Error::EmptyList => ("empty-list", Kind::Precondition),
            Error::OutOfRange { .. } => ("out-of-range", Kind::Precondition),
            Error::SingularMatrix => ("singular-matrix", Kind::Precondition),
            Error::DependentForms => ("dependent-forms", Kind::Precondition),
            Error::ZeroCombinants => ("zero-combinants", Kind::Precondition),
            Error::InvalidSlot { .. } => ("invalid-slot", Kind::Precondition),
            Error::MissingSlot { .. } => ("missing-slot", Kind::Precondition),
            Error::ShapeMismatch { .. } => ("shape-mismatch", Kind::Precondition),
            Error::NotInImage { .. } => ("not-in-image", Kind::Verification),
            Error::OutsideSpan => ("outside-span", Kind::Verification),
            Error::Unsolvable(_) => ("unsolvable", Kind::Verification),
            Error::Inconsistent(_) => ("inconsistent", Kind::Verification),
        };
        Self {
            code,
            kind,
            message: e.to_string(),
        }
    }
}
