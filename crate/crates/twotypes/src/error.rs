use std::fmt;

/// Why a table failed to be a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupFailure {
    NotSquare,
    OutOfRange { row: usize, col: usize },
    NotAssociative(usize, usize, usize),
    NoIdentity,
    NoInverse(usize),
}

impl fmt::Display for GroupFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFailure::NotSquare => write!(f, "table is not square"),
            GroupFailure::OutOfRange { row, col } => write!(f, "entry ({row},{col}) out of range"),
            GroupFailure::NotAssociative(a, b, c) => write!(f, "({a}{b}){c} != {a}({b}{c})"),
            GroupFailure::NoIdentity => write!(f, "no identity element"),
            GroupFailure::NoInverse(x) => write!(f, "element {x} has no inverse"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(GroupFailure),
    #[error("not a homomorphism: f({0}*{1}) != f({0})*f({1})")]
    NotAHom(usize, usize),
    #[error("not an action: {axiom} fails at {witness:?}")]
    NotAnAction { axiom: &'static str, witness: Vec<usize> },
    #[error("image is not normal: conjugating {element} by {by} leaves the image")]
    ImageNotNormal { element: usize, by: usize },
    #[error("axiom {axiom} fails at {witness:?}")]
    Violation { axiom: &'static str, witness: Vec<usize> },
    #[error("the given elements do not generate the group")]
    NotGenerating,
    #[error("not a 2-group: {0}")]
    NotATwoGroup(String),
    #[error("not in SSet2: {0}")]
    NotSSet2(String),
    #[error("horn filling failed: {0}")]
    FillingFailure(String),
    #[error("coefficient group is not abelian")]
    ANotAbelian,
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("line {line}: expected {expected}")]
    Parse { line: usize, expected: String },
    #[error("malformed data: {0}")]
    Malformed(String),
}

impl Error {
    pub(crate) fn violation(axiom: &'static str, witness: Vec<usize>) -> Self {
        Error::Violation { axiom, witness }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Counts search steps and aborts once a configured cap is passed.
#[derive(Debug)]
pub struct Budget {
    cap: usize,
    used: usize,
}

impl Budget {
    pub const DEFAULT_CAP: usize = 1_000_000;

    pub fn new(cap: usize) -> Self {
        Budget { cap, used: 0 }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            Err(Error::CapExceeded(self.cap))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> usize {
        self.used
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_CAP)
    }
}
