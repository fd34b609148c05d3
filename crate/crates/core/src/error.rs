use thiserror::Error;

/// Errors raised by structural and typing problems.
///
/// Axiom failures are not errors: validators return a [`crate::Report`]
/// listing violated laws with witnesses. An error means the input was not
/// even well-formed enough to ask the question (an index out of range, a
/// non-composable pair, mismatched boundaries) or that a stated
/// precondition does not hold.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatError {
    #[error("structural error: index {index} out of range in {table} (len {len})")]
    Structural {
        table: String,
        index: usize,
        len: usize,
    },

    #[error("morphisms g={g} and f={f} are not composable (target of f != source of g)")]
    NotComposable { g: usize, f: usize },

    #[error("composition table has no entry for composable pair g={g}, f={f}")]
    MissingComposite { g: usize, f: usize },

    #[error("boundary mismatch: {0}")]
    Boundary(String),

    #[error("category mismatch: {0}")]
    CategoryMismatch(String),

    #[error("enumeration bound exceeded: category has {size} morphisms, bound is {bound}")]
    BoundExceeded { size: usize, bound: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("arity error: {0}")]
    Arity(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("interchange mismatch: the two whiskering orders of a horizontal composite disagree")]
    Interchange,

    #[error("no unique candidate: {found} transformations {from} => {to} pass validation")]
    NoUniqueCandidate {
        from: String,
        to: String,
        found: usize,
    },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
