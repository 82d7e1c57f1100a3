use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors surfaced by the engine. Dimension and morphism problems are caller
/// bugs; `Dangling` is a first-class outcome of strict derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MggError {
    /// Shapes of two operands disagree.
    Dimension { expected: (usize, usize), got: (usize, usize), context: &'static str },
    /// A morphism is not injective, not type-preserving, or names unknown nodes.
    Morphism(String),
    /// Strict derivation would leave dangling edges; lists them as (from, to) node ids.
    Dangling(Vec<(String, String)>),
    /// A constraint graph violates a shape requirement (e.g. Q on an edgeless graph).
    ConstraintShape(String),
    /// An operator was applied to a quantifier/atom it is not defined for.
    Operator(String),
    /// A formula or diagram failed validation.
    Formula(String),
    /// Sequence completion is missing element identifications.
    Completion(String),
    /// A match argument was not a valid total match.
    Match(String),
    /// Enumeration refused an input exceeding the oracle budget.
    Budget { limit: usize, got: usize, what: &'static str },
    /// Compilation would exceed the configured sequence budget.
    SequenceBudget { budget: usize, needed: usize },
}

impl fmt::Display for MggError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MggError::Dimension { expected, got, context } => write!(
                f,
                "dimension mismatch in {context}: expected {}x{}, got {}x{}",
                expected.0, expected.1, got.0, got.1
            ),
            MggError::Morphism(m) => write!(f, "invalid morphism: {m}"),
            MggError::Dangling(edges) => {
                write!(f, "dangling edges:")?;
                for (a, b) in edges {
                    write!(f, " ({a} -> {b})")?;
                }
                Ok(())
            }
            MggError::ConstraintShape(m) => write!(f, "constraint shape error: {m}"),
            MggError::Operator(m) => write!(f, "operator error: {m}"),
            MggError::Formula(m) => write!(f, "formula error: {m}"),
            MggError::Completion(m) => write!(f, "completion error: {m}"),
            MggError::Match(m) => write!(f, "match error: {m}"),
            MggError::Budget { limit, got, what } => {
                write!(f, "budget exceeded for {what}: {got} > {limit}")
            }
            MggError::SequenceBudget { budget, needed } => {
                write!(f, "sequence budget exceeded: compilation needs {needed} alternatives, budget is {budget}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, MggError>;
