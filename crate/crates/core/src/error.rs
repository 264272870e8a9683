use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("arrows `{0}` and `{1}` do not compose")]
    NotComposable(String, String),
    #[error("a trivial path has no arrows to place on a cycle")]
    TrivialPath,
    #[error("path `{0}` is not a cycle")]
    NotACycle(String),
    #[error("cycle `{0}` repeats an arrow")]
    NotSimple(String),
    #[error("path `{0}` does not belong to this quiver")]
    ForeignPath(String),
    #[error("{0}")]
    InvalidPresentation(String),
    #[error("condition (M) fails: {0}")]
    ConditionM(String),
    #[error("successor tables are inconsistent: {0}")]
    CorruptTables(String),
    #[error("cycles `{0}` and `{1}` are rotations of each other but have multiplicities {2} and {3}")]
    MultiplicityConflict(String, String, u32, u32),
    #[error("multiplicity of `{0}` must be positive")]
    ZeroMultiplicity(String),
    #[error("not a defining pair: {0}")]
    InvalidPair(String),
    #[error("generated arrow name `{0}` collides with an existing arrow")]
    NameCollision(String),
    #[error("enumeration budget of {cap} paths exceeded; shrink the instance or raise the cap")]
    BudgetExceeded { cap: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
