use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scalars belong to different coefficient fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero denominator in coefficient")]
    ZeroDenominator,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("Groebner basis computation exceeded the pair budget of {0}")]
    BudgetExceeded(usize),
    #[error("coefficient field does not have prime characteristic")]
    NotPrimeCharacteristic,
    #[error("{q} is not a power of the characteristic {p}")]
    NotPPower { q: u64, p: u64 },
    #[error("operation requires a polynomial ambient ring, not a quotient")]
    QuotientNotSupported,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("the ideal is zero")]
    ZeroIdeal,
    #[error("regular sequence search exhausted its candidates after finding [{}]", partial.join(", "))]
    RegularSequenceSearchExhausted { partial: Vec<String> },
    #[error("the ideal contains no regular element")]
    NoRegularElement,
    #[error("ideal is not monomial")]
    NotMonomial,
    #[error("resolution is not certified minimal")]
    NotMinimal,
    #[error("expected grade {expected}, found {found}")]
    GradeMismatch { expected: usize, found: usize },
    #[error("expected dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("semigroup generators are not coprime")]
    NotCoprime,
    #[error("semigroup needs at least one generator")]
    EmptyGenerators,
    #[error("fractional ideals belong to different semigroups")]
    SemigroupMismatch,
    #[error("fractional ideal is not contained in the ring")]
    NotIntegral,
    #[error("matrix dimensions do not match: {0}")]
    Shape(String),
    #[error("schema error in {path}: {field}")]
    Schema { path: String, field: String },
    #[error("duplicate corpus id `{0}`")]
    DuplicateId(String),
    #[error("{0}")]
    Expression(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax { position, message: message.into() }
    }

    /// Input problems (as opposed to mathematical failures or budget exhaustion).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable(_)
                | Error::ZeroDenominator
                | Error::NotPrime(_)
                | Error::Schema { .. }
                | Error::DuplicateId(_)
                | Error::Expression(_)
                | Error::Io(_)
                | Error::NotCoprime
                | Error::EmptyGenerators
                | Error::Shape(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
