use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variant names are part of the public surface: the CLI prints them
/// verbatim so that failure reports can be grepped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable count mismatch: {lhs} vs {rhs}")]
    NvarsMismatch { lhs: usize, rhs: usize },
    #[error("point has {got} coordinates, polynomial has {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator {index} is identically zero")]
    ZeroDenominator { index: usize },

    #[error("signed power sums need an even number of variables, got {nvars}")]
    OddVariableCount { nvars: usize },
    #[error("form is not symmetric")]
    NotSymmetric,
    #[error("form is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} exceeds the variable count {nvars}")]
    DegreeExceedsVars { degree: u32, nvars: usize },
    #[error("expected {expected}, got {got}")]
    Unsupported { expected: String, got: String },
    #[error("expected {expected} values, got {got}")]
    WrongValueCount { expected: usize, got: usize },

    #[error("pencil endpoint does not vanish (coefficient of t^{power} is nonzero)")]
    EndpointNotZero { power: u32 },
    #[error("annihilated coefficient has degree {degree} in the unknowns, expected 1")]
    NotLinear { degree: u32 },
    #[error("annihilated coefficient has degree {degree} in the unknowns, expected 2")]
    NotQuadratic { degree: u32 },
    #[error("known root d = 1 is missing from the eliminant")]
    KnownRootMissing,
    #[error("linear cofactor has an identically vanishing leading coefficient")]
    DegenerateLinear,
    #[error("the equation in t degenerates: {0}")]
    DegenerateT(String),
    #[error("construction yields a degenerate (paired or zero) tuple")]
    DegenerateSolution,
    #[error("{count} pencil coefficients must vanish but only two unknowns are available")]
    TooManyConstraints { count: usize },

    #[error("degree did not drop at reduction step {step}: leading part of degree {degree} survives: {leading}")]
    DegreeDropFailed { step: usize, degree: u32, leading: String },
    #[error("base form is outside the pencil's supported class: {0}")]
    BasePencilUnsupported(String),
    #[error("too few variables: need at least {needed}, have {have}")]
    InsufficientVariables { needed: usize, have: usize },

    #[error("stage {stage} has no rational solution: {reason}")]
    StageUnsolvable { stage: String, reason: String },
    #[error("free parameter shortfall: {got} survive, {needed} required")]
    ParameterShortfall { needed: usize, got: usize },

    #[error("interpolation over the shift parameters failed: {0}")]
    InterpolationFailed(String),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("assignment hits the excluded locus: {0} vanishes")]
    ExcludedLocusHit(String),
    #[error("unknown parameter {0}")]
    UnknownParameter(String),

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// The variant name, as surfaced by the CLI.
    pub fn name(&self) -> &'static str {
        use Error::*;
        match self {
            NvarsMismatch { .. } => "NvarsMismatch",
            PointLength { .. } => "PointLength",
            VariableOutOfRange { .. } => "VariableOutOfRange",
            InexactDivision => "InexactDivision",
            DivisionByZero => "DivisionByZero",
            ZeroDenominator { .. } => "ZeroDenominator",
            OddVariableCount { .. } => "OddVariableCount",
            NotSymmetric => "NotSymmetric",
            NotHomogeneous => "NotHomogeneous",
            DegreeExceedsVars { .. } => "DegreeExceedsVars",
            Unsupported { .. } => "Unsupported",
            WrongValueCount { .. } => "WrongValueCount",
            EndpointNotZero { .. } => "EndpointNotZero",
            NotLinear { .. } => "NotLinear",
            NotQuadratic { .. } => "NotQuadratic",
            KnownRootMissing => "KnownRootMissing",
            DegenerateLinear => "DegenerateLinear",
            DegenerateT(_) => "DegenerateT",
            DegenerateSolution => "DegenerateSolution",
            TooManyConstraints { .. } => "TooManyConstraints",
            DegreeDropFailed { .. } => "DegreeDropFailed",
            BasePencilUnsupported(_) => "BasePencilUnsupported",
            InsufficientVariables { .. } => "InsufficientVariables",
            StageUnsolvable { .. } => "StageUnsolvable",
            ParameterShortfall { .. } => "ParameterShortfall",
            InterpolationFailed(_) => "InterpolationFailed",
            CertificationFailed(_) => "CertificationFailed",
            ExcludedLocusHit(_) => "ExcludedLocusHit",
            UnknownParameter(_) => "UnknownParameter",
            Syntax { .. } => "Syntax",
            Malformed(_) => "Malformed",
        }
    }

    /// True for failures that classify a mathematical degeneracy of the
    /// input, as opposed to bad usage or malformed input.
    pub fn is_degeneracy(&self) -> bool {
        use Error::*;
        matches!(
            self,
            InexactDivision
                | ZeroDenominator { .. }
                | NotSymmetric
                | NotHomogeneous
                | DegreeExceedsVars { .. }
                | EndpointNotZero { .. }
                | NotLinear { .. }
                | NotQuadratic { .. }
                | KnownRootMissing
                | DegenerateLinear
                | DegenerateT(_)
                | DegenerateSolution
                | TooManyConstraints { .. }
                | DegreeDropFailed { .. }
                | BasePencilUnsupported(_)
                | StageUnsolvable { .. }
                | ParameterShortfall { .. }
                | CertificationFailed(_)
                | ExcludedLocusHit(_)
        )
    }
}
