use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("undeclared variable `{name}` at byte {pos}")]
    UndeclaredVariable { name: String, pos: usize },
    #[error("zero denominator at byte {pos}")]
    ZeroDenominator { pos: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("components have unequal degrees")]
    UnequalDegrees,
    #[error("all components are zero")]
    AllZero,
    #[error("first component vanishes identically; the affine trace is empty")]
    EmptyTrace,
    #[error("parameterization is constant")]
    ConstantParam,
    #[error("singular transformation")]
    SingularMobius,
    #[error("transformation has non-real entries")]
    NonRealMobius,
    #[error("improper parameterization: generic fiber degree {generic_fiber_degree}")]
    Improper { generic_fiber_degree: usize },
    #[error("arc [{a}, {b}] meets a real root of the denominator")]
    ArcTouchesInfinity { a: String, b: String },
    #[error("arc bounds must satisfy a < b")]
    InvalidArc,
    #[error("operation needs a plane curve, got target dimension {m}")]
    NotPlane { m: usize },
    #[error("denominator root of degree {degree} over Q (minimal polynomial {minpoly}) is not supported")]
    UnsupportedExtension { degree: usize, minpoly: String },
    #[error("classifier answered NO: {0}")]
    ClassifierNo(String),
    #[error("empty sample cloud")]
    EmptyCloud,
    #[error("sample count must be at least 2")]
    TooFewSamples,
    #[error("non-finite coordinate in sample cloud")]
    NonFinite,
    #[error("winding number inconclusive: |value| = {0:e} on the circle")]
    WindingInconclusive(f64),
    #[error("SVG output needs plane points, got dimension {0}")]
    SvgDimension(usize),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error documents.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero_polynomial",
            Error::ConstantPolynomial => "constant_polynomial",
            Error::NotSquarefree => "not_squarefree",
            Error::Syntax { .. } => "syntax",
            Error::UndeclaredVariable { .. } => "undeclared_variable",
            Error::ZeroDenominator { .. } => "zero_denominator",
            Error::NotHomogeneous => "not_homogeneous",
            Error::UnequalDegrees => "unequal_degrees",
            Error::AllZero => "all_zero",
            Error::EmptyTrace => "empty_trace",
            Error::ConstantParam => "constant",
            Error::SingularMobius => "singular_mobius",
            Error::NonRealMobius => "non_real_mobius",
            Error::Improper { .. } => "improper",
            Error::ArcTouchesInfinity { .. } => "arc_touches_infinity",
            Error::InvalidArc => "invalid_arc",
            Error::NotPlane { .. } => "not_plane",
            Error::UnsupportedExtension { .. } => "unsupported_extension_degree",
            Error::ClassifierNo(_) => "classifier_no",
            Error::EmptyCloud => "empty_cloud",
            Error::TooFewSamples => "too_few_samples",
            Error::NonFinite => "non_finite",
            Error::WindingInconclusive(_) => "winding_inconclusive",
            Error::SvgDimension(_) => "svg_dimension",
            Error::Document(_) => "invalid_document",
            Error::Io(_) => "io",
        }
    }

    /// Mathematical rejections of a well-formed input (CLI exit code 2).
    pub fn is_math_rejection(&self) -> bool {
        matches!(
            self,
            Error::Improper { .. }
                | Error::ConstantParam
                | Error::EmptyTrace
                | Error::ArcTouchesInfinity { .. }
                | Error::UnsupportedExtension { .. }
                | Error::ClassifierNo(_)
                | Error::WindingInconclusive(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
