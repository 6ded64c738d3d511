use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("linear form is zero")]
    ZeroLinearForm,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid Fano table: {0}")]
    FanoTable(String),

    #[error("input is not purely imaginary")]
    NotImaginary,

    #[error("subspace is not closed under the product")]
    NotSubalgebra,

    #[error("restricted norm has rank {0}, which no subalgebra realizes")]
    GramRank(usize),

    #[error("stratum datum has the wrong type: {0}")]
    Datum(String),

    #[error("no constant makes the volume identity hold")]
    VolumeConstant,

    #[error("no torus-adapted isomorphism between the split and Fano models")]
    BridgeNotFound,

    #[error("fixed point enumeration produced {0} points")]
    FixedPointCount(usize),

    #[error("fixed point {0} is missing from the label table")]
    UnknownFixedPoint(String),

    #[error("tangent weights at {0}: exterior cube weights are not a submultiset")]
    TangentSubtraction(String),

    #[error("one-parameter subgroup ({0},{1}) is not generic")]
    NonGenericChamber(i64, i64),

    #[error("chamber ({0},{1}) does not reproduce the codimension labels")]
    ChamberLabels(i64, i64),

    #[error("curve joining {0} and {1} leaves the variety")]
    CurveNotContained(String, String),

    #[error("class at {label}: solution space has dimension {dim}")]
    ClassNotUnique { label: String, dim: usize },

    #[error("class at {0}: constraint system is inconsistent")]
    ClassInconsistent(String),

    #[error("localization sum is not a polynomial")]
    NotPolynomial,

    #[error("localization integral is not a constant (degree {0})")]
    NonConstantIntegral(u32),

    #[error("class is not in the span of the Schubert basis (vertex {0})")]
    NotInSpan(String),

    #[error("non-integral structure constant in {0}")]
    NonIntegral(String),

    #[error("negative structure constant in {0}")]
    Negative(String),

    #[error("ring presentation: {0}")]
    Presentation(String),

    #[error("restriction of tau_{0} is not determined uniquely")]
    RestrictionAmbiguous(String),

    #[error("restriction of tau_{0} has no non-negative solution")]
    RestrictionInconsistent(String),

    #[error("restriction matrix in codimension {0} is not of full rank")]
    NotFullRank(usize),

    #[error("dual variety is not a hypersurface by the Katz-Kleiman criterion")]
    DualNotHypersurface,

    #[error("Koszul and closed-form Hilbert polynomials differ at k = {0}")]
    HilbertMismatch(i64),

    #[error("equivariant Hilbert series fails at k = {0}")]
    SeriesMismatch(i64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("fixture {name}: {reason}")]
    Fixture { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
