use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("invalid scalar literal `{0}`")]
    Scalar(String),
    #[error("invalid frame index `{0}` (expected 1, 2, 3, 1b, 2b or 3b)")]
    FrameIndex(String),
    #[error("unknown connection spec `{0}`")]
    Spec(String),
    #[error("unknown family `{0}`")]
    Family(String),
    #[error("malformed assignment `{0}` (expected key=value)")]
    Assignment(String),
    #[error("unknown key `{0}`")]
    UnknownKey(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TensorError {
    #[error("slot {slot} out of range for rank {rank}")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("rank {0} too small for this operation")]
    RankTooSmall(usize),
    #[error("tensor is not fully skew")]
    NotSkew,
    #[error("expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricError {
    #[error("metric parameters violate {0}")]
    Violated(crate::metric::Inequality),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("family {family}: parameter `{param}` is required")]
    MissingParam { family: String, param: String },
    #[error("family {family}: unknown parameter `{param}`")]
    UnknownParam { family: String, param: String },
    #[error("family {family}: constraint violated: {constraint}")]
    Domain { family: String, constraint: String },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("point outside the oracle normalization: {0}")]
    Normalization(String),
    #[error("no valid metric found after {0} attempts")]
    DegenerateSampling(usize),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FlowError {
    #[error("step and horizon must be positive (step {step}, horizon {horizon})")]
    BadSchedule { step: f64, horizon: f64 },
    #[error("initial metric is not positive-definite")]
    NotPositive,
}
