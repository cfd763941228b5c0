use thiserror::Error;

/// Errors produced by the lab's constructors and operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group orders must be positive, got a zero order")]
    ZeroOrder,
    #[error("group size overflows the platform index range")]
    SizeOverflow,
    #[error("functions live on different groups")]
    GroupMismatch,
    #[error("element tuple is not valid for this group")]
    InvalidElement,
    #[error("value vector has length {got}, group has size {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("exponent p = {0} is out of range (need p >= 1)")]
    InvalidExponent(f64),
    #[error("character set contains duplicates")]
    DuplicateCharacters,
    #[error("dissociateness check limited to {limit} characters, got {got}")]
    DissociateSetTooLarge { got: usize, limit: usize },
    #[error("character orders are incompatible with the requested Riesz case")]
    CaseOrderMismatch,
    #[error("spectral mass {0:.3e} lies outside the generated character set")]
    SpectralMassOffSet(f64),
    #[error("sampler produced no usable pairs")]
    DegenerateSampler,
    #[error("input is degenerate (norm below threshold)")]
    DegenerateInput,
    #[error("witness list is empty")]
    EmptyWitnessList,
    #[error("report is empty")]
    EmptyReport,
    #[error("operation requires a group with all orders equal to 2")]
    NotTwoGroup,
    #[error("subcube/embedding coordinates are invalid: {0}")]
    InvalidSubcube(String),
    #[error("block vector does not conform to the block spec dimensions")]
    BlockDimensionMismatch,
    #[error("size {need} exceeds the budget {budget}")]
    BudgetExceeded { need: usize, budget: usize },
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed function JSON: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
