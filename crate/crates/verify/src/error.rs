use minorkit::{ConstructionError, GenerateError, MinorError};
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum VerifyError {
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("catalog unavailable: {0}")]
    CatalogUnavailable(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("expected-value data `{file}`: {msg}")]
    Data { file: String, msg: String },
    #[error("certificate rejected for {0}")]
    BadCertificate(String),
    #[error(transparent)]
    Construction(ConstructionError),
    #[error(transparent)]
    Generate(GenerateError),
    #[error("io: {0}")]
    Io(String),
}

impl From<MinorError> for VerifyError {
    fn from(e: MinorError) -> Self {
        VerifyError::Inconclusive(e.to_string())
    }
}

impl From<ConstructionError> for VerifyError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Minor(m) => m.into(),
            ConstructionError::Generate(GenerateError::Minor(m)) => m.into(),
            e => VerifyError::Construction(e),
        }
    }
}

impl From<GenerateError> for VerifyError {
    fn from(e: GenerateError) -> Self {
        match e {
            GenerateError::Minor(m) => m.into(),
            e => VerifyError::Generate(e),
        }
    }
}

impl From<minorkit::GraphError> for VerifyError {
    fn from(e: minorkit::GraphError) -> Self {
        VerifyError::Construction(e.into())
    }
}
