use thiserror::Error;

use crate::multistructure::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("carrier of {0} elements exceeds the supported maximum of {1}")]
    TooLarge(usize, usize),
    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not a hypergroup (associative={}, reproductive={}, nonempty={})",
        .0.associative, .0.reproductive, .0.all_products_nonempty)]
    NotAHypergroup(Box<AxiomReport>),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error at line {line}: {msg}")]
    ParseLine { line: usize, msg: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::TooLarge(..))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
