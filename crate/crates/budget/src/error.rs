use thiserror::Error;

#[derive(Debug, Error)]
pub enum BudgetError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
