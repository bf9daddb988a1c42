use thiserror::Error;

use crate::cost::CostError;
use crate::kriging::KrigingError;
use crate::numerics::NumericsError;
use crate::problems::ProblemError;
use crate::process::ProcessError;
use crate::reliability::ReliabilityError;

/// Crate-level error: any failure surfaced by the high-level entry points
/// (total cost evaluation, optimization runs, problem construction).
#[derive(Debug, Error)]
pub enum CoreError {
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Kriging(#[from] KrigingError),
    #[error(transparent)]
    Process(#[from] ProcessError),
    #[error(transparent)]
    Reliability(#[from] ReliabilityError),
    #[error(transparent)]
    Cost(#[from] CostError),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error("{0}")]
    Config(String),
}
