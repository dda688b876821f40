use thiserror::Error;

use crate::coloring::CountError;
use crate::diagram::DiagramError;
use crate::group::GroupError;
use crate::hurwitz::HurwitzError;
use crate::reduction::ReductionError;

/// Any error from the library, with a stable code string.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Group(e) => e.code(),
            Error::Diagram(e) => e.code(),
            Error::Count(e) => e.code(),
            Error::Hurwitz(e) => e.code(),
            Error::Reduction(e) => e.code(),
        }
    }
}
