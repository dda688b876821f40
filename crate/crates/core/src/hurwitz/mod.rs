//! The braid group acting on monodromy tuples.
//!
//! Tuples use one orientation convention throughout: every puncture loop
//! runs counterclockwise, a `+` puncture carries an element of `C` and a `-`
//! puncture an element of `C^-1`. A tuple `(g_1, .., g_2k)` written with
//! alternating loop orientations becomes `(g_1, g_2^-1, g_3, g_4^-1, ..)`,
//! and the boundary loop is the ordered product `m_1 m_2 .. m_2k`.

mod density;
mod orbits;
mod schur;
mod search;
mod tuple;

pub use density::{density_scan, DensityRow};
pub use orbits::{enumerate_orbits, OrbitInfo, OrbitReport, Stratum};
pub use schur::schur;
pub use search::{gadget_search, SearchOutcome};
pub use tuple::{act_letter, MonodromyTuple, Strata};

use thiserror::Error;

use crate::group::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HurwitzError {
    #[error("braid has {braid} strands but the tuple has {tuple} entries")]
    StrandMismatch { braid: usize, tuple: usize },
    #[error("bad tuple: {0}")]
    BadTuple(String),
    #[error("entry {0} does not match its sign and class")]
    NotInClass(usize),
    #[error("tuple product is not the identity")]
    NotInRHat,
    #[error("entry {0} has no unique lift in the lifted class")]
    LiftAmbiguity(usize),
    #[error("state budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("base group is not perfect")]
    BaseNotPerfect,
    #[error("this stratum needs a reduced multiplier")]
    MissingMultiplier,
    #[error(transparent)]
    Group(#[from] GroupError),
}

impl HurwitzError {
    pub fn code(&self) -> &'static str {
        match self {
            HurwitzError::StrandMismatch { .. } => "hurwitz.strand_mismatch",
            HurwitzError::BadTuple(_) => "hurwitz.bad_tuple",
            HurwitzError::NotInClass(_) => "hurwitz.not_in_class",
            HurwitzError::NotInRHat => "hurwitz.not_in_rhat",
            HurwitzError::LiftAmbiguity(_) => "hurwitz.lift_ambiguity",
            HurwitzError::BudgetExceeded(_) => "hurwitz.budget_exceeded",
            HurwitzError::BaseNotPerfect => "hurwitz.base_not_perfect",
            HurwitzError::MissingMultiplier => "hurwitz.missing_multiplier",
            HurwitzError::Group(e) => e.code(),
        }
    }
}
