//! Circuits over a braid-orbit alphabet and their compilation to knots.
//!
//! A symbol is an alternating tuple on `2k` punctures. The zombie is
//! `(c, c^-1, .., c, c^-1)`; the other symbols are onto `G`, have trivial
//! product and Schur invariant, and start with `c` and end with `c^-1`.
//! Gates are pure braids on `4k` strands acting on pairs of symbols.

mod alphabet;
mod circuit;
mod compile;
mod gadget;

pub use alphabet::{build_alphabet, smallest_nondegenerate_k, ZsatAlphabet};
pub use circuit::{count_zsat, load_circuit, parse_circuit, CircuitFile, Gate, LoadedCircuit, ZsatCircuit, ZsatCount};
pub use compile::{compile, verify_reduction, Compiled, SmallerPair, VerifyReport};
pub use gadget::{
    gadget_action, load_registry, parse_gadget, planted_gadget, validate_gadget, Gadget, GadgetReport, PropertyCheck,
    Registry, Regime,
};

use thiserror::Error;

use crate::coloring::CountError;
use crate::diagram::DiagramError;
use crate::group::GroupError;
use crate::hurwitz::HurwitzError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("group is not non-abelian simple")]
    NotSimpleGroup,
    #[error("element {0} is not in the class")]
    NotInClass(u32),
    #[error("alphabet is not invariant under Aut(G, c): {0}")]
    NotInvariant(String),
    #[error("enumeration exceeds the state budget of {0}")]
    BudgetExceeded(u64),
    #[error("no gadget `{0}` in the registry")]
    UnknownGadget(String),
    #[error("gadget `{0}`: {1}")]
    ActionMismatch(String, String),
    #[error("gate at {at} does not fit a circuit of width {width}")]
    GateOutOfRange { at: usize, width: usize },
    #[error("gadget `{id}` has {found} strands, expected {expected}")]
    GadgetStrands { id: String, expected: usize, found: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Count(#[from] CountError),
}

impl ReductionError {
    pub fn code(&self) -> &'static str {
        match self {
            ReductionError::NotSimpleGroup => "alphabet.not_simple",
            ReductionError::NotInClass(_) => "alphabet.not_in_class",
            ReductionError::NotInvariant(_) => "alphabet.not_invariant",
            ReductionError::BudgetExceeded(_) => "alphabet.budget_exceeded",
            ReductionError::UnknownGadget(_) => "compile.unknown_gadget",
            ReductionError::ActionMismatch(..) => "gadget.action_mismatch",
            ReductionError::GateOutOfRange { .. } => "circuit.gate_out_of_range",
            ReductionError::GadgetStrands { .. } => "gadget.strands",
            ReductionError::Parse { .. } => "circuit.parse",
            ReductionError::Io(_) => "io",
            ReductionError::Group(e) => e.code(),
            ReductionError::Diagram(e) => e.code(),
            ReductionError::Hurwitz(e) => e.code(),
            ReductionError::Count(e) => e.code(),
        }
    }
}
