use alloc::string::String;
use core::fmt;

use crate::lattice::Elem;

/// The axiom a witness triple violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
    Bottom,
    Top,
    JoinExists,
    MeetExists,
    Distributivity,
    OdotRange,
    OdotCommutative,
    OdotAssociative,
    OdotIdentity,
    Residuation,
    /// `a * (x | y) = (a * x) | (a * y)`
    OdotDistributesOverJoin,
    /// `a * b <= a & b`
    OdotBelowMeet,
    /// `a * !a = 0`
    OdotWithNegation,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::Bottom => "bottom",
            Axiom::Top => "top",
            Axiom::JoinExists => "join-exists",
            Axiom::MeetExists => "meet-exists",
            Axiom::Distributivity => "distributivity",
            Axiom::OdotRange => "odot-range",
            Axiom::OdotCommutative => "odot-commutative",
            Axiom::OdotAssociative => "odot-associative",
            Axiom::OdotIdentity => "odot-identity",
            Axiom::Residuation => "residuation",
            Axiom::OdotDistributesOverJoin => "odot-distributes-over-join",
            Axiom::OdotBelowMeet => "odot-below-meet",
            Axiom::OdotWithNegation => "odot-with-negation",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what}: expected dimension {expected}, found {found}")]
    Dimension { what: &'static str, expected: usize, found: usize },

    #[error("axiom {axiom} violated at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: [Elem; 3] },

    #[error("no residuum for ({b}, {c}): {{a | a*b <= c}} has no maximum")]
    NotResiduated { b: Elem, c: Elem },

    #[error("lattice reduct is not distributive at {witness:?}")]
    NotDistributive { witness: [Elem; 3] },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("carrier of size {size} exceeds the supported maximum {max}")]
    TooLarge { size: usize, max: usize },

    #[error("enumeration size {n} exceeds the cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },

    #[error("filter has no minimum element")]
    NoMinimum,

    #[error("syntax error at byte {position}: {message}")]
    SyntaxError { position: usize, message: String },

    #[error("variable `{0}` is not bound by the exists prefix")]
    UnboundVariable(String),

    #[error("more than one free variable: `{0}` and `{1}`")]
    MultipleFreeVariables(String, String),

    #[error("formula is not a single equation without bound variables")]
    NotAtomic,

    #[error("algebra is not Gelfand: prime filter {prime} lies under several maximal filters")]
    NotGelfand { prime: usize },

    #[error("lattice is not conormal")]
    NotConormal,

    #[error("map is not a morphism: {0}")]
    NotAMorphism(String),

    #[error("no isomorphism compatible with the given maps")]
    NoIsomorphism,
}
