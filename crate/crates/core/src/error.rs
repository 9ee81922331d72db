use alloc::string::String;

use crate::object::SizedObject;

/// Errors raised while building, typechecking, normalizing or evaluating
/// diagrams.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),

    #[error("boundary mismatch at node {position}: expected {expected}, found {found}")]
    BoundaryMismatch {
        position: usize,
        expected: SizedObject,
        found: SizedObject,
    },

    #[error("generator `{name}` expects {expected} parameter(s), got {found}")]
    BadParameterArity {
        name: String,
        expected: usize,
        found: usize,
    },

    #[error("generator `{name}` has type {found_dom} -> {found_cod}, declared {dom} -> {cod}")]
    GeneratorTypeMismatch {
        name: String,
        dom: SizedObject,
        cod: SizedObject,
        found_dom: SizedObject,
        found_cod: SizedObject,
    },

    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),

    #[error("generator `{0}` is not monochromatic")]
    NotMonochromatic(String),

    #[error("cannot combine a monochromatic and a sized language")]
    DisciplineMismatch,

    #[error("equation sides have different types: {0} -> {1} vs {2} -> {3}")]
    EquationTypeMismatch(SizedObject, SizedObject, SizedObject, SizedObject),

    #[error("no image for generator `{0}` in translation")]
    MissingTranslation(String),

    #[error("wire size must be positive")]
    ZeroSize,

    #[error("not a wire term: found {0}")]
    NotAWireTerm(&'static str),

    #[error("diagram is not over simple wires: {0} -> {1}")]
    NotMonochromaticDiagram(SizedObject, SizedObject),

    #[error("box nodes cannot occur in a scalable-language term")]
    BoxInScalableTerm,

    #[error("parameter list has length {found}, expected {expected}")]
    ParameterArityMismatch { expected: usize, found: usize },

    #[error("no value assigned to generator `{0}`")]
    MissingAssignment(String),

    #[error("value for `{name}` has arity {found_in} -> {found_out}, expected {dom} -> {cod}")]
    ArityMismatch {
        name: String,
        dom: usize,
        cod: usize,
        found_in: usize,
        found_out: usize,
    },

    #[error("cannot compose values of arity {0} -> {1} and {2} -> {3}")]
    ComposeMismatch(usize, usize, usize, usize),

    #[error("box over `{found}` cannot be read in backend `{backend}`")]
    BackendMismatch {
        backend: &'static str,
        found: &'static str,
    },

    #[error("invalid backend value: {0}")]
    BadArity(String),

    #[error("negative multiplicity {0} needs the antipode flavor")]
    NegativeEntry(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("entry {0} is not an element of semiring {1}")]
    NotInSemiring(String, &'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
