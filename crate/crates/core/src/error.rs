use thiserror::Error;

use crate::step::StepVector;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum CoreError {
    #[error("unknown path character {ch:?} at position {pos}")]
    UnknownChar { ch: char, pos: usize },
    #[error("character {ch:?} at position {pos} is not a {family} step")]
    CharNotInFamily {
        ch: char,
        pos: usize,
        family: String,
    },
    #[error("step {step} is not in the family's step set")]
    ForeignStep { step: StepVector },
}
