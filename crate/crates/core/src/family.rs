use std::fmt;

use crate::class::Region;
use crate::step::{self, StepVector};

/// A vertically constrained step family: the full step set plus its directed
/// subset (steps with `dx > 0`, the only ones allowed as a restricted
/// leading step).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// `{(1,0), (1,1), (1,-1), (0,1), (0,-1)}`
    MotzkinW,
    /// `{(1,1), (1,-1), (0,1), (0,-1)}`
    DyckW,
    /// `{(1,1), (1,-1), (2,0), (0,2), (0,-2)}`
    SchroderW,
}

impl Family {
    pub fn steps(self) -> &'static [StepVector] {
        match self {
            Family::MotzkinW => &[step::FLAT, step::UP, step::DOWN, step::RISE, step::FALL],
            Family::DyckW => &[step::UP, step::DOWN, step::RISE, step::FALL],
            Family::SchroderW => &[step::UP, step::DOWN, step::WIDE, step::RISE2, step::FALL2],
        }
    }

    /// The steps with `dx > 0`.
    pub fn directed_steps(self) -> &'static [StepVector] {
        match self {
            Family::MotzkinW => &[step::FLAT, step::UP, step::DOWN],
            Family::DyckW => &[step::UP, step::DOWN],
            Family::SchroderW => &[step::UP, step::DOWN, step::WIDE],
        }
    }

    pub fn contains(self, s: StepVector) -> bool {
        self.steps().contains(&s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::MotzkinW => "MotzkinW",
            Family::DyckW => "DyckW",
            Family::SchroderW => "SchroderW",
        };
        f.write_str(name)
    }
}

/// A fully directed (no vertical steps) path family; sources and targets of
/// the bijections live here.
///
/// Motzkin and Schröder are quarter-plane families; Grand Motzkin and
/// Delannoy are their half-plane counterparts on the same step sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PlainFamily {
    /// `{(1,0), (1,1), (1,-1)}`, quarter plane.
    Motzkin,
    /// `{(1,0), (1,1), (1,-1)}`, half plane.
    GrandMotzkin,
    /// `{(1,1), (1,-1), (2,0)}`, quarter plane.
    Schroder,
    /// `{(1,1), (1,-1), (2,0)}`, half plane.
    Delannoy,
}

impl PlainFamily {
    pub fn steps(self) -> &'static [StepVector] {
        match self {
            PlainFamily::Motzkin | PlainFamily::GrandMotzkin => {
                &[step::FLAT, step::UP, step::DOWN]
            }
            PlainFamily::Schroder | PlainFamily::Delannoy => {
                &[step::UP, step::DOWN, step::WIDE]
            }
        }
    }

    pub fn region(self) -> Region {
        match self {
            PlainFamily::Motzkin | PlainFamily::Schroder => Region::Quarter,
            PlainFamily::GrandMotzkin | PlainFamily::Delannoy => Region::Half,
        }
    }

    pub fn contains(self, s: StepVector) -> bool {
        self.steps().contains(&s)
    }
}

impl fmt::Display for PlainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            PlainFamily::Motzkin => "Motzkin",
            PlainFamily::GrandMotzkin => "GrandMotzkin",
            PlainFamily::Schroder => "Schroder",
            PlainFamily::Delannoy => "Delannoy",
        };
        f.write_str(name)
    }
}

/// Either kind of family; used where an operation accepts both (parsing,
/// enumeration queries).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AnyFamily {
    Constrained(Family),
    Plain(PlainFamily),
}

impl AnyFamily {
    pub fn steps(self) -> &'static [StepVector] {
        match self {
            AnyFamily::Constrained(f) => f.steps(),
            AnyFamily::Plain(f) => f.steps(),
        }
    }

    pub fn contains(self, s: StepVector) -> bool {
        self.steps().contains(&s)
    }
}

impl From<Family> for AnyFamily {
    fn from(f: Family) -> Self {
        AnyFamily::Constrained(f)
    }
}

impl From<PlainFamily> for AnyFamily {
    fn from(f: PlainFamily) -> Self {
        AnyFamily::Plain(f)
    }
}

impl fmt::Display for AnyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyFamily::Constrained(fam) => fam.fmt(f),
            AnyFamily::Plain(fam) => fam.fmt(f),
        }
    }
}
