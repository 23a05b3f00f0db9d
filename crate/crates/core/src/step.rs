use std::fmt;

/// An integer displacement `(dx, dy)` with `dx >= 0`; the atom of a walk.
///
/// A step with `dx = 0` is called vertical. The null step `(0, 0)` is not a
/// valid step vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StepVector {
    pub dx: i64,
    pub dy: i64,
}

impl StepVector {
    pub const fn new(dx: i64, dy: i64) -> Self {
        StepVector { dx, dy }
    }

    /// True for steps with `dx = 0`.
    pub const fn is_vertical(self) -> bool {
        self.dx == 0
    }

    /// One character per step, shared across all families: the vectors used
    /// by the different step sets are pairwise distinct, so the map is total
    /// on known vectors and unambiguous.
    pub fn to_char(self) -> Option<char> {
        match (self.dx, self.dy) {
            (1, 0) => Some('F'),
            (1, 1) => Some('U'),
            (1, -1) => Some('D'),
            (0, 1) | (0, 2) => Some('u'),
            (0, -1) | (0, -2) => Some('d'),
            (2, 0) => Some('H'),
            _ => None,
        }
    }
}

impl fmt::Display for StepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

/// Flat step `(1, 0)`.
pub(crate) const FLAT: StepVector = StepVector::new(1, 0);
/// Diagonal up step `(1, 1)`.
pub(crate) const UP: StepVector = StepVector::new(1, 1);
/// Diagonal down step `(1, -1)`.
pub(crate) const DOWN: StepVector = StepVector::new(1, -1);
/// Unit vertical rise `(0, 1)`.
pub(crate) const RISE: StepVector = StepVector::new(0, 1);
/// Unit vertical fall `(0, -1)`.
pub(crate) const FALL: StepVector = StepVector::new(0, -1);
/// Double-width flat step `(2, 0)` of the Schröder family.
pub(crate) const WIDE: StepVector = StepVector::new(2, 0);
/// Double vertical rise `(0, 2)` of the Schröder family.
pub(crate) const RISE2: StepVector = StepVector::new(0, 2);
/// Double vertical fall `(0, -2)` of the Schröder family.
pub(crate) const FALL2: StepVector = StepVector::new(0, -2);
