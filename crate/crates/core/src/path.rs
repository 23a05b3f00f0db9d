use crate::class::{Leading, PathClass, Region};
use crate::error::CoreError;
use crate::family::{AnyFamily, Family, PlainFamily};
use crate::step::StepVector;

/// An ordered step sequence with origin fixed at `(0, 0)`.
///
/// The struct does not enforce class validity; see [`validate`]. Length is
/// indexed by horizontal displacement `n`, not by step count, so trailing
/// vertical steps belong to length-`n` paths.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LatticePath {
    steps: Vec<StepVector>,
}

impl LatticePath {
    pub fn new(steps: Vec<StepVector>) -> Self {
        LatticePath { steps }
    }

    pub fn empty() -> Self {
        LatticePath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[StepVector] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Componentwise sum of the steps: the endpoint `(n, m)`.
    pub fn endpoint(&self) -> (i64, i64) {
        let mut x = 0;
        let mut y = 0;
        for s in &self.steps {
            x += s.dx;
            y += s.dy;
        }
        (x, y)
    }

    /// Prefix sums of the steps from `(0, 0)`, including the origin.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0, 0);
        out.push((x, y));
        for s in &self.steps {
            x += s.dx;
            y += s.dy;
            out.push((x, y));
        }
        out
    }
}

impl From<Vec<StepVector>> for LatticePath {
    fn from(steps: Vec<StepVector>) -> Self {
        LatticePath::new(steps)
    }
}

/// Checks a path against a class: steps must come from the class family
/// (a foreign step is an error, not a `false`), and the result is true iff
/// no two consecutive steps are vertical, the region constraint holds at
/// every vertex, and the leading-step restriction holds.
pub fn validate(path: &LatticePath, class: PathClass) -> Result<bool, CoreError> {
    for &s in path.steps() {
        if !class.family.contains(s) {
            return Err(CoreError::ForeignStep { step: s });
        }
    }
    if let (Leading::Restricted, Some(first)) = (class.leading, path.steps().first()) {
        if first.is_vertical() {
            return Ok(false);
        }
    }
    let mut prev_vertical = false;
    let mut y = 0;
    for &s in path.steps() {
        if s.is_vertical() && prev_vertical {
            return Ok(false);
        }
        prev_vertical = s.is_vertical();
        y += s.dy;
        if class.region == Region::Quarter && y < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The two path-string alphabets. Case-sensitive, one character per step,
/// no separators.
fn char_to_step(ch: char, schroder: bool) -> Option<StepVector> {
    if schroder {
        match ch {
            'U' => Some(StepVector::new(1, 1)),
            'D' => Some(StepVector::new(1, -1)),
            'H' => Some(StepVector::new(2, 0)),
            'u' => Some(StepVector::new(0, 2)),
            'd' => Some(StepVector::new(0, -2)),
            _ => None,
        }
    } else {
        match ch {
            'F' => Some(StepVector::new(1, 0)),
            'U' => Some(StepVector::new(1, 1)),
            'D' => Some(StepVector::new(1, -1)),
            'u' => Some(StepVector::new(0, 1)),
            'd' => Some(StepVector::new(0, -1)),
            _ => None,
        }
    }
}

fn is_known_char(ch: char) -> bool {
    matches!(ch, 'F' | 'U' | 'D' | 'H' | 'u' | 'd')
}

/// Parses a path string over the family's alphabet. Characters outside the
/// two alphabets are unknown; characters that name a step the family does
/// not have are rejected with a distinct error.
pub fn parse_path(text: &str, family: impl Into<AnyFamily>) -> Result<LatticePath, CoreError> {
    let family = family.into();
    let schroder = matches!(
        family,
        AnyFamily::Constrained(Family::SchroderW)
            | AnyFamily::Plain(PlainFamily::Schroder)
            | AnyFamily::Plain(PlainFamily::Delannoy)
    );
    let mut steps = Vec::with_capacity(text.len());
    for (pos, ch) in text.chars().enumerate() {
        let step = match char_to_step(ch, schroder) {
            Some(s) => s,
            None if is_known_char(ch) => {
                return Err(CoreError::CharNotInFamily {
                    ch,
                    pos,
                    family: family.to_string(),
                })
            }
            None => return Err(CoreError::UnknownChar { ch, pos }),
        };
        if !family.contains(step) {
            return Err(CoreError::CharNotInFamily {
                ch,
                pos,
                family: family.to_string(),
            });
        }
        steps.push(step);
    }
    Ok(LatticePath::new(steps))
}

/// Renders a path back to its string form; inverse of [`parse_path`] on
/// valid paths. The step-to-character map is family-independent because the
/// step vectors of the different families are pairwise distinct.
pub fn format_path(path: &LatticePath) -> Result<String, CoreError> {
    path.steps()
        .iter()
        .map(|&s| s.to_char().ok_or(CoreError::ForeignStep { step: s }))
        .collect()
}
