use crate::path::LatticePath;

/// Position-based predicates on plain paths: the source-set filters of the
/// bijections.
///
/// The flat filters speak about 1-based step indices of Motzkin-type paths;
/// the smooth filter speaks about integer columns of Schröder/Delannoy-type
/// paths (modulus fixed at 3).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum StepFilter {
    /// No `(1, 0)` step at an odd index.
    NoFlatAtOdd,
    /// No `(1, 0)` step at an even index.
    NoFlatAtEven,
    /// The path does not change direction at any interior column
    /// `x ≡ residue (mod 3)`: the steps meeting there are identical, or the
    /// column bisects a `(2, 0)` step. `residue` is 1 or 2.
    SmoothAtColumns { residue: u8 },
}

impl StepFilter {
    pub fn from_name(name: &str) -> Option<StepFilter> {
        match name {
            "no-flat-at-odd" => Some(StepFilter::NoFlatAtOdd),
            "no-flat-at-even" => Some(StepFilter::NoFlatAtEven),
            "smooth-1" => Some(StepFilter::SmoothAtColumns { residue: 1 }),
            "smooth-2" => Some(StepFilter::SmoothAtColumns { residue: 2 }),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StepFilter::NoFlatAtOdd => "no-flat-at-odd",
            StepFilter::NoFlatAtEven => "no-flat-at-even",
            StepFilter::SmoothAtColumns { residue: 1 } => "smooth-1",
            StepFilter::SmoothAtColumns { .. } => "smooth-2",
        }
    }
}

/// True iff the filter's condition holds at every required index/column.
pub fn check_filter(path: &LatticePath, filter: StepFilter) -> bool {
    match filter {
        StepFilter::NoFlatAtOdd => no_flat_at_parity(path, 1),
        StepFilter::NoFlatAtEven => no_flat_at_parity(path, 0),
        StepFilter::SmoothAtColumns { residue } => smooth_at_columns(path, i64::from(residue)),
    }
}

fn no_flat_at_parity(path: &LatticePath, parity: usize) -> bool {
    path.steps()
        .iter()
        .enumerate()
        .all(|(i, s)| (i + 1) % 2 != parity || *s != crate::step::FLAT)
}

fn smooth_at_columns(path: &LatticePath, residue: i64) -> bool {
    let width = path.endpoint().0;
    let required = |x: i64| x >= 1 && x < width && x.rem_euclid(3) == residue;
    let steps = path.steps();
    let mut x = 0;
    for (i, &s) in steps.iter().enumerate() {
        if required(x) {
            // A vertical step at a smooth column is a direction change, and
            // so is a departure differing from the arrival. Columns strictly
            // inside a (2, 0) step are never step boundaries, hence smooth.
            if s.is_vertical() || i == 0 || steps[i - 1] != s {
                return false;
            }
        }
        x += s.dx;
    }
    true
}
