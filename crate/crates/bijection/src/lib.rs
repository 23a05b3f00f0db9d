//! The four explicit bijections between plain directed paths and
//! vertically constrained paths, together with the filters describing
//! their source sets.
//!
//! * [`phi`]/[`psi`]: plain (Grand) Motzkin paths of length 2n+1 or 2n
//!   versus constrained MotzkinW paths of horizontal length n. Restricting
//!   the plain side to a flat-parity filter restricts the constrained side
//!   to the DyckW family.
//! * [`gamma`]/[`lambda`]: plain Schröder/Delannoy paths of width 3n+2 or
//!   3n that are smooth at every third column versus constrained SchroderW
//!   paths of horizontal length n.
//!
//! All four maps preserve end height and region containment. `Second`
//! offsets produce (and require) restricted-leading constrained paths.

use vcpath_core::{LatticePath, StepVector};

pub use vcpath_core::{check_filter, StepFilter};

const FLAT: StepVector = StepVector::new(1, 0);
const UP: StepVector = StepVector::new(1, 1);
const DOWN: StepVector = StepVector::new(1, -1);
const RISE: StepVector = StepVector::new(0, 1);
const FALL: StepVector = StepVector::new(0, -1);
const WIDE: StepVector = StepVector::new(2, 0);
const RISE2: StepVector = StepVector::new(0, 2);
const FALL2: StepVector = StepVector::new(0, -2);

/// Alignment of the substitution positions.
///
/// `First` puts a substitution at the start of the path (step index 1, or
/// the window around column 1); `Second` starts one unit later. `Second`
/// images have no leading vertical step.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Offset {
    First,
    Second,
}

impl std::fmt::Display for Offset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Offset::First => "first",
            Offset::Second => "second",
        })
    }
}

#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum BijectionError {
    #[error("step {step} does not belong to the map's input family")]
    ForeignStep { step: StepVector },
    #[error("offset {offset} requires {expected} step count, got length {len}")]
    WrongParity {
        offset: Offset,
        expected: &'static str,
        len: usize,
    },
    #[error("offset {offset} requires horizontal width {expected}, got {width}")]
    WrongWidth {
        offset: Offset,
        expected: &'static str,
        width: i64,
    },
    #[error("path changes direction at required smooth column {column}")]
    NotSmooth { column: i64 },
    #[error("consecutive vertical steps at step index {index}")]
    ConsecutiveVerticals { index: usize },
    #[error("offset second forbids a leading vertical step")]
    LeadingVertical,
}

fn expect_family(
    path: &LatticePath,
    allowed: &[StepVector],
) -> Result<(), BijectionError> {
    match path.steps().iter().find(|s| !allowed.contains(s)) {
        Some(&step) => Err(BijectionError::ForeignStep { step }),
        None => Ok(()),
    }
}

/// Plain (Grand) Motzkin path to constrained MotzkinW path.
///
/// Steps at indices 1, 3, 5, … (`First`, odd length 2n+1) or 2, 4, 6, …
/// (`Second`, even length 2n) are substituted: `(1,1) → (0,1)`,
/// `(1,-1) → (0,-1)`, `(1,0)` is removed. The other steps are kept, so the
/// image has horizontal length n and the original end height.
pub fn phi(path: &LatticePath, offset: Offset) -> Result<LatticePath, BijectionError> {
    expect_family(path, &[FLAT, UP, DOWN])?;
    let len = path.len();
    let (substituted_parity, expected) = match offset {
        Offset::First => (1, "odd"),
        Offset::Second => (0, "even"),
    };
    if len % 2 != substituted_parity {
        return Err(BijectionError::WrongParity {
            offset,
            expected,
            len,
        });
    }
    let mut out = Vec::with_capacity(len);
    for (i, &s) in path.steps().iter().enumerate() {
        let index = i + 1;
        if index % 2 == substituted_parity {
            match s {
                UP => out.push(RISE),
                DOWN => out.push(FALL),
                _ => {} // flat at a substitution index: removed
            }
        } else {
            out.push(s);
        }
    }
    Ok(LatticePath::new(out))
}

/// Constrained MotzkinW path to plain (Grand) Motzkin path; inverse of
/// [`phi`].
///
/// The input decomposes into directed steps d1 … dn with at most one
/// vertical step in each gap (columns 0..n). Each vertical becomes its
/// diagonal counterpart and each empty gap becomes a flat step; `Second`
/// skips the gap at column 0 and therefore rejects paths starting with a
/// vertical step.
pub fn psi(path: &LatticePath, offset: Offset) -> Result<LatticePath, BijectionError> {
    expect_family(path, &[FLAT, UP, DOWN, RISE, FALL])?;
    let slots = slot_decomposition(path)?;
    rebuild(slots, offset, |v| match v {
        Some(RISE) => UP,
        Some(FALL) => DOWN,
        None => FLAT,
        _ => unreachable!("vertical slots hold unit vertical steps"),
    })
}

/// Plain smooth Schröder/Delannoy path to constrained SchroderW path.
///
/// The input must be smooth at every column `x ≡ 1 (mod 3)` (`First`,
/// width 3n+2) or `x ≡ 2 (mod 3)` (`Second`, width 3n). Around each such
/// column the path is rewritten: a step pair meeting there contracts
/// (`(1,1)(1,1) → (0,2)`, `(1,-1)(1,-1) → (0,-2)`, `(2,0)(2,0) → (2,0)`)
/// and a single `(2,0)` bisected by the column is removed. Everything else
/// is copied, leaving a path of horizontal length n.
pub fn gamma(path: &LatticePath, offset: Offset) -> Result<LatticePath, BijectionError> {
    expect_family(path, &[UP, DOWN, WIDE])?;
    let width = path.endpoint().0;
    let (residue, expected, width_mod) = match offset {
        Offset::First => (1, "3n+2", 2),
        Offset::Second => (2, "3n", 0),
    };
    if width % 3 != width_mod {
        return Err(BijectionError::WrongWidth {
            offset,
            expected,
            width,
        });
    }
    let smooth = |x: i64| x >= 1 && x < width && x % 3 == residue;
    let steps = path.steps();
    let mut out = Vec::new();
    let mut x = 0;
    let mut i = 0;
    while i < steps.len() {
        let s = steps[i];
        if s == WIDE && smooth(x + 1) {
            // the column bisects this flat step: remove it
            i += 1;
            x += 2;
        } else if smooth(x + s.dx) {
            if steps.get(i + 1) != Some(&s) {
                return Err(BijectionError::NotSmooth { column: x + s.dx });
            }
            out.push(match s {
                UP => RISE2,
                DOWN => FALL2,
                _ => WIDE,
            });
            i += 2;
            x += 2 * s.dx;
        } else {
            out.push(s);
            i += 1;
            x += s.dx;
        }
    }
    Ok(LatticePath::new(out))
}

/// Constrained SchroderW path to plain smooth Schröder/Delannoy path;
/// inverse of [`gamma`].
///
/// Each substitution window (columns 0..n for `First`, 1..n for `Second`)
/// holds at most one element of the input: a vertical step at that column,
/// or a `(2,0)` step centered there. Verticals expand to diagonal pairs,
/// centered flats double, and empty windows receive a single flat step;
/// diagonal steps are copied through unchanged.
pub fn lambda(path: &LatticePath, offset: Offset) -> Result<LatticePath, BijectionError> {
    expect_family(path, &[UP, DOWN, WIDE, RISE2, FALL2])?;
    check_verticals(path)?;
    let n = path.endpoint().0;

    // Items keyed by twice their center column, so diagonal steps (half-
    // integer centers) interleave exactly with window material (integer
    // centers). Keys are pairwise distinct: windows hold at most one
    // element, and copied steps occupy their own span.
    let mut items: Vec<(i64, Vec<StepVector>)> = Vec::new();
    let mut occupied = std::collections::BTreeSet::new();
    let mut x = 0;
    for &s in path.steps() {
        match s {
            RISE2 => {
                items.push((2 * x, vec![UP, UP]));
                occupied.insert(x);
            }
            FALL2 => {
                items.push((2 * x, vec![DOWN, DOWN]));
                occupied.insert(x);
            }
            WIDE => {
                items.push((2 * x + 2, vec![WIDE, WIDE]));
                occupied.insert(x + 1);
            }
            _ => items.push((2 * x + 1, vec![s])),
        }
        x += s.dx;
    }
    let first_slot = match offset {
        Offset::First => 0,
        Offset::Second => {
            if occupied.contains(&0) {
                return Err(BijectionError::LeadingVertical);
            }
            1
        }
    };
    for j in first_slot..=n {
        if !occupied.contains(&j) {
            items.push((2 * j, vec![WIDE]));
        }
    }
    items.sort_by_key(|(key, _)| *key);
    Ok(LatticePath::new(
        items.into_iter().flat_map(|(_, steps)| steps).collect(),
    ))
}

/// Gap decomposition of a MotzkinW path: the optional vertical step at each
/// column 0..n, plus the directed steps in order.
struct Slots {
    leading: Option<StepVector>,
    /// `(directed step, optional vertical after it)` in path order.
    body: Vec<(StepVector, Option<StepVector>)>,
}

fn slot_decomposition(path: &LatticePath) -> Result<Slots, BijectionError> {
    let mut leading = None;
    let mut body: Vec<(StepVector, Option<StepVector>)> = Vec::new();
    for (i, &s) in path.steps().iter().enumerate() {
        if s.is_vertical() {
            let slot = match body.last_mut() {
                None => &mut leading,
                Some((_, v)) => v,
            };
            if slot.is_some() {
                return Err(BijectionError::ConsecutiveVerticals { index: i + 1 });
            }
            *slot = Some(s);
        } else {
            body.push((s, None));
        }
    }
    Ok(Slots { leading, body })
}

fn rebuild(
    slots: Slots,
    offset: Offset,
    expand: impl Fn(Option<StepVector>) -> StepVector,
) -> Result<LatticePath, BijectionError> {
    let mut out = Vec::with_capacity(2 * slots.body.len() + 1);
    match offset {
        Offset::First => out.push(expand(slots.leading)),
        Offset::Second => {
            if slots.leading.is_some() {
                return Err(BijectionError::LeadingVertical);
            }
        }
    }
    for (d, v) in slots.body {
        out.push(d);
        out.push(expand(v));
    }
    Ok(LatticePath::new(out))
}

fn check_verticals(path: &LatticePath) -> Result<(), BijectionError> {
    let mut last_vertical = false;
    for (i, s) in path.steps().iter().enumerate() {
        if s.is_vertical() && last_vertical {
            return Err(BijectionError::ConsecutiveVerticals { index: i + 1 });
        }
        last_vertical = s.is_vertical();
    }
    Ok(())
}
