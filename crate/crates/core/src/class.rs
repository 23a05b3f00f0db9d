use std::fmt;

use crate::family::Family;

/// Region constraint: quarter-plane classes forbid any vertex with `y < 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Region {
    Half,
    Quarter,
}

/// Leading-step restriction: `Restricted` forbids a first step with `dx = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Leading {
    Free,
    Restricted,
}

/// One of the twelve enumeration problems: a step family together with a
/// region and a leading-step restriction.
///
/// Short ids follow the table naming: family letter `m`/`d`/`c`, prefix `g`
/// for half-plane ("grand") classes, suffix `r` for restricted leading.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PathClass {
    pub family: Family,
    pub region: Region,
    pub leading: Leading,
}

impl PathClass {
    pub const fn new(family: Family, region: Region, leading: Leading) -> Self {
        PathClass {
            family,
            region,
            leading,
        }
    }

    /// All twelve classes in id order (gmw, gmwr, mw, mwr, gdw, gdwr, dw,
    /// dwr, gcw, gcwr, cw, cwr).
    pub fn all() -> [PathClass; 12] {
        let mut out = [PathClass::new(Family::MotzkinW, Region::Half, Leading::Free); 12];
        let mut i = 0;
        for family in [Family::MotzkinW, Family::DyckW, Family::SchroderW] {
            for region in [Region::Half, Region::Quarter] {
                for leading in [Leading::Free, Leading::Restricted] {
                    out[i] = PathClass::new(family, region, leading);
                    i += 1;
                }
            }
        }
        out
    }

    pub fn id(self) -> &'static str {
        match (self.family, self.region, self.leading) {
            (Family::MotzkinW, Region::Half, Leading::Free) => "gmw",
            (Family::MotzkinW, Region::Half, Leading::Restricted) => "gmwr",
            (Family::MotzkinW, Region::Quarter, Leading::Free) => "mw",
            (Family::MotzkinW, Region::Quarter, Leading::Restricted) => "mwr",
            (Family::DyckW, Region::Half, Leading::Free) => "gdw",
            (Family::DyckW, Region::Half, Leading::Restricted) => "gdwr",
            (Family::DyckW, Region::Quarter, Leading::Free) => "dw",
            (Family::DyckW, Region::Quarter, Leading::Restricted) => "dwr",
            (Family::SchroderW, Region::Half, Leading::Free) => "gcw",
            (Family::SchroderW, Region::Half, Leading::Restricted) => "gcwr",
            (Family::SchroderW, Region::Quarter, Leading::Free) => "cw",
            (Family::SchroderW, Region::Quarter, Leading::Restricted) => "cwr",
        }
    }

    pub fn from_id(id: &str) -> Option<PathClass> {
        PathClass::all().into_iter().find(|c| c.id() == id)
    }

    /// Largest reachable `|m|` for paths of horizontal length `n`: diagonal
    /// steps contribute 1 each and every vertical slot (one per column,
    /// minus the leading one for restricted classes) contributes the
    /// family's vertical rise.
    pub fn max_height(self, n: i64) -> i64 {
        let slots = match self.leading {
            Leading::Free => n + 1,
            Leading::Restricted => n,
        };
        match self.family {
            Family::MotzkinW | Family::DyckW => n + slots,
            Family::SchroderW => n + 2 * slots,
        }
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}
