use std::fmt::Write as _;

use num_bigint::BigInt;

use vcpath_bijection::{gamma, lambda, phi, psi, Offset};
use vcpath_core::{
    format_path, parse_path, AnyFamily, Family, LatticePath, PathClass, PlainFamily, StepFilter,
};
use vcpath_dp::sequence;
use vcpath_oeis::{compare, FetchConfig, SequenceRef, Transform};
use vcpath_oracle::{enumerate, EnumerationQuery, Target};

use crate::gf::{GfArtifact, GfFormat};
use crate::table::{TableArtifact, TableFormat};
use crate::CliError;

/// Copies of the inputs a command needs, decoupled from the argument
/// parser so integration tests can call commands directly.
pub struct CountOpts {
    pub class: String,
    pub n: i64,
    pub m: Option<i64>,
    pub format: TableFormat,
}

pub fn cmd_count(opts: &CountOpts) -> Result<String, CliError> {
    let class = parse_class(&opts.class)?;
    require_nonnegative("--n", opts.n)?;
    if let Some(m) = opts.m {
        let table = vcpath_dp::count_table(class, opts.n);
        let v = table.get(opts.n, m).clone();
        return Ok(match opts.format {
            TableFormat::Json => format!(
                "{{\"class\":\"{}\",\"n\":{},\"m\":{},\"count\":\"{}\"}}\n",
                class.id(),
                opts.n,
                m,
                v
            ),
            _ => format!("{v}\n"),
        });
    }
    Ok(TableArtifact::full(class, opts.n).render(opts.format))
}

pub struct TablesOpts {
    pub class: String,
    pub n: i64,
    pub format: TableFormat,
}

pub fn cmd_tables(opts: &TablesOpts) -> Result<String, CliError> {
    let class = parse_class(&opts.class)?;
    require_nonnegative("--n", opts.n)?;
    Ok(TableArtifact::appendix(class, opts.n).render(opts.format))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumerateFormat {
    Lines,
    Json,
}

impl EnumerateFormat {
    pub fn from_name(name: &str) -> Option<EnumerateFormat> {
        match name {
            "lines" => Some(EnumerateFormat::Lines),
            "json" => Some(EnumerateFormat::Json),
            _ => None,
        }
    }
}

pub struct EnumerateOpts {
    pub class: String,
    pub n: i64,
    pub end_height: Option<i64>,
    pub filter: Option<String>,
    pub format: EnumerateFormat,
    pub limit: Option<i64>,
}

pub fn cmd_enumerate(opts: &EnumerateOpts) -> Result<String, CliError> {
    let mut query = match parse_target(&opts.class)? {
        Target::Constrained(class) => EnumerationQuery::constrained(class, opts.n),
        Target::Plain(family) => EnumerationQuery::plain(family, opts.n),
    };
    if let Some(m) = opts.end_height {
        query = query.end_height(m);
    }
    if let Some(name) = &opts.filter {
        let filter = StepFilter::from_name(name)
            .ok_or_else(|| CliError::Usage(format!("unknown filter {name:?}")))?;
        query = query.filter(filter);
    }
    if let Some(limit) = opts.limit {
        query = query.limit(limit);
    }
    let paths = enumerate(&query).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut words = Vec::with_capacity(paths.len());
    for p in &paths {
        words.push(format_path(p).map_err(|e| CliError::Check(e.to_string()))?);
    }
    match opts.format {
        EnumerateFormat::Lines => {
            let mut out = String::new();
            for w in &words {
                out.push_str(w);
                out.push('\n');
            }
            Ok(out)
        }
        EnumerateFormat::Json => {
            let doc = serde_json::json!({
                "class": opts.class,
                "n": opts.n,
                "count": words.len(),
                "paths": words,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc).unwrap()))
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Phi,
    Psi,
    Gamma,
    Lambda,
}

impl Direction {
    pub fn from_name(name: &str) -> Option<Direction> {
        match name {
            "phi" => Some(Direction::Phi),
            "psi" => Some(Direction::Psi),
            "gamma" => Some(Direction::Gamma),
            "lambda" => Some(Direction::Lambda),
            _ => None,
        }
    }

    /// Family the input word is read in: the half-plane superset, so both
    /// the free and restricted sources parse.
    fn input_family(self) -> AnyFamily {
        match self {
            Direction::Phi => AnyFamily::Plain(PlainFamily::GrandMotzkin),
            Direction::Psi => AnyFamily::Constrained(Family::MotzkinW),
            Direction::Gamma => AnyFamily::Plain(PlainFamily::Delannoy),
            Direction::Lambda => AnyFamily::Constrained(Family::SchroderW),
        }
    }

    fn apply(self, path: &LatticePath, offset: Offset) -> Result<LatticePath, CliError> {
        let mapped = match self {
            Direction::Phi => phi(path, offset),
            Direction::Psi => psi(path, offset),
            Direction::Gamma => gamma(path, offset),
            Direction::Lambda => lambda(path, offset),
        };
        mapped.map_err(|e| CliError::Check(e.to_string()))
    }
}

pub struct MapOpts {
    pub direction: Direction,
    pub offset: Offset,
    pub input: String,
}

pub fn cmd_map(opts: &MapOpts) -> Result<String, CliError> {
    let path = parse_path(&opts.input, opts.direction.input_family())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let image = opts.direction.apply(&path, opts.offset)?;
    let word = format_path(&image).map_err(|e| CliError::Check(e.to_string()))?;
    let (x0, y0) = path.endpoint();
    let (x1, y1) = image.endpoint();
    let mut out = String::new();
    writeln!(out, "{word}").unwrap();
    writeln!(out, "input endpoint: ({x0}, {y0})").unwrap();
    writeln!(out, "image endpoint: ({x1}, {y1})").unwrap();
    Ok(out)
}

pub struct GfOpts {
    pub name: String,
    pub order: i64,
    pub format: GfFormat,
}

pub fn cmd_gf(opts: &GfOpts) -> Result<String, CliError> {
    let artifact = GfArtifact::expand(&opts.name, opts.order)?;
    Ok(artifact.render(opts.format))
}

pub struct OeisOpts {
    pub a_number: String,
    pub class: String,
    pub transform: String,
    pub offline: bool,
}

/// Terms computed for an OEIS comparison; enough that the matched prefix is
/// capped by the reference, not by us.
const OEIS_COMPUTED_TERMS: i64 = 40;

pub fn cmd_oeis(opts: &OeisOpts) -> Result<String, CliError> {
    let class = parse_class(&opts.class)?;
    let transform = Transform::from_name(&opts.transform)
        .ok_or_else(|| CliError::Usage(format!("unknown transform {:?}", opts.transform)))?;
    let reference = SequenceRef::new(&opts.a_number, transform)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let computed: Vec<BigInt> = sequence(class, 0, OEIS_COMPUTED_TERMS)
        .iter()
        .map(|v| BigInt::from(v.clone()))
        .collect();
    let config = if opts.offline {
        FetchConfig::offline()
    } else {
        FetchConfig::from_env()
    };
    let report = compare(&computed, &reference, &config)
        .map_err(|e| CliError::Check(e.to_string()))?;
    let line = format!("{report}\n");
    if report.is_match(1) {
        Ok(line)
    } else {
        Err(CliError::Check(line))
    }
}

pub fn parse_class(id: &str) -> Result<PathClass, CliError> {
    PathClass::from_id(id).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown class {id:?}; expected one of gmw gmwr mw mwr gdw gdwr dw dwr gcw gcwr cw cwr"
        ))
    })
}

/// Enumeration targets take the twelve class ids plus the plain families.
pub fn parse_target(id: &str) -> Result<Target, CliError> {
    if let Some(class) = PathClass::from_id(id) {
        return Ok(Target::Constrained(class));
    }
    let family = match id {
        "motzkin" => PlainFamily::Motzkin,
        "grandmotzkin" => PlainFamily::GrandMotzkin,
        "schroder" => PlainFamily::Schroder,
        "delannoy" => PlainFamily::Delannoy,
        _ => {
            return Err(CliError::Usage(format!(
                "unknown enumeration target {id:?}; expected a class id or one of motzkin grandmotzkin schroder delannoy"
            )))
        }
    };
    Ok(Target::Plain(family))
}

fn require_nonnegative(flag: &str, v: i64) -> Result<(), CliError> {
    if v < 0 {
        Err(CliError::Usage(format!("{flag} must be nonnegative, got {v}")))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_at_a_height_prints_one_number() {
        let out = cmd_count(&CountOpts {
            class: "mwr".to_string(),
            n: 2,
            m: Some(1),
            format: TableFormat::Csv,
        })
        .unwrap();
        assert_eq!(out, "12\n");
    }

    #[test]
    fn enumerate_lists_paths_in_word_order() {
        let out = cmd_enumerate(&EnumerateOpts {
            class: "mwr".to_string(),
            n: 1,
            end_height: None,
            filter: None,
            format: EnumerateFormat::Lines,
            limit: None,
        })
        .unwrap();
        let words: Vec<&str> = out.lines().collect();
        assert_eq!(words.len(), 5);
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn unknown_names_are_usage_errors() {
        assert!(matches!(parse_class("zz"), Err(CliError::Usage(_))));
        assert!(matches!(parse_target("zz"), Err(CliError::Usage(_))));
        let bad = cmd_gf(&GfOpts {
            name: "nope".to_string(),
            order: 3,
            format: GfFormat::Plain,
        });
        assert!(matches!(bad, Err(CliError::Usage(_))));
    }
}
