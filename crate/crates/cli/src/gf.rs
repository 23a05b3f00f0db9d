use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use vcpath_series::{expand_named_gf, GfExpansion};

use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GfFormat {
    Plain,
    Json,
}

impl GfFormat {
    pub fn from_name(name: &str) -> Option<GfFormat> {
        match name {
            "plain" => Some(GfFormat::Plain),
            "json" => Some(GfFormat::Json),
            _ => None,
        }
    }
}

/// A named generating function expanded to a fixed order, flattened to
/// integer-exponent terms for rendering and interchange.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GfArtifact {
    Univariate {
        name: String,
        order: i64,
        coefficients: Vec<BigRational>,
    },
    Bivariate {
        name: String,
        order: i64,
        terms: Vec<(i64, i64, BigRational)>,
    },
}

impl GfArtifact {
    pub fn expand(name: &str, order: i64) -> Result<GfArtifact, CliError> {
        if order < 0 {
            return Err(CliError::Usage(format!("order must be nonnegative, got {order}")));
        }
        let expansion = expand_named_gf(name, order)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        GfArtifact::from_expansion(name, order, &expansion)
    }

    pub fn from_expansion(
        name: &str,
        order: i64,
        expansion: &GfExpansion,
    ) -> Result<GfArtifact, CliError> {
        match expansion {
            GfExpansion::Univariate(u) => {
                let coefficients = u
                    .x_coeffs()
                    .map_err(|e| CliError::Check(format!("gf {name}: {e}")))?;
                Ok(GfArtifact::Univariate {
                    name: name.to_string(),
                    order,
                    coefficients,
                })
            }
            GfExpansion::Bivariate(b) => {
                let ram = b.ram() as i64;
                let mut terms = Vec::new();
                for (e, row) in b.terms() {
                    if e.rem_euclid(ram) != 0 || e < 0 {
                        return Err(CliError::Check(format!(
                            "gf {name}: fractional power {e}/{ram} survived expansion"
                        )));
                    }
                    let n = e / ram;
                    for (m, c) in row.terms() {
                        if !c.is_zero() {
                            terms.push((n, m, c.clone()));
                        }
                    }
                }
                Ok(GfArtifact::Bivariate {
                    name: name.to_string(),
                    order,
                    terms,
                })
            }
        }
    }

    pub fn name(&self) -> &str {
        match self {
            GfArtifact::Univariate { name, .. } | GfArtifact::Bivariate { name, .. } => name,
        }
    }

    pub fn render(&self, format: GfFormat) -> String {
        match format {
            GfFormat::Plain => self.to_plain(),
            GfFormat::Json => self.to_json(),
        }
    }

    /// One term per line: `n value` for univariate, `n m value` for
    /// bivariate, exponents ascending.
    pub fn to_plain(&self) -> String {
        let mut out = String::new();
        match self {
            GfArtifact::Univariate { coefficients, .. } => {
                for (n, c) in coefficients.iter().enumerate() {
                    out.push_str(&format!("{n} {}\n", rational_string(c)));
                }
            }
            GfArtifact::Bivariate { terms, .. } => {
                for (n, m, c) in terms {
                    out.push_str(&format!("{n} {m} {}\n", rational_string(c)));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = match self {
            GfArtifact::Univariate {
                name,
                order,
                coefficients,
            } => GfJson {
                name: name.clone(),
                kind: "univariate".to_string(),
                order: *order,
                coefficients: Some(coefficients.iter().map(rational_string).collect()),
                terms: None,
            },
            GfArtifact::Bivariate { name, order, terms } => GfJson {
                name: name.clone(),
                kind: "bivariate".to_string(),
                order: *order,
                coefficients: None,
                terms: Some(
                    terms
                        .iter()
                        .map(|(n, m, c)| GfTermJson {
                            n: *n,
                            m: *m,
                            value: rational_string(c),
                        })
                        .collect(),
                ),
            },
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("gf serialization");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<GfArtifact, CliError> {
        let doc: GfJson = serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("invalid gf json: {e}")))?;
        match (doc.kind.as_str(), doc.coefficients, doc.terms) {
            ("univariate", Some(coeffs), None) => Ok(GfArtifact::Univariate {
                name: doc.name,
                order: doc.order,
                coefficients: coeffs
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<_, _>>()?,
            }),
            ("bivariate", None, Some(terms)) => Ok(GfArtifact::Bivariate {
                name: doc.name,
                order: doc.order,
                terms: terms
                    .iter()
                    .map(|t| Ok((t.n, t.m, parse_rational(&t.value)?)))
                    .collect::<Result<_, CliError>>()?,
            }),
            (kind, _, _) => Err(CliError::Usage(format!(
                "gf json kind {kind:?} does not match its fields"
            ))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GfJson {
    name: String,
    kind: String,
    order: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<Vec<GfTermJson>>,
}

#[derive(Serialize, Deserialize)]
struct GfTermJson {
    n: i64,
    m: i64,
    value: String,
}

pub fn rational_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Usage(format!("invalid rational {text:?}"));
    match text.split_once('/') {
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(n))
        }
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings_round_trip() {
        for text in ["0", "-7", "3/2", "-11/4"] {
            let r = parse_rational(text).unwrap();
            assert_eq!(rational_string(&r), text);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn univariate_artifacts_round_trip_through_json() {
        let a = GfArtifact::expand("aHR0", 5).unwrap();
        let GfArtifact::Univariate { coefficients, .. } = &a else {
            panic!("ground series should be univariate");
        };
        assert_eq!(
            coefficients.iter().map(rational_string).collect::<Vec<_>>(),
            ["1", "3", "19", "141", "1107"]
        );
        let back = GfArtifact::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn bivariate_artifacts_round_trip_through_json() {
        let a = GfArtifact::expand("aHR", 4).unwrap();
        let GfArtifact::Bivariate { terms, .. } = &a else {
            panic!("two-variable series expected");
        };
        assert!(terms.contains(&(1, 1, BigRational::from_integer(2.into()))));
        let back = GfArtifact::from_json(&a.to_json()).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.to_json(), a.to_json());
    }

    #[test]
    fn plain_rendering_is_line_per_term() {
        let a = GfArtifact::expand("aQR0", 3).unwrap();
        assert_eq!(a.to_plain(), "0 1\n1 2\n2 9\n");
    }
}
