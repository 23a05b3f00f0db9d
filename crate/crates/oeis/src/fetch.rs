use std::env;
use std::fs;
use std::path::PathBuf;

use num_bigint::BigInt;

use crate::{bundled, is_valid_a_number, OeisError, Source};

/// Where to look for b-files. With networking disabled (the default), only
/// the cache directory and the bundled snapshots are consulted.
#[derive(Clone, Debug)]
pub struct FetchConfig {
    pub cache_dir: Option<PathBuf>,
    pub allow_network: bool,
}

impl FetchConfig {
    /// Reads `OEIS_CACHE_DIR` and `OEIS_ONLINE` (network iff set to "1").
    pub fn from_env() -> FetchConfig {
        FetchConfig {
            cache_dir: env::var_os("OEIS_CACHE_DIR").map(PathBuf::from),
            allow_network: env::var("OEIS_ONLINE").map(|v| v == "1").unwrap_or(false),
        }
    }

    pub fn offline() -> FetchConfig {
        FetchConfig {
            cache_dir: None,
            allow_network: false,
        }
    }
}

/// A fetched b-file: (index, value) pairs in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fetched {
    pub a_number: String,
    pub terms: Vec<(i64, BigInt)>,
    pub source: Source,
}

impl Fetched {
    pub fn values(&self) -> Vec<BigInt> {
        self.terms.iter().map(|(_, v)| v.clone()).collect()
    }
}

/// Parses the standard b-file format: one "index value" pair per line,
/// blank lines and '#' comments ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, OeisError> {
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || OeisError::MalformedLine {
            line: i + 1,
            text: raw.to_string(),
        };
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed());
        };
        let index: i64 = idx.parse().map_err(|_| malformed())?;
        let value: BigInt = val.parse().map_err(|_| malformed())?;
        terms.push((index, value));
    }
    if terms.is_empty() {
        return Err(OeisError::NoTerms);
    }
    Ok(terms)
}

fn bfile_name(a_number: &str) -> String {
    format!("b{}.txt", &a_number[1..])
}

fn fetch_network(a_number: &str) -> Result<String, OeisError> {
    let url = format!("https://oeis.org/{a_number}/{}", bfile_name(a_number));
    let network_err = |message: String| OeisError::Network {
        a_number: a_number.to_string(),
        message,
    };
    ureq::get(&url)
        .call()
        .map_err(|e| network_err(e.to_string()))?
        .into_string()
        .map_err(|e| network_err(e.to_string()))
}

fn write_cache_atomic(dir: &PathBuf, file_name: &str, text: &str) -> Result<(), OeisError> {
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!("{file_name}.tmp{}", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, dir.join(file_name))?;
    Ok(())
}

/// Fetches a b-file. Offline the order is cache, then bundled snapshot;
/// with networking enabled a fresh copy is fetched first (and cached),
/// falling back to local copies if the fetch fails.
pub fn fetch_bfile(a_number: &str, config: &FetchConfig) -> Result<Fetched, OeisError> {
    if !is_valid_a_number(a_number) {
        return Err(OeisError::InvalidANumber(a_number.to_string()));
    }
    let file_name = bfile_name(a_number);
    let mut network_error = None;
    if config.allow_network {
        match fetch_network(a_number) {
            Ok(text) => {
                let terms = parse_bfile(&text)?;
                if let Some(dir) = &config.cache_dir {
                    write_cache_atomic(dir, &file_name, &text)?;
                }
                return Ok(Fetched {
                    a_number: a_number.to_string(),
                    terms,
                    source: Source::Network,
                });
            }
            Err(e) => network_error = Some(e),
        }
    }
    if let Some(dir) = &config.cache_dir {
        let path = dir.join(&file_name);
        if path.exists() {
            let terms = parse_bfile(&fs::read_to_string(&path)?)?;
            return Ok(Fetched {
                a_number: a_number.to_string(),
                terms,
                source: Source::Cache,
            });
        }
    }
    if let Some(text) = bundled::bundled(a_number) {
        return Ok(Fetched {
            a_number: a_number.to_string(),
            terms: parse_bfile(text)?,
            source: Source::Bundled,
        });
    }
    Err(network_error.unwrap_or(OeisError::Unavailable {
        a_number: a_number.to_string(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_indices_and_values() {
        let text = "# heading\n\n0 1\n1 1\n2 2\n10 -37\n";
        let terms = parse_bfile(text).unwrap();
        assert_eq!(terms.len(), 4);
        assert_eq!(terms[3], (10, BigInt::from(-37)));
    }

    #[test]
    fn malformed_lines_name_their_line_number() {
        let err = parse_bfile("0 1\nabc\n").unwrap_err();
        assert!(matches!(err, OeisError::MalformedLine { line: 2, .. }));
        let err = parse_bfile("0 1 extra\n").unwrap_err();
        assert!(matches!(err, OeisError::MalformedLine { line: 1, .. }));
    }

    #[test]
    fn comment_only_files_have_no_terms() {
        assert!(matches!(parse_bfile("# nothing\n"), Err(OeisError::NoTerms)));
    }
}
