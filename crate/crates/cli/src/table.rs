use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use vcpath_core::{PathClass, Region};
use vcpath_dp::count_table;

use crate::CliError;

/// Widest column the table layouts print; true support beyond this is cut
/// off, matching the source tables' page width.
pub const DISPLAY_COLUMN_CUT: i64 = 17;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableFormat {
    Csv,
    Json,
    Markdown,
}

impl TableFormat {
    pub fn from_name(name: &str) -> Option<TableFormat> {
        match name {
            "csv" => Some(TableFormat::Csv),
            "json" => Some(TableFormat::Json),
            "markdown" => Some(TableFormat::Markdown),
            _ => None,
        }
    }
}

/// A rendered counting triangle: rows n down, columns m across. Half-plane
/// classes are symmetric in m, so their columns hold the one-sided counts
/// indexed by |m|.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableArtifact {
    pub class: PathClass,
    pub n_max: i64,
    pub columns: Vec<i64>,
    pub rows: Vec<Vec<BigUint>>,
}

impl TableArtifact {
    /// Table in the appendix layout: columns 0 ..= min(support, 17).
    pub fn appendix(class: PathClass, n_max: i64) -> TableArtifact {
        TableArtifact::build(class, n_max, Some(DISPLAY_COLUMN_CUT))
    }

    /// Table with the full column support at `n_max`.
    pub fn full(class: PathClass, n_max: i64) -> TableArtifact {
        TableArtifact::build(class, n_max, None)
    }

    fn build(class: PathClass, n_max: i64, cut: Option<i64>) -> TableArtifact {
        let table = count_table(class, n_max);
        let hi = table.row_support(n_max).1;
        let m_cap = cut.map_or(hi, |c| hi.min(c));
        let columns: Vec<i64> = (0..=m_cap).collect();
        let rows = (0..=n_max)
            .map(|n| columns.iter().map(|&m| table.get(n, m).clone()).collect())
            .collect();
        TableArtifact {
            class,
            n_max,
            columns,
            rows,
        }
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => self.to_json(),
            TableFormat::Markdown => self.to_markdown(),
        }
    }

    fn cell(v: &BigUint) -> String {
        if v.is_zero() {
            String::new()
        } else {
            v.to_string()
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n/m");
        for m in &self.columns {
            out.push(',');
            out.push_str(&m.to_string());
        }
        out.push('\n');
        for (n, row) in self.rows.iter().enumerate() {
            out.push_str(&n.to_string());
            for v in row {
                out.push(',');
                out.push_str(&TableArtifact::cell(v));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("| n/m |");
        for m in &self.columns {
            out.push_str(&format!(" {m} |"));
        }
        out.push('\n');
        out.push_str("| ---: |");
        for _ in &self.columns {
            out.push_str(" ---: |");
        }
        out.push('\n');
        for (n, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("| {n} |"));
            for v in row {
                let cell = TableArtifact::cell(v);
                if cell.is_empty() {
                    out.push_str("  |");
                } else {
                    out.push_str(&format!(" {cell} |"));
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            class: self.class.id().to_string(),
            n_max: self.n_max,
            columns: self.columns.clone(),
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(n, row)| TableRowJson {
                    n: n as i64,
                    values: row.iter().map(|v| v.to_string()).collect(),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("table serialization");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<TableArtifact, CliError> {
        let doc: TableJson = serde_json::from_str(text)
            .map_err(|e| CliError::Usage(format!("invalid table json: {e}")))?;
        let class = PathClass::from_id(&doc.class)
            .ok_or_else(|| CliError::Usage(format!("unknown class id {:?}", doc.class)))?;
        let mut rows = Vec::new();
        for row in &doc.rows {
            let mut values = Vec::new();
            for v in &row.values {
                values.push(parse_biguint(v)?);
            }
            rows.push(values);
        }
        Ok(TableArtifact {
            class,
            n_max: doc.n_max,
            columns: doc.columns,
            rows,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    class: String,
    n_max: i64,
    columns: Vec<i64>,
    rows: Vec<TableRowJson>,
}

#[derive(Serialize, Deserialize)]
struct TableRowJson {
    n: i64,
    values: Vec<String>,
}

fn parse_biguint(text: &str) -> Result<BigUint, CliError> {
    text.parse::<BigUint>()
        .map_err(|_| CliError::Usage(format!("invalid count {text:?}")))
}

/// A table read back from CSV. Blank cells are zeros; short rows are
/// padded, so hand-maintained files may omit trailing blanks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParsedTable {
    pub columns: Vec<i64>,
    pub rows: Vec<(i64, Vec<BigUint>)>,
}

pub fn parse_table_csv(text: &str) -> Result<ParsedTable, CliError> {
    let bad = |msg: String| CliError::Usage(msg);
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| bad("empty table".to_string()))?;
    let mut fields = header.split(',');
    if fields.next() != Some("n/m") {
        return Err(bad(format!("table header must start with n/m, got {header:?}")));
    }
    let columns: Vec<i64> = fields
        .map(|f| f.parse::<i64>().map_err(|_| bad(format!("bad column label {f:?}"))))
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let n: i64 = fields
            .next()
            .unwrap()
            .parse()
            .map_err(|_| bad(format!("bad row label in {line:?}")))?;
        let mut values = Vec::new();
        for f in fields {
            if values.len() == columns.len() {
                return Err(bad(format!("row {n} has more cells than columns")));
            }
            values.push(if f.is_empty() {
                BigUint::zero()
            } else {
                parse_biguint(f)?
            });
        }
        values.resize(columns.len(), BigUint::zero());
        rows.push((n, values));
    }
    Ok(ParsedTable { columns, rows })
}

/// The m-support of a half-plane table is symmetric, so the artifact
/// compares one-sided columns; quarter tables compare as stored.
pub fn region_of(class: PathClass) -> Region {
    class.region
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_renders_blanks_for_zeros_and_round_trips() {
        let t = TableArtifact::appendix(PathClass::from_id("cw").unwrap(), 2);
        let csv = t.to_csv();
        assert_eq!(
            csv,
            "n/m,0,1,2,3,4,5,6,7,8\n0,1,,1,,,,,,\n1,,3,,3,,1,,,\n2,11,,15,,12,,5,,1\n"
        );
        let parsed = parse_table_csv(&csv).unwrap();
        assert_eq!(parsed.columns, (0..=8).collect::<Vec<_>>());
        assert_eq!(parsed.rows[2].1[0], BigUint::from(11u32));
        assert_eq!(parsed.rows[1].1[8], BigUint::zero());
    }

    #[test]
    fn json_round_trips_through_the_parser() {
        let t = TableArtifact::full(PathClass::from_id("gmwr").unwrap(), 3);
        let text = t.to_json();
        let back = TableArtifact::from_json(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn appendix_layout_cuts_wide_supports() {
        let t = TableArtifact::appendix(PathClass::from_id("cw").unwrap(), 8);
        assert_eq!(*t.columns.last().unwrap(), 17);
        let full = TableArtifact::full(PathClass::from_id("cw").unwrap(), 8);
        assert_eq!(*full.columns.last().unwrap(), 26);
    }
}
