//! Value tables for the CLI `table` command.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbers::{self, ExactInt};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableKind {
    /// `T(m, n)`
    T,
    /// `S(m, n) = 2 T(m, n)`
    S,
    /// `C_{m+n}`
    C,
    /// Ballot numbers `B(m, n)`, row index `m`, final-level index `n`.
    B,
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" => Ok(TableKind::T),
            "S" => Ok(TableKind::S),
            "C" => Ok(TableKind::C),
            "B" => Ok(TableKind::B),
            _ => Err(Error::Parameter(format!(
                "unknown table kind {s:?}; expected T, S, C or B"
            ))),
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableKind::T => "T",
            TableKind::S => "S",
            TableKind::C => "C",
            TableKind::B => "B",
        };
        f.write_str(s)
    }
}

/// Row-major table of decimal strings; undefined cells hold `"-"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub kind: TableKind,
    pub max_m: u64,
    pub max_n: u64,
    pub rows: Vec<Vec<String>>,
}

pub const UNDEFINED_CELL: &str = "-";

impl Table {
    /// Builds the `(max_m + 1) x (max_n + 1)` table. The second value lists
    /// a warning for every undefined cell.
    pub fn build(kind: TableKind, max_m: u64, max_n: u64) -> (Table, Vec<String>) {
        let mut warnings = Vec::new();
        let rows = (0..=max_m)
            .map(|m| {
                (0..=max_n)
                    .map(|n| match cell(kind, m, n) {
                        Ok(v) => v.to_string(),
                        Err(e) => {
                            warnings.push(format!("{kind}({m},{n}) left undefined: {e}"));
                            UNDEFINED_CELL.to_string()
                        }
                    })
                    .collect()
            })
            .collect();
        (
            Table {
                kind,
                max_m,
                max_n,
                rows,
            },
            warnings,
        )
    }

    pub fn to_tsv(&self) -> String {
        self.rows.iter().map(|row| row.join("\t") + "\n").collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table serializes") + "\n"
    }
}

fn cell(kind: TableKind, m: u64, n: u64) -> Result<ExactInt> {
    match kind {
        TableKind::T => numbers::super_catalan(m, n),
        TableKind::S => Ok(numbers::super_catalan_doubled(m, n)),
        TableKind::C => Ok(numbers::catalan(m + n)),
        TableKind::B => {
            if m >= 1 && n > m {
                Ok(ExactInt::from(0))
            } else {
                numbers::ballot_number(m, n)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_table_contains_small_value() {
        let (t, warnings) = Table::build(TableKind::T, 3, 3);
        assert_eq!(t.rows[2][3], "6");
        assert_eq!(t.rows[0][0], "-");
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn catalan_row() {
        let (t, _) = Table::build(TableKind::C, 0, 5);
        assert_eq!(t.to_tsv(), "1\t1\t2\t5\t14\t42\n");
    }

    #[test]
    fn ballot_table_edges() {
        let (t, warnings) = Table::build(TableKind::B, 3, 4);
        assert_eq!(t.rows[3][1], "5");
        assert_eq!(t.rows[2][3], "0");
        assert_eq!(t.rows[0][2], "-");
        // row 0 and column 0 are undefined
        assert_eq!(warnings.len(), 5 + 3);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let (t, _) = Table::build(TableKind::S, 4, 30);
        let json = t.to_json();
        let back: Table = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&value).unwrap() + "\n", json);
    }
}
