use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};

/// `a_{n,i} = dim H^i(M_{0,n}^delta)` for a range of `n`, with
/// `0 <= i <= n - 3` in each row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    rows: BTreeMap<usize, Vec<BigInt>>,
}

impl BettiTable {
    /// Adds or replaces row `n`; it must have exactly `n - 2` entries.
    pub fn insert_row(&mut self, n: usize, row: Vec<BigInt>) -> Result<()> {
        if n < 3 || row.len() != n - 2 {
            return Err(Error::MalformedTable(format!(
                "row n = {n} has {} entries, expected {}",
                row.len(),
                n.saturating_sub(2)
            )));
        }
        self.rows.insert(n, row);
        Ok(())
    }

    pub fn get(&self, n: usize, i: usize) -> Option<&BigInt> {
        self.rows.get(&n)?.get(i)
    }

    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        self.rows.get(&n).map(Vec::as_slice)
    }

    /// Rows in ascending `n`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigInt])> {
        self.rows.iter().map(|(&n, r)| (n, r.as_slice()))
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Long format: header `n,i,a`, one line per entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,i,a\n");
        for (n, row) in self.rows() {
            for (i, a) in row.iter().enumerate() {
                writeln!(out, "{n},{i},{a}").unwrap();
            }
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        if lines.next().map(str::trim) != Some("n,i,a") {
            return Err(Error::MalformedTable("missing `n,i,a` header".into()));
        }
        let mut cells: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
        for line in lines {
            let fields: Vec<&str> = line.trim().split(',').collect();
            let [n, i, a] = fields[..] else {
                return Err(Error::MalformedTable(format!("bad line {line:?}")));
            };
            let bad = || Error::MalformedTable(format!("bad line {line:?}"));
            let n: usize = n.parse().map_err(|_| bad())?;
            let i: usize = i.parse().map_err(|_| bad())?;
            let a = BigInt::from_str(a).map_err(|_| bad())?;
            if cells.entry(n).or_default().insert(i, a).is_some() {
                return Err(Error::MalformedTable(format!("duplicate entry ({n},{i})")));
            }
        }
        let mut table = Self::default();
        for (n, row) in cells {
            if row.keys().copied().ne(0..row.len()) {
                return Err(Error::MalformedTable(format!("row {n} has gaps")));
            }
            table.insert_row(n, row.into_values().collect())?;
        }
        Ok(table)
    }

    /// Object keyed by `n`, each value the array of `a_{n,i}` by `i`.
    pub fn to_json(&self) -> String {
        let object: Map<String, Value> = self
            .rows()
            .map(|(n, row)| {
                let entries = row
                    .iter()
                    .map(|a| {
                        Value::Number(Number::from_str(&a.to_string()).expect("integer literal"))
                    })
                    .collect();
                (n.to_string(), Value::Array(entries))
            })
            .collect();
        serde_json::to_string_pretty(&Value::Object(object)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::MalformedTable(e.to_string()))?;
        let Value::Object(object) = value else {
            return Err(Error::MalformedTable("expected a JSON object".into()));
        };
        let mut table = Self::default();
        for (key, entries) in object {
            let n: usize = key
                .parse()
                .map_err(|_| Error::MalformedTable(format!("bad row key {key:?}")))?;
            let Value::Array(entries) = entries else {
                return Err(Error::MalformedTable(format!("row {n} is not an array")));
            };
            let row = entries
                .iter()
                .map(|v| match v {
                    Value::Number(num) => BigInt::from_str(&num.to_string()).ok(),
                    _ => None,
                })
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::MalformedTable(format!("row {n} has a non-integer entry")))?;
            table.insert_row(n, row)?;
        }
        Ok(table)
    }

    /// Right-aligned columns, one row per `n`.
    pub fn to_text(&self) -> String {
        let width = self.rows.keys().max().map_or(0, |n| n - 2);
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(self.rows.len() + 1);
        grid.push(
            std::iter::once("n".to_string())
                .chain((0..width).map(|i| format!("a_{{n,{i}}}")))
                .collect(),
        );
        for (n, row) in self.rows() {
            grid.push(
                std::iter::once(n.to_string())
                    .chain(row.iter().map(ToString::to_string))
                    .collect(),
            );
        }
        let cols = width + 1;
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                grid.iter()
                    .filter_map(|r| r.get(c))
                    .map(String::len)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for row in &grid {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, cell)| format!("{cell:>w$}", w = widths[c]))
                .collect();
            writeln!(out, "{}", line.join("  ")).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> BettiTable {
        let mut t = BettiTable::default();
        t.insert_row(3, vec![1.into()]).unwrap();
        t.insert_row(6, [1, 0, 5, 4].map(BigInt::from).to_vec())
            .unwrap();
        t
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            small().to_csv(),
            "n,i,a\n3,0,1\n6,0,1\n6,1,0\n6,2,5\n6,3,4\n"
        );
        assert_eq!(BettiTable::from_csv(&small().to_csv()).unwrap(), small());
    }

    #[test]
    fn json_layout() {
        let json = small().to_json();
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["6"], serde_json::json!([1, 0, 5, 4]));
        assert_eq!(BettiTable::from_json(&json).unwrap(), small());
    }

    #[test]
    fn big_entries_survive_json() {
        let mut t = BettiTable::default();
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        t.insert_row(3, vec![huge]).unwrap();
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn malformed_inputs() {
        assert!(BettiTable::from_csv("x,y,z\n").is_err());
        assert!(BettiTable::from_csv("n,i,a\n6,0,1\n6,2,5\n6,3,4\n6,4,1\n").is_err());
        assert!(BettiTable::from_csv("n,i,a\n3,0,1\n3,0,1\n").is_err());
        assert!(BettiTable::from_csv("n,i,a\n3,0\n").is_err());
        assert!(BettiTable::from_json("[1]").is_err());
        assert!(BettiTable::from_json(r#"{"4": [1, "0"]}"#).is_err());
        assert!(BettiTable::from_json(r#"{"4": [1, 0, 0]}"#).is_err());
        let mut t = BettiTable::default();
        assert!(t.insert_row(2, vec![]).is_err());
    }

    #[test]
    fn text_layout() {
        let text = small().to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n  a_{n,0}  a_{n,1}  a_{n,2}  a_{n,3}");
        assert_eq!(
            lines[2].split_whitespace().collect::<Vec<_>>(),
            ["6", "1", "0", "5", "4"]
        );
    }
}
