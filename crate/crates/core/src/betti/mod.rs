//! Graded Betti tables of edge ideals.

mod hochster;
mod join;

pub use hochster::{betti_hochster, HOCHSTER_VERTEX_CAP};
pub use join::{betti_by_join_decomposition, betti_join, betti_join_all};

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::FieldSpec;

/// Nonzero graded Betti numbers `β_{i,d}` of `R/I(G)` for `i ≥ 1`, together
/// with the number of variables `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, usize), BigUint>,
}

impl BettiTable {
    pub fn new(n: usize) -> Self {
        BettiTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sets `β_{i,d}`; a zero value removes the entry.
    pub fn set(&mut self, i: usize, d: usize, value: BigUint) {
        if value.is_zero() {
            self.entries.remove(&(i, d));
        } else {
            self.entries.insert((i, d), value);
        }
    }

    pub fn add(&mut self, i: usize, d: usize, value: BigUint) {
        if !value.is_zero() {
            *self.entries.entry((i, d)).or_default() += value;
        }
    }

    pub fn get(&self, i: usize, d: usize) -> BigUint {
        self.entries.get(&(i, d)).cloned().unwrap_or_default()
    }

    /// `β_{i,d}` as a machine integer. Panics if it does not fit.
    pub fn get_u64(&self, i: usize, d: usize) -> u64 {
        self.entries
            .get(&(i, d))
            .map_or(0, |v| v.to_u64().expect("Betti number exceeds u64"))
    }

    /// Nonzero entries in `(i, d)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        self.entries.iter().map(|(&(i, d), v)| (i, d, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max{d - i : β_{i,d} ≠ 0}`, or 0 for the zero ideal.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, d)| d - i).max().unwrap_or(0)
    }

    /// `max{i : β_{i,d} ≠ 0}`, or 0 for the zero ideal.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Entries `(i, β_{i,i+r})` of the strand `d - i = r`.
    pub fn strand(&self, r: usize) -> Vec<(usize, BigUint)> {
        self.entries()
            .filter(|&(i, d, _)| d - i == r)
            .map(|(i, _, v)| (i, v.clone()))
            .collect()
    }

    /// Total Betti numbers `β_i = Σ_d β_{i,d}`, starting with `β_0 = 1`.
    pub fn totals(&self) -> Vec<BigUint> {
        let mut t = vec![BigUint::zero(); self.proj_dim() + 1];
        t[0] = BigUint::from(1u8);
        for (i, _, v) in self.entries() {
            t[i] += v;
        }
        t
    }

    pub fn to_json(&self, field: FieldSpec) -> String {
        let doc = TableJson {
            n: self.n,
            field,
            entries: self
                .entries()
                .map(|(i, d, v)| EntryJson {
                    i,
                    d,
                    value: v.to_string(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<(BettiTable, FieldSpec)> {
        let doc: TableJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut t = BettiTable::new(doc.n);
        for e in doc.entries {
            let v: BigUint = e
                .value
                .parse()
                .map_err(|_| Error::Parse(format!("bad value {:?}", e.value)))?;
            if e.i == 0 || e.d <= e.i {
                return Err(Error::Parse(format!("bad index ({}, {})", e.i, e.d)));
            }
            t.set(e.i, e.d, v);
        }
        Ok((t, doc.field))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,d,value\n");
        for (i, d, v) in self.entries() {
            writeln!(s, "{i},{d},{v}").unwrap();
        }
        s
    }

    /// Plain listing: one `i d value` line per entry after a short header.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "n {}\nreg {}\npd {}\n",
            self.n,
            self.regularity(),
            self.proj_dim()
        );
        for (i, d, v) in self.entries() {
            writeln!(s, "{i} {d} {v}").unwrap();
        }
        s
    }

    /// Macaulay2-style triangular table: columns `i`, rows `d - i`, with the
    /// `β_{0,0} = 1` corner included.
    pub fn to_m2(&self) -> String {
        let pd = self.proj_dim();
        let reg = self.regularity();
        let cell = |i: usize, r: usize| -> String {
            if i == 0 {
                return if r == 0 { "1".into() } else { ".".into() };
            }
            self.entries
                .get(&(i, i + r))
                .map_or(".".into(), |v| v.to_string())
        };
        let totals: Vec<String> = self.totals().iter().map(|t| t.to_string()).collect();
        let header: Vec<String> = (0..=pd).map(|i| i.to_string()).collect();
        let body: Vec<Vec<String>> = (0..=reg)
            .map(|r| (0..=pd).map(|i| cell(i, r)).collect())
            .collect();
        let widths: Vec<usize> = (0..=pd)
            .map(|i| {
                body.iter()
                    .map(|row| row[i].len())
                    .chain([header[i].len(), totals[i].len()])
                    .max()
                    .unwrap()
            })
            .collect();
        let line = |label: &str, cells: &[String]| -> String {
            let mut s = format!("{label:>6}");
            for (c, w) in cells.iter().zip(&widths) {
                write!(s, " {c:>w$}").unwrap();
            }
            s.push('\n');
            s
        };
        let mut out = line("", &header);
        out += &line("total:", &totals);
        for (r, row) in body.iter().enumerate() {
            out += &line(&format!("{r}:"), row);
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_m2())
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    field: FieldSpec,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    d: usize,
    value: String,
}

/// Builds a table from `(i, d, value)` triples; handy in tests.
pub fn table_from(n: usize, entries: &[(usize, usize, u64)]) -> BettiTable {
    let mut t = BettiTable::new(n);
    for &(i, d, v) in entries {
        t.set(i, d, BigUint::from(v));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> BettiTable {
        table_from(5, &[(1, 2, 5), (2, 3, 5), (3, 5, 1)])
    }

    #[test]
    fn invariants() {
        let t = c5();
        assert_eq!((t.regularity(), t.proj_dim()), (2, 3));
        assert_eq!(t.strand(1), vec![(1, 5u32.into()), (2, 5u32.into())]);
        assert_eq!(t.totals(), [1u32, 5, 5, 1].map(BigUint::from).to_vec());
        let empty = BettiTable::new(4);
        assert_eq!((empty.regularity(), empty.proj_dim()), (0, 0));
        let mut z = c5();
        z.set(1, 2, BigUint::zero());
        assert_eq!(z.len(), 2);
    }

    #[test]
    fn m2_rendering() {
        let expected = "       0 1 2 3\n\
                        total: 1 5 5 1\n    \
                        0: 1 . . .\n    \
                        1: . 5 5 .\n    \
                        2: . . . 1\n";
        assert_eq!(c5().to_m2(), expected);
        assert_eq!(BettiTable::new(3).to_m2(), "       0\ntotal: 1\n    0: 1\n");
    }

    #[test]
    fn json_round_trip() {
        let t = c5();
        let s = t.to_json(FieldSpec::Prime(2));
        let (back, field) = BettiTable::from_json(&s).unwrap();
        assert_eq!((back.clone(), field), (t, FieldSpec::Prime(2)));
        assert_eq!(back.to_json(field), s);
        assert!(s.contains("\"value\": \"5\""));
        assert!(BettiTable::from_json("{\"n\":1}").is_err());
    }

    #[test]
    fn csv_and_text() {
        assert_eq!(c5().to_csv(), "i,d,value\n1,2,5\n2,3,5\n3,5,1\n");
        assert!(c5().to_text().starts_with("n 5\nreg 2\npd 3\n1 2 5\n"));
    }
}
