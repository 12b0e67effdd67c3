//! Edge-list text format: a header line `n <count>` followed by one `u v`
//! pair per line, 0-indexed, `u < v`, in ascending order.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::Graph;

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").expect("write to String");
        }
        out
    }

    /// Parses the edge-list format. Blank lines and `#` comments are
    /// ignored; edges may appear in any order.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["n", count] => count
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex count {count:?}")))?,
            _ => {
                return Err(Error::Parse(format!(
                    "expected `n <count>`, got {header:?}"
                )))
            }
        };
        let mut g = Graph::edgeless(n)?;
        for (lineno, line) in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("line {}: {line:?}", lineno + 1)))?;
            match nums[..] {
                [u, v] => g.add_edge(u, v)?,
                _ => return Err(Error::Parse(format!("line {}: expected `u v`", lineno + 1))),
            }
        }
        Ok(g)
    }
}
