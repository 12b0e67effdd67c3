use num_bigint::BigUint;

use super::{betti_hochster, BettiTable};
use crate::error::Result;
use crate::formulas::binomial_u;
use crate::graph::Graph;
use crate::homology::FieldSpec;

/// Betti table of `G * H` from the tables of `G` (on `m` vertices) and `H`
/// (on `n` vertices).
pub fn betti_join(tg: &BettiTable, th: &BettiTable) -> BettiTable {
    let (m, n) = (tg.n(), th.n());
    let total = m + n;
    let mut out = BettiTable::new(total);
    let beta = |t: &BettiTable, i: usize, d: usize, j: usize| -> BigUint {
        if i > j && d > j {
            t.get(i - j, d - j)
        } else {
            BigUint::default()
        }
    };
    for i in 1..total {
        for d in i + 1..=total {
            let mut v = BigUint::default();
            for j in 0..=d - 2 {
                v += binomial_u(n, j) * beta(tg, i, d, j);
                v += binomial_u(m, j) * beta(th, i, d, j);
            }
            if d == i + 1 {
                for j in 1..d {
                    v += binomial_u(m, j) * binomial_u(n, d - j);
                }
            }
            out.set(i, d, v);
        }
    }
    out
}

/// Left fold of [`betti_join`]; `None` for an empty list.
pub fn betti_join_all<'a>(tables: impl IntoIterator<Item = &'a BettiTable>) -> Option<BettiTable> {
    tables.into_iter().fold(None, |acc, t| match acc {
        None => Some(t.clone()),
        Some(a) => Some(betti_join(&a, t)),
    })
}

/// Splits `g` into join factors, runs Hochster on each and recombines.
pub fn betti_by_join_decomposition(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    let tables = g
        .join_factors()
        .iter()
        .map(|h| betti_hochster(h, field))
        .collect::<Result<Vec<_>>>()?;
    Ok(betti_join_all(&tables).unwrap_or_else(|| BettiTable::new(g.n())))
}
