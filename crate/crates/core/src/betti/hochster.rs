use num_bigint::BigUint;
use rayon::prelude::*;

use super::BettiTable;
use crate::bits::ones;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{reduced_homology_of_faces, FieldSpec};

pub const HOCHSTER_VERTEX_CAP: usize = 24;

/// Betti table of `R/I(g)` by Hochster's formula: `β_{i,d}` is the sum over
/// `d`-subsets `W` of `dim H̃_{d-i-1}(Δ_G[W])`.
///
/// Subsets whose induced subgraph has an isolated vertex are skipped, since
/// `Δ_G[W]` is then a cone.
pub fn betti_hochster(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    let n = g.n();
    if n > HOCHSTER_VERTEX_CAP {
        return Err(Error::cap("Hochster vertex count", HOCHSTER_VERTEX_CAP, n));
    }
    let adj = g.adjacency();
    let width = n + 1;
    let total: u64 = 1 << n;
    const CHUNK: u64 = 1 << 10;

    let counts = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|chunk| {
            let mut acc = vec![0u64; width * width];
            let end = ((chunk + 1) * CHUNK).min(total);
            for w in chunk * CHUNK..end {
                if w != 0 && ones(w).all(|v| adj[v] & w != 0) {
                    add_subset(adj, w, field, width, &mut acc);
                }
            }
            acc
        })
        .reduce(
            || vec![0u64; width * width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let mut table = BettiTable::new(n);
    for i in 1..width {
        for d in i + 1..width {
            table.set(i, d, BigUint::from(counts[i * width + d]));
        }
    }
    Ok(table)
}

fn add_subset(adj: &[u64], w: u64, field: FieldSpec, width: usize, acc: &mut [u64]) {
    let d = w.count_ones() as usize;
    let groups = independent_sets_by_size(adj, w);
    let h = reduced_homology_of_faces(&groups, field);
    for (t, dim) in h.iter() {
        // t = d - i - 1
        let i = d as isize - t - 1;
        if dim > 0 && i >= 1 {
            acc[i as usize * width + d] += dim as u64;
        }
    }
}

/// Independent sets of `g[w]` grouped by size, each group in lexicographic
/// order (depth-first search on increasing vertices yields exactly that).
fn independent_sets_by_size(adj: &[u64], w: u64) -> Vec<Vec<u64>> {
    fn go(adj: &[u64], face: u64, cand: u64, groups: &mut Vec<Vec<u64>>) {
        let k = face.count_ones() as usize;
        if groups.len() <= k {
            groups.push(Vec::new());
        }
        groups[k].push(face);
        for v in ones(cand) {
            let above = !((2u64 << v) - 1);
            go(adj, face | 1 << v, cand & !adj[v] & above, groups);
        }
    }
    let mut groups = Vec::new();
    go(adj, 0, w, &mut groups);
    groups
}
