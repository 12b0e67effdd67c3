//! Backtracking isomorphism test for small graphs.

use crate::bits::ones;
use crate::error::{Error, Result};

use super::Graph;

pub const ISO_VERTEX_CAP: usize = 20;

/// Per-vertex invariant: degree, number of triangles through the vertex and
/// the sorted degrees of its neighbours.
fn invariants(g: &Graph) -> Vec<(usize, usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let nb = g.neighbors(v);
            let tri = ones(nb)
                .map(|u| (g.neighbors(u) & nb).count_ones() as usize)
                .sum::<usize>()
                / 2;
            let mut nd: Vec<usize> = ones(nb).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), tri, nd)
        })
        .collect()
}

/// Decides whether an edge-preserving bijection between `g` and `h` exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > ISO_VERTEX_CAP {
            return Err(Error::cap(
                "isomorphism test vertex count",
                ISO_VERTEX_CAP,
                x.n(),
            ));
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let n = g.n();
    let inv_g = invariants(g);
    let inv_h = invariants(h);
    {
        let mut a = inv_g.clone();
        let mut b = inv_h.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(false);
        }
    }

    // Map g's vertices in an order where each new vertex has many already
    // placed neighbours, starting from the rarest invariant class.
    let class_size = |v: usize| inv_g.iter().filter(|x| **x == inv_g[v]).count();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (g.neighbors(v) & placed).count_ones(),
                    std::cmp::Reverse(class_size(v)),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        order.push(next);
        placed |= 1 << next;
    }

    let candidates: Vec<u64> = order
        .iter()
        .map(|&v| {
            (0..n)
                .filter(|&u| inv_h[u] == inv_g[v])
                .fold(0, |m, u| m | 1 << u)
        })
        .collect();

    let mut image = vec![usize::MAX; n];
    Ok(extend(g, h, &order, &candidates, 0, 0, &mut image))
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    candidates: &[u64],
    depth: usize,
    used: u64,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // image of v's already-mapped neighbours, and of all mapped vertices
    let mut want = 0u64;
    for &w in &order[..depth] {
        if g.has_edge(v, w) {
            want |= 1 << image[w];
        }
    }
    for u in ones(candidates[depth] & !used) {
        if h.neighbors(u) & used != want {
            continue;
        }
        image[v] = u;
        if extend(g, h, order, candidates, depth + 1, used | 1 << u, image) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}
