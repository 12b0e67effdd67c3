//! Combinatorial and algebraic properties of independence complexes.

mod oracle;

pub use oracle::classification_oracle;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::betti_hochster;
use crate::bits::ones;
use crate::complex::{independence_complex, maximal_independent_sets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::homology::{reduced_homology_dims, FieldSpec};

pub const ALPHA_VERTEX_CAP: usize = 24;
pub const CM_VERTEX_CAP: usize = 20;
pub const SEQ_CM_VERTEX_CAP: usize = 18;
pub const VD_VERTEX_CAP: usize = 20;
pub const SHELLING_FACET_CAP: usize = 18;
pub const MATCHING_VERTEX_CAP: usize = 24;

/// Property values of a graph, either computed or predicted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub field: FieldSpec,
    pub alpha: usize,
    pub nu: usize,
    pub well_covered: bool,
    pub cohen_macaulay: bool,
    pub buchsbaum: bool,
    pub vertex_decomposable: bool,
    pub shellable: bool,
    pub sequentially_cm: bool,
    pub s2: bool,
    pub reg: usize,
    pub pd: usize,
}

impl PropertyReport {
    /// VD ⇒ shellable ⇒ CM ⇒ Buchsbaum, and CM ⇒ well-covered.
    pub fn hierarchy_holds(&self) -> bool {
        let implies = |a: bool, b: bool| !a || b;
        implies(self.vertex_decomposable, self.shellable)
            && implies(self.shellable, self.cohen_macaulay)
            && implies(self.cohen_macaulay, self.buchsbaum)
            && implies(self.cohen_macaulay, self.well_covered)
    }

    /// Names of the fields on which two reports disagree.
    pub fn differences(&self, other: &PropertyReport) -> Vec<&'static str> {
        let pairs = [
            ("field", self.field == other.field),
            ("alpha", self.alpha == other.alpha),
            ("nu", self.nu == other.nu),
            ("well_covered", self.well_covered == other.well_covered),
            (
                "cohen_macaulay",
                self.cohen_macaulay == other.cohen_macaulay,
            ),
            ("buchsbaum", self.buchsbaum == other.buchsbaum),
            (
                "vertex_decomposable",
                self.vertex_decomposable == other.vertex_decomposable,
            ),
            ("shellable", self.shellable == other.shellable),
            (
                "sequentially_cm",
                self.sequentially_cm == other.sequentially_cm,
            ),
            ("s2", self.s2 == other.s2),
            ("reg", self.reg == other.reg),
            ("pd", self.pd == other.pd),
        ];
        pairs.iter().filter(|p| !p.1).map(|p| p.0).collect()
    }
}

fn check_cap(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::cap(what, limit, got))
    } else {
        Ok(())
    }
}

/// `α(G)`, the size of a largest independent set.
pub fn independence_number(g: &Graph) -> Result<usize> {
    check_cap("independence number vertex count", ALPHA_VERTEX_CAP, g.n())?;
    Ok(maximal_independent_sets(g)
        .iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// All maximal independent sets have the same size.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    check_cap("well-covered vertex count", ALPHA_VERTEX_CAP, g.n())?;
    let sizes: Vec<u32> = maximal_independent_sets(g)
        .iter()
        .map(|s| s.count_ones())
        .collect();
    Ok(sizes.windows(2).all(|w| w[0] == w[1]))
}

/// Reisner's criterion on a complex: pure, and `H̃_i(lk F) = 0` for every
/// face `F` and every `i < dim lk F`.
pub fn is_cohen_macaulay_complex(c: &SimplicialComplex, field: FieldSpec) -> bool {
    if c.is_void() {
        return true;
    }
    if !c.is_pure() {
        return false;
    }
    let mut memo: HashMap<Vec<u64>, bool> = HashMap::new();
    c.faces_by_size().iter().flatten().all(|&f| {
        let lk = c.link(f).expect("f is a face");
        *memo.entry(lk.canonical_key()).or_insert_with(|| {
            let h = reduced_homology_dims(&lk, field);
            (-1..lk.dim()).all(|i| h.get(i) == 0)
        })
    })
}

pub fn is_cohen_macaulay(g: &Graph, field: FieldSpec) -> Result<bool> {
    check_cap("Cohen-Macaulay vertex count", CM_VERTEX_CAP, g.n())?;
    Ok(is_cohen_macaulay_complex(&independence_complex(g), field))
}

/// `G \ N[x]` is Cohen-Macaulay for every vertex `x`.
pub fn is_buchsbaum(g: &Graph, field: FieldSpec) -> Result<bool> {
    check_cap("Buchsbaum vertex count", CM_VERTEX_CAP, g.n())?;
    let locals = (0..g.n())
        .map(|x| g.closed_neighborhood_deleted(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(locals
        .par_iter()
        .all(|h| is_cohen_macaulay_complex(&independence_complex(h), field)))
}

/// Every pure skeleton of `Δ_G` is Cohen-Macaulay.
pub fn is_sequentially_cm(g: &Graph, field: FieldSpec) -> Result<bool> {
    check_cap(
        "sequentially Cohen-Macaulay vertex count",
        SEQ_CM_VERTEX_CAP,
        g.n(),
    )?;
    let c = independence_complex(g);
    let dims: Vec<isize> = (0..=c.dim()).collect();
    Ok(dims.par_iter().all(|&i| {
        let skel = c.pure_skeleton(i).expect("i is within range");
        is_cohen_macaulay_complex(&skel, field)
    }))
}

/// Every link of dimension at least 1 is connected.
pub fn is_s2_complex(c: &SimplicialComplex) -> bool {
    c.faces_by_size().iter().flatten().all(|&f| {
        let lk = c.link(f).expect("f is a face");
        lk.dim() < 1 || lk.is_connected()
    })
}

pub fn is_s2(g: &Graph) -> Result<bool> {
    check_cap("S2 vertex count", CM_VERTEX_CAP, g.n())?;
    Ok(is_s2_complex(&independence_complex(g)))
}

/// Vertex decomposability for pure complexes: a simplex, or some vertex has
/// a vertex decomposable link and deletion (both required to be pure).
pub fn is_vertex_decomposable(c: &SimplicialComplex) -> Result<bool> {
    if !c.is_pure() {
        return Err(Error::NonPure);
    }
    check_cap(
        "vertex decomposability vertex count",
        VD_VERTEX_CAP,
        c.vertices().count_ones() as usize,
    )?;
    Ok(vd(c, &mut HashMap::new()))
}

fn vd(c: &SimplicialComplex, memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    if c.is_void() || c.is_simplex() {
        return true;
    }
    if !c.is_pure() {
        return false;
    }
    let key = c.canonical_key();
    if let Some(&known) = memo.get(&key) {
        return known;
    }
    let ans = ones(c.vertices()).any(|x| {
        let face = 1u64 << x;
        let lk = c.link(face).expect("vertex is a face");
        let del = c.deletion(face).expect("vertex is a face");
        vd(&lk, memo) && vd(&del, memo)
    });
    memo.insert(key, ans);
    ans
}

/// Searches for an ordering `F_1 < .. < F_r` of the facets such that for all
/// `j < i` some `x ∈ F_i \ F_j` satisfies `F_i \ F_k = {x}` for some `k < i`.
/// Whether `F` may follow a placed set depends only on that set, so the
/// search runs over subsets of facets.
pub fn is_shellable(c: &SimplicialComplex) -> Result<bool> {
    if !c.is_pure() {
        return Err(Error::NonPure);
    }
    let facets = c.facets();
    let r = facets.len();
    check_cap("shellability facet count", SHELLING_FACET_CAP, r)?;
    if r <= 1 {
        return Ok(true);
    }
    let full: u32 = (1 << r) - 1;
    let can_follow = |placed: u32, i: usize| -> bool {
        let fi = facets[i];
        let singles = ones(placed as u64)
            .map(|k| fi & !facets[k])
            .filter(|d| d.count_ones() == 1)
            .fold(0u64, |a, d| a | d);
        ones(placed as u64).all(|j| fi & !facets[j] & singles != 0)
    };
    let mut seen = vec![false; 1 << r];
    let mut stack: Vec<u32> = vec![0];
    seen[0] = true;
    while let Some(placed) = stack.pop() {
        if placed == full {
            return Ok(true);
        }
        for i in 0..r {
            let next = placed | 1 << i;
            if next != placed && !seen[next as usize] && can_follow(placed, i) {
                seen[next as usize] = true;
                stack.push(next);
            }
        }
    }
    Ok(false)
}

/// `ν(G)`: the largest number of pairwise disjoint edges inducing exactly
/// themselves.
pub fn induced_matching_number(g: &Graph) -> Result<usize> {
    check_cap("induced matching vertex count", MATCHING_VERTEX_CAP, g.n())?;
    Ok(matching(
        g.adjacency(),
        g.vertex_mask(),
        &mut HashMap::new(),
    ))
}

fn matching(adj: &[u64], avail: u64, memo: &mut HashMap<u64, usize>) -> usize {
    let Some(v) = ones(avail).find(|&v| adj[v] & avail != 0) else {
        return 0;
    };
    if let Some(&known) = memo.get(&avail) {
        return known;
    }
    let closed = |x: usize| adj[x] | 1 << x;
    let mut best = matching(adj, avail & !(1 << v), memo);
    for u in ones(adj[v] & avail) {
        best = best.max(1 + matching(adj, avail & !closed(v) & !closed(u), memo));
    }
    memo.insert(avail, best);
    best
}

/// Computes every property of `g` over `field`; `reg` and `pd` come from
/// the Hochster table.
pub fn compute_report(g: &Graph, field: FieldSpec) -> Result<PropertyReport> {
    let c = independence_complex(g);
    let pure = c.is_pure();
    let table = betti_hochster(g, field)?;
    Ok(PropertyReport {
        field,
        alpha: independence_number(g)?,
        nu: induced_matching_number(g)?,
        well_covered: is_well_covered(g)?,
        cohen_macaulay: is_cohen_macaulay(g, field)?,
        buchsbaum: is_buchsbaum(g, field)?,
        vertex_decomposable: pure && is_vertex_decomposable(&c)?,
        shellable: pure && is_shellable(&c)?,
        sequentially_cm: is_sequentially_cm(g, field)?,
        s2: is_s2(g)?,
        reg: table.regularity(),
        pd: table.proj_dim(),
    })
}
