//! Simplicial complexes stored by their facets, with independence complexes,
//! links, deletions, induced subcomplexes and pure skeleta.
//!
//! Vertex sets are `u64` masks over a ground set `0..ground`. A complex with
//! no facets at all is the *void* complex; the complex `{∅}` has the single
//! facet `∅` and dimension `-1`.

use std::collections::HashSet;

use crate::bits::{compress, lex_key, low_mask, ones};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dimension reported for the void complex.
pub const VOID_DIM: isize = isize::MIN;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground: usize,
    /// Mutually incomparable, sorted by `lex_key`.
    facets: Vec<u64>,
}

/// Keeps only the inclusion-maximal sets, in canonical order.
fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept.sort_unstable_by_key(|&s| lex_key(s));
    kept
}

/// All `k`-element subsets of `mask`.
fn k_subsets(mask: u64, k: usize, out: &mut impl FnMut(u64)) {
    fn go(rest: u64, k: usize, acc: u64, out: &mut impl FnMut(u64)) {
        if k == 0 {
            out(acc);
            return;
        }
        if (rest.count_ones() as usize) < k {
            return;
        }
        let low = rest & rest.wrapping_neg();
        go(rest & !low, k - 1, acc | low, out);
        go(rest & !low, k, acc, out);
    }
    go(mask, k, 0, out);
}

impl SimplicialComplex {
    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![0],
        }
    }

    /// The complex generated by `sets` (taken as faces; non-maximal ones are
    /// dropped).
    pub fn from_facets(ground: usize, sets: impl IntoIterator<Item = u64>) -> Result<Self> {
        if ground > 64 {
            return Err(Error::cap("complex ground set", 64, ground));
        }
        let sets: Vec<u64> = sets.into_iter().collect();
        if sets.iter().any(|&s| s & !low_mask(ground) != 0) {
            return Err(Error::NotSubset);
        }
        Ok(SimplicialComplex {
            ground,
            facets: maximal_sets(sets),
        })
    }

    pub fn from_vertex_lists(ground: usize, lists: &[&[usize]]) -> Result<Self> {
        if lists
            .iter()
            .flat_map(|l| l.iter())
            .any(|&v| v >= ground.min(64))
        {
            return Err(Error::NotSubset);
        }
        Self::from_facets(ground, lists.iter().map(|l| crate::bits::from_slice(l)))
    }

    pub fn simplex(ground: usize, vertices: u64) -> Result<Self> {
        Self::from_facets(ground, [vertices])
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    /// Facets as sorted vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|&f| crate::bits::to_vec(f))
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Union of all facets.
    pub fn vertices(&self) -> u64 {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
            .unwrap_or(VOID_DIM)
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Faces of dimension `i` in lexicographic order of their vertex lists.
    pub fn faces_of_dim(&self, i: isize) -> Vec<u64> {
        if i < -1 {
            return Vec::new();
        }
        let k = (i + 1) as usize;
        let mut seen = HashSet::new();
        for &f in &self.facets {
            k_subsets(f, k, &mut |s| {
                seen.insert(s);
            });
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        out.sort_unstable_by_key(|&s| lex_key(s));
        out
    }

    /// All faces grouped by size: entry `k` holds the faces with `k`
    /// vertices (dimension `k - 1`), each group in lexicographic order.
    pub fn faces_by_size(&self) -> Vec<Vec<u64>> {
        if self.is_void() {
            return Vec::new();
        }
        let top = (self.dim() + 1) as usize;
        let mut seen = HashSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut groups = vec![Vec::new(); top + 1];
        for s in seen {
            groups[s.count_ones() as usize].push(s);
        }
        for g in &mut groups {
            g.sort_unstable_by_key(|&s| lex_key(s));
        }
        groups
    }

    pub fn face_count(&self) -> usize {
        self.faces_by_size().iter().map(Vec::len).sum()
    }

    /// `Δ[W]`: faces of `self` contained in `w`.
    pub fn induced_subcomplex(&self, w: u64) -> Result<Self> {
        if w & !low_mask(self.ground) != 0 {
            return Err(Error::NotSubset);
        }
        if self.is_void() {
            return Ok(self.clone());
        }
        Ok(SimplicialComplex {
            ground: self.ground,
            facets: maximal_sets(self.facets.iter().map(|&f| f & w).collect()),
        })
    }

    /// `lk(F) = {H : H ∩ F = ∅, H ∪ F ∈ Δ}`.
    pub fn link(&self, face: u64) -> Result<Self> {
        if !self.contains(face) {
            return Err(Error::NotAFace);
        }
        let mut facets: Vec<u64> = self
            .facets
            .iter()
            .filter(|&&f| face & !f == 0)
            .map(|&f| f & !face)
            .collect();
        // facets containing `face` stay incomparable after removing it
        facets.sort_unstable_by_key(|&s| lex_key(s));
        Ok(SimplicialComplex {
            ground: self.ground,
            facets,
        })
    }

    /// `del(F) = {H ∈ Δ : H ∩ F = ∅}`.
    pub fn deletion(&self, face: u64) -> Result<Self> {
        if !self.contains(face) {
            return Err(Error::NotAFace);
        }
        Ok(SimplicialComplex {
            ground: self.ground,
            facets: maximal_sets(self.facets.iter().map(|&f| f & !face).collect()),
        })
    }

    /// `Δ^[i]`: the complex whose facets are the `i`-dimensional faces.
    pub fn pure_skeleton(&self, i: isize) -> Result<Self> {
        let dim = self.dim();
        if i < -1 || i > dim {
            return Err(Error::DimensionOutOfRange { dim: i, max: dim });
        }
        Ok(SimplicialComplex {
            ground: self.ground,
            facets: self.faces_of_dim(i),
        })
    }

    /// Connected components of the vertex set (via the 1-skeleton).
    pub fn components(&self) -> Vec<u64> {
        let mut comps: Vec<u64> = Vec::new();
        for &f in &self.facets {
            if f == 0 {
                continue;
            }
            let mut merged = f;
            comps.retain(|&c| {
                if c & merged != 0 {
                    merged |= c;
                    false
                } else {
                    true
                }
            });
            comps.push(merged);
        }
        comps.sort_unstable_by_key(|c| c.trailing_zeros());
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Facets relabelled onto `0..|vertices|` preserving vertex order; equal
    /// keys mean the complexes agree up to an order-preserving relabelling.
    pub fn canonical_key(&self) -> Vec<u64> {
        let support = self.vertices();
        let mut key: Vec<u64> = self.facets.iter().map(|&f| compress(f, support)).collect();
        key.sort_unstable();
        key
    }
}

/// The independence complex `Δ_G`: faces are the independent sets of `g`,
/// facets its maximal independent sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex {
        ground: g.n(),
        facets: maximal_sets(maximal_independent_sets(g)),
    }
}

/// Maximal independent sets of `g` (Bron-Kerbosch with pivoting on the
/// complement).
pub fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    let all = g.vertex_mask();
    let non_adj: Vec<u64> = (0..g.n())
        .map(|v| all & !g.neighbors(v) & !(1 << v))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adj, 0, all, 0, &mut out);
    out
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = ones(p | x)
        .max_by_key(|&u| (nbr[u] & p).count_ones())
        .expect("p is non-empty");
    for v in ones(p & !nbr[pivot]) {
        bron_kerbosch(nbr, r | 1 << v, p & nbr[v], x & nbr[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::{from_slice as m, to_vec};
    use proptest::prelude::*;

    fn lists(c: &SimplicialComplex) -> Vec<Vec<usize>> {
        c.facets().iter().map(|&f| to_vec(f)).collect()
    }

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::from_vertex_lists(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]])
            .unwrap()
    }

    #[test]
    fn independence_complex_of_c5_is_the_diagonals() {
        let c = independence_complex(&Graph::cycle(5).unwrap());
        assert_eq!(
            lists(&c),
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
        );
        assert!(c.is_pure());
        assert_eq!(c.dim(), 1);
    }

    #[test]
    fn independence_complex_of_cycle_complement() {
        for k in 4..10 {
            let c = independence_complex(&Graph::cycle_complement(k).unwrap());
            let mut expect: Vec<u64> = (0..k).map(|v| m(&[v, (v + 1) % k])).collect();
            expect.sort_unstable_by_key(|&s| lex_key(s));
            assert_eq!(c.facets(), &expect[..]);
        }
    }

    #[test]
    fn independence_complex_of_complete_graph() {
        let c = independence_complex(&Graph::complete(4).unwrap());
        assert_eq!(lists(&c), vec![vec![0], vec![1], vec![2], vec![3]]);
        let e = independence_complex(&Graph::edgeless(0).unwrap());
        assert_eq!(e, SimplicialComplex::empty(0));
    }

    #[test]
    fn induced_subcomplex_examples() {
        let d5 = independence_complex(&Graph::cycle(5).unwrap());
        assert_eq!(
            d5.induced_subcomplex(0).unwrap(),
            SimplicialComplex::empty(5)
        );
        assert_eq!(d5.induced_subcomplex(0b11111).unwrap(), d5);
        let d4 = independence_complex(&Graph::cycle(4).unwrap());
        let sub = d4.induced_subcomplex(0b111).unwrap();
        assert_eq!(lists(&sub), vec![vec![0, 2], vec![1]]);
        assert_eq!(sub.components().len(), 2);
        assert!(d4.induced_subcomplex(1 << 9).is_err());
    }

    #[test]
    fn link_examples() {
        let p = pentagon();
        assert_eq!(p.link(0).unwrap(), p);
        assert_eq!(lists(&p.link(m(&[0])).unwrap()), vec![vec![1], vec![4]]);
        assert_eq!(p.link(m(&[2, 3])).unwrap(), SimplicialComplex::empty(5));
        assert_eq!(p.link(m(&[0, 2])), Err(Error::NotAFace));
    }

    #[test]
    fn deletion_examples() {
        let p = pentagon();
        assert_eq!(p.deletion(0).unwrap(), p);
        let d = p.deletion(m(&[0])).unwrap();
        assert_eq!(lists(&d), vec![vec![1, 2], vec![2, 3], vec![3, 4]]);
        let s = SimplicialComplex::simplex(4, 0b1111).unwrap();
        assert_eq!(
            s.deletion(m(&[2])).unwrap(),
            SimplicialComplex::simplex(4, 0b1011).unwrap()
        );
        assert!(p.deletion(m(&[0, 2])).is_err());
    }

    #[test]
    fn pure_skeleton_examples() {
        let p = pentagon();
        assert_eq!(p.pure_skeleton(1).unwrap(), p);
        let c = SimplicialComplex::from_vertex_lists(4, &[&[0, 1, 2], &[3]]).unwrap();
        assert_eq!(
            lists(&c.pure_skeleton(0).unwrap()),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            lists(&c.pure_skeleton(1).unwrap()),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(c.pure_skeleton(-1).unwrap(), SimplicialComplex::empty(4));
        assert!(c.pure_skeleton(3).is_err());
    }

    #[test]
    fn dims_and_purity() {
        let p = pentagon();
        assert!(p.is_pure());
        assert_eq!(p.dim(), 1);
        assert_eq!(p.faces_of_dim(1).len(), 5);
        assert_eq!(p.faces_of_dim(-1), vec![0]);
        let np = SimplicialComplex::from_vertex_lists(3, &[&[0, 1], &[2]]).unwrap();
        assert!(!np.is_pure());
        assert_eq!(SimplicialComplex::void(3).dim(), VOID_DIM);
        assert_eq!(SimplicialComplex::empty(3).dim(), -1);
        assert_ne!(SimplicialComplex::void(3), SimplicialComplex::empty(3));
    }

    #[test]
    fn join_gives_disjoint_union_of_independence_complexes() {
        let gs = [
            Graph::cycle(5).unwrap(),
            Graph::path(4).unwrap(),
            Graph::cycle_complement(6).unwrap(),
            Graph::edgeless(3).unwrap(),
        ];
        for g in &gs {
            for h in &gs {
                let j = g.join(h).unwrap();
                let mut faces: Vec<u64> = independence_complex(&j).faces_by_size().concat();
                let mut expect: Vec<u64> = independence_complex(g).faces_by_size().concat();
                expect.extend(
                    independence_complex(h)
                        .faces_by_size()
                        .concat()
                        .into_iter()
                        .filter(|&f| f != 0)
                        .map(|f| f << g.n()),
                );
                faces.sort_unstable();
                expect.sort_unstable();
                assert_eq!(faces, expect);
            }
        }
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        prop::collection::vec(0u64..(1 << 8), 1..8)
            .prop_map(|sets| SimplicialComplex::from_facets(8, sets).unwrap())
    }

    proptest! {
        #[test]
        fn faces_are_downward_closed(c in arb_complex()) {
            for group in c.faces_by_size() {
                for f in group {
                    prop_assert!(c.contains(f));
                    for v in ones(f) {
                        prop_assert!(c.contains(f & !(1 << v)));
                    }
                }
            }
        }

        #[test]
        fn link_and_deletion_keep_facets_incomparable(c in arb_complex(), pick in 0usize..64) {
            let faces = c.faces_by_size().concat();
            let f = faces[pick % faces.len()];
            for sub in [c.link(f).unwrap(), c.deletion(f).unwrap()] {
                for &a in sub.facets() {
                    for &b in sub.facets() {
                        prop_assert!(a == b || a & !b != 0);
                    }
                }
            }
            let lk = c.link(f).unwrap();
            for h in lk.faces_by_size().concat() {
                prop_assert!(h & f == 0 && c.contains(h | f));
            }
        }
    }
}
