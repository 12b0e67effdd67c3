//! Reduced simplicial homology over an exact field.

mod field;
pub mod matrix;

pub use field::FieldSpec;
pub use matrix::ExactMatrix;

use crate::bits::{lex_key, ones};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use matrix::SparseVec;

/// Reduced homology dimensions `dim H̃_i` for `i = -1, 0, .., dim`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ReducedHomology {
    // dims[k] = dim H̃_{k-1}
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| (k as isize - 1, d))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Total dimension of all reduced homology groups.
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }
}

/// Columns of the boundary map from `upper` (faces of size `k`) to `lower`
/// (faces of size `k - 1`, sorted by `lex_key`).
fn boundary_columns(lower: &[u64], upper: &[u64]) -> Vec<SparseVec> {
    upper
        .iter()
        .map(|&sigma| {
            let mut col: SparseVec = ones(sigma)
                .enumerate()
                .map(|(t, v)| {
                    let tau = sigma & !(1u64 << v);
                    let row = lower
                        .binary_search_by_key(&lex_key(tau), |&f| lex_key(f))
                        .expect("complex is closed under subsets");
                    (row as u32, if t % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Matrix of `∂_i` from `i`-faces to `(i-1)`-faces, faces in lexicographic order.
/// `∂_0` is the augmentation onto the empty face.
pub fn boundary_matrix(c: &SimplicialComplex, i: isize, field: FieldSpec) -> Result<ExactMatrix> {
    let dim = c.dim();
    if c.is_void() || i < -1 || i > dim {
        return Err(Error::DimensionOutOfRange { dim: i, max: dim });
    }
    if i == -1 {
        return Ok(ExactMatrix::zeros(0, 1, field));
    }
    let lower = c.faces_of_dim(i - 1);
    let upper = c.faces_of_dim(i);
    Ok(ExactMatrix::from_columns(
        lower.len(),
        field,
        boundary_columns(&lower, &upper),
    ))
}

/// Reduced homology of a complex; the void complex has none.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: FieldSpec) -> ReducedHomology {
    if c.is_void() {
        return ReducedHomology::default();
    }
    reduced_homology_of_faces(&c.faces_by_size(), field)
}

/// Reduced homology from faces grouped by size (`groups[k]` holds the faces
/// with `k` vertices, each group sorted by `lex_key`, `groups[0] == [0]`).
pub fn reduced_homology_of_faces(groups: &[Vec<u64>], field: FieldSpec) -> ReducedHomology {
    let top = groups.len();
    // ranks[k] = rank of the map from size-k faces to size-(k-1) faces
    let mut ranks = vec![0usize; top + 1];
    for k in 1..top {
        if groups[k].is_empty() || groups[k - 1].is_empty() {
            continue;
        }
        let m = ExactMatrix::from_columns(
            groups[k - 1].len(),
            field,
            boundary_columns(&groups[k - 1], &groups[k]),
        );
        ranks[k] = m.rank();
    }
    let dims = (0..top)
        .map(|k| groups[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    ReducedHomology { dims }
}
