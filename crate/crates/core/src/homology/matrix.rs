//! Sparse exact matrices and their ranks.
//!
//! Over `GF(p)` elimination runs on residues. Over the rationals, rows are
//! eliminated against pivots equal to `±1`, which keeps all arithmetic in
//! `i64`; whatever cannot be pivoted that way (or overflows) is finished by
//! dense elimination over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::FieldSpec;

/// Sparse vector: `(index, value)` pairs sorted by index, no zero values.
pub type SparseVec = Vec<(u32, i64)>;

/// A matrix with exact entries, stored column by column. Over `GF(p)` the
/// entries are kept reduced to `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    columns: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn from_columns(rows: usize, field: FieldSpec, columns: Vec<SparseVec>) -> Self {
        let columns = columns
            .into_iter()
            .map(|c| normalize(c, field))
            .collect::<Vec<_>>();
        debug_assert!(columns.iter().flatten().all(|&(r, _)| (r as usize) < rows));
        ExactMatrix {
            rows,
            cols: columns.len(),
            field,
            columns,
        }
    }

    pub fn from_dense(field: FieldSpec, dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter(|&r| dense[r][c] != 0)
                    .map(|r| (r as u32, dense[r][c]))
                    .collect()
            })
            .collect();
        Self::from_columns(rows, field, columns)
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        ExactMatrix {
            rows,
            cols,
            field,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        lookup(&self.columns[c], r as u32).unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                d[r as usize][c] = v;
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Product `self * other`. Panics on a dimension mismatch.
    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|oc| {
                let mut acc = vec![0i128; self.rows];
                for &(k, v) in oc {
                    for &(r, w) in &self.columns[k as usize] {
                        acc[r as usize] += v as i128 * w as i128;
                    }
                }
                acc.into_iter()
                    .enumerate()
                    .filter_map(|(r, x)| {
                        let x = match self.field {
                            FieldSpec::Rationals => x,
                            FieldSpec::Prime(p) => x.rem_euclid(p as i128),
                        };
                        (x != 0).then(|| (r as u32, i64::try_from(x).expect("entry fits i64")))
                    })
                    .collect()
            })
            .collect();
        ExactMatrix::from_columns(self.rows, self.field, columns)
    }

    pub fn rank(&self) -> usize {
        match self.field {
            FieldSpec::Rationals => rank_rational(&self.columns),
            FieldSpec::Prime(p) => rank_mod_p(&self.columns, p as i64),
        }
    }
}

fn normalize(mut v: SparseVec, field: FieldSpec) -> SparseVec {
    if let FieldSpec::Prime(p) = field {
        for e in &mut v {
            e.1 = e.1.rem_euclid(p as i64);
        }
    }
    v.retain(|e| e.1 != 0);
    v.sort_unstable_by_key(|e| e.0);
    v
}

#[inline]
fn lookup(v: &SparseVec, idx: u32) -> Option<i64> {
    v.binary_search_by_key(&idx, |e| e.0).ok().map(|k| v[k].1)
}

/// `v + a * w` over the integers, `None` on overflow.
fn axpy(v: &SparseVec, a: i64, w: &SparseVec) -> Option<SparseVec> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let (vi, wj) = (v.get(i), w.get(j));
        match (vi, wj) {
            (Some(&(c, x)), Some(&(d, _))) if c < d => {
                out.push((c, x));
                i += 1;
            }
            (Some(&(c, x)), None) => {
                out.push((c, x));
                i += 1;
            }
            (Some(&(c, x)), Some(&(d, y))) if c == d => {
                let s = x.checked_add(a.checked_mul(y)?)?;
                if s != 0 {
                    out.push((c, s));
                }
                i += 1;
                j += 1;
            }
            (_, Some(&(d, y))) => {
                out.push((d, a.checked_mul(y)?));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    Some(out)
}

/// `v + a * w` modulo `p`.
fn axpy_mod(v: &SparseVec, a: i64, w: &SparseVec, p: i64) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j == w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i == v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i]);
            i += 1;
        } else if take_w {
            out.push((w[j].0, a * w[j].1 % p));
            j += 1;
        } else {
            let s = (v[i].1 + a * w[j].1) % p;
            if s != 0 {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn inv_mod(a: i64, p: i64) -> i64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1i64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `GF(p)` of the span of `vectors` (entries already in `0..p`).
pub fn rank_mod_p(vectors: &[SparseVec], p: i64) -> usize {
    // pivot column and its row, normalised to 1 at the pivot
    let mut pivots: Vec<(u32, SparseVec)> = Vec::new();
    for v in vectors {
        let mut v = v.clone();
        for (c, row) in &pivots {
            if let Some(x) = lookup(&v, *c) {
                v = axpy_mod(&v, p - x, row, p);
            }
        }
        if let Some(&(c, x)) = v.first() {
            let s = inv_mod(x, p);
            for e in &mut v {
                e.1 = e.1 * s % p;
            }
            pivots.push((c, v));
        }
    }
    pivots.len()
}

/// Rank over the rationals of the span of integer `vectors`.
pub fn rank_rational(vectors: &[SparseVec]) -> usize {
    rank_unit_pivots(vectors).unwrap_or_else(|| rank_dense_rational(vectors))
}

fn rank_unit_pivots(vectors: &[SparseVec]) -> Option<usize> {
    // (pivot column, pivot value ±1, row)
    let mut pivots: Vec<(u32, i64, SparseVec)> = Vec::new();
    let mut deferred: Vec<(usize, SparseVec)> = Vec::new();

    fn reduce(v: &mut SparseVec, pivots: &[(u32, i64, SparseVec)]) -> Option<()> {
        for (c, a, row) in pivots {
            if let Some(x) = lookup(v, *c) {
                // a is ±1, so a^-1 = a
                *v = axpy(v, x.checked_mul(*a)?.checked_neg()?, row)?;
            }
        }
        Some(())
    }

    for v in vectors {
        let mut v = v.clone();
        reduce(&mut v, &pivots)?;
        if v.is_empty() {
            continue;
        }
        match v.iter().find(|e| e.1 == 1 || e.1 == -1) {
            Some(&(c, a)) => pivots.push((c, a, v)),
            None => deferred.push((pivots.len(), v)),
        }
    }
    let mut rest = Vec::new();
    for (from, mut v) in deferred {
        reduce(&mut v, &pivots[from..])?;
        if !v.is_empty() {
            rest.push(v);
        }
    }
    Some(pivots.len() + rank_dense_rational(&rest))
}

/// Dense Gaussian elimination over `BigRational`.
pub fn rank_dense_rational(vectors: &[SparseVec]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut cols: Vec<u32> = vectors.iter().flatten().map(|e| e.0).collect();
    cols.sort_unstable();
    cols.dedup();
    let width = cols.len();
    let mut m: Vec<Vec<BigRational>> = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigRational::zero(); width];
            for &(c, x) in v {
                let k = cols.binary_search(&c).expect("collected column");
                row[k] = BigRational::from_integer(BigInt::from(x));
            }
            row
        })
        .collect();

    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / &m[rank][col];
        let pivot_row: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..width {
                if !pivot_row[c].is_zero() {
                    let t = &f * &pivot_row[c];
                    row[c] -= t;
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
