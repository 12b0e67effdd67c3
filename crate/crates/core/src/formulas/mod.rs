//! Closed-form Betti tables for cycles, cycle complements and the three
//! circulant families, in exact integer arithmetic.

mod binomial;

pub use binomial::{binomial, binomial_identities_check, binomial_u, exact_div};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::betti::{betti_hochster, BettiTable};
use crate::error::{Error, Result};
use crate::graph::{family_graph, FamilySpec, Graph};
use crate::homology::FieldSpec;

fn put(t: &mut BettiTable, i: usize, d: usize, v: BigInt) -> Result<()> {
    if v.is_negative() {
        return Err(Error::NegativeBetti {
            i,
            d,
            value: v.to_string(),
        });
    }
    t.set(i, d, v.to_biguint().expect("non-negative"));
    Ok(())
}

fn c(n: usize, k: isize) -> BigInt {
    binomial(n as i64, k as i64)
}

/// `reg(C_m) = floor((m+1)/3)` and `pd(C_m) = floor((2m+1)/3)`.
fn cycle_reg_pd(m: usize) -> (usize, usize) {
    ((m + 1) / 3, (2 * m + 1) / 3)
}

/// Betti table of the cycle `C_m`; `m = 3, 4` are computed by Hochster.
pub fn betti_cycle(m: usize) -> Result<BettiTable> {
    if m < 3 {
        return Err(Error::InvalidParameters(format!("cycle length {m} < 3")));
    }
    if m < 5 {
        return betti_hochster(&Graph::cycle(m)?, FieldSpec::Rationals);
    }
    let (reg, pd) = cycle_reg_pd(m);
    let mut t = BettiTable::new(m);
    for i in 1..=2 {
        put(&mut t, i, i + 1, BigInt::from(m))?;
    }
    for r in 2..reg {
        for i in r..=2 * r {
            let num = m * c(r, (i - r) as isize) * c(m - 2 * r, r as isize);
            put(&mut t, i, i + r, exact_div(&num, &BigInt::from(m - 2 * r))?)?;
        }
    }
    let r = reg;
    for i in r..=pd {
        let base = c(r, i as isize - r as isize);
        let at_p = i == pd;
        let v = match m % 3 {
            0 => 3 * base - BigInt::from(at_p as u8),
            1 => m * base + BigInt::from(at_p as u8),
            _ => BigInt::from(at_p as u8),
        };
        put(&mut t, i, i + r, v)?;
    }
    Ok(t)
}

/// `C(k, i+1) i(k-i-2) / (k-1)`, divided exactly.
fn linear_term(k: usize, i: usize) -> Result<BigInt> {
    let num = c(k, i as isize + 1) * (i as i64) * (k as i64 - i as i64 - 2);
    exact_div(&num, &BigInt::from(k - 1))
}

/// Betti table of the complement of `C_k` (`k >= 2`); empty for `k = 2, 3`.
pub fn betti_cycle_complement(k: usize) -> Result<BettiTable> {
    if k < 2 {
        return Err(Error::InvalidParameters(format!(
            "cycle complement needs k >= 2, got {k}"
        )));
    }
    let mut t = BettiTable::new(k);
    if k < 4 {
        return Ok(t);
    }
    for i in 1..k {
        let extra = BigInt::from((i == k - 1) as u8);
        put(&mut t, i, i + 1, linear_term(k, i)? + extra)?;
    }
    put(&mut t, k - 2, k, BigInt::from(1))?;
    Ok(t)
}

/// Betti table of the `d`-fold join of complements of `C_k` (`d, k >= 2`).
pub fn betti_d_fold_join_cycle_complement(d: usize, k: usize) -> Result<BettiTable> {
    if d < 2 || k < 2 {
        return Err(Error::InvalidParameters(format!(
            "need d, k >= 2, got d={d}, k={k}"
        )));
    }
    let n = d * k;
    let rest = (d - 1) * k;
    let mut t = BettiTable::new(n);
    for i in 1..n {
        let v = linear_term(n, i)? + d * c(rest, i as isize - k as isize + 1);
        put(&mut t, i, i + 1, v)?;
        if k >= 4 {
            put(&mut t, i, i + 2, d * c(rest, i as isize - k as isize + 2))?;
        }
    }
    Ok(t)
}

/// Betti table of `C_n(1, .., ^j, .., floor(n/2))` for `n >= 5`.
pub fn betti_h1(n: usize, j: usize) -> Result<BettiTable> {
    let f = FamilySpec::H1 { n, j };
    f.validate()?;
    if n < 5 {
        return Err(Error::InvalidParameters(format!(
            "H1 formulas need n >= 5, got {n}"
        )));
    }
    let (d, k) = f.h1_gcd_split().expect("H1");
    if d == 1 {
        betti_cycle_complement(n)
    } else {
        betti_d_fold_join_cycle_complement(d, k)
    }
}

/// Regularity of `R/I(G)` for the `H1(n, j)` graph.
pub fn reg_h1(n: usize, j: usize) -> usize {
    let d = n.gcd(&j);
    if n == 2 * j || n == 3 * d {
        1
    } else {
        2
    }
}

/// Betti table of `C_lm(1, .., ^2l, .., ^3l, .., floor(lm/2))`, the `l`-fold
/// join of `C_m`. `l = 1` is the cycle itself; `m = 3, 4` go to Hochster.
pub fn betti_h2(l: usize, m: usize) -> Result<BettiTable> {
    let f = FamilySpec::H2 { l, m };
    f.validate()?;
    if l == 1 {
        return betti_cycle(m);
    }
    if m < 5 {
        return betti_hochster(&family_graph(&f)?, FieldSpec::Rationals);
    }
    let n = l * m;
    let rest = (l - 1) * m;
    let (reg, _) = cycle_reg_pd(m);
    let mut t = BettiTable::new(n);
    for i in 1..n {
        let ii = i as isize;
        let v = n * c(rest + 1, ii - 1) + (l - 1) * c(n, ii + 1) - l * c(rest, ii + 1);
        put(&mut t, i, i + 1, v)?;
        for r in 2..reg {
            let num = n * c(m - 2 * r, r as isize) * c(rest + r, ii - r as isize);
            put(&mut t, i, i + r, exact_div(&num, &BigInt::from(m - 2 * r))?)?;
        }
        let r = reg as isize;
        let tail = l * c(rest, ii - m as isize + r);
        let head = c(rest + reg, ii - r);
        let v = match m % 3 {
            0 => 3 * l * head - tail,
            1 => n * head + tail,
            _ => tail,
        };
        put(&mut t, i, i + reg, v)?;
    }
    Ok(t)
}

/// Betti table of the complete multipartite graph with the given parts.
pub fn betti_multipartite(parts: &[usize]) -> Result<BettiTable> {
    if parts.len() < 2 || parts.contains(&0) {
        return Err(Error::InvalidParameters(format!(
            "need at least two non-empty parts, got {parts:?}"
        )));
    }
    let n: usize = parts.iter().sum();
    // e[l][s]: coefficient of x^s in the l-th elementary symmetric
    // polynomial of ((1+x)^{n_j} - 1)_j
    let mut e = vec![vec![BigUint::zero(); n + 1]; parts.len() + 1];
    e[0][0] = BigUint::from(1u8);
    for (idx, &p) in parts.iter().enumerate() {
        for l in (1..=idx + 1).rev() {
            for s in (0..=n).rev() {
                let mut add = BigUint::zero();
                for a in 1..=p.min(s) {
                    add += binomial_u(p, a) * &e[l - 1][s - a];
                }
                e[l][s] += add;
            }
        }
    }
    let mut t = BettiTable::new(n);
    for i in 1..n {
        let mut v = BigUint::zero();
        for (l, row) in e.iter().enumerate().skip(2) {
            v += (l - 1) * &row[i + 1];
        }
        t.set(i, i + 1, v);
    }
    Ok(t)
}

/// Betti table of `C_lm(1, .., ^l, .., ^2l, .., floor(lm/2))`, that is
/// `K_{m,..,m}` with `l` parts, summed over `r` chosen parts and ordered
/// compositions of `i+1` into `r` parts of size at most `m`.
pub fn betti_h3(l: usize, m: usize) -> Result<BettiTable> {
    FamilySpec::H3 { l, m }.validate()?;
    let n = l * m;
    // compositions(r, s) = [x^s] ((1+x)^m - 1)^r by inclusion-exclusion
    let compositions = |r: usize, s: usize| -> BigInt {
        (0..=r)
            .map(|q| {
                let term = c(r, q as isize) * c(q * m, s as isize);
                if (r - q).is_multiple_of(2) {
                    term
                } else {
                    -term
                }
            })
            .sum()
    };
    let mut t = BettiTable::new(n);
    for i in 1..n {
        let v: BigInt = (2..=l)
            .map(|r| (r - 1) * c(l, r as isize) * compositions(r, i + 1))
            .sum();
        put(&mut t, i, i + 1, v)?;
    }
    Ok(t)
}

/// Closed-form table for a family instance.
pub fn betti_family(f: &FamilySpec) -> Result<BettiTable> {
    match *f {
        FamilySpec::H1 { n, j } => betti_h1(n, j),
        FamilySpec::H2 { l, m } => betti_h2(l, m),
        FamilySpec::H3 { l, m } => betti_h3(l, m),
    }
}
