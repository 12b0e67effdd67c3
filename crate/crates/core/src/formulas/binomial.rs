use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    BigInt::from(binomial_u(n as usize, k as usize))
}

/// `C(n, k)` over the naturals, zero for `k > n`.
pub fn binomial_u(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// `a / b`, failing unless `b` divides `a`.
pub fn exact_div(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    let non_exact = || Error::NonExactDivision {
        numerator: a.to_string(),
        denominator: b.to_string(),
    };
    if b.is_zero() {
        return Err(non_exact());
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(non_exact())
    }
}

/// Checks, for the given `u, v, t`: Vandermonde's convolution
/// `Σ_j C(u,j) C(v,t-j) = C(u+v,t)`, Pascal's rule
/// `C(u,t) + C(u,t-1) = C(u+1,t)`, and for `u >= 2` the expansion
/// `C(u,t+1) t(u-t-2)/(u-1) = u C(u-1,t) - u C(u-2,t-1) - C(u,t+1)`
/// (with the left-hand division required to be exact).
pub fn binomial_identities_check(u: u32, v: u32, t: u32) -> bool {
    let (u, v, t) = (u as i64, v as i64, t as i64);
    let c = binomial;
    let vandermonde = (0..=t).map(|j| c(u, j) * c(v, t - j)).sum::<BigInt>() == c(u + v, t);
    let pascal = c(u, t) + c(u, t - 1) == c(u + 1, t);
    let expansion = u < 2 || {
        let lhs = exact_div(&(c(u, t + 1) * t * (u - t - 2)), &BigInt::from(u - 1));
        let rhs = u * c(u - 1, t) - u * c(u - 2, t - 1) - c(u, t + 1);
        lhs.is_ok_and(|l| l == rhs)
    };
    vandermonde && pascal && expansion
}
