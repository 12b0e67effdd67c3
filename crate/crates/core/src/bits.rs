//! Small helpers for vertex sets stored as `u64` masks.

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in increasing order.
#[inline]
pub fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Sort key putting equal-size vertex sets in lexicographic order of their
/// sorted vertex lists.
#[inline]
pub fn lex_key(mask: u64) -> u64 {
    !mask.reverse_bits()
}

/// Compresses `mask` onto the positions of `support` (a software `pext`).
pub fn compress(mask: u64, support: u64) -> u64 {
    let mut out = 0u64;
    for (k, v) in ones(support).enumerate() {
        if mask >> v & 1 == 1 {
            out |= 1 << k;
        }
    }
    out
}

pub fn to_vec(mask: u64) -> Vec<usize> {
    ones(mask).collect()
}

pub fn from_slice(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_key_orders_like_sorted_lists() {
        let mut sets = vec![
            from_slice(&[1, 2]),
            from_slice(&[0, 3]),
            from_slice(&[0, 1]),
        ];
        sets.sort_by_key(|&m| lex_key(m));
        let lists: Vec<_> = sets.into_iter().map(to_vec).collect();
        assert_eq!(lists, vec![vec![0, 1], vec![0, 3], vec![1, 2]]);
    }

    #[test]
    fn compress_relabels_in_order() {
        assert_eq!(compress(0b1010_0000, 0b1110_0000), 0b101);
        assert_eq!(low_mask(64), u64::MAX);
        assert_eq!(low_mask(3), 0b111);
    }
}
