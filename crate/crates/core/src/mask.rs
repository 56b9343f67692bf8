//! Bitmask utilities for subsets of {1, ..., n}.
//!
//! Bit i-1 of a mask encodes membership of the index i. Sorted index lists
//! are always ascending.

/// Number of elements.
pub fn card(mask: u32) -> u32 {
    mask.count_ones()
}

/// Ascending 1-based indices of a subset mask.
pub fn indices(mask: u32) -> Vec<u32> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn mask_of(indices: &[u32]) -> u32 {
    indices.iter().fold(0, |m, i| m | 1 << (i - 1))
}

/// Inversions of the merge of two disjoint sorted lists: the number of pairs
/// (p, q) with p in `a`, q in `b`, p > q. This is the sign exponent for
/// reordering x_a x_b into x_{a | b}.
pub fn merge_inversions(a: u32, b: u32) -> u32 {
    debug_assert_eq!(a & b, 0, "masks must be disjoint");
    let mut count = 0;
    let mut bb = b;
    while bb != 0 {
        let q = bb.trailing_zeros();
        // elements of a strictly above q
        count += (a >> (q + 1)).count_ones();
        bb &= bb - 1;
    }
    count
}

/// The exponent S(F, P) = (j_1 + ... + j_r) - r(r+1)/2, where the j_t are the
/// 1-based positions of the elements of F inside the sorted list P. Zero when
/// F is empty. Panics unless F is a subset of P.
pub fn position_sign_exp(f: u32, p: u32) -> u32 {
    assert_eq!(f & !p, 0, "F must be a subset of P");
    if f == 0 {
        return 0;
    }
    let mut pos_sum = 0u32;
    let mut pos = 0u32;
    let mut pp = p;
    while pp != 0 {
        let i = pp.trailing_zeros();
        pos += 1;
        if f >> i & 1 == 1 {
            pos_sum += pos;
        }
        pp &= pp - 1;
    }
    let r = card(f);
    pos_sum - r * (r + 1) / 2
}

/// Iterates over all submasks of `mask`, including 0 and `mask` itself.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn position_sign_examples() {
        let p = mask_of(&[1, 2]);
        assert_eq!(position_sign_exp(0, p), 0);
        assert_eq!(position_sign_exp(mask_of(&[1]), p), 0);
        assert_eq!(position_sign_exp(mask_of(&[2]), p), 1);
        // {1,3} inside {1,2,3}: positions 1 and 3, r = 2 -> 4 - 3 = 1.
        assert_eq!(position_sign_exp(mask_of(&[1, 3]), mask_of(&[1, 2, 3])), 1);
    }

    #[test]
    #[should_panic]
    fn position_sign_requires_subset() {
        position_sign_exp(mask_of(&[3]), mask_of(&[1, 2]));
    }

    #[test]
    fn merge_inversion_counts() {
        assert_eq!(merge_inversions(mask_of(&[2]), mask_of(&[1])), 1);
        assert_eq!(merge_inversions(mask_of(&[1]), mask_of(&[2])), 0);
        assert_eq!(merge_inversions(mask_of(&[2, 4]), mask_of(&[1, 3])), 3);
    }

    #[test]
    fn submask_enumeration() {
        let subs: Vec<u32> = submasks(0b101).collect();
        assert_eq!(subs.len(), 4);
        assert!(subs.contains(&0) && subs.contains(&0b101) && subs.contains(&0b100) && subs.contains(&0b001));
    }
}
