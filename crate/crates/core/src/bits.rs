//! Bitmask helpers. Point sets and Boolean algebra elements are `u64` masks.

/// Largest number of points a [`crate::FiniteSpace`] may carry.
pub const MAX_POINTS: usize = 64;

pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn contains(set: u64, i: usize) -> bool {
    set >> i & 1 == 1
}

pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Indices of the set bits, ascending.
pub fn iter(set: u64) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn lowest(set: u64) -> Option<usize> {
    (set != 0).then(|| set.trailing_zeros() as usize)
}

pub fn count(set: u64) -> usize {
    set.count_ones() as usize
}
