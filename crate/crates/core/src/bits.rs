//! Small helpers for `u32` vertex sets.

pub type VertexSet = u32;

#[inline]
pub fn bit(v: usize) -> VertexSet {
    1u32 << v
}

/// The set `{0, .., n-1}`.
#[inline]
pub fn full(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn lowest(s: VertexSet) -> usize {
    s.trailing_zeros() as usize
}

/// Members in increasing order.
pub fn iter(mut s: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            None
        } else {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            Some(v)
        }
    })
}

/// Packs the bits of `s` selected by `mask` into the low positions.
pub fn compress(s: VertexSet, mask: VertexSet) -> VertexSet {
    let mut out = 0;
    for (i, v) in iter(mask).enumerate() {
        if s & bit(v) != 0 {
            out |= bit(i);
        }
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `s` onto the members of `mask`.
pub fn expand(s: VertexSet, mask: VertexSet) -> VertexSet {
    let mut out = 0;
    for (i, v) in iter(mask).enumerate() {
        if s & bit(i) != 0 {
            out |= bit(v);
        }
    }
    out
}

/// Calls `f` on every subset of `universe` with exactly `k` elements.
pub fn for_each_subset_of_size(universe: VertexSet, k: usize, mut f: impl FnMut(VertexSet)) {
    let members: Vec<usize> = iter(universe).collect();
    fn rec(members: &[usize], k: usize, acc: VertexSet, f: &mut impl FnMut(VertexSet)) {
        if k == 0 {
            f(acc);
            return;
        }
        if members.len() < k {
            return;
        }
        rec(&members[1..], k - 1, acc | bit(members[0]), f);
        rec(&members[1..], k, acc, f);
    }
    rec(&members, k, 0, &mut f);
}

/// Calls `f` on every subset of `universe` with at most `k` elements.
pub fn for_each_subset_upto(universe: VertexSet, k: usize, mut f: impl FnMut(VertexSet)) {
    for size in 0..=k {
        for_each_subset_of_size(universe, size, &mut f);
    }
}
