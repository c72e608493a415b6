//! Canonical enumeration of wedge bases and the sign bookkeeping that goes
//! with it.
//!
//! Pairs `i<j` are enumerated lexicographically, as are triples `i<j<k`.

/// Number of canonical pairs over `n` basis vectors.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Index of the canonical pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// All canonical pairs in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// Canonicalizes an ordered pair: `None` for a repeated index, otherwise the
/// pair index and the sign of the reordering.
pub fn canonical_pair(n: usize, i: usize, j: usize) -> Option<(usize, i32)> {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Some((pair_index(n, i, j), 1)),
        std::cmp::Ordering::Greater => Some((pair_index(n, j, i), -1)),
        std::cmp::Ordering::Equal => None,
    }
}

pub fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// All canonical triples in lexicographic order.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(triple_count(n));
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Index of the canonical triple `i<j<k`.
pub fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    // triples with first index < i, then pairs (j,k) over the tail
    let mut idx = 0;
    for a in 0..i {
        let rest = n - a - 1;
        idx += rest * rest.saturating_sub(1) / 2;
    }
    let m = n - i - 1;
    idx + pair_index(m, j - i - 1, k - i - 1)
}

/// Sorts three indices, returning the sorted triple and the permutation
/// sign, or `None` when an index repeats.
pub fn canonical_triple(i: usize, j: usize, k: usize) -> Option<((usize, usize, usize), i32)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut sign = 1;
    for a in 0..3 {
        for b in 0..2 - a {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    Some(((v[0], v[1], v[2]), sign))
}

/// Sign of a permutation given as an index array.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Iterates over `{0..base}^len` in lexicographic order.
pub fn for_each_tuple(base: usize, len: usize, mut f: impl FnMut(&[usize])) {
    if len == 0 {
        f(&[]);
        return;
    }
    if base == 0 {
        return;
    }
    let mut t = vec![0usize; len];
    loop {
        f(&t);
        let mut pos = len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < base {
                break;
            }
            t[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indices_follow_enumeration() {
        for n in 0..7 {
            let ps = pairs(n);
            assert_eq!(ps.len(), pair_count(n));
            for (idx, &(i, j)) in ps.iter().enumerate() {
                assert_eq!(pair_index(n, i, j), idx);
            }
        }
    }

    #[test]
    fn triple_indices_follow_enumeration() {
        for n in 0..8 {
            let ts = triples(n);
            assert_eq!(ts.len(), triple_count(n));
            for (idx, &(i, j, k)) in ts.iter().enumerate() {
                assert_eq!(triple_index(n, i, j, k), idx);
            }
        }
    }

    #[test]
    fn triple_signs() {
        assert_eq!(canonical_triple(0, 1, 2), Some(((0, 1, 2), 1)));
        assert_eq!(canonical_triple(1, 0, 2), Some(((0, 1, 2), -1)));
        assert_eq!(canonical_triple(1, 2, 0), Some(((0, 1, 2), 1)));
        assert_eq!(canonical_triple(2, 1, 0), Some(((0, 1, 2), -1)));
        assert_eq!(canonical_triple(2, 1, 2), None);
    }

    #[test]
    fn tuples_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_tuple(2, 2, |t| seen.push(t.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let mut count = 0;
        for_each_tuple(0, 0, |_| count += 1);
        assert_eq!(count, 1);
        for_each_tuple(0, 3, |_| count += 1);
        assert_eq!(count, 1);
    }
}
