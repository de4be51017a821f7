//! Counting and indexing helpers for multisets, compositions, and divisors.
//!
//! A multiset of size `n` over `{0, …, d-1}` is stored as a non-decreasing
//! `Vec<usize>`. Multisets of a fixed size are ordered lexicographically, which
//! is the canonical basis order of symmetric powers.

pub fn binom(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of multisets of size `n` drawn from `d` symbols: `C(d+n-1, n)`.
pub fn multiset_count(d: usize, n: usize) -> usize {
    if n == 0 {
        return 1;
    }
    if d == 0 {
        return 0;
    }
    binom(d + n - 1, n) as usize
}

/// Position of `ms` among all size-`ms.len()` multisets over `d` symbols.
pub fn rank(ms: &[usize], d: usize) -> usize {
    let n = ms.len();
    let mut r = 0;
    let mut lo = 0;
    for (k, &a) in ms.iter().enumerate() {
        for v in lo..a {
            r += multiset_count(d - v, n - k - 1);
        }
        lo = a;
    }
    r
}

/// Inverse of [`rank`].
pub fn unrank(mut r: usize, n: usize, d: usize) -> Vec<usize> {
    let mut ms = Vec::with_capacity(n);
    let mut v = 0;
    for k in 0..n {
        loop {
            let c = multiset_count(d - v, n - k - 1);
            if r < c {
                break;
            }
            r -= c;
            v += 1;
        }
        ms.push(v);
    }
    ms
}

/// All multisets of size `n` over `d` symbols, in rank order.
pub fn multisets(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(multiset_count(d, n));
    if n > 0 && d == 0 {
        return out;
    }
    let mut cur = vec![0; n];
    loop {
        out.push(cur.clone());
        // advance to the next non-decreasing sequence
        let Some(pos) = (0..n).rev().find(|&i| cur[i] + 1 < d) else {
            break;
        };
        let next = cur[pos] + 1;
        for x in &mut cur[pos..] {
            *x = next;
        }
    }
    out
}

/// Multinomial coefficient `n! / ∏ mᵢ!` where `mᵢ` are the multiplicities in
/// `ms`: the number of ordered tuples with underlying multiset `ms`.
pub fn multiplicity(ms: &[usize]) -> u128 {
    let mut acc = factorial(ms.len());
    let mut i = 0;
    while i < ms.len() {
        let j = (i..ms.len()).find(|&j| ms[j] != ms[i]).unwrap_or(ms.len());
        acc /= factorial(j - i);
        i = j;
    }
    acc
}

/// Counts of each symbol, as an exponent vector of length `d`.
pub fn exponents(ms: &[usize], d: usize) -> Vec<usize> {
    let mut e = vec![0; d];
    for &i in ms {
        e[i] += 1;
    }
    e
}

pub fn insert_sorted(ms: &[usize], x: usize) -> Vec<usize> {
    let pos = ms.partition_point(|&y| y <= x);
    let mut out = Vec::with_capacity(ms.len() + 1);
    out.extend_from_slice(&ms[..pos]);
    out.push(x);
    out.extend_from_slice(&ms[pos..]);
    out
}

pub fn merge_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Positive divisors of `p` in increasing order. Only `0` divides `0`.
pub fn divisors(p: usize) -> Vec<usize> {
    if p == 0 {
        return vec![0];
    }
    (1..=p).filter(|&k| p.is_multiple_of(k)).collect()
}

/// Ordered compositions of `p` into exactly `parts` positive summands.
pub fn compositions(p: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rest < parts {
            return;
        }
        for k in 1..=rest - (parts - 1) {
            cur.push(k);
            go(rest - k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(p, parts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn counts() {
        assert_eq!(multiset_count(2, 3), 4);
        assert_eq!(multiset_count(3, 0), 1);
        assert_eq!(multiset_count(0, 2), 0);
        assert_eq!(multiset_count(10, 3), 220);
        assert_eq!(binom(5, 2), 10);
        assert_eq!(binom(2, 5), 0);
    }

    #[test]
    fn enumeration_order() {
        let ms = multisets(2, 2);
        assert_eq!(ms, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets(3, 0), vec![Vec::<usize>::new()]);
        assert!(multisets(0, 1).is_empty());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&[0, 0]), 1);
        assert_eq!(multiplicity(&[0, 1]), 2);
        assert_eq!(multiplicity(&[0, 0, 1]), 3);
        assert_eq!(multiplicity(&[0, 1, 2]), 6);
        assert_eq!(multiplicity(&[]), 1);
    }

    #[test]
    fn divisors_and_compositions() {
        assert_eq!(divisors(0), vec![0]);
        assert_eq!(divisors(4), vec![1, 2, 4]);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(compositions(3, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(4, 1), vec![vec![4]]);
        assert!(compositions(2, 3).is_empty());
        let total: usize = (1..=5).map(|n| compositions(5, n).len()).sum();
        assert_eq!(total, 16);
    }

    proptest! {
        #[test]
        fn rank_matches_enumeration(d in 1usize..6, n in 0usize..5) {
            for (i, ms) in multisets(d, n).iter().enumerate() {
                prop_assert_eq!(rank(ms, d), i);
                prop_assert_eq!(&unrank(i, n, d), ms);
            }
            prop_assert_eq!(multisets(d, n).len(), multiset_count(d, n));
        }

        #[test]
        fn multiplicities_sum_to_power(d in 1usize..5, n in 0usize..5) {
            let total: u128 = multisets(d, n).iter().map(|m| multiplicity(m)).sum();
            prop_assert_eq!(total, (d as u128).pow(n as u32));
        }
    }
}
