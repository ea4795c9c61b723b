//! Ordered index subsets of {1, .., n} in lexicographic order, used to index
//! the rows and columns of compound matrices.

/// Binomial coefficient as usize (small arguments only).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All strictly increasing k-element subsets of 1..=n, lexicographically.
pub fn k_subsets(n: u8, k: u8) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(binomial(n as usize, k as usize));
    let mut current = Vec::with_capacity(k as usize);
    fn rec(n: u8, k: u8, start: u8, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if current.len() == k as usize {
            out.push(current.clone());
            return;
        }
        for v in start..=n {
            current.push(v);
            rec(n, k, v + 1, current, out);
            current.pop();
        }
    }
    rec(n, k, 1, &mut current, &mut out);
    out
}

/// Rank of a strictly increasing subset within `k_subsets(n, k)`.
pub fn subset_position(n: u8, subset: &[u8]) -> usize {
    let k = subset.len();
    let mut rank = 0usize;
    let mut prev = 0u8;
    for (i, &v) in subset.iter().enumerate() {
        for skipped in (prev + 1)..v {
            rank += binomial((n - skipped) as usize, k - i - 1);
        }
        prev = v;
    }
    rank
}

/// The complement of a subset inside 1..=n, ascending.
pub fn complement(n: u8, subset: &[u8]) -> Vec<u8> {
    (1..=n).filter(|v| !subset.contains(v)).collect()
}

/// Sign of the permutation (subset, complement) of 1..=n: for a subset L with
/// s elements summing to S this is (-1)^(S - s(s+1)/2).
pub fn subset_sign(subset: &[u8]) -> i32 {
    let s = subset.len() as u32;
    let sum: u32 = subset.iter().map(|&v| v as u32).sum();
    if (sum - s * (s + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}
