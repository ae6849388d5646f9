//! Straightforward reference implementations computed directly from the
//! definitions. They are deliberately unoptimized and share no code with the
//! indexed implementations; the test suites use them as independent oracles.

use std::collections::HashSet;

pub fn is_palindrome(w: &[u8]) -> bool {
    let n = w.len();
    (0..n / 2).all(|i| w[i] == w[n - 1 - i])
}

/// Overlapping occurrence count by scanning every position.
pub fn occ(u: &[u8], v: &[u8]) -> usize {
    assert!(!v.is_empty());
    if v.len() > u.len() {
        return 0;
    }
    (0..=u.len() - v.len()).filter(|&i| &u[i..i + v.len()] == v).count()
}

/// Longest palindromic suffix by scanning suffixes longest-first.
pub fn lps(w: &[u8]) -> &[u8] {
    (0..=w.len())
        .map(|i| &w[i..])
        .find(|s| is_palindrome(s))
        .unwrap()
}

/// Longest palindromic prefix.
pub fn lpp(w: &[u8]) -> &[u8] {
    (0..=w.len())
        .rev()
        .map(|i| &w[..i])
        .find(|p| is_palindrome(p))
        .unwrap()
}

/// Longest proper palindromic suffix; requires a nonempty word.
pub fn lpps(w: &[u8]) -> &[u8] {
    assert!(!w.is_empty());
    (1..=w.len())
        .map(|i| &w[i..])
        .find(|s| is_palindrome(s))
        .unwrap()
}

/// Longest proper palindromic prefix; requires a nonempty word.
pub fn lppp(w: &[u8]) -> &[u8] {
    assert!(!w.is_empty());
    (0..w.len())
        .rev()
        .map(|i| &w[..i])
        .find(|p| is_palindrome(p))
        .unwrap()
}

/// Number of distinct palindromic factors including ε.
pub fn distinct_palindromes(w: &[u8]) -> usize {
    let mut set: HashSet<&[u8]> = HashSet::new();
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            if is_palindrome(&w[i..j]) {
                set.insert(&w[i..j]);
            }
        }
    }
    set.len() + 1
}

/// Distinct palindromic factor counts (including ε) for every prefix,
/// index `i` giving the count for the length-`i` prefix. Incremental: the
/// palindromes new to prefix `i` are among its palindromic suffixes.
pub fn distinct_palindromes_per_prefix(w: &[u8]) -> Vec<usize> {
    let mut set: HashSet<&[u8]> = HashSet::new();
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(1);
    for i in 1..=w.len() {
        for j in 0..i {
            if is_palindrome(&w[j..i]) {
                set.insert(&w[j..i]);
            }
        }
        out.push(set.len() + 1);
    }
    out
}

/// Does the length-`i` prefix have a unioccurrent longest palindromic
/// suffix, for every `i >= 1`?
pub fn unioccurrent_lps_flags(w: &[u8]) -> Vec<bool> {
    (1..=w.len())
        .map(|i| {
            let p = &w[..i];
            occ(p, lps(p)) == 1
        })
        .collect()
}

/// Richness by the definition: exactly `|w| + 1` distinct palindromic
/// factors.
pub fn is_rich(w: &[u8]) -> bool {
    distinct_palindromes(w) == w.len() + 1
}

/// Letters `x` over an alphabet of size `q` such that `wx` is rich.
pub fn rich_extension_letters(w: &[u8], q: u8) -> Vec<u8> {
    let mut out = Vec::new();
    let mut v = w.to_vec();
    for x in 0..q {
        v.push(x);
        if is_rich(&v) {
            out.push(x);
        }
        v.pop();
    }
    out
}

/// Shortest `|u|` such that `wu` is rich and extendable by two distinct
/// letters, found by breadth-first search over all extension words up to
/// `max_len`. Returns `None` if no such `u` exists within the budget.
pub fn omega(w: &[u8], q: u8, max_len: usize) -> Option<usize> {
    let mut frontier: Vec<Vec<u8>> = vec![w.to_vec()];
    for len in 0..=max_len {
        let mut next = Vec::new();
        for wu in &frontier {
            if is_rich(wu) {
                if rich_extension_letters(wu, q).len() >= 2 {
                    return Some(len);
                }
                for x in 0..q {
                    let mut v = wu.clone();
                    v.push(x);
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    None
}

/// All switch factors (words `xpy` with `x != y` and `p` a palindrome),
/// deduplicated by value.
pub fn switches(v: &[u8]) -> std::collections::BTreeSet<Vec<u8>> {
    let mut out = std::collections::BTreeSet::new();
    for i in 0..v.len() {
        for j in i + 2..=v.len() {
            if v[i] != v[j - 1] && is_palindrome(&v[i + 1..j - 1]) {
                out.insert(v[i..j].to_vec());
            }
        }
    }
    out
}

/// Prefixes `ux` of `v` that differ from the right standard extension of
/// `u`, computed with the naive affix scan.
pub fn flexed_points(v: &[u8]) -> std::collections::BTreeSet<Vec<u8>> {
    let mut out = std::collections::BTreeSet::new();
    for i in 2..=v.len() {
        let u = &v[..i - 1];
        let l = lpps(u).len();
        let forced = u[u.len() - 1 - l];
        if v[i - 1] != forced {
            out.insert(v[..i].to_vec());
        }
    }
    out
}

/// All words of length `n` over `q` symbols, in lexicographic order.
pub fn all_words(q: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * q as usize);
        for w in &out {
            for x in 0..q {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}
