//! Value types for words over a finite ordered alphabet, plus the primitive
//! operations everything else builds on: reversal, palindromicity, affixes,
//! occurrence counting, trims and suffix unions.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Ordered finite symbol set. `symbols[0]` is the zero-symbol and
/// `symbols[1]` the one-symbol; the constructions in [`crate::construction`]
/// depend on which symbols play those roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from the given symbols in the given order.
    /// Requires at least two distinct symbols and at most 255.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.len() < 2 {
            return Err(Error::AlphabetTooSmall);
        }
        if symbols.len() > 255 {
            return Err(Error::AlphabetTooLarge);
        }
        for (i, &c) in symbols.iter().enumerate() {
            if symbols[..i].contains(&c) {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Self { symbols })
    }

    /// The canonical alphabet `0`, `1`, …, using digits then lowercase
    /// letters. Supports `2 <= q <= 36`.
    pub fn canonical(q: usize) -> Result<Self> {
        const DIGITS: &[u8] = b"0123456789abcdefghijklmnopqrstuvwxyz";
        if q > DIGITS.len() {
            return Err(Error::AlphabetTooLarge);
        }
        Self::new(DIGITS[..q].iter().map(|&b| b as char))
    }

    /// Infers an alphabet from an input string: its distinct characters in
    /// sorted order, padded with `'0'` and then `'1'` if fewer than two
    /// distinct characters are present.
    pub fn infer(input: &str) -> Self {
        let mut set: BTreeSet<char> = input.chars().collect();
        if set.len() < 2 {
            if !set.contains(&'0') {
                set.insert('0');
            }
            if set.len() < 2 {
                set.insert('1');
            }
        }
        Self {
            symbols: set.into_iter().collect(),
        }
    }

    /// Number of symbols `q`.
    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as u8)
    }

    /// Parses a string into a word of symbol indices; every character must
    /// belong to this alphabet.
    pub fn parse(&self, s: &str) -> Result<Word> {
        s.chars()
            .map(|c| self.index_of(c).ok_or(Error::UnknownSymbol(c)))
            .collect::<Result<Vec<u8>>>()
            .map(Word::from)
    }

    /// Renders a word as a string, one character per symbol.
    pub fn render(&self, w: &Word) -> String {
        w.iter().map(|&x| self.symbols[x as usize]).collect()
    }
}

/// A finite sequence of symbol indices into some [`Alphabet`]. The empty
/// word is valid. Words do not carry their alphabet; operations that need
/// `q` or the symbol order take an `&Alphabet` argument.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(s: &[u8]) -> Self {
        Word(s.to_vec())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| self.0[i] == self.0[n - 1 - i])
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn has_prefix(&self, p: &[u8]) -> bool {
        self.0.starts_with(p)
    }

    pub fn has_suffix(&self, s: &[u8]) -> bool {
        self.0.ends_with(s)
    }

    pub fn contains_factor(&self, f: &[u8]) -> bool {
        contains(&self.0, f)
    }

    /// All prefixes, shortest first, including ε and the word itself.
    pub fn prefixes(&self) -> impl Iterator<Item = &[u8]> {
        (0..=self.0.len()).map(move |i| &self.0[..i])
    }

    /// All suffixes, longest first, including the word itself and ε.
    pub fn suffixes(&self) -> impl Iterator<Item = &[u8]> {
        (0..=self.0.len()).map(move |i| &self.0[i..])
    }

    /// All nonempty factor occurrences `(start, slice)`; values may repeat.
    pub fn factors(&self) -> impl Iterator<Item = &[u8]> {
        let w = &self.0;
        (0..w.len()).flat_map(move |i| (i + 1..=w.len()).map(move |j| &w[i..j]))
    }
}

impl Deref for Word {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word(v)
    }
}

impl FromIterator<u8> for Word {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Symbol indices rendered as digits where possible.
        write!(f, "w\"")?;
        for &x in &self.0 {
            if x < 10 {
                write!(f, "{x}")?;
            } else {
                write!(f, "({x})")?;
            }
        }
        write!(f, "\"")
    }
}

/// Which end of a word an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// The four affixes: longest palindromic suffix/prefix and their proper
/// variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffixKind {
    Lps,
    Lpp,
    Lpps,
    Lppp,
}

/// Number of occurrences of `v` in `u`; occurrences may overlap.
/// `v` must be nonempty.
pub fn occ(u: &Word, v: &Word) -> Result<usize> {
    if v.is_empty() {
        return Err(Error::EmptyWord("occ"));
    }
    Ok(count_occurrences(u, v))
}

/// Longest (proper, for `Lpps`/`Lppp`) palindromic suffix or prefix.
/// `lps(ε) = lpp(ε) = ε`; the proper variants reject ε and return ε for a
/// single letter.
pub fn affix(w: &Word, kind: AffixKind) -> Result<Word> {
    let n = w.len();
    match kind {
        AffixKind::Lpp => Ok(Word::from_slice(&w[..lpp_len(w)])),
        AffixKind::Lps => Ok(Word::from_slice(&w[n - lps_len(w)..])),
        AffixKind::Lppp => {
            if w.is_empty() {
                return Err(Error::EmptyWord("lppp"));
            }
            Ok(Word::from_slice(&w[..lppp_len(w)]))
        }
        AffixKind::Lpps => {
            if w.is_empty() {
                return Err(Error::EmptyWord("lpps"));
            }
            Ok(Word::from_slice(&w[n - lpps_len(w)..]))
        }
    }
}

/// `w` minus its first (left) or last (right) letter. ε is rejected.
pub fn trim(w: &Word, side: Side) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord("trim"));
    }
    Ok(match side {
        Side::Left => Word::from_slice(&w[1..]),
        Side::Right => Word::from_slice(&w[..w.len() - 1]),
    })
}

/// Union over the nonempty prefixes `t` of `u` of the suffix sets of `vt`.
/// `u` must be nonempty.
pub fn suffix_union(v: &Word, u: &Word) -> Result<BTreeSet<Word>> {
    if u.is_empty() {
        return Err(Error::EmptyWord("suffix_union"));
    }
    let mut out = BTreeSet::new();
    let mut vt: Vec<u8> = v.to_vec();
    for &x in u.iter() {
        vt.push(x);
        for i in 0..=vt.len() {
            out.insert(Word::from_slice(&vt[i..]));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Internal helpers shared across the crate.

/// First occurrence of `needle` in `hay` starting at or after `from`.
pub(crate) fn find_from(hay: &[u8], needle: &[u8], from: usize) -> Option<usize> {
    if from > hay.len() {
        return None;
    }
    memchr::memmem::find(&hay[from..], needle).map(|p| p + from)
}

pub(crate) fn contains(hay: &[u8], needle: &[u8]) -> bool {
    needle.is_empty() || find_from(hay, needle, 0).is_some()
}

/// Overlapping occurrence count. `needle` must be nonempty.
pub(crate) fn count_occurrences(hay: &[u8], needle: &[u8]) -> usize {
    debug_assert!(!needle.is_empty());
    let mut count = 0;
    let mut from = 0;
    while let Some(p) = find_from(hay, needle, from) {
        count += 1;
        from = p + 1;
    }
    count
}

/// All overlapping occurrence start positions, ascending.
pub(crate) fn occurrence_positions(hay: &[u8], needle: &[u8]) -> Vec<usize> {
    debug_assert!(!needle.is_empty());
    let mut out = Vec::new();
    let mut from = 0;
    while let Some(p) = find_from(hay, needle, from) {
        out.push(p);
        from = p + 1;
    }
    out
}

fn prefix_function(s: &[u16]) -> Vec<u32> {
    let mut pi = vec![0u32; s.len()];
    for i in 1..s.len() {
        let mut k = pi[i - 1] as usize;
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1] as usize;
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k as u32;
    }
    pi
}

/// Lengths of all nonempty palindromic prefixes of `w`, decreasing. Linear
/// time: the palindromic prefixes of `w` are exactly the borders of
/// `w # w^R`.
pub(crate) fn palindromic_prefix_lengths(w: &[u8]) -> Vec<usize> {
    if w.is_empty() {
        return Vec::new();
    }
    let mut s: Vec<u16> = Vec::with_capacity(2 * w.len() + 1);
    s.extend(w.iter().map(|&b| b as u16));
    s.push(u16::MAX);
    s.extend(w.iter().rev().map(|&b| b as u16));
    let pi = prefix_function(&s);
    let mut chain = Vec::new();
    let mut l = pi[s.len() - 1] as usize;
    while l > 0 {
        chain.push(l);
        l = pi[l - 1] as usize;
    }
    chain
}

pub(crate) fn lpp_len(w: &[u8]) -> usize {
    palindromic_prefix_lengths(w).first().copied().unwrap_or(0)
}

pub(crate) fn lppp_len(w: &[u8]) -> usize {
    palindromic_prefix_lengths(w)
        .into_iter()
        .find(|&l| l < w.len())
        .unwrap_or(0)
}

pub(crate) fn lps_len(w: &[u8]) -> usize {
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    lpp_len(&rev)
}

pub(crate) fn lpps_len(w: &[u8]) -> usize {
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    lppp_len(&rev)
}

/// Manacher table answering "is `w[i..j]` a palindrome?" in O(1).
pub(crate) struct PalTable {
    odd: Vec<usize>,  // odd[i]: max radius r with w[i-r+1..i+r] a palindrome
    even: Vec<usize>, // even[i]: max r with w[i-r..i+r] a palindrome
}

impl PalTable {
    pub fn new(w: &[u8]) -> Self {
        let n = w.len();
        let mut odd = vec![0usize; n];
        {
            let (mut l, mut r) = (0isize, -1isize);
            for i in 0..n as isize {
                let mut k = if i > r {
                    1
                } else {
                    (odd[(l + r - i) as usize] as isize).min(r - i + 1) as usize as isize
                };
                while i - k >= 0
                    && i + k < n as isize
                    && w[(i - k) as usize] == w[(i + k) as usize]
                {
                    k += 1;
                }
                odd[i as usize] = k as usize;
                if i + k - 1 > r {
                    l = i - k + 1;
                    r = i + k - 1;
                }
            }
        }
        let mut even = vec![0usize; n];
        {
            let (mut l, mut r) = (0isize, -1isize);
            for i in 0..n as isize {
                let mut k = if i > r {
                    0
                } else {
                    (even[(l + r - i + 1) as usize] as isize).min(r - i + 1) as usize as isize
                };
                while i - k - 1 >= 0
                    && i + k < n as isize
                    && w[(i - k - 1) as usize] == w[(i + k) as usize]
                {
                    k += 1;
                }
                even[i as usize] = k as usize;
                if i + k - 1 > r {
                    l = i - k;
                    r = i + k - 1;
                }
            }
        }
        PalTable { odd, even }
    }

    /// Is `w[i..j]` a palindrome? ε and single letters count.
    pub fn is_palindrome(&self, i: usize, j: usize) -> bool {
        debug_assert!(i <= j && j <= self.odd.len());
        let len = j - i;
        if len <= 1 {
            return true;
        }
        if len % 2 == 1 {
            let c = (i + j) / 2;
            self.odd[c] >= len / 2 + 1
        } else {
            let c = (i + j) / 2;
            self.even[c] >= len / 2
        }
    }
}
