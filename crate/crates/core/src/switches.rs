//! Switches and the switch palindromic closure. A switch is a word `xpy`
//! with distinct single letters `x`, `y` around a (possibly empty)
//! palindrome `p`; its closure replaces the last letter by the first.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{self, PalTable, Word};

/// A deduplicated set of switches together with one occurrence position per
/// element in the source word, kept sorted by (length, lexicographic).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwitchSet {
    entries: Vec<(Word, usize)>,
}

impl SwitchSet {
    fn from_occurrences(map: std::collections::BTreeMap<Word, usize>) -> Self {
        let mut entries: Vec<(Word, usize)> = map.into_iter().collect();
        entries.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SwitchSet { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.entries.iter().any(|(e, _)| e == w)
    }

    /// Elements sorted by (length, lexicographic).
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().map(|(w, _)| w)
    }

    /// `(switch, occurrence position)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = &(Word, usize)> {
        self.entries.iter()
    }

    pub fn to_set(&self) -> BTreeSet<Word> {
        self.words().cloned().collect()
    }
}

/// Is `w` of the form `xpy` with `x != y` and `p` a palindrome?
pub fn is_switch(w: &Word) -> bool {
    w.len() >= 2
        && w[0] != w[w.len() - 1]
        && word::PalTable::new(w).is_palindrome(1, w.len() - 1)
}

/// All switch factors of `v`, deduplicated by value.
pub fn switches_of(v: &Word) -> SwitchSet {
    let table = PalTable::new(v);
    let mut map = std::collections::BTreeMap::new();
    for i in 0..v.len() {
        for j in i + 2..=v.len() {
            if v[i] != v[j - 1] && table.is_palindrome(i + 1, j - 1) {
                map.entry(Word::from_slice(&v[i..j])).or_insert(i);
            }
        }
    }
    SwitchSet::from_occurrences(map)
}

/// Switches of `vu` that are suffixes of `v·t` for some nonempty prefix `t`
/// of `u`. `u` must be nonempty. Positions refer to `vu`.
pub fn switch_suf(v: &Word, u: &Word) -> Result<SwitchSet> {
    if u.is_empty() {
        return Err(Error::EmptyWord("switch_suf"));
    }
    let vu = v.concat(u);
    let table = PalTable::new(&vu);
    let mut map = std::collections::BTreeMap::new();
    for e in v.len() + 1..=vu.len() {
        for i in 0..e - 1 {
            if vu[i] != vu[e - 1] && table.is_palindrome(i + 1, e - 1) {
                map.entry(Word::from_slice(&vu[i..e])).or_insert(i);
            }
        }
    }
    Ok(SwitchSet::from_occurrences(map))
}

/// Elements of `s` that are not proper factors of another element.
pub fn reduced(s: &BTreeSet<Word>) -> BTreeSet<Word> {
    s.iter()
        .filter(|w| {
            !s.iter()
                .any(|other| other != *w && other.contains_factor(w))
        })
        .cloned()
        .collect()
}

/// Switch palindromic closure: `xpy` becomes `xpx`. Rejects non-switches.
pub fn swc(t: &Word) -> Result<Word> {
    if !is_switch(t) {
        return Err(Error::NotASwitch);
    }
    let mut v = t.to_vec();
    let first = v[0];
    *v.last_mut().unwrap() = first;
    Ok(Word::from(v))
}

/// Reduction of the set of closures of the given switches. Rejects any
/// non-switch element.
pub fn swc_set<'a>(words: impl IntoIterator<Item = &'a Word>) -> Result<BTreeSet<Word>> {
    let mut closures = BTreeSet::new();
    for w in words {
        closures.insert(swc(w)?);
    }
    Ok(reduced(&closures))
}

/// Is `u` reverse-unioccurrent in `w`: the occurrence counts summed over
/// the set `{u, u^R}` equal one (a palindromic `u` is counted once)?
pub fn reverse_unioccurrent(w: &Word, u: &Word) -> Result<bool> {
    if w.is_empty() || u.is_empty() {
        return Err(Error::EmptyWord("reverse_unioccurrent"));
    }
    let mut total = word::count_occurrences(w, u);
    let rev = u.reverse();
    if rev != *u {
        total += word::count_occurrences(w, &rev);
    }
    Ok(total == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive;
    use crate::word::Alphabet;

    fn a3() -> Alphabet {
        Alphabet::canonical(3).unwrap()
    }

    fn w(s: &str) -> Word {
        a3().parse(s).unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn is_switch_examples() {
        assert!(is_switch(&w("01"))); // p = ε
        assert!(is_switch(&w("11012")));
        assert!(!is_switch(&w("00"))); // ends agree
        assert!(!is_switch(&w("0")));
    }

    #[test]
    fn is_switch_inner_palindrome_required() {
        assert!(is_switch(&w("011"))); // p = 1
        assert!(!is_switch(&w("0101"))); // p = 10 not a palindrome
    }

    #[test]
    fn switches_of_worked_example() {
        let got = switches_of(&w("010011012")).to_set();
        let expect = set(&[
            "01", "10", "100", "110", "011", "001", "010011", "001101", "12", "012", "11012",
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn switches_of_edges() {
        assert!(switches_of(&w("00")).is_empty());
        let got = switches_of(&w("01"));
        assert_eq!(got.to_set(), set(&["01"]));
        assert_eq!(got.iter().next().unwrap().1, 0);
    }

    #[test]
    fn switches_of_matches_naive_small() {
        for n in 0..=9usize {
            for v in naive::all_words(2, n) {
                let word = Word::from(v.clone());
                let got: BTreeSet<Vec<u8>> =
                    switches_of(&word).words().map(|x| x.to_vec()).collect();
                assert_eq!(got, naive::switches(&v), "{v:?}");
            }
        }
    }

    #[test]
    fn switch_suf_worked_example() {
        // the definitions also admit the suffix 01 of v·1, which the
        // source example's printed set omits
        let got = switch_suf(&w("0100110"), &w("12")).unwrap().to_set();
        let expect = set(&["01", "001101", "12", "012", "11012"]);
        assert_eq!(got, expect);
    }

    #[test]
    fn switch_suf_small_cases() {
        let got = switch_suf(&w("00"), &w("1")).unwrap().to_set();
        assert_eq!(got, set(&["01", "001"]));
        assert!(switch_suf(&w("0"), &w("0")).unwrap().is_empty());
        assert!(switch_suf(&w("0"), &w("")).is_err());
    }

    #[test]
    fn switch_suf_agrees_with_definition_small() {
        // switchSuf(v, u) = switch(vu) ∩ SuffixUnion(v, u), checked
        // directly on all binary (v, u) with |v| <= 5, 1 <= |u| <= 3
        for vn in 0..=5usize {
            for v in naive::all_words(2, vn) {
                for un in 1..=3usize {
                    for u in naive::all_words(2, un) {
                        let vw = Word::from(v.clone());
                        let uw = Word::from(u.clone());
                        let got = switch_suf(&vw, &uw).unwrap().to_set();
                        let union = crate::word::suffix_union(&vw, &uw).unwrap();
                        let expect: BTreeSet<Word> = switches_of(&vw.concat(&uw))
                            .words()
                            .filter(|s| union.contains(*s))
                            .cloned()
                            .collect();
                        assert_eq!(got, expect, "v={v:?} u={u:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_examples() {
        let got = reduced(&set(&["001100", "11", "010", "11011"]));
        assert_eq!(got, set(&["001100", "010", "11011"]));
        assert_eq!(reduced(&BTreeSet::new()), BTreeSet::new());
        let single = set(&["0101"]);
        assert_eq!(reduced(&single), single);
    }

    #[test]
    fn swc_examples() {
        assert_eq!(swc(&w("001101")).unwrap(), w("001100"));
        assert_eq!(swc(&w("12")).unwrap(), w("11"));
        assert_eq!(swc(&w("012")).unwrap(), w("010"));
        assert_eq!(swc(&w("11012")).unwrap(), w("11011"));
        assert!(matches!(swc(&w("00")), Err(Error::NotASwitch)));
    }

    #[test]
    fn swc_set_examples() {
        let suf = switch_suf(&w("0100110"), &w("12")).unwrap();
        let got = swc_set(suf.words()).unwrap();
        assert_eq!(got, set(&["001100", "010", "11011"]));

        assert_eq!(swc_set([].iter()).unwrap(), BTreeSet::new());
        let single = [w("01")];
        assert_eq!(swc_set(single.iter()).unwrap(), set(&["00"]));
        let bad = [w("00")];
        assert!(swc_set(bad.iter()).is_err());
    }

    #[test]
    fn reverse_unioccurrent_examples() {
        assert!(reverse_unioccurrent(&w("010011012"), &w("11012")).unwrap());
        assert!(reverse_unioccurrent(&w("0110"), &w("11")).unwrap()); // palindromic u counted once
        assert!(!reverse_unioccurrent(&w("0101"), &w("01")).unwrap()); // occ 2 + 1
        assert!(reverse_unioccurrent(&w(""), &w("1")).is_err());
        assert!(reverse_unioccurrent(&w("1"), &w("")).is_err());
    }
}
