use proptest::prelude::*;

use richwords::word::{affix, occ, suffix_union, AffixKind, Word};
use richwords::{naive, Alphabet};

fn word_strategy(q: u8, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..q, 0..=max_len)
}

proptest! {
    #[test]
    fn reverse_is_an_involution(v in word_strategy(4, 64)) {
        let w = Word::from(v);
        prop_assert_eq!(w.reverse().reverse(), w);
    }

    #[test]
    fn palindrome_iff_equal_to_reversal(v in word_strategy(3, 48)) {
        let w = Word::from(v);
        prop_assert_eq!(w.is_palindrome(), w == w.reverse());
    }

    #[test]
    fn occ_matches_naive_scan(u in word_strategy(3, 60), v in word_strategy(3, 6)) {
        prop_assume!(!v.is_empty());
        let uw = Word::from(u.clone());
        let vw = Word::from(v.clone());
        prop_assert_eq!(occ(&uw, &vw).unwrap(), naive::occ(&u, &v));
    }

    #[test]
    fn affixes_match_naive_scan(v in word_strategy(3, 48)) {
        let w = Word::from(v.clone());
        let lps = affix(&w, AffixKind::Lps).unwrap();
        let lpp = affix(&w, AffixKind::Lpp).unwrap();
        prop_assert_eq!(lps.letters(), naive::lps(&v));
        prop_assert_eq!(lpp.letters(), naive::lpp(&v));
        if !v.is_empty() {
            let lpps = affix(&w, AffixKind::Lpps).unwrap();
            let lppp = affix(&w, AffixKind::Lppp).unwrap();
            prop_assert_eq!(lpps.letters(), naive::lpps(&v));
            prop_assert_eq!(lppp.letters(), naive::lppp(&v));
        }
    }

    #[test]
    fn lps_is_longest_palindromic_suffix(v in word_strategy(2, 40)) {
        let w = Word::from(v.clone());
        let lps = affix(&w, AffixKind::Lps).unwrap();
        prop_assert!(lps.len() <= w.len());
        prop_assert!(lps.is_palindrome());
        prop_assert!(w.has_suffix(&lps));
        for longer in lps.len() + 1..=w.len() {
            prop_assert!(!naive::is_palindrome(&v[v.len() - longer..]));
        }
    }

    #[test]
    fn suffix_union_contains_each_suffix_set(
        v in word_strategy(2, 12),
        u in word_strategy(2, 4),
    ) {
        prop_assume!(!u.is_empty());
        let vw = Word::from(v.clone());
        let uw = Word::from(u.clone());
        let got = suffix_union(&vw, &uw).unwrap();
        for t in 1..=u.len() {
            let mut vt = v.clone();
            vt.extend_from_slice(&u[..t]);
            for i in 0..=vt.len() {
                prop_assert!(got.contains(&Word::from_slice(&vt[i..])));
            }
        }
    }
}

#[test]
fn occ_matches_naive_exhaustively_binary() {
    // every nonempty factor of every binary word up to length 12
    for n in 1..=12usize {
        for u in naive::all_words(2, n) {
            let uw = Word::from(u.clone());
            let mut seen = std::collections::BTreeSet::new();
            for i in 0..u.len() {
                for j in i + 1..=u.len() {
                    if seen.insert(u[i..j].to_vec()) {
                        let v = Word::from_slice(&u[i..j]);
                        assert_eq!(occ(&uw, &v).unwrap(), naive::occ(&u, &u[i..j]));
                    }
                }
            }
        }
    }
}

#[test]
fn alphabet_round_trips_symbol_order() {
    let a = Alphabet::new("210".chars()).unwrap();
    let w = a.parse("2101").unwrap();
    assert_eq!(w.letters(), &[0, 1, 2, 1]);
    assert_eq!(a.render(&w), "2101");
}
