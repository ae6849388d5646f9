use richwords::richness::{complete_returns, is_rich, reversal_closure_check, rich_extension_letters};
use richwords::{naive, Alphabet, PalIndex, Word};

#[test]
fn rich_iff_suffixes_have_unioccurrent_palindromic_prefix() {
    // exhaustive over binary words up to length 12
    for n in 0..=12usize {
        for v in naive::all_words(2, n) {
            let by_prefixes = is_rich(&Word::from(v.clone())).verdict;
            let by_suffixes = (0..v.len()).all(|i| {
                let s = &v[i..];
                naive::occ(s, naive::lpp(s)) == 1
            });
            assert_eq!(by_prefixes, by_suffixes, "{v:?}");
        }
    }
}

#[test]
fn rich_iff_maximal_palindrome_count_small() {
    for n in 0..=11usize {
        for v in naive::all_words(2, n) {
            let cert = is_rich(&Word::from(v.clone()));
            assert_eq!(cert.verdict, naive::distinct_palindromes(&v) == n + 1, "{v:?}");
        }
    }
}

#[test]
fn complete_returns_to_palindromic_factors_are_palindromes() {
    // every rich binary word up to length 10, every palindromic factor
    for n in 1..=10usize {
        for v in naive::all_words(2, n) {
            let w = Word::from(v.clone());
            if !is_rich(&w).verdict {
                continue;
            }
            let ix = PalIndex::from_word(2, &v).unwrap();
            let pals: Vec<Word> = ix.palindromes().map(Word::from_slice).collect();
            for u in pals {
                for r in complete_returns(&w, &u).unwrap() {
                    assert!(r.is_palindrome(), "word {v:?} factor {u:?} return {r:?}");
                }
            }
        }
    }
}

#[test]
fn rich_words_always_extend() {
    let a = Alphabet::canonical(2).unwrap();
    for n in 0..=12usize {
        for v in naive::all_words(2, n) {
            let w = Word::from(v.clone());
            if is_rich(&w).verdict {
                assert!(
                    !rich_extension_letters(&w, &a).unwrap().is_empty(),
                    "{v:?}"
                );
            }
        }
    }
}

#[test]
fn reversal_closure_holds_for_rich_words() {
    for n in 0..=10usize {
        for v in naive::all_words(2, n) {
            let w = Word::from(v.clone());
            if is_rich(&w).verdict {
                assert!(reversal_closure_check(&w), "{v:?}");
            }
        }
    }
}
