//! Richness predicates with certificates, rich one-letter extensions, and
//! complete returns.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pal_index::PalIndex;
use crate::word::{self, Alphabet, Word};

/// Per-prefix evidence for a richness verdict. For each nonempty prefix the
/// certificate records the span of its longest palindromic suffix in the
/// word and whether that suffix is unioccurrent in the prefix; a word is
/// rich iff every entry is unioccurrent. Spans are `(start, end)` index
/// pairs, not copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichnessCertificate {
    pub word: Word,
    pub verdict: bool,
    /// `(start, end)` of the longest palindromic suffix of each prefix,
    /// entry `i` describing the prefix of length `i + 1`.
    pub lps_spans: Vec<(usize, usize)>,
    pub unioccurrent: Vec<bool>,
    /// Length of the shortest non-conforming prefix, present iff the word
    /// is not rich.
    pub first_failure: Option<usize>,
}

#[derive(Serialize)]
struct CertificateJson {
    word: String,
    rich: bool,
    first_failure: Option<usize>,
    lps_per_prefix: Vec<(usize, usize)>,
}

impl RichnessCertificate {
    pub fn to_json(&self, a: &Alphabet) -> serde_json::Value {
        serde_json::to_value(CertificateJson {
            word: a.render(&self.word),
            rich: self.verdict,
            first_failure: self.first_failure,
            lps_per_prefix: self.lps_spans.clone(),
        })
        .expect("certificate serializes")
    }
}

fn index_alphabet_size(w: &Word) -> usize {
    w.iter().copied().max().map_or(1, |m| m as usize + 1)
}

/// Richness test in one left-to-right pass: a word is rich iff every prefix
/// has a unioccurrent longest palindromic suffix. ε is rich.
pub fn is_rich(w: &Word) -> RichnessCertificate {
    let mut ix = PalIndex::new(index_alphabet_size(w));
    let mut lps_spans = Vec::with_capacity(w.len());
    let mut unioccurrent = Vec::with_capacity(w.len());
    let mut first_failure = None;
    for (i, &x) in w.iter().enumerate() {
        let created = ix.append(x).expect("symbol within computed range");
        lps_spans.push((i + 1 - ix.lps_len(), i + 1));
        unioccurrent.push(created);
        if !created && first_failure.is_none() {
            first_failure = Some(i + 1);
        }
    }
    RichnessCertificate {
        word: w.clone(),
        verdict: first_failure.is_none(),
        lps_spans,
        unioccurrent,
        first_failure,
    }
}

/// Convenience wrapper for the verdict alone.
pub fn rich(w: &Word) -> bool {
    is_rich(w).verdict
}

/// Builds an index over `w`, failing with [`Error::NotRich`] if some prefix
/// lacks a unioccurrent palindromic suffix. Shared by the extension walks.
pub(crate) fn rich_index(w: &Word, q: usize) -> Result<PalIndex> {
    let mut ix = PalIndex::new(q);
    for &x in w.iter() {
        if !ix.append(x)? {
            return Err(Error::NotRich);
        }
    }
    Ok(ix)
}

/// Letters of the index's alphabet whose append keeps the word rich,
/// ascending. The index is left unchanged.
pub(crate) fn extension_letters(ix: &mut PalIndex) -> Vec<u8> {
    let mut out = Vec::new();
    for x in 0..ix.q() as u8 {
        let created = ix.append(x).expect("symbol in range");
        ix.rollback(1).expect("just appended");
        if created {
            out.push(x);
        }
    }
    out
}

/// All letters `x` of `a` such that `wx` is rich; nonempty for rich `w`.
/// Rejects non-rich `w`.
pub fn rich_extension_letters(w: &Word, a: &Alphabet) -> Result<Vec<u8>> {
    let mut ix = rich_index(w, a.size())?;
    Ok(extension_letters(&mut ix))
}

/// All factors of `w` containing exactly two occurrences of `u`, one as a
/// prefix and one as a suffix. `u` must be a nonempty factor of `w`.
pub fn complete_returns(w: &Word, u: &Word) -> Result<BTreeSet<Word>> {
    if u.is_empty() {
        return Err(Error::EmptyWord("complete_returns"));
    }
    let positions = word::occurrence_positions(w, u);
    if positions.is_empty() {
        return Err(Error::NotAFactor);
    }
    Ok(positions
        .windows(2)
        .map(|p| Word::from_slice(&w[p[0]..p[1] + u.len()]))
        .collect())
}

/// Do all factors `p` of `w` satisfy that both `p` and its reversal are
/// rich? Holds for every rich word; exposed as a test probe.
pub fn reversal_closure_check(w: &Word) -> bool {
    let mut seen = BTreeSet::new();
    for f in w.factors() {
        if seen.insert(f) {
            let p = Word::from_slice(f);
            if !rich(&p) || !rich(&p.reverse()) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive;

    fn a3() -> Alphabet {
        Alphabet::canonical(3).unwrap()
    }

    fn w(s: &str) -> Word {
        a3().parse(s).unwrap()
    }

    #[test]
    fn richness_verdicts() {
        assert!(is_rich(&w("00101")).verdict);
        assert!(!is_rich(&w("200101100")).verdict);
        assert!(!is_rich(&w("200101102")).verdict);
        assert!(is_rich(&w("200101101")).verdict);
        assert!(is_rich(&w("")).verdict);
    }

    #[test]
    fn certificate_structure() {
        let cert = is_rich(&w("200101100"));
        assert!(!cert.verdict);
        let ff = cert.first_failure.unwrap();
        // the shortest failing prefix per the naive oracle
        let flags = naive::unioccurrent_lps_flags(&cert.word);
        assert_eq!(ff, flags.iter().position(|&b| !b).unwrap() + 1);
        assert_eq!(cert.unioccurrent, flags);
        // spans really delimit each prefix's longest palindromic suffix
        for (i, &(s, e)) in cert.lps_spans.iter().enumerate() {
            assert_eq!(e, i + 1);
            assert_eq!(&cert.word[s..e], naive::lps(&cert.word[..=i]));
        }

        let cert = is_rich(&w("00101"));
        assert!(cert.verdict);
        assert_eq!(cert.first_failure, None);
    }

    #[test]
    fn certificate_json_shape() {
        let a = a3();
        let v = is_rich(&w("01")).to_json(&a);
        assert_eq!(v["word"], "01");
        assert_eq!(v["rich"], true);
        assert!(v["first_failure"].is_null());
        assert_eq!(v["lps_per_prefix"][1][0], 1);
        assert_eq!(v["lps_per_prefix"][1][1], 2);
    }

    #[test]
    fn extension_letters_examples() {
        let a = a3();
        assert_eq!(rich_extension_letters(&w("00101"), &a).unwrap(), vec![0, 1, 2]);
        assert_eq!(rich_extension_letters(&w("20010110"), &a).unwrap(), vec![1]);
        let a2 = Alphabet::canonical(2).unwrap();
        assert_eq!(rich_extension_letters(&w("0"), &a2).unwrap(), vec![0, 1]);
        assert!(matches!(
            rich_extension_letters(&w("200101100"), &a),
            Err(Error::NotRich)
        ));
    }

    #[test]
    fn complete_returns_examples() {
        let got = complete_returns(&w("0110"), &w("0")).unwrap();
        assert_eq!(got, [w("0110")].into_iter().collect());

        let got = complete_returns(&w("00"), &w("0")).unwrap();
        assert_eq!(got, [w("00")].into_iter().collect());

        // returns to a palindromic factor of a rich word are palindromes
        let host = w("01101101");
        assert!(is_rich(&host).verdict);
        for r in complete_returns(&host, &w("11")).unwrap() {
            assert!(r.is_palindrome());
        }

        assert!(matches!(
            complete_returns(&w("01"), &w("2")),
            Err(Error::NotAFactor)
        ));
    }

    #[test]
    fn reversal_closure_examples() {
        assert!(reversal_closure_check(&w("00101")));
        assert!(reversal_closure_check(&w("0110110")));
    }

    #[test]
    fn rich_iff_naive_small() {
        for n in 0..=10usize {
            for v in naive::all_words(2, n) {
                let word = Word::from(v.clone());
                assert_eq!(is_rich(&word).verdict, naive::is_rich(&v), "{v:?}");
            }
        }
    }
}
