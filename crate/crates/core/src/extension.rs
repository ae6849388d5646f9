//! Standard extensions of rich words, flexed points, and the forced
//! extension walk that yields ω: while exactly one letter keeps the word
//! rich, append it; stop at the first word extendable in two ways.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pal_index::PalIndex;
use crate::richness::{extension_letters, rich_index};
use crate::word::{self, Alphabet, Side, Word};

/// Record of a forced extension walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionTrace {
    pub base: Word,
    /// Appended letters in order, each flagged as forced (the only rich
    /// extension at that point).
    pub steps: Vec<(u8, bool)>,
    pub omega: OmegaOutcome,
    /// Two distinct letters both extending the terminal word richly, when
    /// the walk found one.
    pub branch_witness: Option<(u8, u8)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaOutcome {
    Found(usize),
    /// The walk hit its budget while still forced. Under the length bound
    /// on ω this cannot happen with a budget of `|w|`; callers treat it as
    /// reportable, never as a silent clamp.
    BudgetExhausted,
}

#[derive(Serialize)]
struct TraceJson {
    base: String,
    omega: Option<usize>,
    path: String,
    branch_letters: Option<(String, String)>,
}

impl ExtensionTrace {
    pub fn path(&self) -> Word {
        self.steps.iter().map(|&(x, _)| x).collect()
    }

    pub fn to_json(&self, a: &Alphabet) -> serde_json::Value {
        let omega = match self.omega {
            OmegaOutcome::Found(n) => Some(n),
            OmegaOutcome::BudgetExhausted => None,
        };
        serde_json::to_value(TraceJson {
            base: a.render(&self.base),
            omega,
            path: a.render(&self.path()),
            branch_letters: self
                .branch_witness
                .map(|(x, y)| (a.render(&Word::from(vec![x])), a.render(&Word::from(vec![y])))),
        })
        .expect("trace serializes")
    }
}

/// A triple `(v, v̄, u)` for which `v·v̄·u` is a unique rich extension of
/// `v·v̄` and `v̄` is the longest proper palindromic suffix of `v·v̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTriple {
    pub v: Word,
    pub vbar: Word,
    pub u: Word,
}

impl GammaTriple {
    pub fn check(&self, a: &Alphabet) -> bool {
        gamma_check(&self.v, &self.vbar, &self.u, a)
    }
}

/// Iterated standard extension: on the right, append the letter `x` with
/// `x·lpps(w)` a suffix of `w`; on the left, prepend the letter `x` with
/// `lppp(w)·x` a prefix of `w`. Preserves richness. Rejects empty or
/// non-rich input.
pub fn std_ext(w: &Word, side: Side, steps: usize) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord("std_ext"));
    }
    match side {
        Side::Right => {
            let q = w.iter().copied().max().unwrap() as usize + 1;
            let mut ix = rich_index(w, q)?;
            for _ in 0..steps {
                let x = forced_letter(&ix);
                let created = ix.append(x).expect("symbol in range");
                debug_assert!(created, "standard extension preserves richness");
            }
            Ok(Word::from_slice(ix.word()))
        }
        Side::Left => {
            if !crate::richness::rich(w) {
                return Err(Error::NotRich);
            }
            let mut cur: Vec<u8> = w.to_vec();
            for _ in 0..steps {
                let l = word::lppp_len(&cur);
                let x = cur[l];
                cur.insert(0, x);
            }
            Ok(Word::from(cur))
        }
    }
}

/// The letter forced by the right standard extension rule for the indexed
/// word: the one preceding the final occurrence of its longest proper
/// palindromic suffix.
fn forced_letter(ix: &PalIndex) -> u8 {
    let w = ix.word();
    let l = ix.lpps_len().expect("nonempty");
    w[w.len() - 1 - l]
}

/// Prefixes `ux` of `v` (with `x` a single letter) that differ from the
/// right standard extension of `u`. Requires `v` rich with `|v| > 1`.
pub fn flexed_points(v: &Word) -> Result<BTreeSet<Word>> {
    if v.len() <= 1 {
        return Err(Error::InvalidArgument("flexed_points needs |v| > 1"));
    }
    let q = v.iter().copied().max().unwrap() as usize + 1;
    let mut ix = PalIndex::new(q);
    let mut out = BTreeSet::new();
    for (i, &x) in v.iter().enumerate() {
        if i >= 1 && x != forced_letter(&ix) {
            out.insert(Word::from_slice(&v[..=i]));
        }
        if !ix.append(x)? {
            return Err(Error::NotRich);
        }
    }
    Ok(out)
}

/// Does `w` have at least two distinct rich one-letter extensions over `a`?
pub fn two_way_extendable(w: &Word, a: &Alphabet) -> Result<bool> {
    Ok(crate::richness::rich_extension_letters(w, a)?.len() >= 2)
}

pub(crate) enum WalkEnd {
    Branch { steps: usize, letters: (u8, u8) },
    Exhausted { steps: usize },
}

/// Forced walk on an existing index: while exactly one letter keeps the
/// word rich, append it; stop at the first two-way-extendable word or when
/// `budget` steps have been taken. The index is left extended by the number
/// of steps reported. A rich word with no rich extension would contradict
/// the theory and is surfaced as an error.
pub(crate) fn forced_walk(ix: &mut PalIndex, budget: usize) -> Result<WalkEnd> {
    let mut steps = 0;
    loop {
        let letters = extension_letters(ix);
        match letters.len() {
            0 => {
                return Err(Error::Falsification(format!(
                    "rich word of length {} admits no rich extension",
                    ix.len()
                )))
            }
            1 => {
                if steps == budget {
                    return Ok(WalkEnd::Exhausted { steps });
                }
                ix.append(letters[0]).expect("symbol in range");
                steps += 1;
            }
            _ => {
                return Ok(WalkEnd::Branch {
                    steps,
                    letters: (letters[0], letters[1]),
                })
            }
        }
    }
}

/// ω(w): length of the shortest `u` with `wu` rich and two-way extendable,
/// computed by walking the forced path. `budget` bounds the walk; `|w|`
/// always suffices. Requires `w` rich and nonempty.
pub fn omega(w: &Word, a: &Alphabet, budget: usize) -> Result<ExtensionTrace> {
    if w.is_empty() {
        return Err(Error::EmptyWord("omega"));
    }
    let mut ix = rich_index(w, a.size())?;
    let end = forced_walk(&mut ix, budget)?;
    let (omega, branch_witness, steps) = match end {
        WalkEnd::Branch { steps, letters } => {
            (OmegaOutcome::Found(steps), Some(letters), steps)
        }
        WalkEnd::Exhausted { steps } => (OmegaOutcome::BudgetExhausted, None, steps),
    };
    let path = ix.word()[w.len()..w.len() + steps].to_vec();
    Ok(ExtensionTrace {
        base: w.clone(),
        steps: path.into_iter().map(|x| (x, true)).collect(),
        omega,
        branch_witness,
    })
}

/// Is `vu` a unique rich extension of `v`: no prefix `v·t` of `vu` minus
/// its last letter, with `t` a prefix of `u`, is two-way extendable.
/// Requires `v`, `u` nonempty and `v`, `vu` rich.
pub fn unique_rich_extension(v: &Word, u: &Word, a: &Alphabet) -> Result<bool> {
    if v.is_empty() || u.is_empty() {
        return Err(Error::EmptyWord("unique_rich_extension"));
    }
    let mut ix = rich_index(v, a.size())?;
    for &x in u.iter() {
        if extension_letters(&mut ix).len() >= 2 {
            return Ok(false);
        }
        if !ix.append(x)? {
            return Err(Error::NotRich);
        }
    }
    Ok(true)
}

/// Membership test for the auxiliary triple set: `v·v̄·u` must be a unique
/// rich extension of `v·v̄` and `v̄` the longest proper palindromic suffix
/// of `v·v̄`. Any failed condition yields `false`, never an error.
pub fn gamma_check(v: &Word, vbar: &Word, u: &Word, a: &Alphabet) -> bool {
    if v.is_empty() || vbar.is_empty() || u.is_empty() {
        return false;
    }
    let w = v.concat(vbar);
    if word::lpps_len(&w) != vbar.len() {
        return false;
    }
    matches!(unique_rich_extension(&w, u, a), Ok(true))
}
