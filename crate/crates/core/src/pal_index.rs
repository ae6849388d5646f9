//! Incremental palindromic-factor index: one node per distinct nonempty
//! palindromic factor, two sentinel roots of conceptual lengths -1 and 0,
//! suffix links to the longest proper palindromic suffix, and per-node
//! transition arrays indexed by symbol. Appends are amortized constant;
//! every append is journaled so it can be rolled back exactly.

use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;
const ROOT_NEG: u32 = 0; // conceptual length -1
const ROOT_ZERO: u32 = 1; // the empty palindrome

#[derive(Debug, Clone, PartialEq, Eq)]
struct JournalEntry {
    prev_current: u32,
    /// Node whose transition slot was filled when a node was created by
    /// this append; `NONE` if the append created nothing.
    created_parent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalIndex {
    q: usize,
    len: Vec<i32>,
    link: Vec<u32>,
    /// End position (exclusive) of the first occurrence of each node's
    /// palindrome in `word`; lets callers materialize the palindrome.
    end: Vec<u32>,
    /// Transition table, `next[node * q + symbol]`.
    next: Vec<u32>,
    word: Vec<u8>,
    current: u32,
    journal: Vec<JournalEntry>,
}

impl PalIndex {
    pub fn new(q: usize) -> Self {
        assert!(q >= 1, "alphabet size must be positive");
        PalIndex {
            q,
            len: vec![-1, 0],
            link: vec![ROOT_NEG, ROOT_NEG],
            end: vec![0, 0],
            next: vec![NONE; 2 * q],
            word: Vec::new(),
            current: ROOT_ZERO,
            journal: Vec::new(),
        }
    }

    /// Builds an index for `w` in one pass.
    pub fn from_word(q: usize, w: &[u8]) -> Result<Self> {
        let mut ix = PalIndex::new(q);
        for &x in w {
            ix.append(x)?;
        }
        Ok(ix)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Letters appended so far.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Number of distinct palindromic factors of the indexed word,
    /// including ε.
    pub fn distinct_palindromes(&self) -> usize {
        self.len.len() - 1
    }

    /// Length of the longest palindromic suffix of the indexed word.
    pub fn lps_len(&self) -> usize {
        self.len[self.current as usize].max(0) as usize
    }

    /// Length of the longest proper palindromic suffix; `None` for the
    /// empty word.
    pub fn lpps_len(&self) -> Option<usize> {
        if self.word.is_empty() {
            return None;
        }
        let c = self.current as usize;
        let l = if self.len[c] as usize == self.word.len() {
            self.len[self.link[c] as usize]
        } else {
            self.len[c]
        };
        Some(l.max(0) as usize)
    }

    /// The distinct nonempty palindromic factors, in creation order.
    pub fn palindromes(&self) -> impl Iterator<Item = &[u8]> {
        (2..self.len.len()).map(move |i| {
            let e = self.end[i] as usize;
            &self.word[e - self.len[i] as usize..e]
        })
    }

    /// Walks the suffix-link chain from `node` to the first palindrome
    /// that `x` extends at position `pos` (the index of the letter being
    /// appended). The length -1 root always matches.
    fn extendable(&self, mut node: u32, pos: usize, x: u8) -> u32 {
        loop {
            let l = self.len[node as usize];
            let before = pos as i64 - 1 - l as i64;
            if before >= 0 && self.word[before as usize] == x {
                return node;
            }
            node = self.link[node as usize];
        }
    }

    /// Extends the indexed word by `x`. Returns `true` iff the new longest
    /// palindromic suffix did not occur before, i.e. iff it is unioccurrent
    /// in the extended word.
    pub fn append(&mut self, x: u8) -> Result<bool> {
        if (x as usize) >= self.q {
            return Err(Error::SymbolOutOfRange {
                index: x,
                q: self.q,
            });
        }
        self.word.push(x);
        let pos = self.word.len() - 1;
        let p = self.extendable(self.current, pos, x);
        let slot = p as usize * self.q + x as usize;
        let prev_current = self.current;
        if self.next[slot] != NONE {
            self.current = self.next[slot];
            self.journal.push(JournalEntry {
                prev_current,
                created_parent: NONE,
            });
            return Ok(false);
        }
        let new_len = self.len[p as usize] + 2;
        let lnk = if new_len == 1 {
            ROOT_ZERO
        } else {
            let p2 = self.extendable(self.link[p as usize], pos, x);
            self.next[p2 as usize * self.q + x as usize]
        };
        let id = self.len.len() as u32;
        self.len.push(new_len);
        self.link.push(lnk);
        self.end.push(self.word.len() as u32);
        self.next.extend(std::iter::repeat(NONE).take(self.q));
        self.next[slot] = id;
        self.current = id;
        self.journal.push(JournalEntry {
            prev_current,
            created_parent: p,
        });
        Ok(true)
    }

    /// Undoes the last `steps` appends; the structure is restored exactly.
    pub fn rollback(&mut self, steps: usize) -> Result<()> {
        if steps > self.journal.len() {
            return Err(Error::RollbackTooFar {
                steps,
                available: self.journal.len(),
            });
        }
        for _ in 0..steps {
            let entry = self.journal.pop().unwrap();
            let x = self.word.pop().unwrap();
            if entry.created_parent != NONE {
                self.len.pop();
                self.link.pop();
                self.end.pop();
                self.next.truncate(self.next.len() - self.q);
                self.next[entry.created_parent as usize * self.q + x as usize] = NONE;
            }
            self.current = entry.prev_current;
        }
        Ok(())
    }
}
