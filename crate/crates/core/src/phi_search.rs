//! Exhaustive enumeration of rich words by pruned depth-first extension,
//! and φ(n): the maximum of ω over all rich words of a given length. Work
//! is partitioned by fixed-length prefixes; each worker owns a private
//! index, and results merge by max-then-lexicographic reduction so the
//! outcome is independent of the shard count.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{forced_walk, WalkEnd};
use crate::pal_index::PalIndex;
use crate::word::{Alphabet, Word};

/// Witnesses kept per result; all argmax words are found, the first
/// `WITNESS_CAP` in lexicographic order are reported.
pub const WITNESS_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq)]
pub struct PhiResult {
    pub n: usize,
    pub q: usize,
    /// max over rich words of length `n` of ω(w); always `<= n`.
    pub phi: usize,
    /// Argmax words, sorted lexicographically, at most [`WITNESS_CAP`].
    pub witnesses: Vec<Word>,
    /// Number of rich words of length `n`.
    pub enumerated: u64,
    pub wall_time_s: f64,
}

impl PhiResult {
    pub fn to_record(&self, a: &Alphabet) -> PhiRecord {
        PhiRecord {
            n: self.n,
            q: self.q,
            phi: self.phi,
            witnesses: self.witnesses.iter().map(|w| a.render(w)).collect(),
            enumerated: self.enumerated,
            wall_time_s: self.wall_time_s,
        }
    }
}

/// One cache line: the file format is UTF-8, one JSON object per line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhiRecord {
    pub n: usize,
    pub q: usize,
    pub phi: usize,
    pub witnesses: Vec<String>,
    pub enumerated: u64,
    pub wall_time_s: f64,
}

fn try_dfs(
    ix: &mut PalIndex,
    target: usize,
    leaf: &mut impl FnMut(&mut PalIndex) -> Result<()>,
) -> Result<()> {
    if ix.len() == target {
        return leaf(ix);
    }
    for x in 0..ix.q() as u8 {
        if ix.append(x).expect("symbol in range") {
            try_dfs(ix, target, leaf)?;
        }
        ix.rollback(1).expect("append preceded");
    }
    Ok(())
}

/// Visits every rich word of length `n` over `a` exactly once, in
/// lexicographic order, pruning any prefix whose append fails to create a
/// new palindrome. Returns the visit count.
pub fn enumerate_rich(n: usize, a: &Alphabet, mut visit: impl FnMut(&[u8])) -> u64 {
    let mut ix = PalIndex::new(a.size());
    let mut count = 0u64;
    try_dfs(&mut ix, n, &mut |ix| {
        count += 1;
        visit(ix.word());
        Ok(())
    })
    .expect("visitor is infallible");
    count
}

/// All words of length `len` over `q` symbols in lexicographic order.
fn words_of_length(q: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * q);
        for w in &out {
            for x in 0..q as u8 {
                let mut v = w.clone();
                v.push(x);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[derive(Default)]
struct ShardOut {
    best: Option<(usize, Vec<Word>)>,
    enumerated: u64,
}

impl ShardOut {
    fn record(&mut self, omega: usize, word: Word) {
        match &mut self.best {
            Some((max, witnesses)) => {
                if omega > *max {
                    *max = omega;
                    witnesses.clear();
                    witnesses.push(word);
                } else if omega == *max && witnesses.len() < WITNESS_CAP {
                    witnesses.push(word);
                }
            }
            None => self.best = Some((omega, vec![word])),
        }
    }
}

fn run_shard(
    n: usize,
    a: &Alphabet,
    prefixes: &[Vec<u8>],
    widx: usize,
    shards: usize,
) -> Result<ShardOut> {
    let mut out = ShardOut::default();
    let mut ix = PalIndex::new(a.size());
    'prefixes: for p in prefixes.iter().skip(widx).step_by(shards) {
        debug_assert_eq!(ix.len(), 0);
        for (i, &x) in p.iter().enumerate() {
            if !ix.append(x)? {
                ix.rollback(i + 1)?;
                continue 'prefixes; // no rich word extends this prefix
            }
        }
        let result = try_dfs(&mut ix, n, &mut |ix| {
            out.enumerated += 1;
            match forced_walk(ix, n)? {
                WalkEnd::Branch { steps, .. } => {
                    ix.rollback(steps)?;
                    out.record(steps, Word::from_slice(ix.word()));
                    Ok(())
                }
                WalkEnd::Exhausted { steps } => {
                    ix.rollback(steps)?;
                    Err(Error::Falsification(format!(
                        "rich word {} has omega > its length {n}",
                        a.render(&Word::from_slice(ix.word()))
                    )))
                }
            }
        });
        ix.rollback(p.len())?;
        result?;
    }
    Ok(out)
}

/// φ(n) over the alphabet `a`, searched with `shards` parallel workers.
/// The result is deterministic and independent of `shards`. A witness with
/// ω exceeding its length aborts with a falsification error rather than
/// being clamped.
pub fn phi(n: usize, a: &Alphabet, shards: usize) -> Result<PhiResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("phi needs n >= 1"));
    }
    if shards == 0 {
        return Err(Error::InvalidArgument("phi needs shards >= 1"));
    }
    let start = Instant::now();
    let q = a.size();

    let mut prefix_len = 0usize;
    let mut combos = 1usize;
    while combos < shards && prefix_len < n {
        combos *= q;
        prefix_len += 1;
    }
    let prefixes = words_of_length(q, prefix_len);

    let outs: Vec<Result<ShardOut>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..shards)
            .map(|widx| {
                let prefixes = &prefixes;
                scope.spawn(move || run_shard(n, a, prefixes, widx, shards))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard worker panicked"))
            .collect()
    });

    let mut phi_max: Option<usize> = None;
    let mut witnesses: Vec<Word> = Vec::new();
    let mut enumerated = 0u64;
    for out in outs {
        let out = out?;
        enumerated += out.enumerated;
        if let Some((max, ws)) = out.best {
            match phi_max {
                Some(cur) if max < cur => {}
                Some(cur) if max == cur => witnesses.extend(ws),
                _ => {
                    phi_max = Some(max);
                    witnesses = ws;
                }
            }
        }
    }
    witnesses.sort();
    witnesses.truncate(WITNESS_CAP);

    Ok(PhiResult {
        n,
        q,
        phi: phi_max.unwrap_or(0),
        witnesses,
        enumerated,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

/// Appends one record to the line-oriented cache file.
pub fn cache_store(record: &PhiRecord, path: &Path) -> Result<()> {
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    let line = serde_json::to_string(record)?;
    writeln!(f, "{line}")?;
    Ok(())
}

/// Newest record matching `(n, q)`, or `None`. Malformed lines are skipped
/// with a warning on the diagnostic stream; a missing file reads as empty.
pub fn cache_lookup(n: usize, q: usize, path: &Path) -> Result<Option<PhiRecord>> {
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(path)?;
    let mut newest = None;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<PhiRecord>(line) {
            Ok(rec) => {
                if rec.n == n && rec.q == q {
                    newest = Some(rec);
                }
            }
            Err(e) => eprintln!("warning: skipping malformed cache line {}: {e}", i + 1),
        }
    }
    Ok(newest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(q: usize) -> Alphabet {
        Alphabet::canonical(q).unwrap()
    }

    #[test]
    fn enumeration_counts_small() {
        let a2 = a(2);
        assert_eq!(enumerate_rich(1, &a2, |_| {}), 2);
        assert_eq!(enumerate_rich(3, &a2, |_| {}), 8); // all binary length-3 words are rich
        let mut seen = Vec::new();
        enumerate_rich(2, &a2, |w| seen.push(w.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn phi_small_values() {
        let a2 = a(2);
        let r = phi(1, &a2, 1).unwrap();
        assert_eq!(r.phi, 0);
        assert_eq!(r.enumerated, 2);
        assert_eq!(r.witnesses.len(), 2);

        assert!(phi(0, &a2, 1).is_err());
        assert!(phi(1, &a2, 0).is_err());
    }

    #[test]
    fn shard_count_independence_small() {
        let a2 = a(2);
        let base = phi(9, &a2, 1).unwrap();
        for shards in [2usize, 3, 8] {
            let other = phi(9, &a2, shards).unwrap();
            assert_eq!(other.phi, base.phi);
            assert_eq!(other.witnesses, base.witnesses);
            assert_eq!(other.enumerated, base.enumerated);
        }
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("phi.jsonl");
        let rec = PhiRecord {
            n: 5,
            q: 2,
            phi: 1,
            witnesses: vec!["00110".into()],
            enumerated: 32,
            wall_time_s: 0.01,
        };
        assert_eq!(cache_lookup(5, 2, &path).unwrap(), None);
        cache_store(&rec, &path).unwrap();
        assert_eq!(cache_lookup(5, 2, &path).unwrap(), Some(rec.clone()));
        assert_eq!(cache_lookup(6, 2, &path).unwrap(), None);

        // newest record wins
        let newer = PhiRecord {
            phi: 2,
            ..rec.clone()
        };
        cache_store(&newer, &path).unwrap();
        assert_eq!(cache_lookup(5, 2, &path).unwrap(), Some(newer));
    }

    #[test]
    fn cache_skips_malformed_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("phi.jsonl");
        std::fs::write(&path, "not json\n{\"n\":3,\"q\":2,\"phi\":0,\"witnesses\":[],\"enumerated\":8,\"wall_time_s\":0.0}\n").unwrap();
        let rec = cache_lookup(3, 2, &path).unwrap().unwrap();
        assert_eq!(rec.phi, 0);
        assert_eq!(rec.enumerated, 8);
    }
}
