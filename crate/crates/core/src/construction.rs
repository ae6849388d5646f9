//! The recursive construction pipeline: prefix-planting extensions (`ewp`,
//! `elpp`), the words `g_n`, the palindromes `α_{i,j}`, the stage function
//! `κ`, and the word `h_n` whose prefix `h̄_n` admits a forced extension of
//! length `ρ(n) − 1`. Also the structural checkers for flexed points and
//! switch sets of `0^k g_n`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::flexed_points;
use crate::richness::{self, extension_letters, rich_index};
use crate::switches::{reduced, swc_set, switches_of};
use crate::word::{self, Alphabet, Word};

/// Extension with prescribed palindromic prefix. Picks the shortest prefix
/// `π̄ = lppp(w)·π` of `w` that is at least as long as `lppp(w)` and ends
/// with `t` minus its last letter; if such a prefix exists and `t` does not
/// already occur in `π^R·w`, returns `x·π^R·w` where `x` is the first
/// letter of `t`, otherwise returns `w` unchanged. Requires `w`, `t` rich
/// and nonempty and `t` a palindrome; the result is rich.
pub fn ewp(w: &Word, t: &Word) -> Result<Word> {
    if w.is_empty() || t.is_empty() {
        return Err(Error::EmptyWord("ewp"));
    }
    if !t.is_palindrome() {
        return Err(Error::NotAPalindrome);
    }
    if !richness::rich(w) || !richness::rich(t) {
        return Err(Error::NotRich);
    }
    let lppp = word::lppp_len(w);
    let rt = &t[..t.len() - 1];
    let end = if rt.is_empty() {
        Some(lppp)
    } else {
        word::find_from(w, rt, lppp.saturating_sub(rt.len())).map(|p| p + rt.len())
    };
    let Some(end) = end else {
        return Ok(w.clone()); // no candidate prefix
    };
    let pi = &w[lppp..end];
    let mut full = Vec::with_capacity(1 + pi.len() + w.len());
    full.push(t[0]);
    full.extend(pi.iter().rev());
    full.extend_from_slice(w);
    if word::contains(&full[1..], t) {
        return Ok(w.clone());
    }
    Ok(Word::from(full))
}

/// Left fold of [`ewp`] over a sequence of palindromes.
pub fn ewp_chain(w: &Word, ts: &[Word]) -> Result<Word> {
    let mut cur = w.clone();
    for t in ts {
        cur = ewp(&cur, t)?;
    }
    Ok(cur)
}

/// Largest `k` with `x^k` a factor of `w`; 0 when `x` does not occur.
pub fn max_pow(w: &Word, x: u8) -> usize {
    let mut best = 0;
    let mut run = 0;
    for &c in w.iter() {
        if c == x {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

/// Extension with a maximal letter-power prefix:
/// `ewp(w, y^(maxPow(w, y) + 1))`. When `y` does not occur in `w` the
/// result is `y·w`.
pub fn elpp(w: &Word, y: u8) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::EmptyWord("elpp"));
    }
    let t = Word::from(vec![y; max_pow(w, y) + 1]);
    ewp(w, &t)
}

/// `g_1 = 1` and `g_n = g_{n-1}·0·1^n·0·g_{n-1}`, over the zero- and
/// one-symbols. Each `g_n` is a palindrome of length `ρ(n)`.
pub fn gen_g(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidArgument("gen_g needs n >= 1"));
    }
    let mut g: Vec<u8> = vec![1];
    for m in 2..=n {
        let mut v = Vec::with_capacity(2 * g.len() + m + 2);
        v.extend_from_slice(&g);
        v.push(0);
        v.extend(std::iter::repeat(1u8).take(m));
        v.push(0);
        v.extend_from_slice(&g);
        g = v;
    }
    Ok(Word::from(g))
}

/// `ρ(n) = |g_n|`: `ρ(1) = 1`, `ρ(n) = 2ρ(n-1) + n + 2`.
pub fn rho(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("rho needs n >= 1"));
    }
    let mut r = 1u64;
    for m in 2..=n as u64 {
        r = 2 * r + m + 2;
    }
    Ok(r)
}

/// The planted palindromes: `α_{1,j} = 00·g_{j-1}·00`,
/// `α_{2,j} = 0·1^(j-1)·0·g_{j-2}·0·1^(j-1)·0`,
/// `α_{3,j} = 1^j·0·g_{j-2}·0·1^j`, `α_{4,j} = 1^(j+1)`.
/// `i ∈ {2, 3}` needs `j >= 3` (they reference `g_{j-2}`), the others
/// `j >= 2`.
pub fn alpha(i: usize, j: usize) -> Result<Word> {
    let min_j = match i {
        1 | 4 => 2,
        2 | 3 => 3,
        _ => return Err(Error::InvalidArgument("alpha needs i in 1..=4")),
    };
    if j < min_j {
        return Err(Error::InvalidArgument("alpha index j out of range"));
    }
    let mut v = Vec::new();
    match i {
        1 => {
            let g = gen_g(j - 1)?;
            v.extend([0, 0]);
            v.extend_from_slice(&g);
            v.extend([0, 0]);
        }
        2 => {
            let g = gen_g(j - 2)?;
            v.push(0);
            v.extend(std::iter::repeat(1u8).take(j - 1));
            v.push(0);
            v.extend_from_slice(&g);
            v.push(0);
            v.extend(std::iter::repeat(1u8).take(j - 1));
            v.push(0);
        }
        3 => {
            let g = gen_g(j - 2)?;
            v.extend(std::iter::repeat(1u8).take(j));
            v.push(0);
            v.extend_from_slice(&g);
            v.push(0);
            v.extend(std::iter::repeat(1u8).take(j));
        }
        4 => {
            v.extend(std::iter::repeat(1u8).take(j + 1));
        }
        _ => unreachable!(),
    }
    Ok(Word::from(v))
}

/// One construction stage: plant `α_{1,j}` through `α_{4,j}` and then a
/// maximal power of the zero-symbol. Requires `j >= 3` and `w` rich.
pub fn kappa(j: usize, w: &Word) -> Result<Word> {
    if j < 3 {
        return Err(Error::InvalidArgument("kappa needs j >= 3"));
    }
    let ts = [alpha(1, j)?, alpha(2, j)?, alpha(3, j)?, alpha(4, j)?];
    elpp(&ewp_chain(w, &ts)?, 0)
}

/// Everything produced by the `h_n` pipeline, plus the derived lengths.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub n: usize,
    pub alphabet: Alphabet,
    /// `g_n`.
    pub g: Word,
    /// `ρ(n) = |g_n|`.
    pub rho: u64,
    /// `[α_{1,j}, α_{2,j}, α_{3,j}, α_{4,j}]` for `j = 3..=n`.
    pub alphas: Vec<[Word; 4]>,
    /// `h_{n,n}` down to `h_{n,3}`.
    pub kappa_stages: Vec<Word>,
    pub h: Word,
    /// `h̄_n` with `h_n = h̄_n · ltrim(g_n)`.
    pub h_bar: Word,
    /// `(ρ(n) - 1) / |h̄_n|`.
    pub ratio: f64,
}

impl ConstructionReport {
    /// Twice the length bound, kept integral:
    /// `|h_n| < 11/2·ρ(n) + (n-3)(5n+22) + 3n + 20 + q`.
    fn doubled_bound(&self) -> u64 {
        let n = self.n as u64;
        let q = self.alphabet.size() as u64;
        11 * self.rho + 2 * (n - 3) * (5 * n + 22) + 6 * n + 40 + 2 * q
    }

    /// The length bound rounded down to an integer.
    pub fn bound_floor(&self) -> u64 {
        self.doubled_bound() / 2
    }

    /// Is `|h_n|` strictly below the bound?
    pub fn length_within_bound(&self) -> bool {
        2 * (self.h.len() as u64) < self.doubled_bound()
    }
}

/// Builds `h_n` over `a`: `h_{n,n} = κ(n, 000·g_n·00·g_n)`, then
/// `h_{n,j} = κ(j, h_{n,j+1})` down to `j = 3`, then the closing chain
/// `00100, 11011, 01010`, prefixed with the alphabet's symbols other than
/// zero and one in ascending order. Requires `n >= 3`.
pub fn gen_h(n: usize, a: &Alphabet) -> Result<ConstructionReport> {
    if n < 3 {
        return Err(Error::InvalidArgument("gen_h needs n >= 3"));
    }
    let g = gen_g(n)?;
    let mut alphas = Vec::with_capacity(n - 2);
    for j in 3..=n {
        alphas.push([alpha(1, j)?, alpha(2, j)?, alpha(3, j)?, alpha(4, j)?]);
    }

    let mut seed = Vec::with_capacity(2 * g.len() + 5);
    seed.extend([0, 0, 0]);
    seed.extend_from_slice(&g);
    seed.extend([0, 0]);
    seed.extend_from_slice(&g);

    let mut stages = Vec::with_capacity(n - 2);
    let mut cur = Word::from(seed);
    for j in (3..=n).rev() {
        cur = elpp(&ewp_chain(&cur, &alphas[j - 3])?, 0)?;
        stages.push(cur.clone());
    }

    let closing = [
        Word::from(vec![0, 0, 1, 0, 0]),
        Word::from(vec![1, 1, 0, 1, 1]),
        Word::from(vec![0, 1, 0, 1, 0]),
    ];
    let body = ewp_chain(&cur, &closing)?;
    let mut hv: Vec<u8> = (2..a.size()).map(|i| i as u8).collect();
    hv.extend_from_slice(&body);
    let h = Word::from(hv);

    let rho_n = g.len() as u64;
    let h_bar = Word::from_slice(&h[..h.len() - (g.len() - 1)]);
    let ratio = (rho_n - 1) as f64 / h_bar.len() as f64;
    Ok(ConstructionReport {
        n,
        alphabet: a.clone(),
        g,
        rho: rho_n,
        alphas,
        kappa_stages: stages,
        h,
        h_bar,
        ratio,
    })
}

/// Verification verdicts for a [`ConstructionReport`]. Failures are named
/// fields, never errors.
#[derive(Debug, Clone, PartialEq)]
pub struct HVerdicts {
    /// `h_n` is rich.
    pub rich: bool,
    /// The forced walk from `h̄_n` runs exactly `ρ(n) - 1` steps with a
    /// single rich extension letter at every step, spelling `ltrim(g_n)`.
    pub unique_extension: bool,
    /// `|h_n|` is strictly below the length bound.
    pub bound_ok: bool,
    /// `(ρ(n) - 1) / |h̄_n|`.
    pub ratio: f64,
    /// `ratio <= 2/9`, checked exactly; `None` for `n <= 3` where it is
    /// not claimed.
    pub ratio_le_two_ninths: Option<bool>,
}

impl HVerdicts {
    pub fn all_pass(&self) -> bool {
        self.rich
            && self.unique_extension
            && self.bound_ok
            && self.ratio_le_two_ninths.unwrap_or(true)
    }
}

fn forced_walk_spells_g_tail(r: &ConstructionReport) -> bool {
    let Ok(mut ix) = rich_index(&r.h_bar, r.alphabet.size()) else {
        return false;
    };
    for &expected in &r.g[1..] {
        let letters = extension_letters(&mut ix);
        if letters.len() != 1 || letters[0] != expected {
            return false;
        }
        ix.append(expected).expect("symbol in range");
    }
    true
}

/// Confirms richness of `h_n`, the forced walk of `h̄_n`, the length
/// bound, and the ratio target.
pub fn verify_h(r: &ConstructionReport) -> HVerdicts {
    let rich = richness::rich(&r.h);
    let unique_extension = forced_walk_spells_g_tail(r);
    let bound_ok = r.length_within_bound();
    let ratio_le_two_ninths = if r.n > 3 {
        Some(9 * (r.rho - 1) <= 2 * r.h_bar.len() as u64)
    } else {
        None
    };
    HVerdicts {
        rich,
        unique_extension,
        bound_ok,
        ratio: r.ratio,
        ratio_le_two_ninths,
    }
}

#[derive(Serialize)]
struct ReportJson {
    n: usize,
    q: usize,
    g_len: usize,
    h_len: usize,
    hbar_len: usize,
    bound: u64,
    rich: bool,
    unique_extension: bool,
    bound_ok: bool,
    ratio: f64,
}

/// The report/verdict JSON: lengths and verdicts only; words this size are
/// written to side files, not inlined.
pub fn construction_json(r: &ConstructionReport, v: &HVerdicts) -> serde_json::Value {
    serde_json::to_value(ReportJson {
        n: r.n,
        q: r.alphabet.size(),
        g_len: r.g.len(),
        h_len: r.h.len(),
        hbar_len: r.h_bar.len(),
        bound: r.bound_floor(),
        rich: v.rich,
        unique_extension: v.unique_extension,
        bound_ok: v.bound_ok,
        ratio: v.ratio,
    })
    .expect("report serializes")
}

fn zeros_then(k: usize, w: &Word) -> Word {
    let mut v = vec![0u8; k];
    v.extend_from_slice(w);
    Word::from(v)
}

/// Do the flexed points gained between `0^k·g_{n-1}` and `0^k·g_n` consist
/// exactly of `0^k·g_{n-1}·01` and `0^k·g_{n-1}·0·1^n`? Requires
/// `n, k >= 2`.
pub fn flexed_delta_check(n: usize, k: usize) -> Result<bool> {
    if n < 2 || k < 2 {
        return Err(Error::InvalidArgument("flexed_delta_check needs n, k >= 2"));
    }
    let g_prev = gen_g(n - 1)?;
    let w_n = zeros_then(k, &gen_g(n)?);
    let w_prev = zeros_then(k, &g_prev);
    if !richness::rich(&w_n) {
        return Ok(false);
    }
    let diff: BTreeSet<Word> = flexed_points(&w_n)?
        .difference(&flexed_points(&w_prev)?)
        .cloned()
        .collect();

    let mut e1 = zeros_then(k, &g_prev).to_vec();
    e1.extend([0, 1]);
    let mut e2 = zeros_then(k, &g_prev).to_vec();
    e2.push(0);
    e2.extend(std::iter::repeat(1u8).take(n));
    let expect: BTreeSet<Word> = [Word::from(e1), Word::from(e2)].into_iter().collect();
    Ok(diff == expect)
}

/// The closed-form switch set of `0^k·g_n` for `n >= 3`, `k >= 2`:
/// `0^j·1` for `j = 2..=k`, the five short switches
/// `01, 10, 00101, 11010, 01011`, `0·1^j` and `1^j·0` for `j = 2..=n`, and
/// for `j = 3..=n` the three long families
/// `00·g_{j-1}·01`, `0·1^(j-1)·0·g_{j-2}·0·1^j` and its reversal.
pub fn switch_formula(n: usize, k: usize) -> Result<BTreeSet<Word>> {
    if n < 3 || k < 2 {
        return Err(Error::InvalidArgument("switch_formula needs n >= 3, k >= 2"));
    }
    let mut s = BTreeSet::new();
    for j in 2..=k {
        let mut v = vec![0u8; j];
        v.push(1);
        s.insert(Word::from(v));
    }
    for fixed in [
        vec![0u8, 1],
        vec![1u8, 0],
        vec![0u8, 0, 1, 0, 1],
        vec![1u8, 1, 0, 1, 0],
        vec![0u8, 1, 0, 1, 1],
    ] {
        s.insert(Word::from(fixed));
    }
    for j in 2..=n {
        let mut up = vec![0u8];
        up.extend(std::iter::repeat(1u8).take(j));
        let mut down: Vec<u8> = std::iter::repeat(1u8).take(j).collect();
        down.push(0);
        s.insert(Word::from(up));
        s.insert(Word::from(down));
    }
    for j in 3..=n {
        let g1 = gen_g(j - 1)?;
        let mut v = vec![0u8, 0];
        v.extend_from_slice(&g1);
        v.extend([0, 1]);
        s.insert(Word::from(v));

        let g2 = gen_g(j - 2)?;
        let mut v = vec![0u8];
        v.extend(std::iter::repeat(1u8).take(j - 1));
        v.push(0);
        v.extend_from_slice(&g2);
        v.push(0);
        v.extend(std::iter::repeat(1u8).take(j));
        let rev = Word::from(v.clone()).reverse();
        s.insert(Word::from(v));
        s.insert(rev);
    }
    Ok(s)
}

/// The closed-form switch palindromic closures of `switch(0^k·g_n)`:
/// the reduction of `0^(k+1)`, `00100`, `11011`, `01010`, `α_{4,n}` and
/// `α_{1..3,j}` for `j = 3..=n`.
pub fn swc_closure_formula(n: usize, k: usize) -> Result<BTreeSet<Word>> {
    if n < 3 || k < 2 {
        return Err(Error::InvalidArgument(
            "swc_closure_formula needs n >= 3, k >= 2",
        ));
    }
    let mut s = BTreeSet::new();
    s.insert(Word::from(vec![0u8; k + 1]));
    s.insert(Word::from(vec![0u8, 0, 1, 0, 0]));
    s.insert(Word::from(vec![1u8, 1, 0, 1, 1]));
    s.insert(Word::from(vec![0u8, 1, 0, 1, 0]));
    s.insert(alpha(4, n)?);
    for j in 3..=n {
        s.insert(alpha(1, j)?);
        s.insert(alpha(2, j)?);
        s.insert(alpha(3, j)?);
    }
    Ok(reduced(&s))
}

/// Does the brute-force switch set of `0^k·g_n` equal [`switch_formula`]
/// and its closure set equal [`swc_closure_formula`]?
pub fn switch_formula_check(n: usize, k: usize) -> Result<bool> {
    let w = zeros_then(k, &gen_g(n)?);
    let actual = switches_of(&w).to_set();
    if actual != switch_formula(n, k)? {
        return Ok(false);
    }
    Ok(swc_set(actual.iter())? == swc_closure_formula(n, k)?)
}
