use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use richwords::construction::{alpha, elpp, ewp, gen_g, gen_h, kappa, rho, verify_h};
use richwords::richness::{rich, rich_extension_letters};
use richwords::word::{affix, occ, AffixKind};
use richwords::{Alphabet, PalIndex, Word};

/// Random rich word of the target length by repeatedly appending a random
/// rich extension letter.
fn random_rich_word(rng: &mut ChaCha8Rng, a: &Alphabet, len: usize) -> Word {
    let mut w = Word::from(vec![rng.gen_range(0..a.size() as u8)]);
    while w.len() < len {
        let letters = rich_extension_letters(&w, a).unwrap();
        let x = letters[rng.gen_range(0..letters.len())];
        let mut v = w.letters().to_vec();
        v.push(x);
        w = Word::from(v);
    }
    w
}

#[test]
fn ewp_preserves_richness_and_plants_the_prefix() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut planted = 0usize;
    for round in 0..500 {
        let q = if round % 2 == 0 { 2 } else { 3 };
        let a = Alphabet::canonical(q).unwrap();
        let len = rng.gen_range(8..=48);
        let w = random_rich_word(&mut rng, &a, len);
        // draw t from the palindromic factors of w
        let ix = PalIndex::from_word(q, &w).unwrap();
        let pals: Vec<Word> = ix.palindromes().map(Word::from_slice).collect();
        let t = pals[rng.gen_range(0..pals.len())].clone();
        let got = ewp(&w, &t).unwrap();
        assert!(rich(&got), "w={w:?} t={t:?}");
        if got != w {
            planted += 1;
            // the planted palindrome is the longest palindromic prefix and
            // occurs exactly once
            assert_eq!(affix(&got, AffixKind::Lpp).unwrap().len(), t.len(), "w={w:?} t={t:?}");
            assert!(got.has_prefix(&t));
            assert_eq!(occ(&got, &t).unwrap(), 1, "w={w:?} t={t:?}");
        }
    }
    assert!(planted > 100, "plantings happened only {planted} times");
}

#[test]
fn elpp_preserves_richness_and_prepends_a_maximal_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let a = Alphabet::canonical(3).unwrap();
        let len = rng.gen_range(4..=40);
        let w = random_rich_word(&mut rng, &a, len);
        let y = rng.gen_range(0..3u8);
        let got = elpp(&w, y).unwrap();
        assert!(rich(&got), "w={w:?} y={y}");
    }
}

#[test]
fn kappa_respects_the_stage_length_bound() {
    // along the real pipeline for n = 6 and 7 the stated stage bound
    // |κ(j,w)| < |w| + 7ρ(j-1) + 5k + 5j + 10 holds, with room to spare
    // (the derivation's final line even supports 4k)
    for n in [6usize, 7] {
        let g = gen_g(n).unwrap();
        let mut w = {
            let mut v = vec![0u8, 0, 0];
            v.extend_from_slice(&g);
            v.extend([0, 0]);
            v.extend_from_slice(&g);
            Word::from(v)
        };
        for j in (3..=n).rev() {
            let k = affix(&w, AffixKind::Lpp).unwrap().len();
            let next = kappa(j, &w).unwrap();
            let stated =
                w.len() as u64 + 7 * rho(j - 1).unwrap() + 5 * k as u64 + 5 * j as u64 + 10;
            let tighter =
                w.len() as u64 + 7 * rho(j - 1).unwrap() + 4 * k as u64 + 5 * j as u64 + 10;
            assert!(
                (next.len() as u64) < stated,
                "n={n} j={j}: {} !< {stated}",
                next.len()
            );
            println!(
                "n={n} j={j} k={k}: len {} stated-margin {} tighter-margin {}",
                next.len(),
                stated - next.len() as u64,
                tighter as i64 - next.len() as i64,
            );
            w = next;
        }
    }
}

#[test]
fn construction_shapes_across_alphabets() {
    for (n, q) in [(5usize, 2usize), (4, 3), (3, 4)] {
        let a = Alphabet::canonical(q).unwrap();
        let r = gen_h(n, &a).unwrap();
        // suffix shape 000·g_n·00·g_n
        let mut tail = vec![0u8, 0, 0];
        tail.extend_from_slice(&r.g);
        tail.extend([0, 0]);
        tail.extend_from_slice(&r.g);
        assert!(r.h.has_suffix(&tail), "n={n} q={q}");
        // the extra symbols lead, in ascending order
        let sigma: Vec<u8> = (2..q as u8).collect();
        assert!(r.h.has_prefix(&sigma), "n={n} q={q}");
        assert_eq!(r.h.len(), r.h_bar.len() + r.g.len() - 1);
        assert_eq!(r.rho, rho(n).unwrap());
    }
}

#[test]
fn verify_h_matches_walk_for_mid_sizes() {
    let a = Alphabet::canonical(2).unwrap();
    for n in [5usize, 6] {
        let r = gen_h(n, &a).unwrap();
        let v = verify_h(&r);
        assert!(v.rich, "n={n}");
        assert!(v.unique_extension, "n={n}");
        assert_eq!(v.ratio_le_two_ninths, Some(true), "n={n}");
        // the walk length is rho(n) - 1 by construction of h_bar
        assert_eq!(r.h.len() - r.h_bar.len(), r.rho as usize - 1);
    }
}

#[test]
fn alphas_are_rich_palindromic_factor_material() {
    for j in 3..=8usize {
        for i in 1..=4usize {
            let al = alpha(i, j).unwrap();
            assert!(al.is_palindrome(), "alpha({i},{j})");
            assert!(rich(&al), "alpha({i},{j})");
        }
    }
}
