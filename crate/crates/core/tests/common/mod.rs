#![allow(dead_code)]

use rand::Rng;
use sdcodes::constructions::neighbor;
use sdcodes::gf2::{BitMatrix, BitVector, LinearCode};

pub fn e8() -> LinearCode {
    LinearCode::from_matrix(
        &BitMatrix::from_strs(&["11110000", "00111100", "00001111", "01010101"]).unwrap(),
    )
}

/// `e₈ ⊕ e₈`.
pub fn e8_squared() -> LinearCode {
    let rows = e8()
        .generators()
        .iter()
        .flat_map(|g| {
            let z = BitVector::zeros(8);
            [g.concat(&z), z.concat(g)]
        })
        .collect();
    LinearCode::new(16, rows).unwrap()
}

/// `i₂^m`.
pub fn i2_power(m: usize) -> LinearCode {
    let rows = (0..m)
        .map(|i| BitVector::from_support(2 * m, &[2 * i, 2 * i + 1]))
        .collect();
    LinearCode::new(2 * m, rows).unwrap()
}

/// A self-dual code of length `2m`, reached from `i₂^m` by random neighbor
/// steps.
pub fn random_self_dual(rng: &mut impl Rng, m: usize) -> LinearCode {
    let n = 2 * m;
    let mut code = i2_power(m);
    for _ in 0..n {
        let bits: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let mut x = BitVector::from_bits(&bits);
        if x.weight() % 2 == 1 {
            x.flip(rng.gen_range(0..n));
        }
        if let Ok(next) = neighbor(&code, &x) {
            code = next;
        }
    }
    code
}

pub fn mask(v: &BitVector) -> u32 {
    assert!(v.len() <= 32);
    v.ones_iter().fold(0, |m, i| m | (1 << i))
}

pub fn weight(v: u32) -> usize {
    v.count_ones() as usize
}

/// Every element of the span of `rows`, by a Gray-code walk.
pub fn span(rows: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << rows.len());
    let mut cur = 0u32;
    out.push(cur);
    for step in 1u32..(1 << rows.len()) {
        cur ^= rows[step.trailing_zeros() as usize];
        out.push(cur);
    }
    out
}

pub fn codewords(code: &LinearCode) -> Vec<u32> {
    let rows: Vec<u32> = code.generators().iter().map(mask).collect();
    span(&rows)
}

pub fn histogram(words: impl IntoIterator<Item = u32>, n: usize) -> Vec<u64> {
    let mut h = vec![0u64; n + 1];
    for w in words {
        h[weight(w)] += 1;
    }
    h
}

/// Self-duality from the definition: `k = n/2` and all generators pairwise
/// orthogonal.
pub fn brute_is_self_dual(code: &LinearCode) -> bool {
    let rows: Vec<u32> = code.generators().iter().map(mask).collect();
    2 * rows.len() == code.length()
        && rows
            .iter()
            .all(|a| rows.iter().all(|b| (a & b).count_ones() % 2 == 0))
}

/// Greedy basis of a set of vectors.
pub fn basis(words: &[u32]) -> Vec<u32> {
    let mut pivots: Vec<u32> = Vec::new();
    for &w in words {
        let mut r = w;
        for &p in &pivots {
            r = r.min(r ^ p);
        }
        if r != 0 {
            pivots.push(r);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots
}

/// `C₀^⊥ \ C` by running over all `2^n` vectors.
pub fn brute_shadow(code: &LinearCode) -> Vec<u32> {
    let n = code.length();
    let words = codewords(code);
    let c0: Vec<u32> = words.iter().copied().filter(|&w| weight(w).is_multiple_of(4)).collect();
    let c0 = basis(&c0);
    let mut in_code = std::collections::HashSet::with_capacity(words.len());
    in_code.extend(words.iter().copied());
    (0u32..(1 << n))
        .filter(|v| c0.iter().all(|c| (v & c).count_ones() % 2 == 0))
        .filter(|v| !in_code.contains(v))
        .collect()
}
