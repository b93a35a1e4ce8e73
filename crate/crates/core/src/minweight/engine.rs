//! Information-set enumeration kernel.
//!
//! The generator matrix is brought into systematic form with respect to a
//! sequence of pairwise disjoint information sets `I_1, I_2, ...` chosen
//! greedily left to right. Set `i` has rank `r_i`; when `r_i < k` its
//! systematic form is completed with columns from earlier sets. Every
//! codeword `c` then has one message per set, namely `c` restricted to that
//! set's `k` pivot columns, and level `w` of set `i` enumerates the codewords
//! whose set-`i` message has weight `w`.
//!
//! After levels `0..=w` of every set, a codeword not yet seen has message
//! weight at least `w + 1` in every set, hence weight at least
//! `sum_i max(0, w + 1 - (k - r_i))` because the sets are disjoint.
//!
//! Counting assigns each codeword to its lexicographically smallest pair
//! (message weight, set index), which is where it is first met when the
//! levels are run in order. That rule needs only the codeword itself, so
//! work can be split freely between threads.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::gf2::{words_for, BitVector};

/// Which enumerated vectors a goal cares about. Coset searches enumerate
/// `C + <x>` with a tag bit that records the coefficient of `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Filter {
    All,
    Tagged,
}

#[derive(Clone, Copy, Debug)]
pub(crate) enum Goal {
    /// Nonzero vectors of weight strictly below `below`.
    Minimum { filter: Filter, below: usize },
    /// Count vectors of weight at most `upto`, each once.
    Count { filter: Filter, upto: usize },
}

#[derive(Debug, Default)]
pub(crate) struct LevelOutput {
    pub best: Option<(usize, BitVector)>,
    pub counts: Vec<u64>,
    pub aborted: bool,
}

pub(crate) trait Engine: Sync + Send {
    fn length(&self) -> usize;
    fn dimension(&self) -> usize;
    fn set_ranks(&self) -> Vec<usize>;
    fn set_columns(&self) -> Vec<Vec<usize>>;
    fn run_level(
        &self,
        level: usize,
        goal: Goal,
        serial: bool,
        deadline: Option<Instant>,
    ) -> LevelOutput;
}

/// Builds an engine for generator rows of length `n`. Row `i` carries a tag
/// when `tags[i]` is set. Rows must be independent on the first `n`
/// coordinates.
pub(crate) fn build(n: usize, rows: &[BitVector], tags: &[bool]) -> Option<Box<dyn Engine>> {
    macro_rules! widths {
        ($($w:literal)*) => {
            match words_for(n + 1) {
                $($w => Some(Box::new(Enumerator::<$w>::new(n, rows, tags)) as Box<dyn Engine>),)*
                _ => None,
            }
        };
    }
    widths!(1 2 3 4 5 6 7 8)
}

struct InfoSet<const W: usize> {
    rank: usize,
    columns: Vec<usize>,
    pivot_mask: [u64; W],
    rows: Vec<[u64; W]>,
}

struct Enumerator<const W: usize> {
    n: usize,
    k: usize,
    weight_mask: [u64; W],
    tag: (usize, u64),
    sets: Vec<InfoSet<W>>,
}

#[inline(always)]
fn xor<const W: usize>(a: &[u64; W], b: &[u64; W]) -> [u64; W] {
    let mut out = [0u64; W];
    for i in 0..W {
        out[i] = a[i] ^ b[i];
    }
    out
}

#[inline(always)]
fn masked_weight<const W: usize>(v: &[u64; W], mask: &[u64; W]) -> u32 {
    let mut w = 0;
    for i in 0..W {
        w += (v[i] & mask[i]).count_ones();
    }
    w
}

#[inline(always)]
fn get_bit<const W: usize>(v: &[u64; W], i: usize) -> bool {
    (v[i / 64] >> (i % 64)) & 1 == 1
}

fn mask_of<const W: usize>(cols: impl IntoIterator<Item = usize>) -> [u64; W] {
    let mut m = [0u64; W];
    for c in cols {
        m[c / 64] |= 1 << (c % 64);
    }
    m
}

/// Depth-first walk over all `depth`-subsets of `rows[start..]`, calling
/// `leaf` with each sum (offset by `acc`) whose weight is at most `limit`.
fn walk<const W: usize, F>(
    rows: &[[u64; W]],
    start: usize,
    depth: usize,
    acc: &[u64; W],
    mask: &[u64; W],
    limit: &mut u32,
    leaf: &mut F,
) where
    F: FnMut(&[u64; W], u32, &mut u32),
{
    match depth {
        0 => {
            let wt = masked_weight(acc, mask);
            if wt <= *limit {
                leaf(acc, wt, limit);
            }
        }
        1 => {
            for row in &rows[start..] {
                let v = xor(acc, row);
                let wt = masked_weight(&v, mask);
                if wt <= *limit {
                    leaf(&v, wt, limit);
                }
            }
        }
        _ => {
            for i in start..=rows.len() - depth {
                let next = xor(acc, &rows[i]);
                walk(rows, i + 1, depth - 1, &next, mask, limit, leaf);
            }
        }
    }
}

impl<const W: usize> Enumerator<W> {
    fn new(n: usize, rows: &[BitVector], tags: &[bool]) -> Self {
        let k = rows.len();
        let mut g: Vec<[u64; W]> = rows
            .iter()
            .zip(tags)
            .map(|(r, &t)| {
                let mut a = [0u64; W];
                a[..r.words().len()].copy_from_slice(r.words());
                if t {
                    a[n / 64] |= 1 << (n % 64);
                }
                a
            })
            .collect();
        let weight_mask = mask_of::<W>(0..n);
        let mut used = vec![false; n];
        let mut sets = Vec::new();

        // Gauss-Jordan on column `col` among rows `from..`; returns whether a
        // pivot was placed at row `from`.
        let eliminate = |g: &mut Vec<[u64; W]>, from: usize, col: usize| -> bool {
            let Some(r) = (from..g.len()).find(|&r| get_bit(&g[r], col)) else {
                return false;
            };
            g.swap(from, r);
            let p = g[from];
            for (i, row) in g.iter_mut().enumerate() {
                if i != from && get_bit(row, col) {
                    *row = xor(row, &p);
                }
            }
            true
        };

        loop {
            let mut pivots = Vec::with_capacity(k);
            for col in (0..n).filter(|&c| !used[c]) {
                if pivots.len() == k {
                    break;
                }
                if eliminate(&mut g, pivots.len(), col) {
                    pivots.push(col);
                }
            }
            let rank = pivots.len();
            if rank == 0 {
                break;
            }
            let keep = sets.is_empty() || k - rank <= k / 4;
            let columns = pivots.clone();
            for &c in &columns {
                used[c] = true;
            }
            if rank < k {
                for col in 0..n {
                    if pivots.len() == k {
                        break;
                    }
                    if !pivots.contains(&col) && eliminate(&mut g, pivots.len(), col) {
                        pivots.push(col);
                    }
                }
                debug_assert_eq!(pivots.len(), k, "rows must be independent");
            }
            if keep {
                sets.push(InfoSet {
                    rank,
                    columns,
                    pivot_mask: mask_of::<W>(pivots.iter().copied()),
                    rows: g.clone(),
                });
            }
        }

        Self {
            n,
            k,
            weight_mask,
            tag: (n / 64, 1 << (n % 64)),
            sets,
        }
    }

    #[inline(always)]
    fn passes(&self, v: &[u64; W], filter: Filter) -> bool {
        match filter {
            Filter::All => true,
            Filter::Tagged => v[self.tag.0] & self.tag.1 != 0,
        }
    }

    /// True if `(level, set)` is the smallest (message weight, set index)
    /// pair of `v`.
    #[inline]
    fn is_canonical(&self, v: &[u64; W], level: u32, set: usize) -> bool {
        self.sets.iter().enumerate().all(|(i, s)| {
            if i == set {
                return true;
            }
            let l = masked_weight(v, &s.pivot_mask);
            if i < set {
                l > level
            } else {
                l >= level
            }
        })
    }

    fn to_bitvector(&self, v: &[u64; W]) -> BitVector {
        BitVector::from_words(self.n, v)
    }

    fn task(&self, set: usize, first: Option<usize>, level: usize, goal: Goal) -> LevelOutput {
        let s = &self.sets[set];
        let (acc, start, depth) = match first {
            Some(f) => (s.rows[f], f + 1, level - 1),
            None => ([0u64; W], 0, 0),
        };
        match goal {
            Goal::Minimum { filter, below } => {
                let mut best: Option<(u32, [u64; W])> = None;
                let Some(mut limit) = (below as u32).checked_sub(1) else {
                    return LevelOutput::default();
                };
                walk(
                    &s.rows,
                    start,
                    depth,
                    &acc,
                    &self.weight_mask,
                    &mut limit,
                    &mut |v, wt, limit| {
                        if wt == 0 || !self.passes(v, filter) {
                            return;
                        }
                        best = Some((wt, *v));
                        *limit = wt - 1;
                    },
                );
                LevelOutput {
                    best: best.map(|(w, v)| (w as usize, self.to_bitvector(&v))),
                    ..LevelOutput::default()
                }
            }
            Goal::Count { filter, upto } => {
                let mut counts = vec![0u64; upto + 1];
                let mut limit = upto as u32;
                let lvl = level as u32;
                walk(
                    &s.rows,
                    start,
                    depth,
                    &acc,
                    &self.weight_mask,
                    &mut limit,
                    &mut |v, wt, _| {
                        if self.passes(v, filter) && self.is_canonical(v, lvl, set) {
                            counts[wt as usize] += 1;
                        }
                    },
                );
                LevelOutput {
                    counts,
                    ..LevelOutput::default()
                }
            }
        }
    }
}

fn merge(into: &mut LevelOutput, part: LevelOutput) {
    into.aborted |= part.aborted;
    if let Some((w, v)) = part.best {
        if into.best.as_ref().is_none_or(|(b, _)| w < *b) {
            into.best = Some((w, v));
        }
    }
    if into.counts.len() < part.counts.len() {
        into.counts.resize(part.counts.len(), 0);
    }
    for (a, b) in into.counts.iter_mut().zip(part.counts) {
        *a += b;
    }
}

impl<const W: usize> Engine for Enumerator<W> {
    fn length(&self) -> usize {
        self.n
    }

    fn dimension(&self) -> usize {
        self.k
    }

    fn set_ranks(&self) -> Vec<usize> {
        self.sets.iter().map(|s| s.rank).collect()
    }

    fn set_columns(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.columns.clone()).collect()
    }

    fn run_level(
        &self,
        level: usize,
        goal: Goal,
        serial: bool,
        deadline: Option<Instant>,
    ) -> LevelOutput {
        let tasks: Vec<(usize, Option<usize>)> = if level == 0 {
            (0..self.sets.len()).map(|s| (s, None)).collect()
        } else if level > self.k {
            Vec::new()
        } else {
            (0..self.sets.len())
                .flat_map(|s| (0..=self.k - level).map(move |f| (s, Some(f))))
                .collect()
        };
        let stop = AtomicBool::new(false);
        let run = |&(set, first): &(usize, Option<usize>)| -> LevelOutput {
            if stop.load(Ordering::Relaxed) {
                return LevelOutput {
                    aborted: true,
                    ..LevelOutput::default()
                };
            }
            if deadline.is_some_and(|d| Instant::now() >= d) {
                stop.store(true, Ordering::Relaxed);
                return LevelOutput {
                    aborted: true,
                    ..LevelOutput::default()
                };
            }
            self.task(set, first, level, goal)
        };
        let parts: Vec<LevelOutput> = if serial {
            tasks.iter().map(run).collect()
        } else {
            tasks.par_iter().map(run).collect()
        };
        let mut out = LevelOutput::default();
        for p in parts {
            merge(&mut out, p);
        }
        out
    }
}
