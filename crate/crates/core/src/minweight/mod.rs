//! Exact minimum weights and low-weight codeword counts.
//!
//! [`min_weight`], [`count_words_upto`] and [`coset_min_weight`] use
//! Brouwer–Zimmermann style enumeration over disjoint information sets (see
//! the `engine` module). Each search either finishes with an exact answer or,
//! when a [`SearchBudget`] runs out, returns certified bounds. It never
//! returns a wrong exact value. [`brute_force_wef`] walks every codeword and
//! is the reference for small codes.

mod engine;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::gf2::{BitVector, CodeError, LinearCode};
use engine::{Engine, Filter, Goal};

/// Largest dimension accepted by [`brute_force_wef`].
pub const BRUTE_FORCE_MAX_DIM: usize = 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("code of dimension {0} is too large for exhaustive enumeration (max {BRUTE_FORCE_MAX_DIM})")]
    TooLargeForBruteForce(usize),
    #[error("length {0} exceeds the enumerator's word capacity")]
    TooLong(usize),
    #[error("the zero code has no minimum weight")]
    ZeroCode,
}

/// Limits on a search. An exhausted budget yields bounds, never a wrong
/// exact answer.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchBudget {
    /// Cap on the number of enumerated vectors. Checked before each level,
    /// so the outcome does not depend on timing or thread count.
    pub max_enumerated: Option<u64>,
    /// Wall-clock cap.
    pub time_limit: Option<Duration>,
    /// Run on the calling thread only.
    pub serial: bool,
}

impl SearchBudget {
    #[must_use]
    pub fn unlimited() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn with_max_enumerated(mut self, n: u64) -> Self {
        self.max_enumerated = Some(n);
        self
    }

    #[must_use]
    pub fn with_time_limit(mut self, d: Duration) -> Self {
        self.time_limit = Some(d);
        self
    }

    #[must_use]
    pub fn serial(mut self) -> Self {
        self.serial = true;
        self
    }
}

/// An exact weight or certified bounds `lo <= d <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightResult {
    Exact(usize),
    Bounds { lo: usize, hi: usize },
}

impl WeightResult {
    #[must_use]
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Self::Exact(d) => Some(d),
            Self::Bounds { .. } => None,
        }
    }

    #[must_use]
    pub fn lo(&self) -> usize {
        match *self {
            Self::Exact(d) => d,
            Self::Bounds { lo, .. } => lo,
        }
    }

    #[must_use]
    pub fn hi(&self) -> usize {
        match *self {
            Self::Exact(d) => d,
            Self::Bounds { hi, .. } => hi,
        }
    }
}

impl std::fmt::Display for WeightResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Exact(d) => write!(f, "{d}"),
            Self::Bounds { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Vectors generated by the enumeration.
    pub enumerated: u64,
    /// Number of fully enumerated levels (level 0 included).
    pub levels: usize,
    /// Ranks of the information sets in use.
    pub set_ranks: Vec<usize>,
    pub exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeight {
    pub result: WeightResult,
    /// A vector attaining `result.hi()`.
    pub witness: BitVector,
    pub stats: SearchStats,
}

/// Number of vectors of each weight in a code or coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    length: usize,
    dimension: usize,
    counts: BTreeMap<usize, BigUint>,
    complete_upto: usize,
    requested_upto: usize,
    stats: SearchStats,
}

impl WeightDistribution {
    #[must_use]
    pub fn length(&self) -> usize {
        self.length
    }

    /// Dimension of the enumerated space.
    #[must_use]
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Counts are exact for every weight up to and including this bound.
    #[must_use]
    pub fn complete_upto(&self) -> usize {
        self.complete_upto
    }

    #[must_use]
    pub fn requested_upto(&self) -> usize {
        self.requested_upto
    }

    #[must_use]
    pub fn is_complete(&self) -> bool {
        self.complete_upto >= self.requested_upto
    }

    #[must_use]
    pub fn count(&self, weight: usize) -> BigUint {
        self.counts.get(&weight).cloned().unwrap_or_default()
    }

    /// Nonzero counts by weight.
    #[must_use]
    pub fn counts(&self) -> &BTreeMap<usize, BigUint> {
        &self.counts
    }

    #[must_use]
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Smallest positive weight with a nonzero count.
    #[must_use]
    pub fn min_positive_weight(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    #[must_use]
    pub fn stats(&self) -> &SearchStats {
        &self.stats
    }

    /// Counts as `u64` (panics on overflow, which cannot happen below 64
    /// dimensions).
    #[must_use]
    pub fn to_u64_map(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .map(|(&w, c)| (w, u64::try_from(c).expect("count fits in u64")))
            .collect()
    }
}

/// Weights of interest all lie in `residue + modulus * Z`.
#[derive(Clone, Copy, Debug)]
struct Lattice {
    modulus: usize,
    residue: usize,
}

impl Lattice {
    fn round_up(&self, x: usize) -> usize {
        let r = x % self.modulus;
        let target = self.residue % self.modulus;
        x + (target + self.modulus - r) % self.modulus
    }

    fn of_code(code: &LinearCode) -> Self {
        let g = code.generators();
        let modulus = if g.iter().all(|r| r.weight() % 4 == 0) && code.is_self_orthogonal() {
            4
        } else if g.iter().all(|r| r.weight() % 2 == 0) {
            2
        } else {
            1
        };
        Self {
            modulus,
            residue: 0,
        }
    }

    fn of_coset(code: &LinearCode, x: &BitVector) -> Self {
        if Self::of_code(code).modulus >= 2 {
            Self {
                modulus: 2,
                residue: x.weight() % 2,
            }
        } else {
            Self {
                modulus: 1,
                residue: 0,
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

struct Search {
    engine: Box<dyn Engine>,
    lattice: Lattice,
    budget: SearchBudget,
    deadline: Option<Instant>,
    stats: SearchStats,
}

enum Step {
    Done(engine::LevelOutput),
    Exhausted,
}

impl Search {
    fn new(
        code_rows: &[BitVector],
        tags: &[bool],
        n: usize,
        lattice: Lattice,
        budget: &SearchBudget,
    ) -> Result<Self, SearchError> {
        let engine = engine::build(n, code_rows, tags).ok_or(SearchError::TooLong(n))?;
        let stats = SearchStats {
            set_ranks: engine.set_ranks(),
            ..SearchStats::default()
        };
        Ok(Self {
            engine,
            lattice,
            budget: budget.clone(),
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            stats,
        })
    }

    fn k(&self) -> usize {
        self.engine.dimension()
    }

    /// Weight below which everything has been seen after `level`.
    fn bound_after(&self, level: usize) -> usize {
        if level >= self.k() {
            return usize::MAX;
        }
        let k = self.k();
        let raw: usize = self
            .stats
            .set_ranks
            .iter()
            .map(|&r| (level + 1).saturating_sub(k - r))
            .sum();
        self.lattice.round_up(raw)
    }

    fn level_cost(&self, level: usize) -> u128 {
        binomial(self.k(), level) * self.stats.set_ranks.len() as u128
    }

    fn step(&mut self, level: usize, goal: Goal) -> Step {
        let cost = self.level_cost(level);
        if let Some(max) = self.budget.max_enumerated {
            if u128::from(self.stats.enumerated) + cost > u128::from(max) {
                self.stats.exhausted = true;
                return Step::Exhausted;
            }
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stats.exhausted = true;
            return Step::Exhausted;
        }
        let out = self
            .engine
            .run_level(level, goal, self.budget.serial, self.deadline);
        if out.aborted {
            self.stats.exhausted = true;
            return Step::Exhausted;
        }
        self.stats.enumerated = self
            .stats
            .enumerated
            .saturating_add(u64::try_from(cost).unwrap_or(u64::MAX));
        self.stats.levels = level + 1;
        Step::Done(out)
    }

    fn minimum(mut self, filter: Filter, mut best: (usize, BitVector)) -> MinWeight {
        for level in 0..=self.k() {
            if level > 0 {
                let goal = Goal::Minimum {
                    filter,
                    below: best.0,
                };
                match self.step(level, goal) {
                    Step::Done(out) => {
                        if let Some(found) = out.best {
                            if found.0 < best.0 {
                                best = found;
                            }
                        }
                    }
                    Step::Exhausted => {
                        let lo = self.bound_after(level - 1).max(1).min(best.0);
                        let result = if lo == best.0 {
                            WeightResult::Exact(lo)
                        } else {
                            WeightResult::Bounds { lo, hi: best.0 }
                        };
                        return MinWeight {
                            result,
                            witness: best.1,
                            stats: self.stats,
                        };
                    }
                }
            } else {
                self.stats.levels = 1;
            }
            if self.bound_after(level) >= best.0 {
                break;
            }
        }
        MinWeight {
            result: WeightResult::Exact(best.0),
            witness: best.1,
            stats: self.stats,
        }
    }

    fn count(mut self, filter: Filter, upto: usize, dimension: usize) -> WeightDistribution {
        let n = self.engine.length();
        let mut totals = vec![0u64; upto + 1];
        let mut complete: Option<usize> = None;
        for level in 0..=self.k() {
            match self.step(level, Goal::Count { filter, upto }) {
                Step::Done(out) => {
                    for (t, c) in totals.iter_mut().zip(out.counts) {
                        *t += c;
                    }
                    let b = self.bound_after(level);
                    complete = Some(if b == usize::MAX { n } else { b - 1 });
                    if complete.is_some_and(|c| c >= upto) {
                        break;
                    }
                }
                Step::Exhausted => break,
            }
        }
        // nothing is certified until level 0 has run
        let complete_upto = complete.map_or(0, |c| c.min(upto));
        let counts = totals
            .into_iter()
            .enumerate()
            .take(if complete.is_some() { complete_upto + 1 } else { 0 })
            .filter(|&(_, c)| c > 0)
            .map(|(w, c)| (w, BigUint::from(c)))
            .collect();
        WeightDistribution {
            length: n,
            dimension,
            counts,
            complete_upto,
            requested_upto: upto,
            stats: self.stats,
        }
    }
}

fn untagged(code: &LinearCode) -> Vec<bool> {
    vec![false; code.dimension()]
}

/// Minimum weight of a nonzero codeword.
pub fn min_weight(code: &LinearCode, budget: &SearchBudget) -> Result<MinWeight, SearchError> {
    let start = code
        .generators()
        .iter()
        .min_by_key(|g| g.weight())
        .ok_or(SearchError::ZeroCode)?;
    let search = Search::new(
        code.generators(),
        &untagged(code),
        code.length(),
        Lattice::of_code(code),
        budget,
    )?;
    Ok(search.minimum(Filter::All, (start.weight(), start.clone())))
}

/// Exact number of codewords of each weight up to `upto`.
///
/// Each codeword is counted once, at the information set where its message
/// weight is smallest (ties go to the earlier set).
pub fn count_words_upto(
    code: &LinearCode,
    upto: usize,
    budget: &SearchBudget,
) -> Result<WeightDistribution, SearchError> {
    let upto = upto.min(code.length());
    if code.dimension() == 0 {
        return Ok(WeightDistribution {
            length: code.length(),
            dimension: 0,
            counts: BTreeMap::from([(0, BigUint::one())]),
            complete_upto: upto,
            requested_upto: upto,
            stats: SearchStats::default(),
        });
    }
    let search = Search::new(
        code.generators(),
        &untagged(code),
        code.length(),
        Lattice::of_code(code),
        budget,
    )?;
    Ok(search.count(Filter::All, upto, code.dimension()))
}

fn coset_search(
    code: &LinearCode,
    x: &BitVector,
    budget: &SearchBudget,
) -> Result<Search, SearchError> {
    if x.len() != code.length() {
        return Err(CodeError::LengthMismatch {
            expected: code.length(),
            found: x.len(),
        }
        .into());
    }
    if code.contains(x) {
        return Err(CodeError::VectorInCode.into());
    }
    let mut rows = code.generators().to_vec();
    rows.push(x.clone());
    let mut tags = untagged(code);
    tags.push(true);
    Search::new(&rows, &tags, code.length(), Lattice::of_coset(code, x), budget)
}

/// Minimum weight of the coset `x + C`.
pub fn coset_min_weight(
    code: &LinearCode,
    x: &BitVector,
    budget: &SearchBudget,
) -> Result<MinWeight, SearchError> {
    let search = coset_search(code, x, budget)?;
    let start = code.reduce(x);
    let start = if start.weight() <= x.weight() {
        start
    } else {
        x.clone()
    };
    Ok(search.minimum(Filter::Tagged, (start.weight(), start)))
}

/// Number of vectors of each weight up to `upto` in the coset `x + C`.
pub fn coset_weights_upto(
    code: &LinearCode,
    x: &BitVector,
    upto: usize,
    budget: &SearchBudget,
) -> Result<WeightDistribution, SearchError> {
    let search = coset_search(code, x, budget)?;
    let upto = upto.min(code.length());
    Ok(search.count(Filter::Tagged, upto, code.dimension()))
}

/// Information-set ranks the enumerator would use for `code`.
pub fn information_set_ranks(code: &LinearCode) -> Result<Vec<usize>, SearchError> {
    let engine = engine::build(code.length(), code.generators(), &untagged(code))
        .ok_or(SearchError::TooLong(code.length()))?;
    Ok(engine.set_ranks())
}

/// Disjoint information sets (0-indexed columns) the enumerator would use.
pub fn information_sets(code: &LinearCode) -> Result<Vec<Vec<usize>>, SearchError> {
    let engine = engine::build(code.length(), code.generators(), &untagged(code))
        .ok_or(SearchError::TooLong(code.length()))?;
    Ok(engine.set_columns())
}

/// Lower bound on the weight of any codeword not met after enumerating
/// levels `0..=level` of information sets with the given ranks.
#[must_use]
pub fn enumeration_lower_bound(k: usize, ranks: &[usize], level: usize) -> usize {
    ranks
        .iter()
        .map(|&r| (level + 1).saturating_sub(k - r))
        .sum()
}

/// Full weight distribution by a Gray-code walk over all codewords.
pub fn brute_force_wef(code: &LinearCode) -> Result<WeightDistribution, SearchError> {
    let k = code.dimension();
    if k > BRUTE_FORCE_MAX_DIM {
        return Err(SearchError::TooLargeForBruteForce(k));
    }
    let n = code.length();
    let mut counts = vec![0u64; n + 1];
    let g = code.generators();
    let mut cur = vec![0u64; crate::gf2::words_for(n)];
    counts[0] = 1;
    for step in 1u64..(1u64 << k) {
        let row = g[step.trailing_zeros() as usize].words();
        let mut w = 0;
        for (a, b) in cur.iter_mut().zip(row) {
            *a ^= b;
            w += a.count_ones() as usize;
        }
        counts[w] += 1;
    }
    let counts = counts
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(w, c)| (w, BigUint::from(c)))
        .collect();
    Ok(WeightDistribution {
        length: n,
        dimension: k,
        counts,
        complete_upto: n,
        requested_upto: n,
        stats: SearchStats::default(),
    })
}

impl WeightDistribution {
    /// `2^dimension`; the counts sum to this exactly when complete up to `n`.
    #[must_use]
    pub fn space_size(&self) -> BigUint {
        BigUint::one() << self.dimension
    }

    #[must_use]
    pub fn is_zero_at(&self, weight: usize) -> bool {
        self.count(weight).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;

    fn hamming8() -> LinearCode {
        LinearCode::from_matrix(
            &BitMatrix::from_strs(&["11110000", "00111100", "00001111", "01010101"]).unwrap(),
        )
    }

    fn i2() -> LinearCode {
        LinearCode::new(2, vec![BitVector::parse("11").unwrap()]).unwrap()
    }

    #[test]
    fn hamming8_min_weight() {
        let m = min_weight(&hamming8(), &SearchBudget::default()).unwrap();
        assert_eq!(m.result, WeightResult::Exact(4));
        assert_eq!(m.witness.weight(), 4);
        assert!(hamming8().contains(&m.witness));
    }

    #[test]
    fn hamming8_brute_force() {
        let d = brute_force_wef(&hamming8()).unwrap();
        assert_eq!(
            d.to_u64_map(),
            BTreeMap::from([(0, 1), (4, 14), (8, 1)])
        );
        assert_eq!(d.total(), d.space_size());
    }

    #[test]
    fn i2_distributions() {
        let d = brute_force_wef(&i2()).unwrap();
        assert_eq!(d.to_u64_map(), BTreeMap::from([(0, 1), (2, 1)]));
        let x = BitVector::parse("01").unwrap();
        let m = coset_min_weight(&i2(), &x, &SearchBudget::default()).unwrap();
        assert_eq!(m.result, WeightResult::Exact(1));
    }

    #[test]
    fn counting_matches_brute_force_on_hamming8() {
        let c = count_words_upto(&hamming8(), 8, &SearchBudget::default()).unwrap();
        assert!(c.is_complete());
        assert_eq!(c.counts(), brute_force_wef(&hamming8()).unwrap().counts());
    }

    #[test]
    fn coset_of_codeword_is_rejected() {
        let x = hamming8().generators()[0].clone();
        assert_eq!(
            coset_min_weight(&hamming8(), &x, &SearchBudget::default()).unwrap_err(),
            SearchError::Code(CodeError::VectorInCode)
        );
    }

    #[test]
    fn brute_force_dimension_cap() {
        let big = LinearCode::full_space(29);
        assert_eq!(
            brute_force_wef(&big).unwrap_err(),
            SearchError::TooLargeForBruteForce(29)
        );
    }

    fn reed_muller_1_4() -> LinearCode {
        LinearCode::from_matrix(
            &BitMatrix::from_strs(&[
                "1111111111111111",
                "0000000011111111",
                "0000111100001111",
                "0011001100110011",
                "0101010101010101",
            ])
            .unwrap(),
        )
    }

    #[test]
    fn zero_budget_gives_bounds() {
        let budget = SearchBudget::default().with_max_enumerated(0);
        let rm = reed_muller_1_4();
        let m = min_weight(&rm, &budget).unwrap();
        assert!(m.stats.exhausted);
        assert_eq!(m.result, WeightResult::Bounds { lo: 4, hi: 8 });
        let c = count_words_upto(&rm, 8, &budget).unwrap();
        assert!(!c.is_complete());
        assert!(c.counts().is_empty());

        let full = min_weight(&rm, &SearchBudget::default()).unwrap();
        assert_eq!(full.result, WeightResult::Exact(8));
    }

    #[test]
    fn level_zero_can_certify() {
        // two full-rank sets and weights divisible by 4 give a bound of 4
        let m = min_weight(&hamming8(), &SearchBudget::default().with_max_enumerated(0)).unwrap();
        assert_eq!(m.result, WeightResult::Exact(4));
        assert_eq!(m.stats.enumerated, 0);
    }

    #[test]
    fn lattice_rounding() {
        let l = Lattice {
            modulus: 4,
            residue: 0,
        };
        assert_eq!(l.round_up(13), 16);
        assert_eq!(l.round_up(16), 16);
        let odd = Lattice {
            modulus: 2,
            residue: 1,
        };
        assert_eq!(odd.round_up(12), 13);
        assert_eq!(odd.round_up(13), 13);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(41, 7), 22_481_940);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(10, 3), 120);
    }
}
