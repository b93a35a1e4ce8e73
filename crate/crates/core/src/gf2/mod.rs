//! Bit-packed linear algebra over GF(2).
//!
//! [`BitVector`] stores one bit per coordinate in 64-bit words; bits past the
//! logical length are always zero so that weights can be taken with a plain
//! population count over the word array. [`BitMatrix`] is a list of equal
//! length rows with a canonical reduced row echelon form.
//!
//! Coordinates are 0-indexed everywhere in this module. Helpers with a
//! `one_based` suffix convert from and to the 1-indexed supports used in
//! printed tables.

mod code;
pub mod io;

pub use code::{rains_bound, Codewords, CosetSplit, LinearCode, ParityClass, ShadowCoset};

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Number of bits held by one storage word.
pub const WORD_BITS: usize = 64;

/// Number of words needed to hold `len` bits.
#[inline]
pub const fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coordinate {coordinate} is outside 1..={len}")]
    CoordinateOutOfRange { coordinate: usize, len: usize },
    #[error("duplicate coordinate {0} in support")]
    DuplicateCoordinate(usize),
    #[error("invalid character {found:?} in bit string (expected '0' or '1')")]
    InvalidBit { found: char },
    #[error("code is not self-dual")]
    NotSelfDual,
    #[error("code is not singly even self-dual")]
    NotSinglyEven,
    #[error("code is not doubly even self-dual")]
    NotDoublyEven,
    #[error("vector must have odd weight, found weight {0}")]
    EvenWeight(usize),
    #[error("vector must have even weight, found weight {0}")]
    OddWeight(usize),
    #[error("vector lies in the code")]
    VectorInCode,
}

/// A vector over GF(2) with bit-packed storage.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    #[must_use]
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    #[must_use]
    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in &mut v.words {
            *w = !0;
        }
        v.clear_tail();
        v
    }

    /// Builds a vector from packed words. Bits past `len` are discarded.
    ///
    /// # Panics
    /// Panics if `words` is shorter than `len` requires.
    #[must_use]
    pub fn from_words(len: usize, words: &[u64]) -> Self {
        let nw = words_for(len);
        assert!(words.len() >= nw, "need {nw} words for {len} bits");
        let mut v = Self {
            len,
            words: words[..nw].to_vec(),
        };
        v.clear_tail();
        v
    }

    #[must_use]
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i);
            }
        }
        v
    }

    /// Builds a vector from 0-indexed coordinates. Repeated coordinates cancel.
    ///
    /// # Panics
    /// Panics if a coordinate is out of range.
    #[must_use]
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.flip(i);
        }
        v
    }

    /// Builds a vector from a 1-indexed support, rejecting repeats and
    /// coordinates outside `1..=len`.
    pub fn from_support_one_based(len: usize, support: &[usize]) -> Result<Self, CodeError> {
        let mut v = Self::zeros(len);
        for &c in support {
            if c == 0 || c > len {
                return Err(CodeError::CoordinateOutOfRange { coordinate: c, len });
            }
            if v.get(c - 1) {
                return Err(CodeError::DuplicateCoordinate(c));
            }
            v.set(c - 1);
        }
        Ok(v)
    }

    /// Parses a string of `0` and `1` characters. Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self, CodeError> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => return Err(CodeError::InvalidBit { found: c }),
            }
        }
        Ok(Self::from_bits(&bits))
    }

    #[inline]
    #[must_use]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    #[must_use]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        self.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
    }

    /// Hamming weight.
    #[inline]
    #[must_use]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of coordinates where both vectors are 1.
    #[must_use]
    pub fn overlap(&self, other: &Self) -> usize {
        self.check_len(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Standard inner product over GF(2).
    #[must_use]
    pub fn dot(&self, other: &Self) -> bool {
        self.check_len(other);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &Self) {
        self.check_len(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    #[must_use]
    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    #[must_use]
    pub fn and(&self, other: &Self) -> Self {
        self.check_len(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Self {
            len: self.len,
            words,
        }
    }

    /// 0-indexed positions of the set bits, ascending.
    #[must_use]
    pub fn support(&self) -> Vec<usize> {
        self.ones_iter().collect()
    }

    #[must_use]
    pub fn support_one_based(&self) -> Vec<usize> {
        self.ones_iter().map(|i| i + 1).collect()
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    /// Lowest set coordinate.
    #[must_use]
    pub fn first_one(&self) -> Option<usize> {
        self.ones_iter().next()
    }

    /// `self` followed by `tail`.
    #[must_use]
    pub fn concat(&self, tail: &Self) -> Self {
        let mut out = Self::zeros(self.len + tail.len);
        for i in self.ones_iter() {
            out.set(i);
        }
        for i in tail.ones_iter() {
            out.set(self.len + i);
        }
        out
    }

    /// Lexicographic order of the 0/1 strings (coordinate 0 most significant).
    #[must_use]
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.check_len(other);
        for (a, b) in self.words.iter().zip(&other.words) {
            if a != b {
                // lowest differing bit decides; the vector with a 0 there is smaller
                let diff = a ^ b;
                let bit = diff.trailing_zeros();
                return if (a >> bit) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    fn check_len(&self, other: &Self) {
        assert_eq!(
            self.len, other.len,
            "length mismatch ({} vs {})",
            self.len, other.len
        );
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Reduced row echelon form of a [`BitMatrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Same shape as the input; the first `rank` rows are nonzero.
    pub matrix: BitMatrix,
    pub rank: usize,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

/// A matrix over GF(2) stored as rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn new(cols: usize, rows: Vec<BitVector>) -> Result<Self, CodeError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(CodeError::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitVector::from_support(n, &[i])).collect();
        Self { cols: n, rows }
    }

    /// Parses rows given as 0/1 strings.
    pub fn from_strs(rows: &[&str]) -> Result<Self, CodeError> {
        let rows = rows
            .iter()
            .map(|s| BitVector::parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        let cols = rows.first().map_or(0, BitVector::len);
        Self::new(cols, rows)
    }

    #[must_use]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[must_use]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    #[must_use]
    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    #[must_use]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Gauss-Jordan elimination, scanning columns left to right.
    #[must_use]
    pub fn rref(&self) -> Echelon {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == rows.len() {
                break;
            }
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, found);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Echelon {
            matrix: Self {
                cols: self.cols,
                rows,
            },
            rank,
            pivots,
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_iter() {
                out.rows[c].set(r);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_and_tail_bits() {
        let v = BitVector::ones(70);
        assert_eq!(v.weight(), 70);
        assert_eq!(v.words()[1], (1 << 6) - 1);
        let w = BitVector::from_words(3, &[0xff]);
        assert_eq!(w.weight(), 3);
    }

    #[test]
    fn xor_weight_identity() {
        let a = BitVector::parse("1101100").unwrap();
        let b = BitVector::parse("0111010").unwrap();
        let x = a.xor(&b);
        assert_eq!(x.weight(), a.weight() + b.weight() - 2 * a.overlap(&b));
        assert_eq!(a.dot(&b), a.overlap(&b) % 2 == 1);
    }

    #[test]
    fn one_based_support_round_trip() {
        let v = BitVector::from_support_one_based(82, &[1, 41, 82]).unwrap();
        assert_eq!(v.support(), vec![0, 40, 81]);
        assert_eq!(v.support_one_based(), vec![1, 41, 82]);
        assert_eq!(
            BitVector::from_support_one_based(82, &[0]),
            Err(CodeError::CoordinateOutOfRange {
                coordinate: 0,
                len: 82
            })
        );
        assert_eq!(
            BitVector::from_support_one_based(8, &[3, 3]),
            Err(CodeError::DuplicateCoordinate(3))
        );
    }

    #[test]
    fn lex_order_is_string_order() {
        let a = BitVector::parse("0110").unwrap();
        let b = BitVector::parse("1000").unwrap();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
        assert_eq!(
            a.to_string().cmp(&b.to_string()),
            a.lex_cmp(&b),
            "matches 0/1 string comparison"
        );
    }

    #[test]
    fn rref_identity() {
        let id = BitMatrix::identity(3);
        let e = id.rref();
        assert_eq!(e.matrix, id);
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn rref_zero() {
        let z = BitMatrix::zeros(2, 4);
        let e = z.rref();
        assert_eq!(e.matrix, z);
        assert_eq!(e.rank, 0);
        assert!(e.pivots.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let m = BitMatrix::from_strs(&["1100", "0110", "1010"]).unwrap();
        let e = m.rref();
        assert_eq!(e.rank, 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(
            e.matrix,
            BitMatrix::from_strs(&["1010", "0110", "0000"]).unwrap()
        );
    }

    #[test]
    fn rref_is_canonical_for_row_space() {
        let a = BitMatrix::from_strs(&["1110", "0111"]).unwrap();
        let b = BitMatrix::from_strs(&["1001", "0111"]).unwrap();
        assert_eq!(a.rref().matrix, b.rref().matrix);
    }

    #[test]
    fn transpose_twice() {
        let m = BitMatrix::from_strs(&["10110", "01011"]).unwrap();
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().nrows(), 5);
    }
}
