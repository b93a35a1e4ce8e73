use std::cmp::Ordering;
use std::fmt;

use super::{BitMatrix, BitVector, CodeError};

/// Classification of a code by the weights of its codewords modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum ParityClass {
    DoublyEven,
    SinglyEven,
    NotSelfDual,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::DoublyEven => "DoublyEven",
            Self::SinglyEven => "SinglyEven",
            Self::NotSelfDual => "NotSelfDual",
        })
    }
}

/// A binary linear code held by a generator matrix in reduced row echelon
/// form. Two codes are equal iff they have the same row space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    n: usize,
    generators: BitMatrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Span of `rows`. Dependent and zero rows are dropped.
    pub fn new(n: usize, rows: Vec<BitVector>) -> Result<Self, CodeError> {
        Ok(Self::from_matrix(&BitMatrix::new(n, rows)?))
    }

    #[must_use]
    pub fn from_matrix(m: &BitMatrix) -> Self {
        let e = m.rref();
        let mut rows = e.matrix.into_rows();
        rows.truncate(e.rank);
        Self {
            n: m.cols(),
            generators: BitMatrix { cols: m.cols(), rows },
            pivots: e.pivots,
        }
    }

    #[must_use]
    pub fn zero(n: usize) -> Self {
        Self::from_matrix(&BitMatrix::zeros(0, n))
    }

    #[must_use]
    pub fn full_space(n: usize) -> Self {
        Self::from_matrix(&BitMatrix::identity(n))
    }

    #[must_use]
    pub fn length(&self) -> usize {
        self.n
    }

    #[must_use]
    pub fn dimension(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical generator matrix (RREF, no zero rows).
    #[must_use]
    pub fn generator_matrix(&self) -> &BitMatrix {
        &self.generators
    }

    #[must_use]
    pub fn generators(&self) -> &[BitVector] {
        self.generators.rows()
    }

    #[must_use]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Clears the pivot coordinates of `v` using the generators. The result
    /// is the canonical representative of the coset `v + C`.
    #[must_use]
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.n, "vector length must match code length");
        let mut out = v.clone();
        for (row, &p) in self.generators().iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    #[must_use]
    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// The code spanned by `self` together with `extra`.
    #[must_use]
    pub fn extended_by(&self, extra: &[BitVector]) -> Self {
        let mut rows = self.generators().to_vec();
        rows.extend_from_slice(extra);
        Self::from_matrix(&BitMatrix {
            cols: self.n,
            rows,
        })
    }

    #[must_use]
    pub fn dual(&self) -> Self {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = BitVector::zeros(self.n);
                v.set(free);
                for (row, &p) in self.generators().iter().zip(&self.pivots) {
                    if row.get(free) {
                        v.set(p);
                    }
                }
                v
            })
            .collect();
        Self::from_matrix(&BitMatrix {
            cols: self.n,
            rows,
        })
    }

    #[must_use]
    pub fn is_self_orthogonal(&self) -> bool {
        let g = self.generators();
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i..].iter().all(|b| !a.dot(b)))
    }

    #[must_use]
    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.n && self.is_self_orthogonal()
    }

    /// For a self-orthogonal code `wt(x + y) ≡ wt(x) + wt(y) (mod 4)`, so the
    /// generator weights decide the class.
    #[must_use]
    pub fn parity_class(&self) -> ParityClass {
        if !self.is_self_dual() {
            ParityClass::NotSelfDual
        } else if self.generators().iter().all(|g| g.weight() % 4 == 0) {
            ParityClass::DoublyEven
        } else {
            ParityClass::SinglyEven
        }
    }

    /// Codewords orthogonal to `x`.
    #[must_use]
    pub fn subcode_orthogonal_to(&self, x: &BitVector) -> Self {
        self.kernel_of(|g| g.dot(x))
    }

    /// The subcode `C₀` of codewords with weight divisible by 4.
    pub fn doubly_even_subcode(&self) -> Result<Self, CodeError> {
        if self.parity_class() != ParityClass::SinglyEven {
            return Err(CodeError::NotSinglyEven);
        }
        Ok(self.kernel_of(|g| g.weight() % 4 == 2))
    }

    /// Kernel of a linear functional given by its value on each generator.
    fn kernel_of(&self, functional: impl Fn(&BitVector) -> bool) -> Self {
        let mut pivot: Option<BitVector> = None;
        let mut rows = Vec::with_capacity(self.dimension());
        for g in self.generators() {
            if functional(g) {
                match &pivot {
                    None => pivot = Some(g.clone()),
                    Some(p) => rows.push(g.xor(p)),
                }
            } else {
                rows.push(g.clone());
            }
        }
        Self::from_matrix(&BitMatrix {
            cols: self.n,
            rows,
        })
    }

    /// Shadow `S = C₀^⊥ \ C` of a singly even self-dual code.
    ///
    /// `C₀^⊥ / C₀` has four cosets; two of them make up `C` and the other
    /// two make up `S`. The representative is the lexicographically smaller
    /// of the two reduced representatives of the shadow's `C₀`-cosets.
    pub fn shadow(&self) -> Result<ShadowCoset, CodeError> {
        let c0 = self.doubly_even_subcode()?;
        let outer = c0.dual();
        let s = outer
            .generators()
            .iter()
            .find(|g| !self.contains(g))
            .expect("C0-dual strictly contains C")
            .clone();
        let c2 = self
            .generators()
            .iter()
            .find(|g| g.weight() % 4 == 2)
            .expect("singly even code has a generator of weight 2 mod 4");
        let r1 = c0.reduce(&s);
        let r3 = c0.reduce(&s.xor(c2));
        let rep = match r1.lex_cmp(&r3) {
            Ordering::Greater => r3,
            _ => r1,
        };
        Ok(ShadowCoset {
            code: self.clone(),
            rep,
        })
    }

    /// The four-piece split of `C₀^⊥` used by the `C(x)` extension, where
    /// `C₀` is the subcode orthogonal to an odd-weight `x`.
    pub fn coset_split(&self, x: &BitVector) -> Result<CosetSplit, CodeError> {
        if x.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                found: x.len(),
            });
        }
        if self.parity_class() != ParityClass::DoublyEven {
            return Err(CodeError::NotDoublyEven);
        }
        if x.weight().is_multiple_of(2) {
            return Err(CodeError::EvenWeight(x.weight()));
        }
        let c0 = self.subcode_orthogonal_to(x);
        let r2 = self
            .generators()
            .iter()
            .find(|g| g.dot(x))
            .expect("odd-weight x is not orthogonal to a self-dual code");
        let r2 = c0.reduce(r2);
        let r3 = x.xor(&r2);
        Ok(CosetSplit {
            c0,
            reps: [x.clone(), r2, r3],
        })
    }

    /// Gray-code walk over all `2^k` codewords, starting at zero.
    ///
    /// # Panics
    /// Panics if the dimension is 64 or more.
    #[must_use]
    pub fn codewords(&self) -> Codewords<'_> {
        assert!(self.dimension() < 64, "dimension too large to enumerate");
        Codewords {
            code: self,
            current: BitVector::zeros(self.n),
            step: 0,
            total: 1u64 << self.dimension(),
        }
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}]", self.n, self.dimension())
    }
}

pub struct Codewords<'a> {
    code: &'a LinearCode,
    current: BitVector,
    step: u64,
    total: u64,
}

impl Iterator for Codewords<'_> {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            let row = self.step.trailing_zeros() as usize;
            self.current.xor_assign(&self.code.generators()[row]);
        }
        self.step += 1;
        Some(self.current.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = usize::try_from(self.total - self.step).ok();
        (left.unwrap_or(usize::MAX), left)
    }
}

/// The shadow of a singly even self-dual code, a single coset `rep + C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowCoset {
    code: LinearCode,
    rep: BitVector,
}

impl ShadowCoset {
    #[must_use]
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    #[must_use]
    pub fn rep(&self) -> &BitVector {
        &self.rep
    }

    #[must_use]
    pub fn contains(&self, v: &BitVector) -> bool {
        self.code.contains(&v.xor(&self.rep))
    }

    /// `C ∪ S = C₀^⊥`.
    #[must_use]
    pub fn union_code(&self) -> LinearCode {
        self.code.extended_by(std::slice::from_ref(&self.rep))
    }

    pub fn vectors(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.code.codewords().map(|c| c.xor(&self.rep))
    }
}

/// `C₀^⊥ = C⁰ ∪ C¹ ∪ C² ∪ C³` with `Cⁱ = rᵢ + C⁰`, where `C = C⁰ ∪ C²` and
/// `x + C = C¹ ∪ C³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSplit {
    pub c0: LinearCode,
    /// `r1 = x`, `r2 ∈ C \ C⁰`, `r3 = x + r2`.
    pub reps: [BitVector; 3],
}

impl CosetSplit {
    /// Piece `Cⁱ` for `i` in `0..4` as an iterator of vectors.
    pub fn piece(&self, i: usize) -> impl Iterator<Item = BitVector> + '_ {
        assert!(i < 4, "piece index must be 0..4");
        let shift = match i {
            0 => BitVector::zeros(self.c0.length()),
            _ => self.reps[i - 1].clone(),
        };
        self.c0.codewords().map(move |c| c.xor(&shift))
    }
}

/// Rains' upper bound on the minimum weight of a self-dual code of length `n`.
#[must_use]
pub fn rains_bound(n: usize) -> usize {
    let base = 4 * (n / 24);
    if n % 24 == 22 {
        base + 6
    } else {
        base + 4
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    pub(crate) fn hamming8() -> LinearCode {
        LinearCode::from_matrix(
            &BitMatrix::from_strs(&["11110000", "00111100", "00001111", "01010101"]).unwrap(),
        )
    }

    fn i2_power(m: usize) -> LinearCode {
        let n = 2 * m;
        let rows = (0..m)
            .map(|i| BitVector::from_support(n, &[2 * i, 2 * i + 1]))
            .collect();
        LinearCode::new(n, rows).unwrap()
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let d = LinearCode::full_space(4).dual();
        assert_eq!(d.dimension(), 0);
        assert_eq!(d, LinearCode::zero(4));
    }

    #[test]
    fn dual_of_repetition_is_even_weight_code() {
        let rep = LinearCode::new(4, vec![BitVector::ones(4)]).unwrap();
        let d = rep.dual();
        assert_eq!(d.dimension(), 3);
        // brute force: the dual is exactly the set of even-weight vectors
        let words: HashSet<_> = d.codewords().map(|c| c.to_string()).collect();
        let even: HashSet<_> = (0u32..16)
            .filter(|v| v.count_ones() % 2 == 0)
            .map(|v| format!("{:04b}", v.reverse_bits() >> 28))
            .collect();
        assert_eq!(words, even);
    }

    #[test]
    fn self_dual_code_is_its_own_dual() {
        let h = hamming8();
        assert!(h.is_self_dual());
        assert_eq!(h.dual(), h);
    }

    #[test]
    fn parity_classes() {
        assert_eq!(hamming8().parity_class(), ParityClass::DoublyEven);
        assert_eq!(i2_power(1).parity_class(), ParityClass::SinglyEven);
        let not = LinearCode::new(4, vec![BitVector::parse("1100").unwrap()]).unwrap();
        assert_eq!(not.parity_class(), ParityClass::NotSelfDual);
    }

    #[test]
    fn hamming8_parity_by_brute_force() {
        assert!(hamming8().codewords().all(|c| c.weight() % 4 == 0));
    }

    #[test]
    fn doubly_even_subcode_small() {
        let c = i2_power(1);
        let c0 = c.doubly_even_subcode().unwrap();
        assert_eq!(c0, LinearCode::zero(2));

        let c = i2_power(5);
        let c0 = c.doubly_even_subcode().unwrap();
        assert_eq!(c0.dimension(), 4);
        let brute: HashSet<_> = c.codewords().filter(|v| v.weight() % 4 == 0).collect();
        let got: HashSet<_> = c0.codewords().collect();
        assert_eq!(got, brute);

        assert_eq!(
            hamming8().doubly_even_subcode(),
            Err(CodeError::NotSinglyEven)
        );
    }

    #[test]
    fn shadow_of_i2() {
        let s = i2_power(1).shadow().unwrap();
        let vecs: HashSet<_> = s.vectors().map(|v| v.to_string()).collect();
        assert_eq!(vecs, HashSet::from(["01".to_string(), "10".to_string()]));
        assert_eq!(s.rep().to_string(), "01");
    }

    #[test]
    fn coset_split_e8_unit_vector() {
        let x = BitVector::from_support(8, &[0]);
        let split = hamming8().coset_split(&x).unwrap();
        assert_eq!(split.c0.dimension(), 3);
        assert!(split.piece(1).all(|v| v.weight() % 4 == 1));
        assert!(split.piece(3).all(|v| v.weight() % 4 == 3));
        let all: HashSet<_> = (0..4).flat_map(|i| split.piece(i)).collect();
        assert_eq!(all.len(), 32);
    }

    #[test]
    fn coset_split_rejects_bad_inputs() {
        let x = BitVector::from_support(8, &[0, 1]);
        assert_eq!(hamming8().coset_split(&x), Err(CodeError::EvenWeight(2)));
        let x = BitVector::from_support(10, &[0]);
        assert_eq!(i2_power(5).coset_split(&x), Err(CodeError::NotDoublyEven));
    }

    #[test]
    fn rains() {
        assert_eq!(rains_bound(82), 16);
        assert_eq!(rains_bound(22), 6);
        assert_eq!(rains_bound(24), 8);
        assert_eq!(rains_bound(46), 10);
    }

    #[test]
    fn codeword_walk_visits_everything_once() {
        let h = hamming8();
        let words: HashSet<_> = h.codewords().collect();
        assert_eq!(words.len(), 16);
        assert!(words.iter().all(|w| h.contains(w)));
    }
}
