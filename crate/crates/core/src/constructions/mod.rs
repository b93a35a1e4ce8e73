//! Code constructions: bordered double circulant codes, the `C(x)` extension
//! of a doubly even self-dual code, and self-dual neighbors.

mod table1;

pub use table1::{table1, TABLE1_JSON};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{BitVector, CodeError, LinearCode, ParityClass};

/// First row of the circulant block of `B₈₀,₄`.
pub const B80_FIRST_ROW: &str = "111100000100101111101011101001101100011";

/// Support of `x₈₀` (1-indexed coordinates of `B₈₀,₄`).
pub const X80_SUPPORT: [usize; 13] = [2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32, 35, 38];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("double circulant generator is not self-orthogonal under either shift direction")]
    NotSelfOrthogonal,
    #[error("code is not self-dual")]
    NotSelfDual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shift {
    /// Row `i + 1` is row `i` rotated one place to the right.
    Right,
    Left,
}

/// A circulant block given by its first row, optionally bordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    pub first_row: BitVector,
    /// With a border the right block is
    /// ```text
    /// 0 1 ... 1
    /// 1
    /// :    R
    /// 1
    /// ```
    /// and the code has length `2(m + 1)`; without it the generator is
    /// `[I_m | R]`.
    pub border: bool,
}

impl CirculantSpec {
    #[must_use]
    pub fn bordered(first_row: BitVector) -> Self {
        Self {
            first_row,
            border: true,
        }
    }

    /// Circulant data of `B₈₀,₄`.
    #[must_use]
    pub fn b80() -> Self {
        Self::bordered(BitVector::parse(B80_FIRST_ROW).expect("valid bit string"))
    }

    fn right_block(&self, shift: Shift) -> Vec<BitVector> {
        let m = self.first_row.len();
        let circulant = (0..m).map(|i| {
            let mut row = BitVector::zeros(m);
            for j in self.first_row.ones_iter() {
                let col = match shift {
                    Shift::Right => (j + i) % m,
                    Shift::Left => (j + m - i % m) % m,
                };
                row.set(col);
            }
            row
        });
        if !self.border {
            return circulant.collect();
        }
        let mut top = BitVector::ones(m + 1);
        top.clear(0);
        std::iter::once(top)
            .chain(circulant.map(|r| BitVector::from_support(1, &[0]).concat(&r)))
            .collect()
    }

    fn generator(&self, shift: Shift) -> LinearCode {
        let block = self.right_block(shift);
        let size = block.len();
        let rows = block
            .into_iter()
            .enumerate()
            .map(|(i, r)| BitVector::from_support(size, &[i]).concat(&r))
            .collect();
        LinearCode::new(2 * size, rows).expect("rows have equal length")
    }
}

/// Builds `[I | B]` from a (bordered) circulant block `B`.
///
/// Rows of the circulant are right shifts of the first row. If that
/// generator is not self-orthogonal the left-shift convention is tried, and
/// the convention that worked is returned with the code.
pub fn bordered_double_circulant_with_shift(
    spec: &CirculantSpec,
) -> Result<(LinearCode, Shift), ConstructionError> {
    for shift in [Shift::Right, Shift::Left] {
        let code = spec.generator(shift);
        if code.is_self_orthogonal() {
            return Ok((code, shift));
        }
    }
    Err(ConstructionError::NotSelfOrthogonal)
}

pub fn bordered_double_circulant(spec: &CirculantSpec) -> Result<LinearCode, ConstructionError> {
    bordered_double_circulant_with_shift(spec).map(|(c, _)| c)
}

/// The singly even self-dual code `C(x)` of length `n + 2` built from a
/// doubly even self-dual code `C` of length `n` and an odd-weight `x`:
///
/// `C(x) = (0,0,C⁰) ∪ (1,1,C²) ∪ (1,0,C¹) ∪ (0,1,C³)`
///
/// with `C¹ = x + C⁰`. The two new coordinates come first.
pub fn tsai_extend(code: &LinearCode, x: &BitVector) -> Result<LinearCode, ConstructionError> {
    let split = code.coset_split(x)?;
    let prefix = |a: bool, b: bool| BitVector::from_bits(&[a, b]);
    let mut rows: Vec<BitVector> = split
        .c0
        .generators()
        .iter()
        .map(|g| prefix(false, false).concat(g))
        .collect();
    rows.push(prefix(true, true).concat(&split.reps[1]));
    rows.push(prefix(true, false).concat(&split.reps[0]));
    Ok(LinearCode::new(code.length() + 2, rows)?)
}

/// `B₈₀,₄`, the bordered double circulant doubly even self-dual `[80,40,16]`
/// code.
#[must_use]
pub fn build_b80() -> LinearCode {
    bordered_double_circulant(&CirculantSpec::b80()).expect("B80 generator is self-orthogonal")
}

/// `x₈₀` as a vector of length 80.
#[must_use]
pub fn x80() -> BitVector {
    BitVector::from_support_one_based(80, &X80_SUPPORT).expect("valid support")
}

/// `C₈₂ = B₈₀,₄(x₈₀)`.
#[must_use]
pub fn build_c82() -> LinearCode {
    tsai_extend(&build_b80(), &x80()).expect("B80 is doubly even and x80 has odd weight")
}

/// The self-dual neighbor `<C ∩ <x>^⊥, x>` of a self-dual code `C`.
pub fn neighbor(code: &LinearCode, x: &BitVector) -> Result<LinearCode, ConstructionError> {
    if !code.is_self_dual() {
        return Err(ConstructionError::NotSelfDual);
    }
    if x.len() != code.length() {
        return Err(CodeError::LengthMismatch {
            expected: code.length(),
            found: x.len(),
        }
        .into());
    }
    if x.weight() % 2 == 1 {
        return Err(CodeError::OddWeight(x.weight()).into());
    }
    if code.contains(x) {
        return Err(CodeError::VectorInCode.into());
    }
    Ok(code
        .subcode_orthogonal_to(x)
        .extended_by(std::slice::from_ref(x)))
}

/// Dimension of `C ∩ D`.
#[must_use]
pub fn intersection_dimension(a: &LinearCode, b: &LinearCode) -> usize {
    // dim(A ∩ B) = dim A + dim B - dim(A + B)
    let sum = a.extended_by(b.generators());
    a.dimension() + b.dimension() - sum.dimension()
}

/// The three possible weight enumerator families of a singly even
/// self-dual `[82,41,14]` code, by shadow minimum weight 1, 5 and at least 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    W1,
    W2,
    W3,
}

impl Family {
    /// Family implied by the shadow minimum weight of an `[82,41,14]` code.
    #[must_use]
    pub fn from_shadow_min_weight(d: usize) -> Option<Self> {
        match d {
            1 => Some(Self::W1),
            5 => Some(Self::W2),
            d if d >= 9 => Some(Self::W3),
            _ => None,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::W1 => "W1",
            Self::W2 => "W2",
            Self::W3 => "W3",
        })
    }
}

/// One row of the neighbor table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborSpec {
    pub id: usize,
    /// 1-indexed coordinates of `x` in `C₈₂`.
    pub support: Vec<usize>,
    pub family: Family,
    pub alpha: i64,
    pub beta: i64,
}

impl NeighborSpec {
    pub fn vector(&self) -> Result<BitVector, CodeError> {
        BitVector::from_support_one_based(82, &self.support)
    }

    /// The neighbor `N₈₂,ᵢ` of `c82`.
    pub fn build(&self, c82: &LinearCode) -> Result<LinearCode, ConstructionError> {
        neighbor(c82, &self.vector()?)
    }
}

/// True for a singly even self-dual code.
#[must_use]
pub fn is_singly_even_self_dual(code: &LinearCode) -> bool {
    code.parity_class() == ParityClass::SinglyEven
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;
    use std::collections::HashSet;

    fn hamming8() -> LinearCode {
        LinearCode::from_matrix(
            &BitMatrix::from_strs(&["11110000", "00111100", "00001111", "01010101"]).unwrap(),
        )
    }

    #[test]
    fn b80_is_doubly_even_self_dual() {
        let (b80, shift) = bordered_double_circulant_with_shift(&CirculantSpec::b80()).unwrap();
        assert_eq!(shift, Shift::Right);
        assert_eq!(b80.length(), 80);
        assert_eq!(b80.dimension(), 40);
        assert_eq!(b80.parity_class(), ParityClass::DoublyEven);
    }

    #[test]
    fn small_bordered_circulants() {
        // all-ones first row of length 3 gives rows of weight 5
        let spec = CirculantSpec::bordered(BitVector::parse("111").unwrap());
        assert_eq!(
            bordered_double_circulant(&spec),
            Err(ConstructionError::NotSelfOrthogonal)
        );
        // an even-weight first row of odd length gives a doubly even [8,4]
        let spec = CirculantSpec::bordered(BitVector::parse("110").unwrap());
        let code = bordered_double_circulant(&spec).unwrap();
        assert_eq!(code.length(), 8);
        assert_eq!(code.parity_class(), ParityClass::DoublyEven);
        assert!(code.codewords().all(|c| c.weight() % 4 == 0));
        // even length with a border breaks the top row
        let spec = CirculantSpec::bordered(BitVector::parse("1100").unwrap());
        assert!(bordered_double_circulant(&spec).is_err());
    }

    #[test]
    fn unbordered_circulant() {
        let spec = CirculantSpec {
            first_row: BitVector::parse("1").unwrap(),
            border: false,
        };
        let code = bordered_double_circulant(&spec).unwrap();
        assert_eq!(code, LinearCode::new(2, vec![BitVector::parse("11").unwrap()]).unwrap());
    }

    #[test]
    fn tsai_on_e8_weight_one() {
        let x = BitVector::from_support(8, &[0]);
        let c = tsai_extend(&hamming8(), &x).unwrap();
        assert_eq!((c.length(), c.dimension()), (10, 5));
        assert_eq!(c.parity_class(), ParityClass::SinglyEven);
        let d = c.codewords().filter(|w| !w.is_zero()).map(|w| w.weight()).min();
        assert_eq!(d, Some(2));
        let s = c.shadow().unwrap();
        assert_eq!(s.vectors().map(|v| v.weight()).min(), Some(1));
    }

    #[test]
    fn tsai_rejects_bad_inputs() {
        let x = BitVector::from_support(8, &[0, 1]);
        assert_eq!(
            tsai_extend(&hamming8(), &x),
            Err(ConstructionError::Code(CodeError::EvenWeight(2)))
        );
    }

    #[test]
    fn neighbor_preconditions() {
        let h = hamming8();
        let cw = h.generators()[0].clone();
        assert_eq!(
            neighbor(&h, &cw),
            Err(ConstructionError::Code(CodeError::VectorInCode))
        );
        let odd = BitVector::from_support(8, &[0]);
        assert_eq!(
            neighbor(&h, &odd),
            Err(ConstructionError::Code(CodeError::OddWeight(1)))
        );
        let x = BitVector::from_support(8, &[0, 1]);
        let nb = neighbor(&h, &x).unwrap();
        assert!(nb.is_self_dual());
        assert_eq!(intersection_dimension(&h, &nb), 3);
    }

    #[test]
    fn table_matches_shipped_json() {
        let shipped: Vec<NeighborSpec> = serde_json::from_str(TABLE1_JSON).unwrap();
        assert_eq!(shipped, table1());
    }

    #[test]
    fn table_rows() {
        let t = table1();
        assert_eq!(t.len(), 50);
        assert_eq!(
            t[0].support,
            vec![2, 7, 10, 14, 47, 51, 54, 56, 58, 59, 62, 64, 72, 79]
        );
        assert_eq!((t[0].family, t[0].alpha, t[0].beta), (Family::W2, 18, -750));
        assert_eq!(
            t[22].support,
            vec![4, 7, 8, 9, 46, 57, 58, 61, 63, 68, 71, 73, 78, 81]
        );
        assert_eq!((t[22].family, t[22].alpha, t[22].beta), (Family::W3, 0, -640));
        assert_eq!(
            t[49].support,
            vec![3, 7, 9, 13, 43, 46, 48, 49, 50, 52, 58, 60, 63, 81]
        );
        assert_eq!((t[49].family, t[49].alpha, t[49].beta), (Family::W3, 0, -728));
        for (i, row) in t.iter().enumerate() {
            assert_eq!(row.id, i + 1);
            assert_eq!(row.support.len(), 14);
            let distinct: HashSet<_> = row.support.iter().collect();
            assert_eq!(distinct.len(), 14);
            assert!(row.support.windows(2).all(|w| w[0] < w[1]));
            assert!(row.support.iter().all(|&c| (1..=82).contains(&c)));
            assert_eq!(row.vector().unwrap().weight() % 2, 0);
        }
    }

    #[test]
    fn c82_structure() {
        let c82 = build_c82();
        assert_eq!(x80().weight(), 13);
        assert_eq!((c82.length(), c82.dimension()), (82, 41));
        assert_eq!(c82.parity_class(), ParityClass::SinglyEven);
        for row in table1() {
            let nb = row.build(&c82).unwrap();
            assert!(nb.is_self_dual(), "N82,{} not self-dual", row.id);
            assert_eq!(intersection_dimension(&c82, &nb), 40);
        }
    }
}
