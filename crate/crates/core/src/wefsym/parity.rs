use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::form::{rat, LinearForm, Param};
use super::poly::{ParamPoly, RationalPoly};
use super::{possible_enumerators, ShadowCase, WefError};
use crate::gf2::{BitMatrix, BitVector};

/// `f(y) = y − 34y⁵ + 34y¹³ − y¹⁷`.
fn f_poly() -> RationalPoly {
    RationalPoly::from_terms(&[(1, 1), (5, -34), (13, 34), (17, -1)])
}

/// `W⁽¹⁾ − W⁽³⁾` for a length `24k + 10` code, as
/// `Σ_{i<k} b_i (1 + 14y⁴ + y⁸)^{3k−1−3i} (y⁴(1 − y⁴)⁴)^i f(y)`
/// with free parameters `b0, …, b{k−1}`.
#[must_use]
pub fn c1_basis(k: usize) -> ParamPoly {
    let p = RationalPoly::from_terms(&[(0, 1), (4, 14), (8, 1)]);
    let q = RationalPoly::from_terms(&[(4, 1), (8, -4), (12, 6), (16, -4), (20, 1)]);
    let f = f_poly();
    let forms: Vec<LinearForm> = (0..k).map(|i| LinearForm::param(format!("b{i}"))).collect();
    let polys: Vec<RationalPoly> = (0..k)
        .map(|i| p.pow(3 * k - 1 - 3 * i).mul(&q.pow(i)).mul(&f))
        .collect();
    ParamPoly::combination(forms.iter().zip(&polys))
}

fn length_for(k: usize) -> Result<(usize, usize), WefError> {
    if !(2..=5).contains(&k) {
        return Err(WefError::UnsupportedK(k));
    }
    Ok((24 * k + 10, 4 * k + 2))
}

/// `W⁽¹⁾ = (W_S + (W⁽¹⁾ − W⁽³⁾)) / 2` for the `d(S) ≥ 5` family of length
/// `24k + 10`, with `b0 = 0` since the shadow has no vector of weight 1.
pub fn w1_family(k: usize) -> Result<ParamPoly, WefError> {
    let (n, d) = length_for(k)?;
    let family = possible_enumerators(n, d, ShadowCase::AtLeast5)?;
    let diff = c1_basis(k).substitute("b0", &LinearForm::zero());
    Ok(family.w_s.add(&diff).scale(&BigRational::new(1.into(), 2.into())))
}

/// `form ≡ 0 (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub form: LinearForm,
    pub modulus: u64,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ≡ 0 (mod {})", self.form, self.modulus)
    }
}

/// Congruences that hold for every admissible integer choice of parameters.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CongruenceSystem {
    pub relations: Vec<Relation>,
}

impl CongruenceSystem {
    /// Substitutes an integral form for a parameter and renormalises.
    #[must_use]
    pub fn substitute(&self, name: &str, value: &LinearForm) -> Self {
        let forms: Vec<LinearForm> = self
            .relations
            .iter()
            .map(|r| r.form.substitute(name, value))
            .collect();
        Self::from_mod2(&forms, |_| false).unwrap_or_else(|_| Self::inconsistent())
    }

    fn inconsistent() -> Self {
        Self {
            relations: vec![Relation {
                form: LinearForm::integer(1),
                modulus: 2,
            }],
        }
    }

    /// Forms whose only parameter is `name`, i.e. relations `name ≡ c`.
    #[must_use]
    pub fn forces_even(&self, name: &str) -> bool {
        self.relations.iter().any(|r| {
            r.modulus == 2 && r.form.params().count() == 1 && r.form.constant_term() == &rat(0)
                && r.form.params().next().is_some_and(|p| p.as_str() == name)
        })
    }

    /// Reduces integral forms mod 2, eliminates the parameters selected by
    /// `auxiliary` and returns the remaining relations in reduced echelon
    /// form.
    fn from_mod2(forms: &[LinearForm], auxiliary: impl Fn(&Param) -> bool) -> Result<Self, WefError> {
        let mut vars: Vec<Param> = forms.iter().flat_map(|f| f.params().cloned()).collect();
        vars.sort();
        vars.dedup();
        let (mut order, rest): (Vec<Param>, Vec<Param>) = vars.into_iter().partition(|p| auxiliary(p));
        let aux = order.len();
        order.extend(rest);
        let column: BTreeMap<&Param, usize> = order.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let cols = order.len() + 1;
        let odd = |c: &BigRational| c.is_integer() && c.numer().is_odd();
        let mut rows = Vec::new();
        for f in forms {
            if !f.has_integer_coefficients() {
                return Err(WefError::Inconsistent {
                    coefficient: f.to_string(),
                    residual: "non-integral coefficient".into(),
                });
            }
            let mut support: Vec<usize> = f.terms().filter(|(_, c)| odd(c)).map(|(p, _)| column[p]).collect();
            if odd(f.constant_term()) {
                support.push(cols - 1);
            }
            rows.push(BitVector::from_support(cols, &support));
        }
        let echelon = BitMatrix::new(cols, rows)
            .expect("rows have the declared width")
            .rref();
        let mut relations = Vec::new();
        for (row, &pivot) in echelon.matrix.rows().iter().zip(&echelon.pivots) {
            if pivot < aux {
                continue;
            }
            if pivot == cols - 1 {
                return Err(WefError::Inconsistent {
                    coefficient: "parity".into(),
                    residual: "1".into(),
                });
            }
            let mut form = LinearForm::zero();
            for c in row.ones_iter() {
                form += if c == cols - 1 {
                    LinearForm::integer(1)
                } else {
                    LinearForm::param(order[c].as_str())
                };
            }
            relations.push(Relation { form, modulus: 2 });
        }
        Ok(Self { relations })
    }
}

impl fmt::Display for CongruenceSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.relations.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn is_aux(p: &Param) -> bool {
    let s = p.as_str();
    s.len() > 1 && s.starts_with('b') && s[1..].bytes().all(|b| b.is_ascii_digit())
}

/// Degree of the displayed `W⁽¹⁾` prefix for each `k`.
fn parity_degree(k: usize) -> usize {
    if k == 5 {
        21
    } else {
        17
    }
}

/// Parity restrictions forced on the shadow parameters of the length
/// `24k + 10` family by integrality of the coefficients of `W⁽¹⁾` up to the
/// usual display degree.
pub fn derive_parity(k: usize) -> Result<CongruenceSystem, WefError> {
    derive_parity_upto(k, parity_degree(k))
}

/// As [`derive_parity`], using the coefficients of `W⁽¹⁾` up to `degree`.
pub fn derive_parity_upto(k: usize, degree: usize) -> Result<CongruenceSystem, WefError> {
    let w1 = w1_family(k)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let doubled: Vec<LinearForm> = w1
        .truncate(degree)
        .coefficients()
        .map(|(_, f)| f.scale(&two))
        .collect();
    CongruenceSystem::from_mod2(&doubled, is_aux)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(s: &str) -> LinearForm {
        s.parse().unwrap()
    }

    #[test]
    fn k2_basis() {
        let c = c1_basis(2);
        assert_eq!(c.coefficient(1), lf("b0"));
        assert_eq!(c.coefficient(5), lf("36b0 + b1"));
        assert_eq!(c.coefficient(9), lf("-415b0 - 10b1"));
        assert_eq!(c.degree(), Some(57));
    }

    #[test]
    fn substitution_renormalises() {
        let system = CongruenceSystem {
            relations: vec![Relation {
                form: lf("c"),
                modulus: 2,
            }],
        };
        let renamed = system.substitute("c", &lf("3β + 2α"));
        assert_eq!(renamed.to_string(), "{β ≡ 0 (mod 2)}");
        assert!(renamed.forces_even("β"));
        let contradiction = system.substitute("c", &lf("1"));
        assert_eq!(contradiction.relations[0].form, lf("1"));
    }

    #[test]
    fn k_out_of_range() {
        assert_eq!(derive_parity(1), Err(WefError::UnsupportedK(1)));
        assert_eq!(w1_family(6).unwrap_err(), WefError::UnsupportedK(6));
    }
}
