use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::form::{rat, LinearForm};

/// Sparse polynomial in `y` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coefficients: BTreeMap<usize, BigRational>,
}

impl RationalPoly {
    #[must_use]
    pub fn zero() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn one() -> Self {
        Self::monomial(0, rat(1))
    }

    #[must_use]
    pub fn monomial(degree: usize, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_to(degree, c);
        p
    }

    /// From `(degree, coefficient)` pairs; repeated degrees add up.
    #[must_use]
    pub fn from_terms(terms: &[(usize, i64)]) -> Self {
        let mut p = Self::zero();
        for &(d, c) in terms {
            p.add_to(d, rat(c));
        }
        p
    }

    fn add_to(&mut self, degree: usize, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coefficients.entry(degree).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&degree);
        }
    }

    #[must_use]
    pub fn coefficient(&self, degree: usize) -> BigRational {
        self.coefficients
            .get(&degree)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coefficients.iter().map(|(d, c)| (*d, c))
    }

    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.keys().next_back().copied()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, c) in &other.coefficients {
            out.add_to(d, c.clone());
        }
        out
    }

    #[must_use]
    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (&d, v) in &self.coefficients {
            out.add_to(d, v * c);
        }
        out
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&d1, c1) in &self.coefficients {
            for (&d2, c2) in &other.coefficients {
                out.add_to(d1 + d2, c1 * c2);
            }
        }
        out
    }

    #[must_use]
    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    #[must_use]
    pub fn evaluate(&self, y: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .map(|(&d, c)| c * num_traits::pow(y.clone(), d))
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_param: ParamPoly = self.into();
        as_param.fmt(f)
    }
}

/// Polynomial in `y` whose coefficients are linear forms in free parameters.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ParamPoly {
    coefficients: BTreeMap<usize, LinearForm>,
}

impl From<&RationalPoly> for ParamPoly {
    fn from(p: &RationalPoly) -> Self {
        Self {
            coefficients: p
                .coefficients
                .iter()
                .map(|(&d, c)| (d, LinearForm::constant(c.clone())))
                .collect(),
        }
    }
}

impl ParamPoly {
    #[must_use]
    pub fn zero() -> Self {
        Self::default()
    }

    fn add_to(&mut self, degree: usize, f: LinearForm) {
        if f.is_zero() {
            return;
        }
        let slot = self.coefficients.entry(degree).or_default();
        *slot += f;
        if slot.is_zero() {
            self.coefficients.remove(&degree);
        }
    }

    /// `Σ form_i · poly_i`.
    #[must_use]
    pub fn combination<'a>(parts: impl IntoIterator<Item = (&'a LinearForm, &'a RationalPoly)>) -> Self {
        let mut out = Self::zero();
        for (form, poly) in parts {
            for (d, c) in poly.coefficients() {
                out.add_to(d, form.scale(c));
            }
        }
        out
    }

    /// Coefficient of `y^degree` (zero if absent).
    #[must_use]
    pub fn coefficient(&self, degree: usize) -> LinearForm {
        self.coefficients.get(&degree).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, &LinearForm)> {
        self.coefficients.iter().map(|(d, c)| (*d, c))
    }

    #[must_use]
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.keys().next_back().copied()
    }

    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, c) in &other.coefficients {
            out.add_to(d, c.clone());
        }
        out
    }

    #[must_use]
    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (&d, f) in &self.coefficients {
            out.add_to(d, f.scale(c));
        }
        out
    }

    /// Terms of degree at most `degree`.
    #[must_use]
    pub fn truncate(&self, degree: usize) -> Self {
        Self {
            coefficients: self
                .coefficients
                .range(..=degree)
                .map(|(&d, f)| (d, f.clone()))
                .collect(),
        }
    }

    #[must_use]
    pub fn substitute(&self, name: &str, value: &LinearForm) -> Self {
        let mut out = Self::zero();
        for (&d, f) in &self.coefficients {
            out.add_to(d, f.substitute(name, value));
        }
        out
    }

    #[must_use]
    pub fn substitute_all(&self, values: &BTreeMap<String, LinearForm>) -> Self {
        let mut out = Self::zero();
        for (&d, f) in &self.coefficients {
            out.add_to(d, f.substitute_all(values));
        }
        out
    }

    /// The polynomial obtained by fixing every parameter, if all are given.
    #[must_use]
    pub fn instantiate(&self, values: &BTreeMap<String, BigRational>) -> Option<RationalPoly> {
        let mut out = RationalPoly::zero();
        for (&d, f) in &self.coefficients {
            out.add_to(d, f.evaluate(values)?);
        }
        Some(out)
    }

    /// `Some` when no coefficient carries a parameter.
    #[must_use]
    pub fn as_rational(&self) -> Option<RationalPoly> {
        self.instantiate(&BTreeMap::new())
    }

    #[must_use]
    pub fn evaluate(&self, y: &BigRational) -> LinearForm {
        let mut out = LinearForm::zero();
        for (&d, f) in &self.coefficients {
            out += f.scale(&num_traits::pow(y.clone(), d));
        }
        out
    }

    /// Parameters that occur in some coefficient, in canonical order.
    #[must_use]
    pub fn params(&self) -> Vec<String> {
        let mut all: Vec<_> = self
            .coefficients
            .values()
            .flat_map(|f| f.params().cloned())
            .collect();
        all.sort();
        all.dedup();
        all.into_iter().map(|p| p.as_str().to_owned()).collect()
    }

    #[must_use]
    pub fn to_json(&self) -> Vec<CoefficientJson> {
        self.coefficients
            .iter()
            .map(|(&deg, f)| CoefficientJson {
                deg,
                constant: ratio_string(f.constant_term()),
                terms: f
                    .terms()
                    .map(|(p, c)| (p.as_str().to_owned(), ratio_string(c)))
                    .collect(),
            })
            .collect()
    }
}

/// `p/q` with `q ≥ 1`, also for integers.
#[must_use]
pub fn ratio_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientJson {
    pub deg: usize,
    #[serde(rename = "const")]
    pub constant: String,
    pub terms: BTreeMap<String, String>,
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.coefficients.iter().enumerate() {
            let single = c.terms().count() + usize::from(!c.constant_term().is_zero()) == 1;
            let negative = single
                && (c.constant_term().is_negative()
                    || c.terms().next().is_some_and(|(_, v)| v.is_negative()));
            let body = if single {
                let s = c.to_string();
                let s = s.trim_start_matches('-');
                if s.contains('/') && d > 0 {
                    format!("({s})")
                } else {
                    s.to_owned()
                }
            } else {
                format!("({c})")
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = body == "1";
            match d {
                0 => f.write_str(&body)?,
                _ if unit && d == 1 => f.write_str("y")?,
                _ if unit => write!(f, "y^{d}")?,
                1 => write!(f, "{body}y")?,
                _ => write!(f, "{body}y^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_power() {
        let p = RationalPoly::from_terms(&[(0, 1), (2, 1)]).pow(5);
        let coeffs: Vec<_> = (0..=10).step_by(2).map(|d| p.coefficient(d)).collect();
        assert_eq!(coeffs, [1, 5, 10, 10, 5, 1].map(rat));
        assert_eq!(p.degree(), Some(10));
        assert_eq!(p.evaluate(&rat(1)), rat(32));
    }

    #[test]
    fn display() {
        let x = LinearForm::param("β");
        let c = LinearForm::integer(3280) + x.scale(&rat(2));
        let one = RationalPoly::one();
        let y14 = RationalPoly::monomial(14, rat(1));
        let y5 = RationalPoly::monomial(5, rat(1));
        let p = ParamPoly::combination([
            (&LinearForm::integer(1), &one),
            (&c, &y14),
            (&LinearForm::integer(-7), &y5),
        ]);
        assert_eq!(p.to_string(), "1 - 7y^5 + (3280 + 2β)y^14");
        assert_eq!(p.truncate(5).to_string(), "1 - 7y^5");
        assert_eq!(p.params(), ["β"]);
        let json = serde_json::to_string(&p.to_json()[2]).unwrap();
        assert_eq!(json, r#"{"deg":14,"const":"3280/1","terms":{"β":"2/1"}}"#);
    }
}
