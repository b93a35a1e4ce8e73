use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::WefError;

/// A parameter name. Latin names sort before Greek ones; a trailing number
/// is compared numerically, so `b2 < b10`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Param(String);

impl Param {
    #[must_use]
    pub fn new(name: impl Into<String>) -> Self {
        Self(name.into())
    }

    #[must_use]
    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn key(&self) -> (bool, &str, Option<u64>) {
        let greek = self
            .0
            .chars()
            .next()
            .is_some_and(|c| ('\u{370}'..='\u{3ff}').contains(&c));
        let split = self
            .0
            .find(|c: char| c.is_ascii_digit())
            .unwrap_or(self.0.len());
        let (prefix, digits) = self.0.split_at(split);
        (greek, prefix, digits.parse().ok())
    }

    /// Index `j` if this is the auto-generated Gleason parameter `a{j}`.
    pub(crate) fn gleason_index(&self) -> Option<usize> {
        let rest = self.0.strip_prefix('a')?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok()
    }
}

impl Ord for Param {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key()
            .cmp(&other.key())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Param {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Param {
    fn from(s: &str) -> Self {
        Self::new(s)
    }
}

/// `constant + Σ coefficient · parameter` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinearForm {
    constant: BigRational,
    terms: BTreeMap<Param, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LinearForm {
    #[must_use]
    pub fn zero() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn constant(c: BigRational) -> Self {
        Self {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    #[must_use]
    pub fn integer(c: i64) -> Self {
        Self::constant(rat(c))
    }

    #[must_use]
    pub fn param(name: impl Into<String>) -> Self {
        Self::term(rat(1), name)
    }

    #[must_use]
    pub fn term(coefficient: BigRational, name: impl Into<String>) -> Self {
        let mut f = Self::zero();
        f.add_term(Param::new(name), coefficient);
        f
    }

    fn add_term(&mut self, p: Param, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(p).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    #[must_use]
    pub fn constant_term(&self) -> &BigRational {
        &self.constant
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Param, &BigRational)> {
        self.terms.iter()
    }

    #[must_use]
    pub fn coefficient(&self, name: &str) -> BigRational {
        self.terms
            .get(&Param::new(name))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn params(&self) -> impl DoubleEndedIterator<Item = &Param> {
        self.terms.keys()
    }

    #[must_use]
    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    /// The constant value, if no parameter survives.
    #[must_use]
    pub fn as_constant(&self) -> Option<&BigRational> {
        self.is_constant().then_some(&self.constant)
    }

    /// True if the constant and every coefficient are integers.
    #[must_use]
    pub fn has_integer_coefficients(&self) -> bool {
        self.constant.is_integer() && self.terms.values().all(BigRational::is_integer)
    }

    #[must_use]
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            constant: &self.constant * c,
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v * c))
                .collect(),
        }
    }

    /// Replaces `name` by `value`.
    #[must_use]
    pub fn substitute(&self, name: &str, value: &Self) -> Self {
        let key = Param::new(name);
        let Some(c) = self.terms.get(&key) else {
            return self.clone();
        };
        let mut out = self.clone();
        out.terms.remove(&key);
        out + value.scale(c)
    }

    #[must_use]
    pub fn substitute_all(&self, values: &BTreeMap<String, Self>) -> Self {
        values
            .iter()
            .fold(self.clone(), |f, (name, v)| f.substitute(name, v))
    }

    /// Value when every parameter is set; `None` if one is missing.
    #[must_use]
    pub fn evaluate(&self, values: &BTreeMap<String, BigRational>) -> Option<BigRational> {
        let mut total = self.constant.clone();
        for (p, c) in &self.terms {
            total += c * values.get(p.as_str())?;
        }
        Some(total)
    }

    /// Solves `self = 0` for `name`.
    #[must_use]
    pub fn solve_for(&self, name: &str) -> Option<Self> {
        let c = self.coefficient(name);
        if c.is_zero() {
            return None;
        }
        let mut rest = self.clone();
        rest.terms.remove(&Param::new(name));
        Some(rest.scale(&(-c.recip())))
    }
}

impl Add for LinearForm {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for LinearForm {
    fn add_assign(&mut self, rhs: Self) {
        self.constant += rhs.constant;
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
    }
}

impl Sub for LinearForm {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl SubAssign for LinearForm {
    fn sub_assign(&mut self, rhs: Self) {
        *self += -rhs;
    }
}

impl Neg for LinearForm {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&rat(-1))
    }
}

impl Mul<&BigRational> for &LinearForm {
    type Output = LinearForm;
    fn mul(self, rhs: &BigRational) -> LinearForm {
        self.scale(rhs)
    }
}

impl From<i64> for LinearForm {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

impl From<BigRational> for LinearForm {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &BigRational, name: Option<&Param>) -> fmt::Result {
    let num = c.numer().abs();
    let den = c.denom();
    match name {
        None if den.is_one() => write!(f, "{num}"),
        None => write!(f, "{num}/{den}"),
        Some(p) => {
            if !num.is_one() {
                write!(f, "{num}")?;
            }
            write!(f, "{p}")?;
            if !den.is_one() {
                write!(f, "/{den}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = std::iter::once((&self.constant, None))
            .filter(|(c, _)| !c.is_zero())
            .chain(self.terms.iter().map(|(p, c)| (c, Some(p))));
        let mut first = true;
        for (c, name) in parts {
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            write_term(f, c, name)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn parse_uint(s: &str, at: &mut usize) -> Option<BigInt> {
    let digits: String = s[*at..].chars().take_while(char::is_ascii_digit).collect();
    if digits.is_empty() {
        return None;
    }
    *at += digits.len();
    digits.parse().ok()
}

fn parse_term(t: &str) -> Result<LinearForm, WefError> {
    let err = || WefError::Parse(format!("cannot read term {t:?}"));
    let (sign, body) = match t.as_bytes().first() {
        Some(b'-') => (-1, &t[1..]),
        Some(b'+') => (1, &t[1..]),
        _ => (1, t),
    };
    let mut at = 0;
    let mut c = BigRational::from_integer(parse_uint(body, &mut at).unwrap_or_else(BigInt::one));
    let had_number = at > 0;
    if had_number && body[at..].starts_with('/') {
        at += 1;
        c /= BigRational::from_integer(parse_uint(body, &mut at).ok_or_else(err)?);
    }
    if body[at..].starts_with('*') {
        at += 1;
    }
    let name: String = body[at..]
        .chars()
        .take_while(|ch| ch.is_alphanumeric() || *ch == '_')
        .collect();
    if !name.is_empty() && name.starts_with(|ch: char| ch.is_ascii_digit()) {
        return Err(err());
    }
    at += name.len();
    if !name.is_empty() && body[at..].starts_with('/') {
        at += 1;
        c /= BigRational::from_integer(parse_uint(body, &mut at).ok_or_else(err)?);
    }
    if at != body.len() || (name.is_empty() && !had_number) {
        return Err(err());
    }
    let c = c * rat(sign);
    Ok(if name.is_empty() {
        LinearForm::constant(c)
    } else {
        LinearForm::term(c, name)
    })
}

impl FromStr for LinearForm {
    type Err = WefError;

    /// Reads sums such as `3280 + 2β`, `-a9/8192 - 5a10/131072` or `1/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '−' { '-' } else { c })
            .collect();
        if s.is_empty() {
            return Err(WefError::Parse("empty form".into()));
        }
        let mut out = Self::zero();
        let mut start = 0;
        for (i, ch) in s.char_indices().skip(1) {
            if (ch == '+' || ch == '-') && !s[..i].ends_with(['+', '-', '*', '/']) {
                out += parse_term(&s[start..i])?;
                start = i;
            }
        }
        out += parse_term(&s[start..])?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lf(s: &str) -> LinearForm {
        s.parse().unwrap()
    }

    #[test]
    fn param_order() {
        let mut names: Vec<Param> = ["β", "b10", "b", "a", "b2", "α", "a10", "a9"]
            .into_iter()
            .map(Param::from)
            .collect();
        names.sort();
        let names: Vec<&str> = names.iter().map(Param::as_str).collect();
        assert_eq!(names, ["a", "a9", "a10", "b", "b2", "b10", "α", "β"]);
    }

    #[test]
    fn parse_and_display() {
        let f = lf("153 − 16α − β");
        assert_eq!(f.to_string(), "153 - 16α - β");
        assert_eq!(lf("-a9/8192 - 5a10/131072").to_string(), "-a9/8192 - 5a10/131072");
        assert_eq!(lf("1/2").as_constant(), Some(&BigRational::new(1.into(), 2.into())));
        assert_eq!(lf("3/2b"), lf("3b/2"));
        assert_eq!(lf("0").to_string(), "0");
        assert_eq!(lf("b1 + β - b1").to_string(), "β");
        assert!("2/".parse::<LinearForm>().is_err());
        assert!("x^2".parse::<LinearForm>().is_err());
    }

    #[test]
    fn solve_and_substitute() {
        let eq = lf("3280 + a7 + 800 + a7/2");
        let a7 = eq.solve_for("a7").unwrap();
        assert_eq!(a7, lf("-2720"));
        let g = lf("2 + 3x - y").substitute("x", &lf("y + 1"));
        assert_eq!(g, lf("5 + 2y"));
    }
}
