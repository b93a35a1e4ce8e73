//! Exact weight-enumerator algebra for self-dual codes.
//!
//! A self-dual code of length `n` has weight enumerator
//!
//! ```text
//! W_C(y) = Σ_j a_j (1 + y²)^{n/2 − 4j} (y²(1 − y²)²)^j,   0 ≤ j ≤ ⌊n/8⌋
//! ```
//!
//! and, with the same `a_j`, its shadow has
//!
//! ```text
//! W_S(y) = Σ_j (−1)^j a_j 2^{n/2 − 6j} y^{n/2 − 4j} (1 − y⁴)^{2j}.
//! ```
//!
//! Everything here is exact: coefficients are `BigRational`, and unknown
//! quantities are carried as [`LinearForm`]s in named parameters.

mod form;
mod parity;
mod poly;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use form::{LinearForm, Param};
pub use parity::{c1_basis, derive_parity, derive_parity_upto, w1_family, CongruenceSystem, Relation};
pub use poly::{ratio_string, CoefficientJson, ParamPoly, RationalPoly};

use form::rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WefError {
    #[error("length {0} is not even")]
    OddLength(usize),
    #[error("the constraints must fix A_0 = 1")]
    MissingConstantTerm,
    #[error("inconsistent constraint on {coefficient}: residual {residual}")]
    Inconsistent { coefficient: String, residual: String },
    #[error("infeasible case: {coefficient} = {value}")]
    Infeasible { coefficient: String, value: String },
    #[error("unsupported case n = {n}, d = {dmin}, {case}; supported: {supported}")]
    Unsupported {
        n: usize,
        dmin: usize,
        case: ShadowCase,
        supported: String,
    },
    #[error("k = {0} is outside the supported range")]
    UnsupportedK(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// `(1+y²)^{n/2−4j} (y²(1−y²)²)^j` for `j = 0..=n/8`.
#[must_use]
pub fn gleason_basis(n: usize) -> Vec<RationalPoly> {
    let a = RationalPoly::from_terms(&[(0, 1), (2, 1)]);
    let b = RationalPoly::from_terms(&[(2, 1), (4, -2), (6, 1)]);
    (0..=n / 8)
        .map(|j| a.pow(n / 2 - 4 * j).mul(&b.pow(j)))
        .collect()
}

/// `(−1)^j 2^{n/2−6j} y^{n/2−4j} (1−y⁴)^{2j}` for `j = 0..=n/8`.
#[must_use]
pub fn shadow_basis(n: usize) -> Vec<RationalPoly> {
    let c = RationalPoly::from_terms(&[(0, 1), (4, -1)]);
    (0..=n / 8)
        .map(|j| {
            let e = n as i64 / 2 - 6 * j as i64;
            let two = rat(2);
            let mut scale = if e >= 0 {
                num_traits::pow(two, e as usize)
            } else {
                num_traits::pow(two, (-e) as usize).recip()
            };
            if j % 2 == 1 {
                scale = -scale;
            }
            RationalPoly::monomial(n / 2 - 4 * j, scale).mul(&c.pow(2 * j))
        })
        .collect()
}

/// The Gleason coefficients `a_0, …, a_{⌊n/8⌋}` of a length-`n` enumerator.
/// Undetermined ones stay as the parameters `a{j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonCoeffs {
    pub n: usize,
    pub a: Vec<LinearForm>,
}

impl GleasonCoeffs {
    /// All `a_j` free.
    #[must_use]
    pub fn free(n: usize) -> Self {
        Self {
            n,
            a: (0..=n / 8).map(|j| LinearForm::param(format!("a{j}"))).collect(),
        }
    }

    #[must_use]
    pub fn weight_enumerator(&self) -> ParamPoly {
        ParamPoly::combination(self.a.iter().zip(&gleason_basis(self.n)))
    }

    /// Names of the `a_j` still free.
    #[must_use]
    pub fn free_parameters(&self) -> Vec<String> {
        let mut names: Vec<Param> = self.a.iter().flat_map(|f| f.params().cloned()).collect();
        names.sort();
        names.dedup();
        names.into_iter().map(|p| p.as_str().to_owned()).collect()
    }

    #[must_use]
    pub fn substitute(&self, name: &str, value: &LinearForm) -> Self {
        Self {
            n: self.n,
            a: self.a.iter().map(|f| f.substitute(name, value)).collect(),
        }
    }

    /// Solves `equation = 0` for the free `a_j` of largest index in it.
    fn impose(&mut self, equation: &LinearForm, label: &str) -> Result<(), WefError> {
        let target = equation
            .params()
            .filter_map(|p| p.gleason_index().map(|j| (j, p.as_str().to_owned())))
            .max();
        match target {
            Some((_, name)) => {
                let value = equation.solve_for(&name).expect("coefficient is nonzero");
                *self = self.substitute(&name, &value);
                Ok(())
            }
            None if equation.is_zero() => Ok(()),
            None => Err(WefError::Inconsistent {
                coefficient: label.to_owned(),
                residual: equation.to_string(),
            }),
        }
    }

    fn coefficient(&self, basis: &[RationalPoly], degree: usize) -> LinearForm {
        let mut out = LinearForm::zero();
        for (a, p) in self.a.iter().zip(basis) {
            out += a.scale(&p.coefficient(degree));
        }
        out
    }
}

/// Solves for the Gleason coefficients given some of the `A_i`, taken in
/// increasing weight order. Each constraint fixes the free `a_j` of largest
/// index it involves; coefficients left undetermined stay free.
pub fn gleason_expand(
    n: usize,
    known: &BTreeMap<usize, LinearForm>,
) -> Result<GleasonCoeffs, WefError> {
    if n % 2 == 1 {
        return Err(WefError::OddLength(n));
    }
    if !known.contains_key(&0) {
        return Err(WefError::MissingConstantTerm);
    }
    let basis = gleason_basis(n);
    let mut g = GleasonCoeffs::free(n);
    for (&i, value) in known {
        let eq = g.coefficient(&basis, i) - value.clone();
        g.impose(&eq, &format!("A{i}"))?;
    }
    Ok(g)
}

/// Gleason coefficients of a self-dual code of length `n` and minimum weight
/// at least `dmin`.
pub fn gleason_for_min_distance(n: usize, dmin: usize) -> Result<GleasonCoeffs, WefError> {
    let mut known = BTreeMap::from([(0, LinearForm::integer(1))]);
    for i in (2..dmin).step_by(2) {
        known.insert(i, LinearForm::zero());
    }
    gleason_expand(n, &known)
}

#[must_use]
pub fn shadow_transform(g: &GleasonCoeffs) -> ParamPoly {
    ParamPoly::combination(g.a.iter().zip(&shadow_basis(g.n)))
}

/// Constraint on the minimum weight of the shadow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShadowCase {
    /// `d(S) = 1` with a single vector of weight 1.
    Weight1,
    /// `d(S) = 5` with a single vector of weight 5.
    Weight5,
    /// `d(S) ≥ 9`.
    AtLeast9,
    /// `d(S) ≥ 5`, with `B_5` left as a parameter.
    AtLeast5,
}

impl ShadowCase {
    pub const ALL: [Self; 4] = [Self::Weight1, Self::Weight5, Self::AtLeast9, Self::AtLeast5];
}

impl fmt::Display for ShadowCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Weight1 => "d(S)=1",
            Self::Weight5 => "d(S)=5",
            Self::AtLeast9 => "d(S)>=9",
            Self::AtLeast5 => "d(S)>=5",
        })
    }
}

#[derive(Clone, Debug)]
enum Side {
    A(usize),
    B(usize),
    Gleason(usize),
    Form(LinearForm),
}

struct CaseSpec {
    constraints: Vec<(Side, Side)>,
    display: (usize, usize),
    parity: Option<(usize, Vec<(&'static str, LinearForm)>)>,
}

fn lf(s: &str) -> LinearForm {
    s.parse().expect("valid form")
}

fn rename(pairs: &[(&'static str, &str)]) -> Vec<(&'static str, LinearForm)> {
    pairs.iter().map(|&(k, v)| (k, lf(v))).collect()
}

/// The general `d(S) ≥ 5` family for `n = 82`: `B_5 = a`, `a_8 = 128b`,
/// `a_7 = 2c`. The `d(S) = 5` and `d(S) ≥ 9` families are its
/// specialisations at `a = 1` and `a = 0`.
fn family82(b5: &str) -> Vec<(Side, Side)> {
    vec![
        (Side::B(1), Side::Form(lf("0"))),
        (Side::B(5), Side::Form(lf(b5))),
        (Side::Gleason(8), Side::Form(lf("128b"))),
        (Side::Gleason(7), Side::Form(lf("2c"))),
    ]
}

fn case_spec(n: usize, dmin: usize, case: ShadowCase) -> Option<CaseSpec> {
    use ShadowCase::*;
    let constraints = |v: &[(Side, &str)]| -> Vec<(Side, Side)> {
        v.iter()
            .map(|(s, f)| (s.clone(), Side::Form(lf(f))))
            .collect()
    };
    let spec = match (n, dmin, case) {
        (82, 14, Weight1) => CaseSpec {
            constraints: vec![
                (Side::B(1), Side::Form(lf("1"))),
                (Side::B(5), Side::Form(lf("0"))),
                (Side::B(9), Side::Form(lf("0"))),
                (Side::A(14), Side::B(13)),
            ],
            display: (18, 21),
            parity: None,
        },
        (82, 14, AtLeast5) => CaseSpec {
            constraints: family82("a"),
            display: (18, 17),
            parity: Some((3, Vec::new())),
        },
        (82, 14, Weight5 | AtLeast9) => {
            let a = if case == Weight5 { "1" } else { "0" };
            let sub = [("a", a), ("b", "α"), ("c", "β")];
            let mut constraints = family82("a");
            constraints.extend(sub.iter().map(|&(p, v)| (Side::Form(lf(p)), Side::Form(lf(v)))));
            CaseSpec {
                constraints,
                display: (18, if case == Weight5 { 17 } else { 21 }),
                parity: Some((3, rename(&sub))),
            }
        }
        (58, 10, AtLeast5) => CaseSpec {
            constraints: constraints(&[(Side::B(1), "0"), (Side::B(5), "β"), (Side::B(9), "γ")]),
            display: (12, 17),
            parity: Some((2, Vec::new())),
        },
        (106, 18, AtLeast5) => CaseSpec {
            constraints: constraints(&[
                (Side::B(1), "0"),
                (Side::B(5), "a"),
                (Side::Gleason(11), "8192b"),
                (Side::Gleason(10), "128c"),
                (Side::Gleason(9), "2d"),
            ]),
            display: (24, 17),
            parity: Some((4, Vec::new())),
        },
        (130, 22, AtLeast5) => CaseSpec {
            constraints: constraints(&[
                (Side::B(1), "0"),
                (Side::B(5), "a"),
                (Side::Gleason(14), "524288b"),
                (Side::Gleason(13), "8192c"),
                (Side::Gleason(12), "128d"),
                (Side::Gleason(11), "2e"),
            ]),
            display: (30, 21),
            parity: Some((5, Vec::new())),
        },
        _ => return None,
    };
    Some(spec)
}

/// `(n, dmin, case)` combinations with a named parameterization.
pub const NAMED_CASES: [(usize, usize, ShadowCase); 7] = [
    (58, 10, ShadowCase::AtLeast5),
    (82, 14, ShadowCase::Weight1),
    (82, 14, ShadowCase::Weight5),
    (82, 14, ShadowCase::AtLeast9),
    (82, 14, ShadowCase::AtLeast5),
    (106, 18, ShadowCase::AtLeast5),
    (130, 22, ShadowCase::AtLeast5),
];

fn supported_list() -> String {
    let named: Vec<String> = NAMED_CASES
        .iter()
        .map(|(n, d, c)| format!("(n={n}, d={d}, {c})"))
        .collect();
    format!(
        "{}; other n ≡ 2 (mod 8) with generic parameters (d >= 12 for d(S)=1 and d(S)=5)",
        named.join(", ")
    )
}

/// Generic shadow constraints for lengths `n ≡ 2 (mod 8)`; the surviving
/// `a_j` keep their names. Fixing a single vector of weight 1 or 5 needs
/// `d ≥ 12`, so that two shadow vectors of weight at most 5 cannot differ
/// by a codeword.
fn generic_spec(dmin: usize, case: ShadowCase) -> Option<CaseSpec> {
    use ShadowCase::*;
    if matches!(case, Weight1 | Weight5) && dmin < 12 {
        return None;
    }
    let (b1, b5, b9) = match case {
        Weight1 => ("1", Some("0"), Some("0")),
        Weight5 => ("0", Some("1"), None),
        AtLeast9 => ("0", Some("0"), None),
        AtLeast5 => ("0", None, None),
    };
    let mut constraints = vec![(Side::B(1), Side::Form(lf(b1)))];
    for (i, v) in [(5, b5), (9, b9)] {
        if let Some(v) = v {
            constraints.push((Side::B(i), Side::Form(lf(v))));
        }
    }
    if case == Weight1 && dmin % 4 == 2 {
        constraints.push((Side::A(dmin), Side::B(dmin - 1)));
    }
    Some(CaseSpec {
        constraints,
        display: (dmin + 4, 17),
        parity: None,
    })
}

/// A parameterized pair `(W_C, W_S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratorFamily {
    pub n: usize,
    pub min_distance: usize,
    pub case: ShadowCase,
    pub gleason: GleasonCoeffs,
    pub w_c: ParamPoly,
    pub w_s: ParamPoly,
    /// Degrees up to which the family is usually displayed.
    pub display_degrees: (usize, usize),
    parity: Option<(usize, Vec<(&'static str, LinearForm)>)>,
}

impl EnumeratorFamily {
    #[must_use]
    pub fn params(&self) -> Vec<String> {
        let mut all = self.w_c.params();
        all.extend(self.w_s.params());
        let mut all: Vec<Param> = all.into_iter().map(Param::new).collect();
        all.sort();
        all.dedup();
        all.into_iter().map(|p| p.as_str().to_owned()).collect()
    }

    /// Both enumerators with the given parameter values.
    #[must_use]
    pub fn substitute(&self, values: &BTreeMap<String, LinearForm>) -> (ParamPoly, ParamPoly) {
        (self.w_c.substitute_all(values), self.w_s.substitute_all(values))
    }

    /// Parameter values that make the listed `W_C` coefficients equal the
    /// given counts. Returns `None` if the system is singular or
    /// inconsistent.
    #[must_use]
    pub fn solve_parameters(&self, counts: &BTreeMap<usize, BigRational>) -> Option<BTreeMap<String, BigRational>> {
        let mut equations: Vec<LinearForm> = counts
            .iter()
            .map(|(&i, v)| self.w_c.coefficient(i) - LinearForm::constant(v.clone()))
            .collect();
        let mut solution: BTreeMap<String, LinearForm> = BTreeMap::new();
        while let Some(pos) = equations.iter().position(|e| !e.is_constant()) {
            let eq = equations.swap_remove(pos);
            let name = eq.params().next_back()?.as_str().to_owned();
            let value = eq.solve_for(&name)?;
            for e in &mut equations {
                *e = e.substitute(&name, &value);
            }
            for v in solution.values_mut() {
                *v = v.substitute(&name, &value);
            }
            solution.insert(name, value);
        }
        if equations.iter().any(|e| !e.is_zero()) {
            return None;
        }
        let params = self.params();
        if params.iter().any(|p| !solution.contains_key(p)) {
            return None;
        }
        solution
            .into_iter()
            .map(|(k, v)| v.as_constant().cloned().map(|c| (k, c)))
            .collect()
    }

    /// Parity restrictions on the parameters, where they are known.
    #[must_use]
    pub fn parity(&self) -> Option<CongruenceSystem> {
        let (k, renaming) = self.parity.as_ref()?;
        let mut system = derive_parity(*k).ok()?;
        for (name, value) in renaming {
            system = system.substitute(name, value);
        }
        Some(system)
    }

    #[must_use]
    pub fn to_json(&self) -> FamilyJson {
        FamilyJson {
            n: self.n,
            case: self.case,
            w_c: self.w_c.truncate(self.display_degrees.0).to_json(),
            w_s: self.w_s.truncate(self.display_degrees.1).to_json(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyJson {
    pub n: usize,
    pub case: ShadowCase,
    #[serde(rename = "W_C")]
    pub w_c: Vec<CoefficientJson>,
    #[serde(rename = "W_S")]
    pub w_s: Vec<CoefficientJson>,
}

fn min_distance_of(g: &GleasonCoeffs) -> usize {
    let w = g.weight_enumerator();
    (1..=g.n).find(|&i| !w.coefficient(i).is_zero()).unwrap_or(g.n)
}

/// Pins the Gleason coefficients implied by a shadow case and names the
/// surviving parameters.
pub fn apply_shadow_case(g: &GleasonCoeffs, case: ShadowCase) -> Result<EnumeratorFamily, WefError> {
    let n = g.n;
    let dmin = min_distance_of(g);
    let spec = case_spec(n, dmin, case)
        .or_else(|| (n % 8 == 2).then(|| generic_spec(dmin, case)).flatten());
    let spec = match spec {
        Some(spec) => spec,
        None => {
            return Err(WefError::Unsupported {
                n,
                dmin,
                case,
                supported: supported_list(),
            })
        }
    };
    let gb = gleason_basis(n);
    let sb = shadow_basis(n);
    let mut g = g.clone();
    let mut renames: Vec<(String, LinearForm)> = Vec::new();
    for (lhs, rhs) in &spec.constraints {
        let eval = |s: &Side, g: &GleasonCoeffs| match s {
            Side::A(i) => (g.coefficient(&gb, *i), format!("A{i}")),
            Side::B(i) => (g.coefficient(&sb, *i), format!("B{i}")),
            Side::Gleason(j) => (g.a[*j].clone(), format!("a{j}")),
            Side::Form(f) => (f.clone(), f.to_string()),
        };
        if let (Side::Form(from), Side::Form(to)) = (lhs, rhs) {
            let name = from.params().next().expect("renamed parameter").as_str().to_owned();
            renames.push((name, to.clone()));
            continue;
        }
        let (l, label) = eval(lhs, &g);
        let (r, _) = eval(rhs, &g);
        g.impose(&(l - r), &label)?;
    }
    for (name, value) in &renames {
        g = g.substitute(name, value);
    }
    let w_c = g.weight_enumerator();
    let w_s = shadow_transform(&g);
    for (label, poly) in [("A", &w_c), ("B", &w_s)] {
        for (d, f) in poly.coefficients() {
            if let Some(c) = f.as_constant() {
                if c.is_negative() || !c.is_integer() {
                    return Err(WefError::Infeasible {
                        coefficient: format!("{label}{d}"),
                        value: c.to_string(),
                    });
                }
            }
        }
    }
    Ok(EnumeratorFamily {
        n,
        min_distance: dmin,
        case,
        gleason: g,
        w_c,
        w_s,
        display_degrees: spec.display,
        parity: spec.parity,
    })
}

/// [`gleason_for_min_distance`] followed by [`apply_shadow_case`].
pub fn possible_enumerators(
    n: usize,
    dmin: usize,
    case: ShadowCase,
) -> Result<EnumeratorFamily, WefError> {
    apply_shadow_case(&gleason_for_min_distance(n, dmin)?, case)
}

/// `form ≥ 0`, read off coefficient `source` of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub source: String,
    pub form: LinearForm,
}

impl fmt::Display for Inequality {
    /// Solved for the last parameter, e.g. `β ≤ 153 - 16α`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(p) = self.form.params().next_back() else {
            return write!(f, "{} ≥ 0", self.form);
        };
        let c = self.form.coefficient(p.as_str());
        let bound = self.form.solve_for(p.as_str()).expect("nonzero coefficient");
        let op = if c.is_positive() { "≥" } else { "≤" };
        write!(f, "{p} {op} {bound}")
    }
}

/// Nonnegativity of every parameterized coefficient up to the family's
/// display degrees.
#[must_use]
pub fn feasible_range(family: &EnumeratorFamily) -> Vec<Inequality> {
    feasible_range_upto(family, family.display_degrees.0, family.display_degrees.1)
}

#[must_use]
pub fn feasible_range_upto(family: &EnumeratorFamily, wc_degree: usize, ws_degree: usize) -> Vec<Inequality> {
    let mut out = Vec::new();
    for (label, poly, limit) in [("A", &family.w_c, wc_degree), ("B", &family.w_s, ws_degree)] {
        for (d, f) in poly.truncate(limit).coefficients() {
            if !f.is_constant() {
                out.push(Inequality {
                    source: format!("{label}{d}"),
                    form: f.clone(),
                });
            }
        }
    }
    out
}

/// Coefficients of a full weight distribution as exact constraints.
#[must_use]
pub fn distribution_constraints(counts: &BTreeMap<usize, u64>) -> BTreeMap<usize, LinearForm> {
    counts
        .iter()
        .map(|(&i, &c)| (i, LinearForm::constant(BigRational::from_integer(BigInt::from(c)))))
        .collect()
}

/// `2^e` as a rational.
#[must_use]
pub fn power_of_two(e: usize) -> BigRational {
    num_traits::pow(rat(2), e)
}

/// Whether every coefficient up to `degree` of `poly` matches `expected`.
#[must_use]
pub fn matches_prefix(poly: &ParamPoly, expected: &ParamPoly, degree: usize) -> bool {
    poly.truncate(degree) == expected.truncate(degree)
}

/// Parses `c0 + c1 y^d1 + …` style terms written as `(degree, form)` pairs.
pub fn param_poly(terms: &[(usize, &str)]) -> Result<ParamPoly, WefError> {
    let forms = terms
        .iter()
        .map(|(d, s)| Ok((*d, s.parse::<LinearForm>()?)))
        .collect::<Result<Vec<_>, WefError>>()?;
    let monomials: Vec<RationalPoly> = forms
        .iter()
        .map(|(d, _)| RationalPoly::monomial(*d, rat(1)))
        .collect();
    Ok(ParamPoly::combination(
        forms.iter().map(|(_, f)| f).zip(&monomials),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(terms: &[(usize, &str)]) -> ParamPoly {
        param_poly(terms).unwrap()
    }

    #[test]
    fn length_two() {
        let g = gleason_expand(2, &BTreeMap::from([(0, LinearForm::integer(1))])).unwrap();
        assert_eq!(g.a, vec![LinearForm::integer(1)]);
        assert_eq!(g.weight_enumerator(), pp(&[(0, "1"), (2, "1")]));
        assert_eq!(shadow_transform(&g), pp(&[(1, "2")]));
    }

    #[test]
    fn odd_length_and_missing_a0() {
        assert_eq!(gleason_for_min_distance(7, 2), Err(WefError::OddLength(7)));
        assert_eq!(
            gleason_expand(8, &BTreeMap::new()),
            Err(WefError::MissingConstantTerm)
        );
    }

    #[test]
    fn inconsistent_constraints() {
        // length 2 has a single coefficient, so A_2 = 5 contradicts A_0 = 1
        let known = BTreeMap::from([(0, LinearForm::integer(1)), (2, LinearForm::integer(5))]);
        assert!(matches!(
            gleason_expand(2, &known),
            Err(WefError::Inconsistent { coefficient, .. }) if coefficient == "A2"
        ));
    }

    #[test]
    fn e8_is_determined_by_d4() {
        let g = gleason_for_min_distance(8, 4).unwrap();
        assert!(g.free_parameters().is_empty());
        let w = g.weight_enumerator().as_rational().unwrap();
        assert_eq!(w, RationalPoly::from_terms(&[(0, 1), (4, 14), (8, 1)]));
    }

    #[test]
    fn n82_shadow_low_terms() {
        let g = gleason_for_min_distance(82, 14).unwrap();
        let s = shadow_transform(&g);
        assert_eq!(s.coefficient(1), lf("a10/524288"));
        assert_eq!(s.coefficient(5), lf("-a9/8192 - 5a10/131072"));
        assert_eq!(s.coefficient(9), lf("a8/128 + 9a9/4096 + 95a10/262144"));
        assert_eq!(s.coefficient(13), lf("-a7/2 - a8/8 - 153a9/8192 - 285a10/131072"));
    }

    #[test]
    fn weight1_pins_all() {
        let f = possible_enumerators(82, 14, ShadowCase::Weight1).unwrap();
        let a: Vec<String> = f.gleason.a[7..].iter().map(ToString::to_string).collect();
        assert_eq!(a, ["-2720", "21760", "-163840", "524288"]);
        assert!(f.params().is_empty());
        assert!(feasible_range(&f).is_empty());
        assert!(f.parity().is_none());
    }

    #[test]
    fn unsupported_case_lists_options() {
        let err = possible_enumerators(84, 14, ShadowCase::AtLeast5).unwrap_err();
        assert!(err.to_string().contains("n=58"));
    }

    #[test]
    fn generic_path() {
        let f = possible_enumerators(10, 2, ShadowCase::AtLeast5).unwrap();
        assert_eq!(f.w_s, pp(&[(5, "32")]));
        assert_eq!(f.w_c.evaluate(&rat(1)), LinearForm::integer(32));
        assert!(possible_enumerators(10, 2, ShadowCase::AtLeast9).is_err());
        assert!(possible_enumerators(10, 2, ShadowCase::Weight1).is_err());
    }

    #[test]
    fn inequality_display() {
        let ineq = Inequality {
            source: "B13".into(),
            form: lf("153 - 16α - β"),
        };
        assert_eq!(ineq.to_string(), "β ≤ 153 - 16α");
        let ineq = Inequality {
            source: "A14".into(),
            form: lf("3280 + 2β"),
        };
        assert_eq!(ineq.to_string(), "β ≥ -1640");
    }

    #[test]
    fn solve_parameters_inverts_family() {
        let f = possible_enumerators(82, 14, ShadowCase::Weight5).unwrap();
        let counts = BTreeMap::from([(14, rat(1780)), (16, rat(40048))]);
        let sol = f.solve_parameters(&counts).unwrap();
        assert_eq!(sol["α"], rat(18));
        assert_eq!(sol["β"], rat(-750));
    }
}
