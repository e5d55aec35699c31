//! Sparse polynomials in `p`, `kappa` and `mu` with exact rational
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Exponents`], whose ordering is graded
//! lexicographic: total degree first, then `(p, kappa, mu)` lexicographically.
//! Iteration, printing, hashing and evaluation all follow that order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variable {
    P,
    Kappa,
    Mu,
}

impl Variable {
    pub fn name(self) -> &'static str {
        match self {
            Variable::P => "p",
            Variable::Kappa => "kappa",
            Variable::Mu => "mu",
        }
    }
}

/// Exponent triple `(e_p, e_kappa, e_mu)` of a monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Exponents {
    pub p: u32,
    pub kappa: u32,
    pub mu: u32,
}

impl Exponents {
    pub const fn new(p: u32, kappa: u32, mu: u32) -> Self {
        Self { p, kappa, mu }
    }

    pub fn degree(&self) -> u64 {
        self.p as u64 + self.kappa as u64 + self.mu as u64
    }

    pub fn get(&self, var: Variable) -> u32 {
        match var {
            Variable::P => self.p,
            Variable::Kappa => self.kappa,
            Variable::Mu => self.mu,
        }
    }

    fn with(mut self, var: Variable, e: u32) -> Self {
        match var {
            Variable::P => self.p = e,
            Variable::Kappa => self.kappa = e,
            Variable::Mu => self.mu = e,
        }
        self
    }

    fn checked_add(&self, other: &Exponents) -> Option<Exponents> {
        Some(Exponents {
            p: self.p.checked_add(other.p)?,
            kappa: self.kappa.checked_add(other.kappa)?,
            mu: self.mu.checked_add(other.mu)?,
        })
    }

    fn as_array(&self) -> [u32; 3] {
        [self.p, self.kappa, self.mu]
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.as_array().cmp(&other.as_array()))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric evaluation point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point {
    pub p: f64,
    pub kappa: f64,
    pub mu: f64,
}

impl Point {
    pub fn new(p: f64, kappa: f64, mu: f64) -> Self {
        Self { p, kappa, mu }
    }

    /// `kappa = 1`, `mu = 0`.
    pub fn symmetric(p: f64) -> Self {
        Self::new(p, 1.0, 0.0)
    }

    pub fn with_p(self, p: f64) -> Self {
        Self { p, ..self }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    terms: BTreeMap<Exponents, BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, Exponents::default())
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    /// The polynomial consisting of the single variable `var`.
    pub fn var(var: Variable) -> Self {
        Self::monomial(BigRational::one(), Exponents::default().with(var, 1))
    }

    /// Builds a polynomial from `(coefficient, (e_p, e_kappa, e_mu))` pairs,
    /// merging duplicates.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, Exponents)>,
    {
        let mut out = Self::zero();
        for (c, e) in terms {
            out.add_term(e, c);
        }
        out
    }

    /// Shorthand for integer-coefficient polynomials in `p` alone:
    /// `coeffs[i]` multiplies `p^i`.
    pub fn from_p_coefficients(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| {
            (
                BigRational::from_integer(BigInt::from(c)),
                Exponents::new(i as u32, 0, 0),
            )
        }))
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.degree() == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: Exponents) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree_in(&self, var: Variable) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var)).max()
    }

    /// Lowest exponent of `var` appearing in any term.
    pub fn min_degree_in(&self, var: Variable) -> Option<u32> {
        self.terms.keys().map(|e| e.get(var)).min()
    }

    /// Collects the terms carrying `var^e` and strips that factor.
    pub fn coefficient_of(&self, var: Variable, e: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.get(var) == e)
                .map(|(k, c)| (k.with(var, 0), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_add(eb).ok_or(Error::ExponentOverflow)?;
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact substitution `var := value`.
    pub fn substitute(&self, var: Variable, value: &BigRational) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e.get(var);
            let factor = num_traits::pow::pow(value.clone(), k as usize);
            out.add_term(e.with(var, 0), c * factor);
        }
        out
    }

    pub fn derivative(&self, var: Variable) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e.get(var);
            if k > 0 {
                out.add_term(e.with(var, k - 1), c * BigRational::from_integer(BigInt::from(k)));
            }
        }
        out
    }

    /// Floating-point evaluation, summing terms in canonical order.
    pub fn eval(&self, x: Point) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                rational_to_f64(c)
                    * x.p.powi(e.p as i32)
                    * x.kappa.powi(e.kappa as i32)
                    * x.mu.powi(e.mu as i32)
            })
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

pub fn rational_to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        // numerator or denominator beyond f64 range; fall back to a quotient of
        // the scaled parts
        let n = c.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = c.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Continued-fraction reconstruction: the first convergent `h/k` of `x` with
/// `k <= max_denominator` and `|x - h/k| <= tolerance`.
pub fn rational_reconstruct(x: f64, tolerance: f64, max_denominator: u64) -> Result<BigRational> {
    let fail = || Error::ReconstructionFailed {
        value: x,
        tolerance,
        max_denominator,
    };
    if !x.is_finite() || tolerance <= 0.0 || max_denominator == 0 {
        return Err(fail());
    }
    let (mut h_prev, mut h) = (1i128, x.floor() as i128);
    let (mut k_prev, mut k) = (0i128, 1i128);
    let mut rem = x - x.floor();
    loop {
        if k as u64 > max_denominator {
            return Err(fail());
        }
        let approx = h as f64 / k as f64;
        if (x - approx).abs() <= tolerance {
            return Ok(BigRational::new(BigInt::from(h), BigInt::from(k)));
        }
        if rem.abs() < f64::EPSILON {
            return Err(fail());
        }
        let inv = 1.0 / rem;
        let a = inv.floor();
        rem = inv - a;
        if a > i64::MAX as f64 {
            return Err(fail());
        }
        let a = a as i128;
        let h_next = a.checked_mul(h).and_then(|t| t.checked_add(h_prev)).ok_or_else(fail)?;
        let k_next = a.checked_mul(k).and_then(|t| t.checked_add(k_prev)).ok_or_else(fail)?;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.degree() == 0 {
                factors.push(abs.to_string());
            }
            for var in [Variable::P, Variable::Kappa, Variable::Mu] {
                match e.get(var) {
                    0 => {}
                    1 => factors.push(var.name().to_string()),
                    k => factors.push(format!("{}^{}", var.name(), k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

impl AddAssign<&RationalPolynomial> for RationalPolynomial {
    fn add_assign(&mut self, rhs: &RationalPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul<&RationalPolynomial> for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self.checked_mul(rhs)
            .expect("polynomial exponent exceeded u32::MAX")
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<RationalPolynomial> for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $m(self, rhs: RationalPolynomial) -> RationalPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalPolynomial> for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $m(self, rhs: &RationalPolynomial) -> RationalPolynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalPolynomial> for &RationalPolynomial {
            type Output = RationalPolynomial;
            fn $m(self, rhs: RationalPolynomial) -> RationalPolynomial {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl std::iter::Sum for RationalPolynomial {
    fn sum<I: Iterator<Item = RationalPolynomial>>(iter: I) -> Self {
        let mut acc = RationalPolynomial::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    variables: Vec<String>,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: [u32; 3],
    num: serde_json::Value,
    den: serde_json::Value,
}

fn int_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(i) => serde_json::Value::from(i),
        None => serde_json::Value::String(v.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("non-integer coefficient {n}")),
        serde_json::Value::String(s) => s.parse::<BigInt>().map_err(|e| e.to_string()),
        other => Err(format!("unexpected coefficient {other}")),
    }
}

impl Serialize for RationalPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            variables: vec!["p".into(), "kappa".into(), "mu".into()],
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.as_array(),
                    num: int_to_json(c.numer()),
                    den: int_to_json(c.denom()),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(deserializer)?;
        if raw.variables != ["p", "kappa", "mu"] {
            return Err(D::Error::custom(format!(
                "unsupported variable list {:?}",
                raw.variables
            )));
        }
        let mut out = RationalPolynomial::zero();
        for t in raw.terms {
            let num = int_from_json(&t.num).map_err(D::Error::custom)?;
            let den = int_from_json(&t.den).map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.add_term(
                Exponents::new(t.exp[0], t.exp[1], t.exp[2]),
                BigRational::new(num, den),
            );
        }
        Ok(out)
    }
}
