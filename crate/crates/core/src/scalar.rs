//! Exact scalars: rationals, Laurent polynomials in `q` and rational functions in `q`.
//!
//! Everything is generic over [`Ring`] (and [`Field`] where inversion is needed).
//! Only exact types implement these traits; floating point never enters the library.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {0}")]
    VanishingDenominator(String),
    #[error("negative power of q evaluated at q = 0")]
    NegativePowerAtZero,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("cannot parse rational number `{0}`")]
    Parse(String),
}

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
{
    fn from_i64(n: i64) -> Self;

    fn mul_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r *= other;
        r
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r += other;
        r
    }

    fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r *= self;
        }
        r
    }
}

pub trait Field: Ring {
    fn try_inv(&self) -> Result<Self, ScalarError>;

    fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul_ref(&other.try_inv()?))
    }
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

impl Field for Rational {
    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `N`, `-N` or `N/D`.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarError> {
    let err = || ScalarError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| err())?;
    let d = BigInt::from_str(d).map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Always `num/den`, with a positive denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Evaluation of `q`-dependent scalars at a rational value of `q`.
pub trait Specialize {
    fn eval_at(&self, q0: &Rational) -> Result<Rational, ScalarError>;
}

impl Specialize for Rational {
    fn eval_at(&self, _q0: &Rational) -> Result<Rational, ScalarError> {
        Ok(self.clone())
    }
}

/// Laurent polynomial in `q` over the integers. Terms are sorted by exponent and
/// no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn q() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn monomial(e: i64, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(it: I) -> Self {
        let mut terms: Vec<(i64, BigInt)> = it.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn from_i64_terms(t: &[(i64, i64)]) -> Self {
        Self::from_terms(t.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    /// `[k]_q = 1 + q + ... + q^{k-1}`.
    pub fn q_integer(k: u32) -> Self {
        Self::from_terms((0..k as i64).map(|e| (e, BigInt::one())))
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms
            .binary_search_by_key(&e, |t| t.0)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, t| g.gcd(&t.1))
    }

    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    /// Dense coefficients of `q^{-min} * self`, lowest degree first.
    fn dense(&self) -> (i64, Vec<Rational>) {
        let lo = self.min_exponent().unwrap_or(0);
        let hi = self.max_exponent().unwrap_or(0);
        let mut v = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = Rational::from_integer(c.clone());
        }
        (lo, v)
    }

    /// Exact quotient in `Z[q, q^-1]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, ScalarError> {
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (dlo, dc) = d.dense();
        let (nlo, mut nc) = self.dense();
        if nc.len() < dc.len() {
            return Err(ScalarError::InexactDivision);
        }
        let lead = dc.last().unwrap().clone();
        let qlen = nc.len() - dc.len() + 1;
        let mut quo = vec![Rational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &nc[k + dc.len() - 1] / &lead;
            if !c.is_zero() {
                for (j, dj) in dc.iter().enumerate() {
                    nc[k + j] -= &c * dj;
                }
            }
            quo[k] = c;
        }
        if nc.iter().any(|c| !c.is_zero()) {
            return Err(ScalarError::InexactDivision);
        }
        let mut terms = Vec::new();
        for (k, c) in quo.into_iter().enumerate() {
            if !c.is_zero() {
                if !c.is_integer() {
                    return Err(ScalarError::InexactDivision);
                }
                terms.push((k as i64 + nlo - dlo, c.to_integer()));
            }
        }
        Ok(LaurentPoly { terms })
    }

    /// Substitutes a ring element for `q`. Negative exponents need an inverse of `q`,
    /// which is passed separately when available.
    pub fn lift<S: Ring>(&self, q: &S, q_inv: Option<&S>) -> Option<S> {
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { q.clone() } else { q_inv?.clone() };
            let mut term = base.pow(e.unsigned_abs() as u32);
            let ci: i64 = c.try_into().ok()?;
            term *= &S::from_i64(ci);
            acc += &term;
        }
        Some(acc)
    }
}

fn rational_pow(q0: &Rational, e: i64) -> Result<Rational, ScalarError> {
    if e >= 0 {
        Ok(num_traits::pow(q0.clone(), e as usize))
    } else if q0.is_zero() {
        Err(ScalarError::NegativePowerAtZero)
    } else {
        Ok(num_traits::pow(q0.recip(), (-e) as usize))
    }
}

impl Specialize for LaurentPoly {
    fn eval_at(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += rational_pow(q0, *e)? * Rational::from_integer(c.clone());
        }
        Ok(acc)
    }
}

fn merge_add(a: &[(i64, BigInt)], b: &[(i64, BigInt)], negate_b: bool) -> Vec<(i64, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn poly_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.terms.len() == 1 && b.terms.len() == 1 {
        return LaurentPoly { terms: vec![(a.terms[0].0 + b.terms[0].0, &a.terms[0].1 * &b.terms[0].1)] };
    }
    let lo = a.terms[0].0 + b.terms[0].0;
    let hi = a.terms.last().unwrap().0 + b.terms.last().unwrap().0;
    let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            acc[(ea + eb - lo) as usize] += ca * cb;
        }
    }
    LaurentPoly {
        terms: acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64 + lo, c))
            .collect(),
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge_add(&self.terms, &o.terms, false) }
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge_add(&self.terms, &o.terms, true) }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        poly_mul(&self, &o)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        poly_mul(self, o)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge_add(&self.terms, &o.terms, false) }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        LaurentPoly { terms: merge_add(&self.terms, &o.terms, true) }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, o: &LaurentPoly) {
        if o.is_zero() {
            return;
        }
        self.terms = merge_add(&self.terms, &o.terms, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, o: &LaurentPoly) {
        if o.is_zero() {
            return;
        }
        self.terms = merge_add(&self.terms, &o.terms, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, o: &LaurentPoly) {
        *self = poly_mul(self, o);
    }
}

impl Ring for LaurentPoly {
    fn from_i64(n: i64) -> Self {
        Self::monomial(0, BigInt::from(n))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !unit {
                        write!(f, "{}*", abs)?;
                    }
                    if *e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Greatest common divisor of the polynomial parts (exponents shifted to start at 0),
/// primitive over `Z` with positive leading coefficient.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_primitive(b);
    }
    if b.is_zero() {
        return normalize_primitive(a);
    }
    let (_, mut x) = a.dense();
    let (_, mut y) = b.dense();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    let p = LaurentPoly::from_terms(
        clear_denominators(&x).into_iter().enumerate().map(|(k, c)| (k as i64, c)),
    );
    normalize_primitive(&p)
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lead = b.last().unwrap();
    while r.len() >= b.len() {
        let c = r.last().unwrap() / lead;
        let off = r.len() - b.len();
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &c * bj;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    v.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

fn normalize_primitive(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let mut c = p.content();
    if p.leading_coefficient().unwrap().is_negative() {
        c = -c;
    }
    let shifted = p.shift(-p.min_exponent().unwrap());
    LaurentPoly { terms: shifted.terms.into_iter().map(|(e, x)| (e, x / &c)).collect() }
}

/// Rational function `N/D` in `q`, kept in a canonical form: `gcd(N, D) = 1`,
/// integer coefficients with coprime contents, `D` has positive leading coefficient
/// and lowest exponent 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let mut c = num.content().gcd(&den.content());
        if den.leading_coefficient().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = LaurentPoly { terms: num.terms.into_iter().map(|(e, x)| (e, x / &c)).collect() };
            den = LaurentPoly { terms: den.terms.into_iter().map(|(e, x)| (e, x / &c)).collect() };
        }
        let s = den.min_exponent().unwrap();
        Ok(RationalFunction { num: num.shift(-s), den: den.shift(-s) })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one()).unwrap()
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }
}

impl Specialize for RationalFunction {
    fn eval_at(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        let d = self.den.eval_at(q0)?;
        if d.is_zero() {
            return Err(ScalarError::VanishingDenominator(format_rational(q0)));
        }
        Ok(self.num.eval_at(q0)? / d)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }
}

fn rf_add(a: &RationalFunction, b: &RationalFunction, sub: bool) -> RationalFunction {
    if a.den == b.den {
        let n = if sub { &a.num - &b.num } else { &a.num + &b.num };
        return RationalFunction::new(n, a.den.clone()).unwrap();
    }
    let l = &a.num * &b.den;
    let r = &b.num * &a.den;
    let n = if sub { l - r } else { l + r };
    RationalFunction::new(n, &a.den * &b.den).unwrap()
}

fn rf_mul(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    if a.is_zero() || b.is_zero() {
        return RationalFunction::zero();
    }
    RationalFunction::new(&a.num * &b.num, &a.den * &b.den).unwrap()
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        rf_add(&self, &o, false)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: RationalFunction) -> RationalFunction {
        rf_add(&self, &o, true)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: RationalFunction) -> RationalFunction {
        rf_mul(&self, &o)
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl AddAssign<&RationalFunction> for RationalFunction {
    fn add_assign(&mut self, o: &RationalFunction) {
        *self = rf_add(self, o, false);
    }
}

impl SubAssign<&RationalFunction> for RationalFunction {
    fn sub_assign(&mut self, o: &RationalFunction) {
        *self = rf_add(self, o, true);
    }
}

impl MulAssign<&RationalFunction> for RationalFunction {
    fn mul_assign(&mut self, o: &RationalFunction) {
        *self = rf_mul(self, o);
    }
}

impl Ring for RationalFunction {
    fn from_i64(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_i64(n))
    }
}

impl Field for RationalFunction {
    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_i64_terms(t)
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = lp(&[(0, 1), (1, 2)]) - lp(&[(1, 2)]);
        assert_eq!(p.terms().len(), 1);
        assert!((p.clone() - p).terms().is_empty());
    }

    #[test]
    fn q_integer_product_matches_expansion() {
        // [2][3] = 1 + 2q + 2q^2 + q^3
        let p = LaurentPoly::q_integer(2) * LaurentPoly::q_integer(3);
        assert_eq!(p, lp(&[(0, 1), (1, 2), (2, 2), (3, 1)]));
    }

    #[test]
    fn exact_division() {
        let num = lp(&[(0, -1), (4, 1)]);
        let den = lp(&[(0, -1), (1, 1)]);
        assert_eq!(num.div_exact(&den).unwrap(), LaurentPoly::q_integer(4));
        assert_eq!(lp(&[(0, 1)]).div_exact(&den), Err(ScalarError::InexactDivision));
        assert_eq!(lp(&[(3, 2)]).div_exact(&lp(&[(1, 2)])).unwrap(), lp(&[(2, 1)]));
    }

    #[test]
    fn evaluation() {
        let p = lp(&[(-1, 1), (2, 3)]);
        assert_eq!(p.eval_at(&rat(2, 1)).unwrap(), rat(25, 2));
        assert_eq!(p.eval_at(&rat(0, 1)), Err(ScalarError::NegativePowerAtZero));
        let f = RationalFunction::new(LaurentPoly::one(), lp(&[(0, -1), (1, 1)])).unwrap();
        assert!(matches!(f.eval_at(&rat(1, 1)), Err(ScalarError::VanishingDenominator(_))));
    }

    #[test]
    fn rational_function_canonical() {
        // (q^2 - 1)/(2q - 2) = (q + 1)/2
        let f = RationalFunction::new(lp(&[(0, -1), (2, 1)]), lp(&[(0, -2), (1, 2)])).unwrap();
        assert_eq!(f.numerator(), &lp(&[(0, 1), (1, 1)]));
        assert_eq!(f.denominator(), &lp(&[(0, 2)]));
        // q^-1 / (-q) = -q^-2
        let g = RationalFunction::new(lp(&[(-1, 1)]), lp(&[(1, -1)])).unwrap();
        assert_eq!(g.numerator(), &lp(&[(-2, -1)]));
        assert!(g.denominator().is_one());
    }

    #[test]
    fn field_inverse() {
        let f = RationalFunction::new(lp(&[(0, 1), (1, 1)]), lp(&[(0, 3)])).unwrap();
        assert!((f.try_inv().unwrap() * f.clone()).is_one());
        assert_eq!(RationalFunction::zero().try_inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Rational::zero().try_inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), rat(-4, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(3, 1)), "3/1");
    }

    #[test]
    fn display() {
        assert_eq!(lp(&[(0, -1), (1, 1)]).to_string(), "q - 1");
        assert_eq!(lp(&[(-1, -2), (2, 1)]).to_string(), "q^2 - 2*q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn lift_into_rationals() {
        let p = lp(&[(0, -1), (2, 3)]);
        assert_eq!(p.lift(&rat(1, 2), None).unwrap(), rat(-1, 4));
        assert!(lp(&[(-1, 1)]).lift(&rat(2, 1), None).is_none());
        assert_eq!(lp(&[(-1, 1)]).lift(&rat(2, 1), Some(&rat(1, 2))).unwrap(), rat(1, 2));
    }
}
