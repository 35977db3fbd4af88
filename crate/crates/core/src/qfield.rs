//! Exact arithmetic in a real quadratic field Q[√d].
//!
//! A [`QuadNum`] is `p + q·√d` with rational `p`, `q` and square-free `d ≥ 1`.
//! `d = 1` encodes plain rationals (and forces `q = 0`). Rationals embed in
//! every field, so a value with `q = 0` combines with any `d`; two genuinely
//! irrational values over different radicands do not.
//!
//! Ordering is exact: the sign of `p + q√d` is decided by comparing `p²`
//! against `q²d` whenever `p` and `q` have opposite signs.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// Coefficient height `max(|m|, |n|)` of an element `m + n√d` of `Z[√d]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeightPsi(pub BigInt);

impl HeightPsi {
    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl fmt::Display for HeightPsi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug)]
pub struct QuadNum {
    d: i64,
    p: Rational,
    q: Rational,
}

pub fn is_square_free(d: i64) -> bool {
    if d < 1 {
        return false;
    }
    let mut k: i64 = 2;
    while k * k <= d {
        if d % (k * k) == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn check_radicand(d: i64) -> Result<()> {
    if d < 1 {
        return Err(Error::NegativeRadicand(d));
    }
    if !is_square_free(d) {
        return Err(Error::NonSquareFreeRadicand(d));
    }
    Ok(())
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl QuadNum {
    /// Builds `p + q√d`, checking that `d` is a square-free integer `≥ 1`.
    pub fn new(p: Rational, q: Rational, d: i64) -> Result<Self> {
        check_radicand(d)?;
        Ok(Self::canonical(p, q, d))
    }

    fn canonical(p: Rational, q: Rational, d: i64) -> Self {
        if d == 1 {
            QuadNum { d, p: p + q, q: Rational::zero() }
        } else {
            QuadNum { d, p, q }
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn rational(p: Rational) -> Self {
        QuadNum { d: 1, p, q: Rational::zero() }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `√d` itself.
    pub fn sqrt(d: i64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Same value viewed as an element of `Q[√d]` (only changes the tag of rationals).
    pub fn in_field(mut self, d: i64) -> Result<Self> {
        check_radicand(d)?;
        if self.q.is_zero() {
            self.d = d;
            Ok(self)
        } else if self.d == d {
            Ok(self)
        } else {
            Err(Error::RadicandMismatch { left: self.d, right: d })
        }
    }

    fn common_d(&self, other: &Self) -> Result<i64> {
        match (self.d, other.d) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (_, b) if self.q.is_zero() => Ok(b),
            (a, _) if other.q.is_zero() => Ok(a),
            (a, b) => Err(Error::RadicandMismatch { left: a, right: b }),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        Ok(Self::canonical(&self.p + &other.p, &self.q + &other.q, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        Ok(Self::canonical(&self.p - &other.p, &self.q - &other.q, d))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        let dd = rat(d);
        let p = &self.p * &other.p + &self.q * &other.q * &dd;
        let q = &self.p * &other.q + &self.q * &other.p;
        Ok(Self::canonical(p, q, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let d = self.common_d(other)?;
        let inv = other.recip()?;
        let inv = QuadNum { d, ..inv };
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse via the conjugate: `1/(p+q√d) = (p−q√d)/(p²−q²d)`.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = self.norm();
        Ok(Self::canonical(&self.p / &norm, -(&self.q / &norm), self.d))
    }

    /// Field norm `p² − q²d` (nonzero for nonzero elements since `d` is square-free).
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - &self.q * &self.q * rat(self.d)
    }

    pub fn conjugate(&self) -> Self {
        Self::canonical(self.p.clone(), -self.q.clone(), self.d)
    }

    /// Exact sign of `p + q√d`: −1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sp = sign_of(&self.p);
        let sq = sign_of(&self.q);
        if sq == 0 || sp == sq {
            return if sp != 0 { sp } else { sq };
        }
        if sp == 0 {
            return sq;
        }
        // opposite signs: the term with the larger square wins
        let p2 = &self.p * &self.p;
        let q2d = &self.q * &self.q * rat(self.d);
        match p2.cmp(&q2d) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Largest integer `n` with `n ≤ self`.
    pub fn floor(&self) -> BigInt {
        // first approximation from the integer square root of q²d
        let q2d = &self.q * &self.q * rat(self.d);
        let root = q2d.numer().sqrt() / q2d.denom().sqrt();
        let approx_irr = if self.q.is_negative() { -root } else { root };
        let mut n = (&self.p + Rational::from_integer(approx_irr)).floor().to_integer();
        loop {
            let cand = QuadNum::rational(Rational::from_integer(n.clone()));
            if cand > *self {
                n -= 1;
                continue;
            }
            let next = QuadNum::rational(Rational::from_integer(&n + 1));
            if next <= *self {
                n += 1;
                continue;
            }
            return n;
        }
    }

    /// Smallest integer `n` with `n ≥ self`.
    pub fn ceil(&self) -> BigInt {
        -(-self).floor()
    }

    pub fn is_integral(&self) -> bool {
        self.p.is_integer() && self.q.is_integer()
    }

    /// Coefficient height `max(|p|, |q|)`; requires integral coefficients.
    pub fn height(&self) -> Result<HeightPsi> {
        if !self.is_integral() {
            return Err(Error::NonIntegralCoefficients(self.clone()));
        }
        let a = self.p.to_integer().abs();
        let b = self.q.to_integer().abs();
        Ok(HeightPsi(a.max(b)))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let k = Rational::from_integer(k.clone());
        Self::canonical(&self.p * &k, &self.q * &k, self.d)
    }

    /// Least common denominator of both coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.p.denom().lcm(self.q.denom())
    }

    /// Rough floating-point value for human-facing diagnostics only.
    pub fn approx(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p + q * (self.d as f64).sqrt()
    }

    /// Parses an expression over `Q[√d]`; `sqrt(n)` must reduce to a multiple of `√d`.
    pub fn parse_in(text: &str, d: i64) -> Result<Self> {
        check_radicand(d)?;
        let v = Parser::new(text, Some(d)).parse()?;
        v.in_field(d)
    }
}

fn sign_of(r: &Rational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Exact field operation, reporting mismatched radicands and division by zero.
pub fn qnum_arith(x: &QuadNum, y: &QuadNum, op: ArithOp) -> Result<QuadNum> {
    match op {
        ArithOp::Add => x.checked_add(y),
        ArithOp::Sub => x.checked_sub(y),
        ArithOp::Mul => x.checked_mul(y),
        ArithOp::Div => x.checked_div(y),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Scales every value by the least positive integer making all coefficients integral.
pub fn clear_denominators(values: &[QuadNum]) -> Result<(Vec<QuadNum>, BigInt)> {
    let mut d = 1;
    for v in values {
        if !v.is_rational() {
            if d != 1 && d != v.d {
                return Err(Error::RadicandMismatch { left: d, right: v.d });
            }
            d = v.d;
        }
    }
    let scale = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(&v.denominator_lcm()));
    let scaled = values.iter().map(|v| v.scale(&scale)).collect();
    Ok((scaled, scale))
}

impl PartialEq for QuadNum {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q && (self.q.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadNum {}

impl Hash for QuadNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
        self.q.hash(state);
        if !self.q.is_zero() {
            self.d.hash(state);
        }
    }
}

impl Ord for QuadNum {
    /// Panics when comparing irrationals from different fields.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.q.is_zero() && other.q.is_zero() {
            return self.p.cmp(&other.p);
        }
        let diff = self.checked_sub(other).expect("comparison across quadratic fields");
        diff.signum().cmp(&0)
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                self.$checked(rhs).expect(concat!("QuadNum ", stringify!($method)))
            }
        }
        impl $trait<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { d: self.d, p: -self.p.clone(), q: -self.q.clone() }
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { d: self.d, p: -self.p, q: -self.q }
    }
}

impl std::iter::Sum for QuadNum {
    fn sum<I: Iterator<Item = QuadNum>>(iter: I) -> QuadNum {
        iter.fold(QuadNum::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a QuadNum> for QuadNum {
    fn sum<I: Iterator<Item = &'a QuadNum>>(iter: I) -> QuadNum {
        iter.fold(QuadNum::zero(), |a, b| a + b)
    }
}

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        QuadNum::from_integer(n)
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders `p/q + r/s*sqrt(d)`, dropping zero parts and unit coefficients.
impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return fmt_rational(&self.p, f);
        }
        let neg = self.q.is_negative();
        let mag = self.q.abs();
        if self.p.is_zero() {
            if neg {
                f.write_str("-")?;
            }
        } else {
            fmt_rational(&self.p, f)?;
            f.write_str(if neg { " - " } else { " + " })?;
        }
        if !mag.is_one() {
            fmt_rational(&mag, f)?;
            f.write_str("*")?;
        }
        write!(f, "sqrt({})", self.d)
    }
}

impl FromStr for QuadNum {
    type Err = Error;

    /// Parses with the radicand inferred from the `sqrt(..)` terms present.
    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s, None).parse()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    field: Option<i64>,
    lex_error: Option<Error>,
}

impl Parser {
    fn new(text: &str, field: Option<i64>) -> Self {
        let mut toks = Vec::new();
        let mut lex_error = None;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            match c {
                ' ' | '\t' | '\n' | '\r' => {
                    i += 1;
                    continue;
                }
                '0'..='9' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i < chars.len() && chars[i] == '.' {
                        lex_error = Some(Error::Parse {
                            column: i + 1,
                            message: "decimal literals are not accepted; write a fraction".into(),
                        });
                        break;
                    }
                    let s: String = chars[start..i].iter().collect();
                    toks.push((Tok::Int(s.parse().expect("digits")), start + 1));
                    continue;
                }
                'a'..='z' | 'A'..='Z' => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_alphabetic() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    if s == "sqrt" {
                        toks.push((Tok::Sqrt, start + 1));
                    } else {
                        lex_error = Some(Error::Parse {
                            column: start + 1,
                            message: format!("unknown identifier `{s}`"),
                        });
                        break;
                    }
                    continue;
                }
                '+' => toks.push((Tok::Plus, col)),
                '-' => toks.push((Tok::Minus, col)),
                '*' => toks.push((Tok::Star, col)),
                '/' => toks.push((Tok::Slash, col)),
                '(' => toks.push((Tok::LParen, col)),
                ')' => toks.push((Tok::RParen, col)),
                _ => {
                    lex_error = Some(Error::Parse {
                        column: col,
                        message: format!("unexpected character `{c}`"),
                    });
                    break;
                }
            }
            i += 1;
        }
        Parser { toks, pos: 0, end_col: chars.len() + 1, field, lex_error }
    }

    fn parse(mut self) -> Result<QuadNum> {
        if let Some(e) = self.lex_error.take() {
            return Err(e);
        }
        if self.toks.is_empty() {
            return Err(self.err_at(self.end_col, "empty expression"));
        }
        let v = self.expr()?;
        if let Some((t, col)) = self.toks.get(self.pos) {
            return Err(self.err_at(*col, &format!("unexpected {t:?}")));
        }
        Ok(v)
    }

    fn err_at(&self, column: usize, message: &str) -> Error {
        Error::Parse { column, message: message.to_string() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err_at(self.col(), &format!("expected {tok:?}")))
        }
    }

    fn expr(&mut self) -> Result<QuadNum> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.combine(acc.checked_add(&rhs))?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.combine(acc.checked_sub(&rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QuadNum> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.combine(acc.checked_mul(&rhs))?;
                }
                Some(Tok::Slash) => {
                    let col = self.col();
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(self.err_at(col, "division by zero"));
                    }
                    acc = self.combine(acc.checked_div(&rhs))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn combine(&self, r: Result<QuadNum>) -> Result<QuadNum> {
        r.map_err(|e| match e {
            Error::RadicandMismatch { .. } => {
                self.err_at(self.col(), "mixes square roots of different radicands")
            }
            other => other,
        })
    }

    fn unary(&mut self) -> Result<QuadNum> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<QuadNum> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(QuadNum::rational(Rational::from_integer(n)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(v)
            }
            Some(Tok::Sqrt) => {
                self.pos += 1;
                self.expect(Tok::LParen)?;
                let arg_col = self.col();
                let n = match self.peek().cloned() {
                    Some(Tok::Int(n)) => {
                        self.pos += 1;
                        n
                    }
                    _ => return Err(self.err_at(arg_col, "sqrt expects a nonnegative integer")),
                };
                self.expect(Tok::RParen)?;
                self.sqrt_value(n, arg_col)
            }
            Some(t) => Err(self.err_at(col, &format!("unexpected {t:?}"))),
            None => Err(self.err_at(col, "unexpected end of expression")),
        }
    }

    /// `sqrt(k²m)` with `m` square-free becomes `k√m`.
    fn sqrt_value(&self, n: BigInt, col: usize) -> Result<QuadNum> {
        let n = n
            .to_i64()
            .ok_or_else(|| self.err_at(col, "radicand too large"))?;
        if n == 0 {
            return Ok(QuadNum::zero());
        }
        let mut k: i64 = 1;
        let mut m = n;
        let mut f: i64 = 2;
        while f * f <= m {
            while m % (f * f) == 0 {
                m /= f * f;
                k *= f;
            }
            f += 1;
        }
        if m == 1 {
            return Ok(QuadNum::from_integer(k));
        }
        if let Some(d) = self.field {
            if d != m {
                return Err(self.err_at(col, &format!("sqrt({n}) is not in Q[sqrt({d})]")));
            }
        }
        Ok(QuadNum { d: m, p: Rational::zero(), q: rat(k) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> QuadNum {
        QuadNum::new(
            Rational::new(3.into(), 2.into()),
            Rational::new((-1).into(), 2.into()),
            5,
        )
        .unwrap()
    }

    fn q(s: &str) -> QuadNum {
        s.parse().unwrap()
    }

    #[test]
    fn construction() {
        let a = alpha();
        assert_eq!(a.to_string(), "3/2 - 1/2*sqrt(5)");
        let z = QuadNum::new(Rational::zero(), Rational::zero(), 5).unwrap();
        assert!(z.is_zero());
        assert_eq!(
            QuadNum::new(Rational::new(1.into(), 2.into()), Rational::zero(), 12),
            Err(Error::NonSquareFreeRadicand(12))
        );
        assert_eq!(QuadNum::new(Rational::zero(), Rational::zero(), 0), Err(Error::NegativeRadicand(0)));
        // d = 1 folds q into p
        let r = QuadNum::new(rat(2), rat(3), 1).unwrap();
        assert_eq!(r, QuadNum::from_integer(5));
        assert!(r.is_rational());
    }

    #[test]
    fn arithmetic_examples() {
        let a = alpha();
        assert_eq!(&a + &a, q("3 - sqrt(5)"));
        assert!((&a * &QuadNum::zero()).is_zero());
        let len = QuadNum::one() - QuadNum::from_integer(2) * &a;
        assert_eq!(len, q("-2 + sqrt(5)"));
        assert_eq!(len.to_string(), "-2 + sqrt(5)");
        assert_eq!(a.checked_div(&QuadNum::zero()), Err(Error::DivisionByZero));
        let b = q("sqrt(7)");
        assert_eq!(a.checked_add(&b), Err(Error::RadicandMismatch { left: 5, right: 7 }));
        assert_eq!(qnum_arith(&a, &a, ArithOp::Sub).unwrap(), QuadNum::zero());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(q("-2 + sqrt(5)").signum(), 1);
        assert_eq!(QuadNum::zero().signum(), 0);
        assert_eq!(q("(-5 + 3*sqrt(5))/2").signum(), 1);
        assert_eq!(q("2 - sqrt(5)").signum(), -1);
        assert_eq!(q("-sqrt(5)").signum(), -1);
    }

    #[test]
    fn height_examples() {
        assert_eq!(q("-2 + sqrt(5)").height().unwrap(), HeightPsi(2.into()));
        assert_eq!(QuadNum::zero().height().unwrap(), HeightPsi(0.into()));
        assert_eq!(q("5 - 2*sqrt(5)").height().unwrap(), HeightPsi(5.into()));
        assert!(matches!(alpha().height(), Err(Error::NonIntegralCoefficients(_))));
    }

    #[test]
    fn clear_denominators_examples() {
        let a = alpha();
        let (s, k) = clear_denominators(std::slice::from_ref(&a)).unwrap();
        assert_eq!((s, k), (vec![q("3 - sqrt(5)")], BigInt::from(2)));
        let (s, k) = clear_denominators(&[QuadNum::one(), q("sqrt(5)")]).unwrap();
        assert_eq!((s, k), (vec![QuadNum::one(), q("sqrt(5)")], BigInt::from(1)));
        let one_minus = QuadNum::one() - QuadNum::from_integer(2) * &a;
        let (s, k) = clear_denominators(&[a, one_minus]).unwrap();
        assert_eq!(s, vec![q("3 - sqrt(5)"), q("-4 + 2*sqrt(5)")]);
        assert_eq!(k, BigInt::from(2));
        assert!(clear_denominators(&[q("sqrt(5)"), q("sqrt(3)")]).is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(alpha().floor(), BigInt::from(0));
        assert_eq!(q("sqrt(5)").floor(), BigInt::from(2));
        assert_eq!(q("-sqrt(5)").floor(), BigInt::from(-3));
        assert_eq!(q("7/2").floor(), BigInt::from(3));
        assert_eq!(q("-7/2").ceil(), BigInt::from(-3));
        assert_eq!(q("4").floor(), BigInt::from(4));
        assert_eq!(q("1/(3 - sqrt(5))").floor(), BigInt::from(1));
    }

    #[test]
    fn parse_and_render() {
        let t = q("1 - 2*(3/2 - 1/2*sqrt(5))");
        assert_eq!(t, q("-2 + sqrt(5)"));
        assert_eq!(q("3/2-1/2*sqrt(5)"), alpha());
        assert_eq!(q("sqrt(20)"), q("2*sqrt(5)"));
        assert_eq!(q("sqrt(9)"), QuadNum::from_integer(3));
        assert_eq!(q("-1/2*sqrt(5)").to_string(), "-1/2*sqrt(5)");
        assert_eq!(q("2*sqrt(5)").to_string(), "2*sqrt(5)");
        assert_eq!(q("-3/4").to_string(), "-3/4");
        assert!(matches!("0.5".parse::<QuadNum>(), Err(Error::Parse { column: 2, .. })));
        assert!(matches!("1 +".parse::<QuadNum>(), Err(Error::Parse { .. })));
        assert!(matches!("x".parse::<QuadNum>(), Err(Error::Parse { column: 1, .. })));
        assert!(matches!("sqrt(5)+sqrt(3)".parse::<QuadNum>(), Err(Error::Parse { .. })));
        assert!(matches!(QuadNum::parse_in("sqrt(3)", 5), Err(Error::Parse { .. })));
        assert_eq!(QuadNum::parse_in("1/2", 5).unwrap().d(), 5);
        for s in ["3/2 - 1/2*sqrt(5)", "-2 + sqrt(5)", "0", "-sqrt(5)", "7/3 + 2/9*sqrt(5)"] {
            assert_eq!(q(s).to_string(), s);
        }
    }

    #[test]
    fn rationals_mix_with_any_field() {
        let half = QuadNum::from_ratio(1, 2);
        let s5 = q("sqrt(5)");
        assert_eq!((&half + &s5).d(), 5);
        assert_eq!(&s5 - &s5, QuadNum::zero());
        assert!(half < s5);
    }
}
