//! Integer Laurent polynomials in the variable `A`, rational functions over
//! them, and the named constants used throughout the bracket computations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::LaurentError;

/// An element of `Z[A, A^-1]` stored as a sparse exponent map.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^e`.
    pub fn monomial<T: Into<BigInt>>(c: T, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `A^e`.
    pub fn a_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from `(coefficient, exponent)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, T>(it: I) -> Self
    where
        I: IntoIterator<Item = (T, i64)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, e) in it {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the lowest power of `A`.
    pub fn low_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    /// Coefficient of the highest power of `A`.
    pub fn high_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Returns `Some((c, e))` when the polynomial is the single term `c A^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// True for the units `±A^k` of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.as_monomial().is_some_and(|(c, _)| c.abs().is_one())
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale<T: Into<BigInt>>(&self, s: T) -> Self {
        let s = s.into();
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * &s)).collect(),
        }
    }

    /// The substitution `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    /// The substitution `A -> A^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution A -> A^0 is not a ring endomorphism here");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
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

    /// Inverse of a unit `±A^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -e))
        } else {
            None
        }
    }

    /// Value at `A = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `A = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Exact quotient `self / d` in the Laurent ring, by long division from
    /// the lowest exponent.
    pub fn div_exact(&self, d: &Self) -> Result<Self, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (dlo, dc) = d.terms.iter().next().map(|(e, c)| (*e, c.clone())).unwrap();
        let dspan = d.max_exp().unwrap() - dlo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rlo) = rem.min_exp() {
            if rem.max_exp().unwrap() - rlo < dspan {
                return Err(LaurentError::NotDivisible);
            }
            let rc = rem.terms.get(&rlo).unwrap();
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            let qe = rlo - dlo;
            for (e, c) in &d.terms {
                rem.add_term(e + qe, -(c * &q));
            }
            quot.add_term(qe, q);
        }
        Ok(quot)
    }

    /// Divides every coefficient by the integer `k`, which must divide them all.
    pub fn div_integer(&self, k: &BigInt) -> Result<Self, LaurentError> {
        if k.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(LaurentError::NotDivisible);
            }
            out.insert(*e, q);
        }
        Ok(Self { terms: out })
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Coefficient vector of `A^-lo * self`, lowest degree first.
    fn dense(&self) -> Vec<BigInt> {
        let Some(lo) = self.min_exp() else {
            return Vec::new();
        };
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: &[BigInt], lo: i64) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (c.clone(), lo + i as i64)))
    }

    /// A greatest common divisor in the Laurent ring, normalized to lowest
    /// exponent 0 and positive top coefficient (gcds are defined up to `±A^k`).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_unit().0;
        }
        if other.is_zero() {
            return self.normalize_unit().0;
        }
        let g = dense_gcd(self.dense(), other.dense());
        let mut p = Self::from_dense(&g, 0);
        if p.high_coeff().is_some_and(|c| c.is_negative()) {
            p = -p;
        }
        p
    }

    /// Splits `self = u * q` with `u = ±A^k` such that `q` has lowest
    /// exponent 0 and a positive lowest coefficient. Returns `(q, u)`.
    pub fn normalize_unit(&self) -> (Self, Self) {
        let Some(lo) = self.min_exp() else {
            return (Self::zero(), Self::one());
        };
        let sign = if self.low_coeff().unwrap().is_negative() { -1 } else { 1 };
        (self.shift(-lo).scale(sign), Self::monomial(sign, lo))
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = dense_content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both dense, low degree first, trimmed).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        let off = dr - db;
        for (i, c) in b.iter().enumerate() {
            r[off + i] -= &lr * c;
        }
        trim(&mut r);
    }
    r
}

fn dense_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let g = dense_content(&a).gcd(&dense_content(&b));
    let mut a = primitive(&a);
    let mut b = primitive(&b);
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    a.iter().map(|c| c * &g).collect()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, abs: &BigInt, e: i64) -> fmt::Result {
    match (e, abs.is_one()) {
        (0, _) => write!(f, "{abs}"),
        (1, true) => write!(f, "A"),
        (1, false) => write!(f, "{abs}*A"),
        (_, true) => write!(f, "A^{e}"),
        (_, false) => write!(f, "{abs}*A^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponent order, e.g. `-A^-2 - A^2` or `9 + 4*A^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_monomial(f, &abs, *e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> LaurentError {
        LaurentError::Parse {
            pos: self.pos,
            msg: what.to_string(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<i64, LaurentError> {
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        let v: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')'"));
        }
        Ok(if neg { -v } else { v })
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Accepts sums of terms `c`, `c*A^k`, `c A^k`, `A^k`, `A`, with `k`
    /// optionally negative or parenthesized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lx = Lexer { s: s.as_bytes(), pos: 0 };
        let mut out = LaurentPoly::zero();
        let mut first = true;
        loop {
            if lx.peek().is_none() {
                if first {
                    return Err(lx.err("empty polynomial"));
                }
                break;
            }
            let mut neg = false;
            if lx.eat(b'-') {
                neg = true;
            } else if !lx.eat(b'+') && !first {
                return Err(lx.err("expected '+' or '-'"));
            }
            first = false;
            let coeff = lx.digits().map(|d| d.parse::<BigInt>().unwrap());
            let had_star = lx.eat(b'*');
            let exp = if lx.eat(b'A') {
                if lx.eat(b'^') {
                    lx.exponent()?
                } else {
                    1
                }
            } else if had_star || coeff.is_none() {
                return Err(lx.err("expected 'A'"));
            } else {
                0
            };
            let c = coeff.unwrap_or_else(BigInt::one);
            out.add_term(exp, if neg { -c } else { c });
        }
        Ok(out)
    }
}

/// `delta = -A^2 - A^-2`, the value of a contractible loop.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(-1, 2), (-1, -2)])
}

/// `phi_k = -A^(2k+2) - A^(-2k-2)`.
pub fn phi(k: u32) -> LaurentPoly {
    let e = 2 * k as i64 + 2;
    LaurentPoly::from_terms([(-1, e), (-1, -e)])
}

/// Exact division by `delta`; fails when `p` is not a multiple of it.
pub fn reduce_by_delta(p: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    p.div_exact(&delta())
}

/// An element of the fraction field of the Laurent ring.
///
/// Values are kept reduced (numerator and denominator coprime, denominator
/// with lowest exponent 0 and positive lowest coefficient), but equality is
/// decided by cross-multiplication so that unreduced values compare correctly.
#[derive(Clone)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let (den, u) = den.normalize_unit();
        let num = &num * &u.unit_inverse().unwrap();
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this equals, if the denominator divides out.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.num.div_exact(&self.den).ok()
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, LaurentError> {
        if rhs.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::reduced(&self.num * p, self.den.clone())
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::reduced(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl FromStr for RationalFunction {
    type Err = LaurentError;

    /// Parses `p` or `(p) / (q)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.find(")/").or_else(|| s.find(") /")) {
            Some(_) => {
                let (a, b) = s.split_once('/').unwrap();
                let strip = |x: &str| -> Result<LaurentPoly, LaurentError> {
                    let x = x.trim();
                    let x = x.strip_prefix('(').and_then(|x| x.strip_suffix(')')).ok_or(
                        LaurentError::Parse {
                            pos: 0,
                            msg: "expected parenthesized polynomial".into(),
                        },
                    )?;
                    x.parse()
                };
                Self::new(strip(a)?, strip(b)?)
            }
            None => Ok(s.parse::<LaurentPoly>()?.into()),
        }
    }
}
