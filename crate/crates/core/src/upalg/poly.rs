//! Polynomials in a single variable `n` with exact rational coefficients.
//!
//! These are the cycle entries of ultimately periodic polynomial sequences.
//! Coefficients are exact rationals so that integer-valued polynomials like
//! `n*(n-1)/2` are representable; integrality on a residue class is checked
//! with the finite-difference criterion (degree d is integer-valued on a
//! progression iff it is integer at d+1 consecutive members).

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::UpAlgError;

/// Sign that a polynomial settles into for all large enough arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventualSign {
    Negative,
    Zero,
    Positive,
}

/// Rational-coefficient polynomial, coefficients stored lowest degree first
/// with no trailing zeros (the zero polynomial has an empty coefficient list).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn constant_int(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The identity polynomial `n`.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending integer coefficients, e.g. `[5, 2]` is `2*n+5`.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with the zero polynomial and constants both of degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Constant term (the value at 0).
    pub fn constant_term(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, n: &BigInt) -> BigRational {
        let x = BigRational::from_integer(n.clone());
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn eval_u64(&self, n: u64) -> BigRational {
        self.eval(&BigInt::from(n))
    }

    /// Exact integer value at `n`; errors when the value is not an integer.
    pub fn eval_int(&self, n: u64) -> Result<BigInt, UpAlgError> {
        let v = self.eval_u64(n);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(UpAlgError::NotIntegerValued { index: n })
        }
    }

    /// True iff the polynomial takes integer values on the whole progression
    /// `start, start+step, start+2*step, ...` (checked at degree+1 members).
    pub fn is_integer_on_progression(&self, start: u64, step: u64) -> bool {
        (0..=self.degree() as u64).all(|k| self.eval_u64(start + k * step).is_integer())
    }

    /// Sign of the values for all sufficiently large arguments.
    pub fn eventual_sign(&self) -> EventualSign {
        match self.leading() {
            None => EventualSign::Zero,
            Some(c) if c.is_positive() => EventualSign::Positive,
            _ => EventualSign::Negative,
        }
    }

    /// A bound `N` such that for every `n >= N` the value `f(n)` has the
    /// eventual sign strictly (Cauchy root bound: real roots do not exceed
    /// `1 + max |a_i| / |a_d|`).
    pub fn sign_stable_bound(&self) -> Result<u64, UpAlgError> {
        let Some(lead) = self.leading() else {
            return Ok(0);
        };
        if self.is_constant() {
            return Ok(0);
        }
        let lead_abs = lead.abs();
        let mut max_ratio = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = c.abs() / &lead_abs;
            if r > max_ratio {
                max_ratio = r;
            }
        }
        let bound = (BigRational::one() + max_ratio).ceil().to_integer() + 1u32;
        bound
            .to_u64()
            .filter(|&b| b <= MAX_FOLD_BOUND)
            .ok_or(UpAlgError::BoundTooLarge)
    }

    /// Smallest power of two strictly greater than the degree; the parity of
    /// an integer-valued polynomial along any progression repeats with this
    /// period (Lucas: `C(k, i) mod 2` depends only on `k mod 2^(lg i + 1)`).
    pub fn parity_period(&self) -> u64 {
        let mut p = 1u64;
        while p <= self.degree() as u64 {
            p *= 2;
        }
        p
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn half(&self) -> Poly {
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(2)))
    }

    pub fn parse(text: &str) -> Result<Poly, UpAlgError> {
        let mut p = PolyParser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.err("trailing input after polynomial"));
        }
        Ok(poly)
    }
}

/// Explicit evaluation windows are folded into sequence prefixes; refuse
/// to build prefixes past this length.
pub const MAX_FOLD_BOUND: u64 = 1 << 20;

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                a + b
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

fn fmt_rational(c: &BigRational, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.denom().is_one() {
        write!(out, "{}", c.numer())
    } else {
        write!(out, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Compact canonical form, highest degree first: `n^2-3*n+1`, `1/2*n^2-1/2*n`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(out, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(out, "-")?;
            } else {
                write!(out, "+")?;
            }
            let unit_coeff = mag.is_one() && k > 0;
            if !unit_coeff {
                fmt_rational(&mag, out)?;
            }
            if k > 0 {
                if !unit_coeff {
                    write!(out, "*")?;
                }
                if k == 1 {
                    write!(out, "n")?;
                } else {
                    write!(out, "n^{k}")?;
                }
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn err(&self, msg: &str) -> UpAlgError {
        UpAlgError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, UpAlgError> {
        let mut acc = if self.eat(b'-') {
            -&self.mul_expr()?
        } else {
            self.mul_expr()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.mul_expr()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.mul_expr()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn mul_expr(&mut self) -> Result<Poly, UpAlgError> {
        let mut acc = self.pow_expr()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.pow_expr()?;
            } else if self.eat(b'/') {
                let divisor = self.pow_expr()?;
                if !divisor.is_constant() || divisor.is_zero() {
                    return Err(self.err("divisor must be a nonzero constant"));
                }
                let inv = BigRational::one() / divisor.constant_term();
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn pow_expr(&mut self) -> Result<Poly, UpAlgError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let exp = self.nat()?;
            if exp > 32 {
                return Err(self.err("exponent too large"));
            }
            let mut acc = Poly::constant(BigRational::one());
            for _ in 0..exp {
                acc = &acc * &base;
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly, UpAlgError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b'n') => {
                self.pos += 1;
                Ok(Poly::var())
            }
            Some(b) if b.is_ascii_digit() => {
                let v = self.nat()?;
                Ok(Poly::constant(BigRational::from_integer(BigInt::from(v))))
            }
            _ => Err(self.err("expected number, 'n', or '('")),
        }
    }

    fn nat(&mut self) -> Result<u64, UpAlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.err("number out of range"))
    }
}
