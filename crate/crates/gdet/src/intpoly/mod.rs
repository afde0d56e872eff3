//! Dense exact integer polynomials and residues modulo `x^N - 1`.
//!
//! [`IntPoly`] stores arbitrary-precision coefficients in ascending degree
//! order; the representation is canonical (no trailing zeros, the zero
//! polynomial is the empty vector) and every operation is exact. [`CyclicPoly`]
//! is a fixed-length residue modulo `x^N - 1`; reducing an `IntPoly` into it
//! folds the coefficient at `x^i` onto `x^{i mod N}` by addition.

mod cyclotomic;
mod resultant;

pub use cyclotomic::cyclotomic;
pub use resultant::{resultant, resultant_mod_prime, resultant_sylvester, sylvester_matrix};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense univariate polynomial with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Canonical form: the vector is
/// empty for the zero polynomial and its last entry is nonzero otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * x^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient (`None` for zero).
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Content: gcd of coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.clone());
        }
        g
    }

    /// Quotient and remainder by a divisor with unit leading coefficient.
    pub fn div_rem_monic(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap();
        assert!(lc.magnitude().is_one(), "divisor must have unit leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (IntPoly::zero(), self.clone());
        }
        let mut quo = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = if lc.is_one() { rem[k].clone() } else { -rem[k].clone() };
            if q.is_zero() {
                continue;
            }
            quo[k - dd] = q.clone();
            for j in 0..=dd {
                let t = &q * &d.coeffs[j];
                rem[k - dd + j] -= t;
            }
        }
        (IntPoly::from_coeffs(quo), IntPoly::from_coeffs(rem))
    }

    /// Remainder modulo a monic-or-negated-monic divisor.
    pub fn rem_monic(&self, d: &IntPoly) -> IntPoly {
        self.div_rem_monic(d).1
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, other: &IntPoly) -> IntPoly {
        self + &(-other)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Mul<&BigInt> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, s: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = if first || !c.is_negative() { c.clone() } else { -c };
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.magnitude().is_one() {
                        write!(f, "{a}*")?;
                    } else if a.is_negative() {
                        write!(f, "-")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `1 + x + ... + x^{N-1}`, the all-ones polynomial `(x^N - 1)/(x - 1)`.
pub fn all_ones(n: usize) -> IntPoly {
    assert!(n >= 1, "all_ones needs N >= 1");
    IntPoly::from_coeffs(vec![BigInt::one(); n])
}

/// A residue modulo `x^N - 1`: exactly `N` coefficients, index `i` holding the
/// coefficient of `x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicPoly {
    modulus: usize,
    coeffs: Vec<BigInt>,
}

impl CyclicPoly {
    pub fn zero(modulus: usize) -> Self {
        assert!(modulus >= 1);
        CyclicPoly {
            modulus,
            coeffs: vec![BigInt::zero(); modulus],
        }
    }

    pub fn one(modulus: usize) -> Self {
        let mut p = CyclicPoly::zero(modulus);
        p.coeffs[0] = BigInt::one();
        p
    }

    /// Reduces an `IntPoly` by folding `x^i` onto `x^{i mod N}`.
    pub fn from_int_poly(modulus: usize, p: &IntPoly) -> Self {
        let mut out = CyclicPoly::zero(modulus);
        for (i, c) in p.coeffs().iter().enumerate() {
            out.coeffs[i % modulus] += c;
        }
        out
    }

    /// Folds an arbitrary-length coefficient list into the residue.
    pub fn from_coeffs(modulus: usize, coeffs: Vec<BigInt>) -> Self {
        let mut out = CyclicPoly::zero(modulus);
        for (i, c) in coeffs.into_iter().enumerate() {
            out.coeffs[i % modulus] += c;
        }
        out
    }

    pub fn from_i64s(modulus: usize, coeffs: &[i64]) -> Self {
        CyclicPoly::from_coeffs(modulus, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Trims to a plain polynomial of degree < N.
    pub fn to_int_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }

    /// Exact cyclic convolution; errors on modulus mismatch.
    pub fn cyclic_mul(&self, other: &CyclicPoly) -> Result<CyclicPoly> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let n = self.modulus;
        let mut out = CyclicPoly::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out.coeffs[k] += a * b;
            }
        }
        Ok(out)
    }

    /// Realizes `x -> x^{-1}`: the coefficient at `i` moves to `(-i) mod N`.
    pub fn reciprocal(&self) -> CyclicPoly {
        let n = self.modulus;
        let mut out = CyclicPoly::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(n - i) % n] = c.clone();
        }
        out
    }

    /// Multiplication by `x^k` (cyclic shift).
    pub fn mul_x_pow(&self, k: usize) -> CyclicPoly {
        let n = self.modulus;
        let mut out = CyclicPoly::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[(i + k) % n] = c.clone();
        }
        out
    }

    pub fn add(&self, other: &CyclicPoly) -> Result<CyclicPoly> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclicPoly {
            modulus: self.modulus,
            coeffs,
        })
    }

    pub fn sub(&self, other: &CyclicPoly) -> Result<CyclicPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CyclicPoly {
        CyclicPoly {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Value at `x = 1` (the coefficient sum).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at `x = -1` (the alternating coefficient sum).
    pub fn eval_minus_one(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }
}
