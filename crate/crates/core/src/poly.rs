//! Univariate polynomials in `t` and the q-integers `[n] = (1 - t^n)/(1 - t)`.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::Serialize;

use crate::scalar::Scalar;

/// Dense polynomial; `coeffs[k]` is the coefficient of `t^k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

/// Integer polynomials, the common case for length generating functions.
pub type IntPoly = Poly<i64>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// Value at `t = 1`.
    pub fn at_one(&self) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, c| acc + c.clone())
    }

    /// Quotient and remainder by long division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact quotient, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// Product of a list of polynomials.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self
    where
        T: 'a,
    {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * f)
    }

    /// The q-integer `[n] = 1 + t + ... + t^(n-1)`; `[0] = 0`.
    pub fn q_int(n: usize) -> Self {
        Self::new(vec![T::one(); n])
    }

    /// `[n]! = [1][2]...[n]`.
    pub fn q_factorial(n: usize) -> Self {
        (1..=n).fold(Self::one(), |acc, k| &acc * &Self::q_int(k))
    }

    /// `[n]!!` for even `n`: `[2][4]...[n]`, with `[0]!! = 1`.
    pub fn q_double_factorial(n: usize) -> Self {
        assert!(n % 2 == 0, "double factorial defined here for even arguments only");
        (1..=n / 2).fold(Self::one(), |acc, k| &acc * &Self::q_int(2 * k))
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
                    let b = rhs.coeffs.get(k).cloned().unwrap_or_else(T::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(T::zero);
                    let b = rhs.coeffs.get(k).cloned().unwrap_or_else(T::zero);
                    a - b
                })
                .collect(),
        )
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}
