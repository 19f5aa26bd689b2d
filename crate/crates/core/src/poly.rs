//! Exact integer polynomials.
//!
//! [`IntPolynomial`] is dense in `x`, [`BiPolynomial`] is a sparse map of
//! monomials `x^i q^j`, and [`TPolynomial`] is a dense polynomial in `t`
//! whose coefficients are bivariate polynomials.
//!
//! Text rendering is ascending with zero terms omitted, e.g.
//! `13 + 22*x + 12*x^2 + 2*x^3`; bivariate terms are written
//! `c*x^i*q^j` and sorted by `(i, j)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::numbers::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// From ascending coefficients; trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    /// `p(x + c)`, expanded with binomial coefficients.
    pub fn substitute_shift(&self, c: &BigInt) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // a (x + c)^i = a sum_j C(i, j) c^(i-j) x^j
            let mut c_pow = BigInt::one();
            for j in (0..=i).rev() {
                out[j] += a * binomial(i as i64, j as i64) * &c_pow;
                c_pow *= c;
            }
        }
        Self::new(out)
    }

    /// `p(x + q)` as a bivariate polynomial.
    pub fn substitute_xq(&self) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            for j in 0..=i {
                out.add_term(j, i - j, a * binomial(i as i64, j as i64));
            }
        }
        out
    }

    /// This polynomial as a bivariate one without `q`.
    pub fn to_bivariate(&self) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            out.add_term(i, 0, a.clone());
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, [(i, "x")]));
        write_terms(f, terms)
    }
}

// Writes `c0 + c1*x + ...` with unit coefficients elided on non-constant
// terms and negative coefficients folded into ` - `.
fn write_terms<'a, const V: usize>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigInt, [(usize, &'static str); V])>,
) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        let negative = c.is_negative();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let magnitude = c.abs();
        let mut factors = vars.iter().filter(|(e, _)| *e > 0).peekable();
        let constant = factors.peek().is_none();
        if constant || !magnitude.is_one() {
            write!(f, "{magnitude}")?;
        }
        let mut need_star = !(constant || magnitude.is_one());
        for (e, name) in factors {
            if need_star {
                f.write_str("*")?;
            }
            need_star = true;
            if *e == 1 {
                f.write_str(name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

forward_owned_binops!(IntPolynomial);
forward_owned_binops!(BiPolynomial);

/// Sparse polynomial in `x` and `q`; key `(i, j)` is the monomial `x^i q^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPolynomial {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BiPolynomial {
    pub fn zero() -> Self {
        BiPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut out = Self::zero();
        out.add_term(i, j, c);
        out
    }

    /// Adds `c x^i q^j`, dropping the entry if it cancels.
    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    /// The constant when no monomial involves `x` or `q`.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// The polynomial in `x` when no monomial involves `q`.
    pub fn to_univariate_x(&self) -> Option<IntPolynomial> {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            if j != 0 {
                return None;
            }
            if coeffs.len() <= i {
                coeffs.resize(i + 1, BigInt::zero());
            }
            coeffs[i] = c.clone();
        }
        Some(IntPolynomial::new(coeffs))
    }

    /// Exchanges the roles of `x` and `q`.
    pub fn swap_variables(&self) -> Self {
        BiPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(i, j), c)| self.terms.get(&(j, i)) == Some(c))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, x: &BigInt, q: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(x.clone(), i) * num_traits::pow(q.clone(), j))
            .sum()
    }

    /// `∂/∂x`.
    pub fn derivative_x(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * i);
            }
        }
        out
    }

    /// Substitutes the value `x` and returns the remaining polynomial in `q`
    /// (rendered with `x` as its variable).
    pub fn evaluate_x(&self, x: &BigInt) -> IntPolynomial {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            if coeffs.len() <= j {
                coeffs.resize(j + 1, BigInt::zero());
            }
            coeffs[j] += c * num_traits::pow(x.clone(), i);
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for BiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .map(|(&(i, j), c)| (c, [(i, "x"), (j, "q")])),
        )
    }
}

impl Add for &BiPolynomial {
    type Output = BiPolynomial;

    fn add(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPolynomial {
    type Output = BiPolynomial;

    fn sub(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BiPolynomial {
    type Output = BiPolynomial;

    fn mul(self, rhs: &BiPolynomial) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPolynomial {
    type Output = BiPolynomial;

    fn neg(self) -> BiPolynomial {
        BiPolynomial {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

/// Dense polynomial in `t` with bivariate coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TPolynomial {
    coeffs: Vec<BiPolynomial>,
}

impl TPolynomial {
    pub fn new(mut coeffs: Vec<BiPolynomial>) -> Self {
        while coeffs.last().is_some_and(BiPolynomial::is_zero) {
            coeffs.pop();
        }
        TPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        TPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BiPolynomial::one()])
    }

    /// `c t^k`.
    pub fn monomial(c: BiPolynomial, k: usize) -> Self {
        let mut coeffs = vec![BiPolynomial::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// A polynomial in `t` alone, from integer coefficients.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BiPolynomial::constant(BigInt::from(c)))
                .collect(),
        )
    }

    /// `1 + v t + v^2 t^2 + ... + v^(len-1) t^(len-1)`.
    pub fn geometric(v: &BiPolynomial, len: usize) -> Self {
        let mut coeffs = Vec::with_capacity(len);
        let mut power = BiPolynomial::one();
        for _ in 0..len {
            coeffs.push(power.clone());
            power = &power * v;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BiPolynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BiPolynomial {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BiPolynomial::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPolynomial { coeffs }
    }

    pub fn scale(&self, c: &BiPolynomial) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;

    fn add(self, rhs: &TPolynomial) -> TPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPolynomial::new((0..len).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &TPolynomial {
    type Output = TPolynomial;

    fn sub(self, rhs: &TPolynomial) -> TPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPolynomial::new((0..len).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;

    fn mul(self, rhs: &TPolynomial) -> TPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return TPolynomial::zero();
        }
        let mut out = vec![BiPolynomial::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        TPolynomial::new(out)
    }
}
