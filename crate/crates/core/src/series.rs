//! Rational generating functions in `t` and their truncated expansions.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPolynomial, TPolynomial};

/// `numerator / denominator` with the denominator's constant term equal
/// to 1, so that the expansion needs no division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: TPolynomial,
    denominator: TPolynomial,
}

impl RationalGF {
    pub fn new(numerator: TPolynomial, denominator: TPolynomial) -> Result<Self> {
        if !denominator.coeff(0).is_one() {
            return Err(Error::NonUnitDenominator);
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &TPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &TPolynomial {
        &self.denominator
    }

    /// Coefficients of `t^0 ..= t^order`.
    ///
    /// Uses `s_n = num_n - sum_(i >= 1) den_i s_(n-i)`.
    pub fn expand(&self, order: usize) -> Vec<BiPolynomial> {
        let den = self.denominator.coeffs();
        let mut out: Vec<BiPolynomial> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut s = self.numerator.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    s = &s - &(d * &out[n - i]);
                }
            }
            out.push(s);
        }
        out
    }

    /// Expansion of a series whose coefficients are plain integers.
    ///
    /// Returns `None` if some coefficient involves `x` or `q`.
    pub fn expand_integers(&self, order: usize) -> Option<Vec<BigInt>> {
        self.expand(order)
            .iter()
            .map(BiPolynomial::as_constant)
            .collect()
    }
}

/// The generating functions the catalog knows how to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfName {
    /// Orders of `Γ_n^(p)`.
    OrderPthOrder,
    /// Sizes of `Γ_n^(p)`.
    SizePthOrder,
    /// Fibonacci p-numbers.
    FibP,
    /// p-th order Fibonacci numbers.
    FibPthOrder,
    /// Weight enumerators of `Γ_n^(p)`.
    WeightPoly,
    /// Cube polynomials of `Γ_n^(p)`.
    CubePoly,
    /// Distance cube polynomials of `Γ_n^(p)`.
    DistanceCubePoly,
    /// Maximal cube polynomials of the Fibonacci p-cubes `Γ_n^p`.
    MaxCubePoly,
}

impl GfName {
    pub const ALL: [GfName; 8] = [
        GfName::OrderPthOrder,
        GfName::SizePthOrder,
        GfName::FibP,
        GfName::FibPthOrder,
        GfName::WeightPoly,
        GfName::CubePoly,
        GfName::DistanceCubePoly,
        GfName::MaxCubePoly,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            GfName::OrderPthOrder => "order_pth_order",
            GfName::SizePthOrder => "size_pth_order",
            GfName::FibP => "fib_p",
            GfName::FibPthOrder => "fib_pth_order",
            GfName::WeightPoly => "weight_poly",
            GfName::CubePoly => "cube_poly",
            GfName::DistanceCubePoly => "distance_cube_poly",
            GfName::MaxCubePoly => "maxcube",
        }
    }

    /// Smallest valid `p`.
    pub fn min_p(&self) -> usize {
        match self {
            GfName::FibP | GfName::MaxCubePoly => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for GfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GfName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.strip_suffix("_gf").unwrap_or(s);
        let name = match key {
            "order_pth_order" | "order" => GfName::OrderPthOrder,
            "size_pth_order" | "size" => GfName::SizePthOrder,
            "fib_p" | "fib_p_numbers" => GfName::FibP,
            "fib_pth_order" | "fib_pth_order_numbers" => GfName::FibPthOrder,
            "weight_poly" | "weight" => GfName::WeightPoly,
            "cube_poly" | "cube" => GfName::CubePoly,
            "distance_cube_poly" | "distance" => GfName::DistanceCubePoly,
            "maxcube" | "maxcube_poly" => GfName::MaxCubePoly,
            _ => return Err(Error::UnknownGf(s.to_string())),
        };
        Ok(name)
    }
}

/// `1 + t + ... + t^(len-1)`.
fn ones(len: usize) -> TPolynomial {
    TPolynomial::geometric(&BiPolynomial::one(), len)
}

/// `1 - t - t^2 - ... - t^p`.
fn pth_order_denominator(p: usize) -> TPolynomial {
    &TPolynomial::one() - &ones(p).shift(1)
}

/// `N(v) / (1 - t N(v))` with `N(v) = 1 + v t + ... + v^(p-1) t^(p-1)`.
fn weight_like(v: &BiPolynomial, p: usize) -> Result<RationalGF> {
    let num = TPolynomial::geometric(v, p);
    let den = &TPolynomial::one() - &num.shift(1);
    RationalGF::new(num, den)
}

/// Builds the generating function `name` for parameter `p`.
pub fn catalog(name: GfName, p: usize) -> Result<RationalGF> {
    if p < name.min_p() {
        let expected = if name.min_p() == 1 {
            "p >= 1"
        } else {
            "p >= 2"
        };
        return Err(Error::domain("p", p, expected));
    }
    let x = BiPolynomial::x();
    match name {
        GfName::OrderPthOrder => RationalGF::new(ones(p), pth_order_denominator(p)),
        GfName::SizePthOrder => {
            let coeffs: Vec<i64> = (0..p as i64).collect();
            RationalGF::new(
                TPolynomial::from_i64s(&coeffs),
                pth_order_denominator(p).pow(2),
            )
        }
        GfName::FibP => {
            let num = TPolynomial::from_i64s(&[0, 1]);
            let den = &TPolynomial::from_i64s(&[1, -1]) - &TPolynomial::one().shift(p + 1);
            RationalGF::new(num, den)
        }
        GfName::FibPthOrder => {
            RationalGF::new(TPolynomial::one().shift(p - 1), pth_order_denominator(p))
        }
        GfName::WeightPoly => weight_like(&x, p),
        GfName::CubePoly => weight_like(&(&x + &BiPolynomial::one()), p),
        GfName::DistanceCubePoly => weight_like(&(&x + &BiPolynomial::q()), p),
        GfName::MaxCubePoly => {
            let xt = TPolynomial::monomial(x.clone(), 1);
            let num = &TPolynomial::one() + &(&(&xt * &ones(p + 1)) * &ones(p));
            let den = &TPolynomial::one() - &ones(p + 1).scale(&x).shift(p + 1);
            RationalGF::new(num, den)
        }
    }
}

/// `A(x, t) = (1 + ... + t^p) / (1 - x t^(p+1) (1 + ... + t^p))`, which
/// satisfies `t^p H(x, t) = A(x, t) - (1 + ... + t^(p-1))` for the maximal
/// cube generating function `H`.
pub fn maxcube_auxiliary(p: usize) -> Result<RationalGF> {
    if p < 1 {
        return Err(Error::domain("p", p, "p >= 1"));
    }
    let den = &TPolynomial::one() - &ones(p + 1).scale(&BiPolynomial::x()).shift(p + 1);
    RationalGF::new(ones(p + 1), den)
}

/// `c_k(Γ_n^(p))` for `n = 0..=order`, from the weight-enumerator series:
/// each coefficient is differentiated `k` times in `x`, evaluated at
/// `x = 1` and divided by `k!`.
pub fn c_k_gf_via_derivative(p: usize, k: usize, order: usize) -> Result<Vec<BigInt>> {
    let series = catalog(GfName::WeightPoly, p)?.expand(order);
    let factorial: BigInt = (1..=k).map(BigInt::from).product();
    let one = BigInt::one();
    Ok(series
        .iter()
        .map(|coeff| {
            let mut d = coeff.clone();
            for _ in 0..k {
                d = d.derivative_x();
            }
            let value = d.evaluate(&one, &BigInt::zero());
            debug_assert!((&value % &factorial).is_zero());
            value / &factorial
        })
        .collect())
}
