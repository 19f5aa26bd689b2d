//! Exact integer sequences: p-nomial coefficients, Fibonacci p-numbers,
//! p-th order Fibonacci numbers and bounded-part compositions.
//!
//! The p-nomial coefficient `pnomial(b, a, p)` is the coefficient of `x^a`
//! in `(1 + x + ... + x^(p-1))^b`. For `p = 2` these are the ordinary
//! binomial coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Ordinary binomial coefficient, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Memoized generalized Pascal triangle for one value of `p`.
///
/// Rows grow on demand; row `b` holds `b(p-1) + 1` entries.
#[derive(Debug, Clone)]
pub struct PNomialTable {
    p: usize,
    rows: Vec<Vec<BigInt>>,
}

impl PNomialTable {
    pub fn new(p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::domain("p", p, "p >= 2"));
        }
        Ok(PNomialTable {
            p,
            rows: vec![vec![BigInt::one()]],
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Row `b`, extending the table with the Pascal-type recurrence if needed.
    pub fn row(&mut self, b: usize) -> &[BigInt] {
        while self.rows.len() <= b {
            let prev = self.rows.last().expect("row 0 always present");
            let width = prev.len() + self.p - 1;
            let mut next = vec![BigInt::zero(); width];
            for (a, slot) in next.iter_mut().enumerate() {
                // C(b, a) = C(b-1, a) + C(b-1, a-1) + ... + C(b-1, a-p+1)
                let lo = a.saturating_sub(self.p - 1);
                let hi = a.min(prev.len() - 1);
                for src in prev.iter().take(hi + 1).skip(lo) {
                    *slot += src;
                }
            }
            self.rows.push(next);
        }
        &self.rows[b]
    }

    /// Coefficient for any integer `a`; zero outside `[0, b(p-1)]`.
    pub fn get(&mut self, b: usize, a: i64) -> BigInt {
        if a < 0 {
            return BigInt::zero();
        }
        self.row(b).get(a as usize).cloned().unwrap_or_default()
    }

    /// Like [`get`](Self::get) but accepts a signed row index, returning zero
    /// for negative rows. Recurrences index below row 0 freely.
    pub fn get_signed(&mut self, b: i64, a: i64) -> BigInt {
        if b < 0 {
            return BigInt::zero();
        }
        self.get(b as usize, a)
    }
}

/// Coefficient of `x^a` in `(1 + x + ... + x^(p-1))^b`.
pub fn pnomial(b: usize, a: i64, p: usize) -> Result<BigInt> {
    let mut table = PNomialTable::new(p)?;
    Ok(table.get(b, a))
}

/// The same coefficient through the alternating binomial sum
/// `sum_i (-1)^i C(b, i) C(b + a - 1 - i p, b - 1)`.
pub fn pnomial_alt(b: usize, a: i64, p: usize) -> Result<BigInt> {
    if p < 2 {
        return Err(Error::domain("p", p, "p >= 2"));
    }
    if a < 0 {
        return Ok(BigInt::zero());
    }
    if b == 0 {
        return Ok(if a == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    let b = b as i64;
    let p = p as i64;
    let mut acc = BigInt::zero();
    for i in 0..=a / p {
        let term = binomial(b, i) * binomial(b + a - 1 - i * p, b - 1);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Fibonacci p-numbers: `F(0) = 0`, `F(i) = 1` for `i` in `[1, p]`, then
/// `F(n) = F(n-1) + F(n-p-1)`.
pub fn fib_p(n: usize, p: usize) -> Result<BigInt> {
    Ok(fib_p_terms(n, p)?.pop().expect("at least one term"))
}

/// Terms `F^p_0 ..= F^p_n`.
pub fn fib_p_terms(n: usize, p: usize) -> Result<Vec<BigInt>> {
    if p < 1 {
        return Err(Error::domain("p", p, "p >= 1"));
    }
    let mut terms = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let next = match i {
            0 => BigInt::zero(),
            i if i <= p => BigInt::one(),
            i => &terms[i - 1] + &terms[i - p - 1],
        };
        terms.push(next);
    }
    Ok(terms)
}

/// p-th order generalized Fibonacci numbers: zero on `[0, p-2]`, one at
/// `p-1`, then each term is the sum of the previous `p`.
pub fn fib_pth_order(n: usize, p: usize) -> Result<BigInt> {
    Ok(fib_pth_order_terms(n, p)?.pop().expect("at least one term"))
}

/// Terms `F^(p)_0 ..= F^(p)_n`.
pub fn fib_pth_order_terms(n: usize, p: usize) -> Result<Vec<BigInt>> {
    if p < 2 {
        return Err(Error::domain("p", p, "p >= 2"));
    }
    let mut terms: Vec<BigInt> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let next = if i + 1 < p {
            BigInt::zero()
        } else if i + 1 == p {
            BigInt::one()
        } else {
            terms[i - p..i].iter().sum()
        };
        terms.push(next);
    }
    Ok(terms)
}

/// Which of the two Fibonacci generalizations a table or sweep refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceSpec {
    FibP { p: usize },
    FibPthOrder { p: usize },
}

impl SequenceSpec {
    pub fn fib_p(p: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::domain("p", p, "p >= 1"));
        }
        Ok(SequenceSpec::FibP { p })
    }

    pub fn fib_pth_order(p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::domain("p", p, "p >= 2"));
        }
        Ok(SequenceSpec::FibPthOrder { p })
    }

    pub fn terms(&self, n: usize) -> Vec<BigInt> {
        match *self {
            SequenceSpec::FibP { p } => fib_p_terms(n, p),
            SequenceSpec::FibPthOrder { p } => fib_pth_order_terms(n, p),
        }
        .expect("validated at construction")
    }
}

/// Sum of the `m`-th diagonal `b + a = m` of the p-nomial triangle.
///
/// These sums are `F^(p)_(m+p-1)`.
pub fn diagonal_sum(m: usize, p: usize) -> Result<BigInt> {
    let mut table = PNomialTable::new(p)?;
    Ok((0..=m).map(|a| table.get(m - a, a as i64)).sum())
}

/// Number of compositions of `n` into `k` parts, each in `[1, p]`.
pub fn compositions_count(n: usize, k: usize, p: usize) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::domain("n", n, "n >= 1"));
    }
    if p < 1 {
        return Err(Error::domain("p", p, "p >= 1"));
    }
    if p == 1 {
        return Ok(if n == k {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    if k > n {
        return Ok(BigInt::zero());
    }
    pnomial(k, (n - k) as i64, p)
}

/// Total number of compositions of `n` with parts in `[1, p]`.
///
/// `n = 0` has exactly one composition, the empty one.
pub fn compositions_total(n: usize, p: usize) -> Result<BigInt> {
    match p {
        0 => Err(Error::domain("p", p, "p >= 1")),
        1 => Ok(BigInt::one()),
        _ => fib_pth_order(n + p - 1, p),
    }
}

/// All compositions of `n` into `k` parts in `[1, p]`, lexicographically.
pub fn enumerate_compositions(n: usize, k: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(
        remaining: usize,
        slots: usize,
        p: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // Every remaining slot needs at least 1 and at most p.
        for part in 1..=p.min(remaining) {
            let rest = remaining - part;
            if rest < slots - 1 || rest > (slots - 1) * p {
                continue;
            }
            prefix.push(part);
            go(rest, slots - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, p, &mut Vec::with_capacity(k), &mut out);
    out
}
