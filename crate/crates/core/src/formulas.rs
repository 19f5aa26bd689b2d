//! Closed-form counts for `Γ_n^(p)` (p-th order Fibonacci cubes) and
//! `Γ_n^p` (Fibonacci p-cubes).
//!
//! Nothing here touches explicit graphs; only p-nomial coefficients and
//! polynomial arithmetic are used, so these can be checked against the
//! brute-force census in [`crate::oracle`].

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{binomial, PNomialTable};
use crate::poly::{BiPolynomial, IntPolynomial};
use crate::strings::BitString;

fn check_pth(p: usize) -> Result<()> {
    if p < 2 {
        return Err(Error::domain("p", p, "p >= 2"));
    }
    Ok(())
}

fn check_pcube(p: usize) -> Result<()> {
    if p < 1 {
        return Err(Error::domain("p", p, "p >= 1"));
    }
    Ok(())
}

/// Largest vertex weight in `Γ_n^(p)`: `floor((n + 1)(p - 1) / p)`.
pub fn max_weight(n: usize, p: usize) -> Result<usize> {
    check_pth(p)?;
    Ok((n + 1) * (p - 1) / p)
}

/// Weight enumerator `W(x) = sum_w C(n-w+1, w)_(p-1) x^w` of `Γ_n^(p)`.
pub fn weight_poly(n: usize, p: usize) -> Result<IntPolynomial> {
    let top = max_weight(n, p)?;
    let mut table = PNomialTable::new(p)?;
    Ok(IntPolynomial::new(
        (0..=top).map(|w| table.get(n - w + 1, w as i64)).collect(),
    ))
}

/// Cube polynomial `sum_a C(n-a+1, a)_(p-1) (1 + x)^a`.
pub fn cube_poly(n: usize, p: usize) -> Result<IntPolynomial> {
    let top = max_weight(n, p)?;
    let mut table = PNomialTable::new(p)?;
    let one_plus_x = IntPolynomial::from_i64s(&[1, 1]);
    let mut acc = IntPolynomial::zero();
    let mut power = IntPolynomial::one();
    for a in 0..=top {
        let c = IntPolynomial::constant(table.get(n - a + 1, a as i64));
        acc = &acc + &(&c * &power);
        power = &power * &one_plus_x;
    }
    Ok(acc)
}

/// Distance cube polynomial `sum_a C(n-a+1, a)_(p-1) (x + q)^a`.
pub fn distance_cube_poly(n: usize, p: usize) -> Result<BiPolynomial> {
    let top = max_weight(n, p)?;
    let mut table = PNomialTable::new(p)?;
    let x_plus_q = &BiPolynomial::x() + &BiPolynomial::q();
    let mut acc = BiPolynomial::zero();
    let mut power = BiPolynomial::one();
    for a in 0..=top {
        let c = BiPolynomial::constant(table.get(n - a + 1, a as i64));
        acc = &acc + &(&c * &power);
        power = &power * &x_plus_q;
    }
    Ok(acc)
}

/// Number of induced `Q_k` in `Γ_n^(p)`.
pub fn c_k(n: usize, p: usize, k: usize) -> Result<BigInt> {
    let top = max_weight(n, p)?;
    let mut table = PNomialTable::new(p)?;
    Ok((k..=top)
        .map(|a| table.get(n - a + 1, a as i64) * binomial(a as i64, k as i64))
        .sum())
}

/// Number of induced `Q_k` in `Γ_n^(p)` whose bottom vertex has weight `d`.
pub fn c_kd(n: usize, p: usize, k: usize, d: usize) -> Result<BigInt> {
    check_pth(p)?;
    let mut table = PNomialTable::new(p)?;
    let a = (d + k) as i64;
    Ok(table.get_signed(n as i64 - a + 1, a) * binomial(a, k as i64))
}

/// Number of maximal `Q_k` in the Fibonacci p-cube `Γ_n^p`:
/// the `(p+1)`-nomial `C(k+1, n-(p+1)k+p)_p`.
pub fn h_k_formula(n: usize, p: usize, k: usize) -> Result<BigInt> {
    check_pcube(p)?;
    if k > n {
        return Err(Error::domain("k", k, "k <= n"));
    }
    let mut table = PNomialTable::new(p + 1)?;
    Ok(h_k_with(&mut table, n, p, k))
}

fn h_k_with(table: &mut PNomialTable, n: usize, p: usize, k: usize) -> BigInt {
    let a = n as i64 - ((p + 1) * k) as i64 + p as i64;
    table.get(k + 1, a)
}

/// Maximal cube polynomial `H(x) = sum_k h_k x^k` of `Γ_n^p`, summed
/// directly from [`h_k_formula`].
pub fn maximal_cube_poly_direct(n: usize, p: usize) -> Result<IntPolynomial> {
    check_pcube(p)?;
    let mut table = PNomialTable::new(p + 1)?;
    Ok(IntPolynomial::new(
        (0..=n).map(|k| h_k_with(&mut table, n, p, k)).collect(),
    ))
}

/// `H(Γ_0^p) ..= H(Γ_n^p)` from the small cases and the recurrence
/// `H_n = x (H_(n-p-1) + ... + H_(n-2p-1))` for `n >= 2p + 1`.
///
/// `Γ_0^p = K_1` is its own maximal `Q_0`, so `H_0 = 1`.
pub fn maximal_cube_polys_recurrence(n: usize, p: usize) -> Result<Vec<IntPolynomial>> {
    check_pcube(p)?;
    let mut polys: Vec<IntPolynomial> = Vec::with_capacity(n + 1);
    let x = IntPolynomial::x();
    for m in 0..=n {
        let next = if m == 0 {
            IntPolynomial::one()
        } else if m <= p + 1 {
            // a star with m leaves
            IntPolynomial::monomial(BigInt::from(m), 1)
        } else if m <= 2 * p {
            let quadratic = BigInt::from((m - p - 1) * (m - p) / 2);
            let linear = BigInt::from(2 * p + 2 - m);
            IntPolynomial::new(vec![BigInt::zero(), linear, quadratic])
        } else {
            let sum = (1..=p + 1).fold(IntPolynomial::zero(), |acc, i| &acc + &polys[m - p - i]);
            &x * &sum
        };
        polys.push(next);
    }
    Ok(polys)
}

/// Maximal cube polynomial of `Γ_n^p`, computed both directly and by the
/// recurrence.
///
/// Panics if the two disagree.
pub fn maximal_cube_poly(n: usize, p: usize) -> Result<IntPolynomial> {
    let direct = maximal_cube_poly_direct(n, p)?;
    let recurrence = maximal_cube_polys_recurrence(n, p)?
        .pop()
        .expect("n + 1 entries");
    assert_eq!(
        direct, recurrence,
        "maximal cube polynomial of Γ_{n}^{p}: direct sum and recurrence disagree"
    );
    Ok(direct)
}

/// Top vertices of the maximal `Q_k` of `Γ_n^p`, in lexicographic order.
///
/// These are the strings `0^l0 1 0^l1 1 ... 1 0^lk` with `sum l = n - k`,
/// end gaps in `[0, p]` and interior gaps in `[p, 2p]`.
pub fn maximal_top_vertices(n: usize, p: usize, k: usize) -> Result<Vec<BitString>> {
    check_pcube(p)?;
    if k < 1 {
        return Err(Error::domain("k", k, "k >= 1"));
    }
    let mut out = Vec::new();
    if n < k {
        return Ok(out);
    }
    let mut gaps = Vec::with_capacity(k + 1);
    gap_vectors(n - k, k, p, &mut gaps, &mut |gaps| {
        out.push(gaps_to_top(gaps))
    });
    out.sort();
    Ok(out)
}

fn gap_bounds(index: usize, k: usize, p: usize) -> (usize, usize) {
    if index == 0 || index == k {
        (0, p)
    } else {
        (p, 2 * p)
    }
}

fn gap_vectors<F: FnMut(&[usize])>(
    remaining: usize,
    k: usize,
    p: usize,
    gaps: &mut Vec<usize>,
    emit: &mut F,
) {
    let index = gaps.len();
    let (lo, hi) = gap_bounds(index, k, p);
    if index == k {
        if (lo..=hi).contains(&remaining) {
            gaps.push(remaining);
            emit(gaps);
            gaps.pop();
        }
        return;
    }
    for gap in lo..=hi.min(remaining) {
        gaps.push(gap);
        gap_vectors(remaining - gap, k, p, gaps, emit);
        gaps.pop();
    }
}

fn gaps_to_top(gaps: &[usize]) -> BitString {
    let mut bits = Vec::new();
    for (i, &gap) in gaps.iter().enumerate() {
        if i > 0 {
            bits.push(true);
        }
        bits.extend(core::iter::repeat_n(false, gap));
    }
    BitString::from_bits(bits)
}

fn zero_runs(u: &BitString) -> Vec<usize> {
    let mut runs = vec![0];
    for b in u.iter() {
        if b {
            runs.push(0);
        } else {
            *runs.last_mut().expect("nonempty") += 1;
        }
    }
    runs
}

/// Sends the top vertex of a maximal `Q_k` of `Γ_n^p` to a `(p+1)`-th
/// order Fibonacci string of length `n - pk + p` and weight
/// `n - (p+1)k + p`: interior gaps shrink by `p`, then zeros and ones swap.
pub fn top_to_higher_order_string(top: &BitString, p: usize) -> Result<BitString> {
    check_pcube(p)?;
    let gaps = zero_runs(top);
    let k = gaps.len() - 1;
    if k == 0 {
        return Err(Error::Precondition(
            "top vertex must have weight at least 1",
        ));
    }
    let mut bits = Vec::new();
    for (i, &gap) in gaps.iter().enumerate() {
        let (lo, hi) = gap_bounds(i, k, p);
        if !(lo..=hi).contains(&gap) {
            return Err(Error::Precondition("not the top vertex of a maximal cube"));
        }
        if i > 0 {
            bits.push(false);
        }
        let shrunk = if i == 0 || i == k { gap } else { gap - p };
        bits.extend(core::iter::repeat_n(true, shrunk));
    }
    Ok(BitString::from_bits(bits))
}

/// Inverse of [`top_to_higher_order_string`].
pub fn higher_order_string_to_top(s: &BitString, p: usize) -> Result<BitString> {
    check_pcube(p)?;
    if !s.is_pth_order(p + 1) {
        return Err(Error::ForbiddenRun { p: p + 1 });
    }
    let k = s.len() - s.weight();
    if k == 0 {
        return Err(Error::Precondition("string must contain at least one zero"));
    }
    let mut bits = Vec::new();
    let mut index = 0;
    let mut run = 0;
    let flush = |run: usize, index: usize, bits: &mut Vec<bool>| {
        let grown = if index == 0 || index == k {
            run
        } else {
            run + p
        };
        bits.extend(core::iter::repeat_n(false, grown));
    };
    for b in s.iter() {
        if b {
            run += 1;
        } else {
            flush(run, index, &mut bits);
            bits.push(true);
            index += 1;
            run = 0;
        }
    }
    flush(run, index, &mut bits);
    Ok(BitString::from_bits(bits))
}

/// `sum_w C(n-w+1, w)_(p-1)`, the order of `Γ_n^(p)` from the weight
/// distribution.
pub fn order_from_weights(n: usize, p: usize) -> Result<BigInt> {
    Ok(weight_poly(n, p)?.evaluate(&BigInt::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    use crate::graphs::FamilySpec;
    use crate::numbers::{fib_pth_order, pnomial};
    use crate::strings::enumerate_family;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn weight_poly_examples() {
        assert_eq!(weight_poly(4, 3).unwrap(), ip(&[1, 4, 6, 2]));
        assert_eq!(weight_poly(0, 5).unwrap(), ip(&[1]));
        assert_eq!(weight_poly(3, 2).unwrap(), ip(&[1, 3, 1]));
        assert!(weight_poly(3, 1).is_err());
    }

    #[test]
    fn cube_poly_examples() {
        assert_eq!(cube_poly(3, 2).unwrap(), ip(&[5, 5, 1]));
        assert_eq!(cube_poly(4, 3).unwrap(), ip(&[13, 22, 12, 2]));
        for p in 2..=5 {
            for n in 0..=15 {
                let c = cube_poly(n, p).unwrap();
                assert_eq!(c.degree(), Some(max_weight(n, p).unwrap()));
                assert_eq!(c, weight_poly(n, p).unwrap().substitute_shift(&big(1)));
                let d = distance_cube_poly(n, p).unwrap();
                assert_eq!(d, weight_poly(n, p).unwrap().substitute_xq());
                assert!(d.is_symmetric());
                assert_eq!(d.coeff(0, 0), big(1));
                assert_eq!(
                    d.evaluate_x(&big(1)),
                    weight_poly(n, p).unwrap().substitute_shift(&big(1))
                );
            }
        }
    }

    #[test]
    fn coefficient_formulas_match_polynomials() {
        assert_eq!(c_k(4, 3, 1).unwrap(), big(22));
        assert_eq!(c_kd(3, 2, 1, 1).unwrap(), big(2));
        assert_eq!(c_kd(0, 2, 0, 0).unwrap(), big(1));
        assert_eq!(c_kd(2, 2, 3, 3).unwrap(), big(0));
        for p in 2..=4 {
            for n in 0..=12 {
                let cube = cube_poly(n, p).unwrap();
                let dist = distance_cube_poly(n, p).unwrap();
                assert_eq!(c_k(n, p, 0).unwrap(), fib_pth_order(n + p, p).unwrap());
                for k in 0..=n + 1 {
                    assert_eq!(c_k(n, p, k).unwrap(), cube.coeff(k));
                    for d in 0..=n + 1 {
                        assert_eq!(c_kd(n, p, k, d).unwrap(), dist.coeff(k, d));
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_sum_identity() {
        for p in 2..=5 {
            for n in 0..=30 {
                assert_eq!(
                    order_from_weights(n, p).unwrap(),
                    fib_pth_order(n + p, p).unwrap()
                );
            }
        }
    }

    #[test]
    fn h_k_examples() {
        assert_eq!(h_k_formula(4, 1, 2).unwrap(), big(3));
        assert_eq!(h_k_formula(6, 2, 2).unwrap(), big(6));
        assert_eq!(h_k_formula(0, 2, 0).unwrap(), big(1));
        for n in 1..10 {
            assert_eq!(h_k_formula(n, 2, 0).unwrap(), big(0));
        }
        assert!(h_k_formula(3, 1, 4).is_err());
        assert!(h_k_formula(3, 0, 1).is_err());
        // the classical case is a binomial
        for n in 0..=20 {
            for k in 0..=n {
                let expected = crate::numbers::binomial(k as i64 + 1, n as i64 - 2 * k as i64 + 1);
                assert_eq!(h_k_formula(n, 1, k).unwrap(), expected);
            }
        }
    }

    #[test]
    fn maximal_cube_poly_examples() {
        assert_eq!(maximal_cube_poly(3, 2).unwrap(), ip(&[0, 3]));
        assert_eq!(maximal_cube_poly(5, 3).unwrap(), ip(&[0, 3, 1]));
        assert_eq!(maximal_cube_poly(4, 1).unwrap(), ip(&[0, 0, 3]));
        assert_eq!(maximal_cube_poly(4, 1).unwrap().to_string(), "3*x^2");
        assert_eq!(maximal_cube_poly(0, 3).unwrap(), ip(&[1]));
    }

    #[test]
    fn recurrence_matches_direct_sum() {
        for p in 1..=4 {
            let rec = maximal_cube_polys_recurrence(30, p).unwrap();
            for (n, h) in rec.iter().enumerate() {
                assert_eq!(h, &maximal_cube_poly_direct(n, p).unwrap(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn h_k_pascal_step() {
        for p in 1..=4 {
            for n in 2 * p + 1..=25 {
                for k in 1..=n {
                    let lhs = h_k_formula(n, p, k).unwrap();
                    let rhs: BigInt = (0..=p)
                        .map(|i| {
                            let m = n - p - i - 1;
                            if k - 1 <= m {
                                h_k_formula(m, p, k - 1).unwrap()
                            } else {
                                BigInt::zero()
                            }
                        })
                        .sum();
                    assert_eq!(lhs, rhs, "n={n} p={p} k={k}");
                }
            }
        }
    }

    #[test]
    fn top_vertex_examples() {
        let tops: Vec<String> = maximal_top_vertices(6, 2, 2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            tops,
            ["001001", "010001", "010010", "100001", "100010", "100100"]
        );
        let tops = maximal_top_vertices(4, 1, 2).unwrap();
        assert_eq!(tops, vec![bs("0101"), bs("1001"), bs("1010")]);
        assert!(maximal_top_vertices(3, 2, 3).unwrap().is_empty());
        assert!(maximal_top_vertices(2, 2, 0).is_err());
        // k = 1: n - 1 split into two end gaps
        assert_eq!(maximal_top_vertices(3, 2, 1).unwrap().len(), 3);
    }

    #[test]
    fn top_vertex_counts_and_bijection() {
        for p in 1..=3 {
            for n in 0..=16 {
                for k in 1..=n {
                    let tops = maximal_top_vertices(n, p, k).unwrap();
                    assert_eq!(big(tops.len() as i64), h_k_formula(n, p, k).unwrap());
                    let images: BTreeSet<BitString> = tops
                        .iter()
                        .map(|t| {
                            let s = top_to_higher_order_string(t, p).unwrap();
                            assert_eq!(higher_order_string_to_top(&s, p).unwrap(), *t);
                            s
                        })
                        .collect();
                    if n + p < (p + 1) * k {
                        assert!(images.is_empty());
                        continue;
                    }
                    let len = n + p - p * k;
                    let weight = n + p - (p + 1) * k;
                    let expected: BTreeSet<BitString> =
                        enumerate_family(&FamilySpec::pth_order(len, p + 1).unwrap())
                            .unwrap()
                            .into_iter()
                            .filter(|s| s.weight() == weight)
                            .collect();
                    assert_eq!(images, expected, "n={n} p={p} k={k}");
                    assert_eq!(
                        big(expected.len() as i64),
                        pnomial(len - weight + 1, weight as i64, p + 1).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn bijection_rejects_foreign_strings() {
        assert!(top_to_higher_order_string(&bs("0000"), 2).is_err());
        assert!(top_to_higher_order_string(&bs("1100"), 2).is_err());
        assert!(higher_order_string_to_top(&bs("111"), 2).is_err());
        assert!(higher_order_string_to_top(&bs("11"), 2).is_err());
    }
}
