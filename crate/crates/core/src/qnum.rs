//! Balanced q-integers and their products, one-sided q-analogues, cyclotomic
//! polynomials and the cyclotomic order `d_l`.
//!
//! Balanced notation: `{i} = v^i - v^-i`, `{i}_n = {i}{i-1}...{i-n+1}`,
//! `{n}! = {n}_n` and `[i ¦ n] = {i}_n / {n}!`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentV;

/// Index `l ≥ 1` of a cyclotomic polynomial `Φ_l` or its balanced form `Φ̃_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycIndex(u32);

impl CycIndex {
    pub fn new(l: u32) -> Result<Self> {
        if l == 0 {
            Err(Error::OutOfRange(
                "cyclotomic index must be at least 1".into(),
            ))
        } else {
            Ok(Self(l))
        }
    }

    /// Panicking constructor for literal indices.
    pub const fn of(l: u32) -> Self {
        assert!(l >= 1, "cyclotomic index must be at least 1");
        Self(l)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for CycIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `{i} = v^i - v^-i`.
pub fn qint(i: i64) -> LaurentV {
    if i == 0 {
        return LaurentV::zero();
    }
    LaurentV::from_terms([(i, 1), (-i, -1)])
}

/// `f · {i}` computed as `v^i f - v^-i f`.
pub fn times_qint(f: &LaurentV, i: i64) -> LaurentV {
    if i == 0 {
        return LaurentV::zero();
    }
    f.shift(i) - f.shift(-i)
}

/// `f · {i}_n`, one linear factor at a time.
pub fn times_qfall(f: &LaurentV, i: i64, n: u32) -> LaurentV {
    let mut acc = f.clone();
    for t in 0..n as i64 {
        if acc.is_zero() {
            break;
        }
        acc = times_qint(&acc, i - t);
    }
    acc
}

/// `{i}_n`; the empty product is 1.
pub fn qfall(i: i64, n: u32) -> LaurentV {
    times_qfall(&LaurentV::one(), i, n)
}

/// `{n}!`.
pub fn qfact(n: u32) -> LaurentV {
    qfall(n as i64, n)
}

/// Balanced q-binomial `[i ¦ n] = {i}_n / {n}!` for any integer `i`.
///
/// Built as the running quotient `[i-n+j ¦ j] = [i-n+j-1 ¦ j-1] · {i-n+j} / {j}`,
/// each step of which is an exact division.
pub fn qbinom(i: i64, n: u32) -> LaurentV {
    if 0 <= i && i < n as i64 {
        return LaurentV::zero();
    }
    let base = i - n as i64;
    let mut acc = LaurentV::one();
    for j in 1..=n as i64 {
        if base + j == 0 {
            return LaurentV::zero();
        }
        acc = times_qint(&acc, base + j)
            .exact_div(&qint(j))
            .expect("balanced q-binomials are Laurent polynomials");
    }
    acc
}

/// One-sided `[m]_q = 1 + q + ... + q^(m-1)`.
pub fn qint_pos(m: u32) -> LaurentV {
    LaurentV::from_q_coeffs(std::iter::repeat_n(1, m as usize))
}

/// `[m]_q! = [m]_q [m-1]_q ... [1]_q`.
pub fn qfact_pos(m: u32) -> LaurentV {
    (1..=m).map(qint_pos).product()
}

/// One-sided q-multinomial `[n]_q! / ([i_1]_q! ... [i_p]_q!)`.
pub fn qmultinom(n: u32, parts: &[i64]) -> Result<LaurentV> {
    let bad = || Error::BadPartition {
        n,
        parts: parts.to_vec(),
    };
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n as i64 {
        return Err(bad());
    }
    let den: LaurentV = parts.iter().map(|&p| qfact_pos(p as u32)).product();
    qfact_pos(n).exact_div(&den)
}

/// Möbius function by trial division.
pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Euler's totient, the degree of `Φ_n`.
pub fn euler_phi(n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .map(|d| mobius(n / d) as i64 * d as i64)
        .sum::<i64>() as u64
}

fn mobius_product(l: u32, factor: impl Fn(i64) -> LaurentV) -> LaurentV {
    assert!(l >= 1, "cyclotomic index must be at least 1");
    let l = l as u64;
    let mut num = LaurentV::one();
    let mut den = LaurentV::one();
    for d in divisors(l) {
        match mobius(l / d) {
            1 => num = &num * &factor(d as i64),
            -1 => den = &den * &factor(d as i64),
            _ => {}
        }
    }
    num.exact_div(&den)
        .expect("Möbius products of cyclotomic factors are exact")
}

/// `Φ_m(q) = Π_{d|m} (q^d - 1)^μ(m/d)`, stored with even `v`-exponents.
pub fn cyclotomic(m: u32) -> LaurentV {
    mobius_product(m, |d| LaurentV::q_pow(d) - LaurentV::one())
}

/// Balanced `Φ̃_l = Π_{d|l} {d}^μ(l/d) = v^-φ(l) Φ_l`.
pub fn cyclotomic_sym(l: u32) -> LaurentV {
    mobius_product(l, qint)
}

/// Largest `i` with `Φ̃_l^i | f`; `None` for the zero polynomial.
pub fn d_order(f: &LaurentV, l: CycIndex) -> Option<u32> {
    if f.is_zero() {
        return None;
    }
    let phi = cyclotomic_sym(l.get());
    let mut count = 0;
    let mut cur = f.clone();
    while let Ok(q) = cur.exact_div(&phi) {
        cur = q;
        count += 1;
    }
    Some(count)
}

/// Strips `Φ̃_l` factors for `l = 1..=bound`, returning `(l, exponent)` pairs
/// with positive exponent and the remaining cofactor.
pub fn strip_cyclotomic(f: &LaurentV, bound: u32) -> (Vec<(u32, u32)>, LaurentV) {
    let mut factors = Vec::new();
    let mut cur = f.clone();
    if cur.is_zero() {
        return (factors, cur);
    }
    for l in 1..=bound {
        let phi = cyclotomic_sym(l);
        let mut e = 0;
        while let Ok(q) = cur.exact_div(&phi) {
            cur = q;
            e += 1;
        }
        if e > 0 {
            factors.push((l, e));
        }
    }
    (factors, cur)
}

/// Classical binomial coefficient, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i64) -> LaurentV {
        LaurentV::v_pow(e)
    }

    #[test]
    fn q_integers() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(4), v(4) - v(-4));
        assert_eq!(qint(-3), -qint(3));
    }

    #[test]
    fn falling_products() {
        assert!(qfall(7, 0).is_one());
        assert!(qfall(-2, 0).is_one());
        assert_eq!(qfall(3, 2), qint(3) * qint(2));
        assert!(qfall(1, 2).is_zero());
        assert_eq!(qfact(3), qint(3) * qint(2) * qint(1));
    }

    #[test]
    fn q_binomials() {
        assert!(qbinom(5, 0).is_one());
        assert!(qbinom(-5, 0).is_one());
        assert_eq!(
            qbinom(4, 1),
            LaurentV::from_terms([(3, 1), (1, 1), (-1, 1), (-3, 1)])
        );
        assert!(qbinom(1, 2).is_zero());
        // [-1 ¦ 1] = {-1}/{1} = -1
        assert_eq!(qbinom(-1, 1), LaurentV::constant(-1));
    }

    #[test]
    fn q_binomial_matches_defining_quotient() {
        for i in -6..=14i64 {
            for n in 0..=10u32 {
                let direct = qfall(i, n).exact_div(&qfact(n)).unwrap();
                assert_eq!(qbinom(i, n), direct, "i={i} n={n}");
            }
        }
    }

    #[test]
    fn q_pascal_recurrence() {
        for i in 1..=12i64 {
            for n in 1..=i as u32 {
                let lhs = qbinom(i, n);
                let rhs =
                    qbinom(i - 1, n).shift(n as i64) + qbinom(i - 1, n - 1).shift(n as i64 - i);
                assert_eq!(lhs, rhs, "i={i} n={n}");
            }
        }
    }

    #[test]
    fn one_sided_analogues() {
        assert_eq!(qint_pos(3), LaurentV::from_q_coeffs([1, 1, 1]));
        assert!(qmultinom(4, &[4]).unwrap().is_one());
        assert_eq!(
            qmultinom(2, &[1, 1]).unwrap(),
            LaurentV::from_q_coeffs([1, 1])
        );
        // [3]!/([1]![2]!) = [3] = 1 + q + q^2
        assert_eq!(qmultinom(3, &[1, 2]).unwrap(), qint_pos(3));
        assert!(matches!(
            qmultinom(3, &[1, 1]),
            Err(Error::BadPartition { .. })
        ));
        assert!(matches!(
            qmultinom(1, &[2, -1]),
            Err(Error::BadPartition { .. })
        ));
        assert!(qmultinom(0, &[]).unwrap().is_one());
    }

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (n, &mu) in (1..=12).zip(expected.iter()) {
            assert_eq!(mobius(n), mu, "n={n}");
        }
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), LaurentV::from_q_coeffs([-1, 1]));
        assert_eq!(cyclotomic(6), LaurentV::from_q_coeffs([1, -1, 1]));
        assert_eq!(cyclotomic(12), LaurentV::from_q_coeffs([1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_sym(2), v(1) + v(-1));
        assert_eq!(cyclotomic_sym(1), qint(1));
    }

    #[test]
    fn divisor_product_reconstructs_q_power_minus_one() {
        for n in 1..=30u32 {
            let prod: LaurentV = divisors(n as u64)
                .into_iter()
                .map(|d| cyclotomic(d as u32))
                .product();
            assert_eq!(prod, LaurentV::q_pow(n as i64) - LaurentV::one(), "n={n}");
        }
    }

    #[test]
    fn balanced_and_plain_cyclotomics_differ_by_unit() {
        for l in 1..=24u32 {
            let phi = euler_phi(l as u64) as i64;
            assert_eq!(cyclotomic(l), cyclotomic_sym(l).shift(phi), "l={l}");
        }
    }

    #[test]
    fn orders() {
        for n in 0..=14u32 {
            for l in 1..=6u32 {
                assert_eq!(
                    d_order(&qfact(n), CycIndex::of(l)),
                    Some(n / l),
                    "n={n} l={l}"
                );
            }
        }
        assert_eq!(d_order(&LaurentV::one(), CycIndex::of(3)), Some(0));
        assert_eq!(d_order(&LaurentV::zero(), CycIndex::of(3)), None);
        assert!(CycIndex::new(0).is_err());
    }

    #[test]
    fn stripping_factors() {
        let f = qint(4);
        let (factors, rest) = strip_cyclotomic(&f, 6);
        assert_eq!(factors, vec![(1, 1), (2, 1), (4, 1)]);
        assert!(rest.is_one());
    }

    #[test]
    fn classical_binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(40, 20), BigInt::from(137846528820u64));
    }
}
