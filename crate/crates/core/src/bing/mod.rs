//! Bing-double coefficients of the reduced colored Jones polynomial.
//!
//! Doubling the first component of a link `L` gives a link whose reduced
//! colored Jones polynomial is `Σ_l x(i, j, l) J_{L; P'_l, ...}` with
//!
//! ```text
//! x(i, j, l) = δ_{i,j} (-1)^i {l}! α_{i,l}
//! α_{m,n}   = Σ_{k=0}^{m} (-1)^k [2m+1 ¦ k] [2m+n-2k+1 ¦ 2n+1]
//! ```
//!
//! The rest of this module studies `α`: its value at `v = 1`, the
//! telescoping certificate behind that value, and the cyclotomic orders
//! `d_l(α_{m,n})`.

mod certificate;
mod conjecture;
mod table;

use num_bigint::BigInt;

pub use certificate::{certificate_check, CertificateReport};
pub use conjecture::{
    conjecture_scan, ConjectureReport, LevelScan, PeriodicityViolation, ValueViolation,
};
pub use table::{d_table, DlTable};

use crate::error::{Error, Result};
use crate::laurent::LaurentV;
use crate::qnum::{qbinom, qfact, times_qfall};

fn alpha_term(m: u32, n: u32, k: u32) -> LaurentV {
    let (m, n, k) = (m as i64, n as i64, k as i64);
    let right = qbinom(2 * m + n - 2 * k + 1, (2 * n + 1) as u32);
    if right.is_zero() {
        return right;
    }
    let term = &qbinom(2 * m + 1, k as u32) * &right;
    if k % 2 == 0 {
        term
    } else {
        -term
    }
}

/// `α_{m,n}` summed over the full range `k = 0..=m`.
pub fn alpha(m: u32, n: u32) -> LaurentV {
    (0..=m).map(|k| alpha_term(m, n, k)).sum()
}

/// `α_{m,n}` with the sum cut at `k ≤ ⌊m - n/2⌋`, past which the second
/// binomial vanishes. Empty (zero) when `2m < n`.
pub fn alpha_truncated(m: u32, n: u32) -> LaurentV {
    let twice_bound = 2 * m as i64 - n as i64;
    if twice_bound < 0 {
        return LaurentV::zero();
    }
    (0..=(twice_bound / 2) as u32)
        .map(|k| alpha_term(m, n, k))
        .sum()
}

/// True on the support window `n/2 ≤ m ≤ 2n` outside which `α_{m,n} = 0`.
pub fn in_support(m: u32, n: u32) -> bool {
    n <= 2 * m && m <= 2 * n
}

/// Bing-double coefficient `x(i, j, l) = δ_{i,j} (-1)^i {l}! α_{i,l}`.
pub fn x_coeff(i: u32, j: u32, l: u32) -> LaurentV {
    if i != j {
        return LaurentV::zero();
    }
    let val = times_qfall(&alpha(i, l), l as i64, l);
    if i.is_multiple_of(2) {
        val
    } else {
        -val
    }
}

/// The same coefficient through the dual expression
/// `δ_{i,j} (-1)^i {2i+1}! {l}! α_{l,i} / {2l+1}!`.
pub fn x_coeff_dual(i: u32, j: u32, l: u32) -> Result<LaurentV> {
    if i != j {
        return Ok(LaurentV::zero());
    }
    let num = times_qfall(&alpha(l, i), 2 * i as i64 + 1, 2 * i + 1);
    let num = times_qfall(&num, l as i64, l);
    let val = num.exact_div(&qfact(2 * l + 1))?;
    Ok(if i.is_multiple_of(2) { val } else { -val })
}

/// `α_{m,2m-j}` evaluated at `q^(1/2) = 1`; equals `4^j C(m, j)`.
pub fn alpha_tilde(m: u32, j: u32) -> Result<BigInt> {
    if j > m {
        return Err(Error::OutOfRange(format!(
            "alpha_tilde needs j ≤ m, got m={m} j={j}"
        )));
    }
    Ok(alpha(m, 2 * m - j).eval_at_v1())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{binomial, cyclotomic_sym, d_order, qint, CycIndex};

    fn phi(l: u32) -> LaurentV {
        cyclotomic_sym(l)
    }

    #[test]
    fn particular_values() {
        for m in 0..=8 {
            assert!(alpha(m, 2 * m).is_one(), "m={m}");
        }
        for m in 1..=8 {
            let expected = qint(4 * m as i64).exact_div(&qint(1)).unwrap();
            assert_eq!(alpha(m, 2 * m - 1), expected, "m={m}");
        }
        assert_eq!(alpha(2, 3), qint(8).exact_div(&qint(1)).unwrap());
        assert!(alpha(1, 0).is_zero());
        assert!(alpha(0, 0).is_one());
    }

    #[test]
    fn truncated_sum_agrees() {
        for m in 0..=10 {
            for n in 0..=12 {
                assert_eq!(alpha(m, n), alpha_truncated(m, n), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn proof_constants() {
        assert_eq!(x_coeff(1, 1, 1), -qint(4));
        assert!(x_coeff(1, 2, 5).is_zero());
        assert_eq!(x_coeff(2, 2, 4), qfact(4));
        assert_eq!(x_coeff(1, 1, 2), -qfact(2));
        assert_eq!(x_coeff(1, 1, 1), -(phi(4) * phi(2) * phi(1)));
    }

    #[test]
    fn dual_expression() {
        assert_eq!(x_coeff_dual(1, 1, 1).unwrap(), -qint(4));
        assert!(x_coeff_dual(0, 0, 0).unwrap().is_one());
        assert!(x_coeff_dual(2, 1, 3).unwrap().is_zero());
        for i in 0..=6 {
            for l in 0..=6 {
                assert_eq!(
                    x_coeff(i, i, l),
                    x_coeff_dual(i, i, l).unwrap(),
                    "i={i} l={l}"
                );
            }
        }
    }

    #[test]
    fn value_at_one() {
        assert_eq!(alpha_tilde(4, 0).unwrap(), BigInt::from(1));
        assert_eq!(alpha_tilde(3, 1).unwrap(), BigInt::from(12));
        assert_eq!(alpha_tilde(5, 2).unwrap(), BigInt::from(160));
        assert!(alpha_tilde(2, 3).is_err());
        for m in 0..=6u32 {
            for j in 0..=m {
                let expected = BigInt::from(4).pow(j) * binomial(m as i64, j as i64);
                assert_eq!(alpha_tilde(m, j).unwrap(), expected);
            }
        }
    }

    #[test]
    fn order_shift_by_factorial() {
        for l in 1..=4u32 {
            for m in 0..=6 {
                for n in 0..=6 {
                    let a = alpha(m, n);
                    if a.is_zero() {
                        continue;
                    }
                    let lhs = d_order(&x_coeff(m, m, n), CycIndex::of(l)).unwrap();
                    let rhs = n / l + d_order(&a, CycIndex::of(l)).unwrap();
                    assert_eq!(lhs, rhs, "l={l} m={m} n={n}");
                }
            }
        }
    }
}
