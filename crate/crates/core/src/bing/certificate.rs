//! Rational check of the telescoping certificate behind
//! `α_{m,2m-j}|_{v=1} = 4^j C(m, j)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::qnum::binomial;

/// Outcome of [`certificate_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub m: u32,
    pub j: u32,
    /// The difference identity holds at every `0 ≤ k ≤ ⌊j/2⌋`.
    pub difference_identity: bool,
    /// `G(m,j,0) = G(m,j,⌊j/2⌋+1) = 0`.
    pub boundary: bool,
    /// `j α̃_{m,j} = 4(m-j+1) α̃_{m,j-1}` for the summed values.
    pub recurrence: bool,
    /// First `k` at which the difference identity fails.
    pub failing_k: Option<u32>,
}

impl CertificateReport {
    pub fn pass(&self) -> bool {
        self.difference_identity && self.boundary && self.recurrence
    }
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// `F̃(m,j,k) = (-1)^k C(2m+1, k) C(4m-j-2k+1, 4m-2j+1)`, the `k`-th summand
/// of `α_{m,2m-j}` at `v = 1`.
fn summand(m: i64, j: i64, k: i64) -> BigRational {
    let val = binomial(2 * m + 1, k) * binomial(4 * m - j - 2 * k + 1, 4 * m - 2 * j + 1);
    rat(if k % 2 == 0 { val } else { -val })
}

/// The certificate `G(m,j,k)`, supported on `1 ≤ k ≤ ⌊j/2⌋`.
fn certificate(m: i64, j: i64, k: i64) -> BigRational {
    if k < 1 || k > j / 2 {
        return BigRational::zero();
    }
    let num = BigInt::from(-2 * k * (2 * k - 4 * m + j - 3) * (2 * k - 4 * m + j - 2));
    let den = BigInt::from((4 * m - 2 * j + 2) * (4 * m - 2 * j + 3));
    BigRational::new(num, den) * summand(m, j, k)
}

/// Verifies the telescoping certificate for one `(m, j)` with `1 ≤ j ≤ m`.
pub fn certificate_check(m: u32, j: u32) -> Result<CertificateReport> {
    if j < 1 || j > m {
        return Err(Error::OutOfRange(format!(
            "certificate_check needs 1 ≤ j ≤ m, got m={m} j={j}"
        )));
    }
    let (mi, ji) = (m as i64, j as i64);
    let top = ji / 2;
    let step = rat(BigInt::from(4 * (mi - ji + 1)));
    let jr = rat(BigInt::from(ji));

    let mut failing_k = None;
    for k in 0..=top {
        let lhs = &jr * summand(mi, ji, k) - &step * summand(mi, ji - 1, k);
        let rhs = certificate(mi, ji, k + 1) - certificate(mi, ji, k);
        if lhs != rhs {
            failing_k = Some(k as u32);
            break;
        }
    }
    let boundary = certificate(mi, ji, 0).is_zero() && certificate(mi, ji, top + 1).is_zero();

    let tilde = |jj: i64| -> BigRational { (0..=jj / 2).map(|k| summand(mi, jj, k)).sum() };
    let recurrence = &jr * tilde(ji) == &step * tilde(ji - 1);

    Ok(CertificateReport {
        m,
        j,
        difference_identity: failing_k.is_none(),
        boundary,
        recurrence,
        failing_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances_pass() {
        assert!(certificate_check(3, 2).unwrap().pass());
        assert!(certificate_check(1, 1).unwrap().pass());
        assert!(certificate_check(7, 7).unwrap().pass());
    }

    #[test]
    fn precondition() {
        assert!(matches!(certificate_check(3, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(certificate_check(2, 3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn summands_reproduce_value_at_one() {
        // α̃_{3,2} = 4^2 C(3,2) = 48
        let total: BigRational = (0..=1).map(|k| summand(3, 2, k)).sum();
        assert_eq!(total, rat(BigInt::from(48)));
    }
}
