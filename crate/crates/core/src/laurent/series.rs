use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Truncated power series `Σ_{i=0}^{N} a_i ħ^i` in `ħ = q - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HbarSeries {
    coeffs: Vec<BigRational>,
}

impl HbarSeries {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        Self { coeffs }
    }

    pub fn from_integers<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// `(1+ħ)^r` by the generalized binomial series.
    pub fn binomial(r: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = BigRational::one();
        for k in 0..=order {
            coeffs.push(c.clone());
            // C(r, k+1) = C(r, k) (r - k) / (k + 1)
            let k = BigRational::from_integer(BigInt::from(k));
            c = c * (r - &k) / (k + BigRational::one());
        }
        Self { coeffs }
    }

    /// Truncation order `N`: terms `ħ^0..=ħ^N` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Option<&BigRational> {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<_> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Index of the first nonzero coefficient, if any within the stored order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplicative inverse up to the stored order.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out[k - i];
            }
            out.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: out })
    }
}

impl Add for &HbarSeries {
    type Output = HbarSeries;
    fn add(self, rhs: &HbarSeries) -> HbarSeries {
        let n = self.order().min(rhs.order());
        HbarSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &HbarSeries {
    type Output = HbarSeries;
    fn sub(self, rhs: &HbarSeries) -> HbarSeries {
        let n = self.order().min(rhs.order());
        HbarSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

/// Product truncated to the smaller of the two orders.
impl Mul for &HbarSeries {
    type Output = HbarSeries;
    fn mul(self, rhs: &HbarSeries) -> HbarSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        HbarSeries { coeffs }
    }
}

impl fmt::Display for HbarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*h")?,
                _ => write!(f, "({c})*h^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(h^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentV;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn substitution_of_q_plus_one() {
        let f = LaurentV::from_q_coeffs([1, 1]);
        assert_eq!(f.hbar_expand(2), HbarSeries::from_integers([2, 1, 0]));
        assert_eq!(LaurentV::one().hbar_expand(5), HbarSeries::one(5));
    }

    #[test]
    fn half_power_expansion() {
        // (1+h)^(1/2) - (1+h)^(-1/2) = h - h^2/2 + O(h^3)
        let f = LaurentV::v_pow(1) - LaurentV::v_pow(-1);
        let s = f.hbar_expand(2);
        assert_eq!(s.coeffs(), &[rat(0, 1), rat(1, 1), rat(-1, 2)]);
    }

    #[test]
    fn geometric_inverse() {
        let s = HbarSeries::from_integers([1, 1, 0, 0, 0]);
        let t = s.invert().unwrap();
        assert_eq!(t, HbarSeries::from_integers([1, -1, 1, -1, 1]));
        let c = HbarSeries::from_integers([2]).invert().unwrap();
        assert_eq!(c.coeffs(), &[rat(1, 2)]);
        assert_eq!(
            HbarSeries::from_integers([0, 1]).invert(),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn truncate_pads_and_cuts() {
        let s = HbarSeries::from_integers([1, 2, 3]);
        assert_eq!(s.truncate(1), HbarSeries::from_integers([1, 2]));
        assert_eq!(s.truncate(4), HbarSeries::from_integers([1, 2, 3, 0, 0]));
        assert_eq!(HbarSeries::from_integers([0, 0, 5]).valuation(), Some(2));
    }
}
