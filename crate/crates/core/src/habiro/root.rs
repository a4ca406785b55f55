//! Evaluation at a primitive `m`-th root of unity, as residues modulo `Φ_m`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentV;
use crate::qnum::{cyclotomic, euler_phi};

/// Element of `Z[q]/(Φ_m) ≅ Z[ζ_m]` in the basis `1, q, ..., q^(φ(m)-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootResidue {
    m: u32,
    coeffs: Vec<BigInt>,
}

fn cyclotomic_coeffs(m: u32) -> Vec<BigInt> {
    let phi = cyclotomic(m);
    let deg = (phi.max_exp().unwrap() / 2) as usize;
    (0..=deg).map(|k| phi.coeff(2 * k as i64)).collect()
}

/// Reduces `Σ c_k q^k` (with `q^m = 1` already applied) modulo monic `Φ_m`.
fn reduce(m: u32, mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let modulus = cyclotomic_coeffs(m);
    let deg = modulus.len() - 1;
    for top in (deg..poly.len()).rev() {
        let c = std::mem::take(&mut poly[top]);
        if c.is_zero() {
            continue;
        }
        for (j, mj) in modulus.iter().enumerate().take(deg) {
            poly[top - deg + j] -= &c * mj;
        }
    }
    poly.resize(deg, BigInt::zero());
    poly
}

impl RootResidue {
    pub fn zero(m: u32) -> Self {
        Self {
            m,
            coeffs: vec![BigInt::zero(); euler_phi(m as u64) as usize],
        }
    }

    pub fn one(m: u32) -> Self {
        let mut r = Self::zero(m);
        r.coeffs[0] = BigInt::one();
        r
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Folds exponents modulo `m` (valid since `Φ_m | q^m - 1`) and reduces.
    fn from_q_terms(m: u32, terms: impl Iterator<Item = (i64, BigInt)>) -> Self {
        let mut poly = vec![BigInt::zero(); m as usize];
        for (k, c) in terms {
            poly[k.rem_euclid(m as i64) as usize] += c;
        }
        Self {
            m,
            coeffs: reduce(m, poly),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "residues at different roots of unity");
        Self {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "residues at different roots of unity");
        Self {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "residues at different roots of unity");
        let mut terms = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    terms.push(((i + j) as i64, a * b));
                }
            }
        }
        Self::from_q_terms(self.m, terms.into_iter())
    }

    /// Whether `self ∈ divisor · Z[ζ_m]`.
    ///
    /// Solves `divisor · y = self` over `Q` in the power basis and tests
    /// integrality of `y`; the power basis is an integral basis of `Z[ζ_m]`.
    pub fn is_multiple_of(&self, divisor: &Self) -> bool {
        assert_eq!(self.m, divisor.m, "residues at different roots of unity");
        if divisor.is_zero() {
            return self.is_zero();
        }
        let d = self.coeffs.len();
        // Column c holds divisor · q^c.
        let mut cols = Vec::with_capacity(d);
        let mut basis = Self::one(self.m);
        let q = Self::from_q_terms(self.m, std::iter::once((1, BigInt::one())));
        for _ in 0..d {
            cols.push(divisor.mul(&basis));
            basis = basis.mul(&q);
        }
        let mut rows: Vec<Vec<BigRational>> = (0..d)
            .map(|r| {
                let mut row: Vec<BigRational> = cols
                    .iter()
                    .map(|c| BigRational::from_integer(c.coeffs[r].clone()))
                    .collect();
                row.push(BigRational::from_integer(self.coeffs[r].clone()));
                row
            })
            .collect();
        match solve(&mut rows, d) {
            Some(y) => y.iter().all(|x| x.is_integer()),
            None => false,
        }
    }
}

/// Gauss–Jordan elimination on an augmented `d × (d+1)` system.
fn solve(rows: &mut [Vec<BigRational>], d: usize) -> Option<Vec<BigRational>> {
    for col in 0..d {
        let pivot = (col..d).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for x in rows[col].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let (src, dst) = if r < col {
                    let (a, b) = rows.split_at_mut(col);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[col], &mut b[0])
                };
                for (x, s) in dst.iter_mut().zip(src.iter()) {
                    *x -= &f * s;
                }
            }
        }
    }
    Some(rows.iter().map(|r| r[d].clone()).collect())
}

/// `ev_ζ(f)` for a primitive `m`-th root of unity `ζ`; `m = 1` is `q = 1`.
pub fn eval_at_root(f: &LaurentV, m: u32) -> Result<RootResidue> {
    if m == 0 {
        return Err(Error::OutOfRange(
            "root of unity order must be at least 1".into(),
        ));
    }
    if !f.is_even_support() {
        return Err(Error::OddHalfPower);
    }
    Ok(RootResidue::from_q_terms(
        m,
        f.terms().map(|(e, c)| (e / 2, c.clone())),
    ))
}

/// Integer value at `q = -1` of an element of `Z[q, q^-1]`.
pub fn eval_at_minus_one(f: &LaurentV) -> Result<BigInt> {
    Ok(eval_at_root(f, 2)?.coeffs[0].clone())
}
