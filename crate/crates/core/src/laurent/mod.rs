//! Laurent polynomials in `v = q^(1/2)` over arbitrary-precision integers.
//!
//! Every value the library produces lives in `Z[v, v^-1]`. Exponents are
//! always counted in units of `v`, so `q^k` is stored as `v^(2k)`.

mod json;
mod series;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use series::HbarSeries;

use crate::error::{Error, Result};

/// A finite sum `Σ c_e v^e` with nonzero integer coefficients.
///
/// Terms are kept sorted by ascending exponent with zero coefficients
/// stripped, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentV {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentV {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c.into())
    }

    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(e, c)],
            }
        }
    }

    /// `v^e`.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(e, 1)
    }

    /// `q^k = v^(2k)`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(2 * k, 1)
    }

    /// `q^(num/4)`, which must be an integral power of `v`.
    ///
    /// Panics when `num` is odd: quarter powers of `q` that are not half
    /// powers never arise in the surgery weights.
    pub fn q_quarter_pow(num: i64) -> Self {
        assert!(
            num % 2 == 0,
            "q^({num}/4) is not an integral power of v = q^(1/2)"
        );
        Self::v_pow(num / 2)
    }

    /// Builds a polynomial from `(v-exponent, coefficient)` pairs in any
    /// order; repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut raw: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        raw.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    /// Polynomial in `q` from coefficients of `q^0, q^1, ...`.
    pub fn from_q_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (2 * k as i64, c)),
        )
    }

    fn from_dense(lo: i64, dense: Vec<BigInt>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        Self { terms }
    }

    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return (0, Vec::new()),
        };
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + ExactSizeIterator {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms
            .binary_search_by_key(&e, |(k, _)| *k)
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// True when every exponent is even, i.e. the value lies in `Z[q, q^-1]`.
    pub fn is_even_support(&self) -> bool {
        self.terms.iter().all(|(e, _)| e % 2 == 0)
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The ring involution `v ↦ v^-1`.
    pub fn substitute_v_inverse(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| (-e, c.clone()))
                .collect(),
        }
    }

    /// Value at `v = 1`: the sum of all coefficients.
    pub fn eval_at_v1(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Exact quotient `self / divisor` in `Z[v, v^-1]`.
    ///
    /// The divisor is shifted to an ordinary polynomial and long division is
    /// run from the top degree; any nonzero remainder or non-integral
    /// leading quotient is reported as [`Error::NotDivisible`].
    pub fn exact_div(&self, divisor: &LaurentV) -> Result<LaurentV> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.len());
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return Err(Error::NotDivisible);
                }
                terms.push((e - de, q));
            }
            return Ok(Self { terms });
        }

        let (a_lo, mut rem) = self.to_dense();
        let (b_lo, b) = divisor.to_dense();
        if rem.len() < b.len() {
            return Err(Error::NotDivisible);
        }
        let b_top = b.len() - 1;
        let lead = &b[b_top];
        let q_len = rem.len() - b_top;
        let mut quot = vec![BigInt::zero(); q_len];
        for i in (0..q_len).rev() {
            let top = &rem[i + b_top];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    rem[i + j] -= &qc * bj;
                }
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::from_dense(a_lo - b_lo, quot))
    }

    /// True when `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &LaurentV) -> bool {
        self.exact_div(divisor).is_ok()
    }

    /// Substitutes `q = 1 + ħ` and expands to order `order` in `ħ`.
    ///
    /// A term `v^e` becomes `(1+ħ)^(e/2)`, expanded with exact rational
    /// generalized binomial coefficients.
    pub fn hbar_expand(&self, order: usize) -> HbarSeries {
        let mut acc = HbarSeries::zero(order);
        for (e, c) in &self.terms {
            let exponent = BigRational::new(BigInt::from(*e), BigInt::from(2));
            let term =
                HbarSeries::binomial(&exponent, order).scale(&BigRational::from_integer(c.clone()));
            acc = &acc + &term;
        }
        acc
    }

    /// Renders the polynomial in `q`; fails on odd `v`-exponents.
    pub fn to_q_string(&self) -> Result<String> {
        if !self.is_even_support() {
            return Err(Error::OddHalfPower);
        }
        Ok(render(&self.terms, "q", 2))
    }

    /// Renders in `q` when the support allows it, otherwise in `v`.
    pub fn to_pretty(&self, prefer_q: bool) -> String {
        if prefer_q && self.is_even_support() {
            render(&self.terms, "q", 2)
        } else {
            render(&self.terms, "v", 1)
        }
    }
}

fn render(terms: &[(i64, BigInt)], var: &str, unit: i64) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().rev().enumerate() {
        let e = e / unit;
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

impl fmt::Display for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.terms, "v", 1))
    }
}

impl fmt::Debug for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentV({self})")
    }
}

impl From<i64> for LaurentV {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentV {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

fn merge(a: &[(i64, BigInt)], b: &[(i64, BigInt)], negate_b: bool) -> Vec<(i64, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some((ea, _)), Some((eb, _))) => ea.cmp(eb),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                let (e, c) = &b[j];
                out.push((*e, if negate_b { -c } else { c.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl Add for &LaurentV {
    type Output = LaurentV;
    fn add(self, rhs: &LaurentV) -> LaurentV {
        LaurentV {
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &LaurentV {
    type Output = LaurentV;
    fn sub(self, rhs: &LaurentV) -> LaurentV {
        LaurentV {
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Neg for &LaurentV {
    type Output = LaurentV;
    fn neg(self) -> LaurentV {
        LaurentV {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentV {
    type Output = LaurentV;
    fn neg(mut self) -> LaurentV {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentV {
    type Output = LaurentV;
    fn mul(self, rhs: &LaurentV) -> LaurentV {
        if self.is_zero() || rhs.is_zero() {
            return LaurentV::zero();
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        // Iterate over the shorter operand in the outer loop.
        let (small, large) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentV::from_dense(lo, dense)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentV {
            type Output = LaurentV;
            fn $method(self, rhs: LaurentV) -> LaurentV {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentV> for LaurentV {
            type Output = LaurentV;
            fn $method(self, rhs: &LaurentV) -> LaurentV {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentV> for &LaurentV {
            type Output = LaurentV;
            fn $method(self, rhs: LaurentV) -> LaurentV {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&LaurentV> for LaurentV {
    fn add_assign(&mut self, rhs: &LaurentV) {
        self.terms = merge(&self.terms, &rhs.terms, false);
    }
}

impl SubAssign<&LaurentV> for LaurentV {
    fn sub_assign(&mut self, rhs: &LaurentV) {
        self.terms = merge(&self.terms, &rhs.terms, true);
    }
}

impl std::iter::Sum for LaurentV {
    fn sum<I: Iterator<Item = LaurentV>>(iter: I) -> Self {
        iter.fold(LaurentV::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl std::iter::Product for LaurentV {
    fn product<I: Iterator<Item = LaurentV>>(iter: I) -> Self {
        iter.fold(LaurentV::one(), |acc, x| &acc * &x)
    }
}
