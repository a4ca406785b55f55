//! Reduced colored Jones values of the Borromean rings and of Milnor's links
//! `A_n`, plus the `S_l` / `P'_l` basis machinery and Hopf-link pairings.
//!
//! Elements of the representation ring are never materialised; they appear
//! only as coefficient vectors over the `P'_l` basis and through pairings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bing::{alpha, x_coeff};
use crate::error::{Error, Result};
use crate::laurent::LaurentV;
use crate::qnum::{cyclotomic_sym, qbinom, qfact, qfall, qint, strip_cyclotomic, times_qfall};

/// Finite linear combination `Σ c_l P'_l` with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PPrimeVector {
    coeffs: BTreeMap<u32, LaurentV>,
}

impl PPrimeVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c P'_l`, dropping the entry if it cancels.
    pub fn add_term(&mut self, l: u32, c: LaurentV) {
        let entry = self.coeffs.entry(l).or_insert_with(LaurentV::zero);
        *entry += &c;
        if entry.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn coeff(&self, l: u32) -> LaurentV {
        self.coeffs.get(&l).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &LaurentV)> {
        self.coeffs.iter().map(|(l, c)| (*l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// `J_{B; P'_i, P'_j, P'_k}`: `(-1)^i {2i+1}_{i+1} / {1}` when `i = j = k`, else 0.
pub fn borromean_reduced(i: u32, j: u32, k: u32) -> LaurentV {
    if i != j || j != k {
        return LaurentV::zero();
    }
    let val = qfall(2 * i as i64 + 1, i + 1)
        .exact_div(&qint(1))
        .expect("{2i+1}_{i+1} is divisible by {1}");
    if i.is_multiple_of(2) {
        val
    } else {
        -val
    }
}

/// `J_{A_n; P'_{l_1}, ..., P'_{l_n}}` for Milnor's link with `n ≥ 3` components.
pub fn milnor_reduced(colors: &[u32]) -> Result<LaurentV> {
    let n = colors.len();
    if n < 3 {
        return Err(Error::BadArity(n));
    }
    if colors[0] != colors[1] || colors[n - 2] != colors[n - 1] {
        return Ok(LaurentV::zero());
    }
    let mut acc = borromean_reduced(colors[n - 2], colors[n - 2], colors[n - 2]);
    for w in colors[1..n - 1].windows(2) {
        if acc.is_zero() {
            break;
        }
        acc = &acc * &x_coeff(w[0], w[0], w[1]);
    }
    Ok(acc)
}

/// Closed form `(-1)^n Φ̃_1^(n-2) Φ̃_2^(n-2) Φ̃_3 Φ̃_4^(n-3)` of the all-ones value.
pub fn milnor_all_ones(n: usize) -> Result<LaurentV> {
    if n < 3 {
        return Err(Error::BadArity(n));
    }
    let k = n as u32;
    let val = cyclotomic_sym(1).pow(k - 2)
        * cyclotomic_sym(2).pow(k - 2)
        * cyclotomic_sym(3)
        * cyclotomic_sym(4).pow(k - 3);
    Ok(if n.is_multiple_of(2) { val } else { -val })
}

/// Colors `(c_0, c_0, c_1, ..., c_{n-3}, c_{n-3})` of an `n`-component chain.
pub fn chain_colors(chain: &[u32]) -> Vec<u32> {
    let mut colors = Vec::with_capacity(chain.len() + 2);
    colors.push(chain[0]);
    colors.extend_from_slice(chain);
    colors.push(*chain.last().unwrap());
    colors
}

/// Doubling chain `a_i = 2 a_{i-1}` of length `n - 2`, with its closed-form value
/// `Π_{m=1}^{n-3} (-1)^{a_{m-1}} {2a_{m-1}}! · (-1)^{a_{n-3}} {2a_{n-3}+1}_{a_{n-3}+1} / {1}`.
pub fn doubling_chain(a0: u32, n: usize) -> Result<(Vec<u32>, LaurentV)> {
    if n < 3 {
        return Err(Error::BadArity(n));
    }
    let chain: Vec<u32> = (0..n - 2).map(|i| a0 << i).collect();
    let mut val = borromean_reduced(chain[n - 3], chain[n - 3], chain[n - 3]);
    for &a in &chain[..n - 3] {
        val = times_qfall(&val, 2 * a as i64, 2 * a);
        if a % 2 == 1 {
            val = -val;
        }
    }
    Ok((chain_colors(&chain), val))
}

/// Chain `b_i = 2 b_{i-1} - 1` (so `b_i = 2^i (b_0 - 1) + 1`) with closed-form value
/// `Π_{m=1}^{n-3} (-1)^{b_{m-1}} {2b_{m-1}-1}! {4b_{m-1}}/{1} · (-1)^{b_{n-3}} {2b_{n-3}+1}_{b_{n-3}+1} / {1}`.
pub fn odd_doubling_chain(b0: u32, n: usize) -> Result<(Vec<u32>, LaurentV)> {
    if n < 3 {
        return Err(Error::BadArity(n));
    }
    if b0 == 0 && n > 3 {
        return Err(Error::OutOfRange(
            "b_0 must be at least 1 for the 2b-1 chain".into(),
        ));
    }
    let mut chain = vec![b0];
    for _ in 1..n - 2 {
        let prev = *chain.last().unwrap();
        chain.push(2 * prev - 1);
    }
    let mut val = borromean_reduced(chain[n - 3], chain[n - 3], chain[n - 3]);
    for &b in &chain[..n - 3] {
        let quarter = qint(4 * b as i64).exact_div(&qint(1))?;
        val = &times_qfall(&val, 2 * b as i64 - 1, 2 * b - 1) * &quarter;
        if b % 2 == 1 {
            val = -val;
        }
    }
    Ok((chain_colors(&chain), val))
}

/// `S_l = Σ_m α_{l,m} {m}! P'_m`.
pub fn s_in_pprime(l: u32) -> PPrimeVector {
    let mut out = PPrimeVector::new();
    // α_{l,m} vanishes unless m/2 ≤ l ≤ 2m.
    for m in l.div_ceil(2)..=2 * l {
        let a = alpha(l, m);
        if !a.is_zero() {
            out.add_term(m, times_qfall(&a, m as i64, m));
        }
    }
    out
}

/// `J_{H; V_m, S_n} = {m+n+1}_{2n+1} / {1}`.
pub fn hopf_pair_v_s(m: u32, n: u32) -> LaurentV {
    qfall((m + n + 1) as i64, 2 * n + 1)
        .exact_div(&qint(1))
        .expect("{m+n+1}_{2n+1} is divisible by {1}")
}

/// `J_{H; P'_m, S_n} = δ_{m,n} {2m+1}_{2m} / {m}!`.
pub fn hopf_pair_p_s(m: u32, n: u32) -> LaurentV {
    if m != n {
        return LaurentV::zero();
    }
    qfall(2 * m as i64 + 1, 2 * m)
        .exact_div(&qfact(m))
        .expect("{2m+1}_{2m} is divisible by {m}!")
}

/// `J_{H; S_m, S_n}` through `S_m = Σ_k (-1)^k [2m+1 ¦ k] V_{2m-2k}`.
pub fn hopf_pair_s_s(m: u32, n: u32) -> LaurentV {
    (0..=m)
        .map(|k| {
            let term = &qbinom(2 * m as i64 + 1, k) * &hopf_pair_v_s(2 * (m - k), n);
            if k % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Pairs `Σ c_m P'_m` against `S_n` with the Hopf link.
pub fn pair_with_s(x: &PPrimeVector, n: u32) -> LaurentV {
    x.iter().map(|(m, c)| c * &hopf_pair_p_s(m, n)).sum()
}

/// Value split as `Π Φ̃_l^e` (for `l` up to a bound) times a cofactor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factored {
    pub factors: Vec<(u32, u32)>,
    pub cofactor: LaurentV,
}

pub fn factor_cyclotomic(f: &LaurentV, bound: u32) -> Factored {
    let (factors, cofactor) = strip_cyclotomic(f, bound);
    Factored { factors, cofactor }
}

impl Factored {
    pub fn expand(&self) -> LaurentV {
        self.factors
            .iter()
            .fold(self.cofactor.clone(), |acc, &(l, e)| {
                &acc * &cyclotomic_sym(l).pow(e)
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(l: u32) -> LaurentV {
        cyclotomic_sym(l)
    }

    #[test]
    fn borromean_values() {
        let expected = -(phi(3) * phi(2) * phi(1));
        assert_eq!(borromean_reduced(1, 1, 1), expected);
        assert_eq!(
            borromean_reduced(1, 1, 1),
            -(qfall(3, 2).exact_div(&qint(1)).unwrap())
        );
        assert!(borromean_reduced(1, 2, 1).is_zero());
        assert!(borromean_reduced(0, 0, 0).is_one());
    }

    #[test]
    fn milnor_values() {
        let four = phi(1).pow(2) * phi(2).pow(2) * phi(3) * phi(4);
        assert_eq!(milnor_reduced(&[1, 1, 1, 1]).unwrap(), four);
        assert!(milnor_reduced(&[0, 0, 0]).unwrap().is_one());
        assert!(milnor_reduced(&[1, 2, 2, 1]).unwrap().is_zero());
        assert_eq!(
            milnor_reduced(&[2, 2, 4, 4]).unwrap(),
            x_coeff(2, 2, 4) * borromean_reduced(4, 4, 4)
        );
        assert_eq!(milnor_reduced(&[1, 1]), Err(Error::BadArity(2)));
        assert_eq!(
            milnor_reduced(&[2, 2, 2]).unwrap(),
            borromean_reduced(2, 2, 2)
        );
        assert!(milnor_reduced(&[2, 2, 1]).unwrap().is_zero());
    }

    #[test]
    fn all_ones_closed_form() {
        assert_eq!(milnor_all_ones(3).unwrap(), -(phi(1) * phi(2) * phi(3)));
        assert_eq!(
            milnor_all_ones(6).unwrap(),
            phi(1).pow(4) * phi(2).pow(4) * phi(3) * phi(4).pow(3)
        );
        for n in 3..=8 {
            assert_eq!(
                milnor_all_ones(n).unwrap(),
                milnor_reduced(&vec![1; n]).unwrap(),
                "n={n}"
            );
        }
        assert_eq!(milnor_all_ones(2), Err(Error::BadArity(2)));
    }

    #[test]
    fn chains_match_direct_evaluation() {
        for a0 in 0..=2 {
            for n in 3..=5 {
                let (colors, closed) = doubling_chain(a0, n).unwrap();
                assert_eq!(colors.len(), n);
                assert_eq!(milnor_reduced(&colors).unwrap(), closed, "a0={a0} n={n}");
            }
        }
        for b0 in 1..=3 {
            for n in 3..=5 {
                let (colors, closed) = odd_doubling_chain(b0, n).unwrap();
                assert_eq!(milnor_reduced(&colors).unwrap(), closed, "b0={b0} n={n}");
            }
        }
        assert_eq!(odd_doubling_chain(3, 5).unwrap().0, vec![3, 3, 5, 9, 9]);
    }

    #[test]
    fn s_expansion() {
        let s0 = s_in_pprime(0);
        assert_eq!(s0.support().collect::<Vec<_>>(), vec![0]);
        assert!(s0.coeff(0).is_one());
        assert_eq!(s_in_pprime(1).coeff(2), qfact(2));
        assert!(s_in_pprime(2).support().all(|m| (1..=4).contains(&m)));
    }

    #[test]
    fn hopf_pairings() {
        assert!(hopf_pair_v_s(0, 1).is_zero());
        assert!(hopf_pair_v_s(0, 0).is_one());
        assert_eq!(
            hopf_pair_v_s(2, 1),
            (qint(4) * qint(3) * qint(2)).exact_div(&qint(1)).unwrap()
        );
        assert!(hopf_pair_s_s(0, 0).is_one());
        assert!(hopf_pair_s_s(0, 1).is_zero());
        assert_eq!(hopf_pair_s_s(1, 2), qfall(5, 4));
    }

    #[test]
    fn pairing_routes_agree() {
        for m in 0..=5 {
            for n in 0..=5 {
                let direct = hopf_pair_s_s(m, n);
                assert_eq!(
                    direct,
                    &alpha(m, n) * &qfall(2 * n as i64 + 1, 2 * n),
                    "m={m} n={n}"
                );
                assert_eq!(direct, pair_with_s(&s_in_pprime(m), n), "m={m} n={n}");
                assert_eq!(direct, hopf_pair_s_s(n, m));
            }
        }
    }

    #[test]
    fn factored_form_round_trips() {
        let f = milnor_reduced(&[1, 1, 1, 1, 1]).unwrap();
        let fac = factor_cyclotomic(&f, 6);
        assert_eq!(fac.factors, vec![(1, 3), (2, 3), (3, 1), (4, 2)]);
        assert_eq!(fac.cofactor, LaurentV::constant(-1));
        assert_eq!(fac.expand(), f);
    }
}
