//! Library results against independently coded reference computations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use bingdouble::bing::{alpha, x_coeff};
use bingdouble::habiro::{
    eval_at_root, habiro_factor, lambda_series, mijk_partial, ohtsuki_c, omega, SurgeryTriple,
};
use bingdouble::milnor::hopf_pair_s_s;
use bingdouble::qnum::{cyclotomic, qbinom, qfall, qint, qmultinom};
use bingdouble::LaurentV;

/// Dense coefficients of a polynomial in q, lowest degree first.
type Dense = Vec<i64>;

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn dense_div(num: &Dense, den: &Dense) -> Dense {
    let mut rem = num.clone();
    let lead = *den.last().unwrap();
    let mut quot = vec![0; num.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = rem[k + den.len() - 1] / lead;
        assert_eq!(c * lead, rem[k + den.len() - 1]);
        quot[k] = c;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "inexact division");
    quot
}

/// Ordinary Gaussian binomial by the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
fn gauss(n: usize, k: usize) -> Dense {
    let mut table: Vec<Vec<Dense>> = vec![vec![vec![1]]];
    for i in 1..=n {
        let mut row = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let mut p: Dense = vec![0; j * (i - j) + 1];
            if j >= 1 {
                for (e, c) in table[i - 1][j - 1].iter().enumerate() {
                    p[e] += c;
                }
            }
            if j < i {
                for (e, c) in table[i - 1][j].iter().enumerate() {
                    p[e + j] += c;
                }
            }
            row.push(p);
        }
        table.push(row);
    }
    table[n][k].clone()
}

fn from_dense_q(d: &Dense, shift_v: i64) -> LaurentV {
    LaurentV::from_q_coeffs(d.iter().copied()).shift(shift_v)
}

#[test]
fn balanced_binomial_is_shifted_gaussian() {
    for i in 0..=12usize {
        for n in 0..=i {
            let want = from_dense_q(&gauss(i, n), -((n * (i - n)) as i64));
            assert_eq!(qbinom(i as i64, n as u32), want, "i={i} n={n}");
        }
    }
}

#[test]
fn cyclotomic_by_division() {
    // Φ_m = (q^m - 1) / Π_{d | m, d < m} Φ_d
    let mut phis: Vec<Dense> = vec![vec![]];
    for m in 1..=30usize {
        let mut num: Dense = vec![0; m + 1];
        num[0] = -1;
        num[m] = 1;
        for (d, phi) in phis.iter().enumerate().take(m).skip(1) {
            if m % d == 0 {
                num = dense_div(&num, phi);
            }
        }
        assert_eq!(cyclotomic(m as u32), from_dense_q(&num, 0), "m={m}");
        phis.push(num);
    }
    let product = [1usize, 2, 3, 4, 6, 12]
        .iter()
        .fold(vec![1], |acc, &d| dense_mul(&acc, &phis[d]));
    let mut q12_minus_one = vec![0; 13];
    q12_minus_one[0] = -1;
    q12_minus_one[12] = 1;
    assert_eq!(product, q12_minus_one);
}

/// `α_{m,n}` from Gaussian binomials, without the incremental quotient.
fn alpha_oracle(m: u32, n: u32) -> LaurentV {
    let bin = |i: i64, k: i64| -> LaurentV {
        if k < 0 {
            return LaurentV::zero();
        }
        if i >= 0 && k > i {
            return LaurentV::zero();
        }
        if i < 0 {
            // [i ¦ k] for negative i via {i}_k / {k}!
            let num = qfall(i, k as u32);
            let den: LaurentV = (1..=k).map(qint).product();
            return num.exact_div(&den).unwrap();
        }
        from_dense_q(&gauss(i as usize, k as usize), -(k * (i - k)))
    };
    let (m, n) = (m as i64, n as i64);
    (0..=m)
        .map(|k| {
            let term = &bin(2 * m + 1, k) * &bin(2 * m + n - 2 * k + 1, 2 * n + 1);
            if k % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

#[test]
fn alpha_against_gaussian_oracle() {
    for m in 0..=7 {
        for n in 0..=14 {
            assert_eq!(alpha(m, n), alpha_oracle(m, n), "m={m} n={n}");
        }
    }
}

#[test]
fn alpha_explicit_rows() {
    // α_{1,1} = [4 ¦ 3] - [3 ¦ 1] [2 ¦ 3] = {4}/{1}
    assert_eq!(alpha(1, 1), qint(4).exact_div(&qint(1)).unwrap());
    assert!(alpha(1, 2).is_one());
    assert!(alpha(0, 1).is_zero());
    assert!(alpha(3, 7).is_zero());
}

#[test]
fn hopf_pairing_small_values() {
    assert!(hopf_pair_s_s(0, 0).is_one());
    assert!(hopf_pair_s_s(0, 1).is_zero());
    assert_eq!(hopf_pair_s_s(1, 2), qfall(5, 4));
}

#[test]
fn x_coeff_of_vanishing_alpha() {
    assert!(x_coeff(3, 3, 1).is_zero());
    assert!(x_coeff(1, 2, 1).is_zero());
}

/// Taylor coefficients of `f(q)` at `q = 1` via generalized binomials
/// `Σ_e c_e C(e/2, k)`, valid for even support.
fn taylor_at_one(f: &LaurentV, order: usize) -> Vec<BigRational> {
    (0..=order)
        .map(|k| {
            f.terms()
                .map(|(e, c)| {
                    let e = e / 2;
                    let mut binom = BigRational::one();
                    for t in 0..k as i64 {
                        binom = binom * BigRational::from_integer(BigInt::from(e - t))
                            / BigRational::from_integer(BigInt::from(t + 1));
                    }
                    binom * BigRational::from_integer(c.clone())
                })
                .fold(BigRational::zero(), |a, b| a + b)
        })
        .collect()
}

#[test]
fn lambda_against_taylor_oracle() {
    for t in [
        SurgeryTriple::new(1, 1, 1),
        SurgeryTriple::new(-1, 2, -2),
        SurgeryTriple::new(2, 2, 1),
    ] {
        let k = 3;
        let j = mijk_partial(t, k);
        assert!(j.is_even_support());
        let want = taylor_at_one(&j, k as usize);
        assert_eq!(
            lambda_series(t, k).series.coeffs(),
            want.as_slice(),
            "{t:?}"
        );
    }
}

#[test]
fn c_series_by_recursion() {
    let d = [24i64, 72, 98, 76, 35, 9, 1];
    let mut c: Vec<BigRational> = Vec::new();
    for n in 0..=10usize {
        let mut acc = if n == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        };
        for k in 1..=n.min(6) {
            acc -= BigRational::from_integer(d[k].into()) * &c[n - k];
        }
        c.push(acc / BigRational::from_integer(24.into()));
    }
    assert_eq!(ohtsuki_c(10).coeffs(), c.as_slice());
}

fn complex_eval(terms: impl Iterator<Item = (i64, f64)>, m: u32) -> (f64, f64) {
    let theta = std::f64::consts::TAU / m as f64;
    terms.fold((0.0, 0.0), |(re, im), (k, c)| {
        let a = theta * k as f64;
        (re + c * a.cos(), im + c * a.sin())
    })
}

#[test]
fn root_evaluation_matches_complex_numbers() {
    let f = LaurentV::from_q_coeffs([3, -1, 4, 1, -5, 9, -2, 6]).shift(-6);
    for m in 1..=12 {
        let r = eval_at_root(&f, m).unwrap();
        let direct = complex_eval(f.terms().map(|(e, c)| (e / 2, c.to_f64().unwrap())), m);
        let reduced = complex_eval(
            r.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64, c.to_f64().unwrap())),
            m,
        );
        assert!(
            (direct.0 - reduced.0).abs() < 1e-9 && (direct.1 - reduced.1).abs() < 1e-9,
            "m={m}"
        );
    }
}

#[test]
fn omega_small_weights_by_hand() {
    // ω_{1,n} = q^{n(n+3)/4}: only the single part composition, f = 0.
    for n in 0..=5i64 {
        assert_eq!(
            omega(1, n as u32),
            LaurentV::q_quarter_pow(n * (n + 3)),
            "n={n}"
        );
    }
    // ω_{2,2} = q^{5/2} (q^{0} [2;0,2] + q^{2} [2;1,1] + q^{6} [2;2,0])
    let w = LaurentV::one()
        + &LaurentV::q_pow(2) * &qmultinom(2, &[1, 1]).unwrap()
        + LaurentV::q_pow(6);
    assert_eq!(omega(2, 2), &w * &LaurentV::q_quarter_pow(10));
}

#[test]
fn habiro_factor_small() {
    // {3}_2/{1} = {3}{2}/{1}
    assert_eq!(
        habiro_factor(1),
        (&qint(3) * &qint(2)).exact_div(&qint(1)).unwrap()
    );
}
