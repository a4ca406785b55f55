//! Surgery-level computations: s-sums for ±1 surgery on Bing doubles,
//! Habiro's weights `ω_{p,n}`, truncations of the unified WRT invariant of
//! `M_{i,j,k}` (surgery on the Borromean rings with framings `-1/i, -1/j,
//! -1/k`), the Casson congruence, the c-series and evaluation at roots of
//! unity.
//!
//! Everything lives in finite truncations. Whenever a tail is discarded the
//! discarded terms are checked individually up to a stated bound.

mod root;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

pub use root::{eval_at_minus_one, eval_at_root, RootResidue};

use crate::bing::x_coeff;
use crate::error::{Error, Result};
use crate::laurent::{HbarSeries, LaurentV};
use crate::qnum::{cyclotomic, cyclotomic_sym, qfall, qint, qmultinom};
use crate::report::CheckReport;

/// Framing sign `ε ∈ {+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FramingSign {
    Plus,
    Minus,
}

impl FramingSign {
    pub const ALL: [FramingSign; 2] = [FramingSign::Plus, FramingSign::Minus];

    pub fn value(self) -> i64 {
        match self {
            FramingSign::Plus => 1,
            FramingSign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(FramingSign::Plus),
            -1 => Some(FramingSign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for FramingSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FramingSign::Plus => "+1",
            FramingSign::Minus => "-1",
        })
    }
}

/// The reciprocal framings `(i, j, k)` of `M_{i,j,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SurgeryTriple {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl SurgeryTriple {
    pub fn new(i: i64, j: i64, k: i64) -> Self {
        Self { i, j, k }
    }

    pub fn product(&self) -> i64 {
        self.i * self.j * self.k
    }
}

/// `s_l^(ε,ε') = Σ_{i=⌈l/2⌉}^{2l} (εε')^i q^{-(ε+ε') i(i+3)/4} x(i, i, l)`.
pub fn s_sum(l: u32, eps: FramingSign, eps2: FramingSign) -> LaurentV {
    let sign = eps.value() * eps2.value();
    let weight = eps.value() + eps2.value();
    (l.div_ceil(2)..=2 * l)
        .map(|i| {
            let ii = i as i64;
            let term = &x_coeff(i, i, l) * &LaurentV::q_quarter_pow(-weight * ii * (ii + 3));
            if sign < 0 && i % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// Weak compositions of `n` into `parts` nonnegative parts, in lexicographic order.
fn compositions(n: u32, parts: u32) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if parts == 1 {
        return vec![vec![n as i64]];
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut rest in compositions(n - first, parts - 1) {
            rest.insert(0, first as i64);
            out.push(rest);
        }
    }
    out
}

/// `Σ_{i ∈ S(n,p)} [n; i]_q q^{f(i)}` with `f(i) = Σ_{j<p} (s_j^2 + s_j)` over
/// partial sums `s_j`.
fn omega_core(p: u32, n: u32) -> LaurentV {
    compositions(n, p)
        .into_iter()
        .map(|parts| {
            let mut partial = 0i64;
            let mut f = 0i64;
            for &part in &parts[..parts.len().saturating_sub(1)] {
                partial += part;
                f += partial * partial + partial;
            }
            &qmultinom(n, &parts).expect("compositions are valid partitions") * &LaurentV::q_pow(f)
        })
        .sum()
}

/// Habiro's weight `ω_{p,n}` for `-1/p` surgery.
///
/// For `p ≥ 0` this is `q^{n(n+3)/4} Σ [n; i]_q q^{f(i)}`; the `p < 0` branch
/// is `(-1)^n` times the image of the `|p|` value under `v ↦ v^-1`.
pub fn omega(p: i64, n: u32) -> LaurentV {
    let nn = n as i64;
    let positive =
        &omega_core(p.unsigned_abs() as u32, n) * &LaurentV::q_quarter_pow(nn * (nn + 3));
    if p >= 0 {
        positive
    } else {
        let mirrored = positive.substitute_v_inverse();
        if n % 2 == 1 {
            -mirrored
        } else {
            mirrored
        }
    }
}

/// `{2l+1}_{l+1} / {1}`.
pub fn habiro_factor(l: u32) -> LaurentV {
    qfall(2 * l as i64 + 1, l + 1)
        .exact_div(&qint(1))
        .expect("{2l+1}_{l+1} is divisible by {1}")
}

/// The `l`-th summand `ω_{i,l} ω_{j,l} ω_{k,l} (-1)^l {2l+1}_{l+1}/{1}` of `J_{M_{i,j,k}}`.
pub fn mijk_summand(t: SurgeryTriple, l: u32) -> LaurentV {
    let w = &(&omega(t.i, l) * &omega(t.j, l)) * &omega(t.k, l);
    if w.is_zero() {
        return w;
    }
    let val = &w * &habiro_factor(l);
    if l % 2 == 1 {
        -val
    } else {
        val
    }
}

/// `Σ_{l=0}^{L} ω_{i,l} ω_{j,l} ω_{k,l} (-1)^l {2l+1}_{l+1}/{1}`.
pub fn mijk_partial(t: SurgeryTriple, level: u32) -> LaurentV {
    (0..=level).map(|l| mijk_summand(t, l)).sum()
}

/// Outcome of [`casson_congruence_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CassonReport {
    pub triple: SurgeryTriple,
    pub tail: u32,
    /// `((J - 1)/Φ_2)|_{q=-1}` from the `l ≤ 2` truncation.
    #[serde(serialize_with = "residue_as_string")]
    pub residue: Option<BigInt>,
    pub expected: i64,
    /// `J_{≤2} - 1 - 6ijk Φ_2` is divisible by `(v + v^-1)^2`.
    pub head_divisible: bool,
    /// First `l` in `3..=tail` whose summand is not divisible by `(v + v^-1)^2`.
    pub failing_tail_term: Option<u32>,
}

fn residue_as_string<S: serde::Serializer>(
    r: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl CassonReport {
    pub fn pass(&self) -> bool {
        self.head_divisible
            && self.failing_tail_term.is_none()
            && self.residue == Some(BigInt::from(self.expected))
    }
}

/// Checks `J_{M_{i,j,k}} - 1 ≡ 6ijk Φ_2 (mod Φ_2^2)` on the `l ≤ 2` truncation
/// and verifies that each discarded summand `3 ≤ l ≤ tail` lies in `Φ_2^2`.
pub fn casson_congruence_check(t: SurgeryTriple, tail: u32) -> Result<CassonReport> {
    if tail < 3 {
        return Err(Error::OutOfRange(format!(
            "tail bound must be at least 3, got {tail}"
        )));
    }
    let phi2 = cyclotomic(2);
    let phi2_sq = cyclotomic_sym(2).pow(2);
    let expected = 6 * t.product();

    let diff = &mijk_partial(t, 2) - &LaurentV::one();
    let head = &diff - &phi2.scale(&BigInt::from(expected));
    let head_divisible = head.is_divisible_by(&phi2_sq);

    // Two exact divisions by Φ_2: the quotient's value at q = -1 is the
    // residue, and subtracting it must leave another multiple of Φ_2.
    let residue = diff.exact_div(&phi2).ok().and_then(|quot| {
        let r = eval_at_minus_one(&quot).ok()?;
        (&quot - &LaurentV::constant(r.clone()))
            .is_divisible_by(&phi2)
            .then_some(r)
    });

    let failing_tail_term = (3..=tail).find(|&l| !mijk_summand(t, l).is_divisible_by(&phi2_sq));

    Ok(CassonReport {
        triple: t,
        tail,
        residue,
        expected,
        head_divisible,
        failing_tail_term,
    })
}

/// `24 + 72ħ + 98ħ^2 + 76ħ^3 + 35ħ^4 + 9ħ^5 + ħ^6`, the expansion of
/// `(q+1)^2 (q^2+q+1) (q^2+1)` at `q = 1 + ħ`.
pub fn ohtsuki_denominator() -> HbarSeries {
    HbarSeries::from_integers([24, 72, 98, 76, 35, 9, 1])
}

/// The product `(q+1)^2 (q^2+q+1) (q^2+1) = Φ_2^2 Φ_3 Φ_4` as a polynomial.
pub fn ohtsuki_denominator_poly() -> LaurentV {
    cyclotomic(2).pow(2) * cyclotomic(3) * cyclotomic(4)
}

/// `Σ c_i ħ^i = 1 / ((q+1)^2 (q^2+q+1) (q^2+1))` to order `N`.
pub fn ohtsuki_c(order: usize) -> HbarSeries {
    ohtsuki_denominator()
        .truncate(order)
        .invert()
        .expect("constant term 24 is invertible")
}

/// Truncated Ohtsuki series of `M_{i,j,k}` with its truncation audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSeries {
    pub series: HbarSeries,
    /// The first discarded summand `l = K + 1` vanishes to order `ħ^{K+1}`.
    pub boundary_ok: bool,
}

/// `ı(J_{M_{i,j,k}}) = 1 + Σ λ_i ħ^i` to order `K`, from summands `l ≤ K`.
pub fn lambda_series(t: SurgeryTriple, order: u32) -> LambdaSeries {
    let k = order as usize;
    let series = mijk_partial(t, order).hbar_expand(k);
    let boundary = mijk_summand(t, order + 1).hbar_expand(k);
    LambdaSeries {
        series,
        boundary_ok: boundary.valuation().is_none(),
    }
}

/// `τ_ζ(M_{i,j,k})` at a primitive `m`-th root of unity.
///
/// Summands with `l ≥ m - 1` contain `{m}` (up to a unit) and vanish at `ζ`;
/// the first of them is evaluated as a check and must be zero.
pub fn wrt_at_root(t: SurgeryTriple, m: u32) -> Result<RootResidue> {
    if m == 0 {
        return Err(Error::OutOfRange(
            "root of unity order must be at least 1".into(),
        ));
    }
    let cutoff = m.saturating_sub(1);
    if !eval_at_root(&mijk_summand(t, cutoff), m)?.is_zero() && cutoff > 0 {
        return Err(Error::OutOfRange(format!(
            "summand l={cutoff} does not vanish at a primitive {m}-th root"
        )));
    }
    eval_at_root(&mijk_partial(t, cutoff.saturating_sub(1)), m)
}

fn balanced_product(factors: &[(u32, u32)]) -> LaurentV {
    factors
        .iter()
        .map(|&(l, e)| cyclotomic_sym(l).pow(e))
        .product()
}

fn divisibility_report(
    name: &str,
    params: serde_json::Value,
    f: &LaurentV,
    factors: &[(u32, u32)],
) -> CheckReport {
    let divisor = balanced_product(factors);
    match f.exact_div(&divisor) {
        Ok(cofactor) => CheckReport::new(name, params, true, json!({ "cofactor": cofactor })),
        Err(_) => CheckReport::new(name, params, false, json!({ "value": f })),
    }
}

/// The sign pairs `(ε, ε')` in the order `(-,-), (+,+), (-,+), (+,-)`.
pub fn sign_pairs() -> [(FramingSign, FramingSign); 4] {
    use FramingSign::{Minus, Plus};
    [(Minus, Minus), (Plus, Plus), (Minus, Plus), (Plus, Minus)]
}

/// Divisibility facts that together give `J_{M'} - J_M ∈ Φ_1^2 Φ_2^2 Φ_3 Φ_4 Φ_6`
/// for a special Bing double surgery.
///
/// * `s_1^(ε,ε') ∈ Φ̃_1 Φ̃_2 Φ̃_4 Φ̃_6` and `s_2^(ε,ε') ∈ Φ̃_2 Φ̃_6` for all four sign pairs;
/// * `{3}_2/{1} ∈ Φ̃_1 Φ̃_2 Φ̃_3` and `{5}_3/{1} ∈ Φ̃_1^2 Φ̃_2 Φ̃_3 Φ̃_4 Φ̃_5`;
/// * `{2l+1}_{l+1}/{1} ∈ Φ̃_1^2 Φ̃_2^2 Φ̃_3 Φ̃_4 Φ̃_6` for `3 ≤ l ≤ tail`;
/// * the mixed-sign s-sums agree.
pub fn bing_divisibility_check(tail: u32) -> Result<Vec<CheckReport>> {
    if tail < 3 {
        return Err(Error::OutOfRange(format!(
            "tail bound must be at least 3, got {tail}"
        )));
    }
    let mut out = Vec::new();
    for (e1, e2) in sign_pairs() {
        let params = |l: u32| json!({ "l": l, "eps": e1.value(), "eps2": e2.value() });
        out.push(divisibility_report(
            "s_sum_1_divisible_by_phi1_phi2_phi4_phi6",
            params(1),
            &s_sum(1, e1, e2),
            &[(1, 1), (2, 1), (4, 1), (6, 1)],
        ));
        out.push(divisibility_report(
            "s_sum_2_divisible_by_phi2_phi6",
            params(2),
            &s_sum(2, e1, e2),
            &[(2, 1), (6, 1)],
        ));
    }
    out.push(divisibility_report(
        "habiro_factor_1_divisible",
        json!({ "l": 1 }),
        &habiro_factor(1),
        &[(1, 1), (2, 1), (3, 1)],
    ));
    out.push(divisibility_report(
        "habiro_factor_2_divisible",
        json!({ "l": 2 }),
        &habiro_factor(2),
        &[(1, 2), (2, 1), (3, 1), (4, 1), (5, 1)],
    ));
    for l in 3..=tail {
        out.push(divisibility_report(
            "habiro_factor_tail_divisible",
            json!({ "l": l }),
            &habiro_factor(l),
            &[(1, 2), (2, 2), (3, 1), (4, 1), (6, 1)],
        ));
    }
    for l in 1..=2 {
        let a = s_sum(l, FramingSign::Minus, FramingSign::Plus);
        let b = s_sum(l, FramingSign::Plus, FramingSign::Minus);
        out.push(CheckReport::new(
            "s_sum_mixed_signs_agree",
            json!({ "l": l }),
            a == b,
            json!(null),
        ));
    }
    Ok(out)
}

/// At each primitive `m`-th root for `1 ≤ m ≤ max_order`, checks that the
/// lowest contributions `s_l^(ε,ε') · {2l+1}_{l+1}/{1}` (`l = 1, 2`) to
/// `J_{M'} - J_M` lie in `(ζ^4 - 1)(ζ^6 - 1) Z[ζ]`.
pub fn wrt_divisibility_check(max_order: u32) -> Result<Vec<CheckReport>> {
    let ideal = &(LaurentV::q_pow(4) - LaurentV::one()) * &(LaurentV::q_pow(6) - LaurentV::one());
    let mut out = Vec::new();
    for m in 1..=max_order {
        let gen = eval_at_root(&ideal, m)?;
        for (e1, e2) in sign_pairs() {
            for l in 1..=2 {
                let contribution = &s_sum(l, e1, e2) * &habiro_factor(l);
                let value = eval_at_root(&contribution, m)?;
                out.push(CheckReport::new(
                    "wrt_lowest_terms_in_ideal",
                    json!({ "m": m, "l": l, "eps": e1.value(), "eps2": e2.value() }),
                    value.is_multiple_of(&gen),
                    json!(value
                        .coeffs()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()),
                ));
            }
        }
    }
    Ok(out)
}

/// Valuation helper for reports: index of the first nonzero `ħ` coefficient.
pub fn hbar_order(f: &LaurentV, order: usize) -> Option<usize> {
    f.hbar_expand(order).valuation()
}
