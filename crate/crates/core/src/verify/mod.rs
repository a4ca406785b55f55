//! The verification suite behind `bingdouble verify`.
//!
//! Each acceptance criterion and each structural invariant becomes a
//! [`Section`] of [`CheckReport`]s. Sections run in parallel and are collected
//! in a fixed order, so the report is identical across worker counts.

mod tables;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub use tables::{PrintedTable, PRINTED_TABLES};

use crate::bing::{alpha, certificate_check, conjecture_scan, d_table, in_support, x_coeff};
use crate::habiro::{
    bing_divisibility_check, casson_congruence_check, eval_at_root, habiro_factor, lambda_series,
    mijk_summand, ohtsuki_c, ohtsuki_denominator, ohtsuki_denominator_poly, omega, s_sum,
    wrt_divisibility_check, FramingSign, SurgeryTriple,
};
use crate::laurent::{HbarSeries, LaurentV};
use crate::milnor::{
    doubling_chain, hopf_pair_s_s, milnor_all_ones, milnor_reduced, pair_with_s, s_in_pprime,
};
use crate::qnum::{
    binomial, cyclotomic, cyclotomic_sym, d_order, qbinom, qfall, qint, times_qfall, CycIndex,
};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown level '{other}' (expected fast or full)")),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Fast => "fast",
            Level::Full => "full",
        })
    }
}

/// Grid bounds per level. `Full` matches the acceptance ranges exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub divisibility_tail: u32,
    pub symmetry_max: u32,
    pub value_at_one_max: u32,
    pub certificate_max: u32,
    pub all_ones_max: usize,
    pub chain_a0_max: u32,
    pub chain_n_max: usize,
    pub hopf_max: u32,
    pub casson_range: i64,
    pub casson_tail: u32,
    pub c_order: usize,
    pub scan_levels: u32,
    pub scan_m_max: u32,
    pub pascal_max: i64,
    pub milnor_colors_max: u32,
    pub milnor_arity_max: usize,
    pub root_order_max: u32,
    pub lambda_level_max: u32,
}

impl Bounds {
    pub fn for_level(level: Level) -> Self {
        match level {
            Level::Full => Bounds {
                divisibility_tail: 12,
                symmetry_max: 15,
                value_at_one_max: 12,
                certificate_max: 10,
                all_ones_max: 10,
                chain_a0_max: 2,
                chain_n_max: 6,
                hopf_max: 10,
                casson_range: 2,
                casson_tail: 8,
                c_order: 10,
                scan_levels: 5,
                scan_m_max: 12,
                pascal_max: 12,
                milnor_colors_max: 4,
                milnor_arity_max: 5,
                root_order_max: 12,
                lambda_level_max: 8,
            },
            Level::Fast => Bounds {
                divisibility_tail: 8,
                symmetry_max: 8,
                value_at_one_max: 8,
                certificate_max: 6,
                all_ones_max: 7,
                chain_a0_max: 2,
                chain_n_max: 5,
                hopf_max: 6,
                casson_range: 1,
                casson_tail: 5,
                c_order: 10,
                scan_levels: 5,
                scan_m_max: 8,
                pascal_max: 8,
                milnor_colors_max: 3,
                milnor_arity_max: 4,
                root_order_max: 8,
                lambda_level_max: 5,
            },
        }
    }
}

/// A named group of checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub id: String,
    pub title: String,
    pub checks: Vec<CheckReport>,
}

impl Section {
    fn new(id: &str, title: &str, checks: Vec<CheckReport>) -> Self {
        Self {
            id: id.into(),
            title: title.into(),
            checks,
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn line(&self) -> String {
        let failed = self.failures().count();
        format!(
            "[{}] {} {} ({} checks, {} failed)",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.checks.len(),
            failed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub level: Level,
    pub bounds: Bounds,
    pub sections: Vec<Section>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.sections.iter().all(Section::pass)
    }

    pub fn check_count(&self) -> usize {
        self.sections.iter().map(|s| s.checks.len()).sum()
    }

    /// Only the failing checks, grouped by section.
    pub fn failure_report(&self) -> serde_json::Value {
        json!({
            "level": self.level,
            "pass": self.pass(),
            "failures": self
                .sections
                .iter()
                .filter(|s| !s.pass())
                .map(|s| json!({ "section": s.id, "checks": s.failures().collect::<Vec<_>>() }))
                .collect::<Vec<_>>(),
        })
    }
}

type SectionFn = fn(&Bounds) -> Section;

/// The ten acceptance criteria, in order.
pub const ACCEPTANCE: [(&str, SectionFn); 10] = [
    ("A1", table_reproduction),
    ("A2", explicit_constants),
    ("A3", surgery_divisibility),
    ("A4", symmetry_and_support),
    ("A5", value_at_one),
    ("A6", milnor_closed_forms),
    ("A7", hopf_pairing),
    ("A8", casson_congruence),
    ("A9", c_series),
    ("A10", conjecture_scans),
];

const INVARIANTS: [SectionFn; 7] = [
    inv_q_pascal,
    inv_hopf_symmetry_and_dual_basis,
    inv_milnor_habiro_divisibility,
    inv_omega_mirror,
    inv_lambda_order,
    inv_roots_of_unity,
    inv_s_sum_orders,
];

/// Runs one acceptance criterion by id (`"A1"` ..= `"A10"`).
pub fn acceptance(id: &str, level: Level) -> Option<Section> {
    let bounds = Bounds::for_level(level);
    ACCEPTANCE
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, f)| f(&bounds))
}

/// Runs all acceptance criteria followed by the invariant suite.
pub fn run(level: Level) -> SuiteReport {
    let bounds = Bounds::for_level(level);
    let jobs: Vec<SectionFn> = ACCEPTANCE
        .iter()
        .map(|(_, f)| *f)
        .chain(INVARIANTS.iter().copied())
        .collect();
    let sections = jobs.par_iter().map(|f| f(&bounds)).collect();
    SuiteReport {
        level,
        bounds,
        sections,
    }
}

fn equality(name: &str, params: serde_json::Value, got: &LaurentV, want: &LaurentV) -> CheckReport {
    let witness = if got == want {
        json!(null)
    } else {
        json!({ "got": got, "want": want })
    };
    CheckReport::new(name, params, got == want, witness)
}

fn phi(l: u32) -> LaurentV {
    cyclotomic(l)
}

fn phi_t(l: u32) -> LaurentV {
    cyclotomic_sym(l)
}

fn q(k: i64) -> LaurentV {
    LaurentV::q_pow(k)
}

/// `Σ c_k q^k` from `(k, c_k)` pairs.
fn q_poly(terms: &[(i64, i64)]) -> LaurentV {
    terms
        .iter()
        .map(|&(k, c)| q(k).scale(&BigInt::from(c)))
        .sum()
}

/// Dense `q`-polynomial `Σ_{k} coeffs[k] q^k`.
fn q_dense(coeffs: &[i64]) -> LaurentV {
    LaurentV::from_q_coeffs(coeffs.iter().copied())
}

fn table_reproduction(_: &Bounds) -> Section {
    let checks = PRINTED_TABLES
        .par_iter()
        .map(|printed| {
            let computed = d_table(CycIndex::of(printed.l), printed.m_max, printed.n_max);
            let mismatches: Vec<_> = printed
                .rows
                .iter()
                .enumerate()
                .flat_map(|(m, row)| {
                    row.iter().enumerate().filter_map({
                        let computed = &computed;
                        move |(n, &want)| {
                            let got = computed.get(m as u32, n as u32);
                            (got != want).then(|| json!({ "m": m, "n": n, "printed": want, "computed": got }))
                        }
                    })
                })
                .collect();
            let cells = (printed.m_max + 1) * (printed.n_max + 1);
            CheckReport::new(
                "d_table_matches_printed",
                json!({ "l": printed.l, "m_max": printed.m_max, "n_max": printed.n_max, "cells": cells }),
                mismatches.is_empty(),
                json!(mismatches),
            )
        })
        .collect();
    Section::new("A1", "printed d_l tables for l = 1..5", checks)
}

fn x_constants() -> Vec<((u32, u32), LaurentV)> {
    vec![
        ((1, 1), -(phi_t(1) * phi_t(2) * phi_t(4))),
        ((2, 1), phi_t(1).pow(3) * phi_t(2) * phi_t(4) * phi_t(5)),
        ((1, 2), -(phi_t(1).pow(2) * phi_t(2))),
        (
            (2, 2),
            phi_t(1).pow(2) * phi_t(2) * q_dense(&[1, 1, 2, 1, 2, 2, 2, 1, 2, 1, 1]).shift(-10),
        ),
        (
            (2, 3),
            phi_t(1).pow(3) * phi_t(2).pow(2) * phi_t(3) * phi_t(4) * phi_t(8),
        ),
        (
            (2, 4),
            phi_t(1).pow(4) * phi_t(2).pow(2) * phi_t(3) * phi_t(4),
        ),
    ]
}

/// The six s-sum factorizations. The `(-1,-1)` entries are the `v ↦ v^-1`
/// mirrors of the `(1,1)` ones, times `(-1)^l`.
pub fn s_sum_constants() -> Vec<(u32, FramingSign, FramingSign, LaurentV)> {
    use FramingSign::{Minus, Plus};
    let b1 = phi(1) * phi(2) * phi(4) * phi(6);
    let b2 = phi(1).pow(2) * phi(2) * phi(3) * phi(6);
    let mut pp2 = vec![(0, 1), (2, -1), (7, -1), (8, -1)];
    pp2.extend((15..=21).map(|k| (k, 1)));
    let mp2 = q_dense(&[
        1, 1, 0, -1, -1, 1, 2, 1, -1, -2, 1, 4, 4, 0, -3, 0, 4, 4, 1, -2, -1, 1, 2, 1, -1, -1, 0,
        1, 1,
    ]);
    vec![
        (
            1,
            Minus,
            Minus,
            &b1 * &(q(1) * q_poly(&[(0, -1), (1, -1), (3, 1)])),
        ),
        (
            2,
            Minus,
            Minus,
            &b2 * &(LaurentV::v_pow(5)
                * (q_dense(&[1; 7]) + q_poly(&[(13, -1), (14, -1), (19, -1), (21, 1)]))),
        ),
        (
            1,
            Plus,
            Plus,
            -(&b1 * &(q(-10) * q_poly(&[(0, -1), (2, 1), (3, 1)]))),
        ),
        (2, Plus, Plus, &b2 * &(LaurentV::v_pow(-61) * q_poly(&pp2))),
        (1, Minus, Plus, &b1 * &(phi(12) * q(-5))),
        (
            2,
            Minus,
            Plus,
            phi(1).pow(2) * phi(2) * phi(6) * LaurentV::v_pow(-33) * mp2,
        ),
    ]
}

fn explicit_constants(_: &Bounds) -> Section {
    let mut checks: Vec<CheckReport> = x_constants()
        .into_iter()
        .map(|((i, l), want)| {
            equality(
                "x_coeff_factorization",
                json!({ "i": i, "j": i, "l": l }),
                &x_coeff(i, i, l),
                &want,
            )
        })
        .collect();
    checks.extend(s_sum_constants().into_iter().map(|(l, e1, e2, want)| {
        equality(
            "s_sum_factorization",
            json!({ "l": l, "eps": e1.value(), "eps2": e2.value() }),
            &s_sum(l, e1, e2),
            &want,
        )
    }));
    for l in 1..=2 {
        let pp = s_sum(l, FramingSign::Plus, FramingSign::Plus).substitute_v_inverse();
        let want = if l % 2 == 1 { -pp } else { pp };
        checks.push(equality(
            "s_sum_sign_mirror",
            json!({ "l": l }),
            &s_sum(l, FramingSign::Minus, FramingSign::Minus),
            &want,
        ));
    }
    Section::new(
        "A2",
        "explicit x-coefficient and s-sum factorizations",
        checks,
    )
}

fn surgery_divisibility(b: &Bounds) -> Section {
    let checks = bing_divisibility_check(b.divisibility_tail).expect("tail bound is at least 3");
    Section::new(
        "A3",
        "s-sum and tail divisibility for special Bing double surgery",
        checks,
    )
}

fn symmetry_and_support(b: &Bounds) -> Section {
    let n_max = b.symmetry_max;
    let alphas: Vec<Vec<LaurentV>> = (0..=n_max)
        .into_par_iter()
        .map(|m| (0..=n_max).map(|n| alpha(m, n)).collect())
        .collect();
    let pairs: Vec<(u32, u32)> = (0..=n_max)
        .flat_map(|m| (m..=n_max).map(move |n| (m, n)))
        .collect();
    let mut checks: Vec<CheckReport> = pairs
        .par_iter()
        .map(|&(m, n)| {
            let lhs = times_qfall(&alphas[m as usize][n as usize], 2 * n as i64 + 1, 2 * n + 1);
            let rhs = times_qfall(&alphas[n as usize][m as usize], 2 * m as i64 + 1, 2 * m + 1);
            CheckReport::new(
                "alpha_symmetry",
                json!({ "m": m, "n": n }),
                lhs == rhs,
                json!(null),
            )
        })
        .collect();
    checks.extend((0..=n_max).flat_map(|m| {
        let alphas = &alphas;
        (0..=n_max).map(move |n| {
            let nonzero = !alphas[m as usize][n as usize].is_zero();
            CheckReport::new(
                "alpha_support",
                json!({ "m": m, "n": n }),
                nonzero == in_support(m, n),
                json!({ "nonzero": nonzero }),
            )
        })
    }));
    Section::new(
        "A4",
        "symmetry of α under {2n+1}! and its support window",
        checks,
    )
}

fn value_at_one(b: &Bounds) -> Section {
    let mut checks = Vec::new();
    for m in 0..=b.value_at_one_max {
        for j in 0..=m {
            let got = alpha(m, 2 * m - j).eval_at_v1();
            let want = BigInt::from(4u32).pow(j) * binomial(m as i64, j as i64);
            checks.push(CheckReport::new(
                "alpha_value_at_one",
                json!({ "m": m, "j": j }),
                got == want,
                json!({ "value": got.to_string() }),
            ));
        }
    }
    let pairs: Vec<(u32, u32)> = (1..=b.certificate_max)
        .flat_map(|m| (1..=m).map(move |j| (m, j)))
        .collect();
    checks.par_extend(pairs.par_iter().map(|&(m, j)| {
        let report = certificate_check(m, j).expect("1 ≤ j ≤ m");
        CheckReport::new(
            "creative_telescoping_certificate",
            json!({ "m": m, "j": j }),
            report.pass(),
            json!({ "failing_k": report.failing_k }),
        )
    }));
    Section::new(
        "A5",
        "values of α at q = 1 and the telescoping certificate",
        checks,
    )
}

fn milnor_closed_forms(b: &Bounds) -> Section {
    let mut checks: Vec<CheckReport> = (3..=b.all_ones_max)
        .into_par_iter()
        .map(|n| {
            let e = n as u32;
            let closed = phi_t(1).pow(e - 2) * phi_t(2).pow(e - 2) * phi_t(3) * phi_t(4).pow(e - 3);
            let closed = if n % 2 == 1 { -closed } else { closed };
            let direct = milnor_reduced(&vec![1; n]).expect("n ≥ 3");
            let mut r = equality("milnor_all_ones", json!({ "n": n }), &direct, &closed);
            r.pass &= milnor_all_ones(n).expect("n ≥ 3") == closed;
            r
        })
        .collect();
    for a0 in 0..=b.chain_a0_max {
        for n in 3..=b.chain_n_max {
            let (colors, closed) = doubling_chain(a0, n).expect("n ≥ 3");
            let direct = milnor_reduced(&colors).expect("n ≥ 3");
            checks.push(equality(
                "milnor_doubling_chain",
                json!({ "a0": a0, "n": n, "colors": colors }),
                &direct,
                &closed,
            ));
        }
    }
    Section::new("A6", "Milnor link closed forms", checks)
}

fn hopf_pairing(b: &Bounds) -> Section {
    let pairs: Vec<(u32, u32)> = (0..=b.hopf_max)
        .flat_map(|m| (0..=b.hopf_max).map(move |n| (m, n)))
        .collect();
    let checks = pairs
        .par_iter()
        .map(|&(m, n)| {
            let want = times_qfall(&alpha(m, n), 2 * n as i64 + 1, 2 * n);
            equality(
                "hopf_pair_s_s",
                json!({ "m": m, "n": n }),
                &hopf_pair_s_s(m, n),
                &want,
            )
        })
        .collect();
    Section::new("A7", "Hopf pairing of S_m and S_n against α", checks)
}

fn casson_congruence(b: &Bounds) -> Section {
    let r = b.casson_range;
    let triples: Vec<SurgeryTriple> = (-r..=r)
        .flat_map(|i| {
            (-r..=r).flat_map(move |j| (-r..=r).map(move |k| SurgeryTriple::new(i, j, k)))
        })
        .collect();
    let checks = triples
        .par_iter()
        .map(|&t| {
            let report = casson_congruence_check(t, b.casson_tail).expect("tail ≥ 3");
            CheckReport::new(
                "casson_congruence",
                json!({ "i": t.i, "j": t.j, "k": t.k, "tail": b.casson_tail }),
                report.pass(),
                serde_json::to_value(&report).expect("report serializes"),
            )
        })
        .collect();
    Section::new("A8", "J_M - 1 ≡ 6ijk Φ_2 mod Φ_2^2 for M_{i,j,k}", checks)
}

fn c_series(b: &Bounds) -> Section {
    let c = ohtsuki_c(b.c_order);
    let rat = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let head = [rat(1, 24), rat(-1, 8), rat(59, 288), rat(-17, 72)];
    let strs = |s: &[BigRational]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let product = &c * &ohtsuki_denominator().truncate(b.c_order);
    let expanded = ohtsuki_denominator_poly().hbar_expand(6);
    let checks = vec![
        CheckReport::new(
            "c_series_leading_terms",
            json!({ "order": b.c_order }),
            c.coeffs()[..4] == head,
            json!(strs(c.coeffs())),
        ),
        CheckReport::new(
            "c_series_times_denominator_is_one",
            json!({ "order": b.c_order }),
            product == HbarSeries::one(b.c_order),
            json!(strs(product.coeffs())),
        ),
        CheckReport::new(
            "denominator_is_hbar_expansion",
            json!({ "polynomial": "(q+1)^2 (q^2+q+1) (q^2+1)" }),
            expanded == ohtsuki_denominator(),
            json!(strs(expanded.coeffs())),
        ),
    ];
    Section::new("A9", "c-series", checks)
}

fn conjecture_scans(b: &Bounds) -> Section {
    let report = conjecture_scan(1..=b.scan_levels, b.scan_m_max);
    let checks = report
        .levels
        .iter()
        .map(|scan| {
            let printed = &PRINTED_TABLES[scan.l as usize - 1];
            let disagreements: Vec<_> = scan
                .cells
                .iter()
                .filter(|&&(m, n, _)| m <= printed.m_max && n <= printed.n_max)
                .filter(|&&(m, n, v)| printed.rows[m as usize][n as usize] != v)
                .collect();
            CheckReport::new(
                "conjecture_scan_consistent_with_tables",
                json!({ "l": scan.l, "m_max": scan.m_max, "cells": scan.cells_checked }),
                disagreements.is_empty(),
                json!({
                    "disagreements": disagreements,
                    "periodicity_violations": scan.periodicity_violations,
                    "binary_applicable": scan.binary_applicable,
                    "binary_violations": scan.binary_violations,
                }),
            )
        })
        .collect();
    Section::new("A10", "periodicity and {0,1} scans on m ≤ n ≤ 2m", checks)
}

fn inv_q_pascal(b: &Bounds) -> Section {
    let mut checks = Vec::new();
    for i in 1..=b.pascal_max {
        for n in 1..=i as u32 {
            let lhs = qbinom(i, n);
            let rhs = &LaurentV::v_pow(n as i64) * &qbinom(i - 1, n)
                + &LaurentV::v_pow(n as i64 - i) * &qbinom(i - 1, n - 1);
            checks.push(equality(
                "qbinom_pascal",
                json!({ "i": i, "n": n }),
                &lhs,
                &rhs,
            ));
        }
    }
    let divisor_product = (1..=12u32).all(|m| {
        let prod: LaurentV = crate::qnum::divisors(m as u64)
            .into_iter()
            .map(|d| phi_t(d as u32))
            .product();
        prod == qint(m as i64)
    });
    checks.push(CheckReport::new(
        "qint_is_product_of_phi_tilde",
        json!({ "m_max": 12 }),
        divisor_product,
        json!(null),
    ));
    Section::new("I1", "q-number identities", checks)
}

fn inv_hopf_symmetry_and_dual_basis(b: &Bounds) -> Section {
    let top = b.hopf_max.min(8);
    let pairs: Vec<(u32, u32)> = (0..=top)
        .flat_map(|m| (0..=top).map(move |n| (m, n)))
        .collect();
    let checks = pairs
        .par_iter()
        .flat_map_iter(|&(m, n)| {
            let direct = hopf_pair_s_s(m, n);
            [
                equality(
                    "hopf_pair_symmetry",
                    json!({ "m": m, "n": n }),
                    &direct,
                    &hopf_pair_s_s(n, m),
                ),
                equality(
                    "hopf_pair_dual_basis",
                    json!({ "m": m, "n": n }),
                    &pair_with_s(&s_in_pprime(m), n),
                    &direct,
                ),
            ]
        })
        .collect();
    Section::new("I2", "Hopf pairing symmetry and the P'-basis route", checks)
}

fn color_vectors(arity: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn inv_milnor_habiro_divisibility(b: &Bounds) -> Section {
    let vectors: Vec<Vec<u32>> = (3..=b.milnor_arity_max)
        .flat_map(|n| color_vectors(n, b.milnor_colors_max))
        .collect();
    let failing: Vec<_> = vectors
        .par_iter()
        .filter_map(|colors| {
            let value = milnor_reduced(colors).expect("arity ≥ 3");
            let l_max = *colors.iter().max().expect("nonempty");
            (l_max >= 1 && !value.is_divisible_by(&habiro_factor(l_max))).then(|| colors.clone())
        })
        .collect();
    let checks = vec![CheckReport::new(
        "milnor_value_divisible_by_habiro_factor",
        json!({ "arity_max": b.milnor_arity_max, "colors_max": b.milnor_colors_max, "vectors": vectors.len() }),
        failing.is_empty(),
        json!(failing),
    )];
    Section::new("I3", "Milnor values lie in {2l+1}_{l+1}/{1}", checks)
}

fn inv_omega_mirror(_: &Bounds) -> Section {
    let mut checks = Vec::new();
    for p in 0..=4i64 {
        for n in 0..=4u32 {
            let mirrored = omega(p, n).substitute_v_inverse();
            let want = if n % 2 == 1 { -mirrored } else { mirrored };
            checks.push(equality(
                "omega_mirror",
                json!({ "p": p, "n": n }),
                &omega(-p, n),
                &want,
            ));
        }
    }
    for p in 1..=4i64 {
        let closed: LaurentV = (1..=p).map(|t| q(2 * p + 1 - 2 * t)).sum();
        checks.push(equality(
            "omega_first_weight",
            json!({ "p": p }),
            &omega(p, 1),
            &closed,
        ));
    }
    Section::new("I4", "ω weights", checks)
}

fn inv_lambda_order(b: &Bounds) -> Section {
    let triples = [
        SurgeryTriple::new(1, 1, 1),
        SurgeryTriple::new(-2, 1, 2),
        SurgeryTriple::new(2, -1, -1),
        SurgeryTriple::new(-1, -2, 2),
    ];
    let mut checks = Vec::new();
    for t in triples {
        for l in 1..=b.lambda_level_max {
            let valuation = mijk_summand(t, l).hbar_expand(l as usize).valuation();
            checks.push(CheckReport::new(
                "summand_hbar_order",
                json!({ "i": t.i, "j": t.j, "k": t.k, "l": l }),
                valuation.is_none_or(|v| v >= l as usize),
                json!({ "valuation": valuation }),
            ));
        }
        let series = lambda_series(t, 3);
        checks.push(CheckReport::new(
            "lambda_series_normalized",
            json!({ "i": t.i, "j": t.j, "k": t.k, "order": 3 }),
            series.boundary_ok && series.series.coeff(0).is_some_and(One::is_one),
            json!(series
                .series
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()),
        ));
    }
    Section::new("I5", "ħ-order of J_M summands", checks)
}

fn inv_roots_of_unity(b: &Bounds) -> Section {
    let samples = [
        q_dense(&[1, -2, 0, 3]).shift(-4),
        q_dense(&[0, 5, 1, -1, 0, 0, 2]),
        qfall(5, 4)
            .exact_div(&qint(1))
            .unwrap_or_else(|_| qfall(5, 4)),
        phi(1) * phi(2) * phi(3),
    ];
    let mut checks = Vec::new();
    for m in 1..=b.root_order_max {
        let ring_map = samples.iter().all(|f| {
            samples.iter().all(|g| {
                if !f.is_even_support() || !g.is_even_support() {
                    return true;
                }
                let lhs = eval_at_root(&(f * g), m).expect("even support");
                let rhs = eval_at_root(f, m)
                    .expect("even support")
                    .mul(&eval_at_root(g, m).expect("even support"));
                lhs == rhs
            })
        });
        let kills_phi = eval_at_root(&phi(m), m).expect("even support").is_zero();
        checks.push(CheckReport::new(
            "eval_at_root_ring_map",
            json!({ "m": m }),
            ring_map && kills_phi,
            json!(null),
        ));
    }
    checks.extend(wrt_divisibility_check(b.root_order_max).expect("order ≥ 1"));
    Section::new("I6", "evaluation at roots of unity", checks)
}

fn inv_s_sum_orders(_: &Bounds) -> Section {
    let targets: [&[(u32, u32)]; 2] = [&[(1, 1), (2, 1), (4, 1), (6, 1)], &[(2, 1), (6, 1)]];
    let mut checks = Vec::new();
    for (e1, e2) in crate::habiro::sign_pairs() {
        for (l, target) in (1..=2u32).zip(targets) {
            let s = s_sum(l, e1, e2);
            for &(m, e) in target {
                let order = d_order(&s, CycIndex::of(m));
                checks.push(CheckReport::new(
                    "s_sum_d_order_bound",
                    json!({ "l": l, "eps": e1.value(), "eps2": e2.value(), "phi": m, "required": e }),
                    order.is_none_or(|o| o >= e),
                    json!({ "d_order": order }),
                ));
            }
        }
    }
    Section::new("I7", "cyclotomic orders of s-sums", checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_tables_have_declared_shape() {
        for t in &PRINTED_TABLES {
            assert_eq!(t.rows.len() as u32, t.m_max + 1);
            assert!(t.rows.iter().all(|r| r.len() as u32 == t.n_max + 1));
        }
        assert_eq!(PRINTED_TABLES[0].rows[2][1], Some(2));
        assert_eq!(PRINTED_TABLES[1].rows[1][1], Some(1));
        assert_eq!(PRINTED_TABLES[2].rows[4][2], Some(2));
    }

    #[test]
    fn level_parsing() {
        assert_eq!("fast".parse::<Level>(), Ok(Level::Fast));
        assert!("medium".parse::<Level>().is_err());
    }

    #[test]
    fn cheap_sections_pass() {
        let b = Bounds::for_level(Level::Fast);
        for f in [
            explicit_constants,
            c_series,
            inv_omega_mirror,
            inv_s_sum_orders,
        ] {
            let s = f(&b);
            assert!(s.pass(), "{}", serde_json::to_string_pretty(&s).unwrap());
        }
    }
}
