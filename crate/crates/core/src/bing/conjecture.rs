//! Exhaustive scans of two conjectured regularities of `d_l(α_{m,n})` on the
//! region `0 ≤ m ≤ n ≤ 2m`: periodicity with period `l` in both indices, and
//! values in `{0, 1}` for prime `l`. A clean scan is evidence, not proof.

use std::collections::BTreeMap;

use serde::Serialize;

use super::d_table;
use crate::qnum::CycIndex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityViolation {
    pub l: u32,
    pub m: u32,
    pub n: u32,
    pub value: Option<u32>,
    /// First cell of the same residue class, in row-major order.
    pub reference_m: u32,
    pub reference_n: u32,
    pub reference_value: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueViolation {
    pub l: u32,
    pub m: u32,
    pub n: u32,
    pub value: Option<u32>,
}

/// Scan results for one `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelScan {
    pub l: u32,
    pub m_max: u32,
    pub cells_checked: usize,
    pub periodicity_violations: Vec<PeriodicityViolation>,
    /// `false` when `l` is not prime and the `{0,1}` statement does not apply.
    pub binary_applicable: bool,
    pub binary_violations: Vec<ValueViolation>,
    /// Every scanned cell as `(m, n, value)`.
    pub cells: Vec<(u32, u32, Option<u32>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub levels: Vec<LevelScan>,
}

impl ConjectureReport {
    pub fn violation_count(&self) -> usize {
        self.levels
            .iter()
            .map(|s| s.periodicity_violations.len() + s.binary_violations.len())
            .sum()
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.levels {
            out.push_str(&format!(
                "l={} m≤{}: {} cells, {} periodicity violations, {}\n",
                s.l,
                s.m_max,
                s.cells_checked,
                s.periodicity_violations.len(),
                if s.binary_applicable {
                    format!("{} values outside {{0,1}}", s.binary_violations.len())
                } else {
                    "{0,1} check not applicable (l not prime)".to_string()
                }
            ));
        }
        out
    }
}

fn is_prime(l: u32) -> bool {
    l >= 2
        && (2..l)
            .take_while(|p| p * p <= l)
            .all(|p| !l.is_multiple_of(p))
}

/// Scans every `l` in `levels` over `0 ≤ m ≤ m_max`, `m ≤ n ≤ 2m`.
pub fn conjecture_scan(levels: impl IntoIterator<Item = u32>, m_max: u32) -> ConjectureReport {
    let levels = levels
        .into_iter()
        .filter(|&l| l >= 1)
        .map(|l| scan_level(l, m_max))
        .collect();
    ConjectureReport { levels }
}

fn scan_level(l: u32, m_max: u32) -> LevelScan {
    let table = d_table(CycIndex::of(l), m_max, 2 * m_max);
    let binary_applicable = is_prime(l);
    let mut representatives: BTreeMap<(u32, u32), (u32, u32, Option<u32>)> = BTreeMap::new();
    let mut periodicity_violations = Vec::new();
    let mut binary_violations = Vec::new();
    let mut cells = Vec::new();

    for m in 0..=m_max {
        for n in m..=2 * m {
            let value = table.get(m, n);
            cells.push((m, n, value));
            let (rm, rn, rv) = *representatives
                .entry((m % l, n % l))
                .or_insert((m, n, value));
            if rv != value {
                periodicity_violations.push(PeriodicityViolation {
                    l,
                    m,
                    n,
                    value,
                    reference_m: rm,
                    reference_n: rn,
                    reference_value: rv,
                });
            }
            if binary_applicable && !matches!(value, Some(0) | Some(1)) {
                binary_violations.push(ValueViolation { l, m, n, value });
            }
        }
    }

    LevelScan {
        l,
        m_max,
        cells_checked: cells.len(),
        periodicity_violations,
        binary_applicable,
        binary_violations,
        cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_levels_are_clean() {
        let report = conjecture_scan([1, 2], 8);
        assert_eq!(report.violation_count(), 0, "{}", report.summary());
        assert!(report.levels[0].cells.iter().all(|&(_, _, v)| v == Some(0)));
        assert!(report.levels[1]
            .cells
            .iter()
            .all(|&(_, _, v)| matches!(v, Some(0) | Some(1))));
    }

    #[test]
    fn primality() {
        let primes: Vec<u32> = (1..20).filter(|&l| is_prime(l)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn composite_level_skips_binary_check() {
        let report = conjecture_scan([4], 4);
        assert!(!report.levels[0].binary_applicable);
        assert!(report.levels[0].binary_violations.is_empty());
    }
}
