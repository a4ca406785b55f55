use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::alpha;
use crate::qnum::{d_order, CycIndex};

/// Grid of `d_l(α_{m,n})` for `0 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max`.
///
/// A cell is `None` exactly when `α_{m,n} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DlTable {
    l: u32,
    m_max: u32,
    n_max: u32,
    cells: Vec<Vec<Option<u32>>>,
}

/// Computes the table cell by cell in parallel; the result does not depend on
/// scheduling since cells are collected in row-major order.
pub fn d_table(l: CycIndex, m_max: u32, n_max: u32) -> DlTable {
    let coords: Vec<(u32, u32)> = (0..=m_max)
        .flat_map(|m| (0..=n_max).map(move |n| (m, n)))
        .collect();
    let flat: Vec<Option<u32>> = coords
        .par_iter()
        .map(|&(m, n)| d_order(&alpha(m, n), l))
        .collect();
    let cells = flat
        .chunks((n_max + 1) as usize)
        .map(|row| row.to_vec())
        .collect();
    DlTable {
        l: l.get(),
        m_max,
        n_max,
        cells,
    }
}

impl DlTable {
    /// Assembles a table from explicit rows; every row must have `n_max + 1`
    /// entries.
    pub fn from_rows(l: CycIndex, rows: Vec<Vec<Option<u32>>>) -> Self {
        assert!(!rows.is_empty(), "a table has at least one row");
        let width = rows[0].len();
        assert!(
            width > 0 && rows.iter().all(|r| r.len() == width),
            "ragged table"
        );
        DlTable {
            l: l.get(),
            m_max: rows.len() as u32 - 1,
            n_max: width as u32 - 1,
            cells: rows,
        }
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m_max(&self) -> u32 {
        self.m_max
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn get(&self, m: u32, n: u32) -> Option<u32> {
        self.cells
            .get(m as usize)?
            .get(n as usize)
            .copied()
            .flatten()
    }

    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.cells
    }

    /// Rendering hint: cells with `n < m` are shaded in the printed tables.
    pub fn is_shaded(m: u32, n: u32) -> bool {
        n < m
    }

    /// Header row `m\n,0,1,...`, one row per `m`, empty strings for absent cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m\\n");
        for n in 0..=self.n_max {
            write!(out, ",{n}").unwrap();
        }
        out.push('\n');
        for (m, row) in self.cells.iter().enumerate() {
            write!(out, "{m}").unwrap();
            for cell in row {
                match cell {
                    Some(d) => write!(out, ",{d}").unwrap(),
                    None => out.push(','),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("table serialization is infallible")
    }

    /// Fixed-width text; shaded cells carry a trailing `*`.
    pub fn to_pretty(&self) -> String {
        let mut out = format!("d_{}(alpha_{{m,n}})   (* marks n < m)\n", self.l);
        write!(out, "{:>4} |", "m\\n").unwrap();
        for n in 0..=self.n_max {
            write!(out, "{n:>4}").unwrap();
        }
        out.push('\n');
        out.push_str(&"-".repeat(6 + 4 * (self.n_max as usize + 1)));
        out.push('\n');
        for (m, row) in self.cells.iter().enumerate() {
            write!(out, "{m:>4} |").unwrap();
            for (n, cell) in row.iter().enumerate() {
                let text = match cell {
                    Some(d) if Self::is_shaded(m as u32, n as u32) => format!("{d}*"),
                    Some(d) => d.to_string(),
                    None => String::new(),
                };
                write!(out, "{text:>4}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}
