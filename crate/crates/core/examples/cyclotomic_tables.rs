// Tables of d_l(α_{m,n}), the exact power of Φ̃_l dividing α_{m,n}, compared
// with the printed tables for l = 1..5.

use std::fmt::Write;

use bingdouble::bing::d_table;
use bingdouble::qnum::{d_order, qfact, CycIndex};
use bingdouble::verify::PRINTED_TABLES;

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    writeln!(
        out,
        "d_3({{9}}!) = {:?}",
        d_order(&qfact(9), CycIndex::new(3)?)
    )?;
    for printed in &PRINTED_TABLES {
        let table = d_table(CycIndex::new(printed.l)?, printed.m_max, printed.n_max);
        let matches = table
            .rows()
            .iter()
            .zip(printed.rows)
            .all(|(row, want)| row.as_slice() == *want);
        writeln!(
            out,
            "l={} ({}x{}): matches printed table: {matches}",
            printed.l,
            printed.m_max + 1,
            printed.n_max + 1
        )?;
    }
    writeln!(out, "\nd_2 as CSV (blank = alpha vanishes):")?;
    out.push_str(&d_table(CycIndex::new(2)?, 4, 8).to_csv());
    writeln!(out, "\nd_1, shaded cells (n < m) marked *:")?;
    out.push_str(&d_table(CycIndex::new(1)?, 4, 8).to_pretty());
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
