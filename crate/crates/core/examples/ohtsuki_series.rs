// Expansion at q = 1 + ħ: the c-series and truncated Ohtsuki series of M_{i,j,k}.

use std::fmt::Write;

use bingdouble::habiro::{lambda_series, ohtsuki_c, ohtsuki_denominator, SurgeryTriple};

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    writeln!(out, "denominator: {}", ohtsuki_denominator())?;
    let c = ohtsuki_c(6);
    writeln!(out, "c-series: {c}")?;
    let check = &c * &ohtsuki_denominator().truncate(6);
    writeln!(out, "c * denominator = {check}")?;
    for t in [SurgeryTriple::new(1, 1, 1), SurgeryTriple::new(-1, 2, 1)] {
        let s = lambda_series(t, 4);
        writeln!(
            out,
            "lambda series of M_({},{},{}): {} (boundary term ok: {})",
            t.i, t.j, t.k, s.series, s.boundary_ok
        )?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
