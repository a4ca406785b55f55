// Evaluation at primitive roots of unity in Z[ζ_m] and ideal membership.

use std::fmt::Write;

use bingdouble::habiro::{eval_at_root, wrt_at_root, wrt_divisibility_check, SurgeryTriple};
use bingdouble::qnum::cyclotomic;
use bingdouble::LaurentV;

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    let f = LaurentV::from_q_coeffs([1, 2, 3]);
    for m in [1, 2, 3, 5] {
        writeln!(
            out,
            "1 + 2q + 3q^2 at ζ_{m}: {:?}",
            eval_at_root(&f, m)?.coeffs()
        )?;
    }
    writeln!(
        out,
        "Φ_7 at ζ_7 is zero: {}",
        eval_at_root(&cyclotomic(7), 7)?.is_zero()
    )?;
    let t = SurgeryTriple::new(1, -1, 2);
    for m in 1..=6 {
        writeln!(
            out,
            "τ at ζ_{m} for M_(1,-1,2): {:?}",
            wrt_at_root(t, m)?.coeffs()
        )?;
    }
    let reports = wrt_divisibility_check(10)?;
    let passed = reports.iter().filter(|r| r.pass).count();
    writeln!(
        out,
        "(ζ^4 - 1)(ζ^6 - 1) membership for m ≤ 10: {passed}/{}",
        reports.len()
    )?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
