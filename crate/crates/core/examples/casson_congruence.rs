// Truncated unified WRT invariants of M_{i,j,k} and the congruence
// J - 1 ≡ 6ijk Φ_2 mod Φ_2^2.

use std::fmt::Write;

use bingdouble::habiro::{casson_congruence_check, mijk_partial, omega, SurgeryTriple};

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    writeln!(out, "omega(2, 2) = {}", omega(2, 2).to_pretty(true))?;
    writeln!(out, "omega(-1, 2) = {}", omega(-1, 2).to_pretty(true))?;
    let t = SurgeryTriple::new(1, 1, 1);
    writeln!(
        out,
        "J(M_1,1,1) through l = 1: {}",
        mijk_partial(t, 1).to_pretty(true)
    )?;
    for (i, j, k) in [(1, 1, 1), (2, -1, 3), (-2, 2, 1), (0, 5, 7)] {
        let report = casson_congruence_check(SurgeryTriple::new(i, j, k), 6)?;
        writeln!(
            out,
            "M_({i},{j},{k}): residue {} (6ijk = {}), tail to l = 6 divisible: {}, pass: {}",
            report
                .residue
                .as_ref()
                .map(|r| r.to_string())
                .unwrap_or_else(|| "none".into()),
            report.expected,
            report.failing_tail_term.is_none(),
            report.pass()
        )?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
