// s-sums for ±1 surgery on a Bing double and the divisibility facts behind
// J_{M'} - J_M ∈ Φ_1^2 Φ_2^2 Φ_3 Φ_4 Φ_6 Ẑ[q].

use std::fmt::Write;

use bingdouble::habiro::{bing_divisibility_check, s_sum, sign_pairs};
use bingdouble::milnor::factor_cyclotomic;

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    for (e1, e2) in sign_pairs() {
        for l in 1..=2 {
            let s = s_sum(l, e1, e2);
            let fac = factor_cyclotomic(&s, 12);
            writeln!(out, "s_{l}^({e1},{e2}): Φ̃ factors {:?}", fac.factors)?;
        }
    }
    let reports = bing_divisibility_check(8)?;
    let passed = reports.iter().filter(|r| r.pass).count();
    writeln!(
        out,
        "divisibility checks passed: {passed}/{}",
        reports.len()
    )?;
    for r in reports.iter().filter(|r| !r.pass) {
        writeln!(out, "  {}", r.line())?;
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
