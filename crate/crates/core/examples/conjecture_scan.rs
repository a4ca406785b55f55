// Scans periodicity of d_l(α_{m,n}) modulo l and {0,1}-valuedness for prime l
// on the region m ≤ n ≤ 2m. Violations are reported, not fatal.

use std::fmt::Write;

use bingdouble::bing::conjecture_scan;

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    let report = conjecture_scan(1..=5, 10);
    out.push_str(&report.summary());
    for level in &report.levels {
        for v in level.periodicity_violations.iter().take(3) {
            writeln!(
                out,
                "  l={}: d({},{}) = {:?} but d({},{}) = {:?}",
                v.l, v.m, v.n, v.value, v.reference_m, v.reference_n, v.reference_value
            )?;
        }
    }
    writeln!(out, "total violations: {}", report.violation_count())?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
