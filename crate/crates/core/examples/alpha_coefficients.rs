// The Bing-double coefficients α_{m,n} and x(i, j, l): support window,
// symmetry, values at q = 1 and the telescoping certificate.

use std::fmt::Write;

use bingdouble::bing::{alpha, alpha_tilde, certificate_check, in_support, x_coeff};
use bingdouble::qnum::{binomial, times_qfall};

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    for (m, n) in [(0, 0), (1, 1), (1, 2), (2, 2), (2, 3)] {
        writeln!(out, "alpha({m},{n}) = {}", alpha(m, n).to_pretty(true))?;
    }
    writeln!(out, "x(1,1,1) = {}", x_coeff(1, 1, 1))?;
    writeln!(out, "x(1,2,1) = {}", x_coeff(1, 2, 1))?;

    let window: Vec<String> = (0..=8)
        .map(|n| {
            if in_support(3, n) {
                "#".to_string()
            } else {
                ".".to_string()
            }
        })
        .collect();
    writeln!(out, "support of alpha(3, n), n = 0..8: {}", window.concat())?;

    let (m, n) = (3u32, 5u32);
    let lhs = times_qfall(&alpha(m, n), 2 * n as i64 + 1, 2 * n + 1);
    let rhs = times_qfall(&alpha(n, m), 2 * m as i64 + 1, 2 * m + 1);
    writeln!(
        out,
        "{{11}}! alpha(3,5) == {{7}}! alpha(5,3): {}",
        lhs == rhs
    )?;

    for j in 0..=4u32 {
        let value = alpha(4, 8 - j).eval_at_v1();
        let law = num_bigint::BigInt::from(4u32).pow(j) * binomial(4, j as i64);
        writeln!(
            out,
            "alpha(4,{}) at q=1: {value} (4^{j} C(4,{j}) = {law})",
            8 - j
        )?;
    }
    writeln!(out, "alpha~(4,2) = {}", alpha_tilde(4, 2)?)?;

    let report = certificate_check(6, 4)?;
    writeln!(
        out,
        "certificate (m=6, j=4): {}",
        if report.pass() { "pass" } else { "fail" }
    )?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
