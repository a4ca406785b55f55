// Arithmetic in Z[v, v^-1] with v = q^(1/2): products, exact division,
// q-display, JSON round trip and expansion at q = 1 + ħ.

use std::fmt::Write;

use bingdouble::qnum::{cyclotomic_sym, qbinom, qfact, qint};
use bingdouble::LaurentV;

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    let four = qint(4);
    writeln!(out, "{{4}} = {four}")?;

    let product = &qint(2) * &qint(3);
    writeln!(out, "{{2}}{{3}} = {product}")?;
    writeln!(out, "{{2}}{{3}} / {{1}} = {}", product.exact_div(&qint(1))?)?;
    writeln!(
        out,
        "{{3}} / {{2}} exact? {}",
        qint(3).is_divisible_by(&qint(2))
    )?;

    let phi_product = &(&cyclotomic_sym(1) * &cyclotomic_sym(2)) * &cyclotomic_sym(4);
    writeln!(out, "Φ̃1 Φ̃2 Φ̃4 == {{4}}: {}", phi_product == four)?;

    writeln!(out, "{{4}}! = {}", qfact(4))?;
    writeln!(out, "[6 ¦ 3] = {}", qbinom(6, 3).to_pretty(true))?;

    let q_form = (&qint(2) * &qint(4)).to_q_string()?;
    writeln!(out, "{{2}}{{4}} in q: {q_form}")?;

    let json = qint(3).to_json();
    let back = LaurentV::from_json(&json)?;
    writeln!(out, "json {json} round trips: {}", back == qint(3))?;

    let series = qfact(3).hbar_expand(5);
    writeln!(out, "{{3}}! at q = 1 + ħ: {series}")?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
