// Hopf-link pairings of the S_m elements: an independent route to α_{m,n}.

use std::fmt::Write;

use bingdouble::bing::alpha;
use bingdouble::milnor::{hopf_pair_s_s, pair_with_s, s_in_pprime};
use bingdouble::qnum::qfall;

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    let s2 = s_in_pprime(2);
    writeln!(
        out,
        "S_2 in the P' basis has support {:?}",
        s2.support().collect::<Vec<_>>()
    )?;
    let mut agree = 0;
    let mut total = 0;
    for m in 0..=6 {
        for n in 0..=6 {
            let pairing = hopf_pair_s_s(m, n);
            let via_alpha = &alpha(m, n) * &qfall(2 * n as i64 + 1, 2 * n);
            let via_basis = pair_with_s(&s_in_pprime(m), n);
            total += 1;
            if pairing == via_alpha && pairing == via_basis && pairing == hopf_pair_s_s(n, m) {
                agree += 1;
            }
        }
    }
    writeln!(
        out,
        "J(S_m, S_n) = alpha(m,n) {{2n+1}}_{{2n}} and is symmetric: {agree}/{total}"
    )?;
    writeln!(out, "J(S_1, S_2) = {}", hopf_pair_s_s(1, 2))?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
