// Reduced colored Jones polynomials of Milnor's links A_n, their cyclotomic
// factorizations and the doubling-chain closed forms.

use std::fmt::Write;

use bingdouble::milnor::{
    borromean_reduced, doubling_chain, factor_cyclotomic, milnor_all_ones, milnor_reduced,
};

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let mut out = String::new();
    writeln!(
        out,
        "Borromean rings, colors (1,1,1): {}",
        borromean_reduced(1, 1, 1)
    )?;
    for n in 3..=7 {
        let value = milnor_reduced(&vec![1; n])?;
        let fac = factor_cyclotomic(&value, 6);
        let closed = milnor_all_ones(n)?;
        writeln!(
            out,
            "A_{n}, all colors 1: factors {:?}, unit {}, closed form agrees: {}",
            fac.factors,
            fac.cofactor,
            value == closed
        )?;
    }
    let (colors, closed) = doubling_chain(1, 5)?;
    writeln!(
        out,
        "doubling chain colors {colors:?}: closed form agrees: {}",
        milnor_reduced(&colors)? == closed
    )?;
    writeln!(
        out,
        "colors (1,2,2,1) give {}",
        milnor_reduced(&[1, 2, 2, 1])?
    )?;
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
