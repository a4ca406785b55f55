// Runs the fast verification suite and prints one line per section.

use bingdouble::verify::{run as run_suite, Level};

pub fn run() -> Result<String, Box<dyn std::error::Error>> {
    let report = run_suite(Level::Fast);
    let mut out: String = report.sections.iter().map(|s| s.line() + "\n").collect();
    out.push_str(&format!(
        "{} checks, pass: {}\n",
        report.check_count(),
        report.pass()
    ));
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", run()?);
    Ok(())
}
