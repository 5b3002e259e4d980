//! Cross-validation: every count the formula engine produces is compared
//! against the brute-force oracle; disagreements and unsupported patterns
//! are reported, never hidden.

use sigma_words::verify::{all_agree, cross_check, sweep_dashless, to_csv};
use sigma_words::GeneralizedPattern;

fn main() -> Result<(), sigma_words::Error> {
    let p: GeneralizedPattern = "1-221".parse()?;
    let rows = cross_check(&p, 3, 8)?;
    print!("{}", to_csv(&rows));
    println!("all agree: {}", all_agree(&rows));

    let rows = sweep_dashless(4, 10)?;
    let disagreements = rows.iter().filter(|r| !r.agree).count();
    println!("dashless sweep (len<=4, n<=10): {} rows, {} disagreements", rows.len(), disagreements);
    Ok(())
}
