//! The formula engine: exact counts for orders far past the point where
//! the words themselves could be built (C_200 has ~10^60 letters).

use sigma_words::formula::formula_count;
use sigma_words::GeneralizedPattern;

fn main() -> Result<(), sigma_words::Error> {
    let patterns = ["12", "1-2", "12-21", "1-221", "2-1-221", "[112-21)"];
    for text in patterns {
        let p: GeneralizedPattern = text.parse()?;
        let pair = formula_count(&p, 40)?;
        println!("{text:>10} in C_40: {}", pair.c);
    }

    let p: GeneralizedPattern = "12-21".parse()?;
    let pair = formula_count(&p, 200)?;
    println!("digits of count of 12-21 in C_200: {}", pair.c.to_string().len());
    Ok(())
}
