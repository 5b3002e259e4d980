//! Brute-force pattern counting: dashless subwords, dashed blocks with
//! gaps, anchors, and the pattern-vs-literal distinction (a pattern made
//! only of 1s also counts its letterwise complement).

use sigma_words::oracle::{count_generalized, count_pattern};
use sigma_words::word::{build_word, WordKind};
use sigma_words::GeneralizedPattern;

fn main() -> Result<(), sigma_words::Error> {
    let c4 = build_word(WordKind::C, 4)?;

    for text in ["21", "12-21", "[112-21)", "1-1"] {
        let p: GeneralizedPattern = text.parse()?;
        println!("{text:>10} in C_4: {}", count_pattern(&c4, &p));
    }

    // 1-1 as a pattern counts both 1_1 and 2_2 placements; as a literal
    // it counts only 1_1.
    let p: GeneralizedPattern = "1-1".parse()?;
    println!("1-1 literal in C_4: {}", count_generalized(&c4, &p));
    println!("1-1 pattern in C_4: {}", count_pattern(&c4, &p));
    Ok(())
}
