//! The i-th letter of the infinite sigma-word without building any word:
//! write i = 2^t (4s + sigma) with sigma in {1, 3}; the letter is 1 when
//! sigma = 1 and 2 when sigma = 3.

use sigma_words::word::{build_word, sigma_letter, WordKind};

fn main() -> Result<(), sigma_words::Error> {
    let prefix: String = (1..=31).map(|i| sigma_letter(i).as_char()).collect();
    println!("first 31 letters: {prefix}");
    assert_eq!(prefix, build_word(WordKind::C, 5)?.to_string());

    // Positions far beyond anything materializable.
    for i in [1u64 << 40, (1 << 50) + 12345, u64::MAX / 3] {
        println!("letter {i} = {}", sigma_letter(i));
    }
    Ok(())
}
