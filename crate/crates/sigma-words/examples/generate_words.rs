//! Builds the first few words C_n and D_n and shows the recursive
//! structure C_{k+1} = C_k 1 D_k, D_{k+1} = C_k 2 D_k.

use sigma_words::word::{build_word, WordKind};

fn main() -> Result<(), sigma_words::Error> {
    for n in 1..=5 {
        let c = build_word(WordKind::C, n)?;
        let d = build_word(WordKind::D, n)?;
        println!("C_{n} = {c}");
        println!("D_{n} = {d}");
    }

    let c4 = build_word(WordKind::C, 4)?;
    let c3 = build_word(WordKind::C, 3)?;
    let d3 = build_word(WordKind::D, 3)?;
    assert_eq!(c4, c3.concat(sigma_words::Letter::One, &d3));
    println!("C_4 == C_3 · 1 · D_3  ✓");
    Ok(())
}
