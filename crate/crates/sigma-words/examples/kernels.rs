//! Kernels: the fixed-size window around the middle of an odd word, and
//! the boundary words D_k sep C_k that describe the middle of every C_n
//! and D_n at once.

use sigma_words::kernel::{boundary_word, kernel, m_count};
use sigma_words::word::{build_word, Letter, WordKind};

fn main() -> Result<(), sigma_words::Error> {
    let w = build_word(WordKind::C, 4)?;
    for k in 1..=4 {
        println!("K_{k}(C_4) = {}", kernel(&w, k)?);
    }

    // The order-k kernel of C_n equals the order-k kernel of D_k 1 C_k
    // for every n > k: the middle is eventually periodic in this sense.
    let b = boundary_word(Letter::One, 3)?;
    for n in 4..=7 {
        assert_eq!(kernel(&build_word(WordKind::C, n)?, 3)?, kernel(&b, 3)?);
    }
    println!("K_3(C_n) stabilizes to {} for n > 3", kernel(&b, 3)?);

    let block = "221".parse()?;
    println!(
        "m_3(221, D_3 2 C_3) = {}",
        m_count(3, &block, &boundary_word(Letter::Two, 3)?)?
    );
    Ok(())
}
