//! Exact brute-force counting of pattern occurrences in explicit words.
//!
//! Every closed form in [`crate::formula`] is cross-validated against
//! these counts; they are the ground truth of the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::pattern::GeneralizedPattern;
use crate::word::Word;

/// Exact unbounded count. Counts grow like `4^n`, so fixed-width
/// integers are never used.
pub type Count = BigInt;

/// Number of (possibly overlapping) contiguous occurrences of `block`
/// in `w`.
pub fn count_subword(w: &Word, block: &Word) -> Count {
    assert!(!block.is_empty(), "block must be nonempty");
    let w = w.letters();
    let b = block.letters();
    if b.len() > w.len() {
        return Count::zero();
    }
    let hits = w.windows(b.len()).filter(|win| *win == b).count();
    Count::from(hits)
}

/// Number of occurrences of `p` under literal semantics: each block
/// placed as a contiguous subword, placements strictly ordered and
/// never sharing a position, anchors respected.
///
/// Dynamic programming over block stages: `ways[e]` is the number of
/// placements of the blocks processed so far whose last block ends at
/// 1-based position `e`; a prefix-sum array carries the counts across
/// the gap permitted by each dash.
pub fn count_generalized(w: &Word, p: &GeneralizedPattern) -> Count {
    let n = w.len();
    let letters = w.letters();
    let blocks = p.blocks();
    if p.total_len() > n {
        return Count::zero();
    }

    // prefix[e] = number of ways to place all previous blocks with the
    // last of them ending at position <= e.
    let mut prefix: Vec<Count> = vec![Count::one(); n + 1];
    prefix[0] = Count::one(); // no blocks placed yet: one empty placement

    for (i, block) in blocks.iter().enumerate() {
        let b = block.letters();
        let mut ways: Vec<Count> = vec![Count::zero(); n + 1];
        if b.len() <= n {
            for s in 1..=n - b.len() + 1 {
                if i == 0 && p.anchored_left() && s != 1 {
                    break;
                }
                if &letters[s - 1..s - 1 + b.len()] == b {
                    let e = s + b.len() - 1;
                    // previous block must end strictly before s
                    ways[e] = if i == 0 { Count::one() } else { prefix[s - 1].clone() };
                }
            }
        }
        let mut acc = Count::zero();
        for e in 0..=n {
            acc += &ways[e];
            prefix[e] = acc.clone();
        }
        if i + 1 == blocks.len() {
            return if p.anchored_right() { ways[n].clone() } else { acc };
        }
    }
    unreachable!("patterns have at least one block")
}

/// Number of occurrences of `p` under pattern semantics: the sum of the
/// literal counts of its shapes.
pub fn count_pattern(w: &Word, p: &GeneralizedPattern) -> Count {
    p.expansions().iter().map(|q| count_generalized(w, q)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{build_word, WordKind};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> GeneralizedPattern {
        s.parse().unwrap()
    }

    #[test]
    fn subword_examples() {
        assert_eq!(count_subword(&w("1121122"), &w("112")), Count::from(2));
        assert_eq!(count_subword(&w("1"), &w("1")), Count::from(1));
        assert_eq!(count_subword(&w("112112211122122"), &w("21")), Count::from(3));
        assert_eq!(count_subword(&w("1"), &w("12")), Count::from(0));
    }

    #[test]
    fn generalized_examples() {
        let c4 = build_word(WordKind::C, 4).unwrap();
        let c5 = build_word(WordKind::C, 5).unwrap();
        assert_eq!(count_generalized(&c4, &p("12-21")), Count::from(5));
        assert_eq!(count_generalized(&c5, &p("1-221")), Count::from(47));
        assert_eq!(count_generalized(&w("112"), &p("[112]")), Count::from(1));
        assert_eq!(count_generalized(&c4, &p("[112-21)")), Count::from(2));
    }

    #[test]
    fn pattern_examples() {
        let c3 = build_word(WordKind::C, 3).unwrap();
        let c2 = build_word(WordKind::C, 2).unwrap();
        assert_eq!(count_pattern(&c3, &p("1-1")), Count::from(9));
        assert_eq!(count_pattern(&c3, &p("12")), Count::from(2));
        assert_eq!(count_pattern(&c2, &p("2-1")), Count::from(0));
        assert_eq!(count_pattern(&c3, &p("1-2")), Count::from(10));
    }

    #[test]
    fn doubly_anchored_single_block_is_zero_or_one() {
        for word in ["1", "112", "1121122", "212"] {
            for pat in ["[1]", "[112]", "[21]", "[1121122]"] {
                let c = count_generalized(&w(word), &p(pat));
                assert!(c == Count::from(0) || c == Count::from(1), "{word} {pat} -> {c}");
            }
        }
    }

    #[test]
    fn descent_rise_relation() {
        for n in 2..=10 {
            let c = build_word(WordKind::C, n).unwrap();
            let rises = count_pattern(&c, &p("12"));
            let descents = count_pattern(&c, &p("21"));
            assert_eq!(rises, descents + 1);
        }
    }

    #[test]
    fn pattern_with_two_equals_generalized() {
        let c4 = build_word(WordKind::C, 4).unwrap();
        for pat in ["12", "2-1", "112-21", "1-221"] {
            assert_eq!(count_pattern(&c4, &p(pat)), count_generalized(&c4, &p(pat)));
        }
    }
}
