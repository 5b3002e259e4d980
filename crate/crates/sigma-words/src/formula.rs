//! Closed forms and recurrences for occurrence counts in `C_n` and `D_n`,
//! evaluated with exact integers and without materializing large words.
//!
//! All counting here rides on one structural fact: `C_n = C_{n-1} 1 D_{n-1}`
//! and `D_n = C_{n-1} 2 D_{n-1}`, so occurrences split into those inside the
//! halves plus boundary contributions that can be read off a fixed small
//! window (the kernel of a boundary word). The shared skeleton is the affine
//! recurrence `(c_n, d_n) = (c_{n-1} + d_{n-1} + alpha_n, c_{n-1} + d_{n-1}
//! + beta_n)`, iterated exactly from an oracle-supplied base case.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::kernel::{boundary_word, ceil_log2, m_count, overlap_pair_count, OverlapSide};
use crate::oracle::{count_generalized, Count};
use crate::pattern::{words_nonoverlapping, GeneralizedPattern};
use crate::word::{build_prefix, build_word, Letter, Word, WordKind};
use crate::Error;

/// Counts of one pattern in both words of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountPair {
    /// Count in `C_n`.
    pub c: Count,
    /// Count in `D_n`.
    pub d: Count,
    pub n: u32,
}

impl CountPair {
    pub fn new(c: Count, d: Count, n: u32) -> Self {
        CountPair { c, d, n }
    }
}

/// An affine recurrence `(c_n, d_n) = (c_{n-1} + d_{n-1} + alpha_n,
/// c_{n-1} + d_{n-1} + beta_n)` together with its base case.
pub struct RecurrenceState<'a> {
    pub base_n: u32,
    pub base: CountPair,
    /// Produces the added pair `(alpha_n, beta_n)` for each step `n`.
    pub inhomogeneous: Box<dyn Fn(u32) -> (Count, Count) + 'a>,
}

/// Iterates the affine recurrence exactly from the base case up to `n`.
pub fn evaluate_recurrence(state: &RecurrenceState<'_>, n: u32) -> CountPair {
    assert!(n >= state.base_n, "cannot evaluate below the base case");
    let mut c = state.base.c.clone();
    let mut d = state.base.d.clone();
    for step in state.base_n + 1..=n {
        let (alpha, beta) = (state.inhomogeneous)(step);
        let s = &c + &d;
        c = &s + alpha;
        d = &s + beta;
    }
    CountPair::new(c, d, n)
}

fn pow2(e: u32) -> Count {
    Count::one() << e
}

/// `C(top, k)` with `top` a big integer; zero when `k > top`.
pub fn binomial(top: &Count, k: u32) -> Count {
    if top < &Count::from(k) {
        return Count::zero();
    }
    let mut result = Count::one();
    for i in 0..k {
        result = result * (top - Count::from(i)) / Count::from(i + 1);
    }
    result
}

/// Letter tallies of `C_n` and `D_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterCounts {
    pub ones_in_c: Count,
    pub twos_in_c: Count,
    pub ones_in_d: Count,
    pub twos_in_d: Count,
}

/// `(2^{n-1}, 2^{n-1}-1, 2^{n-1}-1, 2^{n-1})`.
pub fn letter_counts(n: u32) -> LetterCounts {
    assert!(n >= 1);
    let big = pow2(n - 1);
    let small = &big - Count::one();
    LetterCounts {
        ones_in_c: big.clone(),
        twos_in_c: small.clone(),
        ones_in_d: small,
        twos_in_d: big,
    }
}

/// Occurrence counts of the constant pattern `1^k` in `C_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantPatternCount {
    /// Subsequences `1^k`: `C(2^{n-1}, k)`.
    pub ones_subseq: Count,
    /// Subsequences `2^k`: `C(2^{n-1}-1, k)`.
    pub twos_subseq: Count,
    /// Pattern count: the sum of both shapes.
    pub pattern_total: Count,
}

pub fn constant_pattern_count(n: u32, k: u32) -> ConstantPatternCount {
    assert!(n >= 1 && k >= 1);
    let counts = letter_counts(n);
    let ones_subseq = binomial(&counts.ones_in_c, k);
    let twos_subseq = binomial(&counts.twos_in_c, k);
    let pattern_total = &ones_subseq + &twos_subseq;
    ConstantPatternCount { ones_subseq, twos_subseq, pattern_total }
}

/// The two order-2 subsequence patterns with a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order2 {
    /// `1-2`
    OneTwo,
    /// `2-1`
    TwoOne,
}

/// Closed forms `c_n^{1-2} = 2*4^{n-2} + (n-2)*2^{n-2}` and
/// `c_n^{2-1} = 2*4^{n-2} - n*2^{n-2}`; in both cases `c_n = d_n`.
pub fn order2_count(n: u32, which: Order2) -> Result<CountPair, Error> {
    if n < 2 {
        return Err(Error::Domain(format!("order-2 closed forms require n >= 2, got {n}")));
    }
    let quad = Count::from(2) * pow2(2 * (n - 2));
    let value = match which {
        Order2::OneTwo => quad + Count::from(n - 2) * pow2(n - 2),
        Order2::TwoOne => quad - Count::from(n) * pow2(n - 2),
    };
    Ok(CountPair::new(value.clone(), value, n))
}

// ---------------------------------------------------------------------------
// Literal machinery: counts of block lists taken as exact words. Pattern
// semantics are recovered by summing over the one or two literal shapes.
// ---------------------------------------------------------------------------

type Memo = HashMap<(Vec<Word>, u32), (Count, Count)>;

fn oracle_pair(blocks: &[Word], n: u32) -> Result<(Count, Count), Error> {
    let p = GeneralizedPattern::unanchored(blocks.to_vec()).expect("nonempty blocks");
    let c = build_word(WordKind::C, n)?;
    let d = build_word(WordKind::D, n)?;
    Ok((count_generalized(&c, &p), count_generalized(&d, &p)))
}

/// Smallest `n` from which the closed form / recurrence for this literal
/// block list is used; below it the oracle supplies exact values.
fn valid_from(blocks: &[Word]) -> u32 {
    match blocks.len() {
        1 => ceil_log2(blocks[0].len() as u64) + 1,
        2 => {
            let k = ceil_log2((blocks[0].len() + blocks[1].len() - 1) as u64);
            let v1 = valid_from(&blocks[..1]);
            let v2 = valid_from(&blocks[1..]);
            (k + 1).max(v1 + 1).max(v2 + 1)
        }
        m => {
            let ell = blocks.iter().map(|b| ceil_log2(b.len() as u64)).max().unwrap();
            let mut deepest = 0;
            for cut in 1..m {
                deepest = deepest.max(valid_from(&blocks[..cut]));
                deepest = deepest.max(valid_from(&blocks[cut..]));
            }
            (ell + 1).max(deepest + 1)
        }
    }
}

/// Adjacent blocks block the recurrences only if they can genuinely share
/// positions around the middle letter; two single-letter blocks never can.
fn pair_blocks_recurrence(left: &Word, right: &Word) -> bool {
    !(words_nonoverlapping(left, right) || (left.len() == 1 && right.len() == 1))
}

fn literal_counts(blocks: &[Word], n: u32, memo: &mut Memo) -> Result<(Count, Count), Error> {
    let key = (blocks.to_vec(), n);
    if let Some(hit) = memo.get(&key) {
        return Ok(hit.clone());
    }
    let result = match blocks.len() {
        1 => literal_dashless(&blocks[0], n)?,
        2 => literal_two_block(blocks, n, memo)?,
        _ => literal_multi_block(blocks, n, memo)?,
    };
    memo.insert(key, result.clone());
    Ok(result)
}

/// Counts of a single subword via the dashless closed form
/// `c_n = (a + b + c_{k+1} + d_{k+1}) * 2^{n-k-2} - b` (and `- a` for `d_n`),
/// where `a`, `b` are kernel counts in the two boundary words of order
/// `k = ceil(log2 |tau|)`.
fn literal_dashless(tau: &Word, n: u32) -> Result<(Count, Count), Error> {
    let ell = tau.len() as u32;
    let k = ceil_log2(ell as u64);
    if n <= k + 1 {
        return oracle_pair(std::slice::from_ref(tau), n);
    }
    let a = m_count(ell, tau, &boundary_word(Letter::One, k)?)?;
    let b = m_count(ell, tau, &boundary_word(Letter::Two, k)?)?;
    let (base_c, base_d) = oracle_pair(std::slice::from_ref(tau), k + 1)?;
    let total = &a + &b + base_c + base_d;
    let scaled = total * pow2(n - k - 2);
    Ok((&scaled - &b, scaled - a))
}

/// The four kernel counts and four overlap corrections of the two-block
/// recurrence, taken on the boundary words of order
/// `k = ceil(log2(k1 + k2 - 1))`.
struct TwoBlockStats {
    a1: Count,
    a2: Count,
    b1: Count,
    b2: Count,
    r1a: Count,
    r2a: Count,
    r1b: Count,
    r2b: Count,
}

fn two_block_stats(tau1: &Word, tau2: &Word) -> Result<TwoBlockStats, Error> {
    let k1 = tau1.len() as u32;
    let k2 = tau2.len() as u32;
    let k = ceil_log2((k1 + k2 - 1) as u64);
    let w1 = boundary_word(Letter::One, k)?;
    let w2 = boundary_word(Letter::Two, k)?;
    Ok(TwoBlockStats {
        a1: m_count(k1, tau1, &w1)?,
        a2: m_count(k2, tau2, &w1)?,
        b1: m_count(k1, tau1, &w2)?,
        b2: m_count(k2, tau2, &w2)?,
        r1a: overlap_pair_count(&w1, tau1, tau2, OverlapSide::R1, k1)?,
        r2a: overlap_pair_count(&w1, tau1, tau2, OverlapSide::R2, k2)?,
        r1b: overlap_pair_count(&w2, tau1, tau2, OverlapSide::R1, k1)?,
        r2b: overlap_pair_count(&w2, tau1, tau2, OverlapSide::R2, k2)?,
    })
}

fn literal_two_block(blocks: &[Word], n: u32, memo: &mut Memo) -> Result<(Count, Count), Error> {
    let seed = valid_from(blocks);
    if n <= seed {
        return oracle_pair(blocks, n);
    }
    let stats = two_block_stats(&blocks[0], &blocks[1])?;
    let (mut c, mut d) = oracle_pair(blocks, seed)?;
    for step in seed + 1..=n {
        let (c1, _) = literal_counts(&blocks[..1], step - 1, memo)?;
        let (_, d2) = literal_counts(&blocks[1..], step - 1, memo)?;
        let alpha = (&c1 + &stats.a1 - &stats.r1a) * &d2 + (&stats.a2 - &stats.r2a) * &c1;
        let beta = (&c1 + &stats.b1 - &stats.r1b) * &d2 + (&stats.b2 - &stats.r2b) * &c1;
        let s = &c + &d;
        c = &s + alpha;
        d = &s + beta;
    }
    Ok((c, d))
}

fn literal_multi_block(blocks: &[Word], n: u32, memo: &mut Memo) -> Result<(Count, Count), Error> {
    for pair in blocks.windows(2) {
        if pair_blocks_recurrence(&pair[0], &pair[1]) {
            return Err(Error::OverlappingBlocks {
                pattern: GeneralizedPattern::unanchored(blocks.to_vec()).unwrap().to_string(),
            });
        }
    }
    let seed = valid_from(blocks);
    if n <= seed {
        return oracle_pair(blocks, n);
    }
    let m = blocks.len();
    let mut a_values = Vec::with_capacity(m);
    let mut b_values = Vec::with_capacity(m);
    for block in blocks {
        let k_i = block.len() as u32;
        let ell_i = ceil_log2(k_i as u64);
        a_values.push(m_count(k_i, block, &boundary_word(Letter::One, ell_i)?)?);
        b_values.push(m_count(k_i, block, &boundary_word(Letter::Two, ell_i)?)?);
    }

    // c-count of a (possibly empty) prefix and d-count of a (possibly
    // empty) suffix at a given order.
    let (mut c, mut d) = oracle_pair(blocks, seed)?;
    for step in seed + 1..=n {
        let prev = step - 1;
        let c_prefix = |upto: usize, memo: &mut Memo| -> Result<Count, Error> {
            if upto == 0 {
                Ok(Count::one())
            } else {
                Ok(literal_counts(&blocks[..upto], prev, memo)?.0)
            }
        };
        let d_suffix = |from: usize, memo: &mut Memo| -> Result<Count, Error> {
            if from == m {
                Ok(Count::one())
            } else {
                Ok(literal_counts(&blocks[from..], prev, memo)?.1)
            }
        };
        let mut alpha = Count::zero();
        let mut beta = Count::zero();
        for i in 1..m {
            let split = c_prefix(i, memo)? * d_suffix(i, memo)?;
            alpha += &split;
            beta += split;
        }
        for i in 1..=m {
            let around = c_prefix(i - 1, memo)? * d_suffix(i, memo)?;
            alpha += &a_values[i - 1] * &around;
            beta += &b_values[i - 1] * &around;
        }
        let s = &c + &d;
        c = &s + alpha;
        d = &s + beta;
    }
    Ok((c, d))
}

// ---------------------------------------------------------------------------
// Public pattern-level entry points.
// ---------------------------------------------------------------------------

fn sum_over_shapes<F>(p: &GeneralizedPattern, n: u32, mut f: F) -> Result<CountPair, Error>
where
    F: FnMut(&GeneralizedPattern) -> Result<(Count, Count), Error>,
{
    let mut c = Count::zero();
    let mut d = Count::zero();
    for shape in p.expansions() {
        let (sc, sd) = f(&shape)?;
        c += sc;
        d += sd;
    }
    Ok(CountPair::new(c, d, n))
}

/// Pattern counts of a single dashless block, total over all `n >= 1`.
pub fn dashless_count(p: &GeneralizedPattern, n: u32) -> Result<CountPair, Error> {
    assert!(p.blocks().len() == 1 && !p.is_anchored(), "expected one unanchored block");
    sum_over_shapes(p, n, |shape| literal_dashless(&shape.blocks()[0], n))
}

/// Pattern counts of a two-block pattern via the boundary recurrence with
/// overlap corrections.
pub fn two_block_count(p: &GeneralizedPattern, n: u32) -> Result<CountPair, Error> {
    assert!(p.blocks().len() == 2 && !p.is_anchored(), "expected two unanchored blocks");
    let mut memo = Memo::new();
    sum_over_shapes(p, n, |shape| literal_two_block(shape.blocks(), n, &mut memo))
}

/// Pattern counts of a `k >= 3` block pattern via the multi-block
/// recurrence. Errors with [`Error::OverlappingBlocks`] when an adjacent
/// block pair can genuinely overlap; callers fall back to the oracle.
pub fn multi_block_count(p: &GeneralizedPattern, n: u32) -> Result<CountPair, Error> {
    assert!(p.blocks().len() >= 3 && !p.is_anchored(), "expected three or more unanchored blocks");
    let mut memo = Memo::new();
    sum_over_shapes(p, n, |shape| literal_multi_block(shape.blocks(), n, &mut memo))
}

/// First `len` letters shared by every `C_n` and `D_n` large enough.
fn stable_prefix(len: usize) -> Word {
    build_prefix(len as u64).expect("small word")
}

/// Last `len` letters shared by every `C_n` and `D_n` large enough: the
/// suffixes of `D_k` stabilize once `2^{k-1} - 1 >= len`.
fn stable_suffix(len: usize) -> Word {
    let k = ceil_log2(len as u64 + 1) + 1;
    let d = build_word(WordKind::D, k).expect("small word");
    d.slice(d.len() - len + 1, d.len())
}

/// Occurrences of `tau1` in the stable suffix that end within the last
/// `k2` positions, i.e. placements colliding with a right-anchored block
/// of length `k2`.
fn stable_suffix_overlap(tau1: &Word, k2: usize) -> Count {
    let window = tau1.len() + k2 - 1;
    let suffix = stable_suffix(window);
    let mut hits = 0usize;
    for s in 1..=suffix.len().saturating_sub(tau1.len()) + 1 {
        let e = s + tau1.len() - 1;
        if e > suffix.len() {
            break;
        }
        if e >= suffix.len() - k2 + 1 && suffix.slice(s, e) == *tau1 {
            hits += 1;
        }
    }
    Count::from(hits)
}

/// Occurrences of `tau2` in the stable prefix that start within the first
/// `k1` positions, i.e. placements colliding with a left-anchored block
/// of length `k1`.
fn stable_prefix_overlap(k1: usize, tau2: &Word) -> Count {
    let window = k1 + tau2.len() - 1;
    let prefix = stable_prefix(window);
    let mut hits = 0usize;
    for s in 1..=k1.min(prefix.len().saturating_sub(tau2.len() - 1)) {
        if prefix.slice(s, s + tau2.len() - 1) == *tau2 {
            hits += 1;
        }
    }
    Count::from(hits)
}

fn anchored_literal(
    blocks: &[Word],
    left: bool,
    right: bool,
    n: u32,
    memo: &mut Memo,
) -> Result<(Count, Count), Error> {
    let total: usize = blocks.iter().map(Word::len).sum();
    // Below this order the word is too short for its prefix and suffix to
    // have stabilized; exact counts come from the explicit word.
    let threshold = ceil_log2(total as u64 + 2) + 1;
    if n < threshold {
        let p = GeneralizedPattern::new(blocks.to_vec(), left, right).expect("valid blocks");
        let c = build_word(WordKind::C, n)?;
        let d = build_word(WordKind::D, n)?;
        return Ok((count_generalized(&c, &p), count_generalized(&d, &p)));
    }

    let m = blocks.len();
    let begins = !left || stable_prefix(blocks[0].len()).letters() == blocks[0].letters();
    let ends = !right || stable_suffix(blocks[m - 1].len()).letters() == blocks[m - 1].letters();

    match (m, left, right) {
        (1, true, true) => {
            // The single block would have to cover the whole word.
            Ok((Count::zero(), Count::zero()))
        }
        (1, _, _) => {
            let hit = if begins && ends { Count::one() } else { Count::zero() };
            Ok((hit.clone(), hit))
        }
        (2, true, false) => {
            if !begins {
                return Ok((Count::zero(), Count::zero()));
            }
            let (c2, d2) = literal_counts(&blocks[1..], n, memo)?;
            let a = stable_prefix_overlap(blocks[0].len(), &blocks[1]);
            Ok((c2 - &a, d2 - a))
        }
        (2, false, true) => {
            if !ends {
                return Ok((Count::zero(), Count::zero()));
            }
            let (c1, d1) = literal_counts(&blocks[..1], n, memo)?;
            let b = stable_suffix_overlap(&blocks[0], blocks[1].len());
            Ok((c1 - &b, d1 - b))
        }
        (2, true, true) => {
            let hit = if begins && ends { Count::one() } else { Count::zero() };
            Ok((hit.clone(), hit))
        }
        _ => {
            // Three or more blocks: strip the anchored blocks, requiring
            // the stripped block not to overlap its neighbour.
            if left && pair_blocks_recurrence(&blocks[0], &blocks[1]) {
                return Err(Error::OverlapAtAnchor {
                    pattern: GeneralizedPattern::new(blocks.to_vec(), left, right)
                        .unwrap()
                        .to_string(),
                });
            }
            if right && pair_blocks_recurrence(&blocks[m - 2], &blocks[m - 1]) {
                return Err(Error::OverlapAtAnchor {
                    pattern: GeneralizedPattern::new(blocks.to_vec(), left, right)
                        .unwrap()
                        .to_string(),
                });
            }
            if !begins || !ends {
                return Ok((Count::zero(), Count::zero()));
            }
            let lo = if left { 1 } else { 0 };
            let hi = if right { m - 1 } else { m };
            literal_counts(&blocks[lo..hi], n, memo)
        }
    }
}

/// Counts of an anchored pattern via the prefix/suffix reductions.
pub fn anchored_count(p: &GeneralizedPattern, n: u32) -> Result<CountPair, Error> {
    assert!(p.is_anchored(), "expected an anchored pattern");
    let mut memo = Memo::new();
    sum_over_shapes(p, n, |shape| {
        anchored_literal(shape.blocks(), shape.anchored_left(), shape.anchored_right(), n, &mut memo)
    })
}

/// Formula-route counts for any supported pattern: dispatches on anchors
/// and block count. Errors indicate the pattern is outside the closed
/// forms' domain and the oracle must be used instead.
pub fn formula_count(p: &GeneralizedPattern, n: u32) -> Result<CountPair, Error> {
    if p.is_anchored() {
        anchored_count(p, n)
    } else {
        match p.blocks().len() {
            1 => dashless_count(p, n),
            2 => two_block_count(p, n),
            _ => multi_block_count(p, n),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::count_pattern;

    fn p(s: &str) -> GeneralizedPattern {
        s.parse().unwrap()
    }

    fn int(v: i64) -> Count {
        Count::from(v)
    }

    #[test]
    fn recurrence_order2_example() {
        // base (c_2, d_2) = (2, 2) with the 1-2 inhomogeneous term.
        let state = RecurrenceState {
            base_n: 2,
            base: CountPair::new(int(2), int(2), 2),
            inhomogeneous: Box::new(|n| {
                let t = pow2(n - 2) * (pow2(n - 2) + Count::one());
                (t.clone(), t)
            }),
        };
        assert_eq!(evaluate_recurrence(&state, 5).c, int(152));
        assert_eq!(evaluate_recurrence(&state, 2), state.base);
    }

    #[test]
    fn recurrence_two_block_example() {
        let state = RecurrenceState {
            base_n: 3,
            base: CountPair::new(int(0), int(1), 3),
            inhomogeneous: Box::new(|n| (pow2(2 * (n - 3)), pow2(2 * (n - 3)))),
        };
        assert_eq!(evaluate_recurrence(&state, 4).c, int(5));
    }

    #[test]
    fn letter_count_examples() {
        let lc = letter_counts(3);
        assert_eq!(
            (lc.ones_in_c, lc.twos_in_c, lc.ones_in_d, lc.twos_in_d),
            (int(4), int(3), int(3), int(4))
        );
        let lc = letter_counts(1);
        assert_eq!(
            (lc.ones_in_c, lc.twos_in_c, lc.ones_in_d, lc.twos_in_d),
            (int(1), int(0), int(0), int(1))
        );
    }

    #[test]
    fn constant_pattern_examples() {
        let cc = constant_pattern_count(3, 2);
        assert_eq!((cc.ones_subseq, cc.twos_subseq, cc.pattern_total), (int(6), int(3), int(9)));
        let cc = constant_pattern_count(1, 1);
        assert_eq!((cc.ones_subseq, cc.twos_subseq, cc.pattern_total), (int(1), int(0), int(1)));
        assert_eq!(constant_pattern_count(4, 3).ones_subseq, int(56));
    }

    #[test]
    fn order2_examples() {
        assert_eq!(order2_count(2, Order2::OneTwo).unwrap().c, int(2));
        assert_eq!(order2_count(3, Order2::OneTwo).unwrap().c, int(10));
        assert_eq!(order2_count(2, Order2::TwoOne).unwrap().c, int(0));
        assert!(order2_count(1, Order2::OneTwo).is_err());
    }

    #[test]
    fn dashless_examples() {
        assert_eq!(dashless_count(&p("12"), 5).unwrap().c, int(8));
        assert_eq!(dashless_count(&p("221"), 4).unwrap().c, int(2));
        assert_eq!(dashless_count(&p("2212221"), 5).unwrap().c, int(0));
        assert_eq!(dashless_count(&p("2212221"), 5).unwrap().d, int(1));
        assert_eq!(dashless_count(&p("2212221"), 6).unwrap().c, int(1));
        assert_eq!(dashless_count(&p("2212221"), 7).unwrap().c, int(3));
        assert_eq!(dashless_count(&p("1"), 3).unwrap().c, int(7));
        for n in 1..=12 {
            assert_eq!(dashless_count(&p("1"), n).unwrap().c, pow2(n) - Count::one());
        }
    }

    #[test]
    fn two_block_examples() {
        assert_eq!(two_block_count(&p("12-21"), 4).unwrap().c, int(5));
        assert_eq!(two_block_count(&p("1-221"), 5).unwrap().c, int(47));
        assert_eq!(two_block_count(&p("112-21"), 4).unwrap().c, int(5));
    }

    #[test]
    fn two_block_matches_order2_closed_forms() {
        for n in 2..=12 {
            assert_eq!(two_block_count(&p("1-2"), n).unwrap().c, order2_count(n, Order2::OneTwo).unwrap().c);
            assert_eq!(two_block_count(&p("2-1"), n).unwrap().d, order2_count(n, Order2::TwoOne).unwrap().d);
        }
    }

    #[test]
    fn multi_block_matches_oracle() {
        let pattern = p("2-1-221");
        for n in 5..=8 {
            let pair = multi_block_count(&pattern, n).unwrap();
            let c = build_word(WordKind::C, n).unwrap();
            let d = build_word(WordKind::D, n).unwrap();
            assert_eq!(pair.c, count_pattern(&c, &pattern), "n={n}");
            assert_eq!(pair.d, count_pattern(&d, &pattern), "n={n}");
        }
    }

    #[test]
    fn multi_block_all_ones_subsequences() {
        let pattern = p("1-1-1");
        let pair = multi_block_count(&pattern, 4).unwrap();
        let c4 = build_word(WordKind::C, 4).unwrap();
        assert_eq!(pair.c, count_pattern(&c4, &pattern));
        assert_eq!(pair.c, int(91));
    }

    #[test]
    fn multi_block_rejects_overlapping_blocks() {
        assert!(matches!(
            multi_block_count(&p("1-12-21"), 6),
            Err(Error::OverlappingBlocks { .. })
        ));
    }

    #[test]
    fn anchored_examples() {
        assert_eq!(anchored_count(&p("[112-21)"), 4).unwrap().c, int(2));
        for n in 3..=9 {
            let pair = anchored_count(&p("(21221-12]"), n).unwrap();
            assert_eq!(pair.c, int(0), "n={n}");
            assert_eq!(pair.d, int(0), "n={n}");
            let pair = anchored_count(&p("[1122-21211)"), n).unwrap();
            assert_eq!(pair.c, int(0), "n={n}");
        }
    }

    #[test]
    fn anchored_strip_reduction() {
        for n in 5..=8 {
            let anchored = anchored_count(&p("[112-1-221-22]"), n).unwrap();
            let inner = two_block_count(&p("1-221"), n).unwrap();
            assert_eq!(anchored.c, inner.c, "n={n}");
        }
    }

    #[test]
    fn zero_propagation() {
        // A run of four equal letters never occurs: its kernel and base
        // counts all vanish, so the closed form stays at zero.
        for n in 1..=12 {
            assert_eq!(dashless_count(&p("1111"), n).unwrap().c, int(0));
            assert_eq!(dashless_count(&p("1111"), n).unwrap().d, int(0));
        }
    }

    #[test]
    fn binomial_edge_cases() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(3), 5), int(0));
        assert_eq!(binomial(&int(7), 0), int(1));
    }
}
