//! Kernels of odd-length words and the boundary statistics consumed by
//! the closed forms: m-counts, overlap pair counts, and prefix/suffix
//! overlap counts for anchored patterns.
//!
//! For an odd-length word `W = A a B` with `|A| = |B|`, the kernel of
//! order `k` is the window made of the `k-1` rightmost letters of `A`,
//! the middle letter `a`, and the `k-1` leftmost letters of `B`; it is
//! empty when `|A| < k-1`.

use crate::oracle::{count_subword, Count};
use crate::word::{build_word, Letter, Word, WordKind};
use crate::Error;

/// Which of the four overlap counts of the two-block recurrence is
/// requested: `R1` constrains the first block to the kernel and the
/// second to the right half, `R2` constrains the first block to the left
/// half and the second to the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverlapSide {
    R1,
    R2,
}

/// Boundary statistics for a pattern: per-block kernel counts in the two
/// boundary words, and (for two-block patterns) the four overlap counts.
#[derive(Clone, Debug, Default)]
pub struct KernelStats {
    /// `m_{k_i}` of each block in the boundary word with separator 1.
    pub a_values: Vec<Count>,
    /// `m_{k_i}` of each block in the boundary word with separator 2.
    pub b_values: Vec<Count>,
    /// `(r_1^a, r_2^a, r_1^b, r_2^b)`, populated for two-block patterns.
    pub r_values: Option<[Count; 4]>,
    /// The kernel orders used per block.
    pub ell_values: Vec<u32>,
}

/// Smallest `k` with `2^k >= x`, for `x >= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    assert!(x >= 1);
    if x == 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Kernel of order `k` of an odd-length word.
pub fn kernel(w: &Word, k: u32) -> Result<Word, Error> {
    if w.len() % 2 == 0 {
        return Err(Error::OddLengthRequired { len: w.len() });
    }
    let half = (w.len() - 1) / 2;
    let flank = (k - 1) as usize;
    if half < flank {
        return Ok(Word::empty());
    }
    let mid = half + 1; // 1-based middle position
    Ok(w.slice(mid - flank, mid + flank))
}

/// The word `D_k sep C_k` (for `k = 0`, just the one-letter word `sep`).
/// This is the exact local context around the middle letter of `C_n`
/// (sep = 1) or `D_n` (sep = 2) for every `n > k`.
pub fn boundary_word(sep: Letter, k: u32) -> Result<Word, Error> {
    if k == 0 {
        return Ok(Word::new(vec![sep]));
    }
    let c = build_word(WordKind::C, k)?;
    let d = build_word(WordKind::D, k)?;
    Ok(d.concat(sep, &c))
}

/// Number of contiguous occurrences of `block` in the order-`k` kernel
/// of `w`.
pub fn m_count(k: u32, block: &Word, w: &Word) -> Result<Count, Error> {
    Ok(count_subword(&kernel(w, k)?, block))
}

/// Counts ordered pairs of contiguous occurrences of `tau1` and `tau2`
/// in a boundary word that overlap, in the sense that `tau2` starts no
/// later than `tau1` ends, subject to region membership:
///
/// * `R1`: the `tau1` occurrence lies within the order-`k` kernel window
///   and the `tau2` occurrence lies entirely in the right half;
/// * `R2`: the `tau1` occurrence lies entirely in the left half and the
///   `tau2` occurrence lies within the order-`k` kernel window.
pub fn overlap_pair_count(
    w: &Word,
    tau1: &Word,
    tau2: &Word,
    which: OverlapSide,
    k: u32,
) -> Result<Count, Error> {
    if w.len() % 2 == 0 {
        return Err(Error::OddLengthRequired { len: w.len() });
    }
    let mid = (w.len() + 1) / 2;
    let flank = (k - 1) as usize;
    let kernel_lo = mid.saturating_sub(flank).max(1);
    let kernel_hi = (mid + flank).min(w.len());
    let kernel_exists = mid > flank && mid + flank <= w.len();

    let occurrences = |t: &Word| -> Vec<(usize, usize)> {
        let mut spans = Vec::new();
        if t.len() <= w.len() {
            for s in 1..=w.len() - t.len() + 1 {
                let e = s + t.len() - 1;
                if w.slice(s, e) == *t {
                    spans.push((s, e));
                }
            }
        }
        spans
    };

    let occ1 = occurrences(tau1);
    let occ2 = occurrences(tau2);
    let in_kernel =
        |s: usize, e: usize| kernel_exists && s >= kernel_lo && e <= kernel_hi;
    let in_left_half = |_s: usize, e: usize| e < mid;
    let in_right_half = |s: usize, _e: usize| s > mid;

    let mut pairs = 0usize;
    for &(s1, e1) in &occ1 {
        for &(s2, e2) in &occ2 {
            if s2 > e1 {
                continue;
            }
            let regions_ok = match which {
                OverlapSide::R1 => in_kernel(s1, e1) && in_right_half(s2, e2),
                OverlapSide::R2 => in_left_half(s1, e1) && in_kernel(s2, e2),
            };
            if regions_ok {
                pairs += 1;
            }
        }
    }
    Ok(Count::from(pairs))
}

/// With `l = ceil(log2(|tau1| + |tau2| + 1))`: the number of contiguous
/// occurrences of `tau2` in `C_l` starting at a position `<= |tau1|`,
/// i.e. overlapping the length-`|tau1|` prefix.
pub fn prefix_overlap(tau1: &Word, tau2: &Word) -> Count {
    assert!(!tau1.is_empty() && !tau2.is_empty());
    let ell = ceil_log2((tau1.len() + tau2.len() + 1) as u64);
    let c = build_word(WordKind::C, ell.max(1)).expect("small word");
    let mut hits = 0usize;
    for s in 1..=tau1.len().min(c.len().saturating_sub(tau2.len() - 1)) {
        if c.slice(s, s + tau2.len() - 1) == *tau2 {
            hits += 1;
        }
    }
    Count::from(hits)
}

/// Companion of [`prefix_overlap`]: occurrences of `tau1` in `C_l`
/// ending within the last `|tau2|` positions.
pub fn suffix_overlap(tau1: &Word, tau2: &Word) -> Count {
    assert!(!tau1.is_empty() && !tau2.is_empty());
    let ell = ceil_log2((tau1.len() + tau2.len() + 1) as u64);
    let c = build_word(WordKind::C, ell.max(1)).expect("small word");
    if tau1.len() > c.len() {
        return Count::from(0);
    }
    let mut hits = 0usize;
    for s in 1..=c.len() - tau1.len() + 1 {
        let e = s + tau1.len() - 1;
        if e + tau2.len() >= c.len() + 1 && c.slice(s, e) == *tau1 {
            hits += 1;
        }
    }
    Count::from(hits)
}
