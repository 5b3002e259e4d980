//! Construction of the sigma-words `C_n` / `D_n` and direct random access
//! to letters of the infinite sigma-sequence.
//!
//! The words are built by the inductive scheme
//!
//! ```text
//! C_1 = 1        D_1 = 2
//! C_{k+1} = C_k 1 D_k        D_{k+1} = C_k 2 D_k
//! ```
//!
//! and the sigma-sequence is the limit of the `C_k`. Words serialize as
//! ASCII strings of `1` and `2` with no separators.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// One symbol of the binary alphabet `{1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    One,
    Two,
}

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '1' => Some(Letter::One),
            '2' => Some(Letter::Two),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::One => '1',
            Letter::Two => '2',
        }
    }

    /// The other letter of the alphabet.
    pub fn flipped(self) -> Letter {
        match self {
            Letter::One => Letter::Two,
            Letter::Two => Letter::One,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Which of the two companion words a query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordKind {
    C,
    D,
}

impl WordKind {
    /// The separator letter inserted at the middle position when the word
    /// of the next order is built.
    pub fn separator(self) -> Letter {
        match self {
            WordKind::C => Letter::One,
            WordKind::D => Letter::Two,
        }
    }
}

impl fmt::Display for WordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordKind::C => write!(f, "C"),
            WordKind::D => write!(f, "D"),
        }
    }
}

/// Maximum number of letters a word may have when explicitly materialized.
/// Longer words must be accessed through [`sigma_letter`].
pub const LENGTH_CAP: u64 = (1 << 26) - 1;

/// A finite word over `{1, 2}`. Positions are 1-based in the public API.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Subword spanning 1-based positions `start..=end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::new(self.letters[start - 1..end].to_vec())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.letters.starts_with(&other.letters)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.letters.ends_with(&other.letters)
    }

    /// The word with every letter replaced by the other one.
    pub fn flipped(&self) -> Word {
        Word::new(self.letters.iter().map(|l| l.flipped()).collect())
    }

    pub fn concat(&self, sep: Letter, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1 + other.len());
        letters.extend_from_slice(&self.letters);
        letters.push(sep);
        letters.extend_from_slice(&other.letters);
        Word::new(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        s.chars()
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::Parse(format!("invalid letter {c:?}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }
}

/// Builds `C_n` or `D_n` by the inductive scheme. The result has exactly
/// `2^n - 1` letters.
pub fn build_word(kind: WordKind, n: u32) -> Result<Word, Error> {
    assert!(n >= 1, "word order must be at least 1");
    let len = (1u64 << n) - 1;
    if len > LENGTH_CAP {
        return Err(Error::CapExceeded { requested: len, cap: LENGTH_CAP });
    }
    let mut c = Word::new(vec![Letter::One]);
    let mut d = Word::new(vec![Letter::Two]);
    for _ in 1..n {
        let next_c = c.concat(Letter::One, &d);
        let next_d = c.concat(Letter::Two, &d);
        c = next_c;
        d = next_d;
    }
    Ok(match kind {
        WordKind::C => c,
        WordKind::D => d,
    })
}

/// Letter at position `i >= 1` of the sigma-sequence, via the direct
/// formula: write `i = 2^t (4s + sigma)` with `sigma` odd mod 4; the
/// letter is 1 when `sigma = 1` and 2 when `sigma = 3`.
pub fn sigma_letter(i: u64) -> Letter {
    assert!(i >= 1, "positions are 1-based");
    let odd = i >> i.trailing_zeros();
    if odd % 4 == 1 {
        Letter::One
    } else {
        Letter::Two
    }
}

/// First `len` letters of the sigma-sequence. For `len = 2^n - 1` this
/// equals `C_n`.
pub fn build_prefix(len: u64) -> Result<Word, Error> {
    if len > LENGTH_CAP {
        return Err(Error::CapExceeded { requested: len, cap: LENGTH_CAP });
    }
    Ok(Word::new((1..=len).map(sigma_letter).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn small_words_match_table() {
        assert_eq!(build_word(WordKind::C, 1).unwrap(), w("1"));
        assert_eq!(build_word(WordKind::C, 2).unwrap(), w("112"));
        assert_eq!(build_word(WordKind::D, 3).unwrap(), w("1122122"));
        assert_eq!(build_word(WordKind::C, 4).unwrap(), w("112112211122122"));
    }

    #[test]
    fn word_lengths() {
        for n in 1..=12 {
            assert_eq!(build_word(WordKind::C, n).unwrap().len() as u64, (1 << n) - 1);
            assert_eq!(build_word(WordKind::D, n).unwrap().len() as u64, (1 << n) - 1);
        }
    }

    #[test]
    fn sigma_letter_examples() {
        assert_eq!(sigma_letter(1), Letter::One);
        assert_eq!(sigma_letter(3), Letter::Two);
        assert_eq!(sigma_letter(12), Letter::Two);
        assert_eq!(sigma_letter(4), Letter::One);
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(build_prefix(0).unwrap(), Word::empty());
        assert_eq!(build_prefix(7).unwrap(), w("1121122"));
        assert_eq!(build_prefix(14).unwrap(), w("11211221112212"));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(build_word(WordKind::C, 27), Err(Error::CapExceeded { .. })));
        assert!(matches!(build_prefix(LENGTH_CAP + 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn concatenation_structure() {
        for n in 2..=10 {
            let c = build_word(WordKind::C, n).unwrap();
            let d = build_word(WordKind::D, n).unwrap();
            let pc = build_word(WordKind::C, n - 1).unwrap();
            let pd = build_word(WordKind::D, n - 1).unwrap();
            assert_eq!(c, pc.concat(Letter::One, &pd));
            assert_eq!(d, pc.concat(Letter::Two, &pd));
        }
    }
}
