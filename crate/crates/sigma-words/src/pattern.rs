//! Generalized patterns over `{1, 2}` in Babson-Steingrimsson notation.
//!
//! A pattern is a sequence of dashless blocks separated by dashes. Letters
//! inside a block must occupy adjacent positions in an occurrence; a dash
//! permits any gap. Bracket delimiters anchor an occurrence to the first
//! or last letter of the word: `[112-21)` is anchored on the left only,
//! `(21221-12]` on the right only, `[1]` on both sides. Unanchored
//! patterns are written bare.

use std::fmt;
use std::str::FromStr;

use crate::word::{Letter, Word};
use crate::Error;

/// Whether counts are taken over order-isomorphic occurrences or exact
/// letter matches. An all-1s pattern matches two literal shapes; any
/// pattern containing a 2 matches only itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Semantics {
    Pattern,
    Literal,
}

/// A generalized pattern: nonempty blocks plus anchor flags.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedPattern {
    blocks: Vec<Word>,
    anchored_left: bool,
    anchored_right: bool,
}

impl GeneralizedPattern {
    pub fn new(blocks: Vec<Word>, anchored_left: bool, anchored_right: bool) -> Result<Self, Error> {
        if blocks.is_empty() || blocks.iter().any(|b| b.is_empty()) {
            return Err(Error::Parse("pattern blocks must be nonempty".into()));
        }
        Ok(GeneralizedPattern { blocks, anchored_left, anchored_right })
    }

    pub fn unanchored(blocks: Vec<Word>) -> Result<Self, Error> {
        Self::new(blocks, false, false)
    }

    pub fn blocks(&self) -> &[Word] {
        &self.blocks
    }

    pub fn anchored_left(&self) -> bool {
        self.anchored_left
    }

    pub fn anchored_right(&self) -> bool {
        self.anchored_right
    }

    pub fn is_anchored(&self) -> bool {
        self.anchored_left || self.anchored_right
    }

    /// Total number of letters over all blocks.
    pub fn total_len(&self) -> usize {
        self.blocks.iter().map(Word::len).sum()
    }

    /// True when no block contains the letter 2, i.e. the pattern is
    /// order-isomorphic to two distinct literal shapes.
    pub fn is_all_ones(&self) -> bool {
        self.blocks
            .iter()
            .all(|b| b.letters().iter().all(|&l| l == Letter::One))
    }

    /// The literal shapes an occurrence of this pattern can take: the
    /// pattern itself, plus the flipped copy when it is all-1s.
    pub fn expansions(&self) -> Vec<GeneralizedPattern> {
        if self.is_all_ones() {
            let flipped = GeneralizedPattern {
                blocks: self.blocks.iter().map(Word::flipped).collect(),
                anchored_left: self.anchored_left,
                anchored_right: self.anchored_right,
            };
            vec![self.clone(), flipped]
        } else {
            vec![self.clone()]
        }
    }

    /// True iff for every adjacent block pair, no nonempty suffix of the
    /// left block equals a prefix of the right block.
    pub fn adjacent_nonoverlap(&self) -> bool {
        self.blocks
            .windows(2)
            .all(|pair| words_nonoverlapping(&pair[0], &pair[1]))
    }
}

/// True iff no nonempty suffix of `left` is a prefix of `right`.
pub fn words_nonoverlapping(left: &Word, right: &Word) -> bool {
    let l = left.letters();
    let r = right.letters();
    for take in 1..=l.len().min(r.len()) {
        if l[l.len() - take..] == r[..take] {
            return false;
        }
    }
    true
}

impl fmt::Display for GeneralizedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_anchored() {
            write!(f, "{}", if self.anchored_left { '[' } else { '(' })?;
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{b}")?;
        }
        if self.is_anchored() {
            write!(f, "{}", if self.anchored_right { ']' } else { ')' })?;
        }
        Ok(())
    }
}

impl FromStr for GeneralizedPattern {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        if text.is_empty() {
            return Err(Error::Parse("empty pattern".into()));
        }
        let mut rest = text;
        let open = match rest.chars().next() {
            Some('[') | Some('(') => {
                let c = rest.chars().next().unwrap();
                rest = &rest[1..];
                Some(c)
            }
            _ => None,
        };
        let close = match rest.chars().last() {
            Some(']') | Some(')') => {
                let c = rest.chars().last().unwrap();
                rest = &rest[..rest.len() - 1];
                Some(c)
            }
            _ => None,
        };
        if open.is_some() != close.is_some() {
            return Err(Error::Parse(format!("one-sided bracketing in {text:?}")));
        }
        let anchored_left = open == Some('[');
        let anchored_right = close == Some(']');
        let mut blocks = Vec::new();
        for part in rest.split('-') {
            if part.is_empty() {
                return Err(Error::Parse(format!("empty block in {text:?}")));
            }
            blocks.push(part.parse::<Word>()?);
        }
        GeneralizedPattern::new(blocks, anchored_left, anchored_right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GeneralizedPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let q = p("1-221");
        assert_eq!(q.blocks().len(), 2);
        assert_eq!(q.blocks()[0].to_string(), "1");
        assert_eq!(q.blocks()[1].to_string(), "221");
        assert!(!q.anchored_left() && !q.anchored_right());

        let q = p("[112-21)");
        assert!(q.anchored_left() && !q.anchored_right());
        assert_eq!(q.blocks()[0].to_string(), "112");

        let q = p("(21221-12]");
        assert!(!q.anchored_left() && q.anchored_right());
    }

    #[test]
    fn parse_rejections() {
        assert!("1-3".parse::<GeneralizedPattern>().is_err());
        assert!("1--2".parse::<GeneralizedPattern>().is_err());
        assert!("[1-2".parse::<GeneralizedPattern>().is_err());
        assert!("".parse::<GeneralizedPattern>().is_err());
        assert!("1-2]".parse::<GeneralizedPattern>().is_err());
    }

    #[test]
    fn render_examples() {
        assert_eq!(p("12-21").to_string(), "12-21");
        assert_eq!(p("[112-21)").to_string(), "[112-21)");
        assert_eq!(p("[1]").to_string(), "[1]");
        // An anchored pattern always renders with both side marks.
        let q = GeneralizedPattern::new(vec!["1".parse().unwrap()], true, false).unwrap();
        assert_eq!(q.to_string(), "[1)");
    }

    #[test]
    fn expansion_examples() {
        let shapes: Vec<String> = p("1-1").expansions().iter().map(|q| q.to_string()).collect();
        assert_eq!(shapes, vec!["1-1", "2-2"]);
        let shapes: Vec<String> = p("1-2-1").expansions().iter().map(|q| q.to_string()).collect();
        assert_eq!(shapes, vec!["1-2-1"]);
        let shapes: Vec<String> = p("111").expansions().iter().map(|q| q.to_string()).collect();
        assert_eq!(shapes, vec!["111", "222"]);
    }

    #[test]
    fn expansions_preserve_anchors() {
        for q in p("[1-11)").expansions() {
            assert!(q.anchored_left() && !q.anchored_right());
            assert_eq!(q.blocks()[1].len(), 2);
        }
    }

    #[test]
    fn nonoverlap_examples() {
        assert!(p("1-221").adjacent_nonoverlap());
        assert!(!p("112-21").adjacent_nonoverlap());
        assert!(!p("12-21").adjacent_nonoverlap());
    }
}
