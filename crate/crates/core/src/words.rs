//! Words of the monoid generated by the primitive blocks `0, 1, .., a-1` and
//! `0a, 0(a+1), .., 0(a+b-1)`.
//!
//! A word is valid when every letter `l >= a` sits immediately after a `0`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::sequences;

/// The triple `(a, b, n)` selecting the cube `Π^{a,b}_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub a: u32,
    pub b: u32,
    pub n: usize,
}

impl Params {
    pub fn new(a: u32, b: u32, n: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParams(format!(
                "a and b must be at least 1 (got a={a}, b={b})"
            )));
        }
        if a as u64 + b as u64 > 256 {
            return Err(Error::InvalidParams(format!(
                "alphabet size a+b={} exceeds 256 letters",
                a as u64 + b as u64
            )));
        }
        Ok(Params { a, b, n })
    }

    /// Same `(a, b)`, different length.
    pub fn with_n(self, n: usize) -> Self {
        Params { n, ..self }
    }

    /// Number of letters, `a + b`.
    pub fn alphabet_size(&self) -> u32 {
        self.a + self.b
    }

    /// Largest letter among the single-letter blocks, `a - 1`.
    pub fn top_single(&self) -> u8 {
        (self.a - 1) as u8
    }

    /// Largest letter overall, `a + b - 1`.
    pub fn top_letter(&self) -> u8 {
        (self.a + self.b - 1) as u8
    }

    /// Letters `>= a` may only follow a `0`.
    pub fn is_block_letter(&self, letter: u8) -> bool {
        letter as u32 >= self.a
    }

    /// Whether words render as plain digit strings.
    pub fn compact_rendering(&self) -> bool {
        self.alphabet_size() <= 10
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} n={}", self.a, self.b, self.n)
    }
}

/// A vertex of a Horadam cube: a sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letter_sum(&self) -> u64 {
        self.0.iter().map(|&l| l as u64).sum()
    }

    /// `prefix ++ self`.
    pub fn prefixed(&self, prefix: &[u8]) -> Word {
        let mut letters = Vec::with_capacity(prefix.len() + self.0.len());
        letters.extend_from_slice(prefix);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    /// Renders in the export convention of `p`: digits when `a+b <= 10`,
    /// comma-separated decimals otherwise.
    pub fn render(&self, p: &Params) -> String {
        if p.compact_rendering() {
            self.0.iter().map(|&l| char::from(b'0' + l)).collect()
        } else {
            self.0
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Inverse of [`Word::render`]; the result is checked against `p`.
    pub fn parse(text: &str, p: &Params) -> Result<Word> {
        let text = text.trim();
        let letters: Vec<u8> = if text.is_empty() {
            Vec::new()
        } else if p.compact_rendering() {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::InvalidWord(format!("bad letter {c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::InvalidWord(format!("bad letter {part:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        };
        if !is_valid_word(&letters, p) {
            return Err(Error::InvalidWord(format!("{text:?} is not a word of {p}")));
        }
        Ok(Word(letters))
    }
}

impl From<&[u8]> for Word {
    fn from(letters: &[u8]) -> Self {
        Word(letters.to_vec())
    }
}

/// One generator of the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimitiveBlock {
    /// A lone letter `k < a`.
    Single(u8),
    /// The two-letter block `0l` with `a <= l <= a+b-1`; stores `l`.
    Pair(u8),
}

#[allow(clippy::len_without_is_empty)]
impl PrimitiveBlock {
    pub fn len(&self) -> usize {
        match self {
            PrimitiveBlock::Single(_) => 1,
            PrimitiveBlock::Pair(_) => 2,
        }
    }

    pub fn letters(&self) -> Vec<u8> {
        match *self {
            PrimitiveBlock::Single(k) => vec![k],
            PrimitiveBlock::Pair(l) => vec![0, l],
        }
    }
}

/// True iff `letters` has length `p.n`, every letter is below `a+b`, and every
/// letter `>= a` is immediately preceded by `0`.
pub fn is_valid_word(letters: &[u8], p: &Params) -> bool {
    letters.len() == p.n && is_valid_letters(letters, p)
}

/// Validity without the length constraint.
pub(crate) fn is_valid_letters(letters: &[u8], p: &Params) -> bool {
    letters.iter().enumerate().all(|(i, &l)| {
        (l as u32) < p.alphabet_size() && (!p.is_block_letter(l) || (i > 0 && letters[i - 1] == 0))
    })
}

/// Unique left-to-right split into primitive blocks.
pub fn decompose_blocks(word: &Word, p: &Params) -> Result<Vec<PrimitiveBlock>> {
    if !is_valid_word(word.letters(), p) {
        return Err(Error::InvalidWord(format!(
            "{:?} is not a word of {p}",
            word.letters()
        )));
    }
    let letters = word.letters();
    let mut blocks = Vec::with_capacity(letters.len());
    let mut i = 0;
    while i < letters.len() {
        if letters[i] == 0 && i + 1 < letters.len() && p.is_block_letter(letters[i + 1]) {
            blocks.push(PrimitiveBlock::Pair(letters[i + 1]));
            i += 2;
        } else {
            blocks.push(PrimitiveBlock::Single(letters[i]));
            i += 1;
        }
    }
    Ok(blocks)
}

/// All words of length `p.n`, lexicographically ordered, with the default
/// vertex cap.
pub fn enumerate_words(p: &Params) -> Result<Vec<Word>> {
    enumerate_words_capped(p, Limits::DEFAULT.vertex_cap)
}

pub fn enumerate_words_capped(p: &Params, cap: u64) -> Result<Vec<Word>> {
    let count = sequences::vertex_count(p);
    let count = u64::try_from(&count)
        .ok()
        .filter(|&c| c <= cap)
        .ok_or_else(|| Error::limit("word enumeration", &count, cap))?;

    let mut out = Vec::with_capacity(count as usize);
    let mut current = Vec::with_capacity(p.n);
    extend_words(p, &mut current, &mut out);
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

fn extend_words(p: &Params, current: &mut Vec<u8>, out: &mut Vec<Word>) {
    if current.len() == p.n {
        out.push(Word(current.clone()));
        return;
    }
    let after_zero = current.last() == Some(&0);
    for letter in 0..=p.top_letter() {
        if p.is_block_letter(letter) && !after_zero {
            break;
        }
        current.push(letter);
        extend_words(p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: u32, b: u32, n: usize) -> Params {
        Params::new(a, b, n).unwrap()
    }

    fn w(s: &str) -> Vec<u8> {
        s.bytes().map(|c| c - b'0').collect()
    }

    #[test]
    fn rejects_zero_parameters() {
        assert!(matches!(Params::new(0, 2, 3), Err(Error::InvalidParams(_))));
        assert!(matches!(Params::new(2, 0, 3), Err(Error::InvalidParams(_))));
        assert!(Params::new(200, 57, 1).is_err());
        assert!(Params::new(200, 56, 1).is_ok());
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_word(&w("042"), &params(3, 2, 3)));
        assert!(!is_valid_word(&w("30"), &params(3, 2, 2)));
        assert!(is_valid_word(&[], &params(3, 2, 0)));
        assert!(!is_valid_word(&w("05"), &params(3, 2, 2)));
        assert!(!is_valid_word(&w("04"), &params(3, 2, 3)));
        assert!(!is_valid_word(&w("3"), &params(3, 2, 1)));
    }

    #[test]
    fn decomposition_examples() {
        let p = params(3, 2, 3);
        assert_eq!(
            decompose_blocks(&Word(w("042")), &p).unwrap(),
            vec![PrimitiveBlock::Pair(4), PrimitiveBlock::Single(2)]
        );
        let p = params(1, 2, 4);
        assert_eq!(
            decompose_blocks(&Word(w("0020")), &p).unwrap(),
            vec![
                PrimitiveBlock::Single(0),
                PrimitiveBlock::Pair(2),
                PrimitiveBlock::Single(0)
            ]
        );
        assert!(decompose_blocks(&Word::empty(), &params(2, 2, 0))
            .unwrap()
            .is_empty());
        assert!(decompose_blocks(&Word(w("30")), &params(3, 2, 2)).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<_> = enumerate_words(&params(1, 2, 3))
            .unwrap()
            .iter()
            .map(|w| w.render(&params(1, 2, 3)))
            .collect();
        assert_eq!(got, ["000", "001", "002", "010", "020"]);

        let got: Vec<_> = enumerate_words(&params(3, 2, 1)).unwrap();
        assert_eq!(got, vec![Word(vec![0]), Word(vec![1]), Word(vec![2])]);

        assert_eq!(enumerate_words(&params(2, 2, 4)).unwrap().len(), 44);
        assert_eq!(enumerate_words(&params(2, 2, 0)).unwrap(), vec![Word::empty()]);
    }

    #[test]
    fn enumeration_respects_cap() {
        let err = enumerate_words_capped(&params(2, 2, 4), 43).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }

    #[test]
    fn rendering_switches_to_commas_for_large_alphabets() {
        let small = params(3, 2, 3);
        let word = Word::parse("042", &small).unwrap();
        assert_eq!(word.render(&small), "042");

        let big = params(6, 5, 3);
        let word = Word(vec![0, 10, 5]);
        assert_eq!(word.render(&big), "0,10,5");
        assert_eq!(Word::parse("0,10,5", &big).unwrap(), word);
        assert!(Word::parse("5,10,0", &big).is_err());
        assert!(Word::parse("0x2", &small).is_err());
    }
}
