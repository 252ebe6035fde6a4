//! Letters, words and contents: the shared vocabulary of every other module.
//!
//! A word is a finite sequence of letters from the ordered alphabet
//! {1, 2, 3, …}. Letters carry no upper bound; operations that live in a
//! finite-rank monoid take the rank as an explicit argument. All values here
//! are immutable once built and all operations are pure.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A letter of the totally ordered alphabet: a positive integer, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// `None` for 0, the one value that is not a letter.
    pub fn new(value: u32) -> Option<Letter> {
        if value == 0 {
            None
        } else {
            Some(Letter(value))
        }
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Parsing rejects anything that is not a positive integer, naming the
/// offending token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseWordError {
    /// The token is not an integer a `u32` can hold.
    InvalidToken(String),
    /// The token is an integer, but zero or negative.
    NonPositiveLetter(String),
}

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseWordError::InvalidToken(t) => write!(f, "invalid word token \"{t}\""),
            ParseWordError::NonPositiveLetter(t) => {
                write!(f, "letters must be positive integers, got \"{t}\"")
            }
        }
    }
}

impl core::error::Error for ParseWordError {}

/// Compact form packs one digit per letter and so cannot hold letters above 9.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormatWordError {
    pub letter: u32,
}

impl fmt::Display for FormatWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "letter {} does not fit the compact digit form (letters must be 1-9)",
            self.letter
        )
    }
}

impl core::error::Error for FormatWordError {}

/// The two text styles for words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordStyle {
    /// One digit per letter, e.g. `34231122`. Letters 1-9 only.
    Compact,
    /// Space-separated integers, e.g. `10 2 10`. Any letters.
    Separated,
}

/// A finite sequence of letters, possibly empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Builds a word from raw values; `None` if any value is 0.
    pub fn from_values<I: IntoIterator<Item = u32>>(values: I) -> Option<Word> {
        values.into_iter().map(Letter::new).collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The largest letter appearing in the word, 0 for the empty word. This
    /// is the smallest rank n whose alphabet {1, …, n} contains the word.
    pub fn rank(&self) -> u32 {
        self.0.iter().map(|l| l.0).max().unwrap_or(0)
    }

    /// Tallies how many times each letter occurs.
    pub fn content(&self) -> Content {
        let mut counts = BTreeMap::new();
        for l in &self.0 {
            *counts.entry(l.0).or_insert(0) += 1;
        }
        Content { counts }
    }

    /// Reads a word from text.
    ///
    /// Accepted forms: the empty/blank string (the empty word); a compact
    /// digit string like `34231122` (letters 1-9, one per character); or
    /// whitespace- and/or comma-separated positive integers like `10 2 10`.
    /// A separator-free digit string containing a `0` cannot be compact and
    /// is read as a single letter, so `10` parses as the one-letter word 10.
    pub fn parse(text: &str) -> Result<Word, ParseWordError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Word::empty());
        }
        let is_separator = |c: char| c.is_whitespace() || c == ',';
        if trimmed.contains(is_separator) {
            let letters = trimmed
                .split(is_separator)
                .filter(|t| !t.is_empty())
                .map(parse_letter_token)
                .collect::<Result<Vec<Letter>, ParseWordError>>()?;
            Ok(Word(letters))
        } else if trimmed.len() >= 2 && trimmed.bytes().all(|b| (b'1'..=b'9').contains(&b)) {
            Ok(Word(
                trimmed.bytes().map(|b| Letter((b - b'0') as u32)).collect(),
            ))
        } else {
            Ok(Word(alloc::vec![parse_letter_token(trimmed)?]))
        }
    }

    /// Writes the word in the requested style. Round-trips with [`Word::parse`]
    /// wherever the style is applicable (compact needs letters 1-9).
    pub fn format(&self, style: WordStyle) -> Result<String, FormatWordError> {
        match style {
            WordStyle::Compact => {
                let mut out = String::with_capacity(self.len());
                for l in &self.0 {
                    if l.0 > 9 {
                        return Err(FormatWordError { letter: l.0 });
                    }
                    out.push((b'0' + l.0 as u8) as char);
                }
                Ok(out)
            }
            WordStyle::Separated => {
                let parts: Vec<String> = self.0.iter().map(|l| l.0.to_string()).collect();
                Ok(parts.join(" "))
            }
        }
    }

    /// Compact when every letter fits, separated otherwise.
    pub fn to_text(&self) -> String {
        self.format(WordStyle::Compact)
            .unwrap_or_else(|_| self.format(WordStyle::Separated).expect("separated is total"))
    }
}

fn parse_letter_token(token: &str) -> Result<Letter, ParseWordError> {
    match token.parse::<i64>() {
        Ok(v) if v >= 1 && v <= u32::MAX as i64 => Ok(Letter(v as u32)),
        Ok(v) if v <= 0 => Err(ParseWordError::NonPositiveLetter(token.to_string())),
        _ => Err(ParseWordError::InvalidToken(token.to_string())),
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Word, ParseWordError> {
        Word::parse(s)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_text())
    }
}

/// The content of a word: how many times each letter occurs, together with
/// the rank (the largest letter present). Also known as the Parikh image.
///
/// Counts are stored sparsely, keyed by letter value, so the infinite-rank
/// monoid needs no fixed-size vector; only nonzero counts are kept, which
/// makes structural equality agree with equality of contents.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Content {
    counts: BTreeMap<u32, usize>,
}

impl Content {
    pub fn empty() -> Content {
        Content::default()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Occurrences of the given letter value; 0 when absent.
    pub fn count(&self, letter: u32) -> usize {
        self.counts.get(&letter).copied().unwrap_or(0)
    }

    /// The largest letter with nonzero count, 0 for an empty content.
    pub fn rank(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// Total number of letters; equals the length of any word with this
    /// content.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// `(letter, count)` pairs in increasing letter order, nonzero counts
    /// only.
    pub fn iter(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.counts.iter().map(|(&l, &c)| (l, c))
    }

    /// The weakly increasing word with this content: the canonical
    /// single-row representative, e.g. {1:2, 3:1} gives `113`.
    pub fn row_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.total());
        for (&l, &c) in &self.counts {
            letters.extend(core::iter::repeat_n(Letter(l), c));
        }
        Word(letters)
    }
}

impl core::ops::Add<&Content> for &Content {
    type Output = Content;

    fn add(self, rhs: &Content) -> Content {
        let mut counts = self.counts.clone();
        for (&l, &c) in &rhs.counts {
            *counts.entry(l).or_insert(0) += c;
        }
        Content { counts }
    }
}

impl fmt::Debug for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}
