//! The Schützenberger involution θ on words and on plactic elements of
//! finite rank.
//!
//! Fix the alphabet {1, …, n}. On words, θ reverses the word and replaces
//! each letter k by its complement n − k + 1. On the plactic monoid of rank
//! n this descends to a well-defined anti-automorphism (θ(ab) = θ(b)θ(a))
//! that is an involution (θ∘θ = id). It transfers solutions of the left
//! equation Xu = Yv into solutions of the right equation uX = vY, which is
//! how the `reversibility` module solves the right-hand version.
//!
//! θ depends on n, so every operation takes an explicit [`RankContext`];
//! there is no involution on the infinite-rank monoid.

use core::fmt;

use crate::monoid::PlacticElement;
use crate::word::{Letter, Word};

/// Why an involution could not be applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionError {
    /// The ambient alphabet must have at least one letter.
    ZeroRank,
    /// The input mentions a letter outside {1, …, n}.
    LetterExceedsRank { letter: u32, n: u32 },
}

impl fmt::Display for InvolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InvolutionError::ZeroRank => f.write_str("the involution needs a rank of at least 1"),
            InvolutionError::LetterExceedsRank { letter, n } => {
                write!(f, "letter {letter} exceeds the ambient rank {n}")
            }
        }
    }
}

impl core::error::Error for InvolutionError {}

/// The rank n of the ambient finite alphabet {1, …, n}. The complement map
/// k ↦ n − k + 1 depends on it, so callers must pick n explicitly; the same
/// word involutes differently at different ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankContext {
    n: u32,
}

impl RankContext {
    pub fn new(n: u32) -> Result<RankContext, InvolutionError> {
        if n == 0 {
            Err(InvolutionError::ZeroRank)
        } else {
            Ok(RankContext { n })
        }
    }

    pub fn rank(self) -> u32 {
        self.n
    }

    /// n − k + 1, the order-reversing bijection of {1, …, n}.
    pub fn complement(self, letter: Letter) -> Result<Letter, InvolutionError> {
        if letter.value() > self.n {
            Err(InvolutionError::LetterExceedsRank {
                letter: letter.value(),
                n: self.n,
            })
        } else {
            Ok(Letter::new(self.n - letter.value() + 1).expect("letter value <= n"))
        }
    }
}

/// θ on a raw word: reverse it, then complement every letter. Operating on
/// representatives (rather than classes) lets tests check that Knuth
/// equivalent words stay Knuth equivalent under θ.
pub fn involute_word(w: &Word, ctx: RankContext) -> Result<Word, InvolutionError> {
    w.letters()
        .iter()
        .rev()
        .map(|&l| ctx.complement(l))
        .collect::<Result<Word, InvolutionError>>()
}

/// θ on a plactic element: involute the normal form and renormalize. This is
/// independent of the chosen representative, and on elements of rank ≤ n it
/// is an anti-automorphism and an involution.
pub fn involute_element(
    a: &PlacticElement,
    ctx: RankContext,
) -> Result<PlacticElement, InvolutionError> {
    Ok(PlacticElement::from_word(&involute_word(
        a.normal_form(),
        ctx,
    )?))
}
