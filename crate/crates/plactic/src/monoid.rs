//! The monoid structure on Knuth classes: normal forms, multiplication,
//! single Knuth rewriting steps, column generators, and a brute-force
//! congruence oracle used by the test suite.
//!
//! Two words are identified when one can be rewritten into the other by the
//! Knuth relations
//!
//! ```text
//! x z y = z x y   (x ≤ y < z)        y x z = y z x   (x < y ≤ z)
//! ```
//!
//! Every congruence class contains exactly one tableau row reading, which is
//! the normal form computed here via Schensted insertion.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::tableau::Tableau;
use crate::word::{Content, Letter, Word};

/// An element of the plactic monoid, held in normal form: the row reading of
/// the unique tableau in its Knuth class. Equality of elements is equality in
/// the monoid.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PlacticElement {
    normal_form: Word,
    content: Content,
}

// `is_identity` is the emptiness test: the identity is the empty word.
#[allow(clippy::len_without_is_empty)]
impl PlacticElement {
    /// The empty word: the two-sided identity.
    pub fn identity() -> PlacticElement {
        PlacticElement::default()
    }

    /// The element represented by `w`, i.e. the normal form of its Knuth
    /// class, computed as the row reading of the Schensted tableau P(w).
    pub fn from_word(w: &Word) -> PlacticElement {
        let normal_form = Tableau::from_word(w).row_reading();
        let content = normal_form.content();
        PlacticElement {
            normal_form,
            content,
        }
    }

    pub fn normal_form(&self) -> &Word {
        &self.normal_form
    }

    /// The content of every representative of this class (Knuth rewriting
    /// only permutes letters).
    pub fn content(&self) -> &Content {
        &self.content
    }

    /// The tableau whose row reading is this element's normal form.
    pub fn tableau(&self) -> Tableau {
        Tableau::from_word(&self.normal_form)
    }

    /// The largest letter appearing, 0 for the identity.
    pub fn rank(&self) -> u32 {
        self.normal_form.rank()
    }

    /// Length of any representative word.
    pub fn len(&self) -> usize {
        self.normal_form.len()
    }

    pub fn is_identity(&self) -> bool {
        self.normal_form.is_empty()
    }

    /// The monoid product: the class of any representative of `self`
    /// concatenated with any representative of `other`. Associative, with
    /// [`PlacticElement::identity`] as two-sided identity.
    pub fn multiply(&self, other: &PlacticElement) -> PlacticElement {
        PlacticElement::from_word(&self.normal_form.concat(&other.normal_form))
    }

    /// `self` multiplied by itself `k` times; the identity for k = 0.
    pub fn pow(&self, k: usize) -> PlacticElement {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(self.normal_form.letters());
        }
        PlacticElement::from_word(&Word::from_letters(letters))
    }
}

impl core::ops::Mul<&PlacticElement> for &PlacticElement {
    type Output = PlacticElement;

    fn mul(self, rhs: &PlacticElement) -> PlacticElement {
        self.multiply(rhs)
    }
}

impl fmt::Display for PlacticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.normal_form, f)
    }
}

impl fmt::Debug for PlacticElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlacticElement({})", self.normal_form.to_text())
    }
}

/// Which of the two Knuth relation schemas a rewrite instance uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnuthPattern {
    /// `xzy ↔ zxy` with `x ≤ y < z`; the window's first two letters swap.
    FirstKind,
    /// `yxz ↔ yzx` with `x < y ≤ z`; the window's last two letters swap.
    SecondKind,
}

/// Which way the schema's equation is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnuthDirection {
    /// `xzy → zxy` resp. `yxz → yzx`.
    LeftToRight,
    /// The inverse rewrites `zxy → xzy` resp. `yzx → yxz`.
    RightToLeft,
}

/// One applicable Knuth rewrite: a schema, an orientation, and the index of
/// the three-letter window it acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnuthMove {
    pub position: usize,
    pub pattern: KnuthPattern,
    pub direction: KnuthDirection,
}

impl KnuthMove {
    /// Does the window (a, b, c) match this schema and orientation?
    fn matches(&self, a: Letter, b: Letter, c: Letter) -> bool {
        match (self.pattern, self.direction) {
            // (a,b,c) = (x,z,y) with x ≤ y < z
            (KnuthPattern::FirstKind, KnuthDirection::LeftToRight) => a <= c && c < b,
            // (a,b,c) = (z,x,y) with x ≤ y < z
            (KnuthPattern::FirstKind, KnuthDirection::RightToLeft) => b <= c && c < a,
            // (a,b,c) = (y,x,z) with x < y ≤ z
            (KnuthPattern::SecondKind, KnuthDirection::LeftToRight) => b < a && a <= c,
            // (a,b,c) = (y,z,x) with x < y ≤ z
            (KnuthPattern::SecondKind, KnuthDirection::RightToLeft) => c < a && a <= b,
        }
    }

    /// The word after this rewrite, or `None` if the window at `position`
    /// does not match the schema in the given orientation.
    pub fn apply(&self, w: &Word) -> Option<Word> {
        let letters = w.letters();
        let i = self.position;
        if i + 3 > letters.len() || !self.matches(letters[i], letters[i + 1], letters[i + 2]) {
            return None;
        }
        let mut out = letters.to_vec();
        match self.pattern {
            KnuthPattern::FirstKind => out.swap(i, i + 1),
            KnuthPattern::SecondKind => out.swap(i + 1, i + 2),
        }
        Some(Word::from_letters(out))
    }

    /// The move that undoes this one: same window, opposite orientation.
    pub fn inverse(&self) -> KnuthMove {
        KnuthMove {
            position: self.position,
            pattern: self.pattern,
            direction: match self.direction {
                KnuthDirection::LeftToRight => KnuthDirection::RightToLeft,
                KnuthDirection::RightToLeft => KnuthDirection::LeftToRight,
            },
        }
    }
}

/// All Knuth rewrites applicable to `w`, in window order. Each window admits
/// at most one (the schemas' inequality constraints are mutually exclusive).
pub fn knuth_moves(w: &Word) -> Vec<KnuthMove> {
    let letters = w.letters();
    let mut moves = Vec::new();
    for i in 0..letters.len().saturating_sub(2) {
        for pattern in [KnuthPattern::FirstKind, KnuthPattern::SecondKind] {
            for direction in [KnuthDirection::LeftToRight, KnuthDirection::RightToLeft] {
                let mv = KnuthMove {
                    position: i,
                    pattern,
                    direction,
                };
                if mv.matches(letters[i], letters[i + 1], letters[i + 2]) {
                    moves.push(mv);
                }
            }
        }
    }
    moves
}

/// The words reachable from `w` by exactly one Knuth rewrite. Symmetric:
/// `v ∈ knuth_neighbors(u)` iff `u ∈ knuth_neighbors(v)`.
pub fn knuth_neighbors(w: &Word) -> BTreeSet<Word> {
    knuth_moves(w).iter().filter_map(|mv| mv.apply(w)).collect()
}

/// Default state budget for [`knuth_class`]: generous for the word sizes the
/// oracle is meant for, small enough to fail fast on runaway classes.
pub const DEFAULT_CLASS_BUDGET: usize = 100_000;

/// The Knuth class of some word grew past the caller's size budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassBudgetExceeded {
    pub budget: usize,
}

impl fmt::Display for ClassBudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Knuth class exceeds the budget of {} words", self.budget)
    }
}

impl core::error::Error for ClassBudgetExceeded {}

/// The full Knuth class of `w`, by breadth-first closure under
/// [`knuth_neighbors`]. This is the brute-force congruence oracle: membership
/// decides equality in the monoid without going through normal forms.
///
/// Classes grow quickly with word length, so the search carries an explicit
/// size budget (see [`DEFAULT_CLASS_BUDGET`]) and errors out rather than
/// letting a large instance allocate without bound.
pub fn knuth_class(w: &Word, max_size: usize) -> Result<BTreeSet<Word>, ClassBudgetExceeded> {
    let mut class = BTreeSet::new();
    if max_size == 0 {
        return Err(ClassBudgetExceeded { budget: max_size });
    }
    class.insert(w.clone());
    let mut queue = VecDeque::new();
    queue.push_back(w.clone());
    while let Some(current) = queue.pop_front() {
        for next in knuth_neighbors(&current) {
            if class.contains(&next) {
                continue;
            }
            if class.len() == max_size {
                return Err(ClassBudgetExceeded { budget: max_size });
            }
            class.insert(next.clone());
            queue.push_back(next);
        }
    }
    Ok(class)
}

/// A column-generator argument was out of range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorError {
    /// `i` must satisfy 1 ≤ i ≤ n.
    IndexOutOfRange { i: u32, n: u32 },
    /// A power product needs one exponent per generator f₁ … f_n.
    ExponentCount { got: usize, n: u32 },
}

impl fmt::Display for GeneratorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorError::IndexOutOfRange { i, n } => {
                write!(f, "column generator index {i} is out of range 1..={n}")
            }
            GeneratorError::ExponentCount { got, n } => {
                write!(f, "expected {n} exponents, one per column generator, got {got}")
            }
        }
    }
}

impl core::error::Error for GeneratorError {}

/// The column generator f_i of rank n: the class of the strictly decreasing
/// word n, n−1, …, i. It is its own normal form, and the generators satisfy
/// f_{i+1} · i = f_i.
pub fn column_generator(i: u32, n: u32) -> Result<PlacticElement, GeneratorError> {
    if i == 0 || i > n {
        return Err(GeneratorError::IndexOutOfRange { i, n });
    }
    let letters: Vec<Letter> = (i..=n)
        .rev()
        .map(|v| Letter::new(v).expect("v >= i >= 1"))
        .collect();
    Ok(PlacticElement::from_word(&Word::from_letters(letters)))
}

/// The product f₁^{e₁} f₂^{e₂} ⋯ f_n^{e_n} of column generators of rank n;
/// `exponents[i]` is the exponent of f_{i+1}. Words of this shape appear as
/// the left-hand factors of the ideal-intersection witnesses.
pub fn column_power_product(exponents: &[usize], n: u32) -> Result<PlacticElement, GeneratorError> {
    if exponents.len() != n as usize {
        return Err(GeneratorError::ExponentCount {
            got: exponents.len(),
            n,
        });
    }
    let mut letters = Vec::new();
    for (idx, &e) in exponents.iter().enumerate() {
        let i = idx as u32 + 1;
        for _ in 0..e {
            letters.extend((i..=n).rev().map(|v| Letter::new(v).expect("v >= 1")));
        }
    }
    Ok(PlacticElement::from_word(&Word::from_letters(letters)))
}

/// Is `w` a row, i.e. weakly increasing?
pub fn is_row(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0] <= p[1])
}

/// Is `w` a column, i.e. strictly decreasing?
pub fn is_column(w: &Word) -> bool {
    w.letters().windows(2).all(|p| p[0] > p[1])
}
