//! Constructive proof that any two principal ideals of a plactic monoid
//! intersect, packaged as equation solvers with an independent verifier.
//!
//! For elements u and v of the rank-n plactic monoid the solvers produce
//! witnesses for three equation shapes:
//!
//! - the left equation `Xu = Yv` ([`solve_left`]),
//! - the right equation `uX = vY` ([`solve_right`]),
//! - the mixed equation `uX = Yv` ([`solve_mixed`]).
//!
//! The left solver rests on two steps. When u and v already have equal
//! content, a single element X with `Xu = Xv` exists: take X =
//! f₁^{x₁} f₂^{x₂} ⋯ f_n^{x_n} with x₁ = 0 and x_i = c_{i−1}(u), where f_i
//! is the column generator (the class of the strictly decreasing word
//! n, …, i) and c_j counts the letter j. Left-multiplying by that many full
//! columns forces each letter of u or v to bump predictably, and the product
//! collapses to the closed form f₁^{c₁(u)} ⋯ f_n^{c_n(u)}, which depends on
//! the content alone ([`equal_content_witness`]). For arbitrary u and v,
//! prefixes α (with the content of v) and β (with the content of u) first
//! equalize the contents of αu and βv ([`content_equalizers`]), giving
//! X(αu) = X(βv), i.e. the pair (Xα, Xβ). The right equation follows by
//! conjugating the left solution with the Schützenberger involution, and the
//! mixed equation is immediate: X = v, Y = u.
//!
//! Infinite rank reduces to finite rank: two elements of the infinite-rank
//! monoid live in the submonoid of rank max(rank u, rank v), and a witness
//! pair there stays one in the large monoid ([`solve_infinite`]).
//!
//! Equal content is also necessary for `Xu = Xv` (and `uX = vX`): contents
//! add under multiplication, so unequal contents stay unequal after any
//! common factor.

use alloc::vec::Vec;
use core::fmt;

use crate::involution::{involute_element, RankContext};
use crate::monoid::{column_power_product, PlacticElement};

/// Why a solver refused its inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// [`equal_content_witness`] needs inputs of equal content.
    ContentMismatch,
    /// An input uses letters beyond the requested ambient rank.
    RankExceeded { rank: u32, n: u32 },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SolveError::ContentMismatch => {
                f.write_str("the two elements do not have equal content")
            }
            SolveError::RankExceeded { rank, n } => {
                write!(f, "input of rank {rank} does not fit the ambient rank {n}")
            }
        }
    }
}

impl core::error::Error for SolveError {}

/// The equation shape a [`WitnessPair`] solves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equation {
    /// Xu = Yv: the witnesses multiply on the left.
    Left,
    /// uX = vY: the witnesses multiply on the right.
    Right,
    /// uX = Yv.
    Mixed,
}

impl Equation {
    pub fn as_str(self) -> &'static str {
        match self {
            Equation::Left => "left",
            Equation::Right => "right",
            Equation::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which of the two one-sided equations [`solve_infinite`] should solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A witness X with Xu = Xv for two elements of equal content, together with
/// the exponents (x₁, …, x_n) expressing it as f₁^{x₁} ⋯ f_n^{x_n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualContentWitness {
    /// x₁ = 0 and x_i = c_{i−1}(u) for i ≥ 2: the smallest exponents the
    /// bumping argument supports (any x_i ≥ c_{i−1}(u) also works).
    pub exponents: Vec<usize>,
    /// The element f₁^{x₁} ⋯ f_n^{x_n}, in normal form.
    pub witness: PlacticElement,
}

impl EqualContentWitness {
    /// The ambient rank n the exponents refer to.
    pub fn rank(&self) -> u32 {
        self.exponents.len() as u32
    }
}

/// A solved instance of one of the three equations: the two witnesses and
/// the common value both sides multiply to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub equation: Equation,
    /// X: multiplies u (on the side named by `equation`).
    pub left: PlacticElement,
    /// Y: multiplies v.
    pub right: PlacticElement,
    /// The element in the intersection of the two principal ideals.
    pub common: PlacticElement,
}

/// For u, v of equal content and rank ≤ n, builds X = f₁^{x₁} ⋯ f_n^{x_n}
/// with x₁ = 0, x_i = c_{i−1}(u), so that Xu = Xv.
///
/// Multiplying any element of this shape by a letter i extends a full column
/// to one reaching down to letter i (column generators satisfy
/// f_{i+1}·i = f_i), so the product collapses to the closed form
/// f₁^{x₁+c₁(u)} ⋯ f_i^{x_i−c_{i−1}(u)+c_i(u)} ⋯ f_n^{x_n−c_{n−1}(u)+c_n(u)},
/// a function of the content alone — hence Xu = Xv.
pub fn equal_content_witness(
    u: &PlacticElement,
    v: &PlacticElement,
    n: u32,
) -> Result<EqualContentWitness, SolveError> {
    check_rank(u, v, n)?;
    if u.content() != v.content() {
        return Err(SolveError::ContentMismatch);
    }
    let exponents: Vec<usize> = (1..=n as usize)
        .map(|i| if i == 1 { 0 } else { u.content().count(i as u32 - 1) })
        .collect();
    let witness = column_power_product(&exponents, n).expect("one exponent per generator");
    Ok(EqualContentWitness { exponents, witness })
}

/// Prefixes that equalize contents: α is the row word of content(v), β the
/// row word of content(u), so that content(αu) = content(u) + content(v) =
/// content(βv). Any elements with those contents would do; rows are the
/// canonical choice and are already normal forms.
pub fn content_equalizers(
    u: &PlacticElement,
    v: &PlacticElement,
) -> (PlacticElement, PlacticElement) {
    let alpha = PlacticElement::from_word(&v.content().row_word());
    let beta = PlacticElement::from_word(&u.content().row_word());
    (alpha, beta)
}

/// Solves the left equation Xu = Yv at rank n: with (α, β) the content
/// equalizers and X the equal-content witness for (αu, βv), the pair
/// (Xα, Xβ) works. The intersection X·αu of the principal left ideals is
/// returned as the witness's common value.
pub fn solve_left(
    u: &PlacticElement,
    v: &PlacticElement,
    n: u32,
) -> Result<WitnessPair, SolveError> {
    check_rank(u, v, n)?;
    let (alpha, beta) = content_equalizers(u, v);
    let x = equal_content_witness(&alpha.multiply(u), &beta.multiply(v), n)?.witness;
    let left = x.multiply(&alpha);
    let right = x.multiply(&beta);
    let common = left.multiply(u);
    debug_assert_eq!(common, right.multiply(v));
    Ok(WitnessPair {
        equation: Equation::Left,
        left,
        right,
        common,
    })
}

/// Solves the right equation uX = vY at rank n by transfer through the
/// Schützenberger involution θ: solving Aθ(u) = Bθ(v) on the left and
/// applying θ (an anti-automorphism with θ∘θ = id) to both sides gives
/// u·θ(A) = v·θ(B).
pub fn solve_right(
    u: &PlacticElement,
    v: &PlacticElement,
    n: u32,
) -> Result<WitnessPair, SolveError> {
    check_rank(u, v, n)?;
    // θ needs a nonempty alphabet; n = 0 forces u = v = identity, for which
    // rank 1 solves the same instance.
    let ctx = RankContext::new(n.max(1)).expect("rank at least 1");
    let tu = involute_element(u, ctx).expect("rank checked");
    let tv = involute_element(v, ctx).expect("rank checked");
    let pair = solve_left(&tu, &tv, ctx.rank())?;
    let left = involute_element(&pair.left, ctx).expect("solution stays within rank");
    let right = involute_element(&pair.right, ctx).expect("solution stays within rank");
    let common = u.multiply(&left);
    debug_assert_eq!(common, v.multiply(&right));
    Ok(WitnessPair {
        equation: Equation::Right,
        left,
        right,
        common,
    })
}

/// Solves the mixed equation uX = Yv, which needs no construction at all:
/// X = v and Y = u make both sides uv.
pub fn solve_mixed(u: &PlacticElement, v: &PlacticElement) -> WitnessPair {
    WitnessPair {
        equation: Equation::Mixed,
        left: v.clone(),
        right: u.clone(),
        common: u.multiply(v),
    }
}

/// Solves the chosen one-sided equation in the infinite-rank monoid: u and v
/// generate ideals there too, and both lie in the rank-n submonoid for
/// n = max(rank u, rank v, 1), where the finite solver applies. A witness
/// pair at rank n remains one at infinite rank, since the products do not
/// change when computed in the larger monoid.
pub fn solve_infinite(u: &PlacticElement, v: &PlacticElement, side: Side) -> WitnessPair {
    let n = u.rank().max(v.rank()).max(1);
    match side {
        Side::Left => solve_left(u, v, n),
        Side::Right => solve_right(u, v, n),
    }
    .expect("inputs fit the inferred rank")
}

/// Recomputes both sides of the pair's equation and compares them with the
/// recorded common value. Independent of how the pair was produced.
pub fn verify_witness(pair: &WitnessPair, u: &PlacticElement, v: &PlacticElement) -> bool {
    let (lhs, rhs) = match pair.equation {
        Equation::Left => (pair.left.multiply(u), pair.right.multiply(v)),
        Equation::Right => (u.multiply(&pair.left), v.multiply(&pair.right)),
        Equation::Mixed => (u.multiply(&pair.left), pair.right.multiply(v)),
    };
    lhs == pair.common && rhs == pair.common
}

fn check_rank(u: &PlacticElement, v: &PlacticElement, n: u32) -> Result<(), SolveError> {
    let rank = u.rank().max(v.rank());
    if rank > n {
        Err(SolveError::RankExceeded { rank, n })
    } else {
        Ok(())
    }
}
