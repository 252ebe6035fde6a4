//! Plactic monoids of finite and infinite rank.
//!
//! Words over the ordered alphabet {1, 2, 3, …} are identified by the Knuth
//! relations; each congruence class contains exactly one semistandard Young
//! tableau, whose row reading serves as the normal form. On top of that
//! normal-form arithmetic the crate builds constructive solvers for the
//! ideal-intersection equations `Xu = Yv`, `uX = vY` and `uX = Yv`, which
//! witness that any two principal ideals of a plactic monoid intersect.
//!
//! - [`word`]: letters, words, contents and their text formats;
//! - [`tableau`]: semistandard Young tableaux, Schensted row insertion, row
//!   and column readings;
//! - [`monoid`]: normal forms, multiplication, Knuth rewriting and a
//!   brute-force congruence oracle, column generators;
//! - [`involution`]: the Schützenberger involution on words and elements;
//! - [`reversibility`]: the equation solvers and their verifier.
//!
//! ```
//! use plactic::{solve_left, verify_witness, PlacticElement, Word};
//!
//! let u = PlacticElement::from_word(&"1".parse::<Word>().unwrap());
//! let v = PlacticElement::from_word(&"2".parse::<Word>().unwrap());
//! let pair = solve_left(&u, &v, 2).unwrap();
//! assert!(verify_witness(&pair, &u, &v));
//! ```
//!
//! The library is `no_std` (it requires `alloc`). The command-line interface
//! and the JSON witness format live in the companion `plactic-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod involution;
pub mod monoid;
pub mod reversibility;
pub mod tableau;
pub mod word;

pub use involution::{involute_element, involute_word, InvolutionError, RankContext};
pub use monoid::{
    column_generator, column_power_product, is_column, is_row, knuth_class, knuth_moves,
    knuth_neighbors, ClassBudgetExceeded, GeneratorError, KnuthDirection, KnuthMove, KnuthPattern,
    PlacticElement, DEFAULT_CLASS_BUDGET,
};
pub use reversibility::{
    content_equalizers, equal_content_witness, solve_infinite, solve_left, solve_mixed,
    solve_right, verify_witness, EqualContentWitness, Equation, Side, SolveError, WitnessPair,
};
pub use tableau::{Tableau, TableauError};
pub use word::{Content, FormatWordError, Letter, ParseWordError, Word, WordStyle};
