//! Queens on d-dimensional boards: attack geometry, exact domination
//! solving, and non-attacking placement search.
//!
//! A queen on an `n^d` board moves along every direction in
//! `{-1, 0, +1}^d` except the zero vector. [`board`] models that geometry
//! (vectors, lines, rays, the attack predicate, cell indexing),
//! [`domination`] computes analytic bounds and the exact minimum number of
//! queens covering every cell, and [`independence`] decides and counts
//! pairwise non-attacking placements.
//!
//! All arithmetic is exact: machine integers with checked growth where a
//! formula can leave `u64`, big integers for enumeration counts. Nothing
//! here uses floating point, and every search result is deterministic for
//! identical inputs.
//!
//! ```
//! use hyperqueens::{BoardSpec, min_dominating};
//!
//! let board = BoardSpec::new(2, 3).unwrap(); // 3x3
//! let result = min_dominating(&board, None);
//! assert_eq!(result.gamma, 1); // the center queen covers everything
//! ```

mod bits;

pub mod board;
pub mod domination;
pub mod error;
pub mod independence;

pub use board::{
    attack_line_count, attack_vector_count, enumerate_attack_lines, enumerate_attack_vectors,
    AttackLine, AttackVector, BoardSpec, Position, Ray, DEFAULT_CELL_CAP,
};
pub use domination::{
    coverage, greedy_dominating, insufficiency_check, is_dominating, lower_bound, min_dominating,
    min_dominating_with, min_insufficient_n, reported_upper_bound, CoverageMask, DominationResult,
    InsufficiencyQuery, Placement, SolveOptions, SolveStatus,
};
pub use error::{Error, Result};
pub use independence::{
    count_independent, exists_independent, is_independent, IndependenceQuery,
};
