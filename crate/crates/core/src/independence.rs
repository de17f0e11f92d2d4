//! Pairwise non-attacking placements: the classical n-queens condition in
//! d dimensions — decide, exhibit, or count.
//!
//! Searches place queens in strictly increasing cell-index order, so every
//! placement is generated exactly once and counts are counts of sets, not
//! of ordered tuples.

use std::collections::HashMap;
use std::ops::ControlFlow;
use std::rc::Rc;

use num_bigint::BigUint;

use crate::bits::Bits;
use crate::board::{coords_attack, BoardSpec};
use crate::domination::Placement;
use crate::error::{Error, Result};

/// A request for `m` pairwise non-attacking queens on a board.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndependenceQuery {
    board: BoardSpec,
    m: u64,
}

impl IndependenceQuery {
    /// Requires `m <= n^d`; more queens than cells is a malformed question
    /// rather than a negative answer.
    pub fn new(board: BoardSpec, m: u64) -> Result<Self> {
        if m > board.cell_count() {
            return Err(Error::invalid(format!(
                "cannot request {} queens on a board with {} cells",
                m,
                board.cell_count()
            )));
        }
        Ok(IndependenceQuery { board, m })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn queens(&self) -> u64 {
        self.m
    }
}

/// True iff no two queens of `p` attack each other.
pub fn is_independent(p: &Placement) -> bool {
    let queens = p.queens();
    for (i, a) in queens.iter().enumerate() {
        for b in &queens[i + 1..] {
            if coords_attack(a.coords(), b.coords()) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically least (by ascending queen index sequence)
/// placement of exactly `m` pairwise non-attacking queens, or `None` when
/// no such placement exists.
pub fn exists_independent(q: &IndependenceQuery) -> Option<Placement> {
    let mut witness = None;
    search(q, |indices| {
        witness = Some(Placement::from_indices(*q.board(), indices));
        ControlFlow::Break(())
    });
    witness
}

/// Exact number of `m`-subsets of cells that are pairwise non-attacking.
/// `m = 0` counts the empty placement, giving 1.
pub fn count_independent(q: &IndependenceQuery) -> BigUint {
    let mut count = BigUint::ZERO;
    search(q, |_| {
        count += 1u32;
        ControlFlow::Continue(())
    });
    count
}

/// Backtracking core shared by the decision and counting entry points.
/// Candidate cells run in ascending index order above the last queen;
/// cells attacked by any placed queen are masked out, and a branch dies
/// once fewer cells remain than queens still to place.
fn search(q: &IndependenceQuery, mut visit: impl FnMut(&[u64]) -> ControlFlow<()>) {
    let mut attacked = AttackTable::new(*q.board());
    let forbidden = Bits::new(q.board().cell_count());
    let mut placed = Vec::with_capacity(q.m as usize);
    let _ = recurse(&mut attacked, &forbidden, &mut placed, 0, q.m, &mut visit);
}

fn recurse(
    attacked: &mut AttackTable,
    forbidden: &Bits,
    placed: &mut Vec<u64>,
    start: u64,
    m: u64,
    visit: &mut impl FnMut(&[u64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let remaining = m - placed.len() as u64;
    if remaining == 0 {
        return visit(placed);
    }
    let cells = attacked.board.cell_count();
    // Leave room for the queens still to come.
    for cell in start..=cells - remaining {
        if forbidden.get(cell) {
            continue;
        }
        let mut next = forbidden.clone();
        next.union_with(&attacked.mask(cell));
        placed.push(cell);
        let flow = recurse(attacked, &next, placed, cell + 1, m, visit);
        placed.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Lazily cached attacked-cell masks, one per queen cell.
struct AttackTable {
    board: BoardSpec,
    masks: HashMap<u64, Rc<Bits>>,
}

impl AttackTable {
    fn new(board: BoardSpec) -> Self {
        AttackTable {
            board,
            masks: HashMap::new(),
        }
    }

    fn mask(&mut self, cell: u64) -> Rc<Bits> {
        if let Some(m) = self.masks.get(&cell) {
            return Rc::clone(m);
        }
        let mut bits = Bits::new(self.board.cell_count());
        for a in self.board.attacked_indices(cell) {
            bits.set(a);
        }
        let rc = Rc::new(bits);
        self.masks.insert(cell, Rc::clone(&rc));
        rc
    }
}
