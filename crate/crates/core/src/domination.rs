//! Queens domination: coverage, analytic bounds, and the exact minimum
//! number of queens attacking every cell of a d-dimensional board.
//!
//! The exact solve is an iterative-deepening branch and bound. Depths start
//! at the analytic lower bound `ceil(2 n^(d-1) / (3^d - 1))` — one queen
//! reaches at most `n (3^d - 1) / 2` cells, i.e. at most `n^d / 2` of them
//! once per-line clipping is accounted for — so the first depth that admits
//! a dominating placement is provably the domination number.

use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bits::Bits;
use crate::board::{BoardSpec, Position};
use crate::error::{Error, Result};

/// `ceil(2 n^(d-1) / (3^d - 1))`: no smaller placement can cover `n^d`
/// cells. Exact integer arithmetic; errors only when the bound itself does
/// not fit in `u64`.
pub fn lower_bound(n: u64, d: u32) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::invalid("size and dimension must be at least 1"));
    }
    let numerator = BigUint::from(2u32) * BigUint::from(n).pow(d - 1);
    let denominator = BigUint::from(3u32).pow(d) - 1u32;
    big_div_ceil_to_u64(numerator, denominator, "lower bound")
}

/// `ceil(n^(d-1) / d)`, a reported-but-unverified upper bound on the
/// domination number. Exposed for auditing only; [`min_dominating`] never
/// consults it, and `audit` runs compare it against exact solves.
pub fn reported_upper_bound(n: u64, d: u32) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::invalid("size and dimension must be at least 1"));
    }
    let numerator = BigUint::from(n).pow(d - 1);
    big_div_ceil_to_u64(numerator, BigUint::from(d), "reported upper bound")
}

fn big_div_ceil_to_u64(numerator: BigUint, denominator: BigUint, what: &'static str) -> Result<u64> {
    let value = (numerator + &denominator - 1u32) / denominator;
    u64::try_from(&value).map_err(|_| Error::Overflow(what))
}

/// Asks whether `n^k` queens are provably too few to dominate the `n^d`
/// board.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsufficiencyQuery {
    n: u64,
    d: u32,
    k: u32,
}

impl InsufficiencyQuery {
    /// Requires `k <= d - 1`; beyond that `n^(d-1)` hyperplane placements
    /// dominate and the question is vacuous.
    pub fn new(n: u64, d: u32, k: u32) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::invalid("size and dimension must be at least 1"));
        }
        if k >= d {
            return Err(Error::invalid(format!(
                "exponent k = {} must be at most d - 1 = {}",
                k,
                d - 1
            )));
        }
        Ok(InsufficiencyQuery { n, d, k })
    }

    pub fn size(&self) -> u64 {
        self.n
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }
}

/// True iff `2 n^(d-k-1) > 3^d - 1`: each of `n^k` queens would have to
/// cover more cells than one queen can reach, so `n^k` queens cannot
/// dominate. `k = 1` is the classic "n queens stop sufficing" threshold.
pub fn insufficiency_check(q: &InsufficiencyQuery) -> bool {
    let lhs = BigUint::from(2u32) * BigUint::from(q.n).pow(q.d - q.k - 1);
    let rhs = BigUint::from(3u32).pow(q.d) - 1u32;
    lhs > rhs
}

/// Smallest board size whose `n^k` queens are insufficient, i.e. the least
/// `n` with `2 n^(d-k-1) > 3^d - 1`. Needs `k <= d - 2` so the left side
/// actually grows with `n`.
pub fn min_insufficient_n(d: u32, k: u32) -> Result<u64> {
    if d == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    if k + 2 > d {
        return Err(Error::invalid(format!(
            "exponent k = {} must be at most d - 2 = {} for a finite threshold",
            k,
            d as i64 - 2
        )));
    }
    let e = d - k - 1;
    let rhs = BigUint::from(3u32).pow(d) - 1u32;
    let check = |n: &BigUint| BigUint::from(2u32) * n.pow(e) > rhs;

    let mut hi = BigUint::from(1u32);
    while !check(&hi) {
        hi *= 2u32;
    }
    let mut lo = BigUint::from(1u32); // check(0) would be false; 1 may already pass
    if check(&lo) {
        return Ok(1);
    }
    // Invariant: !check(lo), check(hi).
    while &lo + 1u32 < hi {
        let mid = (&lo + &hi) / 2u32;
        if check(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    u64::try_from(&hi).map_err(|_| Error::Overflow("insufficiency threshold"))
}

/// A set of queens on one board, stored sorted by cell index with
/// duplicates removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    board: BoardSpec,
    queens: Vec<Position>,
}

impl Placement {
    /// Validates every queen against the board; input order and repeats are
    /// irrelevant (set semantics).
    pub fn new(board: BoardSpec, queens: Vec<Position>) -> Result<Self> {
        let mut indexed = queens
            .into_iter()
            .map(|q| Ok((board.encode(&q)?, q)))
            .collect::<Result<Vec<(u64, Position)>>>()?;
        indexed.sort_unstable_by_key(|(i, _)| *i);
        indexed.dedup_by_key(|(i, _)| *i);
        Ok(Placement {
            board,
            queens: indexed.into_iter().map(|(_, q)| q).collect(),
        })
    }

    pub fn empty(board: BoardSpec) -> Self {
        Placement {
            board,
            queens: Vec::new(),
        }
    }

    pub(crate) fn from_indices(board: BoardSpec, indices: &[u64]) -> Self {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Placement {
            queens: sorted
                .iter()
                .map(|&i| board.decode(i).expect("index in range"))
                .collect(),
            board,
        }
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    /// Queens in ascending cell-index order.
    pub fn queens(&self) -> &[Position] {
        &self.queens
    }

    pub fn len(&self) -> usize {
        self.queens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.queens.is_empty()
    }
}

/// Serializes as the bare queen list, `[[coords...], ...]`.
impl Serialize for Placement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.queens.serialize(serializer)
    }
}

/// Bitset over cell indices marking cells occupied or attacked by a
/// placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageMask {
    board: BoardSpec,
    covered: Bits,
}

impl CoverageMask {
    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn covered_count(&self) -> u64 {
        self.covered.count_ones()
    }

    pub fn is_complete(&self) -> bool {
        self.covered.is_full()
    }

    pub fn is_covered(&self, p: &Position) -> Result<bool> {
        Ok(self.covered.get(self.board.encode(p)?))
    }

    /// Lowest-index uncovered cell, if any.
    pub fn first_uncovered(&self) -> Option<Position> {
        self.covered
            .first_zero()
            .map(|i| self.board.decode(i).expect("index in range"))
    }
}

/// Cells covered by `p`: every queen's cell plus everything those queens
/// attack.
pub fn coverage(p: &Placement) -> CoverageMask {
    let board = *p.board();
    let mut covered = Bits::new(board.cell_count());
    for q in p.queens() {
        let i = board.encode(q).expect("queen in-board by construction");
        covered.set(i);
        for a in board.attacked_indices(i) {
            covered.set(a);
        }
    }
    CoverageMask { board, covered }
}

/// Whether every cell of the board is occupied or attacked.
pub fn is_dominating(p: &Placement) -> bool {
    coverage(p).is_complete()
}

/// Deterministic greedy dominating placement: repeatedly add the cell
/// covering the most currently-uncovered cells, ties to the lowest cell
/// index. Seeds the exact search with an upper bound; makes no optimality
/// claim.
pub fn greedy_dominating(board: &BoardSpec) -> Placement {
    let cells = board.cell_count();
    let mut covered = Bits::new(cells);
    let mut queens: Vec<u64> = Vec::new();
    while !covered.is_full() {
        let mut best_gain = 0u64;
        let mut best_cell = 0u64;
        for c in 0..cells {
            let mut gain = u64::from(!covered.get(c));
            for a in board.attacked_indices(c) {
                gain += u64::from(!covered.get(a));
            }
            if gain > best_gain {
                best_gain = gain;
                best_cell = c;
            }
        }
        debug_assert!(best_gain > 0, "an uncovered cell always gains itself");
        covered.set(best_cell);
        for a in board.attacked_indices(best_cell) {
            covered.set(a);
        }
        queens.push(best_cell);
    }
    Placement::from_indices(*board, &queens)
}

/// Whether a solve proved its answer exact or only bracketed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Optimal,
    BoundsOnly,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::BoundsOnly => "bounds-only",
        })
    }
}

/// Knobs for [`min_dominating_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Cap on branching-node expansions, cumulative across deepening
    /// rounds. `None` = unlimited. Exhaustion downgrades the result to
    /// bounds-only; it never mislabels an answer as optimal.
    pub node_budget: Option<u64>,
    /// Cut subtrees whose uncovered cells exceed what the remaining queens
    /// can reach (`remaining * n (3^d - 1) / 2`). Sound, on by default.
    pub coverage_prune: bool,
    /// Memoize exhausted states up to board symmetry (the `2^d d!` axis
    /// permutations and reflections). Off by default: it trades memory for
    /// time and only pays off on highly symmetric hard instances.
    pub symmetry_reduction: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            node_budget: None,
            coverage_prune: true,
            symmetry_reduction: false,
        }
    }
}

/// Outcome of an exact domination solve.
///
/// With status [`SolveStatus::Optimal`], `gamma` is the domination number,
/// `witness` is a dominating placement of that size, and `lb == gamma == ub`.
/// With [`SolveStatus::BoundsOnly`] (node budget ran out), `lb <= ub` bracket
/// the true value, `witness` is a dominating placement of size `ub`, and
/// `gamma` repeats `ub` as the best proven-valid answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: u64,
    pub witness: Placement,
    pub status: SolveStatus,
    pub lb: u64,
    pub ub: u64,
    pub nodes_explored: u64,
}

impl Serialize for DominationResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("DominationResult", 8)?;
        st.serialize_field("n", &self.witness.board().size())?;
        st.serialize_field("d", &self.witness.board().dimension())?;
        st.serialize_field("gamma", &self.gamma)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("lb", &self.lb)?;
        st.serialize_field("ub", &self.ub)?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("nodes", &self.nodes_explored)?;
        st.end()
    }
}

/// Exact minimum dominating placement with default options (unlimited
/// unless `node_budget` is given).
pub fn min_dominating(board: &BoardSpec, node_budget: Option<u64>) -> DominationResult {
    min_dominating_with(
        board,
        &SolveOptions {
            node_budget,
            ..SolveOptions::default()
        },
    )
}

/// Iterative-deepening exact solve. Tries queen counts from the analytic
/// lower bound upward; exhausting depth `m - 1` proves no `m - 1`-queen
/// placement dominates, so the first feasible depth is the domination
/// number. Deterministic for identical inputs.
pub fn min_dominating_with(board: &BoardSpec, options: &SolveOptions) -> DominationResult {
    let n = board.size() as u64;
    let d = board.dimension();
    let mut lb = lower_bound(n, d).expect("bound fits u64 whenever n^d does");
    let greedy = greedy_dominating(board);
    let greedy_size = greedy.len() as u64;

    let mut searcher = Searcher::new(*board, options);
    let mut placed = Vec::new();
    let empty = Bits::new(board.cell_count());
    let mut depth = lb;
    while depth < greedy_size {
        placed.clear();
        match searcher.dfs(&empty, &mut placed, depth) {
            Outcome::Found(indices) => {
                debug_assert_eq!(indices.len() as u64, depth);
                return DominationResult {
                    gamma: depth,
                    witness: Placement::from_indices(*board, &indices),
                    status: SolveStatus::Optimal,
                    lb: depth,
                    ub: depth,
                    nodes_explored: searcher.nodes,
                };
            }
            Outcome::Exhausted => {
                lb = depth + 1;
                depth += 1;
            }
            Outcome::Budget => {
                return DominationResult {
                    gamma: greedy_size,
                    witness: greedy,
                    status: SolveStatus::BoundsOnly,
                    lb,
                    ub: greedy_size,
                    nodes_explored: searcher.nodes,
                };
            }
        }
    }
    // Every depth below the greedy size is exhausted (or was already ruled
    // out analytically), so the greedy placement is optimal.
    DominationResult {
        gamma: greedy_size,
        witness: greedy,
        status: SolveStatus::Optimal,
        lb: greedy_size,
        ub: greedy_size,
        nodes_explored: searcher.nodes,
    }
}

enum Outcome {
    Found(Vec<u64>),
    Exhausted,
    Budget,
}

/// Lazily built per-cell coverage masks (`{cell} ∪ attacked(cell)`), shared
/// across deepening rounds.
struct CoverTable {
    board: BoardSpec,
    masks: HashMap<u64, Rc<Bits>>,
}

impl CoverTable {
    fn new(board: BoardSpec) -> Self {
        CoverTable {
            board,
            masks: HashMap::new(),
        }
    }

    fn mask(&mut self, cell: u64) -> Rc<Bits> {
        if let Some(m) = self.masks.get(&cell) {
            return Rc::clone(m);
        }
        let mut bits = Bits::new(self.board.cell_count());
        bits.set(cell);
        for a in self.board.attacked_indices(cell) {
            bits.set(a);
        }
        let rc = Rc::new(bits);
        self.masks.insert(cell, Rc::clone(&rc));
        rc
    }
}

struct Searcher {
    table: CoverTable,
    cells: u64,
    /// Reach cap per queen, `n (3^d - 1) / 2`, saturated if it exceeds u128.
    max_cover: u128,
    coverage_prune: bool,
    budget: Option<u64>,
    nodes: u64,
    memo: Option<SymmetryMemo>,
}

impl Searcher {
    fn new(board: BoardSpec, options: &SolveOptions) -> Self {
        let max_cover = 3u128
            .checked_pow(board.dimension())
            .map(|p| (p - 1) / 2 * board.size() as u128)
            .unwrap_or(u128::MAX);
        Searcher {
            table: CoverTable::new(board),
            cells: board.cell_count(),
            max_cover,
            coverage_prune: options.coverage_prune,
            budget: options.node_budget,
            nodes: 0,
            memo: options.symmetry_reduction.then(|| SymmetryMemo::new(board)),
        }
    }

    /// Expands one node: pick the lowest-index uncovered cell and try every
    /// cell covering it (itself plus its attackers) in ascending index
    /// order. Complete because any dominating placement must contain one of
    /// those covers.
    fn dfs(&mut self, covered: &Bits, placed: &mut Vec<u64>, depth: u64) -> Outcome {
        if covered.is_full() {
            return Outcome::Found(placed.clone());
        }
        let remaining = depth - placed.len() as u64;
        if remaining == 0 {
            return Outcome::Exhausted;
        }
        if self.coverage_prune {
            let uncovered = self.cells - covered.count_ones();
            if uncovered as u128 > remaining as u128 * self.max_cover {
                return Outcome::Exhausted;
            }
        }
        if let Some(memo) = &self.memo {
            if memo.contains(covered, remaining) {
                return Outcome::Exhausted;
            }
        }
        if let Some(budget) = self.budget {
            if self.nodes >= budget {
                return Outcome::Budget;
            }
        }
        self.nodes += 1;

        let target = covered.first_zero().expect("mask is not full");
        let candidates: Vec<u64> = self.table.mask(target).ones_iter().collect();
        for cand in candidates {
            if placed.contains(&cand) {
                continue;
            }
            let mut next = covered.clone();
            next.union_with(&self.table.mask(cand));
            placed.push(cand);
            match self.dfs(&next, placed, depth) {
                Outcome::Exhausted => {
                    placed.pop();
                }
                found_or_budget => {
                    placed.pop();
                    return found_or_budget;
                }
            }
        }
        if let Some(memo) = &mut self.memo {
            memo.record(covered, remaining);
        }
        Outcome::Exhausted
    }
}

/// Remembers covered-masks whose subtrees were exhausted, keyed by a
/// canonical form under the board's full symmetry group, so congruent
/// states are not re-searched. Only records fully-explored states; budget
/// aborts are never memoized.
struct SymmetryMemo {
    /// One cell-index permutation per group element (axis permutation
    /// composed with per-axis reflections), identity included.
    transforms: Vec<Vec<u64>>,
    blocks: usize,
    exhausted: HashSet<(Vec<u64>, u64)>,
}

impl SymmetryMemo {
    fn new(board: BoardSpec) -> Self {
        let d = board.dimension() as usize;
        let n = board.size();
        let cells = board.cell_count();
        let mut transforms = Vec::new();
        for perm in permutations(d) {
            for signs in 0u32..(1 << d) {
                let mut table = Vec::with_capacity(cells as usize);
                for i in 0..cells {
                    let p = board.decode(i).expect("index in range");
                    let coords: Vec<u32> = (0..d)
                        .map(|k| {
                            let c = p.coords()[perm[k]];
                            if signs >> k & 1 == 1 {
                                n - 1 - c
                            } else {
                                c
                            }
                        })
                        .collect();
                    let q = Position::new(coords).expect("dimension preserved");
                    table.push(board.encode(&q).expect("image is in-board"));
                }
                transforms.push(table);
            }
        }
        SymmetryMemo {
            transforms,
            blocks: ((cells + 63) / 64) as usize,
            exhausted: HashSet::new(),
        }
    }

    fn canonical(&self, covered: &Bits) -> Vec<u64> {
        let mut best: Option<Vec<u64>> = None;
        for table in &self.transforms {
            let mut blocks = vec![0u64; self.blocks];
            for i in covered.ones_iter() {
                let j = table[i as usize];
                blocks[(j / 64) as usize] |= 1u64 << (j % 64);
            }
            if best.as_ref().is_none_or(|b| blocks < *b) {
                best = Some(blocks);
            }
        }
        best.expect("group has at least the identity")
    }

    fn contains(&self, covered: &Bits, remaining: u64) -> bool {
        self.exhausted
            .contains(&(self.canonical(covered), remaining))
    }

    fn record(&mut self, covered: &Bits, remaining: u64) {
        self.exhausted.insert((self.canonical(covered), remaining));
    }
}

/// All permutations of `0..d` (Heap's algorithm), deterministic order.
fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut items: Vec<usize> = (0..d).collect();
    let mut out = vec![items.clone()];
    let mut counters = vec![0usize; d];
    let mut i = 1;
    while i < d {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            out.push(items.clone());
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(n: u32, d: u32) -> BoardSpec {
        BoardSpec::new(d, n).unwrap()
    }

    fn placement(n: u32, d: u32, queens: &[&[u32]]) -> Placement {
        let b = board(n, d);
        Placement::new(
            b,
            queens
                .iter()
                .map(|q| Position::new(q.to_vec()).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound(8, 3).unwrap(), 5); // ceil(128/26)
        assert_eq!(lower_bound(3, 3).unwrap(), 1); // ceil(18/26)
        assert_eq!(lower_bound(14, 3).unwrap(), 16); // ceil(392/26), exceeds n
        assert_eq!(lower_bound(1, 1).unwrap(), 1);
        assert_eq!(lower_bound(100, 1).unwrap(), 1);
        assert!(lower_bound(0, 2).is_err());
        assert!(lower_bound(2, 0).is_err());
    }

    #[test]
    fn lower_bound_stays_exact_past_machine_width() {
        // 2 * 3^40 no longer fits in u64, yet the quotient is exactly 1
        // (the numerator is always below 3^41 - 1).
        assert_eq!(lower_bound(3, 41).unwrap(), 1);
        // Here the quotient itself leaves u64: explicit error, no wrap.
        assert!(matches!(
            lower_bound(u64::MAX, 4),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn reported_upper_bound_examples() {
        assert_eq!(reported_upper_bound(8, 2).unwrap(), 4); // ceil(8/2)
        assert_eq!(reported_upper_bound(3, 3).unwrap(), 3); // ceil(9/3)
        assert_eq!(reported_upper_bound(1, 7).unwrap(), 1);
        assert!(matches!(
            reported_upper_bound(u64::MAX, 3),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn insufficiency_examples() {
        let q = |n, d, k| InsufficiencyQuery::new(n, d, k).unwrap();
        assert!(insufficiency_check(&q(14, 3, 1))); // 28 > 26
        assert!(!insufficiency_check(&q(13, 3, 1))); // 26 > 26 fails
        assert!(insufficiency_check(&q(7, 4, 1))); // 98 > 80
        assert!(InsufficiencyQuery::new(5, 3, 3).is_err());
        assert!(InsufficiencyQuery::new(5, 3, 4).is_err());
        assert!(InsufficiencyQuery::new(5, 3, 2).is_ok());
    }

    #[test]
    fn min_insufficient_n_examples() {
        assert_eq!(min_insufficient_n(3, 1).unwrap(), 14);
        assert_eq!(min_insufficient_n(4, 1).unwrap(), 7);
        assert_eq!(min_insufficient_n(4, 2).unwrap(), 41);
        assert!(min_insufficient_n(3, 2).is_err());
        assert!(min_insufficient_n(1, 0).is_err());
        // Thresholds agree with the check on both sides of the fence.
        for (d, k) in [(3, 1), (4, 1), (4, 2), (5, 1), (5, 3), (6, 2)] {
            let t = min_insufficient_n(d, k).unwrap();
            assert!(insufficiency_check(
                &InsufficiencyQuery::new(t, d, k).unwrap()
            ));
            if t > 1 {
                assert!(!insufficiency_check(
                    &InsufficiencyQuery::new(t - 1, d, k).unwrap()
                ));
            }
        }
    }

    #[test]
    fn placement_sorts_dedups_and_validates() {
        let p = placement(4, 2, &[&[3, 2], &[0, 0], &[3, 2]]);
        assert_eq!(p.len(), 2);
        assert_eq!(p.queens()[0].coords(), &[0, 0]);
        assert_eq!(p.queens()[1].coords(), &[3, 2]);
        assert!(Placement::new(
            board(4, 2),
            vec![Position::new(vec![4, 0]).unwrap()]
        )
        .is_err());
    }

    #[test]
    fn coverage_examples() {
        let full = coverage(&placement(3, 3, &[&[1, 1, 1]]));
        assert_eq!(full.covered_count(), 27);
        assert!(full.is_complete());
        assert_eq!(full.first_uncovered(), None);

        let none = coverage(&Placement::empty(board(4, 2)));
        assert_eq!(none.covered_count(), 0);

        let tiny = coverage(&placement(2, 2, &[&[0, 0]]));
        assert_eq!(tiny.covered_count(), 4);
    }

    #[test]
    fn is_dominating_examples() {
        assert!(is_dominating(&placement(3, 2, &[&[1, 1]])));
        let corner = placement(4, 2, &[&[0, 0]]);
        assert!(!is_dominating(&corner));
        assert!(!coverage(&corner)
            .is_covered(&Position::new(vec![1, 3]).unwrap())
            .unwrap());
        assert!(is_dominating(&placement(1, 4, &[&[0, 0, 0, 0]])));
    }

    #[test]
    fn greedy_examples() {
        let g = greedy_dominating(&board(3, 2));
        assert_eq!(g.len(), 1);
        assert!(is_dominating(&g));

        let g = greedy_dominating(&board(1, 1));
        assert_eq!(g.queens()[0].coords(), &[0]);

        let g = greedy_dominating(&board(5, 2));
        assert!(g.len() <= 5);
        assert!(is_dominating(&g));
    }

    #[test]
    fn min_dominating_small_boards() {
        let r = min_dominating(&board(3, 2), None);
        assert_eq!(r.gamma, 1);
        assert_eq!(r.status, SolveStatus::Optimal);
        assert!(is_dominating(&r.witness));

        let r = min_dominating(&board(1, 3), None);
        assert_eq!(r.gamma, 1);
        assert_eq!(r.witness.queens()[0].coords(), &[0, 0, 0]);

        let r = min_dominating(&board(4, 2), None);
        assert_eq!(r.gamma, 2);
        assert_eq!((r.lb, r.ub), (2, 2));
        assert!(is_dominating(&r.witness));
        assert_eq!(r.witness.len(), 2);

        let r = min_dominating(&board(5, 2), None);
        assert_eq!(r.gamma, 3);
    }

    #[test]
    fn min_dominating_is_deterministic() {
        let a = min_dominating(&board(5, 2), None);
        let b = min_dominating(&board(5, 2), None);
        assert_eq!(a, b);
    }

    #[test]
    fn budget_exhaustion_degrades_to_bounds() {
        // One expansion spends the whole budget partway through depth 2 of
        // the 5x5 board, so only the analytic lb = 2 and the greedy ub
        // survive.
        let r = min_dominating(&board(5, 2), Some(1));
        assert_eq!(r.status, SolveStatus::BoundsOnly);
        assert_eq!(r.lb, 2);
        assert!(r.ub >= 3);
        assert_eq!(r.gamma, r.ub);
        assert_eq!(r.nodes_explored, 1);
        assert!(is_dominating(&r.witness));
        assert_eq!(r.witness.len() as u64, r.ub);
    }

    #[test]
    fn budgeted_run_may_still_prove_optimality_by_exhaustion() {
        // Depth 1 on the 4x4 board is a single expansion; exhausting it
        // lifts lb to 2, meeting the greedy witness, so the answer is exact
        // even though no further expansion was allowed.
        let r = min_dominating(&board(4, 2), Some(1));
        assert_eq!(r.status, SolveStatus::Optimal);
        assert_eq!(r.gamma, 2);
        assert_eq!(r.nodes_explored, 1);
    }

    #[test]
    fn prune_and_symmetry_options_do_not_change_gamma() {
        for (n, d) in [(4, 2), (5, 2), (2, 3), (3, 3)] {
            let b = board(n, d);
            let baseline = min_dominating(&b, None);
            let unpruned = min_dominating_with(
                &b,
                &SolveOptions {
                    coverage_prune: false,
                    ..SolveOptions::default()
                },
            );
            let symmetric = min_dominating_with(
                &b,
                &SolveOptions {
                    symmetry_reduction: true,
                    ..SolveOptions::default()
                },
            );
            assert_eq!(baseline.gamma, unpruned.gamma, "prune changed ({n},{d})");
            assert_eq!(baseline.gamma, symmetric.gamma, "memo changed ({n},{d})");
            assert!(symmetric.nodes_explored <= baseline.nodes_explored);
            assert!(is_dominating(&symmetric.witness));
        }
    }

    #[test]
    fn result_serializes_in_report_order() {
        let r = min_dominating(&board(3, 2), None);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"n":3,"d":2,"gamma":1,"status":"optimal","lb":1,"ub":1,"witness":[[1,1]],"nodes":0}"#
        );
    }

    #[test]
    fn permutations_cover_the_symmetric_group() {
        assert_eq!(permutations(1).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        let mut perms = permutations(4);
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), 24);
    }
}
