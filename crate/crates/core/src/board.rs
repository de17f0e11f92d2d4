//! d-dimensional chess spaces and the queen attack model.
//!
//! A board of size `n` in dimension `d` has `n^d` cells addressed by
//! coordinate vectors in `[0, n)^d`. A queen moves along direction vectors
//! with per-axis steps in `{-1, 0, +1}` (not all zero), giving `3^d - 1`
//! attack vectors; opposite vectors pair up into `(3^d - 1) / 2` attack
//! lines. All arithmetic is exact integer arithmetic.
//!
//! Cells also carry a mixed-radix index in `[0, n^d)` with coordinate 1 as
//! the least-significant digit; every ordering and tie-break in the crate
//! refers to this index.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on `n^d`, the number of cells a board may have.
pub const DEFAULT_CELL_CAP: u64 = 1 << 24;

/// A d-dimensional chess space: dimension `d` and cells per axis `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoardSpec {
    dimension: u32,
    size: u32,
    cells: u64,
}

impl BoardSpec {
    /// Builds a board, enforcing `d >= 1`, `n >= 1`, and
    /// `n^d <= DEFAULT_CELL_CAP`.
    pub fn new(dimension: u32, size: u32) -> Result<Self> {
        Self::with_cell_cap(dimension, size, DEFAULT_CELL_CAP)
    }

    /// Like [`BoardSpec::new`] with an explicit cell cap.
    pub fn with_cell_cap(dimension: u32, size: u32, cell_cap: u64) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::invalid("dimension must be at least 1"));
        }
        if size == 0 {
            return Err(Error::invalid("size must be at least 1"));
        }
        let cells = (size as u64)
            .checked_pow(dimension)
            .ok_or(Error::Overflow("n^d"))?;
        if cells > cell_cap {
            return Err(Error::CellCapExceeded {
                cells,
                cap: cell_cap,
            });
        }
        Ok(BoardSpec {
            dimension,
            size,
            cells,
        })
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Total number of cells, `n^d`.
    pub fn cell_count(&self) -> u64 {
        self.cells
    }

    pub fn contains(&self, p: &Position) -> bool {
        p.dimension() == self.dimension && p.coords().iter().all(|&c| c < self.size)
    }

    /// Validated position construction for this board.
    pub fn position(&self, coords: Vec<u32>) -> Result<Position> {
        let p = Position::new(coords)?;
        self.check_position(&p)?;
        Ok(p)
    }

    pub(crate) fn check_position(&self, p: &Position) -> Result<()> {
        if p.dimension() != self.dimension {
            return Err(Error::invalid(format!(
                "position has dimension {}, board has dimension {}",
                p.dimension(),
                self.dimension
            )));
        }
        if let Some(&c) = p.coords().iter().find(|&&c| c >= self.size) {
            return Err(Error::invalid(format!(
                "coordinate {} out of range for board size {}",
                c, self.size
            )));
        }
        Ok(())
    }

    /// Mixed-radix cell index of `p`: coordinate 1 is the least-significant
    /// digit. Strictly monotone in lexicographic order with coordinate d
    /// most significant.
    pub fn encode(&self, p: &Position) -> Result<u64> {
        self.check_position(p)?;
        let n = self.size as u64;
        let mut index = 0u64;
        for &c in p.coords().iter().rev() {
            index = index * n + c as u64;
        }
        Ok(index)
    }

    /// Inverse of [`BoardSpec::encode`].
    pub fn decode(&self, index: u64) -> Result<Position> {
        if index >= self.cells {
            return Err(Error::invalid(format!(
                "cell index {} out of range for board with {} cells",
                index, self.cells
            )));
        }
        let n = self.size as u64;
        let mut rest = index;
        let mut coords = Vec::with_capacity(self.dimension as usize);
        for _ in 0..self.dimension {
            coords.push((rest % n) as u32);
            rest /= n;
        }
        Ok(Position { coords })
    }

    /// Whether queens on `p` and `q` attack each other: the positions differ
    /// and all nonzero coordinate differences share one absolute value.
    /// Symmetric and irreflexive.
    pub fn attacks(&self, p: &Position, q: &Position) -> Result<bool> {
        self.check_position(p)?;
        self.check_position(q)?;
        Ok(coords_attack(p.coords(), q.coords()))
    }

    /// The maximal in-board walk from `origin` along `direction`.
    pub fn ray(&self, origin: &Position, direction: &AttackVector) -> Result<Ray> {
        self.check_position(origin)?;
        if direction.dimension() != self.dimension {
            return Err(Error::invalid(format!(
                "attack vector has dimension {}, board has dimension {}",
                direction.dimension(),
                self.dimension
            )));
        }
        let length = self.ray_length(origin.coords(), direction.deltas());
        Ok(Ray {
            origin: origin.clone(),
            direction: direction.clone(),
            length,
        })
    }

    /// Steps along `deltas` before leaving the board:
    /// `min` over nonzero components of `n - 1 - q_k` (step `+1`) or `q_k`
    /// (step `-1`).
    fn ray_length(&self, coords: &[u32], deltas: &[i8]) -> u32 {
        let mut length = u32::MAX;
        for (&c, &d) in coords.iter().zip(deltas) {
            let room = match d {
                1 => self.size - 1 - c,
                -1 => c,
                _ => continue,
            };
            length = length.min(room);
        }
        debug_assert_ne!(length, u32::MAX, "attack vector cannot be all zero");
        length
    }

    /// Every cell attacked by a queen at `q`: the union of all ray cells
    /// over the `3^d - 1` attack vectors, excluding `q` itself. Sorted
    /// ascending by cell index.
    ///
    /// Walks all `3^d - 1` directions, so the cost grows with `3^d` even on
    /// boards whose cell count is small.
    pub fn attacked_set(&self, q: &Position) -> Result<Vec<Position>> {
        self.check_position(q)?;
        let mut cells: Vec<(u64, Position)> = Vec::new();
        if self.size > 1 {
            for_each_direction(self.dimension, |deltas| {
                let length = self.ray_length(q.coords(), deltas);
                let mut coords = q.coords().to_vec();
                for _ in 0..length {
                    for (c, &d) in coords.iter_mut().zip(deltas) {
                        *c = c.wrapping_add_signed(d as i32);
                    }
                    let p = Position {
                        coords: coords.clone(),
                    };
                    let index = self.encode(&p).expect("stepped cell is in-board");
                    cells.push((index, p));
                }
            });
        }
        cells.sort_unstable_by_key(|(i, _)| *i);
        Ok(cells.into_iter().map(|(_, p)| p).collect())
    }

    /// Index-space version of [`BoardSpec::attacked_set`], sorted ascending.
    pub(crate) fn attacked_indices(&self, index: u64) -> Vec<u64> {
        let q = self.decode(index).expect("index in range");
        let weights = self.radix_weights();
        let mut out: Vec<u64> = Vec::new();
        if self.size > 1 {
            for_each_direction(self.dimension, |deltas| {
                let length = self.ray_length(q.coords(), deltas) as u64;
                // The index moves by a constant signed stride per step.
                let stride: i128 = deltas
                    .iter()
                    .zip(&weights)
                    .map(|(&d, &w)| d as i128 * w as i128)
                    .sum();
                let mut cell = index as i128;
                for _ in 0..length {
                    cell += stride;
                    out.push(cell as u64);
                }
            });
        }
        out.sort_unstable();
        out
    }

    /// `n^k` for each coordinate k, the mixed-radix digit weights.
    pub(crate) fn radix_weights(&self) -> Vec<u64> {
        let n = self.size as u64;
        let mut weights = Vec::with_capacity(self.dimension as usize);
        let mut w = 1u64;
        for _ in 0..self.dimension {
            weights.push(w);
            w = w.saturating_mul(n);
        }
        weights
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.size, self.dimension)
    }
}

/// Pure attack predicate on raw coordinate slices of equal length.
pub(crate) fn coords_attack(p: &[u32], q: &[u32]) -> bool {
    debug_assert_eq!(p.len(), q.len());
    let mut magnitude: Option<u32> = None;
    for (&a, &b) in p.iter().zip(q) {
        let diff = a.abs_diff(b);
        if diff == 0 {
            continue;
        }
        match magnitude {
            None => magnitude = Some(diff),
            Some(m) if m != diff => return false,
            Some(_) => {}
        }
    }
    magnitude.is_some()
}

/// A cell of a board: one coordinate in `[0, n)` per axis.
///
/// Construction only checks non-emptiness; operations validate positions
/// against their board. The derived ordering is component-wise lexicographic;
/// cell-index order is available through [`BoardSpec::encode`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Position {
    coords: Vec<u32>,
}

impl Position {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::invalid("position must have at least one coordinate"));
        }
        Ok(Position { coords })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn dimension(&self) -> u32 {
        self.coords.len() as u32
    }
}

/// Text format: comma-separated decimal coordinates, coordinate 1 first.
impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        Ok(())
    }
}

impl FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::invalid(format!("bad coordinate {:?} in position {:?}", part, s)))
            })
            .collect::<Result<Vec<u32>>>()?;
        Position::new(coords)
    }
}

/// A queen movement direction: one step in `{-1, 0, +1}` per axis, not all
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttackVector {
    deltas: Vec<i8>,
}

impl AttackVector {
    pub fn new(deltas: Vec<i8>) -> Result<Self> {
        if deltas.is_empty() {
            return Err(Error::invalid("attack vector must have at least one component"));
        }
        if deltas.iter().any(|&d| !(-1..=1).contains(&d)) {
            return Err(Error::invalid("attack vector components must be -1, 0, or +1"));
        }
        if deltas.iter().all(|&d| d == 0) {
            return Err(Error::invalid("attack vector cannot be the zero vector"));
        }
        Ok(AttackVector { deltas })
    }

    pub fn deltas(&self) -> &[i8] {
        &self.deltas
    }

    pub fn dimension(&self) -> u32 {
        self.deltas.len() as u32
    }

    pub fn negated(&self) -> AttackVector {
        AttackVector {
            deltas: self.deltas.iter().map(|&d| -d).collect(),
        }
    }

    /// Whether the lowest-index nonzero component is `+1`.
    pub fn is_canonical(&self) -> bool {
        self.deltas
            .iter()
            .find(|&&d| d != 0)
            .is_some_and(|&d| d == 1)
    }
}

impl fmt::Display for AttackVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.deltas.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{:+}", d)?;
        }
        Ok(())
    }
}

/// An attack line: the `{v, -v}` pair of attack vectors, represented by the
/// member whose first nonzero component is `+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttackLine {
    canonical: AttackVector,
}

impl AttackLine {
    /// Canonicalizes `v`, negating it when its first nonzero component is
    /// `-1`.
    pub fn from_vector(v: AttackVector) -> Self {
        if v.is_canonical() {
            AttackLine { canonical: v }
        } else {
            AttackLine {
                canonical: v.negated(),
            }
        }
    }

    pub fn canonical_vector(&self) -> &AttackVector {
        &self.canonical
    }

    /// The two opposite directions forming the line.
    pub fn directions(&self) -> [AttackVector; 2] {
        [self.canonical.clone(), self.canonical.negated()]
    }
}

/// The in-board cells `origin + s * direction` for `s = 1..=length`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    origin: Position,
    direction: AttackVector,
    length: u32,
}

impl Ray {
    pub fn origin(&self) -> &Position {
        &self.origin
    }

    pub fn direction(&self) -> &AttackVector {
        &self.direction
    }

    /// Number of in-board steps; at most `n - 1`.
    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    /// Cells at steps `1..=length`, in walk order.
    pub fn cells(&self) -> impl Iterator<Item = Position> + '_ {
        (1..=self.length).map(move |s| {
            let coords = self
                .origin
                .coords()
                .iter()
                .zip(self.direction.deltas())
                .map(|(&c, &d)| c.wrapping_add_signed(d as i32 * s as i32))
                .collect();
            Position { coords }
        })
    }
}

/// `3^d - 1`, the number of attack vectors in dimension `d`.
pub fn attack_vector_count(dimension: u32) -> Result<u64> {
    if dimension == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    let total = 3u64
        .checked_pow(dimension)
        .ok_or(Error::Overflow("3^d"))?;
    Ok(total - 1)
}

/// `(3^d - 1) / 2`, the number of attack lines in dimension `d`. Exact
/// integer arithmetic; overflow is an explicit error.
pub fn attack_line_count(dimension: u32) -> Result<u64> {
    Ok(attack_vector_count(dimension)? / 2)
}

/// All `3^d - 1` attack vectors, in lexicographic order over the component
/// sequence with `-1 < 0 < +1`.
pub fn enumerate_attack_vectors(dimension: u32) -> Result<Vec<AttackVector>> {
    let count = attack_vector_count(dimension)?;
    let count = usize::try_from(count).map_err(|_| Error::Overflow("3^d - 1 as a length"))?;
    let mut out = Vec::with_capacity(count);
    for_each_direction(dimension, |deltas| {
        out.push(AttackVector {
            deltas: deltas.to_vec(),
        });
    });
    Ok(out)
}

/// The `(3^d - 1) / 2` attack lines: exactly one representative per `{v, -v}`
/// pair, in lexicographic order of the canonical vectors.
pub fn enumerate_attack_lines(dimension: u32) -> Result<Vec<AttackLine>> {
    let vectors = enumerate_attack_vectors(dimension)?;
    Ok(vectors
        .into_iter()
        .filter(AttackVector::is_canonical)
        .map(|v| AttackLine { canonical: v })
        .collect())
}

/// Walks every direction in `{-1, 0, +1}^d` except the zero vector, in
/// lexicographic order, reusing one buffer.
pub(crate) fn for_each_direction(dimension: u32, mut f: impl FnMut(&[i8])) {
    assert!(dimension >= 1);
    let d = dimension as usize;
    let mut deltas = vec![-1i8; d];
    loop {
        if deltas.iter().any(|&x| x != 0) {
            f(&deltas);
        }
        // Odometer increment on the last coordinate (least significant in
        // lexicographic order).
        let mut k = d;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if deltas[k] < 1 {
                deltas[k] += 1;
                break;
            }
            deltas[k] = -1;
        }
    }
}
