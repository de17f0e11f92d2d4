//! Independent reference implementations used to cross-check the library.
//!
//! Everything here works on raw `(n, d)` integers and coordinate vectors
//! and deliberately shares no code with the crate: attacks are decided by
//! stepping rays cell by cell, coverage and domination by exhaustive
//! subset scans, and counts by brute-force enumeration. Slow on purpose.

#![allow(dead_code)]

use itertools::Itertools;

/// All directions in {-1,0,1}^d except the zero vector, built recursively.
pub fn directions(d: u32) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d as usize);
    extend_direction(d, &mut cur, &mut out);
    out.retain(|dir| dir.iter().any(|&x| x != 0));
    out
}

fn extend_direction(d: u32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
    if cur.len() == d as usize {
        out.push(cur.clone());
        return;
    }
    for step in [-1, 0, 1] {
        cur.push(step);
        extend_direction(d, cur, out);
        cur.pop();
    }
}

/// Attack decided by walking every direction from `p` one step at a time
/// until the board edge, looking for `q`.
pub fn oracle_attacks(n: u32, p: &[u32], q: &[u32]) -> bool {
    assert_eq!(p.len(), q.len());
    let qi: Vec<i64> = q.iter().map(|&c| c as i64).collect();
    for dir in directions(p.len() as u32) {
        let mut cur: Vec<i64> = p.iter().map(|&c| c as i64).collect();
        loop {
            for (c, &s) in cur.iter_mut().zip(&dir) {
                *c += s as i64;
            }
            if cur.iter().any(|&c| c < 0 || c >= n as i64) {
                break;
            }
            if cur == qi {
                return true;
            }
        }
    }
    false
}

/// Number of in-board steps from `origin` along `dir`, by stepping.
pub fn oracle_ray_steps(n: u32, origin: &[u32], dir: &[i32]) -> u32 {
    let mut cur: Vec<i64> = origin.iter().map(|&c| c as i64).collect();
    let mut steps = 0;
    loop {
        for (c, &s) in cur.iter_mut().zip(dir) {
            *c += s as i64;
        }
        if cur.iter().any(|&c| c < 0 || c >= n as i64) {
            return steps;
        }
        steps += 1;
    }
}

/// Own mixed-radix decoding, coordinate 1 least significant.
pub fn idx_to_coords(n: u32, d: u32, mut i: u64) -> Vec<u32> {
    let mut coords = Vec::with_capacity(d as usize);
    for _ in 0..d {
        coords.push((i % n as u64) as u32);
        i /= n as u64;
    }
    coords
}

pub fn cell_count(n: u32, d: u32) -> u64 {
    (n as u64).pow(d)
}

/// Every cell attacked from `q`, by scanning all cells pairwise.
pub fn oracle_attacked_cells(n: u32, d: u32, q: &[u32]) -> Vec<Vec<u32>> {
    (0..cell_count(n, d))
        .map(|i| idx_to_coords(n, d, i))
        .filter(|p| p.as_slice() != q && oracle_attacks(n, q, p))
        .collect()
}

/// Per-cell cover masks (self plus attacked cells) for boards of at most
/// 64 cells, packed into one u64 per cell.
pub fn oracle_cover_masks(n: u32, d: u32) -> Vec<u64> {
    let cells = cell_count(n, d);
    assert!(cells <= 64, "mask oracle handles at most 64 cells");
    let coords: Vec<Vec<u32>> = (0..cells).map(|i| idx_to_coords(n, d, i)).collect();
    (0..cells as usize)
        .map(|i| {
            let mut mask = 1u64 << i;
            for j in 0..cells as usize {
                if i != j && oracle_attacks(n, &coords[i], &coords[j]) {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect()
}

/// Pairwise attack masks (attacked cells only) for boards of at most 64
/// cells.
pub fn oracle_attack_masks(n: u32, d: u32) -> Vec<u64> {
    oracle_cover_masks(n, d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| m & !(1 << i))
        .collect()
}

/// Exhaustive minimum dominating size: try every subset of each size
/// ascending until one covers all cells.
pub fn oracle_min_dominating(n: u32, d: u32) -> u64 {
    let cells = cell_count(n, d);
    let masks = oracle_cover_masks(n, d);
    let full = if cells == 64 {
        u64::MAX
    } else {
        (1u64 << cells) - 1
    };
    for m in 1..=cells {
        let dominated = (0..cells as usize)
            .combinations(m as usize)
            .any(|subset| subset.iter().fold(0u64, |acc, &i| acc | masks[i]) == full);
        if dominated {
            return m;
        }
    }
    unreachable!("placing a queen on every cell always dominates");
}

/// Whether the queens at `subset` (cell indices) dominate the board.
pub fn oracle_dominates(n: u32, d: u32, subset: &[u64]) -> bool {
    let masks = oracle_cover_masks(n, d);
    let cells = cell_count(n, d);
    let full = if cells == 64 {
        u64::MAX
    } else {
        (1u64 << cells) - 1
    };
    subset.iter().fold(0u64, |acc, &i| acc | masks[i as usize]) == full
}

/// Exhaustive count of pairwise non-attacking m-subsets via subset scan.
pub fn oracle_count_independent(n: u32, d: u32, m: u64) -> u64 {
    let cells = cell_count(n, d);
    let attacks = oracle_attack_masks(n, d);
    (0..cells as usize)
        .combinations(m as usize)
        .filter(|subset| {
            subset.iter().enumerate().all(|(i, &a)| {
                subset[i + 1..].iter().all(|&b| attacks[a] >> b & 1 == 0)
            })
        })
        .count() as u64
}

/// Classical 2-D n-queens counter: one queen per row, columns and both
/// diagonal families tracked in arrays. Counts complete solutions.
pub fn oracle_rowwise_queens(n: u32) -> u64 {
    fn place(n: usize, row: usize, cols: &mut Vec<bool>, sums: &mut Vec<bool>, diffs: &mut Vec<bool>) -> u64 {
        if row == n {
            return 1;
        }
        let mut total = 0;
        for col in 0..n {
            let (s, f) = (row + col, row + n - 1 - col);
            if cols[col] || sums[s] || diffs[f] {
                continue;
            }
            cols[col] = true;
            sums[s] = true;
            diffs[f] = true;
            total += place(n, row + 1, cols, sums, diffs);
            cols[col] = false;
            sums[s] = false;
            diffs[f] = false;
        }
        total
    }
    let n = n as usize;
    place(
        n,
        0,
        &mut vec![false; n],
        &mut vec![false; 2 * n],
        &mut vec![false; 2 * n],
    )
}
