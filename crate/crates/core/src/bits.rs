//! Fixed-length bitset over `u64` blocks.
//!
//! Deliberately minimal: exactly the operations the coverage masks and the
//! search states need. Bits at positions `>= len` are kept clear so that
//! whole-block operations stay valid.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits {
    blocks: Vec<u64>,
    len: u64,
    ones: u64,
}

impl Bits {
    pub fn new(len: u64) -> Self {
        let nblocks = (len + 63) / 64;
        Bits {
            blocks: vec![0; nblocks as usize],
            len,
            ones: 0,
        }
    }

    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.len);
        self.blocks[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    /// Sets bit `i`; returns true if it was previously clear.
    pub fn set(&mut self, i: u64) -> bool {
        debug_assert!(i < self.len);
        let block = &mut self.blocks[(i / 64) as usize];
        let mask = 1u64 << (i % 64);
        if *block & mask == 0 {
            *block |= mask;
            self.ones += 1;
            true
        } else {
            false
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.ones
    }

    pub fn is_full(&self) -> bool {
        self.ones == self.len
    }

    /// Lowest clear index, if any.
    pub fn first_zero(&self) -> Option<u64> {
        for (bi, &b) in self.blocks.iter().enumerate() {
            if b != u64::MAX {
                let i = bi as u64 * 64 + (!b).trailing_zeros() as u64;
                return if i < self.len { Some(i) } else { None };
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
        self.ones = self.blocks.iter().map(|b| b.count_ones() as u64).sum();
    }

    pub fn ones_iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &b)| {
            let base = bi as u64 * 64;
            BlockOnes(b).map(move |o| base + o)
        })
    }
}

struct BlockOnes(u64);

impl Iterator for BlockOnes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as u64;
        self.0 &= self.0 - 1;
        Some(i)
    }
}
