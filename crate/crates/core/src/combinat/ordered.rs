//! Ordered set partitions: sequences of blocks, type A over `[n]` and type B
//! over `<n>` (zero block first, negation-paired blocks in adjacent slots,
//! no standard-form ordering imposed).

use std::fmt;

use crate::combinat::block_inversions;
use crate::{CoxeterType, Error};

/// An ordered set partition.
///
/// Type A: the blocks disjointly cover `[n]`.  Type B: block 0 is the zero
/// block (contains 0, closed under negation), and blocks `2i-1`, `2i` are
/// negations of each other; unlike [`super::SignedPartition`], the pair order
/// and within-pair orientation are free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    n: usize,
    ty: CoxeterType,
    blocks: Vec<Vec<i64>>,
}

impl OrderedPartition {
    /// The empty type A partition of `[0]`.
    pub fn empty_a() -> Self {
        OrderedPartition {
            n: 0,
            ty: CoxeterType::A,
            blocks: Vec::new(),
        }
    }

    /// The type B partition of `<0>` consisting of the sole zero block.
    pub fn zero_b() -> Self {
        OrderedPartition {
            n: 0,
            ty: CoxeterType::B,
            blocks: vec![vec![0]],
        }
    }

    /// Validate a block sequence for the given flavor.  Blocks keep their
    /// order; elements within a block are sorted.
    pub fn from_blocks(
        ty: CoxeterType,
        n: usize,
        blocks: Vec<Vec<i64>>,
    ) -> Result<Self, Error> {
        let mut blocks: Vec<Vec<i64>> = blocks;
        let mut seen = std::collections::HashSet::new();
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidObject("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if !seen.insert(x) {
                    return Err(Error::InvalidObject(format!("element {x} repeated")));
                }
            }
        }
        match ty {
            CoxeterType::A => {
                let ok = seen.len() == n
                    && seen.iter().all(|&x| x >= 1 && x <= n as i64);
                if !ok {
                    return Err(Error::InvalidObject(format!("blocks do not cover [{n}]")));
                }
            }
            CoxeterType::B => {
                let ok = seen.len() == 2 * n + 1
                    && seen.iter().all(|&x| x.unsigned_abs() <= n as u64);
                if !ok {
                    return Err(Error::InvalidObject(format!("blocks do not cover <{n}>")));
                }
                if blocks.len() % 2 == 0 {
                    return Err(Error::InvalidObject("even number of blocks".into()));
                }
                if !blocks[0].contains(&0)
                    || !blocks[0].iter().all(|&x| blocks[0].contains(&-x))
                {
                    return Err(Error::InvalidObject(
                        "first block must be the self-negative zero block".into(),
                    ));
                }
                for i in (1..blocks.len()).step_by(2) {
                    let neg: Vec<i64> = blocks[i + 1].iter().rev().map(|&x| -x).collect();
                    if blocks[i] != neg {
                        return Err(Error::InvalidObject(format!(
                            "blocks {i} and {} are not negations of each other",
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(OrderedPartition { n, ty, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> CoxeterType {
        self.ty
    }

    pub fn blocks(&self) -> &[Vec<i64>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// The `k` of the counting families: block count for type A, pair count
    /// `(block count - 1) / 2` for type B.
    pub fn k(&self) -> usize {
        match self.ty {
            CoxeterType::A => self.blocks.len(),
            CoxeterType::B => (self.blocks.len() - 1) / 2,
        }
    }

    /// Inversions `(s, S_j)` with `s` in an earlier block and `s >= min|S_j|`.
    pub fn inv(&self) -> u64 {
        let views: Vec<&[i64]> = self.blocks.iter().map(Vec::as_slice).collect();
        block_inversions(&views)
    }

    /// Partner index of block `i >= 1` in a type B partition.
    pub(crate) fn partner(i: usize) -> usize {
        if i % 2 == 1 {
            i + 1
        } else {
            i - 1
        }
    }

    /// Type A: append `n+1` to block `index`.
    fn a_with_in_block(&self, index: usize) -> OrderedPartition {
        let mut out = self.clone();
        out.n += 1;
        out.blocks[index].push(out.n as i64);
        out
    }

    /// Type A: insert the singleton `{n+1}` at block position `index`.
    fn a_with_singleton(&self, index: usize) -> OrderedPartition {
        let mut out = self.clone();
        out.n += 1;
        out.blocks.insert(index, vec![out.n as i64]);
        out
    }

    /// Type B: insert `n+1` into block `index` and `-(n+1)` into its partner
    /// (the zero block absorbs both).
    fn b_with_in_block(&self, index: usize) -> OrderedPartition {
        let mut out = self.clone();
        out.n += 1;
        let v = out.n as i64;
        if index == 0 {
            out.blocks[0].insert(0, -v);
            out.blocks[0].push(v);
        } else {
            out.blocks[index].push(v);
            out.blocks[Self::partner(index)].insert(0, -v);
        }
        out
    }

    /// Type B: insert the pair `{-(n+1)}/{n+1}` (or reversed) as pair number
    /// `pair_index`, counting from 0 directly after the zero block.
    fn b_with_new_pair(&self, pair_index: usize, positive_first: bool) -> OrderedPartition {
        let mut out = self.clone();
        out.n += 1;
        let v = out.n as i64;
        let at = 1 + 2 * pair_index;
        let (first, second) = if positive_first { (v, -v) } else { (-v, v) };
        out.blocks.insert(at, vec![second]);
        out.blocks.insert(at, vec![first]);
        out
    }
}

impl fmt::Display for OrderedPartition {
    /// Type A: `2 4 6 / 8 / 3 5 / 1 / 7`.  Type B: zero block first, pairs
    /// separated by `|`, within-pair by `/`: `0 -1 1 | 4 / -4 | -2 3 / 2 -3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: &[i64]| {
            let mut v = b.to_vec();
            v.sort_by_key(|x| (x.abs(), *x));
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self.ty {
            CoxeterType::A => {
                let parts: Vec<String> = self.blocks.iter().map(|b| show(b)).collect();
                write!(f, "{}", parts.join(" / "))
            }
            CoxeterType::B => {
                write!(f, "{}", show(&self.blocks[0]))?;
                for i in (1..self.blocks.len()).step_by(2) {
                    write!(f, " | {} / {}", show(&self.blocks[i]), show(&self.blocks[i + 1]))?;
                }
                Ok(())
            }
        }
    }
}

/// All ordered partitions of the flavor, grouped by `k` (blocks for type A,
/// block pairs for type B), built level by level: each object extends an
/// object on one fewer value by a new singleton block (singleton block pair,
/// in either orientation, for type B) or by absorbing the new value into an
/// existing block.
pub fn ordered_partitions_by_k(ty: CoxeterType, n: usize) -> Vec<Vec<OrderedPartition>> {
    let seed = match ty {
        CoxeterType::A => OrderedPartition::empty_a(),
        CoxeterType::B => OrderedPartition::zero_b(),
    };
    let mut levels = vec![vec![seed]];
    for m in 1..=n {
        let mut next: Vec<Vec<OrderedPartition>> = vec![Vec::new(); m + 1];
        for (k, level) in levels.iter().enumerate() {
            for w in level {
                match ty {
                    CoxeterType::A => {
                        for index in 0..=k {
                            next[k + 1].push(w.a_with_singleton(index));
                        }
                    }
                    CoxeterType::B => {
                        for pair_index in 0..=k {
                            next[k + 1].push(w.b_with_new_pair(pair_index, false));
                            next[k + 1].push(w.b_with_new_pair(pair_index, true));
                        }
                    }
                }
            }
        }
        for (k, level) in levels.iter().enumerate() {
            for w in level {
                match ty {
                    CoxeterType::A => {
                        for index in 0..k {
                            next[k].push(w.a_with_in_block(index));
                        }
                    }
                    CoxeterType::B => {
                        for index in 0..=2 * k {
                            next[k].push(w.b_with_in_block(index));
                        }
                    }
                }
            }
        }
        levels = next;
    }
    levels
}

/// All ordered partitions of the flavor with the given `k`.
pub fn ordered_partitions(ty: CoxeterType, n: usize, k: i64) -> Vec<OrderedPartition> {
    if k < 0 || k > n as i64 {
        return Vec::new();
    }
    ordered_partitions_by_k(ty, n).swap_remove(k as usize)
}
