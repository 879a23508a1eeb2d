//! Signed (type B) set partitions of `<n> = {-n, ..., n}` in standard form.

use std::fmt;

use crate::combinat::block_inversions;
use crate::Error;

/// A type B partition of `<n>`: a zero block `S_0` closed under negation and
/// containing 0, plus `k` block pairs `(S_{2i-1}, S_{2i})` with
/// `S_{2i} = -S_{2i-1}`.
///
/// Standard form is maintained as an invariant: within a pair the block
/// holding the positive minimum (by absolute value) is `S_{2i}`, and pair
/// minima strictly increase.  Block elements are stored sorted ascending;
/// inversions do not depend on within-block order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPartition {
    n: usize,
    zero_block: Vec<i64>,
    /// `(negative_block, positive_block)` pairs: the second block of each
    /// pair contains its minimum absolute value with positive sign.
    pairs: Vec<(Vec<i64>, Vec<i64>)>,
}

impl SignedPartition {
    /// The unique signed partition of `<0>`.
    pub fn trivial() -> Self {
        SignedPartition {
            n: 0,
            zero_block: vec![0],
            pairs: Vec::new(),
        }
    }

    /// Validate an arbitrary block list as a type B partition of `<n>` and
    /// bring it into standard form.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<i64>>) -> Result<Self, Error> {
        let mut zero_block = None;
        let mut rest: Vec<Vec<i64>> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for mut b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidObject("empty block".into()));
            }
            b.sort_unstable();
            for &x in &b {
                if x.unsigned_abs() > n as u64 {
                    return Err(Error::InvalidObject(format!("element {x} outside <{n}>")));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidObject(format!("element {x} repeated")));
                }
            }
            if b.contains(&0) {
                let symmetric = b.iter().all(|&x| b.contains(&-x));
                if !symmetric {
                    return Err(Error::InvalidObject(
                        "zero block is not closed under negation".into(),
                    ));
                }
                zero_block = Some(b);
            } else {
                rest.push(b);
            }
        }
        if seen.len() != 2 * n + 1 {
            return Err(Error::InvalidObject(format!(
                "blocks do not cover <{n}>"
            )));
        }
        let zero_block = zero_block.ok_or_else(|| Error::InvalidObject("no zero block".into()))?;

        let mut pairs = Vec::new();
        let mut used = vec![false; rest.len()];
        for i in 0..rest.len() {
            if used[i] {
                continue;
            }
            let neg: Vec<i64> = rest[i].iter().rev().map(|&x| -x).collect();
            let j = (0..rest.len())
                .find(|&j| !used[j] && rest[j] == neg)
                .ok_or_else(|| {
                    Error::InvalidObject(format!("block {:?} has no negated partner", rest[i]))
                })?;
            if i == j {
                return Err(Error::InvalidObject(format!(
                    "non-zero block {:?} is self-negative",
                    rest[i]
                )));
            }
            used[i] = true;
            used[j] = true;
            let m = rest[i].iter().map(|x| x.abs()).min().unwrap();
            if rest[i].contains(&m) {
                pairs.push((rest[j].clone(), rest[i].clone()));
            } else {
                pairs.push((rest[i].clone(), rest[j].clone()));
            }
        }
        pairs.sort_by_key(|(_, pos)| pos.iter().map(|x| x.abs()).min().unwrap());
        Ok(SignedPartition {
            n,
            zero_block,
            pairs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of block pairs `k`; the partition has `2k + 1` blocks.
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn zero_block(&self) -> &[i64] {
        &self.zero_block
    }

    pub fn pairs(&self) -> &[(Vec<i64>, Vec<i64>)] {
        &self.pairs
    }

    /// Blocks in standard order `S_0, S_1, ..., S_{2k}`.
    pub fn blocks(&self) -> Vec<&[i64]> {
        let mut out: Vec<&[i64]> = Vec::with_capacity(2 * self.pairs.len() + 1);
        out.push(&self.zero_block);
        for (neg, pos) in &self.pairs {
            out.push(neg);
            out.push(pos);
        }
        out
    }

    /// The inversion statistic of the standard form.
    pub fn inv(&self) -> u64 {
        block_inversions(&self.blocks())
    }

    /// The major index: `sum_i i * n_i` where `n_i` counts elements of
    /// `S_{i-1}` exceeding `min|S_i|`.
    pub fn maj(&self) -> u64 {
        let blocks = self.blocks();
        let mins: Vec<i64> = blocks
            .iter()
            .map(|b| b.iter().map(|x| x.abs()).min().unwrap())
            .collect();
        let mut total = 0u64;
        for i in 1..blocks.len() {
            let descents = blocks[i - 1].iter().filter(|&&s| s > mins[i]).count() as u64;
            total += i as u64 * descents;
        }
        total
    }

    /// Append the singleton pair `{-(n+1)} / {n+1}`, producing a partition of
    /// `<n+1>` with one more pair.  Standard form is preserved because the
    /// new minimum is the largest.
    fn with_singleton_pair(&self) -> SignedPartition {
        let v = self.n as i64 + 1;
        let mut out = self.clone();
        out.n += 1;
        out.pairs.push((vec![-v], vec![v]));
        out
    }

    /// Insert `n+1` into block `index` (standard order) and `-(n+1)` into its
    /// partner.
    fn with_inserted(&self, index: usize) -> SignedPartition {
        let v = self.n as i64 + 1;
        let mut out = self.clone();
        out.n += 1;
        match index {
            0 => {
                out.zero_block.insert(0, -v);
                out.zero_block.push(v);
            }
            _ => {
                let pair = &mut out.pairs[(index - 1) / 2];
                if index % 2 == 1 {
                    pair.0.push(v);
                    pair.1.insert(0, -v);
                } else {
                    pair.1.push(v);
                    pair.0.insert(0, -v);
                }
            }
        }
        out
    }
}

impl fmt::Display for SignedPartition {
    /// Mirrors the usual notation: `0 -1 1 | -2 5 -7 / 2 -5 7 | -4 / 4`,
    /// elements ordered by absolute value, pairs separated by `/`, pair
    /// groups by `|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |b: &[i64]| {
            let mut v = b.to_vec();
            v.sort_by_key(|x| (x.abs(), *x));
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{}", show(&self.zero_block))?;
        for (neg, pos) in &self.pairs {
            write!(f, " | {} / {}", show(neg), show(pos))?;
        }
        Ok(())
    }
}

/// All signed partitions of `<n>`, grouped by pair count `k`, built level by
/// level: each object of `<m>` extends an object of `<m-1>` either by the
/// singleton pair `{-m}/{m}` or by inserting `m` into one of its blocks.
pub fn signed_partitions_by_pairs(n: usize) -> Vec<Vec<SignedPartition>> {
    let mut levels = vec![vec![SignedPartition::trivial()]];
    for m in 1..=n {
        let mut next: Vec<Vec<SignedPartition>> = vec![Vec::new(); m + 1];
        for (k, level) in levels.iter().enumerate() {
            for rho in level {
                next[k + 1].push(rho.with_singleton_pair());
            }
        }
        for (k, level) in levels.iter().enumerate() {
            for rho in level {
                for index in 0..=2 * k {
                    next[k].push(rho.with_inserted(index));
                }
            }
        }
        levels = next;
    }
    levels
}

/// All signed partitions of `<n>` with exactly `k` block pairs.
pub fn signed_partitions(n: usize, k: i64) -> Vec<SignedPartition> {
    if k < 0 || k > n as i64 {
        return Vec::new();
    }
    signed_partitions_by_pairs(n).swap_remove(k as usize)
}
