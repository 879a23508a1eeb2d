//! Signed (type B) permutations of `<n>' = {-n, ..., -1, 1, ..., n}` in
//! standard cycle form.

use std::fmt;

use crate::Error;

/// A permutation `pi` of `<n>'` with `pi(-i) = -pi(i)`, stored as its cycle
/// decomposition in standard form.
///
/// Cycles come in two shapes: a *paired* cycle `c` whose negation `-c` is a
/// different cycle of `pi`, and an *unpaired* cycle containing both `i` and
/// `-i`, which is then of the form `(a_1,...,a_j,-a_1,...,-a_j)`.
///
/// Standard form: cycle minima `m_i = min|c_i|` weakly increase; when a
/// paired cycle ties with its partner the one containing `-m` is listed
/// first; every cycle is rotated so its `+-m` entry is last, with unpaired
/// cycles ending in `-m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    n: usize,
    cycles: Vec<Vec<i64>>,
}

fn cycle_is_unpaired(cycle: &[i64]) -> bool {
    cycle.iter().any(|&x| cycle.contains(&-x))
}

impl SignedPermutation {
    /// The empty permutation of `<0>'`.
    pub fn identity_empty() -> Self {
        SignedPermutation {
            n: 0,
            cycles: Vec::new(),
        }
    }

    /// Validate an arbitrary cycle list and bring it into standard form.
    pub fn from_cycles(n: usize, cycles: Vec<Vec<i64>>) -> Result<Self, Error> {
        let mut seen = std::collections::HashSet::new();
        for c in &cycles {
            if c.is_empty() {
                return Err(Error::InvalidObject("empty cycle".into()));
            }
            for &x in c {
                if x == 0 || x.unsigned_abs() > n as u64 {
                    return Err(Error::InvalidObject(format!("element {x} outside <{n}>'")));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidObject(format!("element {x} repeated")));
                }
            }
        }
        if seen.len() != 2 * n {
            return Err(Error::InvalidObject(format!("cycles do not cover <{n}>'")));
        }
        // pi(-i) = -pi(i): the negation of every cycle must also be a cycle.
        let image = |cycles: &[Vec<i64>], x: i64| -> i64 {
            for c in cycles {
                if let Some(pos) = c.iter().position(|&y| y == x) {
                    return c[(pos + 1) % c.len()];
                }
            }
            unreachable!("element {x} covered above")
        };
        for c in &cycles {
            for &x in c {
                if image(&cycles, -x) != -image(&cycles, x) {
                    return Err(Error::InvalidObject(format!(
                        "pi(-{x}) != -pi({x}): not a signed permutation"
                    )));
                }
            }
        }
        // unpaired cycles must have the shape (a_1..a_j, -a_1..-a_j)
        for c in &cycles {
            if cycle_is_unpaired(c) {
                let j = c.len() / 2;
                let ok = c.len() % 2 == 0 && (0..j).all(|i| c[i + j] == -c[i]);
                // any rotation of that shape is still valid; check via doubling
                let rotation_ok = (0..c.len()).any(|r| {
                    (0..j).all(|i| c[(r + i + j) % c.len()] == -c[(r + i) % c.len()])
                });
                if !(ok || rotation_ok) {
                    return Err(Error::InvalidObject(format!(
                        "unpaired cycle {c:?} lacks antipodal shape"
                    )));
                }
            }
        }
        let mut norm: Vec<Vec<i64>> = cycles
            .into_iter()
            .map(|c| {
                let m = c.iter().map(|x| x.abs()).min().unwrap();
                let target = if cycle_is_unpaired(&c) || c.contains(&-m) {
                    -m
                } else {
                    m
                };
                let pos = c.iter().position(|&x| x == target).unwrap();
                let mut rot = c[pos + 1..].to_vec();
                rot.extend_from_slice(&c[..=pos]);
                rot
            })
            .collect();
        norm.sort_by_key(|c| {
            let m = c.iter().map(|x| x.abs()).min().unwrap();
            (m, if c.contains(&-m) { 0 } else { 1 })
        });
        Ok(SignedPermutation { n, cycles: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<i64>] {
        &self.cycles
    }

    /// Number of *pairs* of paired cycles, the `k` of `c_B(n, k)`.
    pub fn paired_pair_count(&self) -> usize {
        let paired = self
            .cycles
            .iter()
            .filter(|c| !cycle_is_unpaired(c))
            .count();
        debug_assert_eq!(paired % 2, 0);
        paired / 2
    }

    /// The word obtained by erasing cycle parentheses.
    pub fn word(&self) -> Vec<i64> {
        self.cycles.iter().flatten().copied().collect()
    }

    /// Word inversions: pairs `i < j` with `w_i > |w_j|`.
    pub fn inv(&self) -> u64 {
        let w = self.word();
        let mut total = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j].abs() {
                    total += 1;
                }
            }
        }
        total
    }

    /// Append the fixed-point pair `(-(n+1))(n+1)`.
    fn with_fixed_pair(&self) -> SignedPermutation {
        let v = self.n as i64 + 1;
        let mut out = self.clone();
        out.n += 1;
        out.cycles.push(vec![-v]);
        out.cycles.push(vec![v]);
        out
    }

    /// Append the unpaired two-cycle `(n+1, -(n+1))`.
    fn with_antipodal_cycle(&self) -> SignedPermutation {
        let v = self.n as i64 + 1;
        let mut out = self.clone();
        out.n += 1;
        out.cycles.push(vec![v, -v]);
        out
    }

    /// Insert `n+1` immediately before the element at word position `pos`
    /// (and `-(n+1)` before its negation, wherever that is).
    fn with_inserted_before(&self, pos: usize) -> SignedPermutation {
        let v = self.n as i64 + 1;
        let mut out = self.clone();
        out.n += 1;
        let mut remaining = pos;
        let mut target = 0i64;
        'outer: for c in &mut out.cycles {
            if remaining < c.len() {
                target = c[remaining];
                c.insert(remaining, v);
                break 'outer;
            }
            remaining -= c.len();
        }
        debug_assert_ne!(target, 0);
        for c in &mut out.cycles {
            if let Some(p) = c.iter().position(|&x| x == -target) {
                c.insert(p, -v);
                break;
            }
        }
        out
    }

    /// The underlying signed partition: every paired cycle collapses to its
    /// support (paired with its negation), and the supports of all unpaired
    /// cycles together with 0 form the zero block.
    pub fn underlying_partition(&self) -> super::SignedPartition {
        let mut zero = vec![0i64];
        let mut blocks: Vec<Vec<i64>> = Vec::new();
        for c in &self.cycles {
            if cycle_is_unpaired(c) {
                zero.extend_from_slice(c);
            } else {
                blocks.push(c.clone());
            }
        }
        blocks.push(zero);
        super::SignedPartition::from_blocks(self.n, blocks)
            .expect("underlying blocks of a valid permutation form a signed partition")
    }
}

impl fmt::Display for SignedPermutation {
    /// Cycle notation, e.g. `(3 1 -3 -1)(5 -7 -2)(-5 7 2)(-4)(4)(6 -6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &self.cycles {
            let inner = c
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            write!(f, "({inner})")?;
        }
        Ok(())
    }
}

/// All signed permutations of `<n>'`, grouped by the number of paired-cycle
/// pairs, built level by level: each object of `<m>'` extends an object of
/// `<m-1>'` by the fixed-point pair `(-m)(m)`, the antipodal cycle `(m, -m)`,
/// or the insertion of `m` before one of the `2m - 2` word positions.
pub fn signed_permutations_by_pairs(n: usize) -> Vec<Vec<SignedPermutation>> {
    let mut levels = vec![vec![SignedPermutation::identity_empty()]];
    for m in 1..=n {
        let mut next: Vec<Vec<SignedPermutation>> = vec![Vec::new(); m + 1];
        for (k, level) in levels.iter().enumerate() {
            for pi in level {
                next[k + 1].push(pi.with_fixed_pair());
            }
        }
        for (k, level) in levels.iter().enumerate() {
            for pi in level {
                next[k].push(pi.with_antipodal_cycle());
                for pos in 0..2 * (m - 1) {
                    next[k].push(pi.with_inserted_before(pos));
                }
            }
        }
        levels = next;
    }
    levels
}

/// All signed permutations of `<n>'` with exactly `k` pairs of paired cycles.
pub fn signed_permutations(n: usize, k: i64) -> Vec<SignedPermutation> {
    if k < 0 || k > n as i64 {
        return Vec::new();
    }
    signed_permutations_by_pairs(n).swap_remove(k as usize)
}
