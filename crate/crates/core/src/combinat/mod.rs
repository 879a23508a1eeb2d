//! Signed partitions, signed permutations, and ordered set partitions in
//! standard form, with the `inv` and `maj` statistics whose generating
//! functions are the q-Stirling numbers.
//!
//! Enumeration order is the inductive insertion of the largest element: the
//! objects for `n` are produced by extending the objects for `n - 1`, so the
//! recursions can be replayed directly as tests.

mod ordered;
mod signed_partition;
mod signed_permutation;

pub use ordered::{ordered_partitions, ordered_partitions_by_k, OrderedPartition};
pub use signed_partition::{signed_partitions, signed_partitions_by_pairs, SignedPartition};
pub use signed_permutation::{
    signed_permutations, signed_permutations_by_pairs, SignedPermutation,
};

use num_bigint::BigInt;

use crate::qpoly::QPoly;
use crate::stirling::{stirling_number, StirlingKind};
use crate::symmetric::type_b_falling_factorial_at;
use crate::{CoxeterType, Error};

/// The families of objects the enumerator produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    SignedPartition,
    SignedPermutation,
    OrderedA,
    OrderedB,
}

/// The statistics carried by the objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Statistic {
    Inv,
    Maj,
}

/// Number of inversion pairs `(s, B_j)` for an ordered list of blocks:
/// `s` lies in an earlier block `B_i` (`i < j`) and `s >= min|B_j|`.
///
/// Equality `s = min|B_j|` can only occur when the positive value sits in an
/// earlier block while `-min|B_j|` is in `B_j`; the plain comparison counts
/// exactly those cases, so ordered and standard-form objects share this code.
pub(crate) fn block_inversions(blocks: &[&[i64]]) -> u64 {
    let mins: Vec<i64> = blocks
        .iter()
        .map(|b| b.iter().map(|x| x.abs()).min().expect("nonempty block"))
        .collect();
    let mut total = 0;
    for j in 1..blocks.len() {
        for block in &blocks[..j] {
            total += block.iter().filter(|&&s| s >= mins[j]).count() as u64;
        }
    }
    total
}

/// `sum_object q^{stat(object)}` over one family at `(n, k)`.
///
/// `maj` is only defined for signed partitions; other combinations are
/// rejected.
pub fn statistic_gf(family: Family, n: usize, k: i64, stat: Statistic) -> Result<QPoly, Error> {
    if stat == Statistic::Maj && family != Family::SignedPartition {
        return Err(Error::InvalidArgument(format!(
            "maj is only defined for signed partitions, not {family:?}"
        )));
    }
    let stats: Vec<u64> = match family {
        Family::SignedPartition => signed_partitions(n, k)
            .iter()
            .map(|rho| match stat {
                Statistic::Inv => rho.inv(),
                Statistic::Maj => rho.maj(),
            })
            .collect(),
        Family::SignedPermutation => signed_permutations(n, k).iter().map(|p| p.inv()).collect(),
        Family::OrderedA => ordered_partitions(CoxeterType::A, n, k)
            .iter()
            .map(|w| w.inv())
            .collect(),
        Family::OrderedB => ordered_partitions(CoxeterType::B, n, k)
            .iter()
            .map(|w| w.inv())
            .collect(),
    };
    let mut coeffs = Vec::new();
    for s in stats {
        let s = s as usize;
        if coeffs.len() <= s {
            coeffs.resize(s + 1, BigInt::from(0));
        }
        coeffs[s] += 1;
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// Count of objects in a family at `(n, k)`.
pub fn family_count(family: Family, n: usize, k: i64) -> usize {
    match family {
        Family::SignedPartition => signed_partitions(n, k).len(),
        Family::SignedPermutation => signed_permutations(n, k).len(),
        Family::OrderedA => ordered_partitions(CoxeterType::A, n, k).len(),
        Family::OrderedB => ordered_partitions(CoxeterType::B, n, k).len(),
    }
}

/// Brute-force census of odd functions `f: <n> -> <p>` (those with
/// `f(-i) = -f(i)`), bucketed by the number of block pairs of the kernel
/// partition.
///
/// Returns the total count `(2p+1)^n` together with the histogram over `k`;
/// the histogram entry at `k` equals `S_B(n,k)` times the type B falling
/// factorial `(t-1)(t-3)...(t-2k+1)` at `t = 2p+1`.
pub fn type_b_function_census(n: usize, p: usize) -> (u64, Vec<u64>) {
    let base = 2 * p as u64 + 1;
    let total_expected = base.checked_pow(n as u32).expect("census size overflows u64");
    assert!(
        total_expected <= 100_000_000,
        "brute-force census limited to 1e8 functions"
    );
    let mut histogram = vec![0u64; n + 1];
    // odometer over (f(1), ..., f(n)) in {-p..p}^n
    let mut f = vec![-(p as i64); n];
    let mut total = 0u64;
    loop {
        let mut seen = std::collections::HashSet::new();
        for &v in &f {
            if v != 0 {
                seen.insert(v.abs());
            }
        }
        histogram[seen.len()] += 1;
        total += 1;
        let mut i = 0;
        loop {
            if i == n {
                debug_assert_eq!(total, total_expected);
                return (total, histogram);
            }
            f[i] += 1;
            if f[i] <= p as i64 {
                break;
            }
            f[i] = -(p as i64);
            i += 1;
        }
    }
}

/// The reference histogram `S_B(n,k) * (2p+1 - 1)(2p+1 - 3)...` for the census.
pub fn type_b_function_reference(n: usize, p: usize) -> Vec<BigInt> {
    let t = BigInt::from(2 * p as u64 + 1);
    (0..=n)
        .map(|k| {
            stirling_number(StirlingKind::SecondB, n, k as i64)
                * type_b_falling_factorial_at(&t, k)
        })
        .collect()
}

#[cfg(test)]
mod tests;
