//! The lattice of signed partitions of `<n>` under refinement, with ranks,
//! Whitney numbers, and the Möbius function.
//!
//! The lattice is materialized explicitly (element list plus order relation):
//! the build is capped at `n <= 5` (648 elements at `n = 5`), which keeps the
//! Möbius recursion a direct fold over lower sets.  The Möbius function is
//! computed from its defining recursion, never from the product formula, so
//! the closed forms stay genuine test targets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{signed_partitions_by_pairs, signed_permutations_by_pairs, SignedPartition};
use crate::report::Report;
use crate::stirling::{signed_first_kind_poly, stirling_number, StirlingKind};
use crate::{CoxeterType, Error};

/// The signed-partition lattice: all type B partitions of `<n>`, ordered by
/// refinement (`rho <= sigma` when every block of `rho` is contained in some
/// block of `sigma`), graded by `rank = n - pair count`.
#[derive(Clone, Debug)]
pub struct LatticePoset {
    n: usize,
    elements: Vec<SignedPartition>,
    rank: Vec<usize>,
    leq: Vec<Vec<bool>>,
}

impl LatticePoset {
    /// Materialize the lattice for `n <= 5`.
    pub fn build(n: usize) -> Result<Self, Error> {
        if n > 5 {
            return Err(Error::InvalidArgument(format!(
                "lattice build capped at n = 5, got {n}"
            )));
        }
        let mut elements = Vec::new();
        let mut rank = Vec::new();
        for (k, level) in signed_partitions_by_pairs(n).into_iter().enumerate() {
            for rho in level {
                rank.push(n - k);
                elements.push(rho);
            }
        }
        let leq = (0..elements.len())
            .map(|i| {
                (0..elements.len())
                    .map(|j| refines(&elements[i], &elements[j]))
                    .collect()
            })
            .collect();
        Ok(LatticePoset {
            n,
            elements,
            rank,
            leq,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[SignedPartition] {
        &self.elements
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Index of the all-singletons minimum.
    pub fn bottom(&self) -> usize {
        self.rank.iter().position(|&r| r == 0).expect("rank 0 exists")
    }

    /// Index of the one-block maximum.
    pub fn top(&self) -> usize {
        self.rank
            .iter()
            .position(|&r| r == self.n)
            .expect("rank n exists")
    }

    /// The one-variable Möbius function, by its defining recursion
    /// `sum_{x <= y} mu(x) = [y = bottom]`.
    pub fn mobius(&self) -> Vec<BigInt> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.rank[i]);
        let mut mu = vec![BigInt::zero(); self.len()];
        for &y in &order {
            let mut below: BigInt = (0..self.len())
                .filter(|&x| x != y && self.leq[x][y])
                .map(|x| mu[x].clone())
                .sum();
            if y == self.bottom() {
                below -= BigInt::one();
            }
            mu[y] = -below;
        }
        mu
    }

    /// Whitney number of the second kind: the size of rank `k`.
    pub fn whitney_second(&self, k: usize) -> u64 {
        self.rank.iter().filter(|&&r| r == k).count() as u64
    }

    /// Whitney number of the first kind: the Möbius sum over rank `k`.
    pub fn whitney_first(&self, mu: &[BigInt], k: usize) -> BigInt {
        (0..self.len())
            .filter(|&i| self.rank[i] == k)
            .map(|i| mu[i].clone())
            .sum()
    }
}

/// Refinement: every block of `rho` is contained in some block of `sigma`.
fn refines(rho: &SignedPartition, sigma: &SignedPartition) -> bool {
    let n = rho.n() as i64;
    // element -> index of its sigma block
    let mut owner = vec![usize::MAX; (2 * n + 1) as usize];
    for (bi, block) in sigma.blocks().iter().enumerate() {
        for &x in *block {
            owner[(x + n) as usize] = bi;
        }
    }
    let sigma_blocks = sigma.blocks();
    rho.blocks().iter().all(|block| {
        let target = sigma_blocks[owner[(block[0] + n) as usize]];
        block.iter().all(|&x| target.binary_search(&x).is_ok())
    })
}

fn double_factorial(n: i64) -> BigInt {
    let mut out = BigInt::one();
    let mut i = n;
    while i >= 2 {
        out *= i;
        i -= 2;
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `#B(rho)` by the product formula: `(#S_0 - 2)!!  prod_i (#S_{2i} - 1)!`.
///
/// This counts the signed permutations whose underlying signed partition is
/// `rho`, and equals `(-1)^{n-k} mu(rho)`.
pub fn count_b_rho_formula(rho: &SignedPartition) -> BigInt {
    let mut out = double_factorial(rho.zero_block().len() as i64 - 2);
    for (_, pos) in rho.pairs() {
        out *= factorial(pos.len() - 1);
    }
    out
}

/// `#B(rho)` by brute force: enumerate every signed permutation of `<n>'`
/// and keep those whose underlying partition is `rho`.  Capped at `n <= 5`.
pub fn count_b_rho_brute(rho: &SignedPartition) -> Result<BigInt, Error> {
    let n = rho.n();
    if n > 5 {
        return Err(Error::InvalidArgument(format!(
            "brute-force permutation census capped at n = 5, got {n}"
        )));
    }
    let mut count = 0u64;
    for level in signed_permutations_by_pairs(n) {
        for pi in level {
            if pi.underlying_partition() == *rho {
                count += 1;
            }
        }
    }
    Ok(BigInt::from(count))
}

/// The full lattice suite at one `n`:
///
/// - rank sizes equal `S_B(n, n-k)`;
/// - rank Möbius sums equal `s_B(n, n-k)`;
/// - `mu(top) = (-1)^n (2n-1)!!`;
/// - for every element, `|mu|` equals both the product formula and the
///   brute-force count of signed permutations over it, with sign `(-1)^rank`;
/// - `sum_k s_B(n,k) = 0` for `n >= 1`.
pub fn verify_lattice(n: usize) -> Result<Report, Error> {
    let mut report = Report::new(format!("signed partition lattice, n={n}"));
    let lat = LatticePoset::build(n)?;
    let mu = lat.mobius();

    for k in 0..=n {
        report.check(
            BigInt::from(lat.whitney_second(k))
                == stirling_number(StirlingKind::SecondB, n, (n - k) as i64),
            || format!("rank size at k={k}"),
        );
        report.check(
            lat.whitney_first(&mu, k)
                == signed_first_kind_poly(CoxeterType::B, n, (n - k) as i64).eval_one(),
            || format!("rank Moebius sum at k={k}"),
        );
    }

    let top_mu = &mu[lat.top()];
    let expect = {
        let d = double_factorial(2 * n as i64 - 1);
        if n % 2 == 1 {
            -d
        } else {
            d
        }
    };
    report.check(*top_mu == expect, || {
        format!("mu(top) = {top_mu}, expected {expect}")
    });

    for (i, rho) in lat.elements().iter().enumerate() {
        let formula = count_b_rho_formula(rho);
        let brute = count_b_rho_brute(rho)?;
        report.check(formula == brute, || {
            format!("product formula vs brute force at {rho}")
        });
        let signed = if lat.rank(i) % 2 == 1 {
            -formula.clone()
        } else {
            formula.clone()
        };
        report.check(mu[i] == signed, || {
            format!("mu vs (-1)^rank #B at {rho}")
        });
    }

    if n >= 1 {
        let total: BigInt = (0..=n as i64)
            .map(|k| signed_first_kind_poly(CoxeterType::B, n, k).eval_one())
            .sum();
        report.check(total.is_zero(), || format!("sum_k s_B({n},k) = {total}"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_lattices() {
        let lat = LatticePoset::build(1).unwrap();
        assert_eq!(lat.len(), 2);
        let lat = LatticePoset::build(2).unwrap();
        assert_eq!(lat.len(), 6);
        let lat = LatticePoset::build(3).unwrap();
        assert_eq!(lat.len(), 24);
        assert!(LatticePoset::build(6).is_err());
    }

    #[test]
    fn mobius_small_values() {
        let lat = LatticePoset::build(2).unwrap();
        let mu = lat.mobius();
        assert_eq!(mu[lat.bottom()], BigInt::one());
        assert_eq!(mu[lat.top()], BigInt::from(3));
        // every rank-1 element covers only the bottom
        for i in 0..lat.len() {
            if lat.rank(i) == 1 {
                assert_eq!(mu[i], BigInt::from(-1));
            }
        }
    }

    #[test]
    fn whitney_small_values() {
        let lat = LatticePoset::build(2).unwrap();
        let mu = lat.mobius();
        assert_eq!(lat.whitney_second(1), 4);
        assert_eq!(lat.whitney_first(&mu, 2), BigInt::from(3));
        assert_eq!(lat.whitney_second(0), 1);
        assert_eq!(lat.whitney_first(&mu, 0), BigInt::one());
    }

    #[test]
    fn count_b_rho_examples() {
        // zero block {-1,0,1}: one unpaired 2-cycle
        let rho = SignedPartition::from_blocks(1, vec![vec![0, 1, -1]]).unwrap();
        assert_eq!(count_b_rho_formula(&rho), BigInt::one());
        assert_eq!(count_b_rho_brute(&rho).unwrap(), BigInt::one());

        // the worked 7-element partition: 5!! * 2! * 0! = 30
        let rho = SignedPartition::from_blocks(
            7,
            vec![
                vec![0, 1, -1, 3, -3, 6, -6],
                vec![-2, 5, -7],
                vec![2, -5, 7],
                vec![-4],
                vec![4],
            ],
        )
        .unwrap();
        assert_eq!(count_b_rho_formula(&rho), BigInt::from(30));

        // top of the n=2 lattice: (5-2)!! = 3
        let rho = SignedPartition::from_blocks(2, vec![vec![0, 1, -1, 2, -2]]).unwrap();
        assert_eq!(count_b_rho_formula(&rho), BigInt::from(3));
    }

    #[test]
    fn full_suite_small() {
        for n in 0..=3 {
            let report = verify_lattice(n).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn interval_factorization() {
        // |mu(rho)| equals the product of zero-block and pair factors
        for n in 0..=4usize {
            let lat = LatticePoset::build(n).unwrap();
            let mu = lat.mobius();
            for (i, rho) in lat.elements().iter().enumerate() {
                let m = rho.zero_block().len() as i64 / 2;
                let mut expect = double_factorial(2 * m - 1);
                for (_, pos) in rho.pairs() {
                    expect *= factorial(pos.len() - 1);
                }
                assert_eq!(mu[i].magnitude(), expect.magnitude(), "at {rho}");
            }
        }
    }
}
