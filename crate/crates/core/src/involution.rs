//! Splitting and merging maps on ordered set partitions and the
//! sign-reversing involution they generate, in types A and B.
//!
//! Splitting detaches a block maximum `M` into its own block (block pair in
//! type B) and creates exactly one new inversion; merging is the inverse.
//! The involution pairs off all ordered partitions except one fixed point
//! while preserving `(n - k) + inv`, which telescopes the alternating sums
//! `sum_k (-q)^{n-k} S^o[n,k]` and `sum_k (-q)^{n-k} S_B^o[n,k]` down to 1
//! and yields divisibility by `q^m - q` for the higher powers.

use num_bigint::BigInt;

use crate::combinat::{ordered_partitions, OrderedPartition};
use crate::qpoly::QPoly;
use crate::report::Report;
use crate::stirling::{ordered_poly, OrderedKind};
use crate::{CoxeterType, Error};

/// What the involution did to an ordered partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Split(i64),
    Merge(i64),
    Fixed,
}

/// One application of the involution, with enough data to replay it.
#[derive(Clone, Debug)]
pub struct InvolutionTrace {
    pub input: OrderedPartition,
    pub action: Action,
    pub output: OrderedPartition,
}

fn block_max(block: &[i64]) -> i64 {
    *block.iter().max().expect("nonempty block")
}

fn block_abs_max(block: &[i64]) -> i64 {
    block.iter().map(|x| x.abs()).max().expect("nonempty block")
}

/// Is `omega` splittable at `M`?  `M` must be the maximum of a block of size
/// at least two (and positive in type B).
fn split_position(omega: &OrderedPartition, m: i64) -> Result<usize, Error> {
    if omega.flavor() == CoxeterType::B && m <= 0 {
        return Err(Error::NotSplittable {
            value: m,
            reason: "split values must be positive".into(),
        });
    }
    let Some(i) = omega.blocks().iter().position(|b| block_max(b) == m) else {
        return Err(Error::NotSplittable {
            value: m,
            reason: "not a block maximum".into(),
        });
    };
    if omega.blocks()[i].len() < 2 {
        return Err(Error::NotSplittable {
            value: m,
            reason: "its block is a singleton".into(),
        });
    }
    Ok(i)
}

/// Split off the block maximum `M`.
///
/// Type A: `M = max S_i` leaves its block and becomes the singleton `{M}`
/// directly before the remainder of `S_i`.  Type B: `M` and `-M` leave their
/// blocks and become a new block pair, placed to the left of the remainder
/// when `M` sat in an odd (first-of-pair) block and to the right when it sat
/// in an even block or the zero block.
pub fn split(omega: &OrderedPartition, m: i64) -> Result<OrderedPartition, Error> {
    let i = split_position(omega, m)?;
    let mut blocks: Vec<Vec<i64>> = omega.blocks().to_vec();
    match omega.flavor() {
        CoxeterType::A => {
            blocks[i].retain(|&x| x != m);
            blocks.insert(i, vec![m]);
        }
        CoxeterType::B => {
            if i == 0 {
                blocks[0].retain(|&x| x != m && x != -m);
                blocks.insert(1, vec![m]);
                blocks.insert(2, vec![-m]);
            } else if i % 2 == 1 {
                blocks[i].retain(|&x| x != m);
                blocks[i + 1].retain(|&x| x != -m);
                blocks.insert(i, vec![m]);
                blocks.insert(i, vec![-m]);
            } else {
                blocks[i].retain(|&x| x != m);
                blocks[i - 1].retain(|&x| x != -m);
                blocks.insert(i + 1, vec![-m]);
                blocks.insert(i + 1, vec![m]);
            }
        }
    }
    OrderedPartition::from_blocks(omega.flavor(), omega.n(), blocks)
}

/// Where (if anywhere) is `omega` mergeable at `M`?
///
/// Type A: `S_i = {M}` and `M > max S_{i+1}`.  Type B: `M > 0` sits in a
/// singleton block whose partner is `{-M}`; with the pair ordered `-M/M` the
/// pair merges rightward into the next pair (requiring `M > max|S_{2i+1}|`),
/// and ordered `M/-M` it merges leftward (requiring `M > max|S_{2i-2}|`).
fn merge_check(omega: &OrderedPartition, m: i64) -> Result<usize, Error> {
    let blocks = omega.blocks();
    let Some(i) = blocks.iter().position(|b| b.as_slice() == [m]) else {
        return Err(Error::NotMergeable {
            value: m,
            reason: "not in a singleton block".into(),
        });
    };
    match omega.flavor() {
        CoxeterType::A => {
            if i + 1 >= blocks.len() {
                return Err(Error::NotMergeable {
                    value: m,
                    reason: "no block to its right".into(),
                });
            }
            if m <= block_max(&blocks[i + 1]) {
                return Err(Error::NotMergeable {
                    value: m,
                    reason: "not larger than the next block's maximum".into(),
                });
            }
        }
        CoxeterType::B => {
            if m <= 0 {
                return Err(Error::NotMergeable {
                    value: m,
                    reason: "merge values must be positive".into(),
                });
            }
            if i % 2 == 1 {
                // pair ordered M / -M: merge leftward
                if m <= block_abs_max(&blocks[i - 1]) {
                    return Err(Error::NotMergeable {
                        value: m,
                        reason: "not larger than the absolute maximum to its left".into(),
                    });
                }
            } else {
                // pair ordered -M / M: merge rightward
                if i + 1 >= blocks.len() {
                    return Err(Error::NotMergeable {
                        value: m,
                        reason: "no pair to its right".into(),
                    });
                }
                if m <= block_abs_max(&blocks[i + 1]) {
                    return Err(Error::NotMergeable {
                        value: m,
                        reason: "not larger than the absolute maximum to its right".into(),
                    });
                }
            }
        }
    }
    Ok(i)
}

/// Merge the singleton `{M}` into its neighbor, inverting [`split`].
pub fn merge(omega: &OrderedPartition, m: i64) -> Result<OrderedPartition, Error> {
    let i = merge_check(omega, m)?;
    let mut blocks: Vec<Vec<i64>> = omega.blocks().to_vec();
    match omega.flavor() {
        CoxeterType::A => {
            blocks[i + 1].push(m);
            blocks.remove(i);
        }
        CoxeterType::B => {
            if i % 2 == 1 {
                // pair (M, -M) at (i, i+1): M joins block i-1, -M its partner
                blocks.remove(i + 1);
                blocks.remove(i);
                if i - 1 == 0 {
                    blocks[0].push(m);
                    blocks[0].push(-m);
                } else {
                    blocks[i - 1].push(m);
                    blocks[i - 2].push(-m);
                }
            } else {
                // pair (-M, M) at (i-1, i): M joins block i+1, -M block i+2
                blocks.remove(i);
                blocks.remove(i - 1);
                blocks[i - 1].push(m);
                blocks[i].push(-m);
            }
        }
    }
    OrderedPartition::from_blocks(omega.flavor(), omega.n(), blocks)
}

/// Apply the involution: act at the largest `M` at which `omega` is
/// splittable or mergeable, or report a fixed point.
///
/// A value heading a mergeable singleton cannot simultaneously sit inside a
/// splittable block, so the action at the chosen `M` is unambiguous (checked
/// at runtime).
pub fn phi(omega: &OrderedPartition) -> InvolutionTrace {
    let mut best: Option<(i64, bool)> = None; // (M, is_split)
    for block in omega.blocks() {
        let m = block_max(block);
        let splittable = split_position(omega, m).is_ok();
        let mergeable = merge_check(omega, m).is_ok();
        assert!(
            !(splittable && mergeable),
            "value {m} is both splittable and mergeable"
        );
        if splittable || mergeable {
            if best.is_none_or(|(bm, _)| m > bm) {
                best = Some((m, splittable));
            }
        }
    }
    match best {
        None => InvolutionTrace {
            input: omega.clone(),
            action: Action::Fixed,
            output: omega.clone(),
        },
        Some((m, true)) => InvolutionTrace {
            input: omega.clone(),
            action: Action::Split(m),
            output: split(omega, m).expect("split precondition checked"),
        },
        Some((m, false)) => InvolutionTrace {
            input: omega.clone(),
            action: Action::Merge(m),
            output: merge(omega, m).expect("merge precondition checked"),
        },
    }
}

/// The canonical fixed point: singletons in increasing order (type A), or the
/// zero block followed by `-i/i` singleton pairs (type B).
pub fn canonical_fixed_point(ty: CoxeterType, n: usize) -> OrderedPartition {
    let blocks: Vec<Vec<i64>> = match ty {
        CoxeterType::A => (1..=n as i64).map(|i| vec![i]).collect(),
        CoxeterType::B => {
            let mut blocks = vec![vec![0]];
            for i in 1..=n as i64 {
                blocks.push(vec![-i]);
                blocks.push(vec![i]);
            }
            blocks
        }
    };
    OrderedPartition::from_blocks(ty, n, blocks).expect("canonical fixed point is valid")
}

/// Exhaustively check the involution over all ordered partitions of the
/// flavor: it is a sign-reversing, `(n-k)+inv`-preserving involution with the
/// canonical object as its unique fixed point, and the resulting pairing
/// cancels the signed sum `sum (-1)^{n-k} q^{(n-k)+inv}` down to 1 without
/// consulting the recursion tables.
pub fn verify_involution(ty: CoxeterType, n: usize) -> Report {
    let mut report = Report::new(format!("involution, type {ty}, n={n}"));
    let mut fixed_points = Vec::new();
    let mut signed_sum = QPoly::zero();
    for k in 0..=n as i64 {
        for omega in ordered_partitions(ty, n, k) {
            let weight = (n as i64 - k) as usize + omega.inv() as usize;
            let term = QPoly::monomial(1, weight);
            signed_sum = if (n as i64 - k) % 2 == 1 {
                &signed_sum - &term
            } else {
                &signed_sum + &term
            };

            let trace = phi(&omega);
            if trace.action == Action::Fixed {
                fixed_points.push(omega.clone());
                continue;
            }
            let back = phi(&trace.output);
            report.check(back.output == omega, || {
                format!("phi^2 != id at {omega}")
            });
            let k_out = trace.output.k() as i64;
            report.check((k - k_out).abs() == 1, || {
                format!("pair count did not change by one at {omega}")
            });
            let delta_blocks =
                (omega.block_count() as i64 - trace.output.block_count() as i64).abs();
            let expected_delta = match ty {
                CoxeterType::A => 1,
                CoxeterType::B => 2,
            };
            report.check(delta_blocks == expected_delta, || {
                format!("block count changed by {delta_blocks} at {omega}")
            });
            let inv_delta = trace.output.inv() as i64 - omega.inv() as i64;
            let expected_inv = match trace.action {
                Action::Split(_) => 1,
                Action::Merge(_) => -1,
                Action::Fixed => unreachable!(),
            };
            report.check(inv_delta == expected_inv, || {
                format!("inv changed by {inv_delta} under {:?} at {omega}", trace.action)
            });
            let weight_out = (n as i64 - k_out) + trace.output.inv() as i64;
            report.check(weight_out == weight as i64, || {
                format!("(n-k)+inv not preserved at {omega}")
            });
        }
    }
    report.check(fixed_points.len() == 1, || {
        format!("{} fixed points instead of 1", fixed_points.len())
    });
    if let [fp] = fixed_points.as_slice() {
        report.check(*fp == canonical_fixed_point(ty, n), || {
            format!("unexpected fixed point {fp}")
        });
    }
    report.check(signed_sum == QPoly::one(), || {
        format!("signed sum telescopes to {signed_sum} instead of 1")
    });
    report
}

/// `sum_k (-1)^{n-k} q^{m(n-k)} S^o[n,k]` (type A) or with `S_B^o` (type B),
/// from the recursion tables.
pub fn alternating_sum(ty: CoxeterType, n: usize, m: usize) -> QPoly {
    assert!(m >= 1, "alternating sums need m >= 1");
    let kind = match ty {
        CoxeterType::A => OrderedKind::OrderedA,
        CoxeterType::B => OrderedKind::OrderedB,
    };
    let mut total = QPoly::zero();
    for k in 0..=n as i64 {
        let term = ordered_poly(kind, n, k).shift(m * (n - k as usize));
        total = if (n as i64 - k) % 2 == 1 {
            &total - &term
        } else {
            &total + &term
        };
    }
    total
}

/// The residue of [`alternating_sum`] modulo `q^m - q` (` m >= 2`); the
/// divisibility theorems say this is exactly 1.
pub fn alternating_sum_residue(ty: CoxeterType, n: usize, m: usize) -> QPoly {
    alternating_sum(ty, n, m).reduce_mod_qm_minus_q(m)
}

/// Alternating sums and divisibility over a bound:
/// `m = 1` sums are exactly 1; for `2 <= m <= m_max` the residue mod
/// `q^m - q` is 1.
pub fn verify_divisibility(ty: CoxeterType, n_max: usize, m_max: usize) -> Report {
    let mut report = Report::new(format!("alternating sums and divisibility, type {ty}"));
    for n in 0..=n_max {
        report.check(alternating_sum(ty, n, 1) == QPoly::one(), || {
            format!("m=1 alternating sum != 1 at n={n}")
        });
        for m in 2..=m_max {
            report.check(alternating_sum_residue(ty, n, m) == QPoly::one(), || {
                format!("residue mod q^{m}-q != 1 at n={n}")
            });
        }
    }
    report
}

/// The graded Euler-characteristic candidate: `alternating_sum(ty, n, m) - 1`.
pub fn euler_characteristic(ty: CoxeterType, n: usize, m: usize) -> QPoly {
    &alternating_sum(ty, n, m) - &QPoly::one()
}

/// The sign/palindromy pattern of `alternating_sum(A, n, 2) - 1`: ignoring
/// signs the coefficients of `q^1..q^deg` form a palindrome, positive and
/// negative coefficients are equally many, and the lower-degree half of the
/// nonzero coefficients is positive with the rest negative.  Reported as a
/// boolean; this is a conjecture-level observation, not a theorem.
pub fn euler_palindromy_holds(n: usize) -> bool {
    let p = euler_characteristic(CoxeterType::A, n, 2);
    if p.is_zero() {
        return true;
    }
    if !p.coeff(0).eq(&BigInt::from(0)) {
        return false;
    }
    let deg = p.degree().unwrap();
    let body: Vec<BigInt> = (1..=deg).map(|i| p.coeff(i)).collect();
    let abs: Vec<BigInt> = body.iter().map(|c| c.magnitude().clone().into()).collect();
    let palindromic = abs.iter().eq(abs.iter().rev());
    let nonzero: Vec<&BigInt> = body.iter().filter(|c| !num_traits::Zero::is_zero(*c)).collect();
    let pos = nonzero.iter().filter(|c| c.sign() == num_bigint::Sign::Plus).count();
    let neg = nonzero.len() - pos;
    let half = nonzero.len() / 2;
    let lower_positive = nonzero[..half]
        .iter()
        .all(|c| c.sign() == num_bigint::Sign::Plus);
    let upper_negative = nonzero[nonzero.len() - half..]
        .iter()
        .all(|c| c.sign() == num_bigint::Sign::Minus);
    palindromic && pos == neg && lower_positive && upper_negative
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord_a(n: usize, blocks: &[&[i64]]) -> OrderedPartition {
        OrderedPartition::from_blocks(
            CoxeterType::A,
            n,
            blocks.iter().map(|b| b.to_vec()).collect(),
        )
        .unwrap()
    }

    fn ord_b(n: usize, blocks: &[&[i64]]) -> OrderedPartition {
        OrderedPartition::from_blocks(
            CoxeterType::B,
            n,
            blocks.iter().map(|b| b.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn split_and_merge_worked_examples() {
        let omega = ord_a(8, &[&[2, 4, 6], &[8], &[3, 5], &[1], &[7]]);
        let split6 = split(&omega, 6).unwrap();
        assert_eq!(
            split6,
            ord_a(8, &[&[6], &[2, 4], &[8], &[3, 5], &[1], &[7]])
        );
        assert_eq!(split6.inv(), omega.inv() + 1);
        assert_eq!(merge(&split6, 6).unwrap(), omega);

        let merged8 = merge(&omega, 8).unwrap();
        assert_eq!(merged8, ord_a(8, &[&[2, 4, 6], &[3, 5, 8], &[1], &[7]]));
        assert_eq!(merged8.inv(), omega.inv() - 1);
        assert_eq!(split(&merged8, 8).unwrap(), omega);

        // splittable also at 5, mergeable only at 8
        assert!(split(&omega, 5).is_ok());
        assert!(split(&omega, 8).is_err());
        assert!(merge(&omega, 7).is_err());
        assert!(merge(&omega, 6).is_err());
    }

    #[test]
    fn split_worked_examples_type_b() {
        // zero-block split
        let omega = ord_b(4, &[&[-4, -1, 0, 1, 4], &[2, -3], &[-2, 3]]);
        let out = split(&omega, 4).unwrap();
        assert_eq!(
            out,
            ord_b(4, &[&[-1, 0, 1], &[4], &[-4], &[2, -3], &[-2, 3]])
        );
        assert_eq!(out.inv(), omega.inv() + 1);
        assert_eq!(merge(&out, 4).unwrap(), omega);

        // even-block split goes right, odd-block split goes left
        let omega = ord_b(
            6,
            &[&[-5, -4, 0, 4, 5], &[-2, 3, -6], &[2, -3, 6], &[1], &[-1]],
        );
        let out = split(&omega, 6).unwrap();
        assert_eq!(
            out,
            ord_b(
                6,
                &[&[-5, -4, 0, 4, 5], &[-2, 3], &[2, -3], &[6], &[-6], &[1], &[-1]]
            )
        );
        assert_eq!(merge(&out, 6).unwrap(), omega);

        let omega = ord_b(
            6,
            &[&[-5, -4, 0, 4, 5], &[-2, 3, 6], &[2, -3, -6], &[1], &[-1]],
        );
        let out = split(&omega, 6).unwrap();
        assert_eq!(
            out,
            ord_b(
                6,
                &[&[-5, -4, 0, 4, 5], &[-6], &[6], &[-2, 3], &[2, -3], &[1], &[-1]]
            )
        );
        assert_eq!(merge(&out, 6).unwrap(), omega);
    }

    #[test]
    fn phi_fixed_points() {
        let omega = ord_a(3, &[&[1], &[2], &[3]]);
        assert_eq!(phi(&omega).action, Action::Fixed);
        assert_eq!(omega, canonical_fixed_point(CoxeterType::A, 3));

        let omega = ord_a(2, &[&[1, 2]]);
        let trace = phi(&omega);
        assert_eq!(trace.action, Action::Split(2));
        assert_eq!(trace.output, ord_a(2, &[&[2], &[1]]));

        let fp = canonical_fixed_point(CoxeterType::B, 3);
        assert_eq!(phi(&fp).action, Action::Fixed);
    }

    #[test]
    fn involution_exhaustive_small() {
        for n in 0..=5 {
            let r = verify_involution(CoxeterType::A, n);
            assert!(r.passed(), "{r}");
        }
        for n in 0..=3 {
            let r = verify_involution(CoxeterType::B, n);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn alternating_sums_small() {
        // n=2, type A, m=2: q^4 S^o[2,0] - q^2 S^o[2,1] + S^o[2,2] = 1 + q - q^2
        assert_eq!(
            alternating_sum(CoxeterType::A, 2, 2),
            QPoly::from_i64_coeffs(&[1, 1, -1])
        );
        assert_eq!(
            alternating_sum_residue(CoxeterType::A, 2, 2),
            QPoly::one()
        );
        for ty in [CoxeterType::A, CoxeterType::B] {
            for n in 0..=8 {
                assert_eq!(alternating_sum(ty, n, 1), QPoly::one(), "type {ty} n={n}");
            }
        }
        let r = verify_divisibility(CoxeterType::A, 8, 4);
        assert!(r.passed(), "{r}");
        let r = verify_divisibility(CoxeterType::B, 8, 4);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn euler_characteristic_table_rows() {
        assert_eq!(
            alternating_sum(CoxeterType::A, 7, 2),
            QPoly::from_i64_coeffs(&[1, 6, 14, 14, 0, -14, -14, -6])
        );
        assert_eq!(
            alternating_sum(CoxeterType::A, 8, 2),
            QPoly::from_i64_coeffs(&[1, 7, 20, 28, 14, -14, -28, -20, -7])
        );
        for n in 0..=10 {
            assert!(euler_palindromy_holds(n), "n={n}");
        }
    }
}
