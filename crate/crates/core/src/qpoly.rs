//! Dense integer-coefficient polynomials in the variable `q`, together with
//! the q-brackets, q-factorials, Gaussian binomials, base substitution, and
//! reduction modulo `q^m - q` that the Stirling identities live on.
//!
//! Polynomials are kept in canonical form (no trailing zero coefficient; the
//! zero polynomial is the empty coefficient list) so equality is structural.
//! Coefficients are arbitrary-precision integers: Stirling values overflow
//! 64 bits long before the sizes the scanners visit.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Polynomial in `q` with `BigInt` coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        QPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::from_coeffs(vec![c.into()])
    }

    /// `c * q^power`.
    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        QPoly { coeffs }
    }

    /// Build from an ascending coefficient list, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluation at `q = 1`: the classical (numeric) value.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `p(q^m)`: the coefficient of `q^i` moves to `q^{m*i}`.
    ///
    /// Panics if `m == 0`.
    pub fn substitute_power(&self, m: usize) -> QPoly {
        assert!(m >= 1, "substitute_power requires m >= 1");
        if m == 1 || self.is_zero() {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        let mut coeffs = vec![BigInt::zero(); m * deg + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[m * i] = c.clone();
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Remainder of `self` under division by the monic polynomial `q^m - q`.
    ///
    /// The remainder has degree `< m`, and `self - remainder` is divisible by
    /// `q^m - q` over the integers.  Panics if `m < 2`.
    pub fn reduce_mod_qm_minus_q(&self, m: usize) -> QPoly {
        assert!(m >= 2, "reduction modulus q^m - q requires m >= 2");
        let mut coeffs = self.coeffs.clone();
        // q^i = q^{i-m} (q^m - q) + q^{i-m+1}, so fold the top down until deg < m.
        for i in (m..coeffs.len()).rev() {
            let c = std::mem::replace(&mut coeffs[i], BigInt::zero());
            coeffs[i - m + 1] += c;
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Exact division, `None` if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let dd = d.coeffs.len() - 1;
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (f, r) = num_integer::div_rem(rem[i].clone(), lead.clone());
            if !r.is_zero() {
                return None;
            }
            quot[i - dd] = f.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = dc * &f;
                rem[i - dd + j] -= sub;
            }
        }
        if rem.iter().all(Zero::is_zero) {
            Some(QPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// JSON form `{"coeffs": ["c0", "c1", ...]}` with decimal-string
    /// coefficients, ascending powers.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QPoly {
    /// Text form `c0 + c1*q + c2*q^2 + ...`, omitting zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            coeffs.push(c);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c -= r;
            }
            coeffs.push(c);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident, $ty:ty) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add, QPoly);
forward_owned_binop!(Sub, sub, QPoly);
forward_owned_binop!(Mul, mul, QPoly);

/// The q-bracket `[n] = 1 + q + ... + q^{n-1}`; `[0] = 0`.
///
/// Panics for `n < 0`: a lone negative bracket is never evaluated.
pub fn q_bracket(n: i64) -> QPoly {
    assert!(n >= 0, "q_bracket requires n >= 0, got {n}");
    QPoly {
        coeffs: vec![BigInt::one(); n as usize],
    }
}

/// `[n]! = [n][n-1]...[1]`, with `[n]! = 1` for `n < 0` (empty product).
pub fn q_factorial(n: i64) -> QPoly {
    let mut p = QPoly::one();
    let mut i = n;
    while i >= 1 {
        p = &p * &q_bracket(i);
        i -= 1;
    }
    p
}

/// `[n]!! = [n][n-2][n-4]...` ending at `[1]` or `[2]`; `1` for `n < 1`.
pub fn q_double_factorial(n: i64) -> QPoly {
    let mut p = QPoly::one();
    let mut i = n;
    while i >= 1 {
        p = &p * &q_bracket(i);
        i -= 2;
    }
    p
}

thread_local! {
    /// Pascal-triangle cache for Gaussian binomials, grown row by row.
    static GAUSS: RefCell<Vec<Vec<QPoly>>> = const { RefCell::new(Vec::new()) };
}

/// The Gaussian binomial coefficient, computed by the Pascal recursion
/// `[n choose k] = [n-1 choose k-1] + q^k [n-1 choose k]` with memoized rows,
/// never by polynomial division.  Zero for `k` outside `[0, n]`.
pub fn gaussian_binomial(n: usize, k: i64) -> QPoly {
    if k < 0 || k > n as i64 {
        return QPoly::zero();
    }
    let k = k as usize;
    GAUSS.with(|cell| {
        let mut rows = cell.borrow_mut();
        while rows.len() <= n {
            let m = rows.len();
            let mut row = Vec::with_capacity(m + 1);
            for j in 0..=m {
                if j == 0 || j == m {
                    row.push(QPoly::one());
                } else {
                    let prev: &Vec<QPoly> = &rows[m - 1];
                    row.push(&prev[j - 1] + &prev[j].shift(j));
                }
            }
            rows.push(row);
        }
        rows[n][k].clone()
    })
}

/// Gaussian binomial in base `q^m` (substitute `q -> q^m`).
pub fn gaussian_binomial_base(n: usize, k: i64, m: usize) -> QPoly {
    gaussian_binomial(n, k).substitute_power(m)
}

/// Polynomial in `t` whose coefficients are [`QPoly`] values, ascending powers
/// of `t`, with no trailing zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TPoly {
    coeffs: Vec<QPoly>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(QPoly::one())
    }

    /// The variable `t`.
    pub fn t() -> Self {
        TPoly::from_coeffs(vec![QPoly::zero(), QPoly::one()])
    }

    pub fn constant(c: QPoly) -> Self {
        TPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(QPoly::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> QPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Drop all powers of `t` above `order`.
    pub fn truncate(&self, order: usize) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    /// Product with all powers of `t` above `order` discarded.
    pub fn mul_truncated(&self, rhs: &TPoly, order: usize) -> TPoly {
        let mut coeffs = vec![QPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > order || a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &QPoly) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute a [`QPoly`] value for `t`.
    pub fn eval_t(&self, value: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Evaluate at `q = 1`, leaving the coefficient list in `t`.
    pub fn eval_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(QPoly::eval_one).collect()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(QPoly::zero);
            let c = match rhs.coeffs.get(i) {
                Some(b) => &a + b,
                None => a,
            };
            coeffs.push(c);
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(QPoly::zero);
            let c = match rhs.coeffs.get(i) {
                Some(b) => &a - b,
                None => a,
            };
            coeffs.push(c);
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![QPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

forward_owned_binop!(Add, add, TPoly);
forward_owned_binop!(Sub, sub, TPoly);
forward_owned_binop!(Mul, mul, TPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> QPoly {
        QPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn ring_ops_basics() {
        let one_q = p(&[1, 1]);
        assert_eq!(&one_q * &one_q, p(&[1, 2, 1]));
        let any = p(&[3, 0, -2]);
        assert_eq!(&any + &QPoly::zero(), any);
        let a = p(&[1, 1, 1]);
        let b = p(&[1, 1]);
        assert_eq!(&(&a * &b) - &(&b * &a), QPoly::zero());
    }

    #[test]
    fn brackets_and_factorials() {
        assert_eq!(q_bracket(3), p(&[1, 1, 1]));
        assert_eq!(q_bracket(0), QPoly::zero());
        assert_eq!(q_factorial(-2), QPoly::one());
        assert_eq!(q_double_factorial(-1), QPoly::one());
        // [4]!! = [4][2]
        assert_eq!(q_double_factorial(4), p(&[1, 2, 2, 2, 1]));
        assert_eq!(q_factorial(3), &q_bracket(3) * &q_bracket(2));
    }

    #[test]
    #[should_panic(expected = "n >= 0")]
    fn negative_bracket_rejected() {
        q_bracket(-1);
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(7, 0), QPoly::one());
        assert_eq!(gaussian_binomial(3, 5), QPoly::zero());
        assert_eq!(gaussian_binomial(3, -1), QPoly::zero());
    }

    #[test]
    fn gaussian_matches_factorial_quotient() {
        // independent route: [n]! / ([k]! [n-k]!) by exact division
        for n in 0..=10usize {
            for k in 0..=n as i64 {
                let denom = &q_factorial(k) * &q_factorial(n as i64 - k);
                let quot = q_factorial(n as i64).div_exact(&denom).unwrap();
                assert_eq!(gaussian_binomial(n, k), quot, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn substitute_power_basics() {
        assert_eq!(p(&[1, 1]).substitute_power(2), p(&[1, 0, 1]));
        let any = p(&[2, -1, 3]);
        assert_eq!(any.substitute_power(1), any);
        assert_eq!(gaussian_binomial(2, 1).substitute_power(2), p(&[1, 0, 1]));
    }

    #[test]
    fn reduce_mod_examples() {
        // q^3 = (q+1)(q^2-q) + q
        assert_eq!(QPoly::monomial(1, 3).reduce_mod_qm_minus_q(2), p(&[0, 1]));
        assert_eq!(QPoly::one().reduce_mod_qm_minus_q(3), QPoly::one());
        assert_eq!(p(&[1, 1, -1]).reduce_mod_qm_minus_q(2), QPoly::one());
    }

    #[test]
    fn eval_one_collapses_brackets() {
        for n in 0..8i64 {
            assert_eq!(q_bracket(n).eval_one(), BigInt::from(n));
        }
        // [2k]!! at q=1 equals 2^k k!
        let mut expect = BigInt::one();
        for k in 1..7i64 {
            expect *= 2 * k;
            assert_eq!(q_double_factorial(2 * k).eval_one(), expect);
        }
    }

    #[test]
    fn tpoly_products_and_eval() {
        // (t + [1])(t + [3]) has t-coefficient [1] + [3]
        let f1 = TPoly::from_coeffs(vec![q_bracket(1), QPoly::one()]);
        let f3 = TPoly::from_coeffs(vec![q_bracket(3), QPoly::one()]);
        let prod = &f1 * &f3;
        assert_eq!(prod.coeff(1), p(&[2, 1, 1]));
        assert_eq!(prod.coeff(2), QPoly::one());
        assert_eq!(prod.eval_t(&QPoly::zero()), &q_bracket(1) * &q_bracket(3));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, 2, 0, 1]).to_string(), "1 + 2*q + q^3");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(p(&[2, -3]).to_string(), "2 - 3*q");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(
            p(&[2, 1, 1]).to_json().to_string(),
            r#"{"coeffs":["2","1","1"]}"#
        );
    }

    #[test]
    fn div_exact_detects_non_divisibility() {
        let a = p(&[1, 1]);
        assert_eq!(p(&[1, 2, 1]).div_exact(&a), Some(a.clone()));
        assert_eq!(p(&[1, 1, 1]).div_exact(&a), None);
    }

    fn arb_qpoly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-6i64..=6, 0..8).prop_map(|v| QPoly::from_i64_coeffs(&v))
    }

    proptest! {
        #[test]
        fn pascal_property(n in 1usize..12, k in 1i64..11) {
            prop_assume!(k < n as i64);
            let lhs = gaussian_binomial(n, k);
            let rhs = &gaussian_binomial(n - 1, k - 1)
                + &gaussian_binomial(n - 1, k).shift(k as usize);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gaussian_at_one_is_binomial(n in 0usize..12, k in 0i64..12) {
            let mut expect = BigInt::one();
            if k > n as i64 {
                expect = BigInt::zero();
            } else {
                for i in 0..k {
                    expect = expect * BigInt::from(n as i64 - i) / BigInt::from(i + 1);
                }
            }
            prop_assert_eq!(gaussian_binomial(n, k).eval_one(), expect);
        }

        /// As polynomials in t: prod_{i=0}^{k-1} (1 + q^i t) = sum_i q^C(i,2) [k choose i] t^i.
        #[test]
        fn q_binomial_theorem(k in 0usize..=12) {
            let mut lhs = TPoly::one();
            for i in 0..k {
                let factor = TPoly::from_coeffs(vec![QPoly::one(), QPoly::monomial(1, i)]);
                lhs = &lhs * &factor;
            }
            let rhs = TPoly::from_coeffs(
                (0..=k)
                    .map(|i| gaussian_binomial(k, i as i64).shift(i * (i.max(1) - 1) / 2))
                    .collect(),
            );
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduce_mod_is_idempotent_and_ring_compatible(
            a in arb_qpoly(), b in arb_qpoly(), m in 2usize..6
        ) {
            let ra = a.reduce_mod_qm_minus_q(m);
            prop_assert_eq!(ra.reduce_mod_qm_minus_q(m), ra.clone());
            if let Some(d) = ra.degree() {
                prop_assert!(d < m);
            }
            let direct = (&a * &b).reduce_mod_qm_minus_q(m);
            let split = (&ra * &b.reduce_mod_qm_minus_q(m)).reduce_mod_qm_minus_q(m);
            prop_assert_eq!(direct, split);
            // the discarded part is an exact multiple of q^m - q
            let modulus = &QPoly::monomial(1, m) - &QPoly::monomial(1, 1);
            let diff = &a - &ra;
            prop_assert!(diff.div_exact(&modulus).is_some() || diff.is_zero());
        }

        #[test]
        fn substitution_is_a_ring_map(a in arb_qpoly(), b in arb_qpoly(), m in 1usize..4) {
            prop_assert_eq!(
                (&a * &b).substitute_power(m),
                &a.substitute_power(m) * &b.substitute_power(m)
            );
            prop_assert_eq!(
                (&a + &b).substitute_power(m),
                &a.substitute_power(m) + &b.substitute_power(m)
            );
        }
    }
}
