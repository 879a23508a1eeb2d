//! Elementary and complete homogeneous symmetric polynomials in specialized
//! variables, and the identity suites connecting them to Stirling numbers:
//! the e/h closed forms, ordinary generating functions, falling-factorial
//! expansions of `t^n`, and the inverse-matrix theorems.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::qpoly::{q_bracket, QPoly, TPoly};
use crate::report::Report;
use crate::stirling::{stirling_poly, StirlingKind};
use crate::{CoxeterType, Error};

/// An ordered list of substituted variable values `x_1, x_2, ...`, each an
/// exact q-polynomial (for instance `[1], [3], [5], ...`).
#[derive(Clone, Debug)]
pub struct SpecializedVars {
    values: Vec<QPoly>,
}

impl SpecializedVars {
    pub fn new(values: Vec<QPoly>) -> Self {
        SpecializedVars { values }
    }

    /// `x_i = [2i - 1]`: the odd brackets `[1], [3], [5], ...`.
    pub fn odd_brackets(count: usize) -> Self {
        SpecializedVars::new((1..=count).map(|i| q_bracket(2 * i as i64 - 1)).collect())
    }

    /// `x_i = [i]`: the brackets `[1], [2], [3], ...`.
    pub fn consecutive_brackets(count: usize) -> Self {
        SpecializedVars::new((1..=count).map(|i| q_bracket(i as i64)).collect())
    }

    /// `x_i = [i - 1]`: the brackets `[0], [1], [2], ...`.
    pub fn staircase_brackets(count: usize) -> Self {
        SpecializedVars::new((0..count as i64).map(q_bracket).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `x_i` for `i >= 1`.
    pub fn value(&self, i: usize) -> &QPoly {
        &self.values[i - 1]
    }

    /// The tail `x_{from+1}, x_{from+2}, ..., x_to`.
    pub fn tail(&self, from: usize, to: usize) -> SpecializedVars {
        SpecializedVars::new(self.values[from..to].to_vec())
    }

    fn check_n(&self, n: usize) -> Result<(), Error> {
        if n > self.values.len() {
            return Err(Error::InvalidArgument(format!(
                "{} variables requested but only {} specialized",
                n,
                self.values.len()
            )));
        }
        Ok(())
    }

    /// The elementary symmetric polynomial `e_k(x_1, ..., x_n)`, by the
    /// recursion `e_k(n) = e_k(n-1) + x_n e_{k-1}(n-1)`.
    pub fn elementary(&self, k: i64, n: usize) -> Result<QPoly, Error> {
        self.check_n(n)?;
        if k < 0 || k > n as i64 {
            return Ok(QPoly::zero());
        }
        let k = k as usize;
        // e[j] holds e_j(m) as m sweeps 0..=n
        let mut e = vec![QPoly::zero(); k + 1];
        e[0] = QPoly::one();
        for m in 1..=n {
            for j in (1..=k.min(m)).rev() {
                let add = &e[j - 1] * self.value(m);
                e[j] = &e[j] + &add;
            }
        }
        Ok(e[k].clone())
    }

    /// The complete homogeneous symmetric polynomial `h_k(x_1, ..., x_n)`, by
    /// the recursion `h_k(n) = h_k(n-1) + x_n h_{k-1}(n)`.
    pub fn homogeneous(&self, k: i64, n: usize) -> Result<QPoly, Error> {
        self.check_n(n)?;
        if k < 0 {
            return Ok(QPoly::zero());
        }
        if k == 0 {
            return Ok(QPoly::one());
        }
        if n == 0 {
            return Ok(QPoly::zero());
        }
        let k = k as usize;
        let mut h = vec![QPoly::zero(); k + 1];
        h[0] = QPoly::one();
        for m in 1..=n {
            for j in 1..=k {
                let add = &h[j - 1] * self.value(m);
                h[j] = &h[j] + &add;
            }
        }
        Ok(h[k].clone())
    }

    /// `E_n(t) = sum_k e_k(n) t^k` as an exact polynomial in `t`.
    pub fn elementary_gf(&self, n: usize) -> Result<TPoly, Error> {
        let coeffs = (0..=n as i64)
            .map(|k| self.elementary(k, n))
            .collect::<Result<_, _>>()?;
        Ok(TPoly::from_coeffs(coeffs))
    }

    /// `H_n(t) = sum_{k <= order} h_k(n) t^k`, truncated.
    pub fn homogeneous_gf(&self, n: usize, order: usize) -> Result<TPoly, Error> {
        let coeffs = (0..=order as i64)
            .map(|k| self.homogeneous(k, n))
            .collect::<Result<_, _>>()?;
        Ok(TPoly::from_coeffs(coeffs))
    }
}

/// `prod_{i=1}^{n} (t + x_i)` over the specialized variables.
fn rising_product(vars: &SpecializedVars, n: usize) -> TPoly {
    let mut p = TPoly::one();
    for i in 1..=n {
        p = &p * &TPoly::from_coeffs(vec![vars.value(i).clone(), QPoly::one()]);
    }
    p
}

/// `prod_{i=1}^{n} (1 - x_i t)` over the specialized variables.
fn falling_denominator(vars: &SpecializedVars, n: usize) -> TPoly {
    let mut p = TPoly::one();
    for i in 1..=n {
        p = &p * &TPoly::from_coeffs(vec![QPoly::one(), -vars.value(i)]);
    }
    p
}

/// The e/h closed forms for all four q-Stirling families:
///
/// - `c[n,k]   = e_{n-k}([1], [2], ..., [n-1])`
/// - `S[n,k]   = h_{n-k}([1], [2], ..., [k])`
/// - `c_B[n,k] = e_{n-k}([1], [3], ..., [2n-1])`
/// - `S_B[n,k] = h_{n-k}([1], [3], ..., [2k+1])`
///
/// checked as exact polynomial equalities for all `0 <= k <= n <= n_max`
/// against the recursion tables (two independent computation paths).
pub fn verify_eh_closed_forms(n_max: usize) -> Report {
    let mut report = Report::new("e/h closed forms");
    let odd = SpecializedVars::odd_brackets(2 * n_max + 2);
    let consecutive = SpecializedVars::consecutive_brackets(n_max + 1);
    for n in 0..=n_max {
        for k in 0..=n as i64 {
            let e_a = consecutive
                .elementary(n as i64 - k, n.saturating_sub(1))
                .unwrap();
            report.check(e_a == stirling_poly(StirlingKind::FirstA, n, k), || {
                format!("c[{n},{k}] != e_(n-k) of consecutive brackets")
            });
            let h_a = consecutive.homogeneous(n as i64 - k, k as usize).unwrap();
            report.check(h_a == stirling_poly(StirlingKind::SecondA, n, k), || {
                format!("S[{n},{k}] != h_(n-k) of consecutive brackets")
            });
            let e_b = odd.elementary(n as i64 - k, n).unwrap();
            report.check(e_b == stirling_poly(StirlingKind::FirstB, n, k), || {
                format!("c_B[{n},{k}] != e_(n-k) of odd brackets")
            });
            let h_b = odd.homogeneous(n as i64 - k, k as usize + 1).unwrap();
            report.check(h_b == stirling_poly(StirlingKind::SecondB, n, k), || {
                format!("S_B[{n},{k}] != h_(n-k) of odd brackets")
            });
        }
    }
    report
}

/// Ordinary generating functions:
///
/// - `sum_k c_B[n,k] t^k = (t + [1])(t + [3]) ... (t + [2n-1])` (exact),
/// - `sum_k c[n,k] t^k = t (t + [1]) ... (t + [n-1])` for `n >= 1` (exact),
/// - `sum_{n >= k} S_B[n,k] t^n = t^k / ((1 - [1]t)(1 - [3]t) ... (1 - [2k+1]t))`
///   and the type A analogue with denominator `(1 - [1]t) ... (1 - [k]t)`,
///   verified in cleared-denominator form as truncated series in `t`,
/// - the generic generating functions `E_n(t)` and `H_n(t)` for the
///   specialized variable lists, also in cleared form.
pub fn verify_ogf(n_max: usize, order: usize) -> Report {
    let mut report = Report::new("ordinary generating functions");
    let odd = SpecializedVars::odd_brackets(order + 2);
    let consecutive = SpecializedVars::consecutive_brackets(order + 2);

    for n in 0..=n_max {
        let lhs_b = TPoly::from_coeffs(
            (0..=n as i64)
                .map(|k| stirling_poly(StirlingKind::FirstB, n, k))
                .collect(),
        );
        report.check(lhs_b == rising_product(&odd, n), || {
            format!("first-kind OGF, type B, n={n}")
        });
        if n >= 1 {
            let lhs_a = TPoly::from_coeffs(
                (0..=n as i64)
                    .map(|k| stirling_poly(StirlingKind::FirstA, n, k))
                    .collect(),
            );
            let rhs_a = &TPoly::t() * &rising_product(&consecutive, n - 1);
            report.check(lhs_a == rhs_a, || format!("first-kind OGF, type A, n={n}"));
        }
    }

    for k in 0..=n_max {
        // sum_n S_B[n,k] t^n times prod_{i=0}^{k} (1 - [2i+1]t) = t^k + O(t^{order+1})
        let series_b = TPoly::from_coeffs(
            (0..=order)
                .map(|n| stirling_poly(StirlingKind::SecondB, n, k as i64))
                .collect(),
        );
        let mut denom_b = TPoly::one();
        for i in 0..=k as i64 {
            denom_b = &denom_b * &TPoly::from_coeffs(vec![QPoly::one(), -&q_bracket(2 * i + 1)]);
        }
        let prod = series_b.mul_truncated(&denom_b, order);
        let expect = TPoly::from_coeffs(
            (0..=order)
                .map(|i| if i == k { QPoly::one() } else { QPoly::zero() })
                .collect(),
        );
        report.check(prod == expect, || format!("second-kind OGF, type B, k={k}"));

        let series_a = TPoly::from_coeffs(
            (0..=order)
                .map(|n| stirling_poly(StirlingKind::SecondA, n, k as i64))
                .collect(),
        );
        let denom_a = falling_denominator(&consecutive, k);
        let prod_a = series_a.mul_truncated(&denom_a, order);
        report.check(prod_a == expect, || format!("second-kind OGF, type A, k={k}"));
    }

    // generic generating functions for the specialized lists themselves
    for vars in [&odd, &consecutive] {
        for n in 0..=n_max.min(8) {
            let e_gf = vars.elementary_gf(n).unwrap();
            let mut rising = TPoly::one();
            for i in 1..=n {
                rising = &rising * &TPoly::from_coeffs(vec![QPoly::one(), vars.value(i).clone()]);
            }
            report.check(e_gf == rising, || format!("E_n(t) product form, n={n}"));

            let h_gf = vars.homogeneous_gf(n, order).unwrap();
            let cleared = h_gf.mul_truncated(&falling_denominator(vars, n), order);
            report.check(cleared == TPoly::one(), || {
                format!("H_n(t) product form, n={n}")
            });
        }
    }
    report
}

/// Which form of the `t^n` expansion theorem to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TnVariant {
    /// Generic variables, by exhaustive evaluation on an integer grid.
    Generic,
    /// `t^n = sum_k S[n,k] t(t-[1])...(t-[k-1])`, exact bivariate identity.
    TypeAQ,
    /// `t^n = sum_k S_B[n,k] (t-[1])(t-[3])...(t-[2k-1])`, exact.
    TypeBQ,
}

/// Verify the expansion of `t^n` into falling factorials.
///
/// The generic variant checks
/// `t^n = sum_{k=0}^n h_{n-k}(k+1) (t-x_1)...(t-x_k)` over the integer grid
/// `{0,...,n}^{n+2}` (values for `t` and `x_1..x_{n+1}`).  Both sides have
/// degree at most `n` in each variable, and a polynomial of per-variable
/// degree `<= n` vanishing on a product grid with `n+1` points per axis is
/// identically zero, so the grid check is a complete proof at fixed `n`.
/// The generic variant is restricted to `n <= 6`.
pub fn verify_tn_expansion(n: usize, variant: TnVariant) -> Report {
    match variant {
        TnVariant::Generic => verify_tn_generic(n),
        TnVariant::TypeAQ => verify_tn_q(n, CoxeterType::A),
        TnVariant::TypeBQ => verify_tn_q(n, CoxeterType::B),
    }
}

fn verify_tn_generic(n: usize) -> Report {
    assert!(n <= 6, "generic grid check is restricted to n <= 6");
    let mut report = Report::new(format!("t^n expansion, generic grid, n={n}"));
    let vars = n + 1;
    let points = (n + 1) as i64;
    // odometer over x in {0..n}^{n+1}
    let mut x = vec![0i64; vars];
    loop {
        // h[d][m] = h_d(x_1..x_m) over the integers
        let mut h = vec![vec![0i64; vars + 1]; n + 1];
        h[0] = vec![1; vars + 1];
        for d in 1..=n {
            for m in 1..=vars {
                h[d][m] = h[d][m - 1] + x[m - 1] * h[d - 1][m];
            }
        }
        for t in 0..points {
            let mut rhs: i64 = 0;
            let mut falling: i64 = 1;
            for k in 0..=n {
                rhs += h[n - k][k + 1] * falling;
                if k < n {
                    falling *= t - x[k];
                }
            }
            let lhs = t.pow(n as u32);
            report.check(lhs == rhs, || format!("grid point x={x:?}, t={t}"));
        }
        // advance the odometer
        let mut i = 0;
        loop {
            if i == vars {
                return report;
            }
            x[i] += 1;
            if x[i] < points {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

fn verify_tn_q(n_max: usize, ty: CoxeterType) -> Report {
    let mut report = Report::new(format!("t^n expansion, type {ty}"));
    for n in 0..=n_max {
        let mut rhs = TPoly::zero();
        for k in 0..=n as i64 {
            let kind = match ty {
                CoxeterType::A => StirlingKind::SecondA,
                CoxeterType::B => StirlingKind::SecondB,
            };
            // type A: t (t - [1]) ... (t - [k-1]); type B: (t - [1])(t - [3]) ... (t - [2k-1])
            let mut falling = TPoly::one();
            for i in 0..k {
                let root = match ty {
                    CoxeterType::A => q_bracket(i),
                    CoxeterType::B => q_bracket(2 * i + 1),
                };
                falling = &falling * &TPoly::from_coeffs(vec![-&root, QPoly::one()]);
            }
            rhs = &rhs + &falling.scale(&stirling_poly(kind, n, k));
        }
        let lhs = TPoly::from_coeffs(
            (0..=n)
                .map(|i| if i == n { QPoly::one() } else { QPoly::zero() })
                .collect(),
        );
        report.check(lhs == rhs, || format!("n={n}"));
    }
    report
}

/// Inverse-matrix identities and the e/h alternating-sum theorem.
///
/// Checks `(s . S)_{n,k} = delta_{n,k}` and `(s_B . S_B)_{n,k} = delta_{n,k}`
/// for all `n, k < size` by exact polynomial summation, then checks
///
/// `sum_{a+b=N} (-1)^a e_a(n) h_b(m) = (-1)^N e_N(x_{m+1},...,x_n)` for
/// `n >= m` (and `h_N(x_{n+1},...,x_m)` for `n <= m`)
///
/// for both specialized bracket lists, on all `n, m <= size` and `N <= size`.
pub fn verify_inverse_matrices(size: usize) -> Report {
    let mut report = Report::new("inverse matrices");
    for (name, first, second) in [
        ("type A", StirlingKind::FirstA, StirlingKind::SecondA),
        ("type B", StirlingKind::FirstB, StirlingKind::SecondB),
    ] {
        for n in 0..size {
            for k in 0..size {
                let mut sum = QPoly::zero();
                for i in 0..=n as i64 {
                    let s = stirling_poly(first, n, i);
                    let s = if (n as i64 - i).rem_euclid(2) == 1 { -&s } else { s };
                    sum = &sum + &(&s * &stirling_poly(second, i as usize, k as i64));
                }
                let expect = if n == k { QPoly::one() } else { QPoly::zero() };
                report.check(sum == expect, || format!("{name} product entry ({n},{k})"));
            }
        }
    }

    for vars in [
        SpecializedVars::odd_brackets(2 * size + 2),
        SpecializedVars::consecutive_brackets(2 * size + 2),
    ] {
        for n in 0..=size {
            for m in 0..=size {
                for big_n in 0..=size as i64 {
                    let mut lhs = QPoly::zero();
                    for a in 0..=big_n {
                        let term = &vars.elementary(a, n).unwrap()
                            * &vars.homogeneous(big_n - a, m).unwrap();
                        lhs = if a % 2 == 1 { &lhs - &term } else { &lhs + &term };
                    }
                    let rhs = if n >= m {
                        let tail = vars.tail(m, n);
                        let e = tail.elementary(big_n, n - m).unwrap();
                        if big_n % 2 == 1 {
                            -&e
                        } else {
                            e
                        }
                    } else {
                        let tail = vars.tail(n, m);
                        tail.homogeneous(big_n, m - n).unwrap()
                    };
                    report.check(lhs == rhs, || {
                        format!("alternating e/h sum, n={n} m={m} N={big_n}")
                    });
                }
            }
        }
    }
    report
}

/// The type B falling factorial `(t-1)(t-3)...(t-2k+1)` at an integer `t`.
pub fn type_b_falling_factorial_at(t: &BigInt, k: usize) -> BigInt {
    let mut prod = BigInt::from(1);
    for i in 0..k as i64 {
        prod *= t - BigInt::from(2 * i + 1);
        if prod.is_zero() {
            break;
        }
    }
    prod
}
