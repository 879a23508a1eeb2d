//! Exact truncated power series in `x` with coefficients that are polynomials
//! in a parameter `t` over arbitrary-precision rationals, and the classical
//! exponential generating function checks built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::report::Report;
use crate::stirling::{stirling_number, StirlingKind};

/// Polynomial in `t` with exact rational coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        RatPoly::constant(BigRational::from_integer(c.into()))
    }

    pub fn t() -> Self {
        RatPoly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// All coefficients integral (denominator 1)?
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one() || c.denom() == &BigInt::from(-1))
    }
}

/// Truncated power series `sum_{n <= order} c_n x^n` with [`RatPoly`]
/// coefficients.  All arithmetic is exact and respects the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatSeries {
    order: usize,
    coeffs: Vec<RatPoly>,
}

impl RatSeries {
    pub fn zero(order: usize) -> Self {
        RatSeries {
            order,
            coeffs: vec![RatPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = RatSeries::zero(order);
        s.coeffs[0] = RatPoly::one();
        s
    }

    /// `c * x^power`.
    pub fn monomial(order: usize, c: RatPoly, power: usize) -> Self {
        let mut s = RatSeries::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &RatPoly {
        &self.coeffs[n]
    }

    pub fn add(&self, rhs: &RatSeries) -> RatSeries {
        assert_eq!(self.order, rhs.order, "truncation orders must match");
        RatSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &RatSeries) -> RatSeries {
        assert_eq!(self.order, rhs.order, "truncation orders must match");
        RatSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &RatSeries) -> RatSeries {
        assert_eq!(self.order, rhs.order, "truncation orders must match");
        let mut out = RatSeries::zero(self.order);
        for i in 0..=self.order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=self.order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        out
    }

    pub fn scale(&self, c: &RatPoly) -> RatSeries {
        RatSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> RatSeries {
        let mut out = RatSeries::one(self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `exp` of a series with zero constant term, via `E' = f' E`.
    pub fn exp(&self) -> RatSeries {
        assert!(
            self.coeffs[0].is_zero(),
            "exp needs a zero constant term"
        );
        let mut out = RatSeries::zero(self.order);
        out.coeffs[0] = RatPoly::one();
        for n in 1..=self.order {
            // n e_n = sum_{j=1}^{n} j f_j e_{n-j}
            let mut acc = RatPoly::zero();
            for j in 1..=n {
                let jf = self.coeffs[j].scale(&BigRational::from_integer(BigInt::from(j)));
                acc = acc.add(&jf.mul(&out.coeffs[n - j]));
            }
            out.coeffs[n] = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
        }
        out
    }

    /// `log` of a series with constant term 1, via `(log f)' f = f'`.
    pub fn log(&self) -> RatSeries {
        assert!(
            self.coeffs[0] == RatPoly::one(),
            "log needs constant term 1"
        );
        let mut out = RatSeries::zero(self.order);
        for n in 1..=self.order {
            // l_n = f_n - (1/n) sum_{j=1}^{n-1} j l_j f_{n-j}
            let mut acc = RatPoly::zero();
            for j in 1..n {
                let jl = out.coeffs[j].scale(&BigRational::from_integer(BigInt::from(j)));
                acc = acc.add(&jl.mul(&self.coeffs[n - j]));
            }
            out.coeffs[n] =
                self.coeffs[n].sub(&acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n))));
        }
        out
    }

    /// `e^{c x}` for an integer scalar `c`.
    pub fn exp_cx(order: usize, c: i64) -> RatSeries {
        RatSeries::monomial(order, RatPoly::from_integer(c), 1).exp()
    }

    /// `n! * [x^n]`, expected to be an integral polynomial in `t`.
    pub fn egf_coefficient(&self, n: usize) -> RatPoly {
        let mut factorial = BigRational::one();
        for i in 1..=n {
            factorial *= BigRational::from_integer(BigInt::from(i));
        }
        self.coeffs[n].scale(&factorial)
    }
}

/// The eight classical exponential generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgfFamily {
    /// `sum_n S(n,k) x^n/n! = (e^x - 1)^k / k!` for each fixed `k`.
    ASecond,
    /// `sum_{n,k} S(n,k) t^k x^n/n! = exp(t(e^x - 1))`.
    ABivariate,
    /// `sum_n c(n,k) x^n/n! = (-log(1-x))^k / k!` for each fixed `k`.
    AFirst,
    /// `sum_{n,k} c(n,k) t^k x^n/n! = (1-x)^{-t}`.
    AFirstBivariate,
    /// `sum_n S_B(n,k) x^n/n! = e^x (e^{2x} - 1)^k / (2^k k!)`.
    BSecond,
    /// `sum_{n,k} S_B(n,k) t^k x^n/n! = e^x sqrt(exp(t(e^{2x} - 1)))`.
    BBivariate,
    /// `sum_n c_B(n,k) x^n/n! = (log(1/sqrt(1-2x)))^k / (k! sqrt(1-2x))`.
    BFirst,
    /// `sum_{n,k} c_B(n,k) t^k x^n/n! = (1-2x)^{-(1+t)/2}`.
    BFirstBivariate,
}

impl EgfFamily {
    pub const ALL: [EgfFamily; 8] = [
        EgfFamily::ASecond,
        EgfFamily::ABivariate,
        EgfFamily::AFirst,
        EgfFamily::AFirstBivariate,
        EgfFamily::BSecond,
        EgfFamily::BBivariate,
        EgfFamily::BFirst,
        EgfFamily::BFirstBivariate,
    ];
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `-log(1 - c x)` as a series.
fn neg_log_one_minus_cx(order: usize, c: i64) -> RatSeries {
    let mut one_minus = RatSeries::one(order);
    if order >= 1 {
        one_minus.coeffs[1] = RatPoly::from_integer(-c);
    }
    RatSeries::zero(order).sub(&one_minus.log())
}

/// Verify one EGF family to truncation order `order`: every coefficient
/// `n! [x^n]` must equal the corresponding plain Stirling number (or, for the
/// bivariate forms, the row polynomial in `t`).  Square roots are computed as
/// `exp` of half the `log` argument.
pub fn verify_egf(family: EgfFamily, order: usize) -> Report {
    let mut report = Report::new(format!("{family:?} exponential generating function"));
    let row = |kind: StirlingKind, n: usize| -> RatPoly {
        RatPoly::from_coeffs(
            (0..=n as i64)
                .map(|k| BigRational::from_integer(stirling_number(kind, n, k)))
                .collect(),
        )
    };
    let fixed_k_expected = |kind: StirlingKind, n: usize, k: i64| -> RatPoly {
        RatPoly::constant(BigRational::from_integer(stirling_number(kind, n, k)))
    };

    match family {
        EgfFamily::ASecond | EgfFamily::AFirst | EgfFamily::BSecond | EgfFamily::BFirst => {
            for k in 0..=order as i64 {
                let mut inv_factorials = BigRational::one();
                for i in 1..=k {
                    inv_factorials /= BigRational::from_integer(BigInt::from(i));
                }
                let series = match family {
                    EgfFamily::ASecond => {
                        // (e^x - 1)^k / k!
                        let base = RatSeries::exp_cx(order, 1).sub(&RatSeries::one(order));
                        base.pow(k as usize)
                            .scale(&RatPoly::constant(inv_factorials.clone()))
                    }
                    EgfFamily::AFirst => neg_log_one_minus_cx(order, 1)
                        .pow(k as usize)
                        .scale(&RatPoly::constant(inv_factorials.clone())),
                    EgfFamily::BSecond => {
                        // e^x (e^{2x} - 1)^k / (2^k k!)
                        let base = RatSeries::exp_cx(order, 2).sub(&RatSeries::one(order));
                        let mut scale = inv_factorials.clone();
                        for _ in 0..k {
                            scale *= half();
                        }
                        RatSeries::exp_cx(order, 1)
                            .mul(&base.pow(k as usize))
                            .scale(&RatPoly::constant(scale))
                    }
                    EgfFamily::BFirst => {
                        // log(1/sqrt(1-2x)) = (1/2)(-log(1-2x)); its exp is (1-2x)^{-1/2}
                        let log_term = neg_log_one_minus_cx(order, 2)
                            .scale(&RatPoly::constant(half()));
                        log_term
                            .exp()
                            .mul(&log_term.pow(k as usize))
                            .scale(&RatPoly::constant(inv_factorials.clone()))
                    }
                    _ => unreachable!(),
                };
                let kind = match family {
                    EgfFamily::ASecond => StirlingKind::SecondA,
                    EgfFamily::AFirst => StirlingKind::FirstA,
                    EgfFamily::BSecond => StirlingKind::SecondB,
                    EgfFamily::BFirst => StirlingKind::FirstB,
                    _ => unreachable!(),
                };
                for n in 0..=order {
                    let got = series.egf_coefficient(n);
                    report.check(got == fixed_k_expected(kind, n, k), || {
                        format!("k={k}, coefficient of x^{n}")
                    });
                }
            }
        }
        EgfFamily::ABivariate => {
            // exp(t (e^x - 1))
            let base = RatSeries::exp_cx(order, 1)
                .sub(&RatSeries::one(order))
                .scale(&RatPoly::t());
            let series = base.exp();
            for n in 0..=order {
                report.check(
                    series.egf_coefficient(n) == row(StirlingKind::SecondA, n),
                    || format!("coefficient of x^{n}"),
                );
            }
        }
        EgfFamily::BBivariate => {
            // e^x sqrt(exp(t(e^{2x}-1))) = e^x exp((t/2)(e^{2x}-1))
            let base = RatSeries::exp_cx(order, 2)
                .sub(&RatSeries::one(order))
                .scale(&RatPoly::t().scale(&half()));
            let series = RatSeries::exp_cx(order, 1).mul(&base.exp());
            for n in 0..=order {
                report.check(
                    series.egf_coefficient(n) == row(StirlingKind::SecondB, n),
                    || format!("coefficient of x^{n}"),
                );
            }
        }
        EgfFamily::AFirstBivariate => {
            // (1-x)^{-t} = exp(t * -log(1-x))
            let series = neg_log_one_minus_cx(order, 1).scale(&RatPoly::t()).exp();
            for n in 0..=order {
                report.check(
                    series.egf_coefficient(n) == row(StirlingKind::FirstA, n),
                    || format!("coefficient of x^{n}"),
                );
            }
        }
        EgfFamily::BFirstBivariate => {
            // (1-2x)^{-(1+t)/2} = exp((1+t)/2 * -log(1-2x))
            let exponent = RatPoly::from_coeffs(vec![half(), half()]); // (1+t)/2
            let series = neg_log_one_minus_cx(order, 2).scale(&exponent).exp();
            for n in 0..=order {
                report.check(
                    series.egf_coefficient(n) == row(StirlingKind::FirstB, n),
                    || format!("coefficient of x^{n}"),
                );
            }
        }
    }
    report
}

/// Run all eight EGF families at one order.
pub fn verify_egf_all(order: usize) -> Report {
    let mut report = Report::new("exponential generating functions");
    for family in EgfFamily::ALL {
        report.absorb(verify_egf(family, order));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_log_roundtrip() {
        let f = neg_log_one_minus_cx(8, 1);
        let g = f.exp(); // 1/(1-x)
        for n in 0..=8 {
            assert_eq!(g.coeff(n), &RatPoly::one(), "x^{n}");
        }
        let back = g.log();
        assert_eq!(back, f);
    }

    #[test]
    fn egf_coefficient_is_factorial_scaled() {
        // e^{3x}: n! [x^n] = 3^n
        let e3 = RatSeries::exp_cx(6, 3);
        for n in 0..=6u32 {
            assert_eq!(
                e3.egf_coefficient(n as usize),
                RatPoly::from_integer(BigInt::from(3i64.pow(n)))
            );
        }
    }

    #[test]
    fn hand_taylor_checks() {
        // 2! [x^2] of (e^{3x} - e^x)/2 = (9-1)/2 = 4 = S_B(2,1)
        let diff = RatSeries::exp_cx(4, 3)
            .sub(&RatSeries::exp_cx(4, 1))
            .scale(&RatPoly::constant(half()));
        assert_eq!(diff.egf_coefficient(2), RatPoly::from_integer(4));

        // 2! [x^2] of (1-2x)^{-1/2} = 3 = c_B(2,0)
        let front = neg_log_one_minus_cx(4, 2)
            .scale(&RatPoly::constant(half()))
            .exp();
        assert_eq!(front.egf_coefficient(2), RatPoly::from_integer(3));
    }

    #[test]
    fn all_families_to_order_six() {
        for family in EgfFamily::ALL {
            let report = verify_egf(family, 6);
            assert!(report.passed(), "{report}");
        }
    }
}
