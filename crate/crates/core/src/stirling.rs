//! The Stirling recursion families of both kinds in types A and B, their
//! q-analogues, and the ordered, signed, and barred variants.
//!
//! Each q-family is defined by a two-term recursion with boundary row
//! `delta_{0,k}` at `n = 0`:
//!
//! - second kind, type A:  `S[n,k] = S[n-1,k-1] + [k] S[n-1,k]`
//! - first kind, type A:   `c[n,k] = c[n-1,k-1] + [n-1] c[n-1,k]`
//! - second kind, type B:  `S_B[n,k] = S_B[n-1,k-1] + [2k+1] S_B[n-1,k]`
//! - first kind, type B:   `c_B[n,k] = c_B[n-1,k-1] + [2n-1] c_B[n-1,k]`
//!
//! The recursion is the single source of truth; closed forms (symmetric-
//! polynomial specializations, generating functions) live in other modules as
//! verification cross-checks, never as producers.  The plain numeric families
//! are the evaluations at `q = 1`.

use std::cell::RefCell;

use num_bigint::BigInt;

use crate::qpoly::{q_bracket, q_double_factorial, q_factorial, QPoly};
use crate::CoxeterType;

/// The four base recursion families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// `S[n,k]`, partitions of an n-set by blocks.
    SecondA,
    /// `c[n,k]`, permutations of an n-set by cycles (signless).
    FirstA,
    /// `S_B[n,k]`, signed partitions by block pairs.
    SecondB,
    /// `c_B[n,k]`, signed permutations by paired-cycle pairs (signless).
    FirstB,
}

impl StirlingKind {
    pub const ALL: [StirlingKind; 4] = [
        StirlingKind::SecondA,
        StirlingKind::FirstA,
        StirlingKind::SecondB,
        StirlingKind::FirstB,
    ];

    /// The bracket multiplying the second term of the recursion at `(n, k)`.
    fn weight(self, n: usize, k: usize) -> QPoly {
        match self {
            StirlingKind::SecondA => q_bracket(k as i64),
            StirlingKind::FirstA => q_bracket(n as i64 - 1),
            StirlingKind::SecondB => q_bracket(2 * k as i64 + 1),
            StirlingKind::FirstB => q_bracket(2 * n as i64 - 1),
        }
    }
}

impl std::fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StirlingKind::SecondA => "S",
            StirlingKind::FirstA => "c",
            StirlingKind::SecondB => "S_B",
            StirlingKind::FirstB => "c_B",
        };
        write!(f, "{s}")
    }
}

/// Memoized triangle for one recursion family, grown on demand.
///
/// Rows are append-only; recomputation of any entry yields an identical value,
/// so concurrent fills of independent tables are safe and reads never observe
/// a partially built row.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    kind: StirlingKind,
    rows: Vec<Vec<QPoly>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTable {
            kind,
            rows: vec![vec![QPoly::one()]],
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    fn ensure(&mut self, n: usize) {
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            for k in 0..=m {
                let lower = if k >= 1 { prev[k - 1].clone() } else { QPoly::zero() };
                let same = if k < prev.len() {
                    &self.kind.weight(m, k) * &prev[k]
                } else {
                    QPoly::zero()
                };
                row.push(&lower + &same);
            }
            self.rows.push(row);
        }
    }

    /// The q-polynomial at `(n, k)`; zero outside `0 <= k <= n`, so
    /// alternating-sum code needs no bounds logic.
    pub fn poly(&mut self, n: usize, k: i64) -> QPoly {
        if k < 0 || k > n as i64 {
            return QPoly::zero();
        }
        self.ensure(n);
        self.rows[n][k as usize].clone()
    }

    /// The plain Stirling number: evaluation at `q = 1`.
    pub fn number(&mut self, n: usize, k: i64) -> BigInt {
        self.poly(n, k).eval_one()
    }
}

thread_local! {
    static TABLES: RefCell<[StirlingTable; 4]> = RefCell::new([
        StirlingTable::new(StirlingKind::SecondA),
        StirlingTable::new(StirlingKind::FirstA),
        StirlingTable::new(StirlingKind::SecondB),
        StirlingTable::new(StirlingKind::FirstB),
    ]);
}

fn table_index(kind: StirlingKind) -> usize {
    match kind {
        StirlingKind::SecondA => 0,
        StirlingKind::FirstA => 1,
        StirlingKind::SecondB => 2,
        StirlingKind::FirstB => 3,
    }
}

/// The q-Stirling polynomial of the given family (thread-local memo table).
pub fn stirling_poly(kind: StirlingKind, n: usize, k: i64) -> QPoly {
    TABLES.with(|t| t.borrow_mut()[table_index(kind)].poly(n, k))
}

/// The plain Stirling number of the given family (q = 1).
pub fn stirling_number(kind: StirlingKind, n: usize, k: i64) -> BigInt {
    stirling_poly(kind, n, k).eval_one()
}

/// One full row `n` of a family, computed with rolling rows and no cache.
/// Suitable for large `n` (the second-kind type A recursion is cheap even at
/// `n = 100`).
pub fn stirling_row(kind: StirlingKind, n: usize) -> Vec<QPoly> {
    let mut prev = vec![QPoly::one()];
    for m in 1..=n {
        let mut row = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let lower = if k >= 1 { prev[k - 1].clone() } else { QPoly::zero() };
            let same = if k < prev.len() {
                &kind.weight(m, k) * &prev[k]
            } else {
                QPoly::zero()
            };
            row.push(&lower + &same);
        }
        prev = row;
    }
    prev
}

/// The ordered q-Stirling variants of the second kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderedKind {
    /// `S^o[n,k] = [k]! S[n,k]`.
    OrderedA,
    /// Barred ordered type A: `[k]! q^C(k,2) S[n,k]`.
    BarredOrderedA,
    /// `S_B^o[n,k] = [2k]!! S_B[n,k]`.
    OrderedB,
}

/// Ordered q-Stirling number of the second kind, by its defining product.
///
/// The ordered recursions
/// `S^o[n,k] = [k](S^o[n-1,k-1] + S^o[n-1,k])` and
/// `S_B^o[n,k] = [2k] S_B^o[n-1,k-1] + [2k+1] S_B^o[n-1,k]`
/// hold as consequences and are property-checked in the test suite.
pub fn ordered_poly(kind: OrderedKind, n: usize, k: i64) -> QPoly {
    match kind {
        OrderedKind::OrderedA => &q_factorial(k) * &stirling_poly(StirlingKind::SecondA, n, k),
        OrderedKind::BarredOrderedA => &q_factorial(k) * &barred_poly(n, k),
        OrderedKind::OrderedB => {
            &q_double_factorial(2 * k) * &stirling_poly(StirlingKind::SecondB, n, k)
        }
    }
}

/// Signed q-Stirling number of the first kind: `(-1)^{n-k}` times the
/// signless value.
pub fn signed_first_kind_poly(ty: CoxeterType, n: usize, k: i64) -> QPoly {
    let kind = match ty {
        CoxeterType::A => StirlingKind::FirstA,
        CoxeterType::B => StirlingKind::FirstB,
    };
    let c = stirling_poly(kind, n, k);
    if (n as i64 - k).rem_euclid(2) == 1 {
        -&c
    } else {
        c
    }
}

/// Barred q-Stirling number of the second kind: `q^C(k,2) S[n,k]`.
///
/// Independently satisfies the shifted recursion
/// `Sbar[n,k] = q^{k-1} Sbar[n-1,k-1] + [k] Sbar[n-1,k]` (property-checked).
pub fn barred_poly(n: usize, k: i64) -> QPoly {
    if k < 0 || k > n as i64 {
        return QPoly::zero();
    }
    let shift = (k * (k - 1) / 2) as usize;
    stirling_poly(StirlingKind::SecondA, n, k).shift(shift)
}
