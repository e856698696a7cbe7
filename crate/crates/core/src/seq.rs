//! Second-order linear recurrence sequences over exact integers.
//!
//! A [`SequenceSpec`] fixes a recurrence `s(n) = c1·s(n-1) + c2·s(n-2)`
//! together with the two initial terms `s(0)` and `s(1)`. Built-in
//! constructors cover the sequences used throughout this crate:
//!
//! * Fibonacci: `F(0) = 0, F(1) = 1`, `F(n) = F(n-1) + F(n-2)`
//! * Lucas:     `L(0) = 2, L(1) = 1`, `L(n) = L(n-1) + L(n-2)`
//! * Pell:      `P(0) = 0, P(1) = 1`, `P(n) = 2·P(n-1) + P(n-2)`
//! * Gibonacci: Fibonacci recurrence with caller-chosen `G(0)`, `G(1)`
//!
//! Every sequence here uses the zero convention for negative indices:
//! `s(n) = 0` for all `n < 0`. Identities that do not survive that
//! convention carry explicit domain restrictions where they are checked
//! (see `identities`).
//!
//! Combinatorial counterparts: `board_count(n)` counts the square/domino
//! tilings of a 1×n board and equals `F(n+1)`; `bracelet_count(n)` counts
//! the square/domino tilings of a circular board of n labelled cells and
//! equals `L(n)` for n ≥ 1.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// How a sequence extends to negative indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativeConvention {
    /// Every term at a negative index is 0.
    Zero,
}

/// A second-order linear recurrence with fixed integer coefficients and
/// initial terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    pub name: String,
    pub coeff1: BigInt,
    pub coeff2: BigInt,
    pub init0: BigInt,
    pub init1: BigInt,
    pub negative: NegativeConvention,
}

impl SequenceSpec {
    pub fn new(
        name: impl Into<String>,
        coeff1: impl Into<BigInt>,
        coeff2: impl Into<BigInt>,
        init0: impl Into<BigInt>,
        init1: impl Into<BigInt>,
    ) -> Self {
        SequenceSpec {
            name: name.into(),
            coeff1: coeff1.into(),
            coeff2: coeff2.into(),
            init0: init0.into(),
            init1: init1.into(),
            negative: NegativeConvention::Zero,
        }
    }

    pub fn fibonacci() -> Self {
        SequenceSpec::new("fibonacci", 1, 1, 0, 1)
    }

    pub fn lucas() -> Self {
        SequenceSpec::new("lucas", 1, 1, 2, 1)
    }

    pub fn pell() -> Self {
        SequenceSpec::new("pell", 2, 1, 0, 1)
    }

    /// Pell recurrence with caller-chosen initial terms.
    pub fn pell_family(p0: impl Into<BigInt>, p1: impl Into<BigInt>) -> Self {
        SequenceSpec::new("pell-family", 2, 1, p0, p1)
    }

    /// Fibonacci recurrence with caller-chosen initial terms.
    pub fn gibonacci(g0: impl Into<BigInt>, g1: impl Into<BigInt>) -> Self {
        SequenceSpec::new("gibonacci", 1, 1, g0, g1)
    }

    /// Term at index `n`, exact. Negative indices yield 0.
    pub fn term(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        if n == 0 {
            return self.init0.clone();
        }
        let mut prev = self.init0.clone();
        let mut cur = self.init1.clone();
        for _ in 1..n {
            let mut next = if self.coeff1.is_one() {
                cur.clone()
            } else {
                &self.coeff1 * &cur
            };
            if self.coeff2.is_one() {
                next += &prev;
            } else {
                next += &self.coeff2 * &prev;
            }
            prev = cur;
            cur = next;
        }
        cur
    }

    /// All terms from index 0 through `n` inclusive, in one pass.
    /// Empty when `n < 0`.
    pub fn values_up_to(&self, n: i64) -> Vec<BigInt> {
        if n < 0 {
            return Vec::new();
        }
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(self.init0.clone());
        if n == 0 {
            return out;
        }
        out.push(self.init1.clone());
        for i in 2..=(n as usize) {
            let mut next = if self.coeff1.is_one() {
                out[i - 1].clone()
            } else {
                &self.coeff1 * &out[i - 1]
            };
            if self.coeff2.is_one() {
                next += &out[i - 2];
            } else {
                next += &self.coeff2 * &out[i - 2];
            }
            out.push(next);
        }
        out
    }
}

/// Fibonacci number `F(n)`; 0 for negative `n`.
pub fn fib(n: i64) -> BigInt {
    SequenceSpec::fibonacci().term(n)
}

/// Lucas number `L(n)`; 0 for negative `n`.
pub fn lucas(n: i64) -> BigInt {
    SequenceSpec::lucas().term(n)
}

/// Pell number `P(n)`; 0 for negative `n`.
pub fn pell(n: i64) -> BigInt {
    SequenceSpec::pell().term(n)
}

/// `(F(n), F(n+1))` by the fast-doubling method:
///
/// ```text
/// F(2k)   = F(k) · (2·F(k+1) − F(k))
/// F(2k+1) = F(k)² + F(k+1)²
/// ```
///
/// Runs in O(log n) arithmetic steps, against O(n) for iteration, which
/// makes it an independent cross-check of `SequenceSpec::term`.
pub fn fast_double_fib(n: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero(); // F(k)
    let mut b = BigInt::one(); // F(k+1)
    if n == 0 {
        return (a, b);
    }
    let bits = u64::BITS - n.leading_zeros();
    for bit in (0..bits).rev() {
        let twice_b_minus_a = (&b << 1) - &a;
        let c = &a * &twice_b_minus_a; // F(2k)
        let d = &a * &a + &b * &b; // F(2k+1)
        if (n >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// Number of square/domino tilings of a 1×n board: `F(n+1)`, and 1 for the
/// empty board. Negative lengths have no tilings.
pub fn board_count(n: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    fib(n.checked_add(1).expect("board length overflows i64"))
}

/// Number of square/domino tilings of a circular board with `n` labelled
/// cells: `L(n)`. Requires `n >= 1`.
pub fn bracelet_count(n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "bracelet_count requires n >= 1, got n={n}"
        )));
    }
    Ok(lucas(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn initial_terms() {
        assert_eq!(SequenceSpec::fibonacci().term(0), BigInt::zero());
        assert_eq!(SequenceSpec::fibonacci().term(1), BigInt::one());
        assert_eq!(SequenceSpec::lucas().term(0), BigInt::from(2));
        assert_eq!(SequenceSpec::lucas().term(1), BigInt::one());
        assert_eq!(SequenceSpec::pell().term(0), BigInt::zero());
        assert_eq!(SequenceSpec::pell().term(1), BigInt::one());
    }

    #[test]
    fn known_values() {
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(lucas(10), BigInt::from(123));
        assert_eq!(lucas(1), BigInt::one());
        assert_eq!(pell(5), BigInt::from(29));
        assert_eq!(pell(6), BigInt::from(70));
        assert_eq!(lucas(26), BigInt::from(271443));
    }

    #[test]
    fn negative_indices_are_zero() {
        assert_eq!(SequenceSpec::fibonacci().term(-3), BigInt::zero());
        assert_eq!(SequenceSpec::lucas().term(-1), BigInt::zero());
        assert_eq!(pell(-10), BigInt::zero());
    }

    #[test]
    fn gibonacci_lucas_seeds_reproduce_lucas() {
        let spec = SequenceSpec::gibonacci(2, 1);
        assert_eq!(spec.term(5), BigInt::from(11));
        assert_eq!(spec.term(10), lucas(10));
    }

    #[test]
    fn pell_family_seeds() {
        let spec = SequenceSpec::pell_family(1, 1);
        assert_eq!(spec.term(0), BigInt::one());
        assert_eq!(spec.term(5), BigInt::from(41));
    }

    #[test]
    fn values_up_to_matches_term() {
        let spec = SequenceSpec::pell();
        let table = spec.values_up_to(50);
        assert_eq!(table.len(), 51);
        for (i, v) in table.iter().enumerate() {
            assert_eq!(*v, spec.term(i as i64));
        }
        assert!(spec.values_up_to(-1).is_empty());
        assert_eq!(spec.values_up_to(0), vec![BigInt::zero()]);
    }

    #[test]
    fn fast_doubling_known_values() {
        assert_eq!(fast_double_fib(0), (BigInt::zero(), BigInt::one()));
        assert_eq!(fast_double_fib(10), (BigInt::from(55), BigInt::from(89)));
        assert_eq!(fast_double_fib(15), (BigInt::from(610), BigInt::from(987)));
    }

    #[test]
    fn fast_doubling_agrees_with_iteration() {
        let spec = SequenceSpec::fibonacci();
        let table = spec.values_up_to(201);
        for n in 0..=200u64 {
            let (f_n, f_n1) = fast_double_fib(n);
            assert_eq!(f_n, table[n as usize]);
            assert_eq!(f_n1, table[n as usize + 1]);
        }
    }

    #[test]
    fn board_count_values() {
        assert_eq!(board_count(4), BigInt::from(5));
        assert_eq!(board_count(0), BigInt::one());
        assert_eq!(board_count(-1), BigInt::zero());
        assert_eq!(board_count(-2), BigInt::zero());
        assert_eq!(board_count(10), BigInt::from(89));
    }

    #[test]
    fn bracelet_count_values() {
        assert_eq!(bracelet_count(2).unwrap(), BigInt::from(3));
        assert_eq!(bracelet_count(4).unwrap(), BigInt::from(7));
        assert_eq!(bracelet_count(1).unwrap(), BigInt::one());
        assert!(matches!(bracelet_count(0), Err(Error::Domain(_))));
        assert!(matches!(bracelet_count(-5), Err(Error::Domain(_))));
    }

    #[test]
    fn specs_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<SequenceSpec>();

        let handles: Vec<_> = (0..4).map(|_| std::thread::spawn(|| lucas(300))).collect();
        let results: Vec<BigInt> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }

    proptest! {
        // Any gibonacci splits over the Fibonacci basis:
        // G(n) = G(0)·F(n-1) + G(1)·F(n) for n >= 1.
        #[test]
        fn gibonacci_is_linear_in_seeds(g0 in -50i64..50, g1 in -50i64..50, n in 1i64..200) {
            let spec = SequenceSpec::gibonacci(g0, g1);
            let expected = BigInt::from(g0) * fib(n - 1) + BigInt::from(g1) * fib(n);
            prop_assert_eq!(spec.term(n), expected);
        }

        #[test]
        fn doubling_matches_iteration(n in 0u64..500) {
            let (f_n, _) = fast_double_fib(n);
            prop_assert_eq!(f_n, fib(n as i64));
        }
    }
}
