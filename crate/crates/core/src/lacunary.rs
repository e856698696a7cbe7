//! Gap (lacunary) recurrences: closed expansions of a sequence term over
//! indices spaced N apart, instead of the usual step of one.
//!
//! For Lucas numbers, with `d = floor(floor(n/N) / 2)`:
//!
//! ```text
//! L(n) = L(N) · Σ_{i=1..d} (-1)^((N+1)(i+1)) · L(n-(2i-1)N)
//!        + (-1)^((N+1)(d+2)) · L(n-2dN)
//! ```
//!
//! valid for `N >= 1` and `n >= 2N`. [`lucas_expand`] materializes the
//! right-hand side symbolically; [`LacunaryExpansion::evaluate`] folds it
//! back to an integer. The choice of `d` always lands the residual index
//! `n - 2dN` in `[0, 2N)`, so iterating the one-step identity
//! `L(n) = L(N)·L(n-N) + (-1)^(N+1)·L(n-2N)` to exhaustion reproduces the
//! expansion term by term.
//!
//! Reducing the expansion mod `L(N)` kills the whole outer sum, leaving the
//! congruence computed by [`lucas_congruence`]:
//! `L(n) ≡ (-1)^((N+1)(d+2)) · L(n-2dN)  (mod L(N))`.
//!
//! The Fibonacci analog with gap N, for `N >= 2` and `n >= N`, with
//! `q = floor((n-1)/N)` and `r = (n-1) mod N`:
//!
//! ```text
//! F(n) = F(N)·F(N-1)^(q-1)·F(r) + F(N+1)·F(n-N)
//!        + F(N)² · Σ_{k=2..q} F(N-1)^(k-2) · F(n-kN)
//! ```
//!
//! At `q = 0` (that is, `n = N`) the first summand is `F(N)` itself: the
//! exponent `q-1` and `F(r) = F(N-1)` cancel exactly, and the zero
//! convention empties the rest. [`gap_formula`] evaluates this shape for
//! any sequence sharing the Fibonacci-style zero convention; the same
//! expansion holds verbatim for the Pell numbers with every `F` replaced by
//! `P`, because its derivation only uses the recurrence through index
//! shifts. It does not survive re-seeding: for the Pell recurrence seeded
//! `(1, 1)` the formula already fails at `n=5, N=2` (61 against the
//! sequence value 41), which pins the `P(0)=0, P(1)=1` convention used
//! here.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::seq::SequenceSpec;

/// One signed term `sign · s(index)` of an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedIndex {
    pub sign: i8,
    pub index: i64,
}

/// Symbolic right-hand side of the Lucas gap expansion of `L(n)`:
/// `outer_coefficient · Σ terms + residual`, all terms Lucas indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LacunaryExpansion {
    pub n: i64,
    pub gap: i64,
    pub depth: i64,
    /// The bracket multiplier `L(gap)`.
    pub outer_coefficient: BigInt,
    /// Bracket contents: term `i` is `(-1)^((gap+1)(i+1)) · L(n-(2i-1)·gap)`.
    pub terms: Vec<SignedIndex>,
    /// Trailing term outside the bracket: `(-1)^((gap+1)(depth+2)) · L(n-2·depth·gap)`.
    pub residual: SignedIndex,
}

/// Sign `(-1)^((gap+1)·k)`: negative exactly when both factors are odd.
fn alternating_sign(gap: i64, k: i64) -> i8 {
    if (gap + 1) % 2 != 0 && k % 2 != 0 {
        -1
    } else {
        1
    }
}

/// Expansion depth `d = floor(floor(n/gap) / 2)`.
/// Requires `gap >= 1` and `n >= 2·gap`.
pub fn gap_depth(n: i64, gap: i64) -> Result<i64> {
    if gap < 1 || n / 2 < gap {
        return Err(Error::Domain(format!(
            "gap expansion requires N >= 1 and n >= 2N, got n={n}, N={gap}"
        )));
    }
    Ok((n / gap) / 2)
}

/// Build the gap expansion of `L(n)` without evaluating it.
pub fn lucas_expand(n: i64, gap: i64) -> Result<LacunaryExpansion> {
    let depth = gap_depth(n, gap)?;
    let terms = (1..=depth)
        .map(|i| SignedIndex {
            sign: alternating_sign(gap, i + 1),
            index: n - (2 * i - 1) * gap,
        })
        .collect();
    let residual = SignedIndex {
        sign: alternating_sign(gap, depth + 2),
        index: n - 2 * depth * gap,
    };
    Ok(LacunaryExpansion {
        n,
        gap,
        depth,
        outer_coefficient: SequenceSpec::lucas().term(gap),
        terms,
        residual,
    })
}

impl LacunaryExpansion {
    /// Fold the expansion back to an integer. For a well-formed expansion
    /// this equals `L(n)`.
    pub fn evaluate(&self) -> BigInt {
        let table = SequenceSpec::lucas().values_up_to(self.n - self.gap);
        let mut bracket = BigInt::zero();
        for t in &self.terms {
            if t.sign < 0 {
                bracket -= &table[t.index as usize];
            } else {
                bracket += &table[t.index as usize];
            }
        }
        let mut total = &self.outer_coefficient * bracket;
        if self.residual.sign < 0 {
            total -= &table[self.residual.index as usize];
        } else {
            total += &table[self.residual.index as usize];
        }
        total
    }

    /// JSON form: structure as numbers, evaluated values as decimal strings.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|t| json!({"sign": t.sign, "index": t.index}))
            .collect();
        json!({
            "n": self.n,
            "N": self.gap,
            "d": self.depth,
            "outer": self.outer_coefficient.to_string(),
            "terms": terms,
            "residual": {"sign": self.residual.sign, "index": self.residual.index},
            "value": self.evaluate().to_string(),
        })
    }
}

/// Evaluate the Fibonacci-shaped gap formula for any sequence with the zero
/// convention. Requires `gap >= 2` and `n >= gap`.
pub fn gap_formula(spec: &SequenceSpec, n: i64, gap: i64) -> Result<BigInt> {
    if gap < 2 || n < gap {
        return Err(Error::Domain(format!(
            "gap formula requires 2 <= N <= n, got n={n}, N={gap}"
        )));
    }
    let q = (n - 1) / gap;
    let r = (n - 1) % gap;
    let table = spec.values_up_to(n.max(gap + 1));
    let v = |k: i64| &table[k as usize];

    let first = if q == 0 {
        // n == gap: r == gap-1, and s(gap-1)^(q-1) · s(r) cancels to 1.
        v(gap).clone()
    } else {
        let e = u32::try_from(q - 1)
            .map_err(|_| Error::Domain(format!("exponent {} out of range", q - 1)))?;
        v(gap) * v(gap - 1).pow(e) * v(r)
    };

    let second = v(gap + 1) * v(n - gap);

    let mut tail = BigInt::zero();
    let mut power = BigInt::one(); // s(gap-1)^(k-2)
    for k in 2..=q {
        tail += &power * v(n - k * gap);
        if k < q {
            power *= v(gap - 1);
        }
    }

    Ok(first + second + v(gap) * v(gap) * tail)
}

/// Fibonacci gap formula: `F(n)` from Fibonacci numbers at indices spaced
/// `gap` apart. Requires `gap >= 2` and `n >= gap`.
pub fn fib_lacunary(n: i64, gap: i64) -> Result<BigInt> {
    gap_formula(&SequenceSpec::fibonacci(), n, gap)
}

/// Pell gap formula, same shape as [`fib_lacunary`] over `P` with
/// `P(0) = 0, P(1) = 1`. Requires `gap >= 2` and `n >= gap`.
pub fn pell_lacunary(n: i64, gap: i64) -> Result<BigInt> {
    gap_formula(&SequenceSpec::pell(), n, gap)
}

/// The congruence left over from the gap expansion mod `L(gap)`:
/// returns `(residue, quotient)` of `L(n) - (-1)^((gap+1)(d+2))·L(n-2dN)`
/// by `L(gap)`. The residue is 0 whenever the expansion is exact.
/// Requires `gap >= 1` and `n >= 2·gap`.
pub fn lucas_congruence(n: i64, gap: i64) -> Result<(BigInt, BigInt)> {
    let depth = gap_depth(n, gap)?;
    let table = SequenceSpec::lucas().values_up_to(n);
    let residual_index = n - 2 * depth * gap;
    let mut difference = table[n as usize].clone();
    if alternating_sign(gap, depth + 2) < 0 {
        difference += &table[residual_index as usize];
    } else {
        difference -= &table[residual_index as usize];
    }
    let modulus = &table[gap as usize];
    Ok((&difference % modulus, &difference / modulus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::{lucas, pell};
    use proptest::prelude::*;

    #[test]
    fn depth_examples() {
        assert_eq!(gap_depth(10, 2).unwrap(), 2);
        assert_eq!(gap_depth(12, 3).unwrap(), 2);
        assert_eq!(gap_depth(4, 1).unwrap(), 2);
        assert_eq!(gap_depth(6, 3).unwrap(), 1);
        assert!(matches!(gap_depth(3, 2), Err(Error::Domain(_))));
        assert!(matches!(gap_depth(5, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn expand_gap_two() {
        let e = lucas_expand(10, 2).unwrap();
        assert_eq!(e.depth, 2);
        assert_eq!(e.outer_coefficient, BigInt::from(3));
        assert_eq!(
            e.terms,
            vec![
                SignedIndex { sign: 1, index: 8 },
                SignedIndex { sign: -1, index: 4 },
            ]
        );
        assert_eq!(e.residual, SignedIndex { sign: 1, index: 2 });
        assert_eq!(e.evaluate(), BigInt::from(123));
    }

    #[test]
    fn expand_gap_three() {
        let e = lucas_expand(12, 3).unwrap();
        assert_eq!(e.depth, 2);
        assert_eq!(e.outer_coefficient, BigInt::from(4));
        assert_eq!(
            e.terms,
            vec![
                SignedIndex { sign: 1, index: 9 },
                SignedIndex { sign: 1, index: 3 },
            ]
        );
        assert_eq!(e.residual, SignedIndex { sign: 1, index: 0 });
        assert_eq!(e.evaluate(), BigInt::from(322));
    }

    #[test]
    fn expand_gap_one() {
        let e = lucas_expand(4, 1).unwrap();
        assert_eq!(e.depth, 2);
        assert_eq!(e.outer_coefficient, BigInt::one());
        assert_eq!(
            e.terms,
            vec![
                SignedIndex { sign: 1, index: 3 },
                SignedIndex { sign: 1, index: 1 },
            ]
        );
        assert_eq!(e.residual, SignedIndex { sign: 1, index: 0 });
        assert_eq!(e.evaluate(), BigInt::from(7));
    }

    #[test]
    fn expand_minimal_depth() {
        let e = lucas_expand(6, 3).unwrap();
        assert_eq!(e.depth, 1);
        assert_eq!(e.evaluate(), BigInt::from(18));
        assert!(matches!(lucas_expand(5, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn expansion_json_shape() {
        let v = lucas_expand(10, 2).unwrap().to_json();
        assert_eq!(v["n"], 10);
        assert_eq!(v["N"], 2);
        assert_eq!(v["d"], 2);
        assert_eq!(v["outer"], "3");
        assert_eq!(v["terms"][0]["sign"], 1);
        assert_eq!(v["terms"][0]["index"], 8);
        assert_eq!(v["terms"][1]["sign"], -1);
        assert_eq!(v["residual"]["index"], 2);
        assert_eq!(v["value"], "123");
    }

    #[test]
    fn fib_formula_examples() {
        assert_eq!(fib_lacunary(5, 2).unwrap(), BigInt::from(5));
        assert_eq!(fib_lacunary(3, 3).unwrap(), BigInt::from(2));
        assert_eq!(fib_lacunary(7, 3).unwrap(), BigInt::from(13));
        assert!(matches!(fib_lacunary(1, 2), Err(Error::Domain(_))));
        assert!(matches!(fib_lacunary(5, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn pell_formula_examples() {
        assert_eq!(pell_lacunary(5, 2).unwrap(), BigInt::from(29));
        assert_eq!(pell_lacunary(7, 3).unwrap(), BigInt::from(169));
        assert_eq!(pell_lacunary(4, 2).unwrap(), BigInt::from(12));
    }

    // The boundary n == N holds for Pell under this formula; kept as a
    // separate record because the sweeping checks start at n = N+1.
    #[test]
    fn pell_formula_boundary() {
        for gap in 2..=12 {
            assert_eq!(pell_lacunary(gap, gap).unwrap(), pell(gap));
        }
    }

    // Re-seeding the Pell recurrence breaks the formula: seeded (1, 1) it
    // produces 61 at (n=5, N=2) while that sequence's own term is 41.
    #[test]
    fn pell_reseeded_breaks_formula() {
        let seeded = SequenceSpec::pell_family(1, 1);
        assert_eq!(gap_formula(&seeded, 5, 2).unwrap(), BigInt::from(61));
        assert_eq!(seeded.term(5), BigInt::from(41));
    }

    #[test]
    fn congruence_examples() {
        let (r, q) = lucas_congruence(10, 2).unwrap();
        assert_eq!(r, BigInt::zero());
        assert_eq!(q, BigInt::from(40));
        let (r, q) = lucas_congruence(12, 3).unwrap();
        assert_eq!(r, BigInt::zero());
        assert_eq!(q, BigInt::from(80));
        let (r, q) = lucas_congruence(6, 3).unwrap();
        assert_eq!(r, BigInt::zero());
        assert_eq!(q, BigInt::from(4));
        assert!(matches!(lucas_congruence(3, 2), Err(Error::Domain(_))));
    }

    proptest! {
        // Structural invariants plus exactness of the expansion.
        #[test]
        fn expansion_is_exact(gap in 1i64..=15, extra in 0i64..=1200) {
            let n = 2 * gap + extra;
            let e = lucas_expand(n, gap).unwrap();
            prop_assert_eq!(e.depth, (n / gap) / 2);
            prop_assert!(e.depth >= 1);
            prop_assert_eq!(e.terms.len() as i64, e.depth);
            for (i, t) in e.terms.iter().enumerate() {
                let i = i as i64 + 1;
                prop_assert_eq!(t.index, n - (2 * i - 1) * gap);
                prop_assert!(t.index >= 0);
            }
            let res = e.residual.index;
            prop_assert!(res >= 0 && res < 2 * gap);
            prop_assert_eq!(e.evaluate(), lucas(n));
        }

        // The congruence never leaves a residue, and the quotient is the
        // exact cofactor.
        #[test]
        fn congruence_is_exact(gap in 1i64..=15, extra in 0i64..=800) {
            let n = 2 * gap + extra;
            let (residue, quotient) = lucas_congruence(n, gap).unwrap();
            prop_assert_eq!(&residue, &BigInt::zero());
            let e = lucas_expand(n, gap).unwrap();
            let mut difference = lucas(n);
            let res_value = lucas(e.residual.index);
            if e.residual.sign < 0 {
                difference += res_value;
            } else {
                difference -= res_value;
            }
            prop_assert_eq!(quotient * lucas(gap) + residue, difference);
        }
    }
}
