//! Exact checks of classical Fibonacci/Lucas identities.
//!
//! Each check evaluates the two sides of one identity by separate
//! arithmetic and reports both values verbatim. All sequences follow the
//! zero convention for negative indices (see `seq`), which breaks some of
//! these identities outside a restricted domain; the preconditions below
//! are exactly the domains on which each identity holds under that
//! convention, and arguments outside them are rejected rather than
//! silently checked.
//!
//! Identities covered (`F` Fibonacci, `L` Lucas, `f(k) = F(k+1)` boards):
//!
//! * addition:        `F(m+n) = F(m)·F(n+1) + F(m-1)·F(n)`          for m ≥ 1, n ≥ 0
//! * d'Ocagne:        `(-1)^n·F(m-n) = F(m)·F(n+1) - F(m+1)·F(n)`   for m ≥ n ≥ 0
//! * Lucas bridge:    `L(n) = F(n-1) + F(n+1)`                      for n ≥ 1
//! * tiling addition: `f(m)·f(n) + f(m-1)·f(n-1) = f(m+n)`          for m, n ≥ 0
//! * tiling d'Ocagne: `f(m-1)·f(n) - f(m)·f(n-1) = (-1)^n·f(m-n-1)` for m ≥ n ≥ 0
//! * gap identity:    `L(n) = L(N)·L(n-N) + (-1)^(N+1)·L(n-2N)`     for N ≥ 1, n ≥ 2N

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::seq::SequenceSpec;

/// Outcome of a single identity check: the exact values of both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub params: Vec<(&'static str, i64)>,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub passed: bool,
}

impl VerificationReport {
    fn new(
        identity: &'static str,
        params: Vec<(&'static str, i64)>,
        lhs: BigInt,
        rhs: BigInt,
    ) -> Self {
        let passed = lhs == rhs;
        VerificationReport {
            identity,
            params,
            lhs,
            rhs,
            passed,
        }
    }

    /// JSON form: values as decimal strings, parameters as numbers.
    pub fn to_json(&self) -> Value {
        let mut params = Map::new();
        for (name, value) in &self.params {
            params.insert((*name).to_string(), json!(value));
        }
        json!({
            "identity": self.identity,
            "params": params,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
            "passed": self.passed,
        })
    }
}

/// `(-1)^n` for the signs appearing in the alternating identities.
fn parity_sign(n: i64) -> BigInt {
    if n % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `F(m+n) = F(m)·F(n+1) + F(m-1)·F(n)`, for `m >= 1`, `n >= 0`.
pub fn check_addition(m: i64, n: i64) -> Result<VerificationReport> {
    if m < 1 || n < 0 {
        return Err(Error::Domain(format!(
            "addition identity requires m >= 1 and n >= 0, got m={m}, n={n}"
        )));
    }
    let table = SequenceSpec::fibonacci().values_up_to(m + n);
    let f = |k: i64| &table[k as usize];
    let lhs = f(m + n).clone();
    let rhs = f(m) * f(n + 1) + f(m - 1) * f(n);
    Ok(VerificationReport::new(
        "addition",
        vec![("m", m), ("n", n)],
        lhs,
        rhs,
    ))
}

/// `(-1)^n·F(m-n) = F(m)·F(n+1) - F(m+1)·F(n)`, for `m >= n >= 0`.
pub fn check_docagne(m: i64, n: i64) -> Result<VerificationReport> {
    if n < 0 || m < n {
        return Err(Error::Domain(format!(
            "d'Ocagne identity requires m >= n >= 0, got m={m}, n={n}"
        )));
    }
    let table = SequenceSpec::fibonacci().values_up_to(m + 1);
    let f = |k: i64| &table[k as usize];
    let lhs = parity_sign(n) * f(m - n);
    let rhs = f(m) * f(n + 1) - f(m + 1) * f(n);
    Ok(VerificationReport::new(
        "docagne",
        vec![("m", m), ("n", n)],
        lhs,
        rhs,
    ))
}

/// `L(n) = F(n-1) + F(n+1)`, for `n >= 1`.
pub fn check_lucas_bridge(n: i64) -> Result<VerificationReport> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "Lucas bridge requires n >= 1, got n={n}"
        )));
    }
    let table = SequenceSpec::fibonacci().values_up_to(n + 1);
    let lhs = SequenceSpec::lucas().term(n);
    let rhs = &table[n as usize - 1] + &table[n as usize + 1];
    Ok(VerificationReport::new("bridge", vec![("n", n)], lhs, rhs))
}

/// `f(m)·f(n) + f(m-1)·f(n-1) = f(m+n)` over board counts `f(k) = F(k+1)`,
/// for `m, n >= 0`. Splitting a 1×(m+n) board at the junction either finds
/// a breakable cell boundary or a domino straddling it.
pub fn check_tiling_addition(m: i64, n: i64) -> Result<VerificationReport> {
    if m < 0 || n < 0 {
        return Err(Error::Domain(format!(
            "tiling addition requires m >= 0 and n >= 0, got m={m}, n={n}"
        )));
    }
    let table = SequenceSpec::fibonacci().values_up_to(m + n + 1);
    let f = |k: i64| {
        if k < 0 {
            BigInt::zero()
        } else {
            table[k as usize + 1].clone()
        }
    };
    let lhs = f(m) * f(n) + f(m - 1) * f(n - 1);
    let rhs = f(m + n);
    Ok(VerificationReport::new(
        "tiling-addition",
        vec![("m", m), ("n", n)],
        lhs,
        rhs,
    ))
}

/// `f(m-1)·f(n) - f(m)·f(n-1) = (-1)^n·f(m-n-1)` over board counts,
/// for `m >= n >= 0`.
pub fn check_tiling_docagne(m: i64, n: i64) -> Result<VerificationReport> {
    if n < 0 || m < n {
        return Err(Error::Domain(format!(
            "tiling d'Ocagne requires m >= n >= 0, got m={m}, n={n}"
        )));
    }
    let table = SequenceSpec::fibonacci().values_up_to(m + 1);
    let f = |k: i64| {
        if k < 0 {
            BigInt::zero()
        } else {
            table[k as usize + 1].clone()
        }
    };
    let lhs = f(m - 1) * f(n) - f(m) * f(n - 1);
    let rhs = parity_sign(n) * f(m - n - 1);
    Ok(VerificationReport::new(
        "tiling-docagne",
        vec![("m", m), ("n", n)],
        lhs,
        rhs,
    ))
}

/// One-step gap identity `L(n) = L(N)·L(n-N) + (-1)^(N+1)·L(n-2N)`,
/// for `gap >= 1`, `n >= 2·gap`.
pub fn check_gap_identity(n: i64, gap: i64) -> Result<VerificationReport> {
    if gap < 1 || n / 2 < gap {
        return Err(Error::Domain(format!(
            "gap identity requires N >= 1 and n >= 2N, got n={n}, N={gap}"
        )));
    }
    let table = SequenceSpec::lucas().values_up_to(n);
    let l = |k: i64| &table[k as usize];
    let lhs = l(n).clone();
    let rhs = l(gap) * l(n - gap) + parity_sign(gap + 1) * l(n - 2 * gap);
    Ok(VerificationReport::new(
        "gap",
        vec![("n", n), ("N", gap)],
        lhs,
        rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_examples() {
        let r = check_addition(4, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, BigInt::from(13));
        let r = check_addition(1, 0).unwrap();
        assert_eq!(r.lhs, BigInt::from(1));
        assert!(r.passed);
        let r = check_addition(10, 5).unwrap();
        assert_eq!(r.lhs, BigInt::from(610));
        assert!(r.passed);
    }

    #[test]
    fn addition_domain() {
        assert!(matches!(check_addition(0, 5), Err(Error::Domain(_))));
        assert!(matches!(check_addition(3, -1), Err(Error::Domain(_))));
    }

    #[test]
    fn docagne_examples() {
        let r = check_docagne(5, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, BigInt::from(-1));
        let r = check_docagne(3, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, BigInt::from(0));
        assert_eq!(r.rhs, BigInt::from(0));
        let r = check_docagne(10, 4).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, BigInt::from(8));
        assert!(matches!(check_docagne(2, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(check_lucas_bridge(5).unwrap().lhs, BigInt::from(11));
        assert_eq!(check_lucas_bridge(1).unwrap().lhs, BigInt::from(1));
        assert_eq!(check_lucas_bridge(12).unwrap().lhs, BigInt::from(322));
        assert!(check_lucas_bridge(12).unwrap().passed);
        assert!(matches!(check_lucas_bridge(0), Err(Error::Domain(_))));
    }

    #[test]
    fn tiling_addition_examples() {
        let r = check_tiling_addition(4, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, BigInt::from(21));
        let r = check_tiling_addition(0, 7).unwrap();
        assert!(r.passed);
        let r = check_tiling_addition(5, 5).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, BigInt::from(89));
        assert!(matches!(
            check_tiling_addition(-1, 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn tiling_docagne_examples() {
        let r = check_tiling_docagne(5, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, BigInt::from(-1));
        let r = check_tiling_docagne(4, 4).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, BigInt::from(0));
        let r = check_tiling_docagne(7, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, BigInt::from(5));
    }

    #[test]
    fn gap_identity_examples() {
        let r = check_gap_identity(8, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, BigInt::from(47));
        let r = check_gap_identity(8, 2).unwrap();
        assert!(r.passed);
        let r = check_gap_identity(6, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, BigInt::from(18));
        assert!(matches!(check_gap_identity(5, 3), Err(Error::Domain(_))));
        assert!(matches!(check_gap_identity(8, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn report_json_shape() {
        let r = check_gap_identity(8, 3).unwrap();
        let v = r.to_json();
        assert_eq!(v["identity"], "gap");
        assert_eq!(v["params"]["n"], 8);
        assert_eq!(v["params"]["N"], 3);
        assert_eq!(v["lhs"], "47");
        assert_eq!(v["rhs"], "47");
        assert_eq!(v["passed"], true);
    }
}
