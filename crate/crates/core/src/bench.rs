//! Timing harness comparing strategies for computing a Lucas number.
//!
//! Strategies:
//!
//! * `Iterative`: the O(n) recurrence walk from `seq`.
//! * `FastDoubling`: `L(n) = 2·F(n+1) - F(n)` over `fast_double_fib`.
//! * `LacunaryRecombine`: fold a precomputed gap expansion back together;
//!   only the recombination arithmetic is timed, the table of expansion
//!   term values is built outside the clock.
//!
//! Every run computes full values, checks that all strategies agree, and
//! reports the minimum wall time over the requested repetitions. Timings
//! are reported, never asserted: wall-clock claims do not belong in tests.

use std::time::Instant;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lacunary::lucas_expand;
use crate::seq::{fast_double_fib, SequenceSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Iterative,
    FastDoubling,
    LacunaryRecombine,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::Iterative,
        Strategy::FastDoubling,
        Strategy::LacunaryRecombine,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Strategy::Iterative => "ITERATIVE",
            Strategy::FastDoubling => "FAST_DOUBLING",
            Strategy::LacunaryRecombine => "LACUNARY_RECOMBINE",
        }
    }
}

/// One timed measurement. `gap` is 0 for strategies that take no gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub strategy: Strategy,
    pub n: u64,
    pub gap: u64,
    pub wall_time_ns: u128,
    pub result_digest: u64,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.strategy.label(),
            self.n,
            self.gap,
            self.wall_time_ns,
            self.result_digest
        )
    }
}

pub fn csv_header() -> &'static str {
    "strategy,n,N,wall_time_ns,result_digest"
}

/// Low 64 bits of the magnitude, the digest reported alongside timings.
fn low64(value: &BigInt) -> u64 {
    value.magnitude().iter_u64_digits().next().unwrap_or(0)
}

fn time_min<T>(repetitions: u32, mut f: impl FnMut() -> T) -> (T, u128) {
    let mut best = u128::MAX;
    let mut out = None;
    for _ in 0..repetitions {
        let clock = Instant::now();
        let value = f();
        let elapsed = clock.elapsed().as_nanos();
        best = best.min(elapsed);
        out = Some(value);
    }
    (out.expect("repetitions >= 1"), best)
}

/// Time `L(n)` for each strategy and each `n`, verifying that all
/// strategies produce identical full values before reporting. The
/// lacunary strategy requires `gap >= 1` and every `n >= 2·gap`.
pub fn run_bench(
    strategies: &[Strategy],
    n_values: &[u64],
    gap: u64,
    repetitions: u32,
) -> Result<Vec<BenchRecord>> {
    if repetitions < 1 {
        return Err(Error::Domain("repetitions must be >= 1".into()));
    }
    if strategies.is_empty() || n_values.is_empty() {
        return Err(Error::Domain(
            "need at least one strategy and one n value".into(),
        ));
    }
    if strategies.contains(&Strategy::LacunaryRecombine) {
        if gap < 1 {
            return Err(Error::Domain(
                "the lacunary strategy requires a gap >= 1".into(),
            ));
        }
        for &n in n_values {
            if n / 2 < gap {
                return Err(Error::Domain(format!(
                    "the lacunary strategy requires n >= 2·gap, got n={n}, gap={gap}"
                )));
            }
        }
    }

    let lucas_spec = SequenceSpec::lucas();
    let mut records = Vec::new();
    for &n in n_values {
        let mut values: Vec<(Strategy, BigInt)> = Vec::new();
        for &strategy in strategies {
            let (value, wall_time_ns) = match strategy {
                Strategy::Iterative => time_min(repetitions, || lucas_spec.term(n as i64)),
                Strategy::FastDoubling => time_min(repetitions, || {
                    let (f_n, f_n1) = fast_double_fib(n);
                    (f_n1 << 1) - f_n
                }),
                Strategy::LacunaryRecombine => {
                    let expansion = lucas_expand(n as i64, gap as i64)?;
                    let table = lucas_spec.values_up_to(expansion.n - expansion.gap);
                    let terms: Vec<(i8, &BigInt)> = expansion
                        .terms
                        .iter()
                        .map(|t| (t.sign, &table[t.index as usize]))
                        .collect();
                    let residual = (
                        expansion.residual.sign,
                        &table[expansion.residual.index as usize],
                    );
                    let outer = &expansion.outer_coefficient;
                    time_min(repetitions, || {
                        let mut bracket = BigInt::from(0);
                        for (sign, value) in &terms {
                            if *sign < 0 {
                                bracket -= *value;
                            } else {
                                bracket += *value;
                            }
                        }
                        let mut total = outer * bracket;
                        if residual.0 < 0 {
                            total -= residual.1;
                        } else {
                            total += residual.1;
                        }
                        total
                    })
                }
            };
            records.push(BenchRecord {
                strategy,
                n,
                gap: if strategy == Strategy::LacunaryRecombine {
                    gap
                } else {
                    0
                },
                wall_time_ns,
                result_digest: low64(&value),
            });
            values.push((strategy, value));
        }
        for pair in values.windows(2) {
            if pair[0].1 != pair[1].1 {
                return Err(Error::Mismatch(format!(
                    "strategies {} and {} disagree at n={n}",
                    pair[0].0.label(),
                    pair[1].0.label()
                )));
            }
        }
    }
    Ok(records)
}

/// Human-readable aligned table of the records (the CSV is the machine
/// format).
pub fn format_table(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<20} {:>10} {:>4} {:>14} {:>20}\n",
        "strategy", "n", "N", "wall_time_ns", "result_digest"
    ));
    for r in records {
        out.push_str(&format!(
            "{:<20} {:>10} {:>4} {:>14} {:>20}\n",
            r.strategy.label(),
            r.n,
            r.gap,
            r.wall_time_ns,
            r.result_digest
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seq::lucas;

    #[test]
    fn all_strategies_agree_and_record() {
        let records = run_bench(&Strategy::ALL, &[10], 2, 2).unwrap();
        assert_eq!(records.len(), 3);
        for r in &records {
            assert_eq!(r.n, 10);
            assert_eq!(r.result_digest, 123);
        }
        assert_eq!(records[0].gap, 0);
        assert_eq!(records[1].gap, 0);
        assert_eq!(records[2].gap, 2);
    }

    #[test]
    fn digest_is_low_64_bits() {
        assert_eq!(low64(&BigInt::from(123)), 123);
        let big = (BigInt::from(1) << 64) + 5;
        assert_eq!(low64(&big), 5);
        assert_eq!(low64(&BigInt::from(0)), 0);
        // L(100) is wider than 64 bits; the digest is its low word.
        let l100 = lucas(100);
        assert_eq!(low64(&l100), low64(&(&l100 + (BigInt::from(1) << 64))));
    }

    #[test]
    fn small_n_without_lacunary() {
        let records = run_bench(&[Strategy::FastDoubling], &[0], 0, 1).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].result_digest, 2);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            run_bench(&Strategy::ALL, &[10], 2, 0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            run_bench(&[Strategy::LacunaryRecombine], &[10], 0, 1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            run_bench(&[Strategy::LacunaryRecombine], &[3], 2, 1),
            Err(Error::Domain(_))
        ));
        assert!(matches!(run_bench(&[], &[10], 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn csv_shape() {
        assert_eq!(csv_header().split(',').count(), 5);
        let records = run_bench(&[Strategy::Iterative], &[10], 0, 1).unwrap();
        let row = records[0].csv_row();
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(fields[0], "ITERATIVE");
        assert_eq!(fields[1], "10");
        assert_eq!(fields[2], "0");
        assert_eq!(fields[4], "123");
    }
}
