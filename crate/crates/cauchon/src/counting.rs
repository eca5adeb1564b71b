//! Counting diagrams and tabulating stratum-dimension distributions.
//!
//! The closed-form diagram count is the poly-Bernoulli number
//! `B_n^(-m) = sum_k (k!)^2 S(n+1, k+1) S(m+1, k+1)` with Stirling numbers of
//! the second kind; it serves as an independent oracle for the streamed
//! enumeration. Distributions keep exact integer counts, and the limiting
//! proportions `2^{1-δ(i,0)} C(2m, m+i) / 4^m` are handled as exact
//! rationals end to end.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::diagram;
use crate::error::{Error, Result};
use crate::strata;

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if n == 0 {
        return BigUint::one();
    }
    if k == 0 {
        return BigUint::zero();
    }
    let mut prev = vec![BigUint::zero(); k + 1];
    prev[0] = BigUint::one();
    for _ in 1..=n {
        let mut curr = vec![BigUint::zero(); k + 1];
        for j in 1..=k {
            curr[j] = &prev[j] * BigUint::from(j) + &prev[j - 1];
        }
        prev = curr;
        prev[0] = BigUint::zero();
    }
    prev[k].clone()
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Closed-form number of `m x n` Cauchon diagrams.
pub fn diagram_count(m: usize, n: usize) -> BigUint {
    let mut total = BigUint::zero();
    for k in 0..=m.min(n) {
        let f = factorial(k);
        total += &f * &f * stirling2(n + 1, k + 1) * stirling2(m + 1, k + 1);
    }
    total
}

/// Histogram of stratum dimensions over all `m x n` diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimDistribution {
    m: usize,
    n: usize,
    counts: BTreeMap<usize, u64>,
    total: u64,
}

impl DimDistribution {
    fn empty(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            counts: BTreeMap::new(),
            total: 0,
        }
    }

    fn record(&mut self, dim: usize) {
        *self.counts.entry(dim).or_insert(0) += 1;
        self.total += 1;
    }

    fn merge(mut self, other: Self) -> Self {
        for (dim, count) in other.counts {
            *self.counts.entry(dim).or_insert(0) += count;
        }
        self.total += other.total;
        self
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn count(&self, dim: usize) -> u64 {
        self.counts.get(&dim).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Dimensions with nonzero count, increasing.
    pub fn support(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    /// Exact fraction of diagrams with the given dimension.
    pub fn fraction(&self, dim: usize) -> BigRational {
        BigRational::new(BigInt::from(self.count(dim)), BigInt::from(self.total))
    }
}

/// Streams the enumeration and tallies stratum dimensions, using `jobs`
/// worker threads over disjoint chunks of the enumeration. Memory stays at
/// one histogram per worker. Refuses to start when the closed-form count
/// exceeds `cap`.
pub fn dim_distribution(m: usize, n: usize, cap: u64, jobs: usize) -> Result<DimDistribution> {
    let expected = diagram_count(m, n);
    if expected > BigUint::from(cap) {
        return Err(Error::CapExceeded {
            count: expected,
            cap,
        });
    }
    let jobs = jobs.max(1);
    if jobs == 1 {
        let mut dist = DimDistribution::empty(m, n);
        for d in diagram::enumerate(m, n)? {
            dist.record(strata::stratum_dim(&d));
        }
        return Ok(dist);
    }
    let parts = diagram::partitions(m, n, jobs * 8)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Parallel {
            message: e.to_string(),
        })?;
    let dist = pool.install(|| {
        parts
            .into_par_iter()
            .map(|p| {
                let mut local = DimDistribution::empty(m, n);
                for d in p.iter() {
                    local.record(strata::stratum_dim(&d));
                }
                local
            })
            .reduce(|| DimDistribution::empty(m, n), DimDistribution::merge)
    });
    Ok(dist)
}

/// Limiting proportion of `i`-dimensional strata for fixed `m`:
/// `2^{1-δ(i,0)} C(2m, m+i) / 4^m`, as an exact rational.
pub fn conjecture_limit(m: usize, i: usize) -> BigRational {
    let two_pow = if i == 0 {
        BigUint::one()
    } else {
        BigUint::from(2u32)
    };
    let num = BigInt::from(two_pow * binomial(2 * m, m + i));
    let den = BigInt::from(BigUint::from(4u32).pow(m as u32));
    BigRational::new(num, den)
}

/// One row of the empirical-versus-limit table.
#[derive(Clone, Debug)]
pub struct ConjectureRow {
    pub m: usize,
    pub n: usize,
    pub i: usize,
    pub count: u64,
    pub total: u64,
    pub empirical: BigRational,
    pub limit: BigRational,
    pub abs_error: BigRational,
}

/// Empirical fractions against the limiting proportions for `n` from `m` to
/// `n_max` and `i` from `0` to `m`.
pub fn conjecture_table(
    m: usize,
    n_max: usize,
    cap: u64,
    jobs: usize,
) -> Result<Vec<ConjectureRow>> {
    let mut rows = Vec::new();
    for n in m..=n_max {
        let dist = dim_distribution(m, n, cap, jobs)?;
        for i in 0..=m {
            let empirical = dist.fraction(i);
            let limit = conjecture_limit(m, i);
            let abs_error = (&empirical - &limit).abs();
            rows.push(ConjectureRow {
                m,
                n,
                i,
                count: dist.count(i),
                total: dist.total(),
                empirical,
                limit,
                abs_error,
            });
        }
    }
    Ok(rows)
}

/// Renders an exact rational as a decimal string with a fixed number of
/// fractional digits, rounding half away from zero.
pub fn format_rational_decimal(r: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled_num = r.numer() * &scale;
    let den = r.denom();
    let quot = &scaled_num / den;
    let rem = &scaled_num % den;
    let round_up = (rem.abs() * BigInt::from(2u32)) >= den.abs();
    let mut scaled = quot.abs();
    if round_up {
        scaled += 1u32;
    }
    let negative = r.is_negative() && !scaled.is_zero();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        let frac = frac_part.to_string();
        format!("{sign}{int_part}.{frac:0>digits$}")
    }
}
