//! Eulerian, refined Eulerian and descent numbers, each by explicit formula
//! and by recurrence.
//!
//! Index conventions are kept explicit:
//!
//! * `A(d, k)` counts permutations of `S_d` with `k - 1` descents.
//! * `A(d, k, j)` (refined) counts permutations of `S_d` with `k` descents
//!   whose last element is `j`.
//! * `D(d, n, k)` counts indexed permutations of `S^n_d` with `k` descents.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{domain, verification, Result};
use crate::numeric::{binomial_row, factorial, int_pow, ExactInteger};

/// Row `d` of the Eulerian triangle, `values[k] = A(d, k)` for `k = 0..=d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerianTable {
    pub d: u32,
    pub values: Vec<ExactInteger>,
}

impl EulerianTable {
    /// `A(d, k)`, zero outside `0..=d`.
    pub fn get(&self, k: i64) -> ExactInteger {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.values.get(k))
            .cloned()
            .unwrap_or_else(Zero::zero)
    }

    /// Counts indexed by descent number: `hist[m] = A(d, m + 1)` for
    /// `m = 0..d`.
    pub fn descent_histogram(&self) -> Vec<ExactInteger> {
        if self.d == 0 {
            return vec![BigInt::one()];
        }
        self.values[1..].to_vec()
    }

    pub fn sum(&self) -> ExactInteger {
        self.values.iter().sum()
    }
}

/// Refined Eulerian numbers of order `d`, `get(k, j) = A(d, k, j)` for
/// `0 <= k <= d - 1` and `1 <= j <= d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedTable {
    pub d: u32,
    /// `values[k][j - 1]`.
    pub values: Vec<Vec<ExactInteger>>,
}

impl RefinedTable {
    /// Zero for any `(k, j)` outside the table.
    pub fn get(&self, k: i64, j: i64) -> ExactInteger {
        if k < 0 || j < 1 {
            return BigInt::zero();
        }
        self.values
            .get(k as usize)
            .and_then(|row| row.get(j as usize - 1))
            .cloned()
            .unwrap_or_else(Zero::zero)
    }

    pub fn sum(&self) -> ExactInteger {
        self.values.iter().flatten().sum()
    }

    /// `sum_j A(d, k, j)`.
    pub fn row_sum(&self, k: usize) -> ExactInteger {
        self.values
            .get(k)
            .map(|r| r.iter().sum())
            .unwrap_or_default()
    }
}

/// Row `d` of descent numbers with modulus `n`, `values[k] = D(d, n, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTable {
    pub d: u32,
    pub n: u32,
    pub values: Vec<ExactInteger>,
}

impl DescentTable {
    pub fn get(&self, k: i64) -> ExactInteger {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.values.get(k))
            .cloned()
            .unwrap_or_else(Zero::zero)
    }

    pub fn sum(&self) -> ExactInteger {
        self.values.iter().sum()
    }
}

/// Alternating sum `sum_{i=0}^{k} C(m, i) (-1)^i term(k - i)`.
fn alternating_sum(m: u64, k: u32, term: impl Fn(u32) -> ExactInteger) -> ExactInteger {
    let row = binomial_row(m);
    (0..=k)
        .map(|i| {
            let c = row.get(i as usize).cloned().unwrap_or_default();
            let t = c * term(k - i);
            if i % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

/// `A(d, k) = sum_{i=0}^{k} C(d + 1, i) (-1)^i (k - i)^d`.
pub fn eulerian_explicit(d: u32, k: u32) -> Result<ExactInteger> {
    if k > d {
        return domain(format!("eulerian index k = {k} exceeds d = {d}"));
    }
    Ok(alternating_sum(d as u64 + 1, k, |m| {
        int_pow(&BigInt::from(m), d)
    }))
}

/// Row `d` of the Eulerian triangle built upward from `A(0, 0) = 1`.
pub fn eulerian_recurrence_table(d: u32) -> EulerianTable {
    let mut row = vec![BigInt::one()];
    for m in 1..=d {
        let prev = EulerianTable {
            d: m - 1,
            values: row,
        };
        let next = (0..=m as i64)
            .map(|k| {
                if k == 0 {
                    BigInt::zero()
                } else {
                    // A(m, k) = k A(m-1, k) + (m - k + 1) A(m-1, k-1)
                    prev.get(k) * k + prev.get(k - 1) * (m as i64 - k + 1)
                }
            })
            .collect();
        row = next;
    }
    EulerianTable { d, values: row }
}

/// `A(d, k, j) = sum_{i=0}^{k} C(d, i) (-1)^i (k - i)^(d - j) (k - i + 1)^(j - 1)`
/// with `0^0 = 1`.
pub fn refined_explicit(d: u32, k: u32, j: u32) -> Result<ExactInteger> {
    if d == 0 || k >= d || j == 0 || j > d {
        return domain(format!(
            "refined index (d, k, j) = ({d}, {k}, {j}) outside 0 <= k < d, 1 <= j <= d"
        ));
    }
    Ok(alternating_sum(d as u64, k, |m| {
        int_pow(&BigInt::from(m), d - j) * int_pow(&BigInt::from(m + 1), j - 1)
    }))
}

fn refined_step(prev: &RefinedTable) -> RefinedTable {
    let d = prev.d as i64; // new order is d + 1
    let values = (0..=d)
        .map(|k| {
            (1..=d + 1)
                .map(|last| {
                    if last == 1 {
                        // Ending in 1 forces a final descent; strip it.
                        if k == 0 {
                            BigInt::zero()
                        } else {
                            prev.row_sum(k as usize - 1)
                        }
                    } else {
                        // A(d+1, k, last) = (k+1) A(d, k, last-1) + (d-k) A(d, k-1, last-1)
                        prev.get(k, last - 1) * (k + 1) + prev.get(k - 1, last - 1) * (d - k)
                    }
                })
                .collect()
        })
        .collect();
    RefinedTable {
        d: prev.d + 1,
        values,
    }
}

/// Checks `next` against the second recurrence for last element `<= d`, and
/// the last column against `A(d+1, k, d+1) = sum_j A(d, k, j)`.
fn check_second_recurrence(prev: &RefinedTable, next: &RefinedTable) -> Result<()> {
    let d = prev.d as i64;
    for k in 0..=d {
        for last in 1..=d + 1 {
            let expected = if last == d + 1 {
                if k < d {
                    prev.row_sum(k as usize)
                } else {
                    BigInt::zero()
                }
            } else {
                // A(d+1, k, last) = k A(d, k, last) + (d-k+1) A(d, k-1, last)
                prev.get(k, last) * k + prev.get(k - 1, last) * (d - k + 1)
            };
            let got = next.get(k, last);
            if got != expected {
                return verification(format!(
                    "refined recurrences disagree at (d, k, j) = ({}, {k}, {last}): first gives {got}, second gives {expected}",
                    d + 1
                ));
            }
        }
    }
    Ok(())
}

/// Refined table of order `d >= 1`, built with the first refined recurrence
/// from `A(1, 0, 1) = 1` and cross-checked against the second one at every
/// order.
pub fn refined_recurrence_table(d: u32) -> Result<RefinedTable> {
    if d == 0 {
        return domain("refined table needs d >= 1");
    }
    let mut table = RefinedTable {
        d: 1,
        values: vec![vec![BigInt::one()]],
    };
    for _ in 1..d {
        let next = refined_step(&table);
        check_second_recurrence(&table, &next)?;
        table = next;
    }
    Ok(table)
}

/// `D(d, n, k) = sum_{i=0}^{k} C(d + 1, i) (-1)^i (n (k - i) + 1)^d`.
pub fn descent_explicit(d: u32, n: u32, k: u32) -> Result<ExactInteger> {
    if n == 0 {
        return domain("descent modulus n must be >= 1");
    }
    if k > d {
        return domain(format!("descent index k = {k} exceeds d = {d}"));
    }
    Ok(alternating_sum(d as u64 + 1, k, |m| {
        int_pow(&BigInt::from(n as u64 * m as u64 + 1), d)
    }))
}

/// Row `d` of `D(., n, .)` built from `D(0, n, 0) = 1` by
/// `D(d, n, k) = (nk + 1) D(d-1, n, k) + (n(d-k) + n - 1) D(d-1, n, k-1)`.
pub fn descent_recurrence_table(d: u32, n: u32) -> Result<DescentTable> {
    if n == 0 {
        return domain("descent modulus n must be >= 1");
    }
    let n = n as i64;
    let mut row = DescentTable {
        d: 0,
        n: n as u32,
        values: vec![BigInt::one()],
    };
    for m in 1..=d as i64 {
        let values = (0..=m)
            .map(|k| row.get(k) * (n * k + 1) + row.get(k - 1) * (n * (m - k) + n - 1))
            .collect();
        row = DescentTable {
            d: m as u32,
            n: n as u32,
            values,
        };
    }
    Ok(row)
}

/// `n^d d!`, the order of `S^n_d`.
pub fn expected_descent_total(d: u32, n: u32) -> ExactInteger {
    int_pow(&BigInt::from(n), d) * factorial(d as u64)
}
