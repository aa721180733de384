//! Ground truth by brute-force enumeration of permutations.

use itertools::Itertools;

use crate::error::{domain, Result};

/// Largest `d` the enumeration accepts (`9! = 362880` permutations).
pub const ORACLE_MAX_D: u32 = 9;

/// Descent statistics of `S_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentHistogram {
    pub d: u32,
    /// `counts[m]`: permutations with `m` descents, `m = 0..d`.
    pub counts: Vec<u64>,
    /// `refined_counts[m][j - 1]`: permutations with `m` descents ending in `j`.
    pub refined_counts: Vec<Vec<u64>>,
}

impl DescentHistogram {
    /// `A(d, k)`, i.e. the count with `k - 1` descents.
    pub fn eulerian(&self, k: u32) -> u64 {
        k.checked_sub(1)
            .and_then(|m| self.counts.get(m as usize))
            .copied()
            .unwrap_or(0)
    }

    /// `A(d, k, j)`, zero outside the table.
    pub fn refined(&self, k: u32, j: u32) -> u64 {
        j.checked_sub(1)
            .and_then(|j| self.refined_counts.get(k as usize)?.get(j as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Visits every permutation of `1..=d` in lexicographic order.
pub fn enumerate_descents(d: u32) -> Result<DescentHistogram> {
    if d == 0 || d > ORACLE_MAX_D {
        return domain(format!(
            "enumeration needs 1 <= d <= {ORACLE_MAX_D}, got {d}"
        ));
    }
    let n = d as usize;
    let mut counts = vec![0u64; n];
    let mut refined_counts = vec![vec![0u64; n]; n];
    for perm in (1..=d).permutations(n) {
        let m = perm.windows(2).filter(|w| w[0] > w[1]).count();
        counts[m] += 1;
        refined_counts[m][perm[n - 1] as usize - 1] += 1;
    }
    Ok(DescentHistogram {
        d,
        counts,
        refined_counts,
    })
}

/// One `(d, k)` of the audit: `A(d+1, k, d+1)` against the two candidate
/// plain Eulerian numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditRow {
    pub d: u32,
    pub k: u32,
    /// `A(d+1, k, d+1)`.
    pub refined: u64,
    /// `A(d+1, k)`.
    pub literal: u64,
    /// `A(d, k+1)`.
    pub shifted: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemarkAudit {
    pub rows: Vec<AuditRow>,
    /// `A(d+1, k) = A(d+1, k, d+1)` at every row.
    pub literal_holds: bool,
    /// `A(d, k+1) = A(d+1, k, d+1)` at every row.
    pub shifted_holds: bool,
}

/// Tests both alignments of "permutations ending in their largest element"
/// with plain Eulerian numbers for `1 <= d <= d_max`, `0 <= k <= d`.
pub fn audit_remark_relation(d_max: u32) -> Result<RemarkAudit> {
    if d_max == 0 || d_max >= ORACLE_MAX_D {
        return domain(format!(
            "audit needs 1 <= d_max <= {}, got {d_max}",
            ORACLE_MAX_D - 1
        ));
    }
    let hists = (1..=d_max + 1)
        .map(enumerate_descents)
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for d in 1..=d_max {
        let (small, big) = (&hists[d as usize - 1], &hists[d as usize]);
        for k in 0..=d {
            rows.push(AuditRow {
                d,
                k,
                refined: big.refined(k, d + 1),
                literal: big.eulerian(k),
                shifted: small.eulerian(k + 1),
            });
        }
    }
    Ok(RemarkAudit {
        literal_holds: rows.iter().all(|r| r.refined == r.literal),
        shifted_holds: rows.iter().all(|r| r.refined == r.shifted),
        rows,
    })
}
