//! Integer partitions, bipartitions and irreducible characters of `S_n`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const PARTITION_GUARD: usize = 30;
pub const BIPARTITION_GUARD: usize = 12;

/// A weakly decreasing sequence of positive integers. The empty partition
/// has weight zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate partition (transposed diagram).
    pub fn conjugate(&self) -> Self {
        let first = self.0.first().copied().unwrap_or(0);
        Self((1..=first).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `z_mu = prod_i i^{m_i} m_i!`, so that `n!/z_mu` is the size of the
    /// class of cycle type `mu` in `S_n`.
    pub fn z_mu(&self) -> u128 {
        let mut mult: HashMap<usize, u32> = HashMap::new();
        for &p in &self.0 {
            *mult.entry(p).or_default() += 1;
        }
        mult.into_iter()
            .map(|(i, m)| (i as u128).pow(m) * factorial(m as usize))
            .product()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// A pair `(lambda0 ⊢ k, lambda1 ⊢ n-k)` indexing an irreducible of `B_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub lambda0: Partition,
    pub lambda1: Partition,
}

impl Bipartition {
    pub fn new(lambda0: Partition, lambda1: Partition) -> Self {
        Self { lambda0, lambda1 }
    }

    pub fn k(&self) -> usize {
        self.lambda0.weight()
    }

    pub fn n(&self) -> usize {
        self.lambda0.weight() + self.lambda1.weight()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lambda0, self.lambda1)
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n > PARTITION_GUARD {
        return Err(Error::Guard {
            what: "partition weight",
            value: n,
            limit: PARTITION_GUARD,
        });
    }
    fn rec(left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            prefix.push(p);
            rec(left - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All bipartitions of total weight `n`, ordered by decreasing `k`, then by
/// the partition order of each component.
pub fn enumerate_bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    if n > BIPARTITION_GUARD {
        return Err(Error::Guard {
            what: "bipartition weight",
            value: n,
            limit: BIPARTITION_GUARD,
        });
    }
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for l0 in enumerate_partitions(k)? {
            for l1 in enumerate_partitions(n - k)? {
                out.push(Bipartition::new(l0.clone(), l1));
            }
        }
    }
    Ok(out)
}

/// Number of standard Young tableaux of shape `lam`, by the hook-length formula.
pub fn hook_dimension(lam: &Partition) -> u128 {
    let conj = lam.conjugate();
    let mut hooks: u128 = 1;
    for (i, &row) in lam.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j] - i - 1;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    factorial(lam.weight()) / hooks
}

/// Memoized Murnaghan–Nakayama evaluation. A cache lives for as long as the
/// caller keeps it; nothing is shared between threads.
#[derive(Debug, Default)]
pub struct MnCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MnCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi_lam(mu)`: the irreducible character of `S_n` labelled by `lam` at
    /// an element of cycle type `mu`.
    pub fn character(&mut self, lam: &Partition, mu: &Partition) -> Result<i64> {
        if lam.weight() != mu.weight() {
            return Err(Error::WeightMismatch {
                expected: lam.weight(),
                found: mu.weight(),
            });
        }
        Ok(self.eval(lam.parts(), mu.parts()))
    }

    // Rim hooks are removed through beta-numbers: a hook of length r is a
    // bead b moved to the empty position b - r, with sign (-1)^(beads jumped).
    fn eval(&mut self, lam: &[usize], mu: &[usize]) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lam.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = mu[0];
        let rest = &mu[1..];
        let len = lam.len();
        let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0i64;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let jumped = beta.iter().filter(|&&c| c > target && c < b).count();
            let mut next = beta.clone();
            next[idx] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let m = next.len();
            let shape: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(i, &c)| c - (m - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            let sign = if jumped % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(&shape, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn mn_character(lam: &Partition, mu: &Partition) -> Result<i64> {
    MnCache::new().character(lam, mu)
}

/// Standard Young tableaux of shape `lam`, each given as the row index of
/// every entry `1..=n` (entry `i` sits in row `rows[i-1]`).
pub fn standard_tableaux(lam: &Partition) -> Vec<Vec<usize>> {
    fn rec(shape: &[usize], filled: &mut Vec<usize>, rows: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if filled.iter().zip(shape).all(|(f, s)| f == s) {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let can = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if can {
                filled[r] += 1;
                rows.push(r);
                rec(shape, filled, rows, out);
                rows.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(lam.parts(), &mut vec![0; lam.len()], &mut Vec::new(), &mut out);
    out
}
