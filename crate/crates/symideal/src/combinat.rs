//! Partitions, tableaux, permutations and the character theory of S_n.
//!
//! Partitions are enumerated in reverse-lexicographic order and standard
//! tableaux in lexicographic order of their row-major reading, so every
//! listing in the crate is deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not non-increasing")));
        }
        Ok(Partition { parts })
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition { parts: vec![n] }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|lambda|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.parts[0])
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Whether `self` dominates `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        let k = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for j in 0..k {
            a += self.part(j);
            b += other.part(j);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `d(lambda) = sum (i-1) lambda_i`, the lowest degree of a Specht polynomial.
    pub fn d_min(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `r_lambda(s) = s - n + 1 + sum_{i <= n-s} lambda'_i`.
    pub fn r_lambda(&self, s: usize) -> Result<usize> {
        let n = self.size();
        if s == 0 || s > n {
            return Err(Error::OutOfRange(format!("s = {s} not in 1..={n}")));
        }
        let t = self.transpose();
        let tail: usize = (0..n - s).map(|i| t.part(i)).sum();
        Ok(s + 1 + tail - n)
    }

    /// `R_k(mu) = mu_m + ... + mu_{k+1} + 1` for `1 <= k <= m`.
    pub fn r_k(&self, k: usize) -> Result<usize> {
        let m = self.len();
        if k == 0 || k > m {
            return Err(Error::OutOfRange(format!("k = {k} not in 1..={m}")));
        }
        Ok(self.parts[k..].iter().sum::<usize>() + 1)
    }

    /// `n! / prod lambda_i!`, the dimension of the permutation module `M^lambda`.
    pub fn multinomial(&self) -> BigUint {
        let mut r = factorial(self.size());
        for &p in &self.parts {
            r /= factorial(p);
        }
        r
    }

    /// Size of the conjugacy class of S_n with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.size()) / self.centralizer_order()
    }

    /// `z_mu = prod_i i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_default() += 1;
        }
        let mut z = BigUint::from(1u32);
        for (i, m) in mult {
            z *= BigUint::from(i).pow(m as u32) * factorial(m);
        }
        z
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_length_dim(&self) -> BigUint {
        let t = self.transpose();
        let mut hooks = BigUint::from(1u32);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let h = (row - j - 1) + (t.parts[j] - i - 1) + 1;
                hooks *= BigUint::from(h);
            }
        }
        factorial(self.size()) / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Accepts `4,3,2`, `(4,3,2)` or `[4,3,2]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidPartition("n must be positive".into()));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    Ok(out)
}

/// A bijective filling of a Young diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(lens).map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let entries: BTreeSet<usize> = rows.iter().flatten().copied().collect();
        if entries.len() != n || entries.iter().next() != Some(&1) || entries.iter().last() != Some(&n) {
            return Err(Error::InvalidTableau(format!("{rows:?} is not a bijection onto 1..={n}")));
        }
        Ok(Tableau { rows })
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Columns, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows[0].len();
        (0..width)
            .map(|j| self.rows.iter().take_while(|r| r.len() > j).map(|r| r[j]).collect())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// The word: columns read bottom-to-top, left-to-right.
    pub fn word(&self) -> Vec<usize> {
        self.columns().into_iter().flat_map(|c| c.into_iter().rev()).collect()
    }

    /// Index of each letter of [`Tableau::word`], aligned with word positions.
    pub fn index(&self) -> Vec<usize> {
        word_index(&self.word())
    }

    /// Row-major reading, used for ordering.
    pub fn reading(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Sum of the index sequence.
    pub fn charge(&self) -> usize {
        self.index().iter().sum()
    }
}

/// Index sequence of a permutation word of `1..=n`: `1` gets 0, and `k+1` gets
/// the index `p` of `k` if it lies to the right of `k`, else `p + 1`.
pub fn word_index(w: &[usize]) -> Vec<usize> {
    let n = w.len();
    let mut pos = vec![0; n + 1];
    for (i, &k) in w.iter().enumerate() {
        pos[k] = i;
    }
    let mut idx_of = vec![0; n + 1];
    for k in 2..=n {
        idx_of[k] = idx_of[k - 1] + usize::from(pos[k] < pos[k - 1]);
    }
    w.iter().map(|&k| idx_of[k]).collect()
}

impl fmt::Display for Tableau {
    /// Rows separated by `/`, e.g. `9,3,6,4/2,1,8/5,7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .split('/')
            .map(|r| {
                r.split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// Standard tableaux of shape `lambda`, sorted by row-major reading.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    let mut out = Vec::new();
    // Place 1..=n in turn; entry k goes at the end of any row that keeps the shape valid.
    fn rec(k: usize, n: usize, lambda: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len < lambda.parts[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                rec(k + 1, n, lambda, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, n, lambda, &mut rows, &mut out);
    out.sort_by_key(Tableau::reading);
    out
}

/// A permutation of `1..=n` in one-line notation, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// From one-line notation over `1..=n`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|i| i - 1).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// The transposition of 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    /// The cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    /// A permutation with the given cycle type, cycles on consecutive points.
    pub fn of_cycle_type(mu: &Partition) -> Self {
        let n = mu.size();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in mu.parts() {
            for j in 0..len {
                images[start + j] = start + (j + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// One-line notation over `1..=n`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn sign(&self) -> i64 {
        self.cycle_type().sign()
    }

    /// All of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// All permutations fixing every point outside `support` (0-based).
    pub fn all_on(n: usize, support: &[usize]) -> Vec<Permutation> {
        Permutation::all(support.len())
            .into_iter()
            .map(|p| {
                let mut images: Vec<usize> = (0..n).collect();
                for (a, &s) in support.iter().enumerate() {
                    images[s] = support[p.images[a]];
                }
                Permutation { images }
            })
            .collect()
    }
}

/// Multiplicities of irreducible S_n-modules `S^mu`, keyed by `mu`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicDecomposition {
    pub n: usize,
    pub multiplicities: BTreeMap<Partition, usize>,
}

impl IsotypicDecomposition {
    pub fn new(n: usize) -> Self {
        IsotypicDecomposition { n, multiplicities: BTreeMap::new() }
    }

    pub fn from_pairs(n: usize, pairs: &[(&[usize], usize)]) -> Result<Self> {
        let mut d = Self::new(n);
        for (p, m) in pairs {
            let p = Partition::new(p.to_vec())?;
            if p.size() != n {
                return Err(Error::SizeMismatch(p.size(), n));
            }
            d.add(&p, *m);
        }
        Ok(d)
    }

    pub fn add(&mut self, mu: &Partition, m: usize) {
        if m > 0 {
            *self.multiplicities.entry(mu.clone()).or_default() += m;
        }
    }

    pub fn get(&self, mu: &Partition) -> usize {
        self.multiplicities.get(mu).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &IsotypicDecomposition) {
        for (mu, &m) in &other.multiplicities {
            self.add(mu, m);
        }
    }

    /// Total dimension `sum m_mu dim S^mu`.
    pub fn dimension(&self) -> BigUint {
        self.multiplicities.iter().map(|(mu, &m)| mu.hook_length_dim() * BigUint::from(m)).sum()
    }
}

impl fmt::Display for IsotypicDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            return write!(f, "0");
        }
        // Print the most dominant shapes first.
        let terms: Vec<String> = self
            .multiplicities
            .iter()
            .rev()
            .map(|(mu, &m)| if m == 1 { format!("S{mu}") } else { format!("{m}S{mu}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Kostka number `K_{mu,lambda}`: semistandard tableaux of shape `mu`, content `lambda`.
pub fn kostka(mu: &Partition, lambda: &Partition) -> Result<usize> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch(mu.size(), lambda.size()));
    }
    // Fill letter by letter: letter v occupies a horizontal strip of size lambda_v.
    fn rec(v: usize, shape: &mut Vec<usize>, mu: &Partition, lambda: &Partition) -> usize {
        if v == lambda.len() {
            return usize::from(shape.as_slice() == mu.parts());
        }
        let mut count = 0;
        let rows = mu.len();
        // distribute lambda[v] boxes across rows as a horizontal strip
        fn strip(
            i: usize,
            left: usize,
            shape: &mut Vec<usize>,
            old: &[usize],
            v: usize,
            mu: &Partition,
            lambda: &Partition,
            count: &mut usize,
        ) {
            if i == shape.len() {
                if left == 0 {
                    *count += rec(v + 1, shape, mu, lambda);
                }
                return;
            }
            let cap_mu = mu.parts()[i] - old[i];
            let cap_strip = if i == 0 { usize::MAX } else { old[i - 1] - old[i] };
            let cap = cap_mu.min(cap_strip).min(left);
            for add in 0..=cap {
                shape[i] = old[i] + add;
                strip(i + 1, left - add, shape, old, v, mu, lambda, count);
            }
            shape[i] = old[i];
        }
        let old = shape.clone();
        debug_assert_eq!(old.len(), rows);
        strip(0, lambda.parts()[v], shape, &old, v, mu, lambda, &mut count);
        count
    }
    let mut shape = vec![0; mu.len()];
    Ok(rec(0, &mut shape, mu, lambda))
}

/// Decomposition of the permutation module `M^lambda` into Specht modules.
pub fn kostka_decomposition(lambda: &Partition) -> IsotypicDecomposition {
    let n = lambda.size();
    let mut d = IsotypicDecomposition::new(n);
    for mu in partitions_of(n).expect("n >= 1") {
        d.add(&mu, kostka(&mu, lambda).expect("same size"));
    }
    d
}

/// `chi^lambda` on the class of cycle type `mu`, by Murnaghan-Nakayama.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    // Beta-set of lambda: lambda_i + (m - i); removing a rim hook of length k
    // moves one bead from b to b - k, with sign (-1)^{beads strictly between}.
    let m = lambda.len();
    let beta: BTreeSet<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + m - 1 - i).collect();
    Ok(mn(&beta, mu.parts()))
}

fn mn(beta: &BTreeSet<usize>, cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else { return 1 };
    let mut total = 0;
    for &b in beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.range(b - k + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - k);
        let sign = if between.is_multiple_of(2) { 1 } else { -1 };
        total += sign * mn(&next, rest);
    }
    total
}

/// Character table rows indexed by `partitions_of(n)`, columns likewise.
pub fn character_table(n: usize) -> Result<Vec<Vec<i64>>> {
    let ps = partitions_of(n)?;
    ps.iter()
        .map(|l| ps.iter().map(|m| irreducible_character(l, m)).collect())
        .collect()
}
