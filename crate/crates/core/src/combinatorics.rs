//! Subsets of `{1..n}`: block decomposition, length, sign, duality,
//! dominance order and the Schubert singularity criterion.
//!
//! A k-subset plays two roles: it indexes Schubert data (weight functions,
//! Schubert varieties, tensor basis vectors) and it labels the torus fixed
//! point of `Gr(k, n)` spanned by the corresponding coordinate vectors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// A subset `{i_1 < ... < i_k}` of `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubsetIndex {
    n: usize,
    elements: Vec<usize>,
}

/// Decomposition of a subset into maximal runs of consecutive numbers.
///
/// Positions are 1-based: `v[c]` is the position of the last element of
/// block `c` (with `v[0] = 0`), and `hat(a)` is the last position of the block
/// containing position `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    blocks: Vec<Vec<usize>>,
    m: Vec<usize>,
    v: Vec<usize>,
    hat: Vec<usize>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block lengths `m_1..m_l`.
    pub fn m(&self) -> &[usize] {
        &self.m
    }

    /// Number of blocks `l`.
    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// Cumulative sums `v(c) = m_1 + ... + m_c` for `c = 0..=l`.
    pub fn v(&self, c: usize) -> usize {
        self.v[c]
    }

    /// `â` for a 1-based position `a`.
    pub fn hat(&self, a: usize) -> usize {
        self.hat[a - 1]
    }

    /// Index (1-based) of the block containing position `a`.
    pub fn block_of(&self, a: usize) -> usize {
        self.v.partition_point(|&end| end < a)
    }

    /// `I! = m_1! ... m_l!`.
    pub fn factorial(&self) -> u64 {
        self.m.iter().map(|&m| factorial(m)).product()
    }
}

pub(crate) fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

impl SubsetIndex {
    /// Builds a subset from its elements in any order.
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(AlgebraError::InvalidSubset(format!(
                "element {} repeated",
                w[0]
            )));
        }
        if let Some(&bad) = elements.iter().find(|&&i| i == 0 || i > n) {
            return Err(AlgebraError::InvalidPosition { position: bad, n });
        }
        Ok(Self { n, elements })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            elements: Vec::new(),
        }
    }

    /// `{1..k}`: the smallest subset, the point Schubert cell.
    pub fn bottom(k: usize, n: usize) -> Self {
        Self {
            n,
            elements: (1..=k).collect(),
        }
    }

    /// `{n-k+1..n}`: the top cell.
    pub fn top(k: usize, n: usize) -> Self {
        Self {
            n,
            elements: (n - k + 1..=n).collect(),
        }
    }

    /// Parses `{2,4}`, `2,4` or `{}` for a given ambient size.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() {
            return Ok(Self::empty(n));
        }
        let elements = body
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| AlgebraError::InvalidSubset(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, elements)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// `i_a` for a 1-based position `a`.
    pub fn at(&self, a: usize) -> usize {
        self.elements[a - 1]
    }

    pub fn contains(&self, u: usize) -> bool {
        self.elements.binary_search(&u).is_ok()
    }

    /// `{1..n} \ I`.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.n).filter(|u| !self.contains(*u)).collect()
    }

    pub fn blocks(&self) -> BlockDecomposition {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &i in &self.elements {
            match blocks.last_mut() {
                Some(b) if *b.last().unwrap() + 1 == i => b.push(i),
                _ => blocks.push(vec![i]),
            }
        }
        let m: Vec<usize> = blocks.iter().map(Vec::len).collect();
        let mut v = vec![0];
        for &mc in &m {
            v.push(v.last().unwrap() + mc);
        }
        let mut hat = Vec::with_capacity(self.k());
        for c in 1..v.len() {
            hat.extend(std::iter::repeat_n(v[c], m[c - 1]));
        }
        BlockDecomposition { blocks, m, v, hat }
    }

    /// `ℓ(I) = Σ (i_a - a)`, the dimension of the Schubert variety.
    pub fn length(&self) -> usize {
        self.elements
            .iter()
            .enumerate()
            .map(|(a, &i)| i - (a + 1))
            .sum()
    }

    /// `k(n-k) - ℓ(I)`.
    pub fn codim(&self) -> usize {
        self.k() * (self.n - self.k()) - self.length()
    }

    /// `(-1)^codim`.
    pub fn sgn(&self) -> i64 {
        if self.codim().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The same sign computed from the block data:
    /// `(-1)^(Σ_a (n - i_â) - Σ_{c<d} m_c m_d)`.
    pub fn sgn_from_blocks(&self) -> i64 {
        let b = self.blocks();
        let first: i64 = (1..=self.k())
            .map(|a| (self.n - self.at(b.hat(a))) as i64)
            .sum();
        let mut second: i64 = 0;
        for c in 0..b.len() {
            for d in c + 1..b.len() {
                second += (b.m[c] * b.m[d]) as i64;
            }
        }
        if (first - second).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `Ǐ = {n+1-i : i ∈ I}`.
    pub fn dual(&self) -> Self {
        let mut elements: Vec<usize> = self.elements.iter().map(|&i| self.n + 1 - i).collect();
        elements.reverse();
        Self {
            n: self.n,
            elements,
        }
    }

    /// `self ≤ other` in the dominance order: `j_a ≤ i_a` for all `a`.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool> {
        self.check_comparable(other)?;
        Ok(self
            .elements
            .iter()
            .zip(&other.elements)
            .all(|(j, i)| j <= i))
    }

    /// Like [`dominance_leq`](Self::dominance_leq) for subsets already known to be comparable.
    pub fn leq(&self, other: &Self) -> bool {
        self.elements.len() == other.elements.len()
            && self
                .elements
                .iter()
                .zip(&other.elements)
                .all(|(j, i)| j <= i)
    }

    fn check_comparable(&self, other: &Self) -> Result<()> {
        if self.k() != other.k() || self.n != other.n {
            return Err(AlgebraError::SubsetMismatch {
                left: self.to_string(),
                right: other.to_string(),
                reason: format!(
                    "sizes (k={}, n={}) and (k={}, n={})",
                    self.k(),
                    self.n,
                    other.k(),
                    other.n
                ),
            });
        }
        Ok(())
    }

    /// `I^{(a,a+1)}`: the image of `I` under the transposition of `a` and `a+1`.
    pub fn swapped(&self, a: usize) -> Self {
        let swap = |u: usize| {
            if u == a {
                a + 1
            } else if u == a + 1 {
                a
            } else {
                u
            }
        };
        let mut elements: Vec<usize> = self.elements.iter().map(|&u| swap(u)).collect();
        elements.sort_unstable();
        Self {
            n: self.n,
            elements,
        }
    }

    /// Image under a permutation of `{1..n}` given as `sigma[u-1] = σ(u)`.
    pub fn permuted(&self, sigma: &[usize]) -> Self {
        let mut elements: Vec<usize> = self.elements.iter().map(|&u| sigma[u - 1]).collect();
        elements.sort_unstable();
        Self {
            n: self.n,
            elements,
        }
    }

    /// Whether the fixed point `J` is a singular point of the Schubert variety
    /// `S_I`: `j_{v(c)+1} ≤ i_{v(c)}` for some block boundary `c`.
    pub fn is_singular_fixed_point(&self, j: &Self) -> Result<bool> {
        if !j.dominance_leq(self)? {
            return Err(AlgebraError::SubsetMismatch {
                left: j.to_string(),
                right: self.to_string(),
                reason: "the fixed point must lie on the Schubert variety".into(),
            });
        }
        let b = self.blocks();
        Ok((1..b.len()).any(|c| j.at(b.v(c) + 1) <= self.at(b.v(c))))
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (a, i) in self.elements.iter().enumerate() {
            if a > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Orders first by size, then by `ℓ`, then lexicographically, so that within
/// one `(k, n)` it agrees with [`linear_order`].
impl Ord for SubsetIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.k().cmp(&other.k()))
            .then(self.length().cmp(&other.length()))
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl PartialOrd for SubsetIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A subset string whose ambient size is not yet known, as given on a command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSpec(pub Vec<usize>);

impl FromStr for SubsetSpec {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let max = usize::MAX - 1;
        SubsetIndex::parse(max, s).map(|i| SubsetSpec(i.elements))
    }
}

/// All k-subsets of `{1..n}` in lexicographic order.
pub fn subsets(k: usize, n: usize) -> Vec<SubsetIndex> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(SubsetIndex {
            n,
            elements: cur.clone(),
        });
        // Advance to the next combination.
        let mut a = k;
        while a > 0 && cur[a - 1] == n - k + a {
            a -= 1;
        }
        if a == 0 {
            return out;
        }
        cur[a - 1] += 1;
        for b in a..k {
            cur[b] = cur[b - 1] + 1;
        }
    }
}

/// All k-subsets sorted by `ℓ` ascending, ties broken lexicographically; a
/// linear extension of the dominance order.
pub fn linear_order(k: usize, n: usize) -> Vec<SubsetIndex> {
    let mut all = subsets(k, n);
    all.sort();
    all
}

/// All permutations of `0..k` in lexicographic order, with their signs.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push((p.clone(), permutation_sign(&p)));
        // Next lexicographic permutation.
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Sign of a permutation of `0..len`.
pub fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> SubsetIndex {
        SubsetIndex::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn blocks_of_two_runs() {
        let b = s(7, &[1, 2, 4, 5, 6]).blocks();
        assert_eq!(b.m(), &[2, 3]);
        assert_eq!((b.v(1), b.v(2)), (2, 5));
        assert_eq!(b.factorial(), 12);
        assert_eq!(
            (1..=5).map(|a| b.hat(a)).collect::<Vec<_>>(),
            vec![2, 2, 5, 5, 5]
        );
        assert_eq!(
            (1..=5).map(|a| b.block_of(a)).collect::<Vec<_>>(),
            vec![1, 1, 2, 2, 2]
        );
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(SubsetIndex::parse(4, "{2,4}").unwrap(), s(4, &[2, 4]));
        assert_eq!(
            SubsetIndex::parse(4, " 4, 2 ").unwrap().to_string(),
            "{2,4}"
        );
        assert_eq!(SubsetIndex::parse(4, "{}").unwrap().k(), 0);
        assert!(SubsetIndex::parse(4, "{2,2}").is_err());
        assert!(SubsetIndex::parse(4, "{5}").is_err());
        assert!(SubsetIndex::parse(4, "{a}").is_err());
    }

    #[test]
    fn subsets_enumerate_binomials() {
        assert_eq!(subsets(0, 3).len(), 1);
        assert_eq!(subsets(2, 4).len(), 6);
        assert_eq!(subsets(3, 6).len(), 20);
        assert_eq!(subsets(4, 4).len(), 1);
    }

    #[test]
    fn permutations_cover_symmetric_group() {
        let ps = permutations(4);
        assert_eq!(ps.len(), 24);
        assert_eq!(ps.iter().map(|(_, s)| s).sum::<i64>(), 0);
        assert_eq!(permutations(0).len(), 1);
    }

    #[test]
    fn swapped_and_permuted() {
        assert_eq!(s(3, &[1]).swapped(1), s(3, &[2]));
        assert_eq!(s(3, &[1, 2]).swapped(1), s(3, &[1, 2]));
        assert_eq!(s(4, &[1, 3]).permuted(&[4, 3, 2, 1]), s(4, &[2, 4]));
    }
}
