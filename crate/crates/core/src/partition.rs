//! Integer partitions, conjugacy-class combinatorics and Young-diagram
//! geometry.
//!
//! Canonical order: partitions are ordered by weight, and within a weight in
//! reverse-lexicographic order, so `(3) < (2,1) < (1,1,1)`. Every listing in
//! this crate (and every serialized table) uses this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::PartitionParse {
                input: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::PartitionParse {
                input: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The identity cycle type `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-row partition `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `weight - length`, the number of transpositions needed to build a
    /// permutation of this cycle type.
    pub fn colength(&self) -> usize {
        self.weight() - self.length()
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if self.colength().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity_class(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Multiplicities `j_i` of each part size `i`, indexed from 0 (unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `prod_i i^{j_i} j_i!`.
    pub fn stabilizer_order(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigInt::one(), |acc, (i, &j)| {
                acc * BigInt::from(i).pow(j as u32) * factorial(j)
            })
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.weight()) / self.stabilizer_order()
    }

    /// Contents `j - i` of the cells `(i, j)` (1-based row `i`, column `j`),
    /// row by row.
    pub fn contents(&self) -> Vec<i64> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| col as i64 - row as i64))
            .collect()
    }

    /// Dimension of the irreducible representation, from the determinant
    /// `n! det(1/(lambda_i - i + j)!)`.
    pub fn dimension(&self) -> BigInt {
        let len = self.length();
        if len == 0 {
            return BigInt::one();
        }
        let matrix: Vec<Vec<BigRational>> = (0..len)
            .map(|i| {
                (0..len)
                    .map(|j| {
                        let arg = self.parts[i] as i64 - i as i64 + j as i64;
                        if arg < 0 {
                            BigRational::zero()
                        } else {
                            BigRational::new(BigInt::one(), factorial(arg as usize))
                        }
                    })
                    .collect()
            })
            .collect();
        let d = determinant(matrix) * BigRational::from_integer(factorial(self.weight()));
        debug_assert!(d.is_integer());
        d.to_integer()
    }

    /// Product of hook lengths, computed as `n! / dimension`.
    pub fn hook_product(&self) -> BigInt {
        factorial(self.weight()) / self.dimension()
    }
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the textual form `"3,1,1"`; the empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::PartitionParse {
                        input: s.to_string(),
                        reason: format!("bad part {tok:?}: {e}"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| Error::PartitionParse {
            input: s.to_string(),
            reason: "parts must be positive and weakly decreasing".into(),
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a `;`-separated list of partitions, e.g. `"3;2,1"`.
pub fn parse_profile_list(s: &str) -> Result<Vec<Partition>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(str::parse).collect()
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn fill(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            fill(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` whose colength is exactly `c`.
pub fn partitions_with_colength(n: usize, c: usize) -> Result<Vec<Partition>> {
    if n == 0 || c >= n {
        return Err(Error::ColengthOutOfRange { n, colength: c });
    }
    Ok(partitions_of(n)
        .into_iter()
        .filter(|p| p.colength() == c)
        .collect())
}

/// Branching data `(mu, nu, c, d)`: profiles over 0 and infinity plus the
/// colengths of the strict points and the summed colengths of each colour.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RamificationData {
    pub mu: Partition,
    pub nu: Partition,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
}

impl RamificationData {
    pub fn new(mu: Partition, nu: Partition, c: Vec<usize>, d: Vec<usize>) -> Result<Self> {
        check_same_weight(&mu, &nu)?;
        let n = mu.weight();
        if let Some(&bad) = c.iter().find(|&&ca| n == 0 || ca > n - 1) {
            return Err(Error::ColengthOutOfRange { n, colength: bad });
        }
        Ok(RamificationData { mu, nu, c, d })
    }

    pub fn n(&self) -> usize {
        self.mu.weight()
    }

    /// `2g = 2 + sum c + sum d - l(mu) - l(nu)`. Odd values mean a
    /// half-integer genus.
    pub fn double_genus(&self) -> i64 {
        2 + self.c.iter().sum::<usize>() as i64 + self.d.iter().sum::<usize>() as i64
            - self.mu.length() as i64
            - self.nu.length() as i64
    }
}

pub(crate) fn check_same_weight(a: &Partition, b: &Partition) -> Result<()> {
    if a.weight() != b.weight() {
        return Err(Error::WeightMismatch {
            left: format!("{a:?}"),
            left_weight: a.weight(),
            right: format!("{b:?}"),
            right_weight: b.weight(),
        });
    }
    Ok(())
}
