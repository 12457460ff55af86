//! Partitions, signed straightening of integer index vectors, conjugates,
//! and Frobenius coordinates.
//!
//! Index vectors are finite integer sequences read as infinite sequences
//! with a zero tail. Straightening rewrites an arbitrary vector into
//! `sign * partition` form (or zero), which is what turns determinant rows
//! and operator images back into the canonical basis.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Validates weak decrease and nonnegativity; trailing zeros are dropped.
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {parts:?}"
                )));
            }
        }
        if parts.last().is_some_and(|&p| p < 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be nonnegative, got {parts:?}"
            )));
        }
        Ok(Self::from_decreasing(parts))
    }

    /// Caller guarantees weak decrease and nonnegativity.
    pub(crate) fn from_decreasing(mut parts: Vec<i64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// 1-indexed part with zero extension: `part(t) = 0` for `t > len`.
    pub fn part(&self, t: usize) -> i64 {
        assert!(t >= 1, "parts are 1-indexed");
        self.parts.get(t - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as i64)
            .collect();
        Partition::from_decreasing(parts)
    }

    /// Number of diagonal cells, i.e. the largest `r` with `part(r) >= r`.
    pub fn diagonal_len(&self) -> usize {
        (1..=self.parts.len())
            .take_while(|&i| self.part(i) >= i as i64)
            .count()
    }

    /// Frobenius coordinates: arm and leg lengths of the diagonal cells.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let r = self.diagonal_len();
        FrobeniusCoords {
            arms: (1..=r).map(|i| self.part(i) - i as i64).collect(),
            legs: (1..=r).map(|i| conj.part(i) - i as i64).collect(),
        }
    }

    /// Rebuild the partition whose diagonal hooks have the given arms and
    /// legs. Both lists must be strictly decreasing and nonnegative, with
    /// equal lengths.
    pub fn from_frobenius(coords: &FrobeniusCoords) -> Result<Partition> {
        let FrobeniusCoords { arms, legs } = coords;
        if arms.len() != legs.len() {
            return Err(Error::InvalidPartition(format!(
                "arm/leg lists differ in length: {} vs {}",
                arms.len(),
                legs.len()
            )));
        }
        for list in [arms, legs] {
            if list.iter().any(|&x| x < 0) {
                return Err(Error::InvalidPartition(format!(
                    "negative Frobenius coordinate in {list:?}"
                )));
            }
            if list.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidPartition(format!(
                    "Frobenius coordinates must strictly decrease: {list:?}"
                )));
            }
        }
        let r = arms.len() as i64;
        let mut parts: Vec<i64> = (1..=r).map(|i| arms[i as usize - 1] + i).collect();
        // Rows below the diagonal block: row i holds a cell in column j <= r
        // exactly when that column's leg reaches it.
        let mut i = r + 1;
        loop {
            let row = (1..=r).filter(|&j| legs[j as usize - 1] + j >= i).count() as i64;
            if row == 0 {
                break;
            }
            parts.push(row);
            i += 1;
        }
        let out = Partition::new(parts)?;
        debug_assert_eq!(&out.frobenius(), coords);
        Ok(out)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition renders as the empty
    /// string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_int_vector(s)?)
    }
}

/// Parse a comma-separated integer vector; the empty string is the empty
/// vector.
pub fn parse_int_vector(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer entry {tok:?} in {s:?}")))
        })
        .collect()
}

/// Diagonal hook data `(arms | legs)` of a partition.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FrobeniusCoords {
    pub arms: Vec<i64>,
    pub legs: Vec<i64>,
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, xs: &[i64]| -> fmt::Result {
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            Ok(())
        };
        f.write_str("(")?;
        side(f, &self.arms)?;
        f.write_str("|")?;
        side(f, &self.legs)?;
        f.write_str(")")
    }
}

/// `sign * shape` with `sign` in {-1, 0, +1}; the shape is empty when the
/// sign is 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPartition {
    pub sign: i8,
    pub shape: Partition,
}

impl SignedPartition {
    pub fn zero() -> Self {
        SignedPartition {
            sign: 0,
            shape: Partition::empty(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

/// Straighten an integer index vector into signed partition form.
///
/// With `mu_i = v_i - i` (1-indexed), the result is zero when two `mu`
/// values collide or some `mu_i <= -(len+1)` (a collision with the implicit
/// zero tail). Otherwise sorting `mu` strictly descending by a permutation
/// `sigma` gives `shape_i = mu_sigma(i) + i` and `sign = sgn(sigma)`.
pub fn straighten(v: &[i64]) -> SignedPartition {
    let l = v.len() as i64;
    let mut mu: Vec<i64> = v
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (i as i64 + 1))
        .collect();
    if mu.iter().any(|&m| m <= -(l + 1)) {
        return SignedPartition::zero();
    }
    let mut sign = 1i8;
    for i in 1..mu.len() {
        let mut j = i;
        while j > 0 && mu[j] > mu[j - 1] {
            mu.swap(j, j - 1);
            sign = -sign;
            j -= 1;
        }
    }
    if mu.windows(2).any(|w| w[0] == w[1]) {
        return SignedPartition::zero();
    }
    let parts: Vec<i64> = mu
        .iter()
        .enumerate()
        .map(|(i, &m)| m + i as i64 + 1)
        .collect();
    SignedPartition {
        sign,
        shape: Partition::from_decreasing(parts),
    }
}

/// All partitions of weight at most `max_weight`, ordered by weight and then
/// lexicographically by parts.
pub fn partitions_up_to_weight(max_weight: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 0..=max_weight.max(0) {
        let mut batch = Vec::new();
        let mut current = Vec::new();
        collect_partitions(w, w, &mut current, &mut batch);
        batch.sort();
        out.extend(batch);
    }
    out
}

fn collect_partitions(
    remaining: i64,
    max_part: i64,
    current: &mut Vec<i64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_decreasing(current.clone()));
        return;
    }
    let cap = remaining.min(max_part);
    for p in (1..=cap).rev() {
        current.push(p);
        collect_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert_eq!(pt(&[3, 2, 2, 0, 0]).parts(), &[3, 2, 2]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, -1]).is_err());
        assert!(pt(&[]).is_empty());
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "3,2,2,2".parse().unwrap();
        assert_eq!(p, pt(&[3, 2, 2, 2]));
        assert_eq!(p.to_string(), "3,2,2,2");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("2,3".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(pt(&[3, 2, 2, 2]).conjugate(), pt(&[4, 4, 1]));
        assert_eq!(pt(&[4, 4, 1]).conjugate(), pt(&[3, 2, 2, 2]));
        assert_eq!(pt(&[1, 1, 1]).conjugate(), pt(&[3]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_an_involution() {
        for p in partitions_up_to_weight(9) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    fn frobenius_example() {
        let p = pt(&[3, 2, 2, 2]);
        let f = p.frobenius();
        assert_eq!(f.arms, vec![2, 0]);
        assert_eq!(f.legs, vec![3, 2]);
        assert_eq!(f.to_string(), "(2 0|3 2)");
        assert_eq!(Partition::from_frobenius(&f).unwrap(), p);
    }

    #[test]
    fn frobenius_hooks() {
        // (m+1, 1^n) has the single diagonal hook (m | n).
        for m in 0..5i64 {
            for n in 0..5i64 {
                let mut parts = vec![m + 1];
                parts.extend(std::iter::repeat_n(1, n as usize));
                let f = pt(&parts).frobenius();
                assert_eq!((f.arms.clone(), f.legs.clone()), (vec![m], vec![n]));
            }
        }
    }

    #[test]
    fn frobenius_roundtrip_and_conjugation_swap() {
        for p in partitions_up_to_weight(9) {
            let f = p.frobenius();
            assert_eq!(Partition::from_frobenius(&f).unwrap(), p);
            let g = p.conjugate().frobenius();
            assert_eq!(g.arms, f.legs);
            assert_eq!(g.legs, f.arms);
        }
    }

    #[test]
    fn from_frobenius_rejects_bad_data() {
        let bad = FrobeniusCoords {
            arms: vec![2, 2],
            legs: vec![1, 0],
        };
        assert!(Partition::from_frobenius(&bad).is_err());
        let mismatched = FrobeniusCoords {
            arms: vec![2],
            legs: vec![1, 0],
        };
        assert!(Partition::from_frobenius(&mismatched).is_err());
    }

    #[test]
    fn straighten_fixed_cases() {
        // Already a partition: identity with sign +1.
        let s = straighten(&[2, 1]);
        assert_eq!((s.sign, s.shape.clone()), (1, pt(&[2, 1])));
        // One exchange: (0,2) -> -(1,1).
        let s = straighten(&[0, 2]);
        assert_eq!((s.sign, s.shape.clone()), (-1, pt(&[1, 1])));
        // Repeated shifted entries vanish.
        assert!(straighten(&[1, 2]).is_zero());
        // Collision with the zero tail.
        assert!(straighten(&[-2]).is_zero());
        // Trailing explicit zeros are harmless.
        let s = straighten(&[2, 1, 0]);
        assert_eq!((s.sign, s.shape.clone()), (1, pt(&[2, 1])));
        assert_eq!(straighten(&[]).sign, 1);
    }

    #[test]
    fn straighten_negative_entries() {
        // (-1, 2): mu = (-2, 0) -> sorted (0, -2), one swap, shape (1, 0).
        let s = straighten(&[-1, 2]);
        assert_eq!((s.sign, s.shape.clone()), (-1, pt(&[1])));
        // (-1, 3, 1): mu = (-2, 1, -2) collides.
        assert!(straighten(&[-1, 3, 1]).is_zero());
    }

    #[test]
    fn partition_enumeration() {
        let all = partitions_up_to_weight(5);
        assert_eq!(all.len(), 1 + 1 + 2 + 3 + 5 + 7);
        assert_eq!(all[0], Partition::empty());
        // Weight 4 block, lexicographic: 1111 < 211 < 22 < 31 < 4.
        let weight4: Vec<String> = all
            .iter()
            .filter(|p| p.weight() == 4)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(weight4, vec!["1,1,1,1", "2,1,1", "2,2", "3,1", "4"]);
    }

    #[test]
    fn part_access_is_zero_extended() {
        let p = pt(&[3, 1]);
        assert_eq!(p.part(1), 3);
        assert_eq!(p.part(2), 1);
        assert_eq!(p.part(3), 0);
        assert_eq!(p.part(100), 0);
    }
}
